import math

import pytest

import cocyclelab


def test_longest_element_g2():
    rep = cocyclelab.longest_element("G2")
    assert rep.word_length == 6
    assert rep.minus_one is True
    assert (rep.s, rep.t) == (0, 2)
    assert rep.action == [["-1", "0"], ["0", "-1"]]


def test_longest_element_a3():
    rep = cocyclelab.longest_element("A3")
    assert rep.word_length == 6
    assert rep.minus_one is False
    assert rep.rank == 3


def test_root_system_counts():
    rs = cocyclelab.build_root_system("B2,A2")
    assert rs.rank == 4
    assert rs.positive_root_count == 4 + 3


def test_invalid_type_raises():
    with pytest.raises(ValueError):
        cocyclelab.build_root_system("E9")


def test_table_rank2_product():
    t = cocyclelab.table("A1,A1")
    assert t["dims_HA_w0"] == [1, 0, 1, 0, 0]
    assert t["dim_NH"] == [0, 0, 0, 1, 1]
    assert t["dim_NH_alt"][3] == 1
    assert t["dim_NH_nalt"][4] == 1


def test_invariant_dims_match_table():
    d = cocyclelab.invariant_dims(1, 1, 4)
    assert d["dims_HA_w0"] == [1, 1, 0, 0, 0]
    kt = cocyclelab.kernel_table(1, 1, 4)
    assert kt["dim_NH_alt"][2] == 1
    assert kt["dim_NH_nalt"][3] == 1


def test_spectral_pages_tokens():
    pages = cocyclelab.spectral_pages(0, 2, 3, 3)
    by_label = {p["label"]: p for p in pages}
    assert by_label["nalt_E1"]["rows"][2][2] == 1
    assert by_label["alt_E1"]["rows"][1][0] == "H^1(G)"
    assert by_label["alt_E2"]["rows"][1][2] == 0


def test_cross_ratio_reference_value():
    b = cocyclelab.cross_ratio([0.0, 0.0], [1.0, 0.0], [2.0, 0.0], None)
    assert b == pytest.approx(2.0, rel=1e-14)


def test_c3_regression_constant():
    xs = [[0.0, 0.0], [1.0, 0.0], [2.0, 0.0], None]
    ys = [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [3.0, 0.0, 0.0], None]
    assert cocyclelab.c3(xs, ys) == pytest.approx(math.log(2.0) ** 2, rel=1e-13)


def test_verify_smoke():
    rep = cocyclelab.verify("cocycle_c3", (3, 4), trials=50, tol=1e-8, seed=7)
    assert rep.pass_ is True
    assert rep.trials == 50

    failed = cocyclelab.verify("cocycle_c3", (3, 4), trials=10, tol=1e-300, seed=7)
    assert failed.pass_ is False


def test_check_names_complete():
    names = set(cocyclelab.check_names())
    assert {"cocycle_c3", "cocycle_c4", "alt_c3_fixed", "alt_c4_zero",
            "invariance_c3", "invariance_c4", "crossratio_invariance",
            "reversal_c4"} == names
