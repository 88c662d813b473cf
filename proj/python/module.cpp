#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cocyclelab/cocycles.hpp"
#include "cocyclelab/cohomology.hpp"
#include "cocyclelab/root_system.hpp"
#include "cocyclelab/weyl.hpp"

namespace py = pybind11;
using namespace cocyclelab;

namespace {

BoundaryPoint point_from_py(const py::object& obj) {
  if (obj.is_none()) return BoundaryPoint::infinity();
  return BoundaryPoint::finite(obj.cast<std::vector<double>>());
}

std::vector<ProductBoundaryPoint> tuple_from_py(const std::vector<std::vector<py::object>>& factors) {
  if (factors.empty()) throw DimensionMismatch("expected at least one factor");
  const std::size_t count = factors[0].size();
  std::vector<ProductBoundaryPoint> tuple(count);
  for (const auto& pts : factors) {
    if (pts.size() != count) throw DimensionMismatch("factors disagree on tuple length");
    for (std::size_t i = 0; i < count; ++i) tuple[i].components.push_back(point_from_py(pts[i]));
  }
  return tuple;
}

std::vector<std::vector<std::string>> action_strings(const LongestElementReport& rep) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : rep.action) {
    std::vector<std::string> r;
    for (const auto& e : row) r.push_back(to_string(e));
    rows.push_back(std::move(r));
  }
  return rows;
}

py::object page_entry_to_py(const PageEntry& e) {
  if (std::holds_alternative<std::int64_t>(e)) return py::int_(std::get<std::int64_t>(e));
  return py::str(std::get<std::string>(e));
}

py::list pages_to_py(const std::vector<SpectralPage>& pages) {
  py::list out;
  for (const auto& page : pages) {
    py::dict d;
    d["label"] = page.label;
    d["max_p"] = page.max_p;
    d["max_q"] = page.max_q;
    py::list rows;
    for (const auto& row : page.entries) {
      py::list r;
      for (const auto& e : row) r.append(page_entry_to_py(e));
      rows.append(r);
    }
    d["rows"] = rows;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(cocyclelab, m) {
  m.doc() = "Longest Weyl elements, boundary-cohomology kernel tables, and numerical "
            "verification of the explicit cross-ratio cocycles";

  py::register_exception<Error>(m, "CocycleLabError", PyExc_ValueError);

  py::class_<RootSystem>(m, "RootSystem")
      .def_property_readonly("rank", [](const RootSystem& rs) { return rs.rank; })
      .def_property_readonly("ambient_dim", [](const RootSystem& rs) { return rs.ambient_dim; })
      .def_property_readonly("label", [](const RootSystem& rs) { return rs.label(); })
      .def_property_readonly("root_count",
                             [](const RootSystem& rs) { return rs.all_roots.size(); })
      .def_property_readonly("positive_root_count",
                             [](const RootSystem& rs) { return rs.positive_roots.size(); })
      .def("__repr__",
           [](const RootSystem& rs) { return "<RootSystem " + rs.label() + ">"; });

  py::class_<LongestElementReport>(m, "LongestElementReport")
      .def_readonly("type", &LongestElementReport::type_label)
      .def_readonly("rank", &LongestElementReport::rank)
      .def_readonly("word", &LongestElementReport::word)
      .def_property_readonly("word_length",
                             [](const LongestElementReport& r) { return r.word.size(); })
      .def_property_readonly("action", &action_strings)
      .def_readonly("basis", &LongestElementReport::basis)
      .def_readonly("s", &LongestElementReport::s)
      .def_readonly("t", &LongestElementReport::t)
      .def_readonly("minus_one", &LongestElementReport::minus_one)
      .def("__repr__", [](const LongestElementReport& r) {
        return "<LongestElementReport " + r.type_label + " length=" +
               std::to_string(r.word.size()) + " signature=(" + std::to_string(r.s) + "," +
               std::to_string(r.t) + ")>";
      });

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("check_name", &VerificationReport::check_name)
      .def_readonly("trials", &VerificationReport::trials)
      .def_readonly("rejected", &VerificationReport::rejected)
      .def_readonly("max_abs_residual", &VerificationReport::max_abs_residual)
      .def_readonly("max_rel_residual", &VerificationReport::max_rel_residual)
      .def_readonly("tolerance", &VerificationReport::tolerance)
      .def_readonly("pass_", &VerificationReport::pass)
      .def_readonly("seed", &VerificationReport::seed)
      .def("__repr__", [](const VerificationReport& r) {
        return "<VerificationReport " + r.check_name + " " + (r.pass ? "PASS" : "FAIL") + ">";
      });

  m.def(
      "build_root_system", [](const std::string& spec) { return build_root_system(spec); },
      py::arg("spec"), "Build a root system from a type spec such as 'G2' or 'B2,A2'.");

  m.def(
      "longest_element",
      [](const std::string& spec) { return longest_element(build_root_system(spec)); },
      py::arg("spec"), "Longest Weyl element report for the given type spec.");

  m.def("torus_dims", &torus_dims, py::arg("rank"), py::arg("max_degree"));

  m.def(
      "invariant_dims",
      [](int s, int t, int max_degree) {
        InvariantDims inv = invariant_dims({s, t}, max_degree);
        py::dict d;
        d["rank"] = inv.rank;
        d["s"] = inv.signature.s;
        d["t"] = inv.signature.t;
        d["dims_HA"] = inv.dims_HA;
        d["dims_HA_w0"] = inv.dims_HA_w0;
        d["dims_HA_equiv"] = inv.dims_HA_equiv;
        return d;
      },
      py::arg("s"), py::arg("t"), py::arg("max_degree"));

  m.def(
      "kernel_table",
      [](int s, int t, int max_degree) {
        CohomologyTable table = kernel_table(invariant_dims({s, t}, max_degree), max_degree);
        py::dict d;
        d["max_degree"] = table.max_degree;
        d["dim_NH"] = table.dim_NH;
        d["dim_NH_nalt"] = table.dim_NH_nalt;
        d["dim_NH_alt"] = table.dim_NH_alt;
        return d;
      },
      py::arg("s"), py::arg("t"), py::arg("max_degree"));

  m.def(
      "table",
      [](const std::string& factors, int max_degree) {
        RootSystem rs = build_root_system(factors);
        LongestElementReport w0 = longest_element(rs);
        const int top = max_degree >= 0 ? max_degree : rs.rank + 2;
        InvariantDims inv = invariant_dims({w0.s, w0.t}, top);
        CohomologyTable table = kernel_table(inv, top);
        py::dict d;
        d["type"] = rs.label();
        d["rank"] = rs.rank;
        d["s"] = w0.s;
        d["t"] = w0.t;
        d["dims_HA_w0"] = std::vector<std::int64_t>(inv.dims_HA_w0.begin(),
                                                    inv.dims_HA_w0.begin() + top + 1);
        d["dim_NH"] = table.dim_NH;
        d["dim_NH_nalt"] = table.dim_NH_nalt;
        d["dim_NH_alt"] = table.dim_NH_alt;
        return d;
      },
      py::arg("factors"), py::arg("max_degree") = -1,
      "Kernel dimension table for a type spec, driven by the computed w0 signature.");

  m.def(
      "corollary_even_degree_check",
      [](int s, int t) { return corollary_even_degree_check(invariant_dims({s, t}, s + t + 2)); },
      py::arg("s"), py::arg("t"));

  m.def(
      "spectral_pages",
      [](int s, int t, int max_p, int max_q,
         const std::optional<std::vector<std::int64_t>>& hg) {
        return pages_to_py(spectral_pages(invariant_dims({s, t}, max_p), max_p, max_q, hg));
      },
      py::arg("s"), py::arg("t"), py::arg("max_p"), py::arg("max_q"),
      py::arg("hg") = std::nullopt);

  m.def(
      "cross_ratio",
      [](const py::object& x0, const py::object& x1, const py::object& x2, const py::object& x3) {
        return cross_ratio(point_from_py(x0), point_from_py(x1), point_from_py(x2),
                           point_from_py(x3));
      },
      py::arg("x0"), py::arg("x1"), py::arg("x2"), py::arg("x3"),
      "Positive cross-ratio on the boundary; pass None for the point at infinity.");

  m.def(
      "c3",
      [](const std::vector<py::object>& xs, const std::vector<py::object>& ys) {
        return c3(tuple_from_py({xs, ys}));
      },
      py::arg("xs"), py::arg("ys"),
      "Degree-3 alternating cocycle on a 4-tuple given per-factor point lists.");

  m.def(
      "c4",
      [](const std::vector<py::object>& xs, const std::vector<py::object>& ys) {
        return c4(tuple_from_py({xs, ys}));
      },
      py::arg("xs"), py::arg("ys"),
      "Degree-4 non-alternating cocycle on a 5-tuple given per-factor point lists.");

  m.def(
      "verify",
      [](const std::string& check, std::pair<int, int> dims, long long trials, double tol,
         std::uint64_t seed) { return verify(check, dims, trials, tol, seed); },
      py::arg("check"), py::arg("dims"), py::arg("trials") = 1000, py::arg("tol") = 1e-8,
      py::arg("seed") = 42, "Run a seeded Monte-Carlo verification check.");

  m.def("check_names", &all_check_names);
}
