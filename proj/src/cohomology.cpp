#include "cocyclelab/cohomology.hpp"

#include <algorithm>

namespace cocyclelab {

namespace {
constexpr int kMaxRank = 62;  // keeps every binomial and 2^rank in int64
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  k = std::min(k, n - k);
  // 128-bit intermediate: r*(n-k+i) can exceed int64 before the division.
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;  // exact at each step
  return static_cast<std::int64_t>(r);
}

std::vector<std::int64_t> torus_dims(int rank, int max_degree) {
  if (rank < 1) throw InvalidSignature("rank must be >= 1");
  if (max_degree < 0) throw InvalidSignature("max_degree must be >= 0");
  std::vector<std::int64_t> dims(max_degree + 1, 0);
  for (int k = 0; k <= max_degree; ++k) dims[k] = binomial(rank, k);
  return dims;
}

InvariantDims invariant_dims(Signature sig, int max_degree) {
  if (sig.s < 0 || sig.t < 0) throw InvalidSignature("negative eigenspace dimension");
  const int rank = sig.rank();
  if (rank < 1) throw InvalidSignature("rank must be >= 1");
  if (rank > kMaxRank) throw InvalidSignature("rank too large for exact 64-bit tables");
  if (max_degree < 0) throw InvalidSignature("max_degree must be >= 0");

  InvariantDims out;
  out.rank = rank;
  out.signature = sig;
  const int top = std::max(max_degree, rank);
  out.dims_HA.resize(top + 1);
  out.dims_HA_w0.resize(top + 1);
  out.dims_HA_equiv.resize(top + 1);

  for (int k = 0; k <= top; ++k) {
    out.dims_HA[k] = binomial(rank, k);
    // A wedge of k eigenvectors is fixed iff it uses an even number of the
    // t minus-eigenvectors.
    std::int64_t fixed = 0;
    std::int64_t tr = 0;  // trace of the induced action on degree k
    for (int j = 0; j <= k; ++j) {
      const std::int64_t ways = binomial(sig.t, j) * binomial(sig.s, k - j);
      if (j % 2 == 0) fixed += ways;
      tr += (j % 2 == 0 ? ways : -ways);
    }
    out.dims_HA_w0[k] = fixed;
    out.dims_HA_equiv[k] = out.dims_HA[k] - fixed;
    if (2 * fixed != out.dims_HA[k] + tr)
      throw Error("invariant dimension formulas disagree");  // internal bug
  }
  return out;
}

CohomologyTable kernel_table(const InvariantDims& inv, int max_degree) {
  if (max_degree < 0) throw InvalidSignature("max_degree must be >= 0");
  CohomologyTable t;
  t.max_degree = max_degree;
  t.dim_NH.resize(max_degree + 1, 0);
  t.dim_NH_nalt.resize(max_degree + 1, 0);
  t.dim_NH_alt.resize(max_degree + 1, 0);
  for (int p = 0; p <= max_degree; ++p) {
    t.dim_NH_nalt[p] = p >= 3 ? inv.w0_at(p - 2) : 0;
    t.dim_NH_alt[p] = p >= 2 ? inv.w0_at(p - 1) : 0;
    t.dim_NH[p] = t.dim_NH_nalt[p] + t.dim_NH_alt[p];
  }
  return t;
}

bool corollary_even_degree_check(const InvariantDims& inv) {
  // w0_at vanishes above the rank, so even p up to rank+1 covers everything.
  for (int p = 2; p <= inv.rank + 1; p += 2) {
    if (inv.w0_at(p - 1) != 0) return false;
  }
  return true;
}

namespace {

PageEntry hg_entry(int p, const std::optional<std::vector<std::int64_t>>& hg) {
  if (hg && p < static_cast<int>(hg->size())) return (*hg)[p];
  return "H^" + std::to_string(p) + "(G)";
}

}  // namespace

std::vector<SpectralPage> spectral_pages(
    const InvariantDims& inv, int max_p, int max_q,
    const std::optional<std::vector<std::int64_t>>& dims_HG) {
  if (max_p < 0 || max_q < 0) throw InvalidSignature("page extents must be >= 0");

  auto make = [&](const std::string& label) {
    SpectralPage page;
    page.label = label;
    page.max_p = max_p;
    page.max_q = max_q;
    page.entries.assign(max_p + 1, std::vector<PageEntry>(max_q + 1, std::int64_t{0}));
    return page;
  };

  SpectralPage nalt_e1 = make("nalt_E1");
  SpectralPage nalt_e2 = make("nalt_E2");
  SpectralPage alt_e1 = make("alt_E1");
  SpectralPage alt_e2 = make("alt_E2");

  for (int q = 0; q <= max_q; ++q) {
    if (q >= 2) {
      nalt_e1.entries[0][q] = "C^" + std::to_string(q);
      nalt_e2.entries[0][q] = "H^" + std::to_string(q - 1) + "_nalt";
      alt_e2.entries[0][q] = "H^" + std::to_string(q - 1) + "_alt";
    }
    alt_e1.entries[0][q] = q == 0 ? PageEntry{std::int64_t{1}} : PageEntry{"C^" + std::to_string(q)};
  }

  for (int p = 1; p <= max_p; ++p) {
    if (max_q >= 2) {
      nalt_e1.entries[p][2] = inv.w0_at(p);
      nalt_e2.entries[p][2] = inv.w0_at(p);
    }
    alt_e1.entries[p][0] = hg_entry(p, dims_HG);
    if (max_q >= 1)
      alt_e1.entries[p][1] = p < static_cast<int>(inv.dims_HA.size()) ? inv.dims_HA[p] : 0;
    if (max_q >= 2)
      alt_e1.entries[p][2] = p < static_cast<int>(inv.dims_HA_equiv.size()) ? inv.dims_HA_equiv[p] : 0;
    alt_e2.entries[p][0] = hg_entry(p, dims_HG);
    if (max_q >= 1) alt_e2.entries[p][1] = inv.w0_at(p);
  }

  return {nalt_e1, nalt_e2, alt_e1, alt_e2};
}

}  // namespace cocyclelab
