#pragma once

// Dimension bookkeeping for the cohomology of a split torus of the given
// rank, its w0-invariant part, the kernel tables NH^p (alternating and
// non-alternating parts), and the four spectral-sequence page layouts.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cocyclelab/errors.hpp"

namespace cocyclelab {

/// Eigenspace signature of the longest-element action: s = dim(+1), t = dim(-1).
struct Signature {
  int s = 0;
  int t = 0;
  int rank() const { return s + t; }
};

/// C(n, k), exact; 0 outside 0 <= k <= n.
std::int64_t binomial(int n, int k);

/// dim H^k(A) = C(rank, k) for k = 0..max_degree.
std::vector<std::int64_t> torus_dims(int rank, int max_degree);

struct InvariantDims {
  int rank = 0;
  Signature signature;
  // Indexed by degree k; entries are stored through max(max_degree, rank) so
  // every nonzero degree is always present.
  std::vector<std::int64_t> dims_HA;        // C(rank, k)
  std::vector<std::int64_t> dims_HA_w0;     // dim of the w0-fixed part of degree k
  std::vector<std::int64_t> dims_HA_equiv;  // dim of the image of (id - w0)

  std::int64_t w0_at(int k) const {
    return (k < 0 || k >= static_cast<int>(dims_HA_w0.size())) ? 0 : dims_HA_w0[k];
  }
};

/// Fixed-subspace dimensions of the exterior-power action of an involution
/// with the given signature: dims_HA_w0[k] = sum over even j of C(t,j)C(s,k-j),
/// cross-checked against the trace formula (C(r,k) + tr Lambda^k)/2.
InvariantDims invariant_dims(Signature sig, int max_degree);

struct CohomologyTable {
  int max_degree = 0;
  std::vector<std::int64_t> dim_NH;
  std::vector<std::int64_t> dim_NH_nalt;
  std::vector<std::int64_t> dim_NH_alt;
};

/// NH^p dimensions: the non-alternating part is the degree-shifted invariant
/// cohomology (zero through degree 2), the alternating part is the left term
/// of the degree-p short exact sequence (zero through degree 1).
CohomologyTable kernel_table(const InvariantDims& inv, int max_degree);

/// True iff the left SES term vanishes in every even degree p >= 2, i.e.
/// dims_HA_w0[p-1] = 0; always true when s = 0.
bool corollary_even_degree_check(const InvariantDims& inv);

/// A spectral-page entry: a dimension, or a symbolic token such as "C^3",
/// "H^2(G)", "H^2_alt", "H^2_nalt".
using PageEntry = std::variant<std::int64_t, std::string>;

struct SpectralPage {
  std::string label;  // nalt_E1 | nalt_E2 | alt_E1 | alt_E2
  int max_p = 0;
  int max_q = 0;
  std::vector<std::vector<PageEntry>> entries;  // entries[p][q]
};

/// The four page layouts. When dims_HG is given, "H^p(G)" tokens with p inside
/// the list are replaced by the supplied dimensions.
std::vector<SpectralPage> spectral_pages(
    const InvariantDims& inv, int max_p, int max_q,
    const std::optional<std::vector<std::int64_t>>& dims_HG = std::nullopt);

}  // namespace cocyclelab
