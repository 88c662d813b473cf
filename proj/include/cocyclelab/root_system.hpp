#pragma once

// Classical root systems (and products of them) in the standard Bourbaki
// orthonormal-ambient coordinates, all entries exact rationals.

#include <string>
#include <vector>

#include "cocyclelab/rational_linalg.hpp"

namespace cocyclelab {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One simple factor, e.g. B3. Rank constraints are enforced at construction:
/// A/B/C >= 1, D >= 2, E in {6,7,8}, F = 4, G = 2.
struct SimpleType {
  Family family;
  int rank;

  SimpleType(Family f, int r);

  std::string label() const;  // "B3"
  int positive_root_count() const;
  int ambient_dim() const;
};

/// Parse "A2", "b3", "B2,A2" (case-insensitive, comma-separated product).
std::vector<SimpleType> parse_type_spec(const std::string& spec);
std::string format_type_spec(const std::vector<SimpleType>& factors);

/// The reflection s_root(v) = v - 2<v,root>/<root,root> root, exact.
RatVec reflect(const RatVec& root, const RatVec& v);

struct RootSystem {
  std::vector<SimpleType> factors;
  int ambient_dim = 0;
  int rank = 0;                        // = number of simple roots
  std::vector<RatVec> simple_roots;    // factor blocks, Bourbaki order
  std::vector<RatVec> all_roots;       // closed under simple reflections, lex-sorted
  std::vector<RatVec> positive_roots;  // lex-sorted

  std::string label() const { return format_type_spec(factors); }

  /// Coordinates of v in the simple-root basis (v must lie in their span).
  RatVec simple_root_coords(const RatVec& v) const;

  bool is_root(const RatVec& v) const;
  bool is_positive_root(const RatVec& v) const;

  /// Half-sum of the positive roots.
  RatVec half_sum_positive() const;

 private:
  friend RootSystem build_root_system(const std::vector<SimpleType>&);
  RatMat coord_map_;  // (S^T S)^{-1} S^T, maps ambient -> simple-root coords
};

/// Build the root system of a product of simple types. The full root set is
/// generated by breadth-first closure of the simple roots under the simple
/// reflections.
RootSystem build_root_system(const std::vector<SimpleType>& factors);

inline RootSystem build_root_system(const std::string& spec) {
  return build_root_system(parse_type_spec(spec));
}

inline int positive_root_count(const RootSystem& rs) {
  return static_cast<int>(rs.positive_roots.size());
}

}  // namespace cocyclelab
