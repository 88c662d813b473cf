#pragma once

// The boundary R^{d} U {infinity} of hyperbolic (d+1)-space, the classical
// Moebius generators acting on it, the positive cross-ratio, and seeded
// samplers for generic configurations.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cocyclelab/errors.hpp"

namespace cocyclelab {

class BoundaryPoint {
 public:
  static BoundaryPoint infinity() { return BoundaryPoint(); }
  static BoundaryPoint finite(std::vector<double> coords);

  bool is_infinity() const { return !coords_.has_value(); }
  const std::vector<double>& coords() const;
  int dim() const { return is_infinity() ? -1 : static_cast<int>(coords_->size()); }

  bool operator==(const BoundaryPoint&) const = default;

 private:
  BoundaryPoint() = default;
  explicit BoundaryPoint(std::vector<double> c) : coords_(std::move(c)) {}
  std::optional<std::vector<double>> coords_;
};

/// Euclidean distance between finite points; callers handle infinity.
double distance(const BoundaryPoint& a, const BoundaryPoint& b);

/// Positive cross-ratio |x2-x0||x3-x1| / (|x2-x1||x3-x0|); every norm factor
/// with an infinite argument is replaced by 1 (each point appears once above
/// and once below the bar, so this is the infinity/infinity = 1 convention).
/// Throws DegenerateTuple if two points coincide (finite points closer than
/// min_separation count as coincident) and MultipleInfinities if more than
/// one argument is infinite.
double cross_ratio(const BoundaryPoint& x0, const BoundaryPoint& x1,
                   const BoundaryPoint& x2, const BoundaryPoint& x3,
                   double min_separation = 0.0);

struct Translate {
  std::vector<double> offset;
};
struct Dilate {
  double factor;  // > 0
};
struct Orthogonal {
  std::vector<std::vector<double>> matrix;  // Q with Q^T Q = I (1e-12)
};
struct Invert {};  // x -> x/|x|^2, exchanging 0 and infinity

using MobiusGenerator = std::variant<Translate, Dilate, Orthogonal, Invert>;

/// A word in the classical Moebius generators of the boundary action.
/// Generators are applied left to right.
class MobiusMap {
 public:
  MobiusMap(int dim, std::vector<MobiusGenerator> generators);

  int dim() const { return dim_; }
  const std::vector<MobiusGenerator>& generators() const { return gens_; }

  BoundaryPoint operator()(const BoundaryPoint& x) const;

 private:
  int dim_;
  std::vector<MobiusGenerator> gens_;
};

inline BoundaryPoint apply_mobius(const MobiusMap& m, const BoundaryPoint& x) { return m(x); }

struct ProductBoundaryPoint {
  std::vector<BoundaryPoint> components;
};

struct SamplerOptions {
  double box_half_width = 3.0;  // coordinates drawn uniformly from [-w, w]
  double max_norm = 10.0;       // finite points are resampled beyond this
  double infinity_probability = 0.1;  // chance that one point per factor is infinity
  int max_attempts = 1000;
};

/// Deterministic sampler for `count` product points whose factor components
/// live in the boundary dimensions `dims`, pairwise separated by at least
/// `separation` within each factor. Throws SamplingFailure when the
/// separation cannot be realized within the attempt budget.
std::vector<ProductBoundaryPoint> random_generic_tuple(std::uint64_t seed, int count,
                                                       const std::vector<int>& dims,
                                                       double separation,
                                                       const SamplerOptions& opts = {});

/// Deterministic random word of 3-6 generators: dilations in [0.2, 5],
/// translations with entries in [-2, 2], seeded orthogonal matrices, and
/// with probability 1/2 at least one inversion.
MobiusMap random_mobius(std::uint64_t seed, int dim);

/// Stable seed derivation for independent trials.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace cocyclelab
