#include "cocyclelab/boundary.hpp"

#include <cmath>
#include <random>

namespace cocyclelab {

BoundaryPoint BoundaryPoint::finite(std::vector<double> coords) {
  for (double c : coords)
    if (!std::isfinite(c)) throw Error("finite boundary point with non-finite coordinate");
  return BoundaryPoint(std::move(coords));
}

const std::vector<double>& BoundaryPoint::coords() const {
  if (is_infinity()) throw Error("coords() on the point at infinity");
  return *coords_;
}

double distance(const BoundaryPoint& a, const BoundaryPoint& b) {
  const auto& u = a.coords();
  const auto& v = b.coords();
  if (u.size() != v.size()) throw DimensionMismatch("boundary points of different dimension");
  double s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] - v[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double cross_ratio(const BoundaryPoint& x0, const BoundaryPoint& x1,
                   const BoundaryPoint& x2, const BoundaryPoint& x3,
                   double min_separation) {
  const BoundaryPoint* pts[4] = {&x0, &x1, &x2, &x3};
  int infinities = 0;
  for (const auto* p : pts)
    if (p->is_infinity()) ++infinities;
  if (infinities > 1) throw MultipleInfinities("cross_ratio: more than one point at infinity");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (pts[i]->is_infinity() || pts[j]->is_infinity()) continue;
      if (distance(*pts[i], *pts[j]) <= min_separation)
        throw DegenerateTuple("cross_ratio: coincident points");
    }

  auto factor = [&](const BoundaryPoint& a, const BoundaryPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return 1.0;
    return distance(a, b);
  };
  const double num = factor(x2, x0) * factor(x3, x1);
  const double den = factor(x2, x1) * factor(x3, x0);
  if (den == 0.0 || num == 0.0) throw DegenerateTuple("cross_ratio: coincident points");
  return num / den;
}

namespace {

void validate_generator(const MobiusGenerator& g, int dim) {
  if (const auto* t = std::get_if<Translate>(&g)) {
    if (static_cast<int>(t->offset.size()) != dim)
      throw DimensionMismatch("Translate offset has wrong dimension");
  } else if (const auto* d = std::get_if<Dilate>(&g)) {
    if (!(d->factor > 0)) throw Error("Dilate factor must be positive");
  } else if (const auto* o = std::get_if<Orthogonal>(&g)) {
    const auto& q = o->matrix;
    if (static_cast<int>(q.size()) != dim)
      throw DimensionMismatch("Orthogonal matrix has wrong dimension");
    double residual = 0;
    for (int i = 0; i < dim; ++i) {
      if (static_cast<int>(q[i].size()) != dim)
        throw DimensionMismatch("Orthogonal matrix is not square");
      for (int j = 0; j < dim; ++j) {
        double s = 0;
        for (int k = 0; k < dim; ++k) s += q[k][i] * q[k][j];
        residual = std::max(residual, std::abs(s - (i == j ? 1.0 : 0.0)));
      }
    }
    if (residual > 1e-12) throw Error("Orthogonal matrix fails Q^T Q = I at 1e-12");
  }
}

}  // namespace

MobiusMap::MobiusMap(int dim, std::vector<MobiusGenerator> generators)
    : dim_(dim), gens_(std::move(generators)) {
  if (dim_ < 1) throw DimensionMismatch("MobiusMap dimension must be >= 1");
  for (const auto& g : gens_) validate_generator(g, dim_);
}

BoundaryPoint MobiusMap::operator()(const BoundaryPoint& x) const {
  if (!x.is_infinity() && x.dim() != dim_)
    throw DimensionMismatch("point dimension does not match the map");
  BoundaryPoint p = x;
  for (const auto& g : gens_) {
    if (std::holds_alternative<Invert>(g)) {
      if (p.is_infinity()) {
        p = BoundaryPoint::finite(std::vector<double>(dim_, 0.0));
        continue;
      }
      double n2 = 0;
      for (double c : p.coords()) n2 += c * c;
      if (n2 == 0.0) {
        p = BoundaryPoint::infinity();
        continue;
      }
      std::vector<double> out = p.coords();
      for (double& c : out) c /= n2;
      p = BoundaryPoint::finite(std::move(out));
      continue;
    }
    if (p.is_infinity()) continue;  // Translate/Dilate/Orthogonal fix infinity
    std::vector<double> out = p.coords();
    if (const auto* t = std::get_if<Translate>(&g)) {
      for (int i = 0; i < dim_; ++i) out[i] += t->offset[i];
    } else if (const auto* d = std::get_if<Dilate>(&g)) {
      for (double& c : out) c *= d->factor;
    } else if (const auto* o = std::get_if<Orthogonal>(&g)) {
      std::vector<double> y(dim_, 0.0);
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) y[i] += o->matrix[i][j] * out[j];
      out = std::move(y);
    }
    p = BoundaryPoint::finite(std::move(out));
  }
  return p;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 on the combined value
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<ProductBoundaryPoint> random_generic_tuple(std::uint64_t seed, int count,
                                                       const std::vector<int>& dims,
                                                       double separation,
                                                       const SamplerOptions& opts) {
  if (count < 2) throw Error("random_generic_tuple: count must be >= 2");
  if (!(separation > 0)) throw Error("random_generic_tuple: separation must be positive");
  for (int d : dims)
    if (d < 1) throw DimensionMismatch("boundary dimension must be >= 1");

  std::vector<std::vector<BoundaryPoint>> per_factor;
  for (std::size_t f = 0; f < dims.size(); ++f) {
    std::mt19937_64 rng(derive_seed(seed, f));
    std::uniform_real_distribution<double> box(-opts.box_half_width, opts.box_half_width);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // With small probability one point of this factor is the point at
    // infinity; all others are separated finite points in the box.
    int infinity_index = -1;
    if (unit(rng) < opts.infinity_probability) {
      std::uniform_int_distribution<int> which(0, count - 1);
      infinity_index = which(rng);
    }

    std::vector<BoundaryPoint> pts;
    int attempts = 0;
    while (static_cast<int>(pts.size()) < count) {
      if (static_cast<int>(pts.size()) == infinity_index) {
        pts.push_back(BoundaryPoint::infinity());
        continue;
      }
      if (++attempts > opts.max_attempts)
        throw SamplingFailure("could not sample a separated tuple within the attempt budget");
      std::vector<double> c(dims[f]);
      double n2;
      do {
        n2 = 0;
        for (double& x : c) {
          x = box(rng);
          n2 += x * x;
        }
      } while (n2 > opts.max_norm * opts.max_norm);
      BoundaryPoint candidate = BoundaryPoint::finite(std::move(c));
      bool separated = true;
      for (const auto& p : pts) {
        if (p.is_infinity()) continue;
        if (distance(p, candidate) < separation) {
          separated = false;
          break;
        }
      }
      if (separated) pts.push_back(std::move(candidate));
    }
    per_factor.push_back(std::move(pts));
  }

  std::vector<ProductBoundaryPoint> tuple(count);
  for (int i = 0; i < count; ++i) {
    for (std::size_t f = 0; f < dims.size(); ++f)
      tuple[i].components.push_back(per_factor[f][i]);
  }
  return tuple;
}

MobiusMap random_mobius(std::uint64_t seed, int dim) {
  if (dim < 1) throw DimensionMismatch("random_mobius: dim must be >= 1");
  std::mt19937_64 rng(derive_seed(seed, 0x6d6f6269));
  std::uniform_int_distribution<int> count_dist(3, 6);
  std::uniform_int_distribution<int> kind_dist(0, 3);
  std::uniform_real_distribution<double> log_dilate(std::log(0.2), std::log(5.0));
  std::uniform_real_distribution<double> shift(-2.0, 2.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto random_orthogonal = [&]() {
    // Gram-Schmidt with one reorthogonalization pass (a single pass can miss
    // the 1e-12 orthogonality requirement); retry on near-dependence.
    while (true) {
      std::vector<std::vector<double>> q(dim, std::vector<double>(dim));
      bool ok = true;
      for (int i = 0; i < dim && ok; ++i) {
        for (int j = 0; j < dim; ++j) q[i][j] = gauss(rng);
        for (int pass = 0; pass < 2; ++pass) {
          for (int k = 0; k < i; ++k) {
            double proj = 0;
            for (int j = 0; j < dim; ++j) proj += q[i][j] * q[k][j];
            for (int j = 0; j < dim; ++j) q[i][j] -= proj * q[k][j];
          }
        }
        double norm = 0;
        for (int j = 0; j < dim; ++j) norm += q[i][j] * q[i][j];
        norm = std::sqrt(norm);
        if (norm < 1e-6) {
          ok = false;
          break;
        }
        for (int j = 0; j < dim; ++j) q[i][j] /= norm;
      }
      if (ok) return Orthogonal{std::move(q)};
    }
  };

  const int n = count_dist(rng);
  std::vector<MobiusGenerator> gens;
  for (int i = 0; i < n; ++i) {
    switch (kind_dist(rng)) {
      case 0: {
        std::vector<double> off(dim);
        for (double& x : off) x = shift(rng);
        gens.emplace_back(Translate{std::move(off)});
        break;
      }
      case 1:
        gens.emplace_back(Dilate{std::exp(log_dilate(rng))});
        break;
      case 2:
        gens.emplace_back(random_orthogonal());
        break;
      default:
        gens.emplace_back(Invert{});
        break;
    }
  }
  if (unit(rng) < 0.5) {
    bool has_invert = false;
    for (const auto& g : gens) has_invert = has_invert || std::holds_alternative<Invert>(g);
    if (!has_invert) {
      std::uniform_int_distribution<int> pos(0, n - 1);
      gens[pos(rng)] = Invert{};
    }
  }
  return MobiusMap(dim, std::move(gens));
}

}  // namespace cocyclelab
