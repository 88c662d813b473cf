#include "cocyclelab/cocycles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cocyclelab {

namespace {

// All permutations of {0..n-1} with their signs, n <= 8.
std::vector<std::pair<std::vector<int>, int>> signed_permutations(int n) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> out;
  do {
    std::vector<int> p = idx;
    int sign = 1;
    std::vector<int> q = p;
    for (int i = 0; i < n; ++i) {
      while (q[i] != i) {
        std::swap(q[i], q[q[i]]);
        sign = -sign;
      }
    }
    out.emplace_back(std::move(p), sign);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

std::vector<ProductBoundaryPoint> permute(const std::vector<ProductBoundaryPoint>& t,
                                          const std::vector<int>& perm) {
  std::vector<ProductBoundaryPoint> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = t[perm[i]];
  return out;
}

void require_two_factors(const std::vector<ProductBoundaryPoint>& tuple, std::size_t n,
                         const char* who) {
  if (tuple.size() != n) throw DimensionMismatch(std::string(who) + ": wrong tuple length");
  for (const auto& p : tuple)
    if (p.components.size() != 2)
      throw DimensionMismatch(std::string(who) + ": expects exactly two factors");
}

double log_window_det(const std::vector<ProductBoundaryPoint>& t, int shift) {
  // rows: the two factors; columns: windows (0,1,2,3) and (1,2,3,shift).
  auto b = [&](int f, int i, int j, int k, int l) {
    return cross_ratio(t[i].components[f], t[j].components[f], t[k].components[f],
                       t[l].components[f]);
  };
  const double a11 = std::log(b(0, 0, 1, 2, 3));
  const double a12 = std::log(b(0, 1, 2, 3, shift));
  const double a21 = std::log(b(1, 0, 1, 2, 3));
  const double a22 = std::log(b(1, 1, 2, 3, shift));
  return a11 * a22 - a12 * a21;
}

}  // namespace

CochainEvaluator alternation(const CochainEvaluator& f) {
  if (f.degree > 7) throw DegreeTooLarge("alternation: degree above 7");
  const int n = f.degree + 1;
  auto perms = signed_permutations(n);
  auto inner = f.eval;
  return CochainEvaluator{
      f.degree, [perms = std::move(perms), inner](const std::vector<ProductBoundaryPoint>& t) {
        double acc = 0;
        for (const auto& [perm, sign] : perms) acc += sign * inner(permute(t, perm));
        return acc / static_cast<double>(perms.size());
      }};
}

CochainEvaluator coboundary(const CochainEvaluator& f) {
  auto inner = f.eval;
  const int faces = f.degree + 2;
  return CochainEvaluator{
      f.degree + 1, [inner, faces](const std::vector<ProductBoundaryPoint>& t) {
        if (static_cast<int>(t.size()) != faces)
          throw DimensionMismatch("coboundary: wrong tuple length");
        double acc = 0;
        for (int omit = 0; omit < faces; ++omit) {
          std::vector<ProductBoundaryPoint> face;
          face.reserve(faces - 1);
          for (int i = 0; i < faces; ++i)
            if (i != omit) face.push_back(t[i]);
          acc += (omit % 2 == 0 ? 1.0 : -1.0) * inner(face);
        }
        return acc;
      }};
}

double c3(const std::vector<ProductBoundaryPoint>& tuple) {
  require_two_factors(tuple, 4, "c3");
  return log_window_det(tuple, 0);  // second column is the cyclic shift (1,2,3,0)
}

double c4(const std::vector<ProductBoundaryPoint>& tuple) {
  require_two_factors(tuple, 5, "c4");
  return log_window_det(tuple, 4);  // second column is the next window (1,2,3,4)
}

CochainEvaluator c3_evaluator() { return CochainEvaluator{3, [](const auto& t) { return c3(t); }}; }
CochainEvaluator c4_evaluator() { return CochainEvaluator{4, [](const auto& t) { return c4(t); }}; }

Check parse_check(const std::string& name) {
  for (int i = 0; i < 8; ++i) {
    const Check c = static_cast<Check>(i);
    if (check_name(c) == name) return c;
  }
  throw InvalidCheck("unknown check '" + name + "'");
}

std::string check_name(Check c) {
  switch (c) {
    case Check::cocycle_c3: return "cocycle_c3";
    case Check::cocycle_c4: return "cocycle_c4";
    case Check::alt_c3_fixed: return "alt_c3_fixed";
    case Check::alt_c4_zero: return "alt_c4_zero";
    case Check::invariance_c3: return "invariance_c3";
    case Check::invariance_c4: return "invariance_c4";
    case Check::crossratio_invariance: return "crossratio_invariance";
    case Check::reversal_c4: return "reversal_c4";
  }
  throw InvalidCheck("unknown check enum value");
}

std::vector<std::string> all_check_names() {
  std::vector<std::string> names;
  for (int i = 0; i < 8; ++i) names.push_back(check_name(static_cast<Check>(i)));
  return names;
}

namespace {

// Every cross-ratio that can appear while evaluating a check on this tuple
// comes from an ordered 4-subset of one factor; screen them all against the
// conditioning window.
bool factor_cross_ratios_in_window(const std::vector<BoundaryPoint>& pts, double lo, double hi) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 1.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (pts[i].is_infinity() || pts[j].is_infinity()) continue;
      d[i][j] = d[j][i] = distance(pts[i], pts[j]);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          const double den = d[k][j] * d[l][i];
          if (den == 0.0) return false;
          const double b = d[k][i] * d[l][j] / den;
          if (!(b >= lo && b <= hi)) return false;
        }
  return true;
}

bool tuple_conditioned(const std::vector<ProductBoundaryPoint>& tuple, const VerifyOptions& o) {
  const std::size_t factors = tuple.empty() ? 0 : tuple[0].components.size();
  for (std::size_t f = 0; f < factors; ++f) {
    std::vector<BoundaryPoint> pts;
    for (const auto& p : tuple) pts.push_back(p.components[f]);
    if (!factor_cross_ratios_in_window(pts, o.crossratio_min, o.crossratio_max)) return false;
  }
  return true;
}

bool transformed_conditioned(const std::vector<ProductBoundaryPoint>& tuple,
                             const VerifyOptions& o) {
  const std::size_t factors = tuple.empty() ? 0 : tuple[0].components.size();
  for (std::size_t f = 0; f < factors; ++f) {
    std::vector<BoundaryPoint> pts;
    for (const auto& p : tuple) pts.push_back(p.components[f]);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (pts[i].is_infinity() || pts[j].is_infinity()) continue;
        if (distance(pts[i], pts[j]) < o.transformed_min_dist) return false;
      }
    if (!factor_cross_ratios_in_window(pts, o.crossratio_min, o.crossratio_max)) return false;
  }
  return true;
}

std::vector<ProductBoundaryPoint> apply_product_map(const std::vector<MobiusMap>& maps,
                                                    const std::vector<ProductBoundaryPoint>& t) {
  std::vector<ProductBoundaryPoint> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t f = 0; f < maps.size(); ++f)
      out[i].components.push_back(maps[f](t[i].components[f]));
  return out;
}

// Signed permutation average together with the mean magnitude of its terms.
std::pair<double, double> alternation_with_scale(
    const std::function<double(const std::vector<ProductBoundaryPoint>&)>& f,
    const std::vector<ProductBoundaryPoint>& t) {
  auto perms = signed_permutations(static_cast<int>(t.size()));
  double acc = 0, mag = 0;
  for (const auto& [perm, sign] : perms) {
    const double v = f(permute(t, perm));
    acc += sign * v;
    mag += std::abs(v);
  }
  const double n = static_cast<double>(perms.size());
  return {acc / n, mag / n};
}

int tuple_size_for(Check c) {
  switch (c) {
    case Check::cocycle_c3: return 5;
    case Check::cocycle_c4: return 6;
    case Check::alt_c3_fixed: return 4;
    case Check::alt_c4_zero: return 5;
    case Check::invariance_c3: return 4;
    case Check::invariance_c4: return 5;
    case Check::crossratio_invariance: return 4;
    case Check::reversal_c4: return 5;
  }
  return 0;
}

struct Residual {
  double abs = 0;
  double rel = 0;
};

Residual coboundary_residual(const std::function<double(const std::vector<ProductBoundaryPoint>&)>& f,
                             const std::vector<ProductBoundaryPoint>& t) {
  const int faces = static_cast<int>(t.size());
  double acc = 0, scale = 0;
  for (int omit = 0; omit < faces; ++omit) {
    std::vector<ProductBoundaryPoint> face;
    for (int i = 0; i < faces; ++i)
      if (i != omit) face.push_back(t[i]);
    const double v = f(face);
    acc += (omit % 2 == 0 ? 1.0 : -1.0) * v;
    scale += std::abs(v);
  }
  return {std::abs(acc), std::abs(acc) / (scale + 1.0)};
}

}  // namespace

VerificationReport verify(Check check, std::pair<int, int> dims, long long trials, double tol,
                          std::uint64_t seed, const VerifyOptions& opts) {
  if (trials < 1) throw Error("verify: trials must be >= 1");
  if (!(tol > 0)) throw Error("verify: tolerance must be positive");
  if (dims.first < 2 || dims.second < 2)
    throw DimensionMismatch("verify: hyperbolic dimensions must be >= 2");

  const std::vector<int> bdims = {dims.first - 1, dims.second - 1};
  const int count = tuple_size_for(check);

  VerificationReport rep;
  rep.check_name = check_name(check);
  rep.trials = trials;
  rep.tolerance = tol;
  rep.seed = seed;

  long long accepted = 0;
  std::uint64_t attempt = 0;
  const std::uint64_t attempt_budget = static_cast<std::uint64_t>(trials) * 50 + 100;

  while (accepted < trials) {
    if (attempt >= attempt_budget)
      throw SamplingFailure("verify: attempt budget exhausted for check " + rep.check_name);
    const std::uint64_t trial_seed = derive_seed(seed, attempt++);

    std::vector<ProductBoundaryPoint> tuple;
    try {
      tuple = random_generic_tuple(trial_seed, count, bdims, opts.separation);
    } catch (const SamplingFailure&) {
      ++rep.rejected;
      continue;
    }
    if (!tuple_conditioned(tuple, opts)) {
      ++rep.rejected;
      continue;
    }

    Residual r;
    try {
      switch (check) {
        case Check::cocycle_c3:
          r = coboundary_residual(c3, tuple);
          break;
        case Check::cocycle_c4:
          r = coboundary_residual(c4, tuple);
          break;
        case Check::alt_c3_fixed: {
          const double ref = c3(tuple);
          const auto [alt, scale] = alternation_with_scale(c3, tuple);
          (void)scale;
          r.abs = std::abs(alt - ref);
          r.rel = r.abs / (std::abs(ref) + 1.0);
          break;
        }
        case Check::alt_c4_zero: {
          const auto [alt, scale] = alternation_with_scale(c4, tuple);
          r.abs = std::abs(alt);
          r.rel = r.abs / (scale + 1.0);
          break;
        }
        case Check::reversal_c4: {
          const double ref = c4(tuple);
          std::vector<ProductBoundaryPoint> rev(tuple.rbegin(), tuple.rend());
          r.abs = std::abs(c4(rev) + ref);
          r.rel = r.abs / (std::abs(ref) + 1.0);
          break;
        }
        case Check::invariance_c3:
        case Check::invariance_c4: {
          std::vector<MobiusMap> maps = {random_mobius(derive_seed(trial_seed, 101), bdims[0]),
                                         random_mobius(derive_seed(trial_seed, 102), bdims[1])};
          auto moved = apply_product_map(maps, tuple);
          if (!transformed_conditioned(moved, opts)) {
            ++rep.rejected;
            continue;
          }
          auto* f = (check == Check::invariance_c3) ? &c3 : &c4;
          const double ref = f(tuple);
          r.abs = std::abs(f(moved) - ref);
          r.rel = r.abs / (std::abs(ref) + 1.0);
          break;
        }
        case Check::crossratio_invariance: {
          bool rejected = false;
          for (std::size_t f = 0; f < bdims.size() && !rejected; ++f) {
            MobiusMap g = random_mobius(derive_seed(trial_seed, 111 + f), bdims[f]);
            std::vector<BoundaryPoint> pts, moved;
            for (const auto& p : tuple) {
              pts.push_back(p.components[f]);
              moved.push_back(g(p.components[f]));
            }
            std::vector<ProductBoundaryPoint> wrapped(moved.size());
            for (std::size_t i = 0; i < moved.size(); ++i)
              wrapped[i].components.push_back(moved[i]);
            if (!transformed_conditioned(wrapped, opts)) {
              rejected = true;
              break;
            }
            const double ref = cross_ratio(pts[0], pts[1], pts[2], pts[3]);
            const double img = cross_ratio(moved[0], moved[1], moved[2], moved[3]);
            r.abs = std::max(r.abs, std::abs(img - ref));
            r.rel = std::max(r.rel, std::abs(img - ref) / (std::abs(ref) + 1.0));
          }
          if (rejected) {
            ++rep.rejected;
            continue;
          }
          break;
        }
      }
    } catch (const DegenerateTuple&) {
      ++rep.rejected;
      continue;
    } catch (const MultipleInfinities&) {
      ++rep.rejected;
      continue;
    }

    ++accepted;
    rep.max_abs_residual = std::max(rep.max_abs_residual, r.abs);
    rep.max_rel_residual = std::max(rep.max_rel_residual, r.rel);
  }

  rep.pass = rep.max_rel_residual <= tol;
  return rep;
}

}  // namespace cocyclelab
