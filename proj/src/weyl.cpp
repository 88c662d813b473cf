#include "cocyclelab/weyl.hpp"

#include <cstddef>

namespace cocyclelab {

RatMat ambient_action(const RootSystem& rs, const std::vector<int>& word) {
  const int d = rs.ambient_dim;
  // Columns of M are the images of the ambient basis vectors; applying the
  // walk's reflections in order means left-multiplying by each in turn, which
  // is the same as reflecting every column.
  RatMat cols(d, RatVec(d, 0));
  for (int j = 0; j < d; ++j) cols[j][j] = 1;
  for (int idx : word) {
    const RatVec& alpha = rs.simple_roots[idx];
    for (int j = 0; j < d; ++j) cols[j] = reflect(alpha, cols[j]);
  }
  RatMat m(d, RatVec(d, 0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m[i][j] = cols[j][i];
  return m;
}

LongestElementReport longest_element(const RootSystem& rs) {
  LongestElementReport rep;
  rep.type_label = rs.label();
  rep.rank = rs.rank;

  RatVec v = negate(rs.half_sum_positive());
  const std::size_t max_steps = rs.positive_roots.size() + 1;
  for (std::size_t step = 0; step <= max_steps; ++step) {
    int next = -1;
    for (int i = 0; i < rs.rank; ++i) {
      if (dot(v, rs.simple_roots[i]) < 0) {
        next = i;
        break;
      }
    }
    if (next < 0) break;  // v is dominant: the walk ended at rho
    v = reflect(rs.simple_roots[next], v);
    rep.word.push_back(next);
  }
  if (rep.word.size() != rs.positive_roots.size())
    throw Error("chamber walk did not terminate in |positive roots| steps");

  // Express w0 in the simple-root basis: column j = coords of w0(alpha_j).
  RatMat w0 = ambient_action(rs, rep.word);
  rep.action.assign(rs.rank, RatVec(rs.rank, 0));
  for (int j = 0; j < rs.rank; ++j) {
    RatVec c = rs.simple_root_coords(mat_vec(w0, rs.simple_roots[j]));
    for (int i = 0; i < rs.rank; ++i) rep.action[i][j] = c[i];
  }

  auto [s, t] = involution_signature(rep);
  rep.s = s;
  rep.t = t;
  rep.minus_one = (s == 0);
  return rep;
}

std::pair<int, int> involution_signature(const LongestElementReport& rep) {
  if (!is_identity(mat_mul(rep.action, rep.action)))
    throw NotInvolution("action matrix squared is not the identity");
  const Rational tr = trace(rep.action);
  const int rank = static_cast<int>(rep.action.size());
  const Rational s2 = Rational(rank) + tr;
  const Rational t2 = Rational(rank) - tr;
  if (denominator(s2) != 1 || numerator(s2) % 2 != 0)
    throw NotInvolution("trace incompatible with an involution");
  const int s = static_cast<int>(numerator(s2) / 2);
  const int t = static_cast<int>(numerator(t2) / 2);
  if (s < 0 || t < 0) throw NotInvolution("negative eigenspace dimension");
  return {s, t};
}

}  // namespace cocyclelab
