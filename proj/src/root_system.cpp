#include "cocyclelab/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace cocyclelab {

namespace {

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
  }
  return "?";
}

void check_rank(Family f, int r) {
  bool ok = false;
  switch (f) {
    case Family::A:
    case Family::B:
    case Family::C: ok = r >= 1; break;
    case Family::D: ok = r >= 2; break;
    case Family::E: ok = r == 6 || r == 7 || r == 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) {
    std::ostringstream os;
    os << "invalid type " << family_name(f) << r;
    throw InvalidType(os.str());
  }
}

RatVec basis_vec(int dim, int i, Rational value = 1) {
  RatVec v(dim, 0);
  v[i] = value;
  return v;
}

// Simple roots in the Bourbaki ambient realization of one simple factor.
std::vector<RatVec> simple_roots_of(const SimpleType& t) {
  const int n = t.rank;
  const int d = t.ambient_dim();
  std::vector<RatVec> roots;
  auto chain = [&](int count) {  // e_i - e_{i+1}, i = 0..count-1
    for (int i = 0; i < count; ++i) {
      RatVec v(d, 0);
      v[i] = 1;
      v[i + 1] = -1;
      roots.push_back(v);
    }
  };
  switch (t.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
      chain(n - 1);
      roots.push_back(basis_vec(d, n - 1));
      break;
    case Family::C:
      chain(n - 1);
      roots.push_back(basis_vec(d, n - 1, 2));
      break;
    case Family::D:
      chain(n - 1);
      {
        RatVec v(d, 0);
        v[n - 2] = 1;
        v[n - 1] = 1;
        roots.push_back(v);
      }
      break;
    case Family::E: {
      // Bourbaki plate: alpha1 = (e1 + e8 - e2 - ... - e7)/2, alpha2 = e1 + e2,
      // alpha_k = e_{k-1} - e_{k-2} for k >= 3. E6/E7 take the first 6/7.
      RatVec a1(8, Rational(-1, 2));
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      roots.push_back(a1);
      RatVec a2(8, 0);
      a2[0] = 1;
      a2[1] = 1;
      roots.push_back(a2);
      for (int k = 3; k <= n; ++k) {
        RatVec v(8, 0);
        v[k - 2] = 1;
        v[k - 3] = -1;
        roots.push_back(v);
      }
      break;
    }
    case Family::F: {
      roots.push_back(RatVec{0, 1, -1, 0});
      roots.push_back(RatVec{0, 0, 1, -1});
      roots.push_back(RatVec{0, 0, 0, 1});
      roots.push_back(RatVec{Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)});
      break;
    }
    case Family::G: {
      roots.push_back(RatVec{1, -1, 0});
      roots.push_back(RatVec{-2, 1, 1});
      break;
    }
  }
  return roots;
}

}  // namespace

SimpleType::SimpleType(Family f, int r) : family(f), rank(r) { check_rank(f, r); }

std::string SimpleType::label() const {
  return std::string(family_name(family)) + std::to_string(rank);
}

int SimpleType::positive_root_count() const {
  const int n = rank;
  switch (family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

int SimpleType::ambient_dim() const {
  switch (family) {
    case Family::A: return rank + 1;
    case Family::B:
    case Family::C:
    case Family::D: return rank;
    case Family::E: return 8;
    case Family::F: return 4;
    case Family::G: return 3;
  }
  return 0;
}

std::vector<SimpleType> parse_type_spec(const std::string& spec) {
  std::vector<SimpleType> factors;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ',')) {
    std::string s;
    for (char c : token)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw InvalidType("empty factor in type spec '" + spec + "'");
    const char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (fam < 'A' || fam > 'G')
      throw InvalidType("unknown family '" + std::string(1, s[0]) + "' in '" + spec + "'");
    int rank = 0;
    try {
      std::size_t pos = 0;
      rank = std::stoi(s.substr(1), &pos);
      if (pos != s.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw InvalidType("cannot parse rank in factor '" + token + "'");
    }
    factors.emplace_back(static_cast<Family>(fam), rank);
  }
  if (factors.empty()) throw InvalidType("empty type spec");
  return factors;
}

std::string format_type_spec(const std::vector<SimpleType>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ",";
    out += factors[i].label();
  }
  return out;
}

RatVec reflect(const RatVec& root, const RatVec& v) {
  if (is_zero(root)) throw ZeroRoot("reflect: zero root");
  const Rational coeff = 2 * dot(v, root) / dot(root, root);
  RatVec r = v;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= coeff * root[i];
  return r;
}

RatVec RootSystem::simple_root_coords(const RatVec& v) const {
  RatVec c = mat_vec(coord_map_, v);
  // coord_map_ is a left inverse on span(simple_roots); verify membership.
  RatVec back(ambient_dim, 0);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < ambient_dim; ++i) back[i] += c[j] * simple_roots[j][i];
  if (back != v) throw Error("vector not in the span of the simple roots");
  return c;
}

bool RootSystem::is_root(const RatVec& v) const {
  return std::binary_search(all_roots.begin(), all_roots.end(), v, lex_less);
}

bool RootSystem::is_positive_root(const RatVec& v) const {
  return std::binary_search(positive_roots.begin(), positive_roots.end(), v, lex_less);
}

RatVec RootSystem::half_sum_positive() const {
  RatVec rho(ambient_dim, 0);
  for (const auto& beta : positive_roots)
    for (int i = 0; i < ambient_dim; ++i) rho[i] += beta[i];
  for (auto& x : rho) x /= 2;
  return rho;
}

RootSystem build_root_system(const std::vector<SimpleType>& factors) {
  if (factors.empty()) throw InvalidType("factor list is empty");

  RootSystem rs;
  rs.factors = factors;
  for (const auto& f : factors) {
    rs.ambient_dim += f.ambient_dim();
    rs.rank += f.rank;
  }

  // Embed each factor's simple roots block-diagonally.
  int offset = 0;
  for (const auto& f : factors) {
    for (const auto& alpha : simple_roots_of(f)) {
      RatVec v(rs.ambient_dim, 0);
      for (std::size_t i = 0; i < alpha.size(); ++i) v[offset + i] = alpha[i];
      rs.simple_roots.push_back(std::move(v));
    }
    offset += f.ambient_dim();
  }

  // Breadth-first closure under the simple reflections.
  auto cmp = [](const RatVec& a, const RatVec& b) { return lex_less(a, b); };
  std::set<RatVec, decltype(cmp)> seen(cmp);
  std::deque<RatVec> todo;
  for (const auto& alpha : rs.simple_roots) {
    if (seen.insert(alpha).second) todo.push_back(alpha);
  }
  while (!todo.empty()) {
    RatVec beta = std::move(todo.front());
    todo.pop_front();
    for (const auto& alpha : rs.simple_roots) {
      RatVec img = reflect(alpha, beta);
      if (seen.insert(img).second) todo.push_back(std::move(img));
    }
  }
  rs.all_roots.assign(seen.begin(), seen.end());

  // coord_map = (S^T S)^{-1} S^T with S the ambient x rank matrix of simple roots.
  RatMat gram(rs.rank, RatVec(rs.rank, 0));
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) gram[i][j] = dot(rs.simple_roots[i], rs.simple_roots[j]);
  RatMat gram_inv = invert(gram);  // throws if simple roots were dependent
  rs.coord_map_.assign(rs.rank, RatVec(rs.ambient_dim, 0));
  for (int i = 0; i < rs.rank; ++i)
    for (int a = 0; a < rs.ambient_dim; ++a) {
      Rational s = 0;
      for (int j = 0; j < rs.rank; ++j) s += gram_inv[i][j] * rs.simple_roots[j][a];
      rs.coord_map_[i][a] = s;
    }

  // Positivity = all coefficients in the simple-root basis nonnegative.
  for (const auto& beta : rs.all_roots) {
    RatVec c = rs.simple_root_coords(beta);
    bool nonneg = true, nonpos = true;
    for (const auto& x : c) {
      if (x < 0) nonneg = false;
      if (x > 0) nonpos = false;
    }
    if (nonneg == nonpos) throw Error("root with mixed-sign simple coordinates");
    if (nonneg) rs.positive_roots.push_back(beta);
  }

  return rs;
}

}  // namespace cocyclelab
