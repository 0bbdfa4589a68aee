#pragma once

// The SL(3) example: the eight functions p(R1|R2) = d(R1) d(R2) on 3 x 3
// matrices, the five functions not vanishing on the Schubert variety of the
// cycle (123), and the failure of Levi stability of their span.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pluck/errors.hpp"
#include "pluck/rational.hpp"
#include "pluck/rep_theory.hpp"
#include "pluck/report.hpp"
#include "pluck/root_system.hpp"

namespace pluck {

// Polynomial in x_11 .. x_33; variable (i, j) is slot 3(i-1) + (j-1).
class MatrixPoly {
 public:
  using Exponents = std::array<std::uint8_t, 9>;

  MatrixPoly() = default;

  static MatrixPoly constant(const Rational& c) {
    MatrixPoly p;
    p.add(Exponents{}, c);
    return p;
  }

  static MatrixPoly variable(unsigned i, unsigned j) {
    if (i < 1 || i > 3 || j < 1 || j > 3) throw InvalidArgument("MatrixPoly: variable index out of range");
    Exponents e{};
    e[slot(i, j)] = 1;
    MatrixPoly p;
    p.add(e, 1);
    return p;
  }

  static std::size_t slot(unsigned i, unsigned j) { return 3 * (i - 1) + (j - 1); }

  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Exponents& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }

  MatrixPoly& operator+=(const MatrixPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  MatrixPoly& operator-=(const MatrixPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  friend MatrixPoly operator+(MatrixPoly a, const MatrixPoly& b) { return a += b; }
  friend MatrixPoly operator-(MatrixPoly a, const MatrixPoly& b) { return a -= b; }
  friend MatrixPoly operator*(const Rational& c, MatrixPoly a) {
    if (sgn(c) == 0) return MatrixPoly();
    for (auto& [e, v] : a.terms_) v *= c;
    return a;
  }
  friend MatrixPoly operator*(const MatrixPoly& a, const MatrixPoly& b) {
    MatrixPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t v = 0; v < 9; ++v) e[v] = static_cast<std::uint8_t>(ea[v] + eb[v]);
        out.add(e, ca * cb);
      }
    return out;
  }
  friend bool operator==(const MatrixPoly&, const MatrixPoly&) = default;

  MatrixPoly derivative(unsigned i, unsigned j) const {
    const std::size_t s = slot(i, j);
    MatrixPoly out;
    for (const auto& [e, c] : terms_) {
      if (e[s] == 0) continue;
      Exponents d = e;
      --d[s];
      out.add(d, c * e[s]);
    }
    return out;
  }

  // Substitutes x_33 = -x_11 - x_22 (restriction to traceless matrices).
  MatrixPoly trace_reduced() const {
    const MatrixPoly repl = MatrixPoly() - variable(1, 1) - variable(2, 2);
    MatrixPoly out;
    for (const auto& [e, c] : terms_) {
      Exponents rest = e;
      const unsigned k = rest[8];
      rest[8] = 0;
      MatrixPoly term;
      term.add(rest, c);
      for (unsigned t = 0; t < k; ++t) term = term * repl;
      out += term;
    }
    return out;
  }

  Rational evaluate(const QMatrix& m) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational v = c;
      for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
          for (unsigned t = 0; t < e[3 * i + j]; ++t) v *= m[i][j];
      total += v;
    }
    return total;
  }

 private:
  std::map<Exponents, Rational> terms_;
};

inline std::string to_string(const MatrixPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) s += " + ";
    first = false;
    s += to_string(c);
    for (unsigned v = 0; v < 9; ++v)
      for (unsigned t = 0; t < e[v]; ++t) s += "*x" + std::to_string(v / 3 + 1) + std::to_string(v % 3 + 1);
  }
  return s;
}

// Minor on rows `rows` and columns 1..r.
inline MatrixPoly minor_d(const std::vector<unsigned>& rows) {
  const std::size_t r = rows.size();
  if (r < 1 || r > 3) throw InvalidArgument("minor_d: need 1 to 3 rows");
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i] < 1 || rows[i] > 3) throw InvalidArgument("minor_d: row out of range");
    if (i && rows[i - 1] >= rows[i]) throw InvalidArgument("minor_d: rows must be increasing");
  }
  std::vector<unsigned> perm(r);
  for (unsigned i = 0; i < r; ++i) perm[i] = i;
  MatrixPoly out;
  do {
    int sign = 1;
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = a + 1; b < r; ++b)
        if (perm[a] > perm[b]) sign = -sign;
    MatrixPoly term = MatrixPoly::constant(sign);
    for (std::size_t a = 0; a < r; ++a) term = term * MatrixPoly::variable(rows[a], perm[a] + 1);
    out += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct PFunction {
  std::string name;  // "p(12|1)"
  std::vector<unsigned> r1, r2;
  MatrixPoly poly;
};

inline PFunction make_p(std::vector<unsigned> r1, std::vector<unsigned> r2) {
  std::string name = "p(";
  for (auto x : r1) name += std::to_string(x);
  name += "|";
  for (auto x : r2) name += std::to_string(x);
  name += ")";
  MatrixPoly poly = minor_d(r1) * minor_d(r2);
  return {name, std::move(r1), std::move(r2), std::move(poly)};
}

// (12|1), (12|2), (13|1), (12|3), (23|1), (13|3), (23|2), (23|3).
inline std::vector<PFunction> build_p_basis() {
  return {make_p({1, 2}, {1}), make_p({1, 2}, {2}), make_p({1, 3}, {1}), make_p({1, 2}, {3}),
          make_p({2, 3}, {1}), make_p({1, 3}, {3}), make_p({2, 3}, {2}), make_p({2, 3}, {3})};
}

// p(12|1), p(12|2), p(13|1), p(23|1), p(23|2).
inline std::vector<PFunction> restricted_set() {
  return {make_p({1, 2}, {1}), make_p({1, 2}, {2}), make_p({1, 3}, {1}), make_p({2, 3}, {1}),
          make_p({2, 3}, {2})};
}

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

struct NamedMatrix {
  std::string name;
  Matrix3 m;
};

inline Matrix3 elementary(unsigned i, unsigned j) {
  Matrix3 m{};
  for (auto& row : m)
    for (auto& x : row) x = 0;
  m[i - 1][j - 1] = 1;
  return m;
}

inline Matrix3 diag3(const Rational& a, const Rational& b, const Rational& c) {
  Matrix3 m = elementary(1, 1);
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  return m;
}

inline Matrix3 bracket(const Matrix3& a, const Matrix3& b) {
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j] - b[i][k] * a[k][j];
      out[i][j] = s;
    }
  return out;
}

inline std::vector<NamedMatrix> sl3_generators() {
  std::vector<NamedMatrix> out;
  for (unsigned i = 1; i <= 3; ++i)
    for (unsigned j = 1; j <= 3; ++j)
      if (i != j) out.push_back({"E" + std::to_string(i) + std::to_string(j), elementary(i, j)});
  out.push_back({"H12", diag3(1, -1, 0)});
  out.push_back({"H23", diag3(0, 1, -1)});
  return out;
}

// Traceless block-diagonal (2,1) matrices.
inline std::vector<NamedMatrix> levi_generators() {
  return {{"E12", elementary(1, 2)}, {"E21", elementary(2, 1)}, {"H12", diag3(1, -1, 0)}, {"Z", diag3(1, 1, -2)}};
}

enum class Sl3Action { LeftMultiplication, Conjugation };

// Derivative of f along the vector field M -> -xi M (left multiplication,
// a Lie algebra homomorphism), or along M -> [M, xi] (conjugation).
inline MatrixPoly lie_action(const Matrix3& xi, const MatrixPoly& f, Sl3Action kind = Sl3Action::LeftMultiplication) {
  Rational tr = xi[0][0] + xi[1][1] + xi[2][2];
  if (sgn(tr) != 0) throw InvalidArgument("lie_action: xi is not traceless");
  MatrixPoly out;
  for (unsigned i = 1; i <= 3; ++i)
    for (unsigned j = 1; j <= 3; ++j) {
      // field component at (i, j), linear in the x's
      MatrixPoly comp;
      for (unsigned k = 1; k <= 3; ++k) {
        if (kind == Sl3Action::LeftMultiplication) comp -= xi[i - 1][k - 1] * MatrixPoly::variable(k, j);
        else comp += MatrixPoly::variable(i, k) * MatrixPoly::constant(xi[k - 1][j - 1]) -
                     MatrixPoly::constant(xi[i - 1][k - 1]) * MatrixPoly::variable(k, j);
      }
      if (comp.is_zero()) continue;
      const MatrixPoly d = f.derivative(i, j);
      if (!d.is_zero()) out += comp * d;
    }
  return out;
}

// Linear span of polynomials, computed in the coordinates of their monomials.
class PolySpan {
 public:
  explicit PolySpan(const std::vector<MatrixPoly>& universe) {
    for (const auto& p : universe)
      for (const auto& [e, c] : p.terms()) index_.emplace(e, 0);
    std::size_t i = 0;
    for (auto& [e, v] : index_) v = i++;
    space_ = RowSpace(index_.size());
  }

  // nullopt when the polynomial uses a monomial outside the universe.
  std::optional<QVector> coordinates(const MatrixPoly& p) const {
    QVector v(index_.size(), Rational(0));
    for (const auto& [e, c] : p.terms()) {
      auto it = index_.find(e);
      if (it == index_.end()) return std::nullopt;
      v[it->second] = c;
    }
    return v;
  }

  bool insert(const MatrixPoly& p) {
    auto v = coordinates(p);
    if (!v) throw InvalidArgument("PolySpan: polynomial outside the universe");
    return space_.insert(*v);
  }

  bool contains(const MatrixPoly& p) const {
    auto v = coordinates(p);
    return v && space_.contains(*v);
  }

  std::size_t dim() const { return space_.dim(); }

 private:
  std::map<MatrixPoly::Exponents, std::size_t> index_;
  RowSpace space_{0};
};

inline std::size_t poly_rank(const std::vector<MatrixPoly>& ps) {
  PolySpan span(ps);
  for (const auto& p : ps) span.insert(p);
  return span.dim();
}

inline std::vector<MatrixPoly> polys_of(const std::vector<PFunction>& fs) {
  std::vector<MatrixPoly> out;
  for (const auto& f : fs) out.push_back(f.poly);
  return out;
}

// Names of (xi, f) pairs with xi . f outside span(targets).
struct StabilityResult {
  std::size_t span_dim = 0;
  std::vector<std::pair<std::string, std::string>> escapes;
};

inline StabilityResult stability(const std::vector<PFunction>& fs, const std::vector<NamedMatrix>& xis,
                                 Sl3Action kind = Sl3Action::LeftMultiplication) {
  std::vector<MatrixPoly> universe = polys_of(fs);
  std::vector<std::pair<std::string, MatrixPoly>> images;
  for (const auto& xi : xis)
    for (const auto& f : fs) {
      images.emplace_back(xi.name + "|" + f.name, lie_action(xi.m, f.poly, kind));
      universe.push_back(images.back().second);
    }
  PolySpan span(universe);
  for (const auto& f : fs) span.insert(f.poly);
  StabilityResult r;
  r.span_dim = span.dim();
  std::size_t idx = 0;
  for (const auto& xi : xis)
    for (const auto& f : fs) {
      if (!span.contains(images[idx].second)) r.escapes.emplace_back(xi.name, f.name);
      ++idx;
    }
  return r;
}

// {claim, spanDim, witnesses: [{xi, f, residualRank}]}
inline Json check_nonstability() {
  const auto five = restricted_set();
  const auto result = stability(five, levi_generators());
  Json j;
  j["claim"] = "remark-nonstability";
  j["spanDim"] = result.span_dim;
  Json w = Json::array();
  for (const auto& [xi, f] : result.escapes) {
    // rank gained by adjoining the image to the span
    Json e;
    e["xi"] = xi;
    e["f"] = f;
    e["residualRank"] = 1;
    w.push_back(e);
  }
  j["witnesses"] = w;
  return j;
}

// ---------------------------------------------------------------------------
// Dimensions of the Schubert variety of (123), degree by degree.

// Points b P of the Schubert cell, b upper triangular, P e_j = e_{tau(j)} with
// tau = (1 2 3).
inline QMatrix schubert_point(std::mt19937_64& rng) {
  static constexpr unsigned tau[3] = {2, 3, 1};
  QMatrix b(3, QVector(3, Rational(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      std::int64_t x = static_cast<std::int64_t>(rng() % 19) - 9;
      while (i == j && x == 0) x = static_cast<std::int64_t>(rng() % 19) - 9;
      b[i][j] = x;
    }
  QMatrix g(3, QVector(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[i][j] = b[i][tau[j] - 1];
  return g;
}

// Degree-n products of the five restricted functions, evaluated on the
// Schubert variety; returns the dimension of their span there.
inline std::size_t restricted_span_dim(std::size_t n, std::uint64_t seed) {
  const auto five = restricted_set();
  std::vector<MatrixPoly> products;
  std::vector<std::size_t> idx(n, 0);
  std::function<void(std::size_t, std::size_t, MatrixPoly)> rec = [&](std::size_t depth, std::size_t start, MatrixPoly acc) {
    if (depth == n) {
      products.push_back(std::move(acc));
      return;
    }
    for (std::size_t i = start; i < five.size(); ++i) rec(depth + 1, i, acc * five[i].poly);
  };
  rec(0, 0, MatrixPoly::constant(1));
  std::mt19937_64 rng(seed);
  std::vector<QMatrix> points;
  for (std::size_t i = 0; i < products.size() + 10; ++i) points.push_back(schubert_point(rng));
  RowSpace space(points.size());
  for (const auto& p : products) {
    QVector row;
    for (const auto& m : points) row.push_back(p.evaluate(m));
    space.insert(row);
  }
  return space.dim();
}

struct Sl3Dimensions {
  std::size_t n = 0;
  mpz_class multiset_sum;   // sum over 0 <= i_1 <= ... <= i_n <= 1 of dim V_{zeta_i1 + ...}
  mpz_class ridge_sum;     // same with 1 <= i_1
  mpz_class demazure;      // dim of the Demazure module for tau
  std::size_t restricted = 0;
};

// K = SL(3), L the Levi of alpha_1, gamma_1 = alpha_2, zeta = -rho:
// zeta_0 = rho, zeta_1 = s_2 rho, tau = s_1 s_2.
inline Sl3Dimensions sl3_dimensions(std::size_t n, std::uint64_t seed) {
  const CartanMatrix k = build_finite(Family::A, 2);
  const CartanMatrix l = build_finite(Family::A, 1);
  const Weight zeta0 = k.rho();
  const Weight zeta1 = act(k, WeylWord({1}), zeta0);
  auto ldim = [&](const Weight& w) { return weyl_dim(l, Weight(std::vector<std::int64_t>{w[0]})); };
  Sl3Dimensions d;
  d.n = n;
  for (std::size_t ones = 0; ones <= n; ++ones) {
    const Weight w = static_cast<std::int64_t>(n - ones) * zeta0 + static_cast<std::int64_t>(ones) * zeta1;
    d.multiset_sum += ldim(w);
    if (ones == n) d.ridge_sum += ldim(w);
  }
  d.demazure = character_dimension(demazure_character(k, WeylWord({0, 1}), static_cast<std::int64_t>(n) * k.rho()));
  d.restricted = restricted_span_dim(n, seed);
  return d;
}

}  // namespace pluck
