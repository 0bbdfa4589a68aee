#pragma once

// Standard monomial theory for the Grassmannian Gr(k, n): Pluecker columns,
// tableaux (monomials in the Pluecker coordinates), Garnir straightening
// relations certified by evaluating minors of random matrices, enumeration
// of standard tableaux and Schubert / ridge restriction.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pluck/errors.hpp"
#include "pluck/rational.hpp"
#include "pluck/report.hpp"

namespace pluck {

struct Column {
  std::vector<unsigned> indices;  // strictly increasing, 1-based

  Column() = default;
  explicit Column(std::vector<unsigned> idx) : indices(std::move(idx)) {}

  std::size_t size() const { return indices.size(); }
  unsigned operator[](std::size_t i) const { return indices[i]; }

  void validate(std::size_t k, std::size_t n) const {
    if (indices.size() != k) throw InvalidArgument("column has " + std::to_string(indices.size()) + " entries, expected " + std::to_string(k));
    for (std::size_t i = 0; i < k; ++i) {
      if (indices[i] < 1 || indices[i] > n) throw InvalidArgument("column entry out of range 1.." + std::to_string(n));
      if (i && indices[i - 1] >= indices[i]) throw InvalidArgument("column entries must be strictly increasing");
    }
  }

  friend bool operator==(const Column&, const Column&) = default;
  friend auto operator<=>(const Column&, const Column&) = default;
};

inline std::string to_string(const Column& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

// Componentwise order.
inline bool leq_columns(const Column& a, const Column& b) {
  if (a.size() != b.size()) throw InvalidArgument("leq_columns: shape mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Monomial in Pluecker coordinates; columns kept sorted lexicographically.
class Tableau {
 public:
  Tableau() = default;
  Tableau(std::size_t k, std::size_t n, std::vector<Column> cols) : k_(k), n_(n), cols_(std::move(cols)) {
    for (const auto& c : cols_) c.validate(k, n);
    std::sort(cols_.begin(), cols_.end());
  }

  std::size_t k() const { return k_; }
  std::size_t n() const { return n_; }
  std::size_t degree() const { return cols_.size(); }
  const std::vector<Column>& columns() const { return cols_; }

  // Entries of all columns, sorted.
  std::vector<unsigned> content() const {
    std::vector<unsigned> c;
    for (const auto& col : cols_) c.insert(c.end(), col.indices.begin(), col.indices.end());
    std::sort(c.begin(), c.end());
    return c;
  }

  // Index of the first column not componentwise below its successor.
  std::optional<std::size_t> first_violation() const {
    for (std::size_t i = 0; i + 1 < cols_.size(); ++i)
      if (!leq_columns(cols_[i], cols_[i + 1])) return i;
    return std::nullopt;
  }

  bool is_standard() const { return !first_violation(); }

  // Replaces columns i and i+1 by the given pair.
  Tableau replaced(std::size_t i, const Column& a, const Column& b) const {
    std::vector<Column> cols = cols_;
    cols[i] = a;
    cols[i + 1] = b;
    return Tableau(k_, n_, std::move(cols));
  }

  Tableau times(const Tableau& o) const {
    if (o.k_ != k_ || o.n_ != n_) throw InvalidArgument("Tableau: shape mismatch");
    std::vector<Column> cols = cols_;
    cols.insert(cols.end(), o.cols_.begin(), o.cols_.end());
    return Tableau(k_, n_, std::move(cols));
  }

  // Monomial order: degree, then sorted content, then the column sequence.
  friend bool operator<(const Tableau& a, const Tableau& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto ca = a.content(), cb = b.content();
    if (ca != cb) return ca < cb;
    return a.cols_ < b.cols_;
  }
  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.cols_ == b.cols_;
  }

 private:
  std::size_t k_ = 0, n_ = 0;
  std::vector<Column> cols_;
};

inline bool is_standard(const Tableau& t) { return t.is_standard(); }

// Token format: "1,4|2,3". The empty token is the empty tableau.
inline std::string to_token(const Tableau& t) {
  std::string s;
  for (std::size_t i = 0; i < t.degree(); ++i) s += (i ? "|" : "") + to_string(t.columns()[i]);
  return s;
}

inline Tableau parse_tableau(const std::string& token, std::size_t k, std::size_t n) {
  std::vector<Column> cols;
  if (!token.empty()) {
    std::stringstream ss(token);
    std::string part;
    while (std::getline(ss, part, '|')) {
      std::vector<unsigned> idx;
      std::stringstream cs(part);
      std::string num;
      while (std::getline(cs, num, ',')) {
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
          throw InvalidArgument("bad tableau token '" + token + "'");
        idx.push_back(static_cast<unsigned>(std::stoul(num)));
      }
      cols.emplace_back(std::move(idx));
    }
    if (token.back() == '|') throw InvalidArgument("bad tableau token '" + token + "'");
  }
  return Tableau(k, n, std::move(cols));
}

using Combination = std::map<Tableau, Rational>;

inline void add_term(Combination& c, const Tableau& t, const Rational& x) {
  if (sgn(x) == 0) return;
  auto [it, inserted] = c.emplace(t, x);
  if (inserted) return;
  it->second += x;
  if (sgn(it->second) == 0) c.erase(it);
}

inline std::string to_string(const Combination& c) {
  if (c.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (!first) s += " + ";
    first = false;
    s += to_string(it->second) + "*[" + to_token(it->first) + "]";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Evaluation

inline std::vector<Column> all_columns(std::size_t k, std::size_t n);

// All k x k minors of an n x k matrix, keyed by row set.
class EvaluationPoint {
 public:
  EvaluationPoint(std::size_t k, std::size_t n, QMatrix m) : k_(k), n_(n), matrix_(std::move(m)) {
    if (matrix_.size() != n) throw InvalidArgument("EvaluationPoint: matrix must have n rows");
    for (const auto& row : matrix_)
      if (row.size() != k) throw InvalidArgument("EvaluationPoint: matrix must have k columns");
    for (const auto& c : all_columns(k, n)) {
      QMatrix sub;
      for (auto r : c.indices) sub.push_back(matrix_[r - 1]);
      minors_.emplace(c, determinant(std::move(sub)));
    }
  }

  const QMatrix& matrix() const { return matrix_; }

  const Rational& minor(const Column& c) const {
    auto it = minors_.find(c);
    if (it == minors_.end()) throw InvalidArgument("minor: column " + to_string(c) + " is not in Gr(k,n)");
    return it->second;
  }

  Rational evaluate(const Tableau& t) const {
    if (t.k() != k_ || t.n() != n_) throw InvalidArgument("evaluate: shape mismatch");
    Rational v = 1;
    for (const auto& c : t.columns()) v *= minor(c);
    return v;
  }

  Rational evaluate(const Combination& c) const {
    Rational v = 0;
    for (const auto& [t, x] : c) v += x * evaluate(t);
    return v;
  }

 private:
  std::size_t k_, n_;
  QMatrix matrix_;
  std::map<Column, Rational> minors_;
};

inline Rational evaluate(const Tableau& t, const QMatrix& m) {
  return EvaluationPoint(t.k(), t.n(), m).evaluate(t);
}

// All k-subsets of {1..n} as columns, lexicographic.
inline std::vector<Column> all_columns(std::size_t k, std::size_t n) {
  std::vector<Column> out;
  if (k > n || k == 0) return out;
  std::vector<unsigned> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<unsigned>(i + 1);
  for (;;) {
    out.emplace_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// Random integer matrices with entries in -9..9 whose k x k minors are all
// nonzero; degenerate draws are redrawn. Optionally restricted to a support
// pattern: column j may be nonzero only in rows <= support[j].
class MatrixSampler {
 public:
  MatrixSampler(std::size_t k, std::size_t n, std::uint64_t seed) : k_(k), n_(n), rng_(seed) {}

  EvaluationPoint draw() { return draw_with_support(std::vector<unsigned>(k_, static_cast<unsigned>(n_)), all_columns(k_, n_)); }

  // Generic point of the Schubert cell of c: entries of column j live in rows
  // <= c_j and the minors on row sets <= c are required nonzero.
  EvaluationPoint draw_schubert(const Column& c) {
    c.validate(k_, n_);
    std::vector<Column> below;
    for (const auto& b : all_columns(k_, n_))
      if (leq_columns(b, c)) below.push_back(b);
    return draw_with_support(c.indices, below);
  }

 private:
  EvaluationPoint draw_with_support(const std::vector<unsigned>& support, const std::vector<Column>& nonzero) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      QMatrix m(n_, QVector(k_, Rational(0)));
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < k_; ++j) {
          const std::int64_t x = static_cast<std::int64_t>(rng_() % 19) - 9;
          if (i < support[j]) m[i][j] = Rational(x);
        }
      EvaluationPoint p(k_, n_, std::move(m));
      bool ok = true;
      for (const auto& c : nonzero)
        if (sgn(p.minor(c)) == 0) {
          ok = false;
          break;
        }
      if (ok) return p;
    }
    throw CertificationError("MatrixSampler: no nondegenerate matrix found");
  }

  std::size_t k_, n_;
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Straightening

struct GarnirRelation {
  Column a, b;              // a <lex b, incomparable
  Combination rhs;          // a * b = rhs, every term standard or smaller
};

inline constexpr std::size_t kCertificationPoints = 20;

namespace detail {

inline int sort_sign(std::vector<unsigned>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] == v[i]) return 0;
  return sign;
}

}  // namespace detail

// Garnir relation at the first row r with a_r > b_r: the alternating sum over
// distributions of {a_r..a_k} u {b_1..b_r} between the two columns vanishes,
// and every term other than a * b itself is smaller in the monomial order.
inline GarnirRelation garnir_relation_uncertified(const Column& a0, const Column& b0, std::size_t n) {
  if (a0.size() != b0.size()) throw InvalidArgument("garnir_relation: shape mismatch");
  const Column& a = a0 < b0 ? a0 : b0;
  const Column& b = a0 < b0 ? b0 : a0;
  if (leq_columns(a, b)) throw InvalidArgument("garnir_relation: columns are comparable");
  const std::size_t k = a.size();
  std::size_t r = 0;
  while (a[r] <= b[r]) ++r;
  // L = (a_r..a_{k-1}, b_0..b_r), 0-based; X takes k-r of them into column a.
  std::vector<unsigned> pool(a.indices.begin() + static_cast<std::ptrdiff_t>(r), a.indices.end());
  pool.insert(pool.end(), b.indices.begin(), b.indices.begin() + static_cast<std::ptrdiff_t>(r + 1));
  const std::size_t m = pool.size(), take = k - r;
  std::vector<bool> chosen(m, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(take), true);
  Combination sum;
  do {
    std::vector<unsigned> x, y;
    // parity of moving the chosen elements to the front, order preserved
    std::size_t inversions = 0, skipped = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (chosen[i]) {
        x.push_back(pool[i]);
        inversions += skipped;
      } else {
        y.push_back(pool[i]);
        ++skipped;
      }
    }
    std::vector<unsigned> ca(a.indices.begin(), a.indices.begin() + static_cast<std::ptrdiff_t>(r));
    ca.insert(ca.end(), x.begin(), x.end());
    std::vector<unsigned> cb = y;
    cb.insert(cb.end(), b.indices.begin() + static_cast<std::ptrdiff_t>(r + 1), b.indices.end());
    const int sa = detail::sort_sign(ca), sb = detail::sort_sign(cb);
    if (sa == 0 || sb == 0) continue;
    const int s = (inversions % 2 ? -1 : 1) * sa * sb;
    add_term(sum, Tableau(k, n, {Column(ca), Column(cb)}), Rational(s));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  // sum = 0 as a polynomial identity; solve for a * b.
  const Tableau self(k, n, {a, b});
  Rational c0 = 0;
  Combination rhs;
  for (const auto& [t, c] : sum) {
    if (t == self) c0 += c;
    else add_term(rhs, t, c);
  }
  if (sgn(c0) == 0) throw CertificationError("garnir_relation: leading term cancelled");
  Combination out;
  for (const auto& [t, c] : rhs) {
    if (!(t < self)) throw CertificationError("garnir_relation: term " + to_token(t) + " is not smaller");
    add_term(out, t, -c / c0);
  }
  return {a, b, std::move(out)};
}

// Memoized, certified straightening in Gr(k, n).
class Straightener {
 public:
  Straightener(std::size_t k, std::size_t n, std::uint64_t seed = 0) : k_(k), n_(n) {
    if (k < 1 || k > n) throw InvalidArgument("Gr(k,n) needs 1 <= k <= n");
    MatrixSampler sampler(k, n, seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t i = 0; i < kCertificationPoints; ++i) points_.push_back(sampler.draw());
  }

  std::size_t k() const { return k_; }
  std::size_t n() const { return n_; }
  const std::vector<EvaluationPoint>& points() const { return points_; }
  std::size_t relations_cached() const { return cache_.size(); }

  const GarnirRelation& relation(const Column& a, const Column& b) {
    const auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    key.first.validate(k_, n_);
    key.second.validate(k_, n_);
    GarnirRelation rel = garnir_relation_uncertified(key.first, key.second, n_);
    const Tableau lhs(k_, n_, {rel.a, rel.b});
    for (const auto& p : points_)
      if (p.evaluate(lhs) != p.evaluate(rel.rhs))
        throw CertificationError("garnir_relation: evaluation mismatch for " + to_token(lhs));
    return cache_.emplace(key, std::move(rel)).first->second;
  }

  // Rewrites the largest nonstandard tableau first; each rewrite replaces it
  // by strictly smaller ones, so every tableau is visited at most once.
  Combination straighten(const Combination& input) {
    Combination work;
    for (const auto& [t, c] : input) {
      if (t.k() != k_ || t.n() != n_) throw InvalidArgument("straighten: tableau shape mismatch");
      add_term(work, t, c);
    }
    Combination out;
    while (!work.empty()) {
      auto it = std::prev(work.end());
      const Tableau t = it->first;
      const Rational c = it->second;
      work.erase(it);
      const auto v = t.first_violation();
      if (!v) {
        add_term(out, t, c);
        continue;
      }
      const std::size_t i = *v;
      const GarnirRelation& rel = relation(t.columns()[i], t.columns()[i + 1]);
      for (const auto& [pair, x] : rel.rhs) {
        const Tableau next = t.replaced(i, pair.columns()[0], pair.columns()[1]);
        if (!(next < t)) throw CertificationError("straighten: rewrite did not decrease " + to_token(t));
        add_term(work, next, c * x);
      }
    }
    return out;
  }

  Combination straighten(const Tableau& t) { return straighten(Combination{{t, Rational(1)}}); }

  // True when the combination agrees with the tableau at every certification point.
  bool certify(const Tableau& t, const Combination& c) const {
    for (const auto& p : points_)
      if (p.evaluate(t) != p.evaluate(c)) return false;
    return true;
  }

 private:
  std::size_t k_, n_;
  std::vector<EvaluationPoint> points_;
  std::map<std::pair<Column, Column>, GarnirRelation> cache_;
};

inline GarnirRelation garnir_relation(const Column& a, const Column& b, std::size_t n, std::uint64_t seed = 0) {
  Straightener s(a.size(), n, seed);
  return s.relation(a, b);
}

inline Combination straighten(const Tableau& t, std::uint64_t seed = 0) {
  Straightener s(t.k(), t.n(), seed);
  const Combination c = s.straighten(t);
  if (!s.certify(t, c)) throw CertificationError("straighten: result fails evaluation");
  return c;
}

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr std::size_t kMaxEnumeration = 1000000;

// Chains c_1 <= ... <= c_d of columns drawn from `allowed` (in lex order).
inline std::vector<Tableau> enumerate_chains(std::size_t k, std::size_t n, std::size_t d,
                                             const std::vector<Column>& allowed,
                                             std::size_t max_count = kMaxEnumeration) {
  std::vector<Tableau> out;
  std::vector<Column> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == d) {
      out.emplace_back(k, n, cur);
      if (out.size() > max_count) throw ResourceBound("enumerate_standard: count exceeds bound");
      return;
    }
    for (std::size_t i = start; i < allowed.size(); ++i) {
      if (!cur.empty() && !leq_columns(cur.back(), allowed[i])) continue;
      cur.push_back(allowed[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline std::vector<Tableau> enumerate_standard(std::size_t k, std::size_t n, std::size_t d,
                                               std::size_t max_count = kMaxEnumeration) {
  if (k < 1 || k > n) throw InvalidArgument("Gr(k,n) needs 1 <= k <= n");
  return enumerate_chains(k, n, d, all_columns(k, n), max_count);
}

// All monomials (multisets of columns) of degree d.
inline std::vector<Tableau> enumerate_monomials(std::size_t k, std::size_t n, std::size_t d,
                                                std::size_t max_count = kMaxEnumeration) {
  const auto cols = all_columns(k, n);
  std::vector<Tableau> out;
  std::vector<Column> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == d) {
      out.emplace_back(k, n, cur);
      if (out.size() > max_count) throw ResourceBound("enumerate_monomials: count exceeds bound");
      return;
    }
    for (std::size_t i = start; i < cols.size(); ++i) {
      cur.push_back(cols[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline Column min_column(std::size_t k) {
  std::vector<unsigned> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<unsigned>(i + 1);
  return Column(std::move(idx));
}

inline std::vector<Column> schubert_restrict(const Column& c, std::size_t k, std::size_t n) {
  c.validate(k, n);
  std::vector<Column> out;
  for (const auto& b : all_columns(k, n))
    if (leq_columns(b, c)) out.push_back(b);
  return out;
}

inline std::vector<Column> ridge_restrict(const Column& c, std::size_t k, std::size_t n) {
  std::vector<Column> out = schubert_restrict(c, k, n);
  std::erase(out, min_column(k));
  return out;
}

// Rank of the evaluation vectors of the given tableaux at `points` sample matrices.
inline std::size_t evaluation_rank(const std::vector<Tableau>& ts, const std::vector<EvaluationPoint>& points) {
  RowSpace space(points.size());
  for (const auto& t : ts) {
    QVector row;
    row.reserve(points.size());
    for (const auto& p : points) row.push_back(p.evaluate(t));
    space.insert(row);
  }
  return space.dim();
}

inline std::vector<EvaluationPoint> sample_points(std::size_t k, std::size_t n, std::size_t count, std::uint64_t seed) {
  MatrixSampler s(k, n, seed);
  std::vector<EvaluationPoint> pts;
  for (std::size_t i = 0; i < count; ++i) pts.push_back(s.draw());
  return pts;
}

// Weyl dimension of d * omega_k for SL(n), by the hook-content formula on a
// k x d rectangle: prod (n + j - i) / (i + j - 1) over cells (i, j).
inline mpz_class rectangle_dim(std::size_t k, std::size_t n, std::size_t d) {
  mpz_class num = 1, den = 1;
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= d; ++j) {
      num *= static_cast<unsigned long>(n + j - i);
      den *= static_cast<unsigned long>((k - i) + (d - j) + 1);
    }
  return num / den;
}

inline CheckRecord verify_basis(std::size_t k, std::size_t n, std::size_t d, std::uint64_t seed = 0,
                                std::size_t max_count = 2000) {
  CheckRecord rec = make_record("basis", "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")", n - 1);
  const auto standard = enumerate_standard(k, n, d, max_count);
  const auto monomials = enumerate_monomials(k, n, d, max_count);
  const auto points = sample_points(k, n, monomials.size() + 5, seed);
  const std::size_t rank_std = evaluation_rank(standard, points);
  const std::size_t rank_all = evaluation_rank(monomials, points);
  rec.witness["degree"] = d;
  rec.witness["standardCount"] = standard.size();
  rec.witness["standardRank"] = rank_std;
  rec.witness["monomialCount"] = monomials.size();
  rec.witness["relationCount"] = monomials.size() - rank_all;
  expect(rec, rank_std == standard.size(), "standard monomials are dependent");
  expect(rec, rank_all == rank_std, "standard monomials do not span");
  return rec;
}

// Dimension of the degree-3 span of {p_c * R_{a,b}} over all columns c and
// incomparable pairs (a, b), R_{a,b} = p_a p_b - (straightened side), in the
// basis of degree-3 monomials.
inline std::size_t degree3_relation_rank(Straightener& s) {
  const auto cols = all_columns(s.k(), s.n());
  const auto monomials = enumerate_monomials(s.k(), s.n(), 3);
  std::map<Tableau, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index[monomials[i]] = i;
  RowSpace space(monomials.size());
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      if (leq_columns(cols[i], cols[j])) continue;
      const GarnirRelation& rel = s.relation(cols[i], cols[j]);
      const Tableau lhs(s.k(), s.n(), {rel.a, rel.b});
      for (const auto& c : cols) {
        const Tableau pc(s.k(), s.n(), {c});
        QVector row(monomials.size(), Rational(0));
        row[index.at(lhs.times(pc))] += 1;
        for (const auto& [t, x] : rel.rhs) row[index.at(t.times(pc))] -= x;
        space.insert(row);
      }
    }
  return space.dim();
}

}  // namespace pluck
