#pragma once

// Integer lattice model of a symmetrizable generalized Cartan matrix:
// weights as pairing vectors, roots in simple-root coordinates, Weyl words
// acting by simple reflections, lengths by descent, dominance, minimal coset
// representatives and finite-type root enumeration.
//
// Convention: a(i, j) = <alpha_i^vee, alpha_j>. A weight is stored as the
// vector of its pairings against all simple coroots, so two weights compare
// equal exactly when their pairings agree. The simple root alpha_i is column
// i of the matrix in these coordinates.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pluck/errors.hpp"
#include "pluck/rational.hpp"

namespace pluck {

enum class Family { A, B, C, D };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

inline Family parse_family(std::string_view s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw InvalidArgument("unknown family '" + std::string(s) + "'");
}

struct Weight {
  std::vector<std::int64_t> coords;

  Weight() = default;
  explicit Weight(std::size_t n) : coords(n, 0) {}
  explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}

  std::size_t size() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }

  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](auto x) { return x == 0; });
  }

  Weight& operator+=(const Weight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (auto& x : a.coords) x = -x;
    return a;
  }
  friend Weight operator*(std::int64_t k, Weight a) {
    for (auto& x : a.coords) x *= k;
    return a;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

inline std::string to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

// Element of the root lattice in simple-root coordinates.
struct RootVector {
  std::vector<std::int64_t> coords;

  RootVector() = default;
  explicit RootVector(std::size_t n) : coords(n, 0) {}
  explicit RootVector(std::vector<std::int64_t> c) : coords(std::move(c)) {}

  std::size_t size() const { return coords.size(); }
  std::int64_t operator[](std::size_t i) const { return coords[i]; }
  std::int64_t& operator[](std::size_t i) { return coords[i]; }

  std::int64_t height() const {
    std::int64_t h = 0;
    for (auto x : coords) h += x;
    return h;
  }
  // Sum of coordinates over the given nodes only.
  std::int64_t partial_height(const std::vector<std::size_t>& nodes) const {
    std::int64_t h = 0;
    for (auto i : nodes) h += coords[i];
    return h;
  }
  bool is_positive() const {
    return std::all_of(coords.begin(), coords.end(), [](auto x) { return x >= 0; }) &&
           std::any_of(coords.begin(), coords.end(), [](auto x) { return x > 0; });
  }

  friend RootVector operator+(RootVector a, const RootVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a.coords[i] += b.coords[i];
    return a;
  }
  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

// Product s_{l0} s_{l1} ... of simple reflections; acts rightmost first.
struct WeylWord {
  std::vector<std::size_t> letters;

  WeylWord() = default;
  explicit WeylWord(std::vector<std::size_t> l) : letters(std::move(l)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  // Concatenation: (a * b) acts as a after b.
  friend WeylWord operator*(WeylWord a, const WeylWord& b) {
    a.letters.insert(a.letters.end(), b.letters.begin(), b.letters.end());
    return a;
  }
  WeylWord inverse() const { return WeylWord({letters.rbegin(), letters.rend()}); }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

class CartanMatrix {
 public:
  CartanMatrix() = default;

  CartanMatrix(std::vector<std::vector<std::int64_t>> a, std::vector<std::string> labels)
      : a_(std::move(a)), labels_(std::move(labels)) {
    const std::size_t n = a_.size();
    if (labels_.size() != n) throw InvalidArgument("CartanMatrix: label count mismatch");
    for (std::size_t i = 0; i < n; ++i) {
      if (a_[i].size() != n) throw InvalidArgument("CartanMatrix: not square");
      if (a_[i][i] != 2) throw InvalidArgument("CartanMatrix: diagonal entry is not 2");
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (a_[i][j] > 0) throw InvalidArgument("CartanMatrix: positive off-diagonal entry");
        if ((a_[i][j] == 0) != (a_[j][i] == 0))
          throw InvalidArgument("CartanMatrix: zero pattern is not symmetric");
      }
    }
    symmetrizer_ = compute_symmetrizer();
  }

  std::size_t size() const { return a_.size(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_.at(i).at(j); }
  const std::vector<std::vector<std::int64_t>>& entries() const { return a_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    throw InvalidArgument("CartanMatrix: no node labelled '" + std::string(label) + "'");
  }

  void check_node(std::size_t i) const {
    if (i >= size()) throw InvalidArgument("node index " + std::to_string(i) + " out of range");
  }

  // Positive d with d_i a(i,j) = d_j a(j,i); d_i plays the role of
  // (alpha_i, alpha_i) / 2.
  const QVector& symmetrizer() const { return symmetrizer_; }

  Weight simple_root(std::size_t i) const {
    check_node(i);
    Weight w(size());
    for (std::size_t j = 0; j < size(); ++j) w[j] = a_[j][i];
    return w;
  }

  Weight fundamental(std::size_t i) const {
    check_node(i);
    Weight w(size());
    w[i] = 1;
    return w;
  }

  Weight rho() const { return Weight(std::vector<std::int64_t>(size(), 1)); }

  Weight zero_weight() const { return Weight(size()); }

  Weight to_weight(const RootVector& r) const {
    Weight w(size());
    for (std::size_t j = 0; j < size(); ++j)
      for (std::size_t i = 0; i < size(); ++i) w[j] += a_[j][i] * r[i];
    return w;
  }

  // <alpha_i^vee, beta> for beta in root coordinates.
  std::int64_t pairing(std::size_t i, const RootVector& beta) const {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < size(); ++k) s += a_[i][k] * beta[k];
    return s;
  }

  CartanMatrix transposed() const {
    std::vector<std::vector<std::int64_t>> t(size(), std::vector<std::int64_t>(size()));
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j) t[i][j] = a_[j][i];
    return CartanMatrix(std::move(t), labels_);
  }

  CartanMatrix restricted(const std::vector<std::size_t>& nodes) const {
    std::vector<std::vector<std::int64_t>> r(nodes.size(), std::vector<std::int64_t>(nodes.size()));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      check_node(nodes[i]);
      labels.push_back(labels_[nodes[i]]);
      for (std::size_t j = 0; j < nodes.size(); ++j) r[i][j] = a_[nodes[i]][nodes[j]];
    }
    return CartanMatrix(std::move(r), std::move(labels));
  }

  // Finite type iff the symmetrized matrix is positive definite.
  bool is_finite_type() const {
    const std::size_t n = size();
    QMatrix b(n, QVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i][j] = symmetrizer_[i] * Rational(a_[i][j]);
    for (std::size_t k = 1; k <= n; ++k) {
      QMatrix minor(k, QVector(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor[i][j] = b[i][j];
      if (sgn(determinant(minor)) <= 0) return false;
    }
    return true;
  }

  void require_finite(const char* op) const {
    if (!is_finite_type()) throw InvalidArgument(std::string(op) + ": Cartan matrix is not of finite type");
  }

  // Same entries; labels are ignored.
  bool same_entries(const CartanMatrix& o) const { return a_ == o.a_; }

 private:
  QVector compute_symmetrizer() const {
    const std::size_t n = size();
    QVector d(n, Rational(0));
    for (std::size_t start = 0; start < n; ++start) {
      if (sgn(d[start]) != 0) continue;
      d[start] = 1;
      std::deque<std::size_t> queue{start};
      while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i || a_[i][j] == 0) continue;
          const Rational want = d[i] * Rational(a_[i][j]) / Rational(a_[j][i]);
          if (sgn(d[j]) == 0) {
            d[j] = want;
            queue.push_back(j);
          } else if (d[j] != want) {
            throw InvalidArgument("CartanMatrix: not symmetrizable");
          }
        }
      }
    }
    return d;
  }

  std::vector<std::vector<std::int64_t>> a_;
  std::vector<std::string> labels_;
  QVector symmetrizer_;
};

// ---------------------------------------------------------------------------
// Construction

// Bourbaki numbering; node i (0-based) is alpha_{i+1}.
inline CartanMatrix build_finite(Family family, std::size_t rank) {
  const std::size_t minimum = family == Family::A ? 1 : family == Family::D ? 3 : 2;
  if (rank < minimum)
    throw InvalidArgument(std::string("rank ") + std::to_string(rank) + " out of range for type " +
                          family_letter(family));
  const std::size_t n = rank;
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  auto join = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };
  switch (family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) join(i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 1 < n; ++i) join(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < n; ++i) join(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) join(i, i + 1);
      join(n - 3, n - 1);
      break;
  }
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("a" + std::to_string(i));
  return CartanMatrix(std::move(a), std::move(labels));
}

// Node layout of the two-node extensions: alpha_0, beta_0, then alpha_1..alpha_l.
inline constexpr std::size_t kAlpha0 = 0;
inline constexpr std::size_t kBeta0 = 1;
inline constexpr std::size_t g_node(std::size_t i) { return i + 2; }  // 0-based node i of G

namespace detail {

inline CartanMatrix extend_two_nodes(const CartanMatrix& g, std::size_t alpha_attach,
                                     std::size_t beta_attach) {
  const std::size_t l = g.size();
  std::vector<std::vector<std::int64_t>> a(l + 2, std::vector<std::int64_t>(l + 2, 0));
  a[kAlpha0][kAlpha0] = a[kBeta0][kBeta0] = 2;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) a[i + 2][j + 2] = g(i, j);
  a[kAlpha0][g_node(alpha_attach)] = a[g_node(alpha_attach)][kAlpha0] = -1;
  a[kBeta0][g_node(beta_attach)] = a[g_node(beta_attach)][kBeta0] = -1;
  std::vector<std::string> labels{"alpha0", "beta0"};
  for (const auto& s : g.labels()) labels.push_back(s);
  return CartanMatrix(std::move(a), std::move(labels));
}

}  // namespace detail

// G of type A/B/C and rank l >= 2, with alpha_0 and beta_0 both joined to alpha_1.
inline CartanMatrix build_model_k(Family family, std::size_t rank) {
  if (family == Family::D) throw InvalidArgument("model construction is defined for types A, B, C");
  if (rank < 2) throw InvalidArgument("model construction needs rank >= 2");
  return detail::extend_two_nodes(build_finite(family, rank), 0, 0);
}

// B_n with alpha_0 joined to alpha_1 and beta_0 joined to alpha_{p-1}; 2 <= p <= n-2.
inline CartanMatrix build_sph_k(std::size_t n, std::size_t p) {
  if (p < 2 || p + 2 > n) throw InvalidArgument("sph extension needs 2 <= p <= n-2");
  return detail::extend_two_nodes(build_finite(Family::B, n), 0, p - 2);
}

// ---------------------------------------------------------------------------
// Weyl group action

inline Weight reflect(const CartanMatrix& gcm, std::size_t i, Weight lambda) {
  gcm.check_node(i);
  if (lambda.size() != gcm.size()) throw InvalidArgument("reflect: weight has wrong length");
  const std::int64_t p = lambda[i];
  if (p == 0) return lambda;
  for (std::size_t j = 0; j < gcm.size(); ++j) lambda[j] -= p * gcm(j, i);
  return lambda;
}

inline RootVector reflect_root(const CartanMatrix& gcm, std::size_t i, RootVector beta) {
  gcm.check_node(i);
  beta[i] -= gcm.pairing(i, beta);
  return beta;
}

inline Weight act(const CartanMatrix& gcm, const WeylWord& w, Weight lambda) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) lambda = reflect(gcm, *it, lambda);
  return lambda;
}

inline RootVector act(const CartanMatrix& gcm, const WeylWord& w, RootVector beta) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) beta = reflect_root(gcm, *it, beta);
  return beta;
}

inline bool is_dominant(const Weight& w) {
  return std::all_of(w.coords.begin(), w.coords.end(), [](auto x) { return x >= 0; });
}

// Reduced word for w obtained by repeatedly stripping a left descent: if
// <alpha_i^vee, w rho> < 0 then w^{-1}(alpha_i) is negative and
// l(s_i w) = l(w) - 1. The smallest such i is taken each time.
inline WeylWord reduced_word(const CartanMatrix& gcm, const WeylWord& w) {
  Weight mu = act(gcm, w, gcm.rho());
  WeylWord out;
  for (;;) {
    std::size_t i = 0;
    while (i < mu.size() && mu[i] >= 0) ++i;
    if (i == mu.size()) break;
    out.letters.push_back(i);
    mu = reflect(gcm, i, mu);
  }
  return out;
}

inline std::size_t length(const CartanMatrix& gcm, const WeylWord& w) {
  return reduced_word(gcm, w).size();
}

// Moves lambda into the dominant chamber of the subgroup generated by
// `nodes`; returns the dominant weight and the number of reflections used.
inline std::pair<Weight, std::size_t> dominant_conjugate(const CartanMatrix& gcm, Weight lambda,
                                                         const std::vector<std::size_t>& nodes) {
  std::size_t steps = 0;
  for (;;) {
    bool moved = false;
    for (auto i : nodes) {
      if (lambda[i] < 0) {
        lambda = reflect(gcm, i, lambda);
        ++steps;
        moved = true;
        break;
      }
    }
    if (!moved) return {lambda, steps};
    if (steps > 1000000) throw ResourceBound("dominant_conjugate: no dominant conjugate reached");
  }
}

inline std::vector<std::size_t> all_nodes(const CartanMatrix& gcm) {
  std::vector<std::size_t> v(gcm.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

inline std::pair<Weight, std::size_t> dominant_conjugate(const CartanMatrix& gcm, Weight lambda) {
  return dominant_conjugate(gcm, std::move(lambda), all_nodes(gcm));
}

// Orbit of lambda under the subgroup generated by `nodes`, sorted.
inline std::vector<Weight> weyl_orbit(const CartanMatrix& gcm, const Weight& lambda,
                                      const std::vector<std::size_t>& nodes,
                                      std::size_t max_size = 1u << 22) {
  std::set<Weight> seen{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight cur = std::move(queue.front());
    queue.pop_front();
    for (auto i : nodes) {
      Weight nxt = reflect(gcm, i, cur);
      if (seen.insert(nxt).second) {
        if (seen.size() > max_size) throw ResourceBound("weyl_orbit: orbit exceeds size bound");
        queue.push_back(std::move(nxt));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

// Minimal-length element of w W_subset, as a reduced word.
inline WeylWord min_coset_rep(const CartanMatrix& gcm, const WeylWord& w,
                              const std::vector<std::size_t>& subset) {
  WeylWord cur = reduced_word(gcm, w);
  for (;;) {
    const std::size_t len = cur.size();
    bool moved = false;
    for (auto j : subset) {
      gcm.check_node(j);
      WeylWord trial = cur * WeylWord({j});
      if (length(gcm, trial) < len) {
        cur = reduced_word(gcm, trial);
        moved = true;
        break;
      }
    }
    if (!moved) return cur;
  }
}

// Longest element of the finite parabolic subgroup generated by `subset`.
inline WeylWord longest_element(const CartanMatrix& gcm, const std::vector<std::size_t>& subset,
                                std::size_t max_length = 4096) {
  WeylWord cur;
  for (;;) {
    bool grew = false;
    for (auto j : subset) {
      WeylWord trial = cur * WeylWord({j});
      if (length(gcm, trial) > cur.size()) {
        cur = std::move(trial);
        grew = true;
        break;
      }
    }
    if (!grew) return cur;
    if (cur.size() > max_length) throw ResourceBound("longest_element: subgroup is not finite within bound");
  }
}

// ---------------------------------------------------------------------------
// Finite-type root data

// Root coordinates c with A c = lambda (rational; finite type only).
inline QVector root_coordinates(const CartanMatrix& gcm, const Weight& lambda) {
  gcm.require_finite("root_coordinates");
  const std::size_t n = gcm.size();
  QMatrix a(n, QVector(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) a[j][i] = Rational(gcm(j, i));
  QVector b(n);
  for (std::size_t j = 0; j < n; ++j) b[j] = Rational(lambda[j]);
  auto x = solve(a, b);
  if (!x) throw CertificationError("root_coordinates: finite Cartan matrix was singular");
  return *x;
}

// lambda <= mu iff mu - lambda is a nonnegative integer combination of simple roots.
inline bool dominance_leq(const CartanMatrix& gcm, const Weight& lambda, const Weight& mu) {
  gcm.require_finite("dominance_leq");
  for (const auto& c : root_coordinates(gcm, mu - lambda))
    if (!is_integer(c) || sgn(c) < 0) return false;
  return true;
}

// All positive roots, sorted by height then coordinates.
inline std::vector<RootVector> positive_roots(const CartanMatrix& gcm) {
  gcm.require_finite("positive_roots");
  const std::size_t n = gcm.size();
  std::set<RootVector> roots;
  std::deque<RootVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    RootVector r(n);
    r[i] = 1;
    roots.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    RootVector cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      RootVector nxt = reflect_root(gcm, i, cur);
      if (roots.insert(nxt).second) queue.push_back(std::move(nxt));
    }
  }
  std::vector<RootVector> pos;
  for (const auto& r : roots)
    if (r.is_positive()) pos.push_back(r);
  std::stable_sort(pos.begin(), pos.end(),
                   [](const RootVector& x, const RootVector& y) { return x.height() < y.height(); });
  return pos;
}

}  // namespace pluck
