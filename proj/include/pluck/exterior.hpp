#pragma once

// Exterior algebra of a rational vector space with basis e_1..e_N.
// Elements are sparse maps from strictly increasing index tuples to
// coefficients. Also: contraction against a symplectic form, projection onto
// the primitive part, and the invariants h_i of the model and sph varieties.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pluck/errors.hpp"
#include "pluck/rational.hpp"
#include "pluck/report.hpp"
#include "pluck/root_system.hpp"

namespace pluck {

using IndexTuple = std::vector<unsigned>;  // 1-based, strictly increasing

class ExtElement {
 public:
  ExtElement() = default;
  explicit ExtElement(std::size_t n) : n_(n) {}

  static ExtElement scalar(std::size_t n, const Rational& c) {
    ExtElement x(n);
    x.add(IndexTuple{}, c);
    return x;
  }

  static ExtElement basis(std::size_t n, IndexTuple idx, const Rational& c = 1) {
    ExtElement x(n);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] < 1 || idx[i] > n) throw InvalidArgument("ExtElement: index out of range");
      if (i && idx[i - 1] >= idx[i]) throw InvalidArgument("ExtElement: indices not strictly increasing");
    }
    x.add(std::move(idx), c);
    return x;
  }

  static ExtElement vector(std::size_t n, unsigned i) { return basis(n, {i}); }

  std::size_t ambient() const { return n_; }
  const std::map<IndexTuple, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const IndexTuple& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Degree of a homogeneous element; nullopt for zero or mixed degree.
  std::optional<std::size_t> degree() const {
    if (terms_.empty()) return std::nullopt;
    const std::size_t d = terms_.begin()->first.size();
    for (const auto& [k, c] : terms_)
      if (k.size() != d) return std::nullopt;
    return d;
  }

  void add(IndexTuple idx, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(idx), c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }

  ExtElement& operator+=(const ExtElement& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  ExtElement& operator-=(const ExtElement& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator*(const Rational& c, ExtElement a) {
    if (sgn(c) == 0) return ExtElement(a.n_);
    for (auto& [k, v] : a.terms_) v *= c;
    return a;
  }
  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  void check_same(const ExtElement& o) const {
    if (n_ != o.n_) throw InvalidArgument("ExtElement: ambient dimension mismatch");
  }

 private:
  std::size_t n_ = 0;
  std::map<IndexTuple, Rational> terms_;
};

inline std::string to_string(const ExtElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    if (!first) s += " + ";
    first = false;
    s += to_string(c);
    if (k.empty()) continue;
    s += "*e";
    for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "^" : "") + std::to_string(k[i]);
  }
  return s;
}

namespace detail {

// Sign of the permutation sorting a ++ b, or 0 if they share an index.
inline int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0, inversions = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      inversions += a.size() - i;
      out.push_back(b[j++]);
    } else {
      return 0;
    }
  }
  return inversions % 2 ? -1 : 1;
}

}  // namespace detail

inline ExtElement wedge(const ExtElement& x, const ExtElement& y) {
  x.check_same(y);
  ExtElement out(x.ambient());
  IndexTuple merged;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      const int s = detail::merge_sign(a, b, merged);
      if (s != 0) out.add(merged, s > 0 ? Rational(ca * cb) : Rational(-(ca * cb)));
    }
  return out;
}

inline ExtElement wedge_power(const ExtElement& x, std::size_t k) {
  ExtElement out = ExtElement::scalar(x.ambient(), 1);
  for (std::size_t i = 0; i < k; ++i) out = wedge(out, x);
  return out;
}

// All k-subsets of {1..n} in lexicographic order.
inline std::vector<IndexTuple> index_tuples(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > n) return out;
  IndexTuple cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<unsigned>(i + 1);
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Forms

struct BilinearFormSpec {
  enum class Kind { Symmetric, Symplectic };

  QMatrix gram;
  Kind kind = Kind::Symmetric;

  BilinearFormSpec() = default;
  BilinearFormSpec(QMatrix g, Kind k) : gram(std::move(g)), kind(k) {
    const std::size_t n = gram.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (gram[i].size() != n) throw InvalidArgument("BilinearFormSpec: gram matrix is not square");
      for (std::size_t j = 0; j < n; ++j) {
        const Rational want = kind == Kind::Symmetric ? gram[j][i] : -gram[j][i];
        if (gram[i][j] != want) throw InvalidArgument("BilinearFormSpec: gram matrix has the wrong symmetry");
      }
    }
    if (sgn(determinant(gram)) == 0) throw InvalidArgument("BilinearFormSpec: form is degenerate");
  }

  std::size_t dim() const { return gram.size(); }
  // 1-based indices.
  const Rational& operator()(unsigned i, unsigned j) const { return gram[i - 1][j - 1]; }
};

// Coefficient matrix P of a bivector: P[i][j] = coefficient of e_i ^ e_j, antisymmetric.
inline QMatrix bivector_matrix(const ExtElement& a) {
  const std::size_t n = a.ambient();
  QMatrix p(n, QVector(n, Rational(0)));
  for (const auto& [k, c] : a.terms()) {
    if (k.size() != 2) throw InvalidArgument("bivector_matrix: element is not of degree 2");
    p[k[0] - 1][k[1] - 1] = c;
    p[k[1] - 1][k[0] - 1] = -c;
  }
  return p;
}

inline ExtElement bivector_from_matrix(const QMatrix& p) {
  const std::size_t n = p.size();
  ExtElement a(n);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) a.add({i, j}, p[i - 1][j - 1]);
  return a;
}

// Form dual to a nondegenerate bivector a: gram = P^{-T}, so that the
// contraction of a is half the dimension.
inline BilinearFormSpec dual_form(const ExtElement& a) {
  const QMatrix p = bivector_matrix(a);
  if (sgn(determinant(p)) == 0) throw InvalidArgument("dual_form: bivector is degenerate");
  return BilinearFormSpec(transpose(inverse(p)), BilinearFormSpec::Kind::Symplectic);
}

// Inverse of dual_form.
inline ExtElement form_bivector(const BilinearFormSpec& form) {
  if (form.kind != BilinearFormSpec::Kind::Symplectic) throw InvalidArgument("form_bivector: form is not symplectic");
  return bivector_from_matrix(inverse(transpose(form.gram)));
}

// e_{i_1} ^ ... ^ e_{i_k} -> sum_{a<b} (-1)^{a+b+1} omega(e_{i_a}, e_{i_b}) (the rest).
inline ExtElement contraction(const BilinearFormSpec& form, const ExtElement& x) {
  if (form.kind != BilinearFormSpec::Kind::Symplectic) throw InvalidArgument("contraction: form is not symplectic");
  if (form.dim() != x.ambient()) throw InvalidArgument("contraction: dimension mismatch");
  ExtElement out(x.ambient());
  for (const auto& [k, c] : x.terms()) {
    if (k.size() < 2) throw InvalidArgument("contraction: degree < 2");
    for (std::size_t a = 0; a < k.size(); ++a)
      for (std::size_t b = a + 1; b < k.size(); ++b) {
        const Rational& w = form(k[a], k[b]);
        if (sgn(w) == 0) continue;
        IndexTuple rest;
        for (std::size_t t = 0; t < k.size(); ++t)
          if (t != a && t != b) rest.push_back(k[t]);
        // positions are 1-based in the sign: (a+1) + (b+1) + 1
        out.add(std::move(rest), (a + b + 1) % 2 ? Rational(-(c * w)) : Rational(c * w));
      }
  }
  return out;
}

// Matrix of the contraction from degree i to degree i-2 in the index_tuples bases.
inline QMatrix contraction_matrix(const BilinearFormSpec& form, std::size_t i) {
  if (i < 2) throw InvalidArgument("contraction_matrix: degree < 2");
  const std::size_t n = form.dim();
  const auto src = index_tuples(n, i);
  const auto dst = index_tuples(n, i - 2);
  std::map<IndexTuple, std::size_t> row;
  for (std::size_t r = 0; r < dst.size(); ++r) row[dst[r]] = r;
  QMatrix m(dst.size(), QVector(src.size(), Rational(0)));
  for (std::size_t c = 0; c < src.size(); ++c) {
    const ExtElement image = contraction(form, ExtElement::basis(n, src[c]));
    for (const auto& [k, v] : image.terms()) m[row.at(k)][c] = v;
  }
  return m;
}

// Component of x in the kernel of the contraction along the decomposition
// Lambda^i = a ^ Lambda^{i-2} (+) ker(contraction), a the bivector of the form.
// Found by solving contraction(a ^ y) = contraction(x) for y.
inline ExtElement sp_projection(std::size_t i, const ExtElement& x, const BilinearFormSpec& form) {
  if (x.is_zero() || i < 2) {
    if (!x.is_zero() && x.degree() != i) throw InvalidArgument("sp_projection: degree mismatch");
    return x;
  }
  if (x.degree() != i) throw InvalidArgument("sp_projection: degree mismatch");
  const std::size_t n = form.dim();
  if (2 * i > n + 2) throw InvalidArgument("sp_projection: degree exceeds half the dimension");
  const ExtElement a = form_bivector(form);
  const auto unknowns = index_tuples(n, i - 2);
  const auto rows = index_tuples(n, i - 2);
  std::map<IndexTuple, std::size_t> row;
  for (std::size_t r = 0; r < rows.size(); ++r) row[rows[r]] = r;
  QMatrix m(rows.size(), QVector(unknowns.size(), Rational(0)));
  for (std::size_t c = 0; c < unknowns.size(); ++c) {
    const ExtElement image = contraction(form, wedge(a, ExtElement::basis(n, unknowns[c])));
    for (const auto& [k, v] : image.terms()) m[row.at(k)][c] = v;
  }
  QVector rhs(rows.size(), Rational(0));
  const ExtElement cx = contraction(form, x);
  for (const auto& [k, v] : cx.terms()) rhs[row.at(k)] = v;
  const auto y = solve(m, rhs);
  if (!y) throw CertificationError("sp_projection: projection system is singular");
  ExtElement ylift(n);
  for (std::size_t c = 0; c < unknowns.size(); ++c) ylift.add(unknowns[c], (*y)[c]);
  ExtElement out = x - wedge(a, ylift);
  if (!contraction(form, out).is_zero()) throw CertificationError("sp_projection: result is not primitive");
  return out;
}

// c with y = c x, if one exists (x nonzero).
inline std::optional<Rational> proportionality(const ExtElement& y, const ExtElement& x) {
  if (x.is_zero()) return std::nullopt;
  const auto& [k0, c0] = *x.terms().begin();
  const Rational c = y.coefficient(k0) / c0;
  if (!(c * x == y)) return std::nullopt;
  return c;
}

// ---------------------------------------------------------------------------
// Invariants h_i

// Ambient data of a model variety: V with its pinned basis, the special
// vector v, the bivector whose powers give h_{2i}, and for Sp the form.
struct ModelSpace {
  Family family = Family::A;
  std::size_t rank = 0;
  std::size_t dim = 0;
  ExtElement v;
  ExtElement a;  // a_W; a_V for SL(2n); a_{W_1} for Sp
  std::optional<BilinearFormSpec> form;  // Sp only: dual of a_V
};

inline constexpr std::size_t kMaxExteriorDim = 12;

// Sum e_{off+j} ^ e_{off+m+j}, j = 1..m.
inline ExtElement standard_bivector(std::size_t n, unsigned off, unsigned m) {
  ExtElement a(n);
  for (unsigned j = 1; j <= m; ++j) a.add({off + j, off + m + j}, 1);
  return a;
}

// Bases: SL(2n+1) and SO(2l+1) use W, W*, v; SL(2n) uses e_1..e_2n with
// v = e_1; Sp(2l) uses U_1, U_1*, U_2, U_2* with v = e_1.
inline ModelSpace model_space(Family family, std::size_t rank) {
  ModelSpace s;
  s.family = family;
  s.rank = rank;
  const unsigned l = static_cast<unsigned>(rank);
  switch (family) {
    case Family::A:
      if (rank < 2) throw InvalidArgument("model invariants need rank >= 2");
      if (l % 2 == 0) {
        s.dim = l + 1;
        s.a = standard_bivector(s.dim, 0, l / 2);
        s.v = ExtElement::vector(s.dim, l + 1);
      } else {
        s.dim = l + 1;
        s.a = standard_bivector(s.dim, 0, (l + 1) / 2);
        s.v = ExtElement::vector(s.dim, 1);
      }
      break;
    case Family::B:
      if (rank < 2) throw InvalidArgument("model invariants need rank >= 2");
      s.dim = 2 * l + 1;
      s.a = standard_bivector(s.dim, 0, l);
      s.v = ExtElement::vector(s.dim, 2 * l + 1);
      break;
    case Family::C: {
      if (rank < 2) throw InvalidArgument("model invariants need rank >= 2");
      s.dim = 2 * l;
      const unsigned m1 = l % 2 == 0 ? l / 2 : (l + 1) / 2;
      const unsigned m2 = l - m1;
      s.a = standard_bivector(s.dim, 0, m1);
      const ExtElement a_v = s.a + standard_bivector(s.dim, 2 * m1, m2);
      s.form = dual_form(a_v);
      s.v = ExtElement::vector(s.dim, 1);
      break;
    }
    case Family::D:
      throw InvalidArgument("model invariants are defined for types A, B, C");
  }
  if (s.dim > kMaxExteriorDim)
    throw ResourceBound("dim V = " + std::to_string(s.dim) + " exceeds bound " + std::to_string(kMaxExteriorDim));
  return s;
}

inline ExtElement project_if_sp(const ModelSpace& s, std::size_t degree, const ExtElement& x) {
  return s.form ? sp_projection(degree, x, *s.form) : x;
}

// h_1..h_l; entry i-1 holds h_i.
inline std::vector<ExtElement> model_invariants(const ModelSpace& s) {
  std::vector<ExtElement> h;
  for (std::size_t i = 1; i <= s.rank; ++i) {
    ExtElement x = wedge_power(s.a, i / 2);
    if (i % 2 == 1) x = wedge(s.v, x);
    h.push_back(project_if_sp(s, i, x));
  }
  return h;
}

inline std::vector<ExtElement> model_invariants(Family family, std::size_t rank) {
  return model_invariants(model_space(family, rank));
}

struct Mod2Pair {
  std::size_t left, right, target;
};

// (2, i) -> i+2 and (1, 2i) -> 2i+1, targets <= l.
inline std::vector<Mod2Pair> mod2_pairs(std::size_t rank) {
  std::vector<Mod2Pair> out;
  for (std::size_t i = 1; i + 2 <= rank; ++i) out.push_back({2, i, i + 2});
  for (std::size_t i = 1; 2 * i + 1 <= rank; ++i) out.push_back({1, 2 * i, 2 * i + 1});
  return out;
}

inline std::string model_group_name(Family family, std::size_t rank) {
  switch (family) {
    case Family::A: return "SL(" + std::to_string(rank + 1) + ")";
    case Family::B: return "SO(" + std::to_string(2 * rank + 1) + ")";
    case Family::C: return "Sp(" + std::to_string(2 * rank) + ")";
    case Family::D: break;
  }
  return "?";
}

inline CheckRecord verify_mod2(Family family, std::size_t rank) {
  CheckRecord rec = make_record("mod2", std::string(1, family_letter(family)), rank);
  const ModelSpace s = model_space(family, rank);
  const auto h = model_invariants(s);
  rec.witness["group"] = model_group_name(family, rank);
  Json nonzero = Json::array();
  for (std::size_t i = 0; i < h.size(); ++i) {
    nonzero.push_back(!h[i].is_zero());
    expect(rec, !h[i].is_zero(), "h" + std::to_string(i + 1) + " is zero");
  }
  rec.witness["hNonzero"] = nonzero;
  Json scalars = Json::array();
  for (const auto& pr : mod2_pairs(rank)) {
    const ExtElement product = project_if_sp(s, pr.target, wedge(h[pr.left - 1], h[pr.right - 1]));
    const ExtElement& target = h[pr.target - 1];
    const auto c = proportionality(product, target);
    Json entry;
    entry["pair"] = {pr.left, pr.right};
    entry["target"] = pr.target;
    const std::string tag = "h" + std::to_string(pr.left) + "*h" + std::to_string(pr.right);
    if (!c) {
      entry["scalar"] = nullptr;
      fail(rec, tag + " is not a multiple of h" + std::to_string(pr.target));
    } else {
      entry["scalar"] = to_string(*c);
      expect(rec, sgn(*c) != 0, tag + " vanishes");
    }
    scalars.push_back(entry);
  }
  rec.witness["products"] = scalars;
  return rec;
}

// V = U (+) U* (+) W (+) k v for the sph family: U = e_1..e_p, U* = e_{p+1}..e_{2p},
// W = e_{2p+1}..e_{2n}, v = e_{2n+1}.
struct SphSpace {
  std::size_t n = 0, p = 0, dim = 0;
  BilinearFormSpec form;  // B
  ExtElement h1, h2;
};

inline SphSpace sph_space(std::size_t n, std::size_t p) {
  if (p < 2 || p + 2 > n) throw InvalidArgument("sph family needs 2 <= p <= n-2");
  SphSpace s;
  s.n = n;
  s.p = p;
  s.dim = 2 * n + 1;
  if (s.dim > kMaxExteriorDim)
    throw ResourceBound("dim V = " + std::to_string(s.dim) + " exceeds bound " + std::to_string(kMaxExteriorDim));
  QMatrix g(s.dim, QVector(s.dim, Rational(0)));
  for (std::size_t j = 0; j < p; ++j) g[j][p + j] = g[p + j][j] = 1;
  for (std::size_t j = 2 * p; j < s.dim; ++j) g[j][j] = 1;
  s.form = BilinearFormSpec(std::move(g), BilinearFormSpec::Kind::Symmetric);
  s.h1 = ExtElement::vector(s.dim, static_cast<unsigned>(s.dim));
  IndexTuple u;
  for (unsigned j = 1; j <= p; ++j) u.push_back(j);
  s.h2 = ExtElement::basis(s.dim, u);
  return s;
}

inline CheckRecord verify_sph2(std::size_t n, std::size_t p) {
  CheckRecord rec = make_record("sph2", "sph(" + std::to_string(n) + "," + std::to_string(p) + ")", n);
  const SphSpace s = sph_space(n, p);
  bool isotropic = true, orthogonal = true;
  for (unsigned i = 1; i <= p; ++i) {
    for (unsigned j = 1; j <= p; ++j) isotropic = isotropic && sgn(s.form(i, j)) == 0;
    orthogonal = orthogonal && sgn(s.form(i, static_cast<unsigned>(s.dim))) == 0;
  }
  expect(rec, isotropic, "U is not isotropic");
  expect(rec, orthogonal, "v is not orthogonal to U");
  expect(rec, sgn(s.form(static_cast<unsigned>(s.dim), static_cast<unsigned>(s.dim))) != 0, "v is isotropic");
  const ExtElement h3 = wedge(s.h1, s.h2);
  expect(rec, !s.h2.is_zero(), "h2 is zero");
  expect(rec, !h3.is_zero(), "h1 ^ h2 vanishes");
  rec.witness["p"] = p;
  rec.witness["h2"] = to_string(s.h2);
  rec.witness["h3"] = to_string(h3);
  return rec;
}

}  // namespace pluck
