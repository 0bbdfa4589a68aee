#pragma once

// Weight-level checks for the two-node extensions: spherical generators and
// grado, H1 and H5, mod3 / sph3, the w-sequence with its four conditions,
// the lemK weight identities and the lemIP6 orbit and root enumerations.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pluck/errors.hpp"
#include "pluck/rational.hpp"
#include "pluck/rep_theory.hpp"
#include "pluck/report.hpp"
#include "pluck/root_system.hpp"

namespace pluck {

struct SphericalData {
  std::string family;  // "A", "B", "C" or "sph(n,p)"
  std::size_t rank = 0;
  std::size_t p = 0;  // sph family only
  CartanMatrix g;
  std::vector<Weight> generators;       // eps_1..eps_r
  std::vector<std::int64_t> grado_values;  // grado(eps_h) = h

  bool is_sph() const { return p != 0; }

  // Coefficients of lambda in the generator basis, if lambda lies in the
  // rational span.
  std::optional<QVector> rational_coefficients(const Weight& lambda) const {
    QMatrix m(g.size(), QVector(generators.size()));
    QVector b(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t h = 0; h < generators.size(); ++h) m[i][h] = Rational(generators[h][i]);
      b[i] = Rational(lambda[i]);
    }
    return solve(m, b);
  }

  // Coefficients of lambda as a monoid element, if it is one.
  std::optional<std::vector<std::int64_t>> coefficients(const Weight& lambda) const {
    const auto c = rational_coefficients(lambda);
    if (!c) return std::nullopt;
    std::vector<std::int64_t> out;
    for (const auto& x : *c) {
      if (!is_integer(x) || sgn(x) < 0) return std::nullopt;
      out.push_back(x.get_num().get_si());
    }
    return out;
  }

  bool in_monoid(const Weight& lambda) const { return coefficients(lambda).has_value(); }

  Weight combination(const std::vector<std::int64_t>& a) const {
    Weight w = g.zero_weight();
    for (std::size_t h = 0; h < a.size(); ++h) w += a[h] * generators[h];
    return w;
  }
};

inline SphericalData generators(Family family, std::size_t rank) {
  SphericalData d;
  d.family = family_tag(family);
  d.rank = rank;
  d.g = build_finite(family, rank);
  d.generators = model_epsilons(family, rank);
  for (std::size_t h = 1; h <= rank; ++h) d.grado_values.push_back(static_cast<std::int64_t>(h));
  return d;
}

inline std::string sph_tag(std::size_t n, std::size_t p) {
  return "sph(" + std::to_string(n) + "," + std::to_string(p) + ")";
}

inline SphericalData sph_generators(std::size_t n, std::size_t p) {
  SphericalData d;
  d.family = sph_tag(n, p);
  d.rank = n;
  d.p = p;
  d.g = build_finite(Family::B, n);
  d.generators = sph_epsilons(n, p);
  d.grado_values = {1, 2, 3};
  return d;
}

// H1 witness: the generators are linearly independent.
inline CheckRecord check_H1(const SphericalData& d) {
  CheckRecord rec = make_record("H1", d.family, d.rank);
  QMatrix m;
  for (const auto& e : d.generators) {
    QVector row;
    for (auto x : e.coords) row.push_back(Rational(x));
    m.push_back(row);
  }
  const std::size_t r = rank(m);
  rec.witness["generatorRank"] = r;
  rec.witness["generators"] = Json::array();
  for (const auto& e : d.generators) rec.witness["generators"].push_back(to_string(e));
  expect(rec, r == d.generators.size(), "generators are linearly dependent");
  return rec;
}

inline std::int64_t grado(const SphericalData& d, const Weight& lambda) {
  const auto c = d.coefficients(lambda);
  if (!c) throw InvalidArgument("grado: " + to_string(lambda) + " is not in the generator monoid");
  std::int64_t s = 0;
  for (std::size_t h = 0; h < c->size(); ++h) s += (*c)[h] * d.grado_values[h];
  return s;
}

// grado extended linearly to the simple roots alpha_1..alpha_l.
inline QVector grado_on_roots(const SphericalData& d) {
  QVector out;
  for (std::size_t i = 0; i < d.g.size(); ++i) {
    const auto c = d.rational_coefficients(d.g.simple_root(i));
    if (!c) throw InvalidArgument("grado_on_roots: generators do not span alpha_" + std::to_string(i + 1));
    Rational s = 0;
    for (std::size_t h = 0; h < c->size(); ++h) s += (*c)[h] * Rational(d.grado_values[h]);
    out.push_back(s);
  }
  return out;
}

inline CheckRecord check_grado_roots(const SphericalData& d) {
  CheckRecord rec = make_record("grado-roots", d.family, d.rank);
  const QVector v = grado_on_roots(d);
  Json vals = Json::array();
  for (const auto& x : v) vals.push_back(to_string(x));
  rec.witness["grado"] = vals;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    expect(rec, sgn(v[i]) == 0, "grado(alpha_" + std::to_string(i + 1) + ") != 0");
  expect(rec, sgn(v.back()) > 0, "grado(alpha_l) is not positive");
  return rec;
}

// All coefficient vectors in {0..bound}^r.
inline std::vector<std::vector<std::int64_t>> coefficient_box(std::size_t r, std::int64_t bound) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(r, 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < r && cur[i] == bound) cur[i++] = 0;
    if (i == r) break;
    ++cur[i];
  }
  return out;
}

// grado(nu) <= grado(lambda) + grado(mu) for all monoid elements nu <= lambda + mu.
inline std::int64_t default_H5_bound(std::size_t rank) { return rank <= 5 ? 2 : 1; }

inline CheckRecord check_H5(const SphericalData& d, std::int64_t bound = 2, std::size_t max_triples = 20000000) {
  CheckRecord rec = make_record("H5", d.family, d.rank);
  if (bound < 0 || bound > 4) throw InvalidArgument("check_H5: bound must be in 0..4");
  const auto box = coefficient_box(d.generators.size(), bound);
  struct Below {
    std::size_t count = 0;
    std::int64_t max_grado = std::numeric_limits<std::int64_t>::min();
    Weight argmax;
  };
  std::map<Weight, Below> below_cache;
  std::map<Weight, std::optional<std::int64_t>> grado_cache;
  auto grado_of = [&](const Weight& nu) -> std::optional<std::int64_t> {
    auto it = grado_cache.find(nu);
    if (it != grado_cache.end()) return it->second;
    std::optional<std::int64_t> g;
    if (d.in_monoid(nu)) g = grado(d, nu);
    return grado_cache.emplace(nu, g).first->second;
  };
  std::size_t triples = 0;
  for (std::size_t x = 0; x < box.size(); ++x)
    for (std::size_t y = x; y < box.size(); ++y) {
      const Weight lambda = d.combination(box[x]), mu = d.combination(box[y]);
      const Weight top = lambda + mu;
      const std::int64_t budget = grado(d, lambda) + grado(d, mu);
      auto it = below_cache.find(top);
      if (it == below_cache.end()) {
        Below b;
        for (const auto& nu : dominant_weights_below(d.g, top)) {
          const auto g = grado_of(nu);
          if (!g) continue;
          ++b.count;
          if (*g > b.max_grado) {
            b.max_grado = *g;
            b.argmax = nu;
          }
        }
        it = below_cache.emplace(top, std::move(b)).first;
      }
      triples += it->second.count;
      if (triples > max_triples) throw ResourceBound("check_H5: more than " + std::to_string(max_triples) + " triples");
      if (it->second.count > 0 && it->second.max_grado > budget && rec.passed())
        fail(rec, "grado(" + to_string(it->second.argmax) + ") > grado(" + to_string(lambda) + ") + grado(" +
                      to_string(mu) + ")");
    }
  rec.witness["bound"] = bound;
  rec.witness["triples"] = triples;
  return rec;
}

// u_i = s_1 s_2 ... s_i in G-node letters (0-based).
inline WeylWord mod3_word(std::size_t i) {
  WeylWord w;
  for (std::size_t j = 0; j < i; ++j) w.letters.push_back(j);
  return w;
}

inline CheckRecord check_mod3(Family family, std::size_t rank) {
  const SphericalData d = generators(family, rank);
  CheckRecord rec = make_record("mod3", d.family, rank);
  const auto& e = d.generators;
  for (std::size_t i = 1; i < rank; ++i) {
    const Weight got = act(d.g, mod3_word(i), e[i - 1]);
    expect(rec, got == e[i] - e[0],
           "u_" + std::to_string(i) + " eps_" + std::to_string(i) + " = " + to_string(got));
  }
  rec.witness["identities"] = rank - 1;
  return rec;
}

// u_1 = s_{p-1} ... s_1 and u_2 = s_1 ... s_p.
inline std::pair<WeylWord, WeylWord> sph3_words(std::size_t p) {
  WeylWord u1, u2;
  for (std::size_t j = p - 1; j >= 1; --j) u1.letters.push_back(j - 1);
  for (std::size_t j = 1; j <= p; ++j) u2.letters.push_back(j - 1);
  return {u1, u2};
}

inline CheckRecord check_sph3(std::size_t n, std::size_t p) {
  const SphericalData d = sph_generators(n, p);
  CheckRecord rec = make_record("sph3", d.family, n);
  const auto& e = d.generators;
  const auto [u1, u2] = sph3_words(p);
  const Weight a = act(d.g, u1, e[0]);
  const Weight b = act(d.g, u2, e[1]);
  expect(rec, a == e[1] - d.g.fundamental(p - 2), "u_1 eps_1 = " + to_string(a));
  expect(rec, b == e[2] - e[0], "u_2 eps_2 = " + to_string(b));
  expect(rec, length(d.g, u1) == p - 1, "length(u_1) != p-1");
  rec.witness["p"] = p;
  rec.witness["u1eps1"] = to_string(a);
  rec.witness["u2eps2"] = to_string(b);
  return rec;
}

// ---------------------------------------------------------------------------
// w-sequence

struct WSeqEntry {
  WeylWord w;       // w_h as built (not reduced)
  WeylWord u;       // u_h, in K-node letters
  std::size_t gamma = 0;  // gamma_h (unused for h = 0)
  Weight zeta;      // zeta_h = w_h(varpi_{alpha_0})
};

struct WSequence {
  CartanMatrix k;
  SphericalData data;
  std::vector<WSeqEntry> entries;  // h = 0..r
};

inline WeylWord lift_to_k(const WeylWord& g_word) {
  WeylWord w;
  for (auto i : g_word.letters) w.letters.push_back(g_node(i));
  return w;
}

inline WSequence build_w_sequence(const CartanMatrix& k, SphericalData data, const std::vector<WeylWord>& g_words) {
  WSequence seq;
  seq.k = k;
  seq.data = std::move(data);
  const Weight varpi = k.fundamental(kAlpha0);
  seq.entries.push_back({WeylWord{}, WeylWord{}, kAlpha0, varpi});
  for (std::size_t h = 1; h <= seq.data.generators.size(); ++h) {
    WSeqEntry e;
    e.gamma = h % 2 == 1 ? kAlpha0 : kBeta0;
    e.u = h == 1 ? WeylWord{} : lift_to_k(g_words.at(h - 2));
    e.w = WeylWord({e.gamma}) * e.u * seq.entries.back().w;
    e.zeta = act(k, e.w, varpi);
    seq.entries.push_back(std::move(e));
  }
  return seq;
}

// u_{h} = s_1 ... s_{h-1} (mod3 words shifted by one).
inline WSequence build_w_sequence(Family family, std::size_t rank) {
  std::vector<WeylWord> words;
  for (std::size_t i = 1; i < rank; ++i) words.push_back(mod3_word(i));
  return build_w_sequence(build_model_k(family, rank), generators(family, rank), words);
}

inline WSequence build_w_sequence_sph(std::size_t n, std::size_t p) {
  const auto [u1, u2] = sph3_words(p);
  return build_w_sequence(build_sph_k(n, p), sph_generators(n, p), {u1, u2});
}

// Weight of K with the G-coordinates of a G-weight and zeros on alpha_0, beta_0.
inline Weight tilde(const CartanMatrix& k, const Weight& g_weight) {
  Weight w = k.zero_weight();
  for (std::size_t i = 0; i < g_weight.size(); ++i) w[g_node(i)] = g_weight[i];
  return w;
}

inline Weight restrict_to_g(const Weight& k_weight) {
  return Weight(std::vector<std::int64_t>(k_weight.coords.begin() + 2, k_weight.coords.end()));
}

// No right descent in `subset`, i.e. w is the minimal element of w W_subset.
inline bool is_min_coset_rep(const CartanMatrix& gcm, const WeylWord& w, const std::vector<std::size_t>& subset) {
  const std::size_t len = length(gcm, w);
  for (auto j : subset)
    if (length(gcm, w * WeylWord({j})) < len) return false;
  return true;
}

inline std::vector<std::size_t> nodes_except(const CartanMatrix& gcm, std::size_t skip) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < gcm.size(); ++i)
    if (i != skip) v.push_back(i);
  return v;
}

inline std::vector<std::size_t> g_nodes(const CartanMatrix& k) {
  std::vector<std::size_t> v;
  for (std::size_t i = 2; i < k.size(); ++i) v.push_back(i);
  return v;
}

inline CheckRecord verify_w_sequence(const WSequence& seq) {
  const CartanMatrix& k = seq.k;
  CheckRecord rec = make_record("wseq", seq.data.family, seq.data.rank);
  const auto parabolic = nodes_except(k, kAlpha0);
  Json rows = Json::array();
  std::size_t prev_len = 0;
  for (std::size_t h = 0; h < seq.entries.size(); ++h) {
    const WSeqEntry& e = seq.entries[h];
    const std::string at = "h=" + std::to_string(h) + ": ";
    const std::size_t len = length(k, e.w);
    Json row;
    row["h"] = h;
    row["length"] = len;
    row["zeta"] = to_string(e.zeta);
    if (h == 0) {
      expect(rec, len == 0, at + "w_0 is not the identity");
      expect(rec, e.zeta == k.fundamental(kAlpha0), at + "zeta_0 != varpi_alpha0");
    } else {
      const std::string gname = e.gamma == kAlpha0 ? "alpha0" : "beta0";
      const std::size_t other = e.gamma == kAlpha0 ? kBeta0 : kAlpha0;
      row["gamma"] = gname;
      row["u"] = Json::array();
      for (auto l : e.u.letters) row["u"].push_back(k.label(l));
      // bullet 1: gamma_h in Delta_0, u_h in W_L
      bool in_levi = std::all_of(e.u.letters.begin(), e.u.letters.end(), [](std::size_t l) { return l >= 2; });
      expect(rec, in_levi, at + "u_h is not in W_L");
      // bullet 2
      const std::size_t ulen = length(k, e.u);
      expect(rec, len == 1 + ulen + prev_len,
             at + "length " + std::to_string(len) + " != 1 + " + std::to_string(ulen) + " + " + std::to_string(prev_len));
      // bullet 3
      expect(rec, e.zeta[e.gamma] == -1, at + "<gamma_h^vee, zeta_h> != -1");
      expect(rec, e.zeta[other] == 0, at + "<gamma^vee, zeta_h> != 0 for the other node");
      // bullet 4
      for (std::size_t j = 1; j <= h; ++j)
        expect(rec, act(k, seq.entries[j].u, e.zeta) == e.zeta,
               at + "u_" + std::to_string(j) + " moves zeta_h");
      // restriction and congruence
      const Weight& eps = seq.data.generators[h - 1];
      expect(rec, restrict_to_g(e.zeta) == eps, at + "zeta_h restricted to G != eps_h");
      expect(rec, e.zeta == tilde(k, eps) - k.fundamental(e.gamma), at + "zeta_h != eps~_h - varpi_gamma_h");
      expect(rec, is_min_coset_rep(k, e.w, parabolic), at + "w_h is not a minimal coset representative");
    }
    rows.push_back(row);
    prev_len = len;
  }
  rec.witness["entries"] = rows;
  return rec;
}

// tau = minimal representative of w_L w_r.
inline WeylWord ridge_tau(const WSequence& seq) {
  const WeylWord wl = longest_element(seq.k, g_nodes(seq.k));
  return min_coset_rep(seq.k, wl * seq.entries.back().w, nodes_except(seq.k, kAlpha0));
}

// ---------------------------------------------------------------------------
// lemK and lemIP6

inline std::vector<std::size_t> d_levi_nodes(const CartanMatrix& k) {
  std::vector<std::size_t> v{kAlpha0, kBeta0};
  for (std::size_t i = 2; i + 1 < k.size(); ++i) v.push_back(i);
  return v;
}

inline CheckRecord verify_lemK(Family family, std::size_t rank) {
  const CartanMatrix k = build_model_k(family, rank);
  const SphericalData d = generators(family, rank);
  CheckRecord rec = make_record("lemK", d.family, rank);
  const Weight a0 = k.simple_root(kAlpha0), b0 = k.simple_root(kBeta0), a1 = k.simple_root(g_node(0));
  const Weight gamma0 = a0 + b0 + a1;
  const Weight eps1 = d.generators[0], eps2 = d.generators[1];
  expect(rec, gamma0 == k.fundamental(kAlpha0) + k.fundamental(kBeta0) - tilde(k, eps2),
         "gamma_0 != varpi_alpha0 + varpi_beta0 - eps~_2");
  // gamma_0 among the roots of the D_{l+1} Levi
  const auto levi = d_levi_nodes(k);
  const CartanMatrix dsub = k.restricted(levi);
  RootVector want(levi.size());
  want[0] = want[1] = want[2] = 1;
  const auto roots = positive_roots(dsub);
  expect(rec, std::find(roots.begin(), roots.end(), want) != roots.end(), "gamma_0 is not a root of the Levi");
  std::vector<std::size_t> bourbaki;
  for (std::size_t i = rank; i >= 2; --i) bourbaki.push_back(i);
  bourbaki.push_back(kAlpha0);
  bourbaki.push_back(kBeta0);
  expect(rec, k.restricted(bourbaki).same_entries(build_finite(Family::D, rank + 1)),
         "Levi on alpha0, beta0, alpha_1..alpha_{l-1} is not of type D");
  expect(rec, restrict_to_g(-a0) == eps1, "-alpha_0 restricted to G != eps_1");
  expect(rec, restrict_to_g(-b0) == eps1, "-beta_0 restricted to G != eps_1");
  expect(rec, restrict_to_g(-gamma0) == eps2, "-gamma_0 restricted to G != eps_2");
  if (rank >= 3) expect(rec, gamma0[g_node(rank - 1)] == 0, "<alpha_l^vee, gamma_0> != 0");
  rec.witness["gamma0"] = to_string(gamma0);
  rec.witness["leviRoots"] = roots.size();
  return rec;
}

// Expected classes: varpi_alpha0, then eps~_n - varpi_alpha0 (n odd) or
// eps~_n - varpi_beta0 (n even), n = 1..l.
inline std::vector<Weight> ip6_expected_classes(const CartanMatrix& k, const SphericalData& d) {
  std::vector<Weight> out{k.fundamental(kAlpha0)};
  for (std::size_t n = 1; n <= d.generators.size(); ++n)
    out.push_back(tilde(k, d.generators[n - 1]) - k.fundamental(n % 2 ? kAlpha0 : kBeta0));
  return out;
}

inline CheckRecord verify_IP6_orbit(Family family, std::size_t rank) {
  if (rank > 10) throw ResourceBound("verify_IP6_orbit: rank exceeds 10");
  const CartanMatrix k = build_model_k(family, rank);
  const SphericalData d = generators(family, rank);
  CheckRecord rec = make_record("IP6-orbit", d.family, rank);
  const auto orbit = weyl_orbit(k, k.fundamental(kAlpha0), d_levi_nodes(k), std::size_t(1) << 12);
  std::vector<Weight> survivors;
  for (const auto& mu : orbit) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < rank; ++i) ok = ok && mu[g_node(i)] >= 0;
    if (ok) survivors.push_back(mu);
  }
  auto expected = ip6_expected_classes(k, d);
  std::sort(expected.begin(), expected.end());
  std::sort(survivors.begin(), survivors.end());
  rec.witness["orbitSize"] = orbit.size();
  rec.witness["survivors"] = survivors.size();
  expect(rec, orbit.size() == (std::size_t(1) << rank), "orbit size != 2^l");
  expect(rec, survivors.size() == rank + 1, "surviving classes != l + 1");
  for (const auto& s : survivors)
    if (!std::binary_search(expected.begin(), expected.end(), s)) fail(rec, "unexpected survivor " + to_string(s));
  for (const auto& e : expected)
    if (!std::binary_search(survivors.begin(), survivors.end(), e)) fail(rec, "missing class " + to_string(e));
  return rec;
}

inline CheckRecord verify_IP6_roots(Family family, std::size_t rank) {
  if (rank > 10) throw ResourceBound("verify_IP6_roots: rank exceeds 10");
  const CartanMatrix k = build_model_k(family, rank);
  const SphericalData d = generators(family, rank);
  CheckRecord rec = make_record("IP6-roots", d.family, rank);
  const auto levi = d_levi_nodes(k);
  const CartanMatrix dsub = k.restricted(levi);
  std::set<std::pair<std::int64_t, std::int64_t>> ab;
  std::vector<std::string> survivors;
  std::size_t pairing_filter = 0;
  for (const auto& delta : positive_roots(dsub)) {
    const std::int64_t a = delta[0], b = delta[1];
    expect(rec, a <= 1 && b <= 1, "root with a or b > 1");
    if (a + b >= 1) ab.emplace(a, b);
    if (a != 1 || b != 1) continue;
    // gamma on alpha_1..alpha_{l-1}, as a G-weight
    RootVector gamma(rank);
    for (std::size_t i = 0; i + 1 < rank; ++i) gamma[i] = delta[i + 2];
    const Weight gw = d.g.to_weight(gamma);
    bool nonpositive = true;
    for (std::size_t i = 1; i + 1 < rank; ++i) nonpositive = nonpositive && gw[i] <= 0;
    if (nonpositive) ++pairing_filter;
    const Weight lambda = 2 * d.generators[0] - gw;
    if (is_dominant(lambda) && d.in_monoid(lambda)) {
      survivors.push_back(to_string(gw));
      RootVector alpha1(rank);
      alpha1[0] = 1;
      expect(rec, gamma == alpha1, "surviving gamma " + to_string(gw) + " != alpha_1");
      expect(rec, lambda == d.generators[1], "lambda != eps_2");
    }
  }
  const std::set<std::pair<std::int64_t, std::int64_t>> want{{0, 1}, {1, 0}, {1, 1}};
  expect(rec, ab == want, "(a,b) set differs from {(0,1),(1,0),(1,1)}");
  expect(rec, survivors.size() == 1, "expected exactly one gamma with lambda in the monoid");
  Json abj = Json::array();
  for (const auto& [a, b] : ab) abj.push_back({a, b});
  rec.witness["ab"] = abj;
  rec.witness["gammaSurvivors"] = survivors;
  rec.witness["nonpositivePairingCount"] = pairing_filter;
  return rec;
}

}  // namespace pluck
