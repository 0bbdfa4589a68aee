#pragma once

// Characters of finite-dimensional irreducible modules of a finite-type
// Cartan matrix: Weyl's dimension formula, Freudenthal's multiplicity
// recursion, tensor product multiplicities (Klimyk's alternating Weyl-group
// sum, and the chamber-folding form of the same formula for whole
// decompositions) and Demazure characters.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pluck/errors.hpp"
#include "pluck/rational.hpp"
#include "pluck/report.hpp"
#include "pluck/root_system.hpp"

namespace pluck {

using Character = std::map<Weight, mpz_class>;

struct RepLimits {
  std::size_t max_rank = 6;
  mpz_class max_dim = 100000;
  std::size_t max_weyl_order = 100000;
};

// Root data of a finite-type Cartan matrix, computed once.
class FiniteRootData {
 public:
  explicit FiniteRootData(CartanMatrix gcm) : gcm_(std::move(gcm)) {
    gcm_.require_finite("FiniteRootData");
    const std::size_t n = gcm_.size();
    roots_ = positive_roots(gcm_);
    coroots_ = positive_roots(gcm_.transposed());
    for (const auto& r : roots_) root_weights_.push_back(gcm_.to_weight(r));
    QMatrix a(n, QVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(gcm_(i, j));
    const QMatrix ainv = inverse(a);
    const QVector& d = gcm_.symmetrizer();
    gram_.assign(n, QVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gram_[i][j] = ainv[j][i] * d[j];
  }

  const CartanMatrix& gcm() const { return gcm_; }
  std::size_t rank() const { return gcm_.size(); }
  const std::vector<RootVector>& roots() const { return roots_; }
  const std::vector<Weight>& root_weights() const { return root_weights_; }
  // Positive coroots in simple-coroot coordinates.
  const std::vector<RootVector>& coroots() const { return coroots_; }

  // W-invariant form with (alpha_i, alpha_i) = 2 d_i.
  Rational inner(const Weight& x, const Weight& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j)
        if (y[j] != 0) s += gram_[i][j] * Rational(x[i] * y[j]);
    }
    return s;
  }

 private:
  CartanMatrix gcm_;
  std::vector<RootVector> roots_;
  std::vector<RootVector> coroots_;
  std::vector<Weight> root_weights_;
  QMatrix gram_;
};

// prod over positive roots of <lambda + rho, alpha^vee> / <rho, alpha^vee>.
inline mpz_class weyl_dim(const FiniteRootData& data, const Weight& lambda) {
  if (lambda.size() != data.rank()) throw InvalidArgument("weyl_dim: weight has wrong length");
  if (!is_dominant(lambda)) throw InvalidArgument("weyl_dim: weight " + to_string(lambda) + " is not dominant");
  mpz_class num = 1, den = 1;
  for (const auto& c : data.coroots()) {
    std::int64_t a = 0, b = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      a += c[i] * (lambda[i] + 1);
      b += c[i];
    }
    num *= a;
    den *= b;
  }
  if (num % den != 0) throw CertificationError("weyl_dim: non-integral dimension");
  return num / den;
}

inline mpz_class weyl_dim(const CartanMatrix& gcm, const Weight& lambda) {
  return weyl_dim(FiniteRootData(gcm), lambda);
}

// |W| = prod over positive roots of (ht + 1) / ht.
inline mpz_class weyl_group_order(const CartanMatrix& gcm) {
  mpz_class num = 1, den = 1;
  for (const auto& r : positive_roots(gcm)) {
    num *= r.height() + 1;
    den *= r.height();
  }
  return num / den;
}

// All elements of a finite Weyl group as reduced words, found by
// breadth-first search on the orbit of rho (which is free).
inline std::vector<WeylWord> weyl_group_elements(const CartanMatrix& gcm, std::size_t max_order) {
  std::map<Weight, WeylWord> seen;
  std::deque<Weight> queue;
  seen.emplace(gcm.rho(), WeylWord{});
  queue.push_back(gcm.rho());
  std::vector<WeylWord> out{WeylWord{}};
  while (!queue.empty()) {
    const Weight cur = queue.front();
    queue.pop_front();
    const WeylWord word = seen.at(cur);
    for (std::size_t i = 0; i < gcm.size(); ++i) {
      Weight nxt = reflect(gcm, i, cur);
      if (seen.count(nxt)) continue;
      WeylWord w = WeylWord({i}) * word;
      seen.emplace(nxt, w);
      out.push_back(w);
      if (out.size() > max_order) throw ResourceBound("weyl_group_elements: group exceeds size bound");
      queue.push_back(std::move(nxt));
    }
  }
  return out;
}

// Dominant weights nu <= lambda, sorted by the height of lambda - nu. Found
// by subtracting positive roots from dominant weights: any two dominant
// weights mu < lambda are joined by such a chain staying dominant.
inline std::vector<Weight> dominant_weights_below(const CartanMatrix& gcm, const Weight& lambda,
                                                  std::size_t max_nodes = 5000000) {
  std::vector<std::pair<Weight, std::int64_t>> roots;
  for (const auto& r : positive_roots(gcm)) roots.emplace_back(gcm.to_weight(r), r.height());
  std::vector<Weight> out;
  if (!is_dominant(lambda)) return out;
  std::map<Weight, std::int64_t> depth{{lambda, 0}};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    const Weight mu = std::move(queue.front());
    queue.pop_front();
    const std::int64_t dm = depth.at(mu);
    for (const auto& [alpha, h] : roots) {
      Weight next = mu - alpha;
      if (!is_dominant(next) || depth.count(next)) continue;
      depth.emplace(next, dm + h);
      if (depth.size() > max_nodes) throw ResourceBound("dominant_weights_below: search exceeds size bound");
      queue.push_back(std::move(next));
    }
  }
  std::vector<std::pair<std::int64_t, Weight>> order;
  for (const auto& [w, d] : depth) order.emplace_back(d, w);
  std::sort(order.begin(), order.end());
  for (auto& [d, w] : order) out.push_back(std::move(w));
  return out;
}

struct WeightMultiplicityTable {
  Weight top;
  std::map<Weight, mpz_class> entries;  // dominant weights only

  // Multiplicity of an arbitrary weight, via its dominant conjugate.
  mpz_class multiplicity(const CartanMatrix& gcm, const Weight& mu) const {
    auto it = entries.find(dominant_conjugate(gcm, mu).first);
    return it == entries.end() ? mpz_class(0) : it->second;
  }

  mpz_class total_dimension(const CartanMatrix& gcm) const {
    const mpz_class order = weyl_group_order(gcm);
    mpz_class total = 0;
    for (const auto& [mu, m] : entries) {
      std::vector<std::size_t> fixed;
      for (std::size_t i = 0; i < mu.size(); ++i)
        if (mu[i] == 0) fixed.push_back(i);
      const mpz_class stab = fixed.empty() ? mpz_class(1) : weyl_group_order(gcm.restricted(fixed));
      total += m * (order / stab);
    }
    return total;
  }
};

inline void check_limits(const FiniteRootData& data, const Weight& lambda, const RepLimits& limits) {
  if (data.rank() > limits.max_rank) throw ResourceBound("rank exceeds bound " + std::to_string(limits.max_rank));
  if (weyl_dim(data, lambda) > limits.max_dim)
    throw ResourceBound("dim V" + to_string(lambda) + " exceeds bound " + limits.max_dim.get_str());
}

inline WeightMultiplicityTable freudenthal(const FiniteRootData& data, const Weight& lambda,
                                           const RepLimits& limits = {}) {
  check_limits(data, lambda, limits);
  const CartanMatrix& gcm = data.gcm();
  std::vector<Weight> dominant = dominant_weights_below(gcm, lambda);
  // height order: every dominant conjugate of mu + k alpha comes before mu
  WeightMultiplicityTable table;
  table.top = lambda;
  const Weight rho = gcm.rho();
  const Rational top_norm = data.inner(lambda + rho, lambda + rho);
  std::set<Weight> known(dominant.begin(), dominant.end());
  for (const auto& mu : dominant) {
    if (mu == lambda) {
      table.entries[mu] = 1;
      continue;
    }
    Rational sum = 0;
    for (const auto& alpha : data.root_weights()) {
      Weight shifted = mu + alpha;
      for (;;) {
        const Weight dom = dominant_conjugate(gcm, shifted).first;
        if (!known.count(dom)) break;
        auto it = table.entries.find(dom);
        if (it == table.entries.end()) throw CertificationError("freudenthal: weight order violated");
        sum += Rational(it->second) * data.inner(shifted, alpha);
        shifted += alpha;
      }
    }
    const Rational denom = top_norm - data.inner(mu + rho, mu + rho);
    const Rational m = 2 * sum / denom;
    if (!is_integer(m) || sgn(m) < 0) throw CertificationError("freudenthal: non-integral multiplicity");
    if (sgn(m) > 0) table.entries[mu] = m.get_num();
  }
  return table;
}

inline WeightMultiplicityTable freudenthal(const CartanMatrix& gcm, const Weight& lambda,
                                           const RepLimits& limits = {}) {
  return freudenthal(FiniteRootData(gcm), lambda, limits);
}

// Every weight with its multiplicity.
inline Character full_character(const CartanMatrix& gcm, const WeightMultiplicityTable& table) {
  Character ch;
  for (const auto& [mu, m] : table.entries)
    for (const auto& w : weyl_orbit(gcm, mu, all_nodes(gcm))) ch[w] = m;
  return ch;
}

// Multiplicity of V_nu in V_lambda (x) V_mu by Klimyk's alternating sum
//   sum_{w in W} sign(w) m_mu(w(nu + rho) - lambda - rho).
inline mpz_class tensor_mult(const FiniteRootData& data, Weight lambda, Weight mu, const Weight& nu,
                             const RepLimits& limits = {}) {
  const CartanMatrix& gcm = data.gcm();
  if (!is_dominant(lambda) || !is_dominant(mu) || !is_dominant(nu))
    throw InvalidArgument("tensor_mult: weights must be dominant");
  if (weyl_dim(data, mu) > weyl_dim(data, lambda)) std::swap(lambda, mu);
  const WeightMultiplicityTable table = freudenthal(data, mu, limits);
  const Weight rho = gcm.rho();
  const Weight shift = lambda + rho;
  mpz_class total = 0;
  for (const auto& w : weyl_group_elements(gcm, limits.max_weyl_order)) {
    const mpz_class m = table.multiplicity(gcm, act(gcm, w, nu + rho) - shift);
    if (m == 0) continue;
    if (w.size() % 2 == 0) total += m;
    else total -= m;
  }
  if (total < 0) throw CertificationError("tensor_mult: negative multiplicity");
  return total;
}

inline mpz_class tensor_mult(const CartanMatrix& gcm, const Weight& lambda, const Weight& mu,
                             const Weight& nu, const RepLimits& limits = {}) {
  return tensor_mult(FiniteRootData(gcm), lambda, mu, nu, limits);
}

// V_lambda (x) M for a module M given by its full character: each weight
// kappa of M contributes to the chamber representative of lambda + kappa + rho,
// with the sign of the folding and nothing when that point lies on a wall.
inline Character tensor_with(const CartanMatrix& gcm, const Weight& lambda, const Character& module) {
  const Weight rho = gcm.rho();
  Character out;
  for (const auto& [kappa, m] : module) {
    const auto [dom, steps] = dominant_conjugate(gcm, lambda + kappa + rho);
    bool wall = false;
    for (auto x : dom.coords) wall = wall || x == 0;
    if (wall) continue;
    mpz_class& slot = out[dom - rho];
    if (steps % 2 == 0) slot += m;
    else slot -= m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0) throw CertificationError("tensor_with: negative multiplicity");
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

// Full decomposition of V_lambda (x) V_mu, expanding the smaller factor.
inline Character tensor_decompose(const FiniteRootData& data, Weight lambda, Weight mu,
                                  const RepLimits& limits = {}) {
  if (!is_dominant(lambda) || !is_dominant(mu)) throw InvalidArgument("tensor_decompose: weights must be dominant");
  if (weyl_dim(data, mu) > weyl_dim(data, lambda)) std::swap(lambda, mu);
  const Character ch = full_character(data.gcm(), freudenthal(data, mu, limits));
  return tensor_with(data.gcm(), lambda, ch);
}

// Character of the Demazure module V_w(lambda): D_{i_1} ... D_{i_k} e^lambda
// for w = s_{i_1} ... s_{i_k}, with
//   D_i e^mu = e^mu + e^{mu - alpha_i} + ... + e^{s_i mu}     if <alpha_i^vee, mu> >= 0
//            = 0                                                if it is -1
//            = -(e^{mu + alpha_i} + ... + e^{s_i mu - alpha_i}) otherwise.
inline Character demazure_character(const CartanMatrix& gcm, const WeylWord& w, const Weight& lambda) {
  Character ch{{lambda, mpz_class(1)}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const std::size_t i = *it;
    const Weight alpha = gcm.simple_root(i);
    Character next;
    for (const auto& [mu, m] : ch) {
      const std::int64_t p = mu[i];
      if (p >= 0) {
        Weight cur = mu;
        for (std::int64_t k = 0; k <= p; ++k, cur -= alpha) next[cur] += m;
      } else if (p <= -2) {
        Weight cur = mu + alpha;
        for (std::int64_t k = 1; k <= -p - 1; ++k, cur += alpha) next[cur] -= m;
      }
    }
    ch.clear();
    for (auto& [mu, m] : next)
      if (m != 0) ch.emplace(mu, m);
  }
  return ch;
}

inline mpz_class character_dimension(const Character& ch) {
  mpz_class d = 0;
  for (const auto& [mu, m] : ch) d += m;
  return d;
}

// ---------------------------------------------------------------------------
// Spherical generators

// epsilon_i = omega_i, except epsilon_l = 2 omega_l for type B.
inline std::vector<Weight> model_epsilons(Family family, std::size_t rank) {
  if (family == Family::D) throw InvalidArgument("model varieties are handled for types A, B, C");
  const CartanMatrix g = build_finite(family, rank);
  std::vector<Weight> eps;
  for (std::size_t i = 0; i < rank; ++i) eps.push_back(g.fundamental(i));
  if (family == Family::B) eps.back() = 2 * eps.back();
  return eps;
}

// (omega_1, omega_p, omega_{p+1}) in B_n.
inline std::vector<Weight> sph_epsilons(std::size_t n, std::size_t p) {
  if (p < 2 || p + 2 > n) throw InvalidArgument("sph family needs 2 <= p <= n-2");
  const CartanMatrix g = build_finite(Family::B, n);
  return {g.fundamental(0), g.fundamental(p - 1), g.fundamental(p)};
}

inline std::string family_tag(Family f) { return std::string(1, family_letter(f)); }

// V_{eps_i} occurs in V_{eps_1}^{(x) i} exactly once and not in lower powers.
inline CheckRecord verify_mod1(Family family, std::size_t rank, std::size_t i, const RepLimits& limits = {}) {
  CheckRecord rec = make_record("mod1", family_tag(family), rank);
  if (i < 1 || i > rank) throw InvalidArgument("mod1: index out of range");
  const FiniteRootData data(build_finite(family, rank));
  const auto eps = model_epsilons(family, rank);
  const Character generator = full_character(data.gcm(), freudenthal(data, eps[0], limits));
  Character power{{data.gcm().zero_weight(), mpz_class(1)}};
  Json mults = Json::array();
  for (std::size_t j = 0; j <= i; ++j) {
    auto it = power.find(eps[i - 1]);
    const mpz_class m = it == power.end() ? mpz_class(0) : it->second;
    mults.push_back(m.get_str());
    if (j < i) expect(rec, m == 0, "V_eps" + std::to_string(i) + " occurs in power " + std::to_string(j));
    else expect(rec, m == 1, "multiplicity at power " + std::to_string(i) + " is " + m.get_str());
    if (j == i) break;
    Character next;
    for (const auto& [kappa, m_kappa] : power)
      for (const auto& [nu, m_nu] : tensor_with(data.gcm(), kappa, generator)) next[nu] += m_kappa * m_nu;
    power = std::move(next);
  }
  rec.witness["i"] = i;
  rec.witness["multiplicityByPower"] = mults;
  return rec;
}

// V_{eps_2} in V_{eps_1} (x) V_{omega_{p-1}} and V_{eps_3} in V_{eps_2} (x) V_{eps_1},
// each with multiplicity one.
inline CheckRecord verify_sph1(std::size_t n, std::size_t p, const RepLimits& limits = {}) {
  CheckRecord rec = make_record("sph1", "sph(" + std::to_string(n) + "," + std::to_string(p) + ")", n);
  const auto eps = sph_epsilons(n, p);
  const FiniteRootData data(build_finite(Family::B, n));
  const Weight omega_pm1 = data.gcm().fundamental(p - 2);
  const mpz_class first = tensor_mult(data, eps[0], omega_pm1, eps[1], limits);
  const mpz_class second = tensor_mult(data, eps[1], eps[0], eps[2], limits);
  rec.witness["p"] = p;
  rec.witness["multEps2InEps1TimesOmegaPm1"] = first.get_str();
  rec.witness["multEps3InEps2TimesEps1"] = second.get_str();
  expect(rec, first == 1, "multiplicity of V_eps2 is " + first.get_str());
  expect(rec, second == 1, "multiplicity of V_eps3 is " + second.get_str());
  return rec;
}

}  // namespace pluck
