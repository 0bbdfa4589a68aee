// Acceptance run: one line per criterion, nonzero exit if any fails.
// Usage: acceptance [path-to-pluck-cli]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pluck/pluck.hpp"

using namespace pluck;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (cond) return;
  if (o.ok) o.detail = what;
  o.ok = false;
}

// ---------------------------------------------------------------------------
// 1. straightening, checked at matrices with non-integral rational entries

struct MinorTable {
  std::map<Column, Rational> minors;
};

std::vector<MinorTable> oracle_points(std::size_t k, std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MinorTable> out;
  while (out.size() < count) {
    QMatrix m(n, QVector(k));
    for (auto& row : m)
      for (auto& x : row) {
        x = Rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 7));
        x.canonicalize();
      }
    MinorTable t;
    for (const auto& c : all_columns(k, n)) t.minors[c] = oracle::row_minor(m, c.indices);
    out.push_back(std::move(t));
  }
  return out;
}

Rational eval_at(const MinorTable& p, const Tableau& t) {
  Rational v = 1;
  for (const auto& c : t.columns()) v *= p.minors.at(c);
  return v;
}

Rational eval_at(const MinorTable& p, const Combination& c) {
  Rational v = 0;
  for (const auto& [t, x] : c) v += x * eval_at(p, t);
  return v;
}

Tableau random_monomial(std::mt19937_64& rng, std::size_t k, std::size_t n, const std::vector<Column>& cols) {
  const std::size_t d = 1 + rng() % 3;
  std::vector<Column> picked;
  for (std::size_t i = 0; i < d; ++i) picked.push_back(cols[rng() % cols.size()]);
  std::sort(picked.begin(), picked.end());
  return Tableau(k, n, picked);
}

Outcome criterion1() {
  Outcome o;
  std::size_t checked = 0;
  for (auto [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 4}, {2, 5}, {3, 6}}) {
    const auto pts = oracle_points(k, n, 20, 1000 + n);
    Straightener s(k, n, 0);
    std::vector<Tableau> inputs;
    if (n == 4) {
      for (std::size_t d = 0; d <= 3; ++d)
        for (const auto& t : enumerate_monomials(k, n, d)) inputs.push_back(t);
    } else {
      std::mt19937_64 rng(77 + n);
      const auto cols = all_columns(k, n);
      for (int i = 0; i < 500; ++i) inputs.push_back(random_monomial(rng, k, n, cols));
    }
    for (const auto& t : inputs) {
      const Combination c = s.straighten(t);
      for (const auto& [u, x] : c) require(o, u.is_standard(), "nonstandard output for " + to_token(t));
      for (const auto& p : pts) require(o, eval_at(p, t) == eval_at(p, c), "evaluation mismatch for " + to_token(t));
      ++checked;
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " monomials";
  return o;
}

// 2. basis counts
Outcome criterion2() {
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto a = build_finite(Family::A, n - 1);
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t d = 0; d <= 3; ++d) {
        const auto count = enumerate_standard(k, n, d).size();
        const mpz_class want = weyl_dim(a, static_cast<std::int64_t>(d) * a.fundamental(k - 1));
        require(o, mpz_class(static_cast<unsigned long>(count)) == want,
                "Gr(" + std::to_string(k) + "," + std::to_string(n) + ") d=" + std::to_string(d));
        ++cases;
      }
  }
  const auto rec = verify_basis(2, 4, 2);
  require(o, rec.passed(), "Gr(2,4) d=2 basis check failed");
  require(o, rec.witness["monomialCount"] == 21 && rec.witness["standardCount"] == 20 &&
                 rec.witness["relationCount"] == 1,
          "Gr(2,4) d=2 relation count");
  if (o.ok) o.detail = std::to_string(cases) + " counts, 1 quadratic relation";
  return o;
}

// 3. relation span
Outcome criterion3() {
  Outcome o;
  std::ostringstream d;
  for (std::size_t n : {4, 5}) {
    Straightener s(2, n, 0);
    const std::size_t got = degree3_relation_rank(s);
    const mpz_class want = mpz_class(static_cast<unsigned long>(enumerate_monomials(2, n, 3).size())) - rectangle_dim(2, n, 3);
    require(o, mpz_class(static_cast<unsigned long>(got)) == want, "Gr(2," + std::to_string(n) + ")");
    d << "Gr(2," << n << ")=" << got << " ";
  }
  if (o.ok) o.detail = d.str();
  return o;
}

// 4. the SL(3) example
Outcome criterion4() {
  Outcome o;
  const RunReport r = cmd_sl3(Options{});
  for (const auto& c : r.checks)
    if (c.check != "dimensions") require(o, c.passed(), c.check + " failed");
  const auto witnesses = r.payload["witnesses"].size();
  require(o, witnesses >= 1, "no escaping Levi generator");
  if (o.ok) o.detail = std::to_string(witnesses) + " escaping pairs";
  return o;
}

// 5. mod3 / sph3
Outcome criterion5() {
  Outcome o;
  std::size_t n_checks = 0;
  for (auto f : {Family::A, Family::B, Family::C})
    for (std::size_t r = 2; r <= 8; ++r, ++n_checks)
      require(o, check_mod3(f, r).passed(), std::string("mod3 ") + family_letter(f) + std::to_string(r));
  for (std::size_t n = 4; n <= 6; ++n)
    for (std::size_t p = 2; p + 2 <= n; ++p, ++n_checks)
      require(o, check_sph3(n, p).passed(), "sph3 " + sph_tag(n, p));
  if (o.ok) o.detail = std::to_string(n_checks) + " cases";
  return o;
}

// 6. mod1 / sph1
Outcome criterion6() {
  Outcome o;
  std::size_t n_checks = 0;
  for (auto f : {Family::A, Family::B, Family::C})
    for (std::size_t r = f == Family::A ? 1 : 2; r <= 4; ++r)
      for (std::size_t i = 1; i <= r; ++i, ++n_checks)
        require(o, verify_mod1(f, r, i).passed(),
                std::string("mod1 ") + family_letter(f) + std::to_string(r) + " i=" + std::to_string(i));
  for (auto [n, p] : std::vector<std::pair<std::size_t, std::size_t>>{{4, 2}, {5, 3}}) {
    require(o, verify_sph1(n, p).passed(), "sph1 " + sph_tag(n, p));
    ++n_checks;
  }
  if (o.ok) o.detail = std::to_string(n_checks) + " cases";
  return o;
}

// 7. mod2 / sph2
Outcome criterion7() {
  Outcome o;
  std::ostringstream d;
  for (auto [f, r] : std::vector<std::pair<Family, std::size_t>>{
           {Family::A, 3}, {Family::A, 4}, {Family::B, 3}, {Family::B, 4}, {Family::C, 3}, {Family::C, 4}}) {
    const auto rec = verify_mod2(f, r);
    require(o, rec.passed(), "mod2 " + model_group_name(f, r));
    d << model_group_name(f, r) << " ";
  }
  for (auto [n, p] : std::vector<std::pair<std::size_t, std::size_t>>{{4, 2}, {5, 3}}) {
    require(o, verify_sph2(n, p).passed(), "sph2 " + sph_tag(n, p));
    d << sph_tag(n, p) << " ";
  }
  if (o.ok) o.detail = d.str();
  return o;
}

// 8. w-sequences
Outcome criterion8() {
  Outcome o;
  std::size_t n_checks = 0;
  for (auto f : {Family::A, Family::B, Family::C})
    for (std::size_t r = 2; r <= 6; ++r, ++n_checks)
      require(o, verify_w_sequence(build_w_sequence(f, r)).passed(),
              std::string("wseq ") + family_letter(f) + std::to_string(r));
  for (std::size_t n = 4; n <= 5; ++n)
    for (std::size_t p = 2; p + 2 <= n; ++p, ++n_checks)
      require(o, verify_w_sequence(build_w_sequence_sph(n, p)).passed(), "wseq " + sph_tag(n, p));
  if (o.ok) o.detail = std::to_string(n_checks) + " sequences";
  return o;
}

// 9. IP6
Outcome criterion9() {
  Outcome o;
  std::size_t n_checks = 0;
  for (auto f : {Family::A, Family::B, Family::C})
    for (std::size_t r = 2; r <= 8; ++r) {
      const std::string tag = std::string(1, family_letter(f)) + std::to_string(r);
      const auto orbit = verify_IP6_orbit(f, r);
      require(o, orbit.passed() && orbit.witness["survivors"] == r + 1, "IP6-orbit " + tag);
      const auto roots = verify_IP6_roots(f, r);
      require(o, roots.passed(), "IP6-roots " + tag);
      n_checks += 2;
    }
  if (o.ok) o.detail = std::to_string(n_checks) + " checks";
  return o;
}

// 10. determinism of the full report set
std::string full_suite_json() {
  Options opt;
  opt.seed = 7;
  Json all = Json::array();
  for (auto f : {Family::A, Family::B, Family::C})
    for (std::size_t r = 2; r <= 4; ++r) {
      all.push_back(cmd_verify_model(f, r, std::nullopt, std::nullopt, opt).to_json());
      all.push_back(cmd_ridge_model(f, r, opt).to_json());
    }
  for (auto [n, p] : std::vector<std::pair<std::size_t, std::size_t>>{{4, 2}, {5, 2}, {5, 3}}) {
    all.push_back(cmd_verify_sph(n, p, std::string("H1,H5,sph1,sph3,wseq"), std::nullopt, opt).to_json());
    all.push_back(cmd_ridge_sph(n, p, opt).to_json());
  }
  all.push_back(cmd_sl3(opt).to_json());
  all.push_back(cmd_straighten(3, 6, "2,5,6|1,3,4|1,2,6", opt).to_json());
  all.push_back(cmd_enumerate(2, 5, 2, std::string("2,4"), false, true, opt).to_json());
  all.push_back(cmd_invariants_model(Family::C, 3, opt).to_json());
  return all.dump(2);
}

std::string run_capture(const std::string& cmd) {
  std::string out;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
  pclose(f);
  return out;
}

Outcome criterion10(const std::string& cli) {
  Outcome o;
  const std::string a = full_suite_json(), b = full_suite_json();
  require(o, a == b, "in-process reports differ");
  require(o, a.find("\"error\"") == std::string::npos, "suite hit a resource bound");
  std::string detail = std::to_string(a.size()) + " bytes in-process";
  if (!cli.empty()) {
    const std::vector<std::vector<std::string>> runs{
        {"verify-model", "--family", "B", "--rank", "3"},
        {"verify-sph", "--n", "5", "--p", "3"},
        {"sl3"},
        {"straighten", "--k", "3", "--n", "6", "--monomial", "2,5,6|1,3,4"}};
    for (const auto& args : runs) {
      std::string cmd = "'" + cli + "' --seed 7 --json";
      for (const auto& a : args) cmd += " '" + a + "'";
      const std::string x = run_capture(cmd), y = run_capture(cmd);
      require(o, !x.empty() && x == y, "CLI output differs: " + args.front());
    }
    detail += ", CLI runs identical";
  }
  if (o.ok) o.detail = detail;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, 60, criterion1},  {2, 30, criterion2}, {3, 120, criterion3}, {4, 10, criterion4},
      {5, 5, criterion5},   {6, 120, criterion6}, {7, 60, criterion7}, {8, 30, criterion8},
      {9, 60, criterion9},  {10, 600, [&] { return criterion10(cli); }},
  };
  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && s > c.budget_s) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget)";
    }
    all_ok = all_ok && o.ok;
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2f", s);
    std::cout << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << " (" << secs << " s) " << o.detail
              << std::endl;
  }
  return all_ok ? 0 : 1;
}
