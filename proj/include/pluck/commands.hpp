#pragma once

// Subcommands of the command-line tool, as library calls returning a
// RunReport. tools/pluck.cpp only parses flags and prints.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pluck/errors.hpp"
#include "pluck/exterior.hpp"
#include "pluck/model_checker.hpp"
#include "pluck/pluecker.hpp"
#include "pluck/rep_theory.hpp"
#include "pluck/report.hpp"
#include "pluck/root_system.hpp"
#include "pluck/sl3_case.hpp"

namespace pluck {

enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitUsage = 2,
  kExitCertification = 3,
  kExitResource = 4,
};

struct Options {
  std::uint64_t seed = 0;
  std::size_t max_size = 100000;
};

inline int exit_code(const RunReport& r) {
  switch (r.status()) {
    case Status::Pass: return kExitPass;
    case Status::Fail: return kExitFail;
    case Status::Error: return kExitResource;
  }
  return kExitResource;
}

// Maps an exception escaping a command to its exit code.
inline int exit_code(const std::exception& e) {
  if (dynamic_cast<const InvalidArgument*>(&e)) return kExitUsage;
  if (dynamic_cast<const CertificationError*>(&e)) return kExitCertification;
  if (dynamic_cast<const ResourceBound*>(&e)) return kExitResource;
  return kExitCertification;
}

inline RepLimits rep_limits(const Options& o) {
  RepLimits l;
  l.max_dim = static_cast<unsigned long>(o.max_size);
  return l;
}

// nullopt selects everything; "" selects nothing.
inline std::vector<std::string> select_checks(const std::optional<std::string>& list,
                                              const std::vector<std::string>& known) {
  if (!list) return known;
  std::vector<std::string> out;
  std::stringstream ss(*list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (std::find(known.begin(), known.end(), item) == known.end()) {
      std::string names;
      for (const auto& k : known) names += (names.empty() ? "" : ",") + k;
      throw InvalidArgument("unknown check '" + item + "' (known: " + names + ")");
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  return out;
}

// Runs one check; a size bound turns into an "error" record.
inline CheckRecord guarded(const std::string& check, const std::string& family, std::size_t rank,
                           const std::function<CheckRecord()>& body) {
  try {
    return body();
  } catch (const ResourceBound& e) {
    CheckRecord rec = make_record(check, family, rank);
    rec.status = Status::Error;
    rec.witness["error"] = e.what();
    return rec;
  }
}

inline Json combination_json(const Combination& c) {
  Json terms = Json::array();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    Json t;
    t["tableau"] = to_token(it->first);
    t["coefficient"] = to_string(it->second);
    terms.push_back(t);
  }
  return terms;
}

// ---------------------------------------------------------------------------

inline RunReport cmd_straighten(std::size_t k, std::size_t n, const std::string& token, const Options& o) {
  RunReport r;
  r.command = "straighten";
  r.parameters = {{"k", k}, {"n", n}, {"monomial", token}, {"seed", o.seed}};
  const Tableau t = parse_tableau(token, k, n);
  Straightener s(k, n, o.seed);
  const Combination c = s.straighten(t);
  if (!s.certify(t, c)) throw CertificationError("straighten: expansion of " + token + " fails evaluation");
  CheckRecord rec = make_record("straighten", "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")", n - 1);
  bool all_standard = true;
  for (const auto& [u, x] : c) all_standard = all_standard && u.is_standard();
  expect(rec, all_standard, "expansion contains a nonstandard tableau");
  rec.witness["certificationPoints"] = s.points().size();
  rec.witness["relationsUsed"] = s.relations_cached();
  r.checks.push_back(rec);
  r.payload = {{"input", to_token(t)}, {"standard", t.is_standard()}, {"terms", combination_json(c)}};
  return r;
}

// Standard tableaux of degree d, optionally on the Schubert variety of a
// column (or its ridge, the minimal column removed).
inline RunReport cmd_enumerate(std::size_t k, std::size_t n, std::size_t d, const std::optional<std::string>& schubert,
                               bool ridge, bool certify, const Options& o) {
  RunReport r;
  r.command = "enumerate";
  r.parameters = {{"k", k}, {"n", n}, {"degree", d}, {"seed", o.seed}};
  if (k < 1 || k >= n) throw InvalidArgument("enumerate needs 1 <= k < n");
  std::vector<Column> allowed = all_columns(k, n);
  const std::string fam = "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
  if (schubert) {
    const Tableau c = parse_tableau(*schubert, k, n);
    if (c.degree() != 1) throw InvalidArgument("--schubert takes a single column");
    allowed = ridge ? ridge_restrict(c.columns()[0], k, n) : schubert_restrict(c.columns()[0], k, n);
    r.parameters["schubert"] = *schubert;
    r.parameters["ridge"] = ridge;
  } else if (ridge) {
    throw InvalidArgument("--ridge needs --schubert");
  }
  const auto ts = enumerate_chains(k, n, d, allowed, o.max_size);
  Json tokens = Json::array();
  for (const auto& t : ts) tokens.push_back(to_token(t));
  r.payload = {{"count", ts.size()}, {"tableaux", tokens}};
  if (!schubert) {
    CheckRecord rec = make_record("count", fam, n - 1);
    const mpz_class expected = weyl_dim(build_finite(Family::A, n - 1), static_cast<std::int64_t>(d) *
                                                                          build_finite(Family::A, n - 1).fundamental(k - 1));
    rec.witness["standardCount"] = ts.size();
    rec.witness["weylDim"] = expected.get_str();
    expect(rec, mpz_class(static_cast<unsigned long>(ts.size())) == expected, "count != weyl_dim(d omega_k)");
    r.checks.push_back(rec);
    if (certify)
      r.checks.push_back(guarded("basis", fam, n - 1, [&] { return verify_basis(k, n, d, o.seed, o.max_size); }));
  }
  return r;
}

inline const std::vector<std::string>& model_check_names() {
  static const std::vector<std::string> names{"H1",   "H5",   "IP6-orbit", "IP6-roots", "grado-roots",
                                              "lemK", "mod1", "mod2",      "mod3",      "wseq"};
  return names;
}

inline const std::vector<std::string>& sph_check_names() {
  static const std::vector<std::string> names{"H1", "H5", "sph1", "sph2", "sph3", "wseq"};
  return names;
}

// mod1 for every i = 1..rank, folded into one record.
inline CheckRecord verify_mod1_all(Family family, std::size_t rank, const RepLimits& limits) {
  CheckRecord rec = make_record("mod1", family_tag(family), rank);
  Json by_index = Json::array();
  for (std::size_t i = 1; i <= rank; ++i) {
    const CheckRecord one = verify_mod1(family, rank, i, limits);
    by_index.push_back(one.witness);
    if (!one.passed()) {
      rec.status = Status::Fail;
      for (const auto& f : one.witness.value("failures", Json::array()))
        fail(rec, "i=" + std::to_string(i) + ": " + f.get<std::string>());
    }
  }
  rec.witness["byIndex"] = by_index;
  return rec;
}

inline RunReport cmd_verify_model(Family family, std::size_t rank, const std::optional<std::string>& checks,
                                  std::optional<std::int64_t> h5_bound, const Options& o) {
  RunReport r;
  r.command = "verify-model";
  const auto selected = select_checks(checks, model_check_names());
  r.parameters = {{"family", family_tag(family)}, {"rank", rank}, {"checks", selected}, {"seed", o.seed}};
  const CartanMatrix k = build_model_k(family, rank);  // validates family and rank
  (void)k;
  const SphericalData d = generators(family, rank);
  const std::int64_t bound = h5_bound.value_or(default_H5_bound(rank));
  const std::string fam = family_tag(family);
  for (const auto& c : selected) {
    std::function<CheckRecord()> body;
    if (c == "H1") body = [&] { return check_H1(d); };
    else if (c == "H5") body = [&] { return check_H5(d, bound, o.max_size * 200); };
    else if (c == "IP6-orbit") body = [&] { return verify_IP6_orbit(family, rank); };
    else if (c == "IP6-roots") body = [&] { return verify_IP6_roots(family, rank); };
    else if (c == "grado-roots") body = [&] { return check_grado_roots(d); };
    else if (c == "lemK") body = [&] { return verify_lemK(family, rank); };
    else if (c == "mod1") body = [&] { return verify_mod1_all(family, rank, rep_limits(o)); };
    else if (c == "mod2") body = [&] { return verify_mod2(family, rank); };
    else if (c == "mod3") body = [&] { return check_mod3(family, rank); };
    else if (c == "wseq") body = [&] { return verify_w_sequence(build_w_sequence(family, rank)); };
    r.checks.push_back(guarded(c, fam, rank, body));
  }
  return r;
}

inline RunReport cmd_verify_sph(std::size_t n, std::size_t p, const std::optional<std::string>& checks,
                                std::optional<std::int64_t> h5_bound, const Options& o) {
  RunReport r;
  r.command = "verify-sph";
  const auto selected = select_checks(checks, sph_check_names());
  r.parameters = {{"n", n}, {"p", p}, {"checks", selected}, {"seed", o.seed}};
  build_sph_k(n, p);  // validates (n, p)
  const SphericalData d = sph_generators(n, p);
  const std::int64_t bound = h5_bound.value_or(2);
  for (const auto& c : selected) {
    std::function<CheckRecord()> body;
    if (c == "H1") body = [&] { return check_H1(d); };
    else if (c == "H5") body = [&] { return check_H5(d, bound, o.max_size * 200); };
    else if (c == "sph1") body = [&] { return verify_sph1(n, p, rep_limits(o)); };
    else if (c == "sph2") body = [&] { return verify_sph2(n, p); };
    else if (c == "sph3") body = [&] { return check_sph3(n, p); };
    else if (c == "wseq") body = [&] { return verify_w_sequence(build_w_sequence_sph(n, p)); };
    r.checks.push_back(guarded(c, d.family, n, body));
  }
  return r;
}

inline Json word_json(const CartanMatrix& k, const WeylWord& w) {
  Json j = Json::array();
  for (auto l : w.letters) j.push_back(k.label(l));
  return j;
}

// The w-sequence of a model or sph extension and the ridge element tau.
inline RunReport ridge_report(const WSequence& seq, RunReport r) {
  Json entries = Json::array();
  for (std::size_t h = 0; h < seq.entries.size(); ++h) {
    const auto& e = seq.entries[h];
    const WeylWord red = reduced_word(seq.k, e.w);
    Json j;
    j["h"] = h;
    j["w"] = word_json(seq.k, red);
    j["length"] = red.size();
    j["zeta"] = to_string(e.zeta);
    if (h > 0) {
      j["gamma"] = seq.k.label(e.gamma);
      j["u"] = word_json(seq.k, e.u);
    }
    entries.push_back(j);
  }
  const WeylWord tau = reduced_word(seq.k, ridge_tau(seq));
  r.payload = {{"entries", entries}, {"tau", word_json(seq.k, tau)}, {"tauLength", tau.size()}};
  r.checks.push_back(verify_w_sequence(seq));
  return r;
}

inline RunReport cmd_ridge_model(Family family, std::size_t rank, const Options& o) {
  RunReport r;
  r.command = "ridge";
  r.parameters = {{"family", family_tag(family)}, {"rank", rank}, {"seed", o.seed}};
  return ridge_report(build_w_sequence(family, rank), std::move(r));
}

inline RunReport cmd_ridge_sph(std::size_t n, std::size_t p, const Options& o) {
  RunReport r;
  r.command = "ridge";
  r.parameters = {{"n", n}, {"p", p}, {"seed", o.seed}};
  return ridge_report(build_w_sequence_sph(n, p), std::move(r));
}

inline RunReport cmd_sl3(const Options& o) {
  RunReport r;
  r.command = "sl3";
  r.parameters = {{"seed", o.seed}};
  const auto eight = build_p_basis();
  const auto five = restricted_set();
  const std::string fam = "SL(3)";

  CheckRecord rank8 = make_record("rank8", fam, 2);
  const std::size_t rk = poly_rank(polys_of(eight));
  rank8.witness["rank"] = rk;
  expect(rank8, rk == 8, "the eight p(T) have rank " + std::to_string(rk));
  r.checks.push_back(rank8);

  CheckRecord stable8 = make_record("stable8", fam, 2);
  const StabilityResult st = stability(eight, sl3_generators());
  stable8.witness["spanDim"] = st.span_dim;
  stable8.witness["escapes"] = st.escapes.size();
  expect(stable8, st.escapes.empty() && st.span_dim == 8, "span of the eight p(T) is not sl3-stable");
  r.checks.push_back(stable8);

  CheckRecord span5 = make_record("span5", fam, 2);
  const std::size_t r5 = poly_rank(polys_of(five));
  span5.witness["rank"] = r5;
  expect(span5, r5 == 5, "restricted set spans dimension " + std::to_string(r5));
  r.checks.push_back(span5);

  const Json report = check_nonstability();
  CheckRecord levi = make_record("nonstability", fam, 2);
  levi.witness["witnesses"] = report["witnesses"].size();
  expect(levi, !report["witnesses"].empty(), "no Levi generator leaves the restricted span");
  r.checks.push_back(levi);

  CheckRecord cor = make_record("dimensions", fam, 2);
  Json dims = Json::array();
  for (std::size_t n = 1; n <= 2; ++n) {
    const Sl3Dimensions d = sl3_dimensions(n, o.seed);
    dims.push_back({{"n", n},
                    {"multisetSum", d.multiset_sum.get_str()},
                    {"demazure", d.demazure.get_str()},
                    {"restricted", d.restricted}});
    const mpz_class restricted(static_cast<unsigned long>(d.restricted));
    expect(cor, d.multiset_sum == restricted, "n=" + std::to_string(n) + ": multiset sum != restricted span dim");
    expect(cor, d.demazure == restricted, "n=" + std::to_string(n) + ": Demazure dim != restricted span dim");
  }
  cor.witness["dimensions"] = dims;
  r.checks.push_back(cor);

  r.payload = report;
  return r;
}

inline RunReport cmd_invariants_model(Family family, std::size_t rank, const Options& o) {
  RunReport r;
  r.command = "invariants";
  r.parameters = {{"family", family_tag(family)}, {"rank", rank}, {"seed", o.seed}};
  const ModelSpace s = model_space(family, rank);
  Json hs = Json::array();
  const auto h = model_invariants(s);
  for (std::size_t i = 0; i < h.size(); ++i) hs.push_back({{"i", i + 1}, {"h", to_string(h[i])}});
  r.payload = {{"group", model_group_name(family, rank)}, {"dimV", s.dim}, {"invariants", hs}};
  r.checks.push_back(verify_mod2(family, rank));
  return r;
}

inline RunReport cmd_invariants_sph(std::size_t n, std::size_t p, const Options& o) {
  RunReport r;
  r.command = "invariants";
  r.parameters = {{"n", n}, {"p", p}, {"seed", o.seed}};
  const SphSpace s = sph_space(n, p);
  Json hs = Json::array();
  const ExtElement h[3] = {s.h1, s.h2, wedge(s.h1, s.h2)};
  for (std::size_t i = 0; i < 3; ++i) hs.push_back({{"i", i + 1}, {"h", to_string(h[i])}});
  r.payload = {{"dimV", s.dim}, {"invariants", hs}};
  r.checks.push_back(verify_sph2(n, p));
  return r;
}

// Plain-text rendering of a report.
inline std::string render_text(const RunReport& r) {
  const Json j = r.to_json();
  std::ostringstream out;
  out << j["command"].get<std::string>() << ": " << j["status"].get<std::string>() << "\n";
  for (const auto& c : j["checks"]) {
    out << "  [" << c["status"].get<std::string>() << "] " << c["check"].get<std::string>() << " "
        << c["family"].get<std::string>() << " rank " << c["rank"].get<std::size_t>() << "\n";
    if (c.contains("witness")) {
      for (const auto& f : c["witness"].value("failures", Json::array())) out << "      " << f.get<std::string>() << "\n";
      if (c["witness"].contains("error")) out << "      " << c["witness"]["error"].get<std::string>() << "\n";
    }
  }
  if (j.contains("result")) out << "result: " << j["result"].dump(2) << "\n";
  return out.str();
}

}  // namespace pluck
