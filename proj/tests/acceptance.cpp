// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "support.hpp"

using namespace pco;
using namespace pco::test;

namespace {

struct Settings {
  std::size_t samples = 50;
  std::size_t dichotomy_formulas = 300;
  std::size_t nf_formulas = 500;
  std::size_t betas = 100;
  std::size_t rule_samples = 50;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::vector<int> only;
};

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const ModelSpace& xy_space() {
  static const ModelSpace space(EnumerationBudget{binary_signature(2), 4, {}});
  return space;
}

const ModelSpace& xyz_space() {
  static const ModelSpace space(EnumerationBudget{binary_signature(3), 3, {}});
  return space;
}

Outcome example_reproduction(const Settings&) {
  const auto t0 = Clock::now();
  const auto t = tex_model();
  const auto& sig = t.signature();
  const auto after = intervene(t, InterventionSpec({{1, sig.value(1, "1")}}));
  Multiteam expected;
  expected.add(row(sig, {"0", "1", "0"}), 1);
  expected.add(row(sig, {"1", "1", "1"}), 2);
  expected.add(row(sig, {"2", "1", "2"}), 1);
  const Formula z2 = Formula::eq(2, sig.value(2, "2"));
  const Rational before = prob(t, z2), later = prob(after, z2);
  const bool arrows = causal_graph(t.laws()).has_edge(0, 1) && !causal_graph(after.laws()).has_edge(0, 1) &&
                      causal_graph(after.laws()).has_edge(1, 2);
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << "P(Z=2) = " << before << ", after do(Y=1) " << later << ", rows " << (after.team() == expected ? "match" : "differ")
    << ", X->Y " << (arrows ? "removed" : "NOT removed") << ", " << secs << " s";
  return {before == Rational(1, 2) && later == Rational(1, 4) && after.team() == expected && arrows && secs < 1.0,
          d.str()};
}

Outcome dichotomy(const Settings& s) {
  FormulaGenerator gen(binary_signature(2), s.seed);
  std::vector<Formula> fs;
  for (std::size_t i = 0; i < s.dichotomy_formulas; ++i) fs.push_back(gen.pco(4));
  std::uint64_t violations = 0, checks = 0;
  xy_space().for_each([&](std::uint64_t, const CausalMultiteam& m) {
    if (m.empty()) return true;
    for (const auto& f : fs) {
      violations += eval_pco(m, f) == eval_pco(m, neg_c(f));
      ++checks;
    }
    return true;
  });
  std::ostringstream d;
  d << checks << " model/formula pairs, " << violations << " violations";
  return {violations == 0 && checks > 0, d.str()};
}

Outcome axiom_soundness(const Settings& s) {
  std::size_t instances = 0, failures = 0, short_sets = 0;
  std::string failed;
  auto run = [&](const std::string& id, const ModelSpace& space) {
    const auto report = check_schema(id, space, s.samples, s.seed, OracleOptions{s.threads});
    instances += report.instances.size();
    failures += report.failures();
    if (report.failures() > 0) failed += " " + id;
    if (report.instances.size() < s.samples && !schema_is_finite(id)) ++short_sets;
    if (report.instances.empty()) {
      ++failures;
      failed += " " + id + "(no instances)";
    }
  };
  for (const auto& id : schema_ids()) run(id, xy_space());
  for (const char* id : {"C9", "C10", "C11"}) run(id, xyz_space());
  std::ostringstream d;
  d << schema_ids().size() << " schemas, " << instances << " instances, " << failures << " counterexamples";
  if (short_sets) d << ", " << short_sets << " random schemas below " << s.samples << " instances";
  if (!failed.empty()) d << ", failing:" << failed;
  return {failures == 0 && short_sets == 0, d.str()};
}

Outcome characterization(const Settings&) {
  const auto& space = xyz_space();
  const auto& sig = *space.budget().signature;
  const auto& law_sets = space.law_sets();
  std::vector<Formula> phi_f;
  for (const auto& f : law_sets) phi_f.push_back(build_phi_f(f));
  std::vector<std::vector<std::optional<Formula>>> dc(sig.size(), std::vector<std::optional<Formula>>(sig.size()));
  std::vector<Formula> end;
  for (Var y = 0; y < sig.size(); ++y) {
    end.push_back(build_end(sig, y));
    for (Var x = 0; x < sig.size(); ++x)
      if (x != y) dc[x][y] = build_dc(sig, x, y);
  }
  std::uint64_t violations = 0, models = 0;
  space.for_each([&](std::uint64_t, const CausalMultiteam& m) {
    if (m.empty()) return true;
    ++models;
    const auto& laws = m.laws();
    for (Var y = 0; y < sig.size(); ++y) {
      violations += eval_pco(m, end[y]) != laws.is_endogenous(y);
      for (Var x = 0; x < sig.size(); ++x) {
        if (x == y) continue;
        bool parent = false;
        if (laws.is_endogenous(y))
          for (Var p : laws.parents(y)) parent = parent || p == x;
        violations += eval_pco(m, *dc[x][y]) != parent;
      }
    }
    for (std::size_t i = 0; i < law_sets.size(); ++i) violations += eval_pco(m, phi_f[i]) != (laws == law_sets[i]);
    return true;
  });
  std::ostringstream d;
  d << models << " nonempty models, " << law_sets.size() << " law sets, " << violations << " violations";
  return {violations == 0 && models > 0, d.str()};
}

bool pearl_shape(const Formula& f) {
  switch (f.kind()) {
    case Kind::And:
    case Kind::GOr:
      return pearl_shape(f.left()) && pearl_shape(f.right());
    case Kind::Cf:
      return f.body().is_prob_atom();
    case Kind::SelImp:
      return f.consequent().is_prob_atom() ||
             (f.consequent().kind() == Kind::Cf && pearl_shape(f.consequent()));
    default:
      return true;
  }
}

Outcome normal_forms(const Settings& s) {
  FormulaGenerator gen(binary_signature(2), s.seed + 1);
  std::size_t structure = 0, disagreements = 0, increases = 0, steps = 0;
  for (std::size_t i = 0; i < s.nf_formulas; ++i) {
    const Formula f = gen.pco();
    mpz_class last = nf_measure(f);
    RewriteOptions options;
    options.check_measure = false;
    options.trace = [&](const RewriteStep& step) {
      const mpz_class next = nf_measure(step.after);
      increases += next >= last;
      last = next;
      ++steps;
    };
    const Formula g = normal_form(f, options);
    structure += !(is_normal_form(g) && pearl_shape(g));
    xy_space().for_each([&](std::uint64_t, const CausalMultiteam& m) {
      disagreements += eval_pco(m, f) != eval_pco(m, g);
      return true;
    });
  }
  std::ostringstream d;
  d << s.nf_formulas << " formulas, " << steps << " rewrite steps; " << structure << " structural failures, "
    << disagreements << " truth disagreements, " << increases << " non-decreasing steps";
  return {structure == 0 && disagreements == 0 && increases == 0, d.str()};
}

Outcome canonical(const Settings& s) {
  std::uint64_t models = 0, round_trip = 0, items = 0, identity = 0;
  for (const ModelSpace* space : {&xy_space(), &xyz_space()}) {
    FormulaGenerator gen(space->budget().signature, s.seed + 2);
    space->for_each([&](std::uint64_t, const CausalMultiteam& m) {
      if (m.empty()) return true;
      ++models;
      const auto desc = extract_description(m);
      round_trip += !(build_canonical(desc) == reduce_multiplicities(m));
      std::vector<Formula> betas;
      for (std::size_t i = 0; i < s.betas; ++i) betas.push_back(gen.co());
      const auto report = check_canonical_properties(m, betas);
      items += !report.ok();
      // P_T(β) is the sum of the weights of the assignments satisfying β.
      for (const auto& b : betas) {
        Rational sum;
        for (const auto& [a, w] : desc.weights)
          if (eval_co_at(a, m.laws(), b)) sum += w;
        identity += sum != prob(m, b);
      }
      return true;
    });
  }
  std::ostringstream d;
  d << models << " nonempty models; " << round_trip << " round-trip failures, " << items
    << " property-report failures, " << identity << " weight-sum mismatches";
  return {models > 0 && round_trip == 0 && items == 0 && identity == 0, d.str()};
}

Outcome non_equivalences(const Settings& s) {
  const auto tce = tce_model();
  const auto& space = xy_space();
  const Formula premise = parse_formula("X=0 -> Y=1", tce.signature());
  const Formula goal = parse_formula("X=0 => Y=1", tce.signature());
  const auto verdict = check_entailment({premise}, goal, space);
  bool iso = false;
  if (!verdict.holds)
    for (const auto& m : find_countermodels({premise}, goal, space, space.size())) iso = iso || isomorphic(m, tce);
  FormulaGenerator gen(binary_signature(2), s.seed + 3);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < s.samples; ++i) {
    const Formula a = gen.co(3), psi = gen.pco(3);
    failures += !check_entailment({Formula::sel(a, psi), a}, psi, space).holds;
  }
  std::ostringstream d;
  d << "countermodel " << (verdict.holds ? "missing" : "found") << (iso ? " (isomorphic to T_ce)" : " (no T_ce match)")
    << "; " << s.samples << " sampled {a => psi, a} |= psi, " << failures << " failures";
  return {!verdict.holds && iso && failures == 0, d.str()};
}

Outcome rules(const Settings& s) {
  std::ostringstream d;
  bool ok = true;
  for (const auto& rule : rule_ids()) {
    const auto report = check_rule_soundness(rule, xy_space(), s.rule_samples, s.seed, OracleOptions{s.threads});
    ok = ok && report.ok();
    d << rule << " " << report.tested() << "/" << report.cases.size() << " tested, " << report.violations()
      << " violations; ";
  }
  std::string text = d.str();
  text.resize(text.size() - 2);
  return {ok, text};
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  CLI::App app{"Acceptance criteria"};
  app.add_option("--samples", s.samples, "Instances per schema and sampled entailments")->capture_default_str();
  app.add_option("--dichotomy-formulas", s.dichotomy_formulas)->capture_default_str();
  app.add_option("--nf-formulas", s.nf_formulas)->capture_default_str();
  app.add_option("--betas", s.betas, "Random CO formulas per model")->capture_default_str();
  app.add_option("--rule-samples", s.rule_samples)->capture_default_str();
  app.add_option("--threads", s.threads)->capture_default_str();
  app.add_option("--seed", s.seed)->capture_default_str();
  app.add_option("--only", s.only, "Run only these criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome(const Settings&)>>> criteria = {
      {"example reproduction", example_reproduction},
      {"weak negation dichotomy", dichotomy},
      {"axiom soundness corpus", axiom_soundness},
      {"characterization formulas", characterization},
      {"normal form", normal_forms},
      {"canonical construction", canonical},
      {"known non-equivalences", non_equivalences},
      {"rule soundness", rules},
  };

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (!s.only.empty() && std::find(s.only.begin(), s.only.end(), n) == s.only.end()) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second(s);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << criteria[i].first << "): " << o.detail
              << " [" << seconds_since(t0) << " s]" << std::endl;
  }
  return all ? 0 : 1;
}
