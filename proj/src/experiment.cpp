#include "limitlab/experiment.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "limitlab/adversary.hpp"
#include "limitlab/errors.hpp"
#include "limitlab/rng.hpp"
#include "limitlab/simulate.hpp"

namespace limitlab {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string seed_line(const ExperimentConfig& c) {
  if (c.text && c.text->seed) return "seed: " + std::to_string(*c.text->seed);
  if (c.seed) return "seed: " + std::to_string(*c.seed);
  return "seed: none";
}

std::vector<std::string> metadata(const ExperimentConfig& c, const std::string& title) {
  std::vector<std::string> lines{title, "config: " + to_json(c).dump(), seed_line(c)};
  if (c.horizon) lines.push_back("horizon: " + std::to_string(*c.horizon));
  if (c.n_max) lines.push_back("n_max: " + std::to_string(*c.n_max));
  lines.push_back("rng: " + rng_description());
  return lines;
}

struct Artifacts {
  std::string report;
  std::vector<std::pair<std::string, std::string>> files;  // name, contents
};

std::string convergence_line(const Trace& trace, const Rational& eps) {
  const auto at = check_limit_convergence(trace, eps);
  return "limit convergence eps=" + eps.to_string() + ": " +
         (at ? "entered at k=" + std::to_string(*at) : std::string("NONE within horizon"));
}

Artifacts simulate(const ExperimentConfig& c, const Alphabet& a) {
  const Language target = c.target->build(a, "target");
  const LearnerPtr learner = build_learner(*c.learner, a);
  const MetricPtr metric = build_metric(*c.metric, a);
  const Text text = build_text(*c.text, target);
  const Trace trace = run(*learner, text, target, metric, *c.horizon);

  std::ostringstream r;
  r << "experiment: simulate (verdicts are within-horizon facts, not proofs)\n"
    << "learner: " << learner->describe() << "\nmetric: " << metric->describe() << "\ntarget: " << target.describe()
    << "\ntext: " << text.describe() << "\nhorizon: " << *c.horizon << "\nrng: " << rng_description() << '\n';
  const TraceStep& last = trace.steps.back();
  r << "final hypothesis: " << (last.hypothesis.kind() == LanguageKind::Finite ? "finite" : "regular")
    << " card=" << last.hypothesis.cardinality().to_string() << '\n';
  r << "final distance: " << (last.distance ? last.distance->to_string() : std::string("domain_error")) << '\n';
  const auto stab = check_exact_stabilization(trace);
  r << "exact stabilization: " << (stab ? "stabilized at k=" + std::to_string(*stab) : std::string("NONE within horizon"))
    << '\n';
  std::vector<Rational> ladder = default_epsilon_ladder();
  if (c.epsilon && std::find(ladder.begin(), ladder.end(), c.epsilon->value) == ladder.end()) {
    ladder.insert(ladder.begin(), c.epsilon->value);
  }
  for (const auto& eps : ladder) r << convergence_line(trace, eps) << '\n';
  std::size_t flagged = 0;
  for (const auto& s : trace.steps) flagged += s.flag.empty() ? 0 : 1;
  r << "mind changes: " << mind_changes(trace) << "\nflagged steps: " << flagged << '\n';
  return {r.str(), {{"trace.csv", trace_csv(trace, metadata(c, "limitlab simulate trace"))}}};
}

LockingBounds bounds_of(const ExperimentConfig& c) {
  LockingBounds b;
  if (c.max_prefix_len) b.max_prefix_len = *c.max_prefix_len;
  if (c.max_cont_len) b.max_cont_len = *c.max_cont_len;
  if (c.word_pool_size) b.word_pool_size = *c.word_pool_size;
  return b;
}

std::string locking_detail(const LockingReport& rep) {
  std::ostringstream r;
  r << "candidate: " << rep.candidate.describe() << "\nverdict: " << (rep.passed() ? "PASS" : "FAIL")
    << (rep.passed() ? " (no counterexample in the searched universe; not a proof)" : "") << '\n'
    << "continuation universe: words " << "{";
  for (std::size_t i = 0; i < rep.pool.size(); ++i) r << (i ? "," : "") << rep.pool[i];
  r << "}, length <= " << rep.verified_up_to << ", " << rep.universe_size << " continuations\n";
  if (rep.initial_distance) r << "distance on candidate: " << rep.initial_distance->to_string() << '\n';
  if (!rep.reason.empty()) r << "reason: " << rep.reason << '\n';
  if (rep.counterexample) {
    r << "counterexample: " << rep.counterexample->describe() << " hypothesis="
      << rep.counterexample_hypothesis->describe() << " distance="
      << (rep.counterexample_distance ? rep.counterexample_distance->to_string() : std::string("domain_error")) << '\n';
  }
  return r.str();
}

Artifacts locking_search(const ExperimentConfig& c, const Alphabet& a) {
  const Language target = c.target->build(a, "target");
  const LearnerPtr learner = build_learner(*c.learner, a);
  const MetricPtr metric = build_metric(*c.metric, a);
  const LockingBounds bounds = bounds_of(c);
  const auto result = search_locking(target, *learner, *metric, c.epsilon->value, bounds);
  std::ostringstream r;
  r << "experiment: locking-search\nlearner: " << learner->describe() << "\nmetric: " << metric->describe()
    << "\ntarget: " << target.describe() << "\nepsilon: " << c.epsilon->value.to_string() << '\n'
    << "bounds searched: max_prefix_len=" << bounds.max_prefix_len << " max_cont_len=" << bounds.max_cont_len
    << " word_pool_size=" << bounds.word_pool_size << '\n'
    << "result: " << result.summary() << '\n';
  if (result.found) r << locking_detail(*result.found);
  return {r.str(), {}};
}

Artifacts locking_verify(const ExperimentConfig& c, const Alphabet& a) {
  const Language target = c.target->build(a, "target");
  const LearnerPtr learner = build_learner(*c.learner, a);
  const MetricPtr metric = build_metric(*c.metric, a);
  const LockingBounds bounds = bounds_of(c);
  const auto rep = verify_locking(DataSet(a, *c.candidate), target, *learner, *metric, c.epsilon->value,
                                  bounds.max_cont_len, bounds.word_pool_size);
  std::ostringstream r;
  r << "experiment: locking-verify\nlearner: " << learner->describe() << "\nmetric: " << metric->describe()
    << "\ntarget: " << target.describe() << "\nepsilon: " << c.epsilon->value.to_string() << '\n'
    << locking_detail(rep);
  return {r.str(), {}};
}

Artifacts telltale(const ExperimentConfig& c, const Alphabet& a) {
  const Family family = build_family(*c.family, a);
  std::optional<TelltaleBounds> bounds;
  if (c.max_subset_size || c.max_word_len) {
    TelltaleBounds b;
    if (const auto& s = family.finite_schema()) b = {s->max_words, s->max_len};
    if (c.max_subset_size) b.max_subset_size = *c.max_subset_size;
    if (c.max_word_len) b.max_word_len = *c.max_word_len;
    bounds = b;
  }
  const TelltaleReport report = check_family(family, bounds);
  return {"experiment: telltale-check\n" + report.render(family), {}};
}

Artifacts chain_convergence(const ExperimentConfig& c, const Alphabet& a) {
  const LanguageChain chain = build_chain(*c.chain, a);
  const MetricPtr metric = build_metric(*c.metric, a);
  const ChainValidation v = validate_chain(chain, *c.n_max);
  if (!v.ok) throw ValidationError("chain invariants fail: " + v.problems.front());
  std::vector<Rational> ladder = default_epsilon_ladder();
  if (c.ladder) {
    ladder.clear();
    for (const auto& t : *c.ladder) ladder.push_back(t.value);
  }
  const auto result = convergence_experiment(chain, *metric, *c.n_max, ladder);
  std::ostringstream r;
  r << "experiment: chain-convergence\nchain: " << to_string(chain.kind()) << " limit=" << chain.limit().describe()
    << "\nmetric: " << metric->describe() << "\nn_max: " << *c.n_max << "\nchain invariants: ok (n <= " << *c.n_max
    << ")\n";
  const auto& last = result.rows.back();
  r << "d(L_n_max, limit): " << (last.distance ? last.distance->to_string() : std::string("domain_error")) << '\n';
  r << result.verdict_line() << '\n';
  return {r.str(), {{"chain.csv", chain_csv(result)}}};
}

Artifacts adversary(const ExperimentConfig& c, const Alphabet& a) {
  const LearnerPtr learner = build_learner(*c.learner, a);
  const Language hub = c.hub->build(a, "L_inf");
  const AdversaryRun run = run_adversary(*learner, hub, *c.horizon);
  const std::size_t half = (*c.horizon + 1) / 2;
  std::ostringstream r;
  r << "experiment: adversary (horizon-bounded evidence, not a proof)\nlearner: " << learner->describe()
    << "\nL_inf: " << hub.describe() << "\nhorizon: " << *c.horizon << "\nmind changes: " << run.mind_changes
    << "\ntail pattern (last " << half << " steps): " << to_string(run.tail_pattern(half))
    << "\nwrong suffix length: " << run.wrong_suffix_length(half) << "\nrange(produced) within L_inf: "
    << (within(run.produced, hub) ? "yes" : "no") << "\nlearner defeated within horizon: "
    << (run.defeats_learner() ? "yes" : "no") << '\n';
  return {r.str(), {{"adversary.csv", run.csv()}}};
}

Artifacts metric_axioms(const ExperimentConfig& c, const Alphabet& a) {
  const MetricPtr metric = build_metric(*c.metric, a);
  std::vector<Language> sample;
  for (std::size_t i = 0; i < c.sample->size(); ++i) {
    sample.push_back((*c.sample)[i].build(a, "sample[" + std::to_string(i) + "]"));
  }
  const double tol = c.tolerance.value_or(1e-9);
  const AxiomReport rep = verify_metric_axioms(*metric, sample, tol);
  std::ostringstream r;
  r << "experiment: metric-axioms\nmetric: " << metric->describe() << "\nsample size: " << sample.size()
    << "\ntolerance: " << format_real(tol) << "\npairs checked: " << rep.pairs_checked
    << "\ntriples checked: " << rep.triples_checked << "\nverdict: " << (rep.pass ? "PASS" : "FAIL") << '\n';
  for (const auto& v : rep.violations) {
    r << "violation " << v.axiom << " at";
    for (const auto i : v.indices) r << ' ' << i;
    r << ": " << v.detail << '\n';
  }
  for (const auto& e : rep.domain_errors) r << "domain error " << e << '\n';
  return {r.str(), {}};
}

}  // namespace

RunOutcome run_experiment(ExperimentConfig c, const RunOptions& options) {
  RunOutcome outcome;
  if (options.seed) {
    c.seed = *options.seed;
    if (c.text && c.text->kind == "random") c.text->seed = *options.seed;
  }
  const fs::path out = options.out_dir ? *options.out_dir : c.output_dir.value_or("out");
  Artifacts artifacts;
  try {
    const Alphabet a(c.alphabet);
    const std::string& e = c.experiment;
    if (e == "simulate") artifacts = simulate(c, a);
    else if (e == "locking-search") artifacts = locking_search(c, a);
    else if (e == "locking-verify") artifacts = locking_verify(c, a);
    else if (e == "telltale-check") artifacts = telltale(c, a);
    else if (e == "chain-convergence") artifacts = chain_convergence(c, a);
    else if (e == "adversary") artifacts = adversary(c, a);
    else artifacts = metric_axioms(c, a);
  } catch (const ConfigError& err) {
    return {kExitConfig, "", {}, err.what()};
  } catch (const Error& err) {
    return {kExitDomain, "", {}, c.experiment + ": " + err.what()};
  }
  outcome.report = artifacts.report;
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) return {kExitIo, outcome.report, {}, "cannot create " + out.string() + ": " + ec.message()};
  artifacts.files.emplace_back("config.json", to_json(c).dump(2) + "\n");
  artifacts.files.emplace_back("report.txt", artifacts.report);
  for (const auto& [name, contents] : artifacts.files) {
    const fs::path path = out / name;
    std::ofstream f(path, std::ios::binary);
    f << contents;
    if (!f) return {kExitIo, outcome.report, outcome.artifacts, "cannot write " + path.string()};
    outcome.artifacts.push_back(path.string());
  }
  return outcome;
}

RunOutcome run_config(const std::string& path, const RunOptions& options) {
  std::ifstream in(path);
  if (!in) return {kExitConfig, "", {}, "cannot read config " + path};
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    return {kExitConfig, "", {}, std::string("config is not valid JSON: ") + e.what()};
  }
  try {
    return run_experiment(parse_config(j), options);
  } catch (const ConfigError& e) {
    return {kExitConfig, "", {}, e.what()};
  }
}

std::string list_builtins() {
  return R"(learners:
  range        {"kind":"range"}
  enumeration  {"kind":"enumeration","family":[<language>...]}
  memorizing   {"kind":"memorizing","L_inf":<language>,"threshold":N}
metrics:
  exact        {"kind":"exact"}
  counting     {"kind":"counting","L_inf":<language>}
  symdiff      {"kind":"symdiff","base":B}   (B > 1)
texts:
  canonical        {"kind":"canonical"}
  random           {"kind":"random","seed":N}
  locking_prefix   {"kind":"locking_prefix","prefix":[<word>...]}
chains:
  enumeration      {"kind":"enumeration","L_inf":<language>}
  decomposition    {"kind":"decomposition","parts":[<language>...],"L_inf":<language>}
languages:
  finite           {"kind":"finite","words":[<word>...]}
  pattern          {"kind":"pattern","pattern":"<symbols, |, (), *, +>"}
families:
  explicit         {"members":[<language>...]}
  schema           {"schema":{"max_words":N,"max_len":M},"extras":[<language>...]}
experiments:
  simulate           learner, metric, target, text, horizon [, epsilon]
  locking-search     learner, metric, target, epsilon [, max_prefix_len, max_cont_len, word_pool_size]
  locking-verify     learner, metric, target, epsilon, candidate [, max_cont_len, word_pool_size]
  telltale-check     family [, max_subset_size, max_word_len]
  chain-convergence  chain, metric, n_max [, ladder]
  adversary          learner, L_inf, horizon
  metric-axioms      metric, sample [, tolerance]
)";
}

}  // namespace limitlab
