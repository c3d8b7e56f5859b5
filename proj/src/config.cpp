#include "limitlab/config.hpp"

#include <algorithm>
#include <set>

#include "limitlab/errors.hpp"

namespace limitlab {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) { throw ConfigError(field, message); }

void only_keys(const json& j, const std::string& field, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(field, "expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!ok.contains(key)) fail(field.empty() ? key : field + "." + key, "unknown key");
  }
}

const json& require(const json& j, const std::string& field, const char* key) {
  if (!j.contains(key)) fail(field.empty() ? key : field + "." + key, "missing");
  return j.at(key);
}

std::string sub(const std::string& field, const std::string& key) { return field.empty() ? key : field + "." + key; }

std::string get_string(const json& j, const std::string& field) {
  if (!j.is_string()) fail(field, "expected a string");
  return j.get<std::string>();
}

std::size_t get_positive(const json& j, const std::string& field) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) fail(field, "expected a positive integer");
  if (j.get<std::int64_t>() <= 0) fail(field, "must be positive");
  return j.get<std::size_t>();
}

std::uint64_t get_seed(const json& j, const std::string& field) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) fail(field, "expected a non-negative integer");
  if (j.is_number_integer() && j.get<std::int64_t>() < 0) fail(field, "must be non-negative");
  return j.get<std::uint64_t>();
}

std::vector<std::string> get_words(const json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of words");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_string(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

ThresholdSpec get_threshold(const json& j, const std::string& field) {
  Rational value;
  try {
    if (j.is_number()) {
      value = Rational::approximate(j.get<double>());
    } else if (j.is_string()) {
      value = Rational::parse(j.get<std::string>());
    } else {
      fail(field, "expected a number or \"p/q\"");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    fail(field, e.what());
  }
  if (value <= Rational(0)) fail(field, "must be positive");
  return {j, value};
}

LanguageSpec parse_language(const json& j, const std::string& field, const Alphabet& alphabet) {
  LanguageSpec spec;
  spec.kind = get_string(require(j, field, "kind"), sub(field, "kind"));
  if (spec.kind == "finite") {
    only_keys(j, field, {"kind", "words"});
    spec.words = get_words(require(j, field, "words"), sub(field, "words"));
  } else if (spec.kind == "pattern") {
    only_keys(j, field, {"kind", "pattern"});
    spec.pattern = get_string(require(j, field, "pattern"), sub(field, "pattern"));
  } else {
    fail(sub(field, "kind"), "expected \"finite\" or \"pattern\"");
  }
  spec.build(alphabet, field);  // validates against the alphabet
  return spec;
}

json language_json(const LanguageSpec& spec) {
  if (spec.kind == "finite") return {{"kind", "finite"}, {"words", spec.words}};
  return {{"kind", "pattern"}, {"pattern", spec.pattern}};
}

std::vector<LanguageSpec> parse_languages(const json& j, const std::string& field, const Alphabet& alphabet) {
  if (!j.is_array()) fail(field, "expected an array of languages");
  std::vector<LanguageSpec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_language(j[i], field + "[" + std::to_string(i) + "]", alphabet));
  }
  return out;
}

json languages_json(const std::vector<LanguageSpec>& specs) {
  json out = json::array();
  for (const auto& s : specs) out.push_back(language_json(s));
  return out;
}

TextSpec parse_text(const json& j, const std::string& field, const Alphabet& alphabet) {
  TextSpec spec;
  spec.kind = get_string(require(j, field, "kind"), sub(field, "kind"));
  if (spec.kind == "canonical") {
    only_keys(j, field, {"kind"});
  } else if (spec.kind == "random") {
    only_keys(j, field, {"kind", "seed"});
    spec.seed = get_seed(require(j, field, "seed"), sub(field, "seed"));
  } else if (spec.kind == "locking_prefix") {
    only_keys(j, field, {"kind", "prefix"});
    spec.prefix = get_words(require(j, field, "prefix"), sub(field, "prefix"));
    if (spec.prefix.empty()) fail(sub(field, "prefix"), "must not be empty");
    for (const auto& w : spec.prefix) {
      if (!alphabet.is_word(w)) fail(sub(field, "prefix"), "'" + w + "' is not a word over '" + alphabet.symbols() + "'");
    }
  } else {
    fail(sub(field, "kind"), "expected \"canonical\", \"random\" or \"locking_prefix\"");
  }
  return spec;
}

json text_json(const TextSpec& spec) {
  json out{{"kind", spec.kind}};
  if (spec.kind == "random") out["seed"] = *spec.seed;
  if (spec.kind == "locking_prefix") out["prefix"] = spec.prefix;
  return out;
}

MetricSpec parse_metric(const json& j, const std::string& field, const Alphabet& alphabet) {
  MetricSpec spec;
  spec.kind = get_string(require(j, field, "kind"), sub(field, "kind"));
  if (spec.kind == "exact") {
    only_keys(j, field, {"kind"});
  } else if (spec.kind == "counting") {
    only_keys(j, field, {"kind", "L_inf"});
    spec.hub = parse_language(require(j, field, "L_inf"), sub(field, "L_inf"), alphabet);
    if (spec.hub->build(alphabet, field).is_finite()) fail(sub(field, "L_inf"), "must be infinite");
  } else if (spec.kind == "symdiff") {
    only_keys(j, field, {"kind", "base"});
    const json& base = require(j, field, "base");
    if (!base.is_number()) fail(sub(field, "base"), "expected a number");
    spec.base = base.get<double>();
    if (!(*spec.base > 1)) fail(sub(field, "base"), "must be > 1");
  } else {
    fail(sub(field, "kind"), "expected \"exact\", \"counting\" or \"symdiff\"");
  }
  return spec;
}

json metric_json(const MetricSpec& spec) {
  json out{{"kind", spec.kind}};
  if (spec.hub) out["L_inf"] = language_json(*spec.hub);
  if (spec.base) out["base"] = *spec.base;
  return out;
}

LearnerSpec parse_learner(const json& j, const std::string& field, const Alphabet& alphabet) {
  LearnerSpec spec;
  spec.kind = get_string(require(j, field, "kind"), sub(field, "kind"));
  if (spec.kind == "range") {
    only_keys(j, field, {"kind"});
  } else if (spec.kind == "enumeration") {
    only_keys(j, field, {"kind", "family"});
    spec.family = parse_languages(require(j, field, "family"), sub(field, "family"), alphabet);
    if (spec.family.empty()) fail(sub(field, "family"), "must not be empty");
  } else if (spec.kind == "memorizing") {
    only_keys(j, field, {"kind", "L_inf", "threshold"});
    spec.hub = parse_language(require(j, field, "L_inf"), sub(field, "L_inf"), alphabet);
    if (spec.hub->build(alphabet, field).is_finite()) fail(sub(field, "L_inf"), "must be infinite");
    spec.threshold = get_positive(require(j, field, "threshold"), sub(field, "threshold"));
  } else {
    fail(sub(field, "kind"), "expected \"range\", \"enumeration\" or \"memorizing\"");
  }
  return spec;
}

json learner_json(const LearnerSpec& spec) {
  json out{{"kind", spec.kind}};
  if (spec.kind == "enumeration") out["family"] = languages_json(spec.family);
  if (spec.hub) out["L_inf"] = language_json(*spec.hub);
  if (spec.threshold) out["threshold"] = *spec.threshold;
  return out;
}

ChainSpec parse_chain(const json& j, const std::string& field, const Alphabet& alphabet) {
  ChainSpec spec;
  spec.kind = get_string(require(j, field, "kind"), sub(field, "kind"));
  if (spec.kind == "enumeration") {
    only_keys(j, field, {"kind", "L_inf"});
  } else if (spec.kind == "decomposition") {
    only_keys(j, field, {"kind", "parts", "L_inf", "coverage_max_len"});
    spec.parts = parse_languages(require(j, field, "parts"), sub(field, "parts"), alphabet);
    if (spec.parts.empty()) fail(sub(field, "parts"), "must not be empty");
    if (j.contains("coverage_max_len")) {
      spec.coverage_max_len = get_positive(j.at("coverage_max_len"), sub(field, "coverage_max_len"));
    }
  } else {
    fail(sub(field, "kind"), "expected \"enumeration\" or \"decomposition\"");
  }
  spec.limit = parse_language(require(j, field, "L_inf"), sub(field, "L_inf"), alphabet);
  if (spec.kind == "enumeration" && spec.limit->build(alphabet, field).is_finite()) {
    fail(sub(field, "L_inf"), "must be infinite for an enumeration chain");
  }
  return spec;
}

json chain_json(const ChainSpec& spec) {
  json out{{"kind", spec.kind}};
  if (spec.kind == "decomposition") out["parts"] = languages_json(spec.parts);
  out["L_inf"] = language_json(*spec.limit);
  if (spec.coverage_max_len) out["coverage_max_len"] = *spec.coverage_max_len;
  return out;
}

FamilySpec parse_family(const json& j, const std::string& field, const Alphabet& alphabet) {
  FamilySpec spec;
  if (j.contains("members")) {
    only_keys(j, field, {"members"});
    spec.members = parse_languages(j.at("members"), sub(field, "members"), alphabet);
    if (spec.members.empty()) fail(sub(field, "members"), "must not be empty");
  } else if (j.contains("schema")) {
    only_keys(j, field, {"schema", "extras"});
    const std::string sf = sub(field, "schema");
    const json& s = j.at("schema");
    only_keys(s, sf, {"max_words", "max_len"});
    spec.schema = FiniteSchema{get_positive(require(s, sf, "max_words"), sub(sf, "max_words")),
                               get_positive(require(s, sf, "max_len"), sub(sf, "max_len"))};
    if (j.contains("extras")) spec.extras = parse_languages(j.at("extras"), sub(field, "extras"), alphabet);
  } else {
    fail(field, "expected \"members\" or \"schema\"");
  }
  return spec;
}

json family_json(const FamilySpec& spec) {
  if (!spec.schema) return {{"members", languages_json(spec.members)}};
  json out{{"schema", {{"max_words", spec.schema->max_words}, {"max_len", spec.schema->max_len}}}};
  if (!spec.extras.empty()) out["extras"] = languages_json(spec.extras);
  return out;
}

// Required top-level keys per experiment.
void require_keys(const ExperimentConfig& c, const json& j) {
  auto need = [&](const char* key) {
    if (!j.contains(key)) fail(key, "required for experiment \"" + c.experiment + "\"");
  };
  const std::string& e = c.experiment;
  if (e == "simulate") {
    for (auto k : {"learner", "metric", "target", "text", "horizon"}) need(k);
  } else if (e == "locking-search") {
    for (auto k : {"learner", "metric", "target", "epsilon"}) need(k);
  } else if (e == "locking-verify") {
    for (auto k : {"learner", "metric", "target", "epsilon", "candidate"}) need(k);
  } else if (e == "telltale-check") {
    need("family");
  } else if (e == "chain-convergence") {
    for (auto k : {"chain", "metric", "n_max"}) need(k);
  } else if (e == "adversary") {
    for (auto k : {"learner", "L_inf", "horizon"}) need(k);
  } else if (e == "metric-axioms") {
    for (auto k : {"metric", "sample"}) need(k);
  }
}

}  // namespace

Language LanguageSpec::build(const Alphabet& alphabet, const std::string& field) const {
  try {
    if (kind == "finite") return Language::finite(alphabet, words);
    return Language::pattern(alphabet, pattern);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    fail(field, e.what());
  }
}

ExperimentConfig parse_config(const json& j) {
  only_keys(j, "", {"alphabet", "experiment", "output_dir", "seed", "learner", "metric", "target", "text",
                    "horizon", "epsilon", "max_prefix_len", "max_cont_len", "word_pool_size", "candidate", "chain",
                    "n_max", "ladder", "family", "max_subset_size", "max_word_len", "L_inf", "sample", "tolerance"});
  ExperimentConfig c;
  c.alphabet = get_string(require(j, "", "alphabet"), "alphabet");
  std::optional<Alphabet> alpha;
  try {
    alpha.emplace(c.alphabet);
  } catch (const Error& e) {
    fail("alphabet", e.what());
  }
  const Alphabet& a = *alpha;
  c.experiment = get_string(require(j, "", "experiment"), "experiment");
  if (std::find(kExperiments.begin(), kExperiments.end(), c.experiment) == kExperiments.end()) {
    fail("experiment", "unknown experiment \"" + c.experiment + "\"");
  }
  require_keys(c, j);

  if (j.contains("output_dir")) c.output_dir = get_string(j.at("output_dir"), "output_dir");
  if (j.contains("seed")) c.seed = get_seed(j.at("seed"), "seed");
  if (j.contains("learner")) c.learner = parse_learner(j.at("learner"), "learner", a);
  if (j.contains("metric")) c.metric = parse_metric(j.at("metric"), "metric", a);
  if (j.contains("target")) c.target = parse_language(j.at("target"), "target", a);
  if (j.contains("text")) c.text = parse_text(j.at("text"), "text", a);
  if (j.contains("horizon")) c.horizon = get_positive(j.at("horizon"), "horizon");
  if (j.contains("epsilon")) c.epsilon = get_threshold(j.at("epsilon"), "epsilon");
  if (j.contains("max_prefix_len")) c.max_prefix_len = get_positive(j.at("max_prefix_len"), "max_prefix_len");
  if (j.contains("max_cont_len")) c.max_cont_len = get_positive(j.at("max_cont_len"), "max_cont_len");
  if (j.contains("word_pool_size")) c.word_pool_size = get_positive(j.at("word_pool_size"), "word_pool_size");
  if (j.contains("candidate")) {
    c.candidate = get_words(j.at("candidate"), "candidate");
    if (c.candidate->empty()) fail("candidate", "must not be empty");
    for (const auto& w : *c.candidate) {
      if (!a.is_word(w)) fail("candidate", "'" + w + "' is not a word over '" + a.symbols() + "'");
    }
  }
  if (j.contains("chain")) c.chain = parse_chain(j.at("chain"), "chain", a);
  if (j.contains("n_max")) c.n_max = get_positive(j.at("n_max"), "n_max");
  if (j.contains("ladder")) {
    const json& l = j.at("ladder");
    if (!l.is_array() || l.empty()) fail("ladder", "expected a non-empty array");
    c.ladder.emplace();
    for (std::size_t i = 0; i < l.size(); ++i) c.ladder->push_back(get_threshold(l[i], "ladder[" + std::to_string(i) + "]"));
  }
  if (j.contains("family")) c.family = parse_family(j.at("family"), "family", a);
  if (j.contains("max_subset_size")) c.max_subset_size = get_positive(j.at("max_subset_size"), "max_subset_size");
  if (j.contains("max_word_len")) c.max_word_len = get_positive(j.at("max_word_len"), "max_word_len");
  if (j.contains("L_inf")) {
    c.hub = parse_language(j.at("L_inf"), "L_inf", a);
    if (c.hub->build(a, "L_inf").is_finite()) fail("L_inf", "must be infinite");
  }
  if (j.contains("sample")) {
    c.sample = parse_languages(j.at("sample"), "sample", a);
    if (c.sample->empty()) fail("sample", "must not be empty");
  }
  if (j.contains("tolerance")) {
    const json& t = j.at("tolerance");
    if (!t.is_number() || !(t.get<double>() > 0)) fail("tolerance", "expected a positive number");
    c.tolerance = t.get<double>();
  }
  return c;
}

json to_json(const ExperimentConfig& c) {
  json j;
  j["alphabet"] = c.alphabet;
  j["experiment"] = c.experiment;
  if (c.output_dir) j["output_dir"] = *c.output_dir;
  if (c.seed) j["seed"] = *c.seed;
  if (c.learner) j["learner"] = learner_json(*c.learner);
  if (c.metric) j["metric"] = metric_json(*c.metric);
  if (c.target) j["target"] = language_json(*c.target);
  if (c.text) j["text"] = text_json(*c.text);
  if (c.horizon) j["horizon"] = *c.horizon;
  if (c.epsilon) j["epsilon"] = c.epsilon->source;
  if (c.max_prefix_len) j["max_prefix_len"] = *c.max_prefix_len;
  if (c.max_cont_len) j["max_cont_len"] = *c.max_cont_len;
  if (c.word_pool_size) j["word_pool_size"] = *c.word_pool_size;
  if (c.candidate) j["candidate"] = *c.candidate;
  if (c.chain) j["chain"] = chain_json(*c.chain);
  if (c.n_max) j["n_max"] = *c.n_max;
  if (c.ladder) {
    json l = json::array();
    for (const auto& t : *c.ladder) l.push_back(t.source);
    j["ladder"] = l;
  }
  if (c.family) j["family"] = family_json(*c.family);
  if (c.max_subset_size) j["max_subset_size"] = *c.max_subset_size;
  if (c.max_word_len) j["max_word_len"] = *c.max_word_len;
  if (c.hub) j["L_inf"] = language_json(*c.hub);
  if (c.sample) j["sample"] = languages_json(*c.sample);
  if (c.tolerance) j["tolerance"] = *c.tolerance;
  return j;
}

Text build_text(const TextSpec& spec, const Language& source) {
  if (spec.kind == "canonical") return canonical_text(source);
  if (spec.kind == "random") return random_fair_text(source, spec.seed.value_or(0));
  return locking_prefix_text(DataSet(source.alphabet(), spec.prefix), source);
}

MetricPtr build_metric(const MetricSpec& spec, const Alphabet& alphabet) {
  if (spec.kind == "exact") return exact_metric();
  if (spec.kind == "counting") return counting_metric(spec.hub->build(alphabet, "metric.L_inf"));
  return symdiff_metric(spec.base.value_or(2.0));
}

LearnerPtr build_learner(const LearnerSpec& spec, const Alphabet& alphabet) {
  if (spec.kind == "range") return range_learner();
  if (spec.kind == "enumeration") {
    std::vector<Language> family;
    for (std::size_t i = 0; i < spec.family.size(); ++i) {
      family.push_back(spec.family[i].build(alphabet, "learner.family[" + std::to_string(i) + "]"));
    }
    return enumeration_learner(std::move(family));
  }
  return memorizing_learner(spec.hub->build(alphabet, "learner.L_inf"), *spec.threshold);
}

LanguageChain build_chain(const ChainSpec& spec, const Alphabet& alphabet) {
  const Language limit = spec.limit->build(alphabet, "chain.L_inf");
  if (spec.kind == "enumeration") return chain_from_enumeration(limit);
  std::vector<Language> parts;
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    parts.push_back(spec.parts[i].build(alphabet, "chain.parts[" + std::to_string(i) + "]"));
  }
  return chain_from_decomposition(std::move(parts), limit, spec.coverage_max_len.value_or(8));
}

Family build_family(const FamilySpec& spec, const Alphabet& alphabet) {
  if (spec.schema) {
    std::vector<Language> extras;
    for (std::size_t i = 0; i < spec.extras.size(); ++i) {
      extras.push_back(spec.extras[i].build(alphabet, "family.extras[" + std::to_string(i) + "]"));
    }
    return Family::schema(alphabet, *spec.schema, std::move(extras));
  }
  std::vector<Language> members;
  for (std::size_t i = 0; i < spec.members.size(); ++i) {
    members.push_back(spec.members[i].build(alphabet, "family.members[" + std::to_string(i) + "]"));
  }
  return Family::explicit_members(std::move(members));
}

}  // namespace limitlab
