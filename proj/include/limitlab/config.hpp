#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "limitlab/angluin.hpp"
#include "limitlab/chain.hpp"
#include "limitlab/learner.hpp"
#include "limitlab/locking.hpp"
#include "limitlab/metric.hpp"
#include "limitlab/text.hpp"

namespace limitlab {

struct LanguageSpec {
  std::string kind;  // "finite" | "pattern"
  std::vector<std::string> words;
  std::string pattern;

  Language build(const Alphabet& alphabet, const std::string& field) const;
};

struct TextSpec {
  std::string kind;  // "canonical" | "random" | "locking_prefix"
  std::optional<std::uint64_t> seed;
  std::vector<std::string> prefix;
};

struct MetricSpec {
  std::string kind;  // "exact" | "counting" | "symdiff"
  std::optional<LanguageSpec> hub;
  std::optional<double> base;
};

struct LearnerSpec {
  std::string kind;  // "range" | "enumeration" | "memorizing"
  std::vector<LanguageSpec> family;
  std::optional<LanguageSpec> hub;
  std::optional<std::size_t> threshold;
};

struct ChainSpec {
  std::string kind;  // "enumeration" | "decomposition"
  std::vector<LanguageSpec> parts;
  std::optional<LanguageSpec> limit;
  std::optional<std::size_t> coverage_max_len;
};

struct FamilySpec {
  std::vector<LanguageSpec> members;
  std::optional<FiniteSchema> schema;
  std::vector<LanguageSpec> extras;
};

/// A numeric threshold that remembers how it was written (number or "p/q")
/// so configs round-trip unchanged.
struct ThresholdSpec {
  nlohmann::json source;
  Rational value;
};

inline const std::vector<std::string> kExperiments = {"simulate",          "locking-search", "locking-verify",
                                                      "telltale-check",    "chain-convergence", "adversary",
                                                      "metric-axioms"};

/// One experiment per file, discriminated by "experiment".
struct ExperimentConfig {
  std::string alphabet;
  std::string experiment;
  std::optional<std::string> output_dir;
  std::optional<std::uint64_t> seed;

  std::optional<LearnerSpec> learner;
  std::optional<MetricSpec> metric;
  std::optional<LanguageSpec> target;
  std::optional<TextSpec> text;
  std::optional<std::size_t> horizon;
  std::optional<ThresholdSpec> epsilon;

  std::optional<std::size_t> max_prefix_len;
  std::optional<std::size_t> max_cont_len;
  std::optional<std::size_t> word_pool_size;
  std::optional<std::vector<std::string>> candidate;

  std::optional<ChainSpec> chain;
  std::optional<std::size_t> n_max;
  std::optional<std::vector<ThresholdSpec>> ladder;

  std::optional<FamilySpec> family;
  std::optional<std::size_t> max_subset_size;
  std::optional<std::size_t> max_word_len;

  std::optional<LanguageSpec> hub;  // "L_inf" for the adversary
  std::optional<std::vector<LanguageSpec>> sample;
  std::optional<double> tolerance;
};

/// Throws ConfigError naming the offending field. Validates structure,
/// positivity of bounds, the alphabet, and every language against it.
ExperimentConfig parse_config(const nlohmann::json& json);
nlohmann::json to_json(const ExperimentConfig& config);

// Builders from validated specs.
Text build_text(const TextSpec& spec, const Language& source);
MetricPtr build_metric(const MetricSpec& spec, const Alphabet& alphabet);
LearnerPtr build_learner(const LearnerSpec& spec, const Alphabet& alphabet);
LanguageChain build_chain(const ChainSpec& spec, const Alphabet& alphabet);
Family build_family(const FamilySpec& spec, const Alphabet& alphabet);

}  // namespace limitlab
