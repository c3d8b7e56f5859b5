#pragma once

#include <memory>
#include <string>
#include <vector>

#include "limitlab/language.hpp"
#include "limitlab/text.hpp"

namespace limitlab {

/// Deterministic map from data sets to hypothesis languages.
class Learner {
 public:
  virtual ~Learner() = default;
  virtual std::string name() const = 0;
  virtual std::string describe() const { return name(); }
  virtual Language hypothesize(const DataSet& data) const = 0;
};

using LearnerPtr = std::shared_ptr<const Learner>;

/// Conjectures exactly the words seen so far.
LearnerPtr range_learner();

/// Identification by enumeration: the first family member containing the
/// range of the data; range(data) itself when no member does.
LearnerPtr enumeration_learner(std::vector<Language> family);

/// Guesses `hub` once the data looks like it keeps growing: returns `hub`
/// when range(data) ⊆ hub and the last `threshold` items are pairwise
/// distinct first occurrences in the data; range(data) otherwise.
LearnerPtr memorizing_learner(const Language& hub, std::size_t threshold);

}  // namespace limitlab
