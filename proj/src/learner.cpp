#include "limitlab/learner.hpp"

#include <algorithm>
#include <unordered_set>

#include "limitlab/errors.hpp"

namespace limitlab {

namespace {

class RangeLearner final : public Learner {
 public:
  std::string name() const override { return "range"; }
  Language hypothesize(const DataSet& data) const override { return range(data); }
};

class EnumerationLearner final : public Learner {
 public:
  explicit EnumerationLearner(std::vector<Language> family) : family_(std::move(family)) {
    if (family_.empty()) throw PreconditionError("enumeration learner needs a non-empty family");
    for (const auto& l : family_) {
      if (!(l.alphabet() == family_.front().alphabet())) {
        throw PreconditionError("enumeration family spans several alphabets");
      }
    }
  }

  std::string name() const override { return "enumeration"; }
  std::string describe() const override {
    return "enumeration(" + std::to_string(family_.size()) + " members)";
  }

  Language hypothesize(const DataSet& data) const override {
    for (const auto& candidate : family_) {
      if (within(data, candidate)) return candidate;
    }
    return range(data);
  }

 private:
  std::vector<Language> family_;
};

class MemorizingLearner final : public Learner {
 public:
  MemorizingLearner(Language hub, std::size_t threshold) : hub_(std::move(hub)), threshold_(threshold) {
    if (hub_.is_finite()) throw PreconditionError("memorizing learner needs an infinite language");
    if (threshold_ == 0) throw PreconditionError("memorizing learner threshold must be positive");
  }

  std::string name() const override { return "memorizing"; }
  std::string describe() const override {
    return "memorizing(L_inf=" + hub_.describe() + ", threshold=" + std::to_string(threshold_) + ")";
  }

  Language hypothesize(const DataSet& data) const override {
    if (within(data, hub_) && recently_fresh(data)) return hub_;
    return range(data);
  }

 private:
  bool recently_fresh(const DataSet& data) const {
    const auto& items = data.items();
    if (items.size() < threshold_) return false;
    const std::size_t window = items.size() - threshold_;
    std::unordered_set<std::string_view> earlier(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(window));
    std::unordered_set<std::string_view> seen;
    for (std::size_t i = window; i < items.size(); ++i) {
      if (earlier.contains(items[i]) || !seen.insert(items[i]).second) return false;
    }
    return true;
  }

  Language hub_;
  std::size_t threshold_;
};

}  // namespace

LearnerPtr range_learner() { return std::make_shared<RangeLearner>(); }

LearnerPtr enumeration_learner(std::vector<Language> family) {
  return std::make_shared<EnumerationLearner>(std::move(family));
}

LearnerPtr memorizing_learner(const Language& hub, std::size_t threshold) {
  return std::make_shared<MemorizingLearner>(hub, threshold);
}

}  // namespace limitlab
