#ifndef DLEXPLAIN_PROBLEM_HPP
#define DLEXPLAIN_PROBLEM_HPP

#include <set>
#include <string>

namespace dlx {

// Positive and negative example individuals; disjoint and both non-empty.
struct LearningProblem {
  std::set<std::string> positives;
  std::set<std::string> negatives;

  std::size_t size() const { return positives.size() + negatives.size(); }

  friend bool operator==(const LearningProblem&, const LearningProblem&) = default;
};

}  // namespace dlx

#endif  // DLEXPLAIN_PROBLEM_HPP
