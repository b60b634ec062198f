// Top-down class expression learning.
//
// Search starts at Thing and repeatedly expands the best node of the
// frontier with a downward refinement operator. Nodes are ranked by
// accuracy - penalty * length; ties go to the shorter, then the
// lexicographically smaller, canonical text.

#ifndef DLEXPLAIN_LEARNER_HPP
#define DLEXPLAIN_LEARNER_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dlexplain/expression.hpp"
#include "dlexplain/problem.hpp"
#include "dlexplain/rational.hpp"
#include "dlexplain/reasoner.hpp"

namespace dlx {

struct SearchConfig {
  std::size_t max_expansions = 10000;
  std::size_t max_length = 10;
  std::size_t top_k = 10;
  Rational length_penalty{1, 100};
  Rational noise{0};
  bool enable_disjunction = false;

  // Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct Solution {
  ClassExpression expression;  // canonical
  Coverage coverage;
  std::size_t length = 0;
  Rational score;
  bool approximate = false;
};

struct SearchNode {
  ClassExpression expression;
  Rational score;
  std::size_t length = 0;
  std::size_t expansion_count = 0;
};

struct SearchResult {
  std::vector<Solution> solutions;
  std::size_t expansions_used = 0;
  bool exhausted = false;  // frontier ran empty before the budget did
};

// The downward refinement operator. Refinements of an expression are
// canonical, deduplicated, no longer than max_length, never equal to the
// input, and sorted by text.
class RefinementOperator {
 public:
  RefinementOperator(const MaterializedKb& mkb, const SearchConfig& cfg);

  std::vector<ClassExpression> refine(const ClassExpression& expr) const;
  // Same, with the length bound lowered to `max_length` if that is smaller.
  std::vector<ClassExpression> refine(const ClassExpression& expr, std::size_t max_length) const;

  // Refinements of Thing, before the length filter is applied per call.
  const std::vector<ClassExpression>& top_refinements() const { return top_; }

 private:
  std::vector<ClassExpression> refine_raw(const ClassExpression& expr, std::size_t limit, bool conjoin = true) const;

  const MaterializedKb* mkb_;
  std::size_t max_length_;
  std::vector<ClassExpression> top_;
};

std::vector<ClassExpression> rho(const ClassExpression& expr, const MaterializedKb& mkb, const SearchConfig& cfg);

Rational score(const Coverage& cov, std::size_t length, const SearchConfig& cfg);
Rational score(const Rational& accuracy, std::size_t length, const SearchConfig& cfg);

// Sees every expanded node together with the refinements generated for it.
using ExpansionObserver = std::function<void(const ClassExpression& node, const std::vector<ClassExpression>& refinements)>;

SearchResult search(const MaterializedKb& mkb, const LearningProblem& problem, const SearchConfig& cfg,
                    const ExpansionObserver& observer = {});

// Scores a user-supplied expression (canonicalized first).
Solution verify_solution(const MaterializedKb& mkb, const ClassExpression& expr, const LearningProblem& problem,
                         const SearchConfig& cfg = {});

}  // namespace dlx

#endif  // DLEXPLAIN_LEARNER_HPP
