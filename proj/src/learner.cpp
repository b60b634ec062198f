#include "dlexplain/learner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace dlx {

void SearchConfig::validate() const {
  if (max_expansions == 0) throw std::invalid_argument("max_expansions must be positive");
  if (max_length == 0) throw std::invalid_argument("max_length must be positive");
  if (top_k == 0) throw std::invalid_argument("top_k must be positive");
  if (length_penalty < Rational(0)) throw std::invalid_argument("length_penalty must be non-negative");
  if (noise < Rational(0) || noise >= Rational(1)) throw std::invalid_argument("noise must lie in [0, 1)");
}

RefinementOperator::RefinementOperator(const MaterializedKb& mkb, const SearchConfig& cfg)
    : mkb_(&mkb), max_length_(cfg.max_length) {
  const auto& sig = mkb.base().signature;
  std::vector<ClassExpression> roots;
  std::vector<ClassExpression> negated_leaves;
  for (const auto& cls : sig.classes) {
    if (mkb.direct_superclasses(cls).empty()) roots.push_back(ClassExpression::atomic(cls));
    if (mkb.direct_subclasses(cls).empty()) {
      negated_leaves.push_back(ClassExpression::negation(ClassExpression::atomic(cls)));
    }
  }
  top_ = roots;
  top_.insert(top_.end(), negated_leaves.begin(), negated_leaves.end());
  for (const auto& role : sig.roles) {
    top_.push_back(ClassExpression::exists(role, ClassExpression::top()));
    for (const auto& e : roots) top_.push_back(ClassExpression::forall(role, e));
    for (const auto& e : negated_leaves) top_.push_back(ClassExpression::forall(role, e));
  }
  if (cfg.enable_disjunction) {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        top_.push_back(ClassExpression::disjunction(roots[i], roots[j]));
      }
    }
  }
  for (auto& e : top_) e = canonicalize(e);
  std::sort(top_.begin(), top_.end());
  top_.erase(std::unique(top_.begin(), top_.end()), top_.end());
}

// Operands of a conjunction skip their own "and X" refinements: after
// flattening they coincide with the ones added once for the whole chain.
std::vector<ClassExpression> RefinementOperator::refine_raw(const ClassExpression& expr, std::size_t limit,
                                                            bool conjoin) const {
  std::vector<ClassExpression> out;
  auto conjoin_top = [&](const ClassExpression& base) {
    if (!conjoin) return;
    for (const auto& x : top_) {
      if (base.length() + 1 + x.length() <= limit) out.push_back(ClassExpression::conjunction(base, x));
    }
  };

  switch (expr.kind()) {
    case ExprKind::Top:
      for (const auto& x : top_) {
        if (x.length() <= limit) out.push_back(x);
      }
      return out;
    case ExprKind::Bottom:
      return out;
    case ExprKind::Atomic:
      for (const auto& sub : mkb_->direct_subclasses(expr.name())) out.push_back(ClassExpression::atomic(sub));
      conjoin_top(expr);
      return out;
    case ExprKind::Not:
      if (expr.child().is(ExprKind::Atomic)) {
        for (const auto& sup : mkb_->direct_superclasses(expr.child().name())) {
          out.push_back(ClassExpression::negation(ClassExpression::atomic(sup)));
        }
      }
      conjoin_top(expr);
      return out;
    case ExprKind::And:
    case ExprKind::Or: {
      const bool conj = expr.is(ExprKind::And);
      const auto left = expr.left();
      const auto right = expr.right();
      auto combine = [&](const ClassExpression& l, const ClassExpression& r) {
        return conj ? ClassExpression::conjunction(l, r) : ClassExpression::disjunction(l, r);
      };
      for (const auto& l : refine_raw(left, limit, !conj)) {
        if (l.length() + 1 + right.length() <= limit) out.push_back(combine(l, right));
      }
      for (const auto& r : refine_raw(right, limit, !conj)) {
        if (left.length() + 1 + r.length() <= limit) out.push_back(combine(left, r));
      }
      if (conj) {
        conjoin_top(expr);
      } else {
        out.push_back(left);
        out.push_back(right);
      }
      return out;
    }
    case ExprKind::Exists:
    case ExprKind::Forall: {
      const bool existential = expr.is(ExprKind::Exists);
      for (const auto& c : refine_raw(expr.child(), limit)) {
        if (c.length() + 2 <= limit) {
          out.push_back(existential ? ClassExpression::exists(expr.name(), c)
                                    : ClassExpression::forall(expr.name(), c));
        }
      }
      conjoin_top(expr);
      return out;
    }
  }
  return out;
}

std::vector<ClassExpression> RefinementOperator::refine(const ClassExpression& expr) const {
  return refine(expr, max_length_);
}

std::vector<ClassExpression> RefinementOperator::refine(const ClassExpression& expr, std::size_t max_length) const {
  const auto limit = std::min(max_length, max_length_);
  auto raw = refine_raw(expr, limit);
  std::vector<ClassExpression> out;
  out.reserve(raw.size());
  for (const auto& e : raw) {
    auto c = canonicalize(e);
    if (c.length() <= limit && c != expr) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ClassExpression> rho(const ClassExpression& expr, const MaterializedKb& mkb, const SearchConfig& cfg) {
  return RefinementOperator(mkb, cfg).refine(expr);
}

Rational score(const Rational& accuracy, std::size_t length, const SearchConfig& cfg) {
  return accuracy - cfg.length_penalty * Rational(static_cast<std::int64_t>(length));
}

Rational score(const Coverage& cov, std::size_t length, const SearchConfig& cfg) {
  return score(cov.accuracy, length, cfg);
}

Solution verify_solution(const MaterializedKb& mkb, const ClassExpression& expr, const LearningProblem& problem,
                         const SearchConfig& cfg) {
  Solution s;
  s.expression = canonicalize(expr);
  s.coverage = coverage(mkb, s.expression, problem);
  s.length = s.expression.length();
  s.score = score(s.coverage, s.length, cfg);
  s.approximate = s.coverage.accuracy < Rational(1) - cfg.noise;
  return s;
}

namespace {

struct Candidate {
  ClassExpression expr;
  std::size_t length = 0;
  std::size_t true_pos = 0;
  Rational accuracy;
  Rational score;
};

// Highest score first, then shorter, then lexicographic text.
struct ByScore {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.score != b.score) return a.score > b.score;
    if (a.length != b.length) return a.length < b.length;
    return a.expr.text() < b.expr.text();
  }
};

// Output order: accuracy desc, length asc, text asc.
struct ByAccuracy {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.accuracy != b.accuracy) return a.accuracy > b.accuracy;
    if (a.length != b.length) return a.length < b.length;
    return a.expr.text() < b.expr.text();
  }
};

// Lower bound on the length of anything reachable by refinement. Only
// dropping a disjunct shortens an expression.
std::size_t min_descendant_length(const ClassExpression& e) {
  switch (e.kind()) {
    case ExprKind::Or:
      return std::min(min_descendant_length(e.left()), min_descendant_length(e.right()));
    case ExprKind::And:
      return 1 + min_descendant_length(e.left()) + min_descendant_length(e.right());
    case ExprKind::Not:
      return 1 + min_descendant_length(e.child());
    case ExprKind::Exists:
    case ExprKind::Forall:
      return 2 + min_descendant_length(e.child());
    default:
      return 1;
  }
}

template <typename Order>
void insert_bounded(std::set<Candidate, Order>& ranked, const Candidate& c, std::size_t k) {
  ranked.insert(c);
  if (ranked.size() > k) ranked.erase(std::prev(ranked.end()));
}

class Search {
 public:
  Search(const MaterializedKb& mkb, const LearningProblem& problem, const SearchConfig& cfg,
         const ExpansionObserver& observer)
      : mkb_(mkb),
        problem_(problem),
        cfg_(cfg),
        observer_(observer),
        op_(mkb, cfg),
        retriever_(mkb),
        positives_(mkb.to_set(problem.positives)),
        negatives_(mkb.to_set(problem.negatives)),
        total_(static_cast<std::int64_t>(problem.size())),
        threshold_(Rational(1) - cfg.noise) {}

  SearchResult run() {
    SearchResult result;
    push(evaluate(ClassExpression::top()));
    visited_.insert(ClassExpression::top());

    while (result.expansions_used < cfg_.max_expansions && !frontier_.empty()) {
      Candidate node = *frontier_.begin();
      frontier_.erase(frontier_.begin());
      if (prunable(node)) continue;
      ++result.expansions_used;
      const auto refinements = op_.refine(node.expr, useful_length(node));
      if (observer_) observer_(node.expr, refinements);
      for (const auto& ref : refinements) {
        if (!visited_.insert(ref).second) continue;
        push(evaluate(ref));
      }
    }
    result.exhausted = frontier_.empty();

    std::vector<Candidate> chosen;
    const bool approximate = qualifying_.empty();
    if (approximate) {
      chosen.assign(best_scoring_.begin(), best_scoring_.end());
      std::sort(chosen.begin(), chosen.end(), ByAccuracy{});
    } else {
      chosen.assign(qualifying_.begin(), qualifying_.end());
    }
    for (const auto& c : chosen) {
      Solution s;
      s.expression = c.expr;
      s.coverage = coverage(mkb_, c.expr, problem_);
      s.length = c.length;
      s.score = c.score;
      s.approximate = approximate;
      result.solutions.push_back(std::move(s));
    }
    return result;
  }

 private:
  Candidate evaluate(const ClassExpression& expr) {
    const auto& ext = retriever_.extension(expr);
    const auto tp = ext.intersection_count(positives_);
    const auto fp = ext.intersection_count(negatives_);
    Candidate c;
    c.expr = expr;
    c.length = expr.length();
    c.true_pos = tp;
    const auto tn = negatives_.count() - fp;
    c.accuracy = Rational(static_cast<std::int64_t>(tp + tn), total_);
    c.score = score(c.accuracy, c.length, cfg_);
    return c;
  }

  void push(const Candidate& c) {
    if (c.accuracy >= threshold_) insert_bounded(qualifying_, c, cfg_.top_k);
    insert_bounded(best_scoring_, c, cfg_.top_k);
    if (!prunable(c)) frontier_.insert(c);
  }

  // Longest refinement of `c` that can still enter the final answer. Once
  // top_k solutions tie the best accuracy reachable from `c`, longer
  // refinements lose on length. Without disjunction no refinement step
  // shortens an expression, so their descendants lose as well.
  std::size_t useful_length(const Candidate& c) const {
    if (cfg_.enable_disjunction || qualifying_.size() < cfg_.top_k) return cfg_.max_length;
    const auto& worst = *qualifying_.rbegin();
    return best_accuracy(c) == worst.accuracy ? worst.length : cfg_.max_length;
  }

  Rational best_accuracy(const Candidate& c) const {
    return Rational(static_cast<std::int64_t>(c.true_pos + negatives_.count()), total_);
  }

  // True when no refinement of `c` can enter the final answer. Refinements
  // are downward, so they never cover more positives than `c` does.
  bool prunable(const Candidate& c) const {
    const Rational reachable = best_accuracy(c);
    const std::size_t min_length = min_descendant_length(c.expr);
    if (qualifying_.size() >= cfg_.top_k) {
      const auto& worst = *qualifying_.rbegin();
      if (reachable < worst.accuracy) return true;
      if (reachable == worst.accuracy && min_length > worst.length) return true;
    }
    if (reachable < threshold_) {
      if (!qualifying_.empty()) return true;
      if (best_scoring_.size() >= cfg_.top_k) {
        const auto best_score = score(reachable, min_length, cfg_);
        if (best_score < best_scoring_.rbegin()->score) return true;
      }
    }
    return false;
  }

  const MaterializedKb& mkb_;
  const LearningProblem& problem_;
  const SearchConfig& cfg_;
  const ExpansionObserver& observer_;
  RefinementOperator op_;
  Retriever retriever_;
  IndividualSet positives_;
  IndividualSet negatives_;
  std::int64_t total_;
  Rational threshold_;

  std::set<Candidate, ByScore> frontier_;
  std::unordered_set<ClassExpression> visited_;
  std::set<Candidate, ByAccuracy> qualifying_;
  std::set<Candidate, ByScore> best_scoring_;
};

}  // namespace

SearchResult search(const MaterializedKb& mkb, const LearningProblem& problem, const SearchConfig& cfg,
                    const ExpansionObserver& observer) {
  cfg.validate();
  check_problem(mkb, problem);
  if (problem.positives.empty() || problem.negatives.empty()) {
    throw DataError("learning problem needs positive and negative examples");
  }
  return Search(mkb, problem, cfg, observer).run();
}

}  // namespace dlx
