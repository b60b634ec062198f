// Closed-world instance retrieval.
//
// The materialized ABox is treated as a finite first-order structure: the
// domain is the set of declared individuals, class extensions are the
// asserted types closed upward along the atomic hierarchy, and role
// extensions are exactly the asserted role facts. Anything not in that
// structure is false.

#ifndef DLEXPLAIN_REASONER_HPP
#define DLEXPLAIN_REASONER_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dlexplain/expression.hpp"
#include "dlexplain/knowledge_base.hpp"
#include "dlexplain/problem.hpp"
#include "dlexplain/rational.hpp"

namespace dlx {

// Fixed-size bitset over individual indices.
class IndividualSet {
 public:
  IndividualSet() = default;
  explicit IndividualSet(std::size_t size, bool value = false);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const;
  bool any() const;
  bool intersects(const IndividualSet& other) const;
  std::size_t intersection_count(const IndividualSet& other) const;
  bool is_subset_of(const IndividualSet& other) const;

  IndividualSet& operator&=(const IndividualSet& other);
  IndividualSet& operator|=(const IndividualSet& other);
  IndividualSet complement() const;

  friend bool operator==(const IndividualSet&, const IndividualSet&) = default;

 private:
  void trim();

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class MaterializedKb {
 public:
  const KnowledgeBase& base() const { return base_; }
  const std::set<std::string>& universe() const { return universe_; }

  // Asserted classes of `individual` closed upward.
  const std::set<std::string>& types(const std::string& individual) const;
  const std::set<std::string>& successors(const std::string& role, const std::string& individual) const;

  const std::set<std::string>& direct_superclasses(const std::string& cls) const;
  const std::set<std::string>& direct_subclasses(const std::string& cls) const;

  // Complex axioms and hierarchy cycles.
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

  // Indexed view used by the set evaluator.
  std::size_t individual_count() const { return names_.size(); }
  const std::vector<std::string>& individual_names() const { return names_; }
  bool has_individual(const std::string& name) const { return index_.contains(name); }
  std::size_t index_of(const std::string& individual) const;
  const IndividualSet& class_extension(const std::string& cls) const;
  const std::vector<std::vector<std::size_t>>& successor_lists(const std::string& role) const;

  IndividualSet to_set(const std::set<std::string>& individuals) const;
  std::set<std::string> to_names(const IndividualSet& set) const;

 private:
  friend MaterializedKb materialize(const KnowledgeBase& kb);

  KnowledgeBase base_;
  std::set<std::string> universe_;
  std::map<std::string, std::set<std::string>> types_;
  std::map<std::pair<std::string, std::string>, std::set<std::string>> role_succ_;
  std::map<std::string, std::set<std::string>> direct_supers_;
  std::map<std::string, std::set<std::string>> direct_subs_;
  std::vector<Diagnostic> diagnostics_;

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_map<std::string, IndividualSet> class_ext_;
  std::unordered_map<std::string, std::vector<std::vector<std::size_t>>> succ_lists_;
  IndividualSet empty_;
  std::vector<std::vector<std::size_t>> no_successors_;
};

MaterializedKb materialize(const KnowledgeBase& kb);

// Set evaluator with a memo table keyed by canonical text. One Retriever may
// serve many queries against the same MaterializedKb.
class Retriever {
 public:
  explicit Retriever(const MaterializedKb& mkb) : mkb_(&mkb) {}

  // `expr` must be canonical; sub-expressions of canonical expressions are
  // canonical, so the text of each node is its memo key.
  const IndividualSet& extension(const ClassExpression& expr);

  std::size_t cache_size() const { return cache_.size(); }

 private:
  IndividualSet compute(const ClassExpression& expr);

  const MaterializedKb* mkb_;
  std::unordered_map<ClassExpression, IndividualSet> cache_;
};

std::set<std::string> retrieve(const MaterializedKb& mkb, const ClassExpression& expr);

// Point query; throws DataError for unknown individuals.
bool instance_check(const MaterializedKb& mkb, const std::string& individual, const ClassExpression& expr);

struct Coverage {
  std::vector<std::string> true_pos;
  std::vector<std::string> false_pos;
  std::vector<std::string> true_neg;
  std::vector<std::string> false_neg;
  Rational accuracy;

  friend bool operator==(const Coverage&, const Coverage&) = default;
};

Coverage coverage(const MaterializedKb& mkb, const ClassExpression& expr, const LearningProblem& problem);

// Throws DataError naming the first example missing from the universe.
void check_problem(const MaterializedKb& mkb, const LearningProblem& problem);

}  // namespace dlx

#endif  // DLEXPLAIN_REASONER_HPP
