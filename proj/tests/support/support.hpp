// Shared helpers for the test binaries: fixture loading, a random expression
// generator and independent oracles that never call into the reasoner.

#ifndef DLEXPLAIN_TESTS_SUPPORT_HPP
#define DLEXPLAIN_TESTS_SUPPORT_HPP

#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dlexplain/expression.hpp"
#include "dlexplain/fol.hpp"
#include "dlexplain/knowledge_base.hpp"
#include "dlexplain/problem.hpp"

namespace dlx::test {

std::string fixture_path(const std::string& relative);
std::string read_file(const std::string& path);

struct Fixture {
  std::string name;
  KnowledgeBase kb;
  LearningProblem problem;
};

// "prop", "trains" or "warehouse".
Fixture load_fixture(const std::string& name);
std::vector<std::string> fixture_names();

// Uniform random ASTs over the given names. Depth 0 yields leaves only.
class ExpressionGenerator {
 public:
  ExpressionGenerator(std::vector<std::string> classes, std::vector<std::string> roles, unsigned seed);
  explicit ExpressionGenerator(const Signature& sig, unsigned seed);

  ClassExpression generate(int max_depth);
  std::mt19937& rng() { return rng_; }

 private:
  ClassExpression leaf();

  std::vector<std::string> classes_;
  std::vector<std::string> roles_;
  std::mt19937 rng_;
};

// Reflexive-transitive closure by repeated relaxation until nothing changes.
std::map<std::string, std::set<std::string>> closure_fixpoint(const KnowledgeBase& kb);

// Closed-world structure built straight from the KB text.
struct NaiveModel {
  std::set<std::string> domain;
  std::map<std::string, std::set<std::string>> types;
  std::set<std::pair<std::string, std::pair<std::string, std::string>>> edges;  // (role, (from, to))

  explicit NaiveModel(const KnowledgeBase& kb);
  bool has_type(const std::string& a, const std::string& cls) const;
  bool has_edge(const std::string& role, const std::string& a, const std::string& b) const;
};

// Evaluates an expression individual by individual, scanning the whole edge
// set for every quantifier.
std::set<std::string> naive_retrieve(const NaiveModel& model, const ClassExpression& expr);

// Tarski-style model check of a formula under a variable assignment.
bool fol_holds(const NaiveModel& model, const FolFormula& f, std::map<int, std::string>& assignment);
std::set<std::string> fol_extension(const NaiveModel& model, const FolFormula& f, int free_var);

}  // namespace dlx::test

#endif  // DLEXPLAIN_TESTS_SUPPORT_HPP
