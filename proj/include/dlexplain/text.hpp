// Text formats: the Manchester-style expression syntax, the line-oriented
// .dlkb knowledge-base format and learning-problem files.
//
//   expr  := or
//   or    := and {"or" and}
//   and   := unary {"and" unary}
//   unary := "not" unary | "Thing" | "Nothing" | Name
//          | Name "some" unary | Name "only" unary | "(" expr ")"
//
// Chains of "and"/"or" are built right-leaning.

#ifndef DLEXPLAIN_TEXT_HPP
#define DLEXPLAIN_TEXT_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dlexplain/expression.hpp"
#include "dlexplain/knowledge_base.hpp"
#include "dlexplain/problem.hpp"

namespace dlx {

struct SourceSpan {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, std::string message, std::vector<std::string> expected = {});

  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::string message_;
  std::vector<std::string> expected_;
};

// Names are checked against `sig`: role names must precede some/only and
// class names must be declared classes.
ClassExpression parse_expression(std::string_view text, const Signature& sig);

// Same grammar without a signature: a name followed by some/only is taken as
// a role, any other name as a class.
ClassExpression parse_expression(std::string_view text);

// "<expr> => <expr>"; `sig` may be null for unchecked names.
Axiom parse_axiom(std::string_view text, const Signature* sig);

// Canonical form, minimal parentheses, single spaces.
std::string render_expression(const ClassExpression& expr);

KnowledgeBase parse_kb(std::string_view text);

// Declarations, then axioms, then assertions; each block sorted.
std::string serialize_kb(const KnowledgeBase& kb);

LearningProblem parse_problem(std::string_view text, const Signature& sig);

// "+ name" lines (sorted), then "- name" lines (sorted).
std::string serialize_problem(const LearningProblem& problem);

}  // namespace dlx

#endif  // DLEXPLAIN_TEXT_HPP
