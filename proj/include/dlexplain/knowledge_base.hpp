#ifndef DLEXPLAIN_KNOWLEDGE_BASE_HPP
#define DLEXPLAIN_KNOWLEDGE_BASE_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dlexplain/expression.hpp"

namespace dlx {

// Raised for semantically invalid data (unknown individuals, bad mappings,
// inconsistent inputs). Syntax problems use ParseError instead.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NameKind { Class, Role, Individual };

std::string_view to_string(NameKind kind);

// First character alphabetic, then alphanumerics or underscore.
bool is_identifier(std::string_view name);

// Keywords of the expression syntax; never valid as names.
bool is_reserved_word(std::string_view name);

struct Signature {
  std::set<std::string> classes;
  std::set<std::string> roles;
  std::set<std::string> individuals;

  std::optional<NameKind> kind_of(const std::string& name) const;
  bool has_class(const std::string& name) const { return classes.contains(name); }
  bool has_role(const std::string& name) const { return roles.contains(name); }
  bool has_individual(const std::string& name) const { return individuals.contains(name); }

  friend bool operator==(const Signature&, const Signature&) = default;
};

struct Axiom {
  ClassExpression sub;
  ClassExpression sup;

  // Both sides are atomic class names; only these drive the hierarchy.
  bool is_atomic() const { return sub.is(ExprKind::Atomic) && sup.is(ExprKind::Atomic); }
  std::string str() const;

  friend bool operator==(const Axiom&, const Axiom&) = default;
};

enum class AssertionKind { Class, Role };

struct Assertion {
  AssertionKind kind = AssertionKind::Class;
  std::string predicate;  // class or role name
  std::string subject;
  std::string object;  // empty for class assertions

  static Assertion of_class(std::string cls, std::string individual) {
    return {AssertionKind::Class, std::move(cls), std::move(individual), {}};
  }
  static Assertion of_role(std::string role, std::string from, std::string to) {
    return {AssertionKind::Role, std::move(role), std::move(from), std::move(to)};
  }

  std::string str() const;

  friend auto operator<=>(const Assertion&, const Assertion&) = default;
};

struct KnowledgeBase {
  Signature signature;
  std::vector<Axiom> tbox;
  std::set<Assertion> abox;
};

// TBox order is not significant for equality.
bool operator==(const KnowledgeBase& a, const KnowledgeBase& b);

struct Diagnostic {
  std::string subject;  // offending axiom, assertion or declaration
  std::string name;     // offending name, if any
  std::string message;

  std::string str() const;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

std::vector<Diagnostic> check_well_formed(const KnowledgeBase& kb);

struct SubclassClosure {
  // class -> every atomic superclass including itself
  std::map<std::string, std::set<std::string>> supers;
  // cycles and axioms ignored because a side is complex
  std::vector<Diagnostic> diagnostics;

  const std::set<std::string>& of(const std::string& cls) const;
};

SubclassClosure subclass_closure(const KnowledgeBase& kb);

}  // namespace dlx

#endif  // DLEXPLAIN_KNOWLEDGE_BASE_HPP
