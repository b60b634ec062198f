// ALC class expressions.
//
// A ClassExpression is an immutable tree shared by reference counting. Each
// node caches its length and its exact surface text, so equality, hashing and
// ordering reduce to string operations. The cached text is injective: nested
// conjunctions and disjunctions are parenthesized unless they form a
// right-leaning chain, which is also what the parser builds. Parsing the text
// of any expression therefore reproduces the same tree.

#ifndef DLEXPLAIN_EXPRESSION_HPP
#define DLEXPLAIN_EXPRESSION_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

namespace dlx {

enum class ExprKind { Top, Bottom, Atomic, Not, And, Or, Exists, Forall };

class ClassExpression {
 public:
  // Default-constructed expressions are Top.
  ClassExpression();

  static ClassExpression top();
  static ClassExpression bottom();
  static ClassExpression atomic(std::string name);
  static ClassExpression negation(const ClassExpression& child);
  static ClassExpression conjunction(const ClassExpression& left, const ClassExpression& right);
  static ClassExpression disjunction(const ClassExpression& left, const ClassExpression& right);
  static ClassExpression exists(std::string role, const ClassExpression& filler);
  static ClassExpression forall(std::string role, const ClassExpression& filler);

  ExprKind kind() const;
  bool is(ExprKind k) const { return kind() == k; }

  // Class name for Atomic, role name for Exists/Forall, empty otherwise.
  const std::string& name() const;

  // Operand of Not/Exists/Forall; left operand of And/Or.
  ClassExpression child() const;
  ClassExpression left() const { return child(); }
  ClassExpression right() const;

  std::size_t length() const;

  // Exact ASCII text of this tree (not canonicalized).
  const std::string& text() const;
  // Hash of text(), computed once per node.
  std::size_t hash() const;

  friend bool operator==(const ClassExpression& a, const ClassExpression& b) {
    return a.node_ == b.node_ || (a.hash() == b.hash() && a.text() == b.text());
  }
  friend bool operator<(const ClassExpression& a, const ClassExpression& b) {
    return a.text() < b.text();
  }

 private:
  struct Node;
  explicit ClassExpression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static ClassExpression make(ExprKind kind, std::string name, std::shared_ptr<const Node> first,
                              std::shared_ptr<const Node> second);

  std::shared_ptr<const Node> node_;
};

struct ClassExpression::Node {
  ExprKind kind = ExprKind::Top;
  std::string name;
  std::shared_ptr<const Node> first;
  std::shared_ptr<const Node> second;
  std::size_t length = 1;
  std::string text;
  std::size_t hash = 0;
};

inline ExprKind ClassExpression::kind() const { return node_->kind; }
inline const std::string& ClassExpression::name() const { return node_->name; }
inline std::size_t ClassExpression::length() const { return node_->length; }
inline const std::string& ClassExpression::text() const { return node_->text; }
inline std::size_t ClassExpression::hash() const { return node_->hash; }

// 1 for Top/Bottom/Atomic, 1+|C| for Not, 1+|C|+|D| for And/Or, 2+|C| for
// quantifiers (the role name counts).
inline std::size_t length(const ClassExpression& expr) { return expr.length(); }

// Equal-extension normal form: double negations removed, And/Or flattened,
// deduplicated, sorted by canonical text and rebuilt as right-leaning chains.
ClassExpression canonicalize(const ClassExpression& expr);

// Display-only rendering with DL symbols (never parsed back).
std::string render_unicode(const ClassExpression& expr);

}  // namespace dlx

template <>
struct std::hash<dlx::ClassExpression> {
  std::size_t operator()(const dlx::ClassExpression& e) const noexcept {
    return e.hash();
  }
};

#endif  // DLEXPLAIN_EXPRESSION_HPP
