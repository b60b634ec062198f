// Translation of class inclusion axioms into first-order predicate logic.
//
//   pi(C <= D)        = forall x0.(pi_x0(C) -> pi_x0(D))
//   pi_xi(A)          = A(xi)
//   pi_xi(not C)      = ~pi_xi(C)
//   pi_xi(C and D)    = pi_xi(C) & pi_xi(D)
//   pi_xi(C or D)     = pi_xi(C) | pi_xi(D)
//   pi_xi(R only C)   = forall x(i+1).(R(xi,x(i+1)) -> pi_x(i+1)(C))
//   pi_xi(R some C)   = exists x(i+1).(R(xi,x(i+1)) & pi_x(i+1)(C))
//
// Thing and Nothing map to the constants true and false.

#ifndef DLEXPLAIN_FOL_HPP
#define DLEXPLAIN_FOL_HPP

#include <memory>
#include <string>

#include "dlexplain/expression.hpp"
#include "dlexplain/knowledge_base.hpp"

namespace dlx {

enum class FolKind { True, False, Pred1, Pred2, Not, And, Or, Implies, ForallVar, ExistsVar };

class FolFormula {
 public:
  static FolFormula truth();
  static FolFormula falsity();
  static FolFormula pred1(std::string name, int var);
  static FolFormula pred2(std::string name, int from, int to);
  static FolFormula negation(FolFormula f);
  static FolFormula conjunction(FolFormula l, FolFormula r);
  static FolFormula disjunction(FolFormula l, FolFormula r);
  static FolFormula implication(FolFormula l, FolFormula r);
  static FolFormula forall(int var, FolFormula body);
  static FolFormula exists(int var, FolFormula body);

  FolKind kind() const { return node_->kind; }
  // Predicate name for Pred1/Pred2.
  const std::string& name() const { return node_->name; }
  // Pred1: variable; Pred2: first variable; quantifiers: bound variable.
  int var() const { return node_->var; }
  // Pred2: second variable.
  int var2() const { return node_->var2; }
  // Operand of Not and quantifiers; left operand of binary connectives.
  const FolFormula& first() const { return *node_->first; }
  const FolFormula& second() const { return *node_->second; }

 private:
  struct Node {
    FolKind kind = FolKind::True;
    std::string name;
    int var = 0;
    int var2 = 0;
    std::shared_ptr<const FolFormula> first;
    std::shared_ptr<const FolFormula> second;
  };
  explicit FolFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static FolFormula make(FolKind kind, std::string name, int var, int var2, FolFormula* first,
                         FolFormula* second);

  std::shared_ptr<const Node> node_;
};

// pi_x{var}(expr)
FolFormula translate_class(const ClassExpression& expr, int var);

FolFormula translate_gci(const Axiom& axiom);

// "forall x0.", "exists x1.", "->", "&", "|", "~"; binary nodes parenthesized.
std::string render_fol(const FolFormula& formula);

}  // namespace dlx

#endif  // DLEXPLAIN_FOL_HPP
