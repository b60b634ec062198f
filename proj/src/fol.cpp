#include "dlexplain/fol.hpp"

namespace dlx {

FolFormula FolFormula::make(FolKind kind, std::string name, int var, int var2, FolFormula* first,
                            FolFormula* second) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->var = var;
  node->var2 = var2;
  if (first != nullptr) node->first = std::make_shared<const FolFormula>(std::move(*first));
  if (second != nullptr) node->second = std::make_shared<const FolFormula>(std::move(*second));
  return FolFormula(std::move(node));
}

FolFormula FolFormula::truth() { return make(FolKind::True, {}, 0, 0, nullptr, nullptr); }
FolFormula FolFormula::falsity() { return make(FolKind::False, {}, 0, 0, nullptr, nullptr); }
FolFormula FolFormula::pred1(std::string name, int var) {
  return make(FolKind::Pred1, std::move(name), var, 0, nullptr, nullptr);
}
FolFormula FolFormula::pred2(std::string name, int from, int to) {
  return make(FolKind::Pred2, std::move(name), from, to, nullptr, nullptr);
}
FolFormula FolFormula::negation(FolFormula f) { return make(FolKind::Not, {}, 0, 0, &f, nullptr); }
FolFormula FolFormula::conjunction(FolFormula l, FolFormula r) { return make(FolKind::And, {}, 0, 0, &l, &r); }
FolFormula FolFormula::disjunction(FolFormula l, FolFormula r) { return make(FolKind::Or, {}, 0, 0, &l, &r); }
FolFormula FolFormula::implication(FolFormula l, FolFormula r) { return make(FolKind::Implies, {}, 0, 0, &l, &r); }
FolFormula FolFormula::forall(int var, FolFormula body) { return make(FolKind::ForallVar, {}, var, 0, &body, nullptr); }
FolFormula FolFormula::exists(int var, FolFormula body) { return make(FolKind::ExistsVar, {}, var, 0, &body, nullptr); }

FolFormula translate_class(const ClassExpression& expr, int var) {
  switch (expr.kind()) {
    case ExprKind::Top:
      return FolFormula::truth();
    case ExprKind::Bottom:
      return FolFormula::falsity();
    case ExprKind::Atomic:
      return FolFormula::pred1(expr.name(), var);
    case ExprKind::Not:
      return FolFormula::negation(translate_class(expr.child(), var));
    case ExprKind::And:
      return FolFormula::conjunction(translate_class(expr.left(), var), translate_class(expr.right(), var));
    case ExprKind::Or:
      return FolFormula::disjunction(translate_class(expr.left(), var), translate_class(expr.right(), var));
    case ExprKind::Forall:
      return FolFormula::forall(var + 1, FolFormula::implication(FolFormula::pred2(expr.name(), var, var + 1),
                                                                 translate_class(expr.child(), var + 1)));
    case ExprKind::Exists:
      return FolFormula::exists(var + 1, FolFormula::conjunction(FolFormula::pred2(expr.name(), var, var + 1),
                                                                 translate_class(expr.child(), var + 1)));
  }
  return FolFormula::truth();
}

FolFormula translate_gci(const Axiom& axiom) {
  return FolFormula::forall(0, FolFormula::implication(translate_class(axiom.sub, 0), translate_class(axiom.sup, 0)));
}

std::string render_fol(const FolFormula& f) {
  auto x = [](int v) { return "x" + std::to_string(v); };
  switch (f.kind()) {
    case FolKind::True:
      return "true";
    case FolKind::False:
      return "false";
    case FolKind::Pred1:
      return f.name() + "(" + x(f.var()) + ")";
    case FolKind::Pred2:
      return f.name() + "(" + x(f.var()) + "," + x(f.var2()) + ")";
    case FolKind::Not:
      return "~" + render_fol(f.first());
    case FolKind::And:
      return "(" + render_fol(f.first()) + " & " + render_fol(f.second()) + ")";
    case FolKind::Or:
      return "(" + render_fol(f.first()) + " | " + render_fol(f.second()) + ")";
    case FolKind::Implies:
      return "(" + render_fol(f.first()) + " -> " + render_fol(f.second()) + ")";
    case FolKind::ForallVar:
      return "forall " + x(f.var()) + "." + render_fol(f.first());
    case FolKind::ExistsVar:
      return "exists " + x(f.var()) + "." + render_fol(f.first());
  }
  return {};
}

}  // namespace dlx
