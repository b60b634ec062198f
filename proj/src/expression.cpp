#include "dlexplain/expression.hpp"

#include <algorithm>
#include <vector>

namespace dlx {
namespace {

// Binding strength used for minimal parenthesization.
int precedence(ExprKind kind) {
  switch (kind) {
    case ExprKind::Or:
      return 0;
    case ExprKind::And:
      return 1;
    default:
      return 2;
  }
}

void append_wrapped(std::string& out, const std::string& text, ExprKind kind, int min_precedence) {
  const bool paren = precedence(kind) < min_precedence;
  if (paren) out += '(';
  out += text;
  if (paren) out += ')';
}

}  // namespace

ClassExpression::ClassExpression() : node_(top().node_) {}

ClassExpression ClassExpression::make(ExprKind kind, std::string name, std::shared_ptr<const Node> first,
                                      std::shared_ptr<const Node> second) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  switch (kind) {
    case ExprKind::Top:
      node->text = "Thing";
      break;
    case ExprKind::Bottom:
      node->text = "Nothing";
      break;
    case ExprKind::Atomic:
      node->text = node->name;
      break;
    case ExprKind::Not:
      node->length = 1 + first->length;
      node->text.reserve(first->text.size() + 6);
      node->text = "not ";
      append_wrapped(node->text, first->text, first->kind, 2);
      break;
    case ExprKind::Exists:
    case ExprKind::Forall:
      node->length = 2 + first->length;
      node->text.reserve(node->name.size() + first->text.size() + 8);
      node->text = node->name;
      node->text += kind == ExprKind::Exists ? " some " : " only ";
      append_wrapped(node->text, first->text, first->kind, 2);
      break;
    case ExprKind::And:
    case ExprKind::Or: {
      node->length = 1 + first->length + second->length;
      const int p = precedence(kind);
      node->text.reserve(first->text.size() + second->text.size() + 9);
      // Left operands of the same operator are parenthesized so that only
      // right-leaning chains print without brackets.
      append_wrapped(node->text, first->text, first->kind, p + 1);
      node->text += kind == ExprKind::And ? " and " : " or ";
      append_wrapped(node->text, second->text, second->kind, p);
      break;
    }
  }
  node->hash = std::hash<std::string>{}(node->text);
  node->first = std::move(first);
  node->second = std::move(second);
  return ClassExpression(std::move(node));
}

ClassExpression ClassExpression::top() {
  static const ClassExpression instance = make(ExprKind::Top, {}, nullptr, nullptr);
  return instance;
}

ClassExpression ClassExpression::bottom() {
  static const ClassExpression instance = make(ExprKind::Bottom, {}, nullptr, nullptr);
  return instance;
}

ClassExpression ClassExpression::atomic(std::string name) {
  return make(ExprKind::Atomic, std::move(name), nullptr, nullptr);
}

ClassExpression ClassExpression::negation(const ClassExpression& child) {
  return make(ExprKind::Not, {}, child.node_, nullptr);
}

ClassExpression ClassExpression::conjunction(const ClassExpression& left, const ClassExpression& right) {
  return make(ExprKind::And, {}, left.node_, right.node_);
}

ClassExpression ClassExpression::disjunction(const ClassExpression& left, const ClassExpression& right) {
  return make(ExprKind::Or, {}, left.node_, right.node_);
}

ClassExpression ClassExpression::exists(std::string role, const ClassExpression& filler) {
  return make(ExprKind::Exists, std::move(role), filler.node_, nullptr);
}

ClassExpression ClassExpression::forall(std::string role, const ClassExpression& filler) {
  return make(ExprKind::Forall, std::move(role), filler.node_, nullptr);
}

ClassExpression ClassExpression::child() const {
  return node_->first ? ClassExpression(node_->first) : top();
}

ClassExpression ClassExpression::right() const {
  return node_->second ? ClassExpression(node_->second) : top();
}

namespace {

void collect_operands(const ClassExpression& expr, ExprKind op, std::vector<ClassExpression>& out) {
  if (expr.kind() == op) {
    collect_operands(expr.left(), op, out);
    collect_operands(expr.right(), op, out);
  } else {
    out.push_back(canonicalize(expr));
  }
}

}  // namespace

ClassExpression canonicalize(const ClassExpression& expr) {
  switch (expr.kind()) {
    case ExprKind::Top:
    case ExprKind::Bottom:
    case ExprKind::Atomic:
      return expr;
    case ExprKind::Not: {
      auto inner = canonicalize(expr.child());
      if (inner.is(ExprKind::Not)) return inner.child();
      if (inner == expr.child()) return expr;
      return ClassExpression::negation(inner);
    }
    case ExprKind::Exists:
    case ExprKind::Forall: {
      auto inner = canonicalize(expr.child());
      if (inner == expr.child()) return expr;
      return expr.is(ExprKind::Exists) ? ClassExpression::exists(expr.name(), inner)
                                       : ClassExpression::forall(expr.name(), inner);
    }
    case ExprKind::And:
    case ExprKind::Or: {
      const auto op = expr.kind();
      std::vector<ClassExpression> operands;
      collect_operands(expr, op, operands);
      // Canonical operands of the other connective may themselves flatten
      // into this one, e.g. not not (A and B) under an And.
      std::vector<ClassExpression> flat;
      flat.reserve(operands.size());
      for (auto& o : operands) {
        if (o.kind() == op) {
          collect_operands(o, op, flat);
        } else {
          flat.push_back(std::move(o));
        }
      }
      std::sort(flat.begin(), flat.end());
      flat.erase(std::unique(flat.begin(), flat.end()), flat.end());

      // Right spine of the input. Its tail is reused where it already
      // matches the sorted operands.
      std::vector<ClassExpression> spine;
      for (auto cur = expr; ; cur = cur.right()) {
        spine.push_back(cur);
        if (cur.kind() != op) break;
      }
      auto operand_at = [&](std::size_t i) { return i + 1 == spine.size() ? spine[i] : spine[i].left(); };

      std::size_t i = spine.size();
      bool reuse = true;
      ClassExpression chain;
      for (std::size_t j = flat.size(); j-- > 0;) {
        if (reuse && i > 0 && operand_at(i - 1) == flat[j]) {
          chain = spine[--i];
          continue;
        }
        reuse = false;
        if (j + 1 == flat.size()) {
          chain = flat[j];
        } else {
          chain = op == ExprKind::And ? ClassExpression::conjunction(flat[j], chain)
                                      : ClassExpression::disjunction(flat[j], chain);
        }
      }
      return chain;
    }
  }
  return expr;
}

std::string render_unicode(const ClassExpression& expr) {
  auto grouped = [](const ClassExpression& e) {
    const auto text = render_unicode(e);
    return (e.is(ExprKind::And) || e.is(ExprKind::Or)) ? "(" + text + ")" : text;
  };
  switch (expr.kind()) {
    case ExprKind::Top:
      return "⊤";
    case ExprKind::Bottom:
      return "⊥";
    case ExprKind::Atomic:
      return expr.name();
    case ExprKind::Not:
      return "¬" + grouped(expr.child());
    case ExprKind::Exists:
      return "∃" + expr.name() + "." + grouped(expr.child());
    case ExprKind::Forall:
      return "∀" + expr.name() + "." + grouped(expr.child());
    case ExprKind::And:
    case ExprKind::Or: {
      const auto op = expr.kind();
      auto side = [&](const ClassExpression& e) {
        const bool same = e.kind() == op;
        const bool compound = e.is(ExprKind::And) || e.is(ExprKind::Or);
        return compound && !same ? "(" + render_unicode(e) + ")" : render_unicode(e);
      };
      return side(expr.left()) + (op == ExprKind::And ? " ⊓ " : " ⊔ ") + side(expr.right());
    }
  }
  return {};
}

}  // namespace dlx
