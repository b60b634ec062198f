#include "dlexplain/knowledge_base.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace dlx {

std::string_view to_string(NameKind kind) {
  switch (kind) {
    case NameKind::Class:
      return "class";
    case NameKind::Role:
      return "role";
    case NameKind::Individual:
      return "individual";
  }
  return "name";
}

bool is_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_reserved_word(std::string_view name) {
  static constexpr std::array<std::string_view, 7> words = {"and", "or", "not", "some", "only", "Thing", "Nothing"};
  return std::find(words.begin(), words.end(), name) != words.end();
}

std::optional<NameKind> Signature::kind_of(const std::string& name) const {
  if (classes.contains(name)) return NameKind::Class;
  if (roles.contains(name)) return NameKind::Role;
  if (individuals.contains(name)) return NameKind::Individual;
  return std::nullopt;
}

std::string Axiom::str() const {
  if (is_atomic()) return "sub " + sub.name() + " " + sup.name();
  return "gci " + sub.text() + " => " + sup.text();
}

std::string Assertion::str() const {
  if (kind == AssertionKind::Class) return "type " + subject + " " + predicate;
  return "rel " + predicate + " " + subject + " " + object;
}

std::string Diagnostic::str() const {
  std::string out = subject;
  if (!name.empty()) out += " [" + name + "]";
  return out + ": " + message;
}

bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
  if (a.signature != b.signature || a.abox != b.abox || a.tbox.size() != b.tbox.size()) return false;
  auto keys = [](const std::vector<Axiom>& tbox) {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(tbox.size());
    for (const auto& ax : tbox) out.emplace_back(ax.sub.text(), ax.sup.text());
    std::sort(out.begin(), out.end());
    return out;
  };
  return keys(a.tbox) == keys(b.tbox);
}

namespace {

void check_expression(const ClassExpression& expr, const Signature& sig, const std::string& subject,
                      std::vector<Diagnostic>& out) {
  switch (expr.kind()) {
    case ExprKind::Top:
    case ExprKind::Bottom:
      return;
    case ExprKind::Atomic:
      if (!sig.has_class(expr.name())) out.push_back({subject, expr.name(), "undeclared class"});
      return;
    case ExprKind::Not:
      check_expression(expr.child(), sig, subject, out);
      return;
    case ExprKind::Exists:
    case ExprKind::Forall:
      if (!sig.has_role(expr.name())) out.push_back({subject, expr.name(), "undeclared role"});
      check_expression(expr.child(), sig, subject, out);
      return;
    case ExprKind::And:
    case ExprKind::Or:
      check_expression(expr.left(), sig, subject, out);
      check_expression(expr.right(), sig, subject, out);
      return;
  }
}

}  // namespace

std::vector<Diagnostic> check_well_formed(const KnowledgeBase& kb) {
  std::vector<Diagnostic> out;
  const auto& sig = kb.signature;

  auto check_names = [&](const std::set<std::string>& names, NameKind kind) {
    for (const auto& name : names) {
      const std::string subject = std::string(to_string(kind)) + " " + name;
      if (!is_identifier(name) || is_reserved_word(name)) out.push_back({subject, name, "invalid name"});
      if (kind != NameKind::Class && sig.classes.contains(name)) {
        out.push_back({subject, name, "declared as both class and " + std::string(to_string(kind))});
      }
      if (kind == NameKind::Individual && sig.roles.contains(name)) {
        out.push_back({subject, name, "declared as both role and individual"});
      }
    }
  };
  check_names(sig.classes, NameKind::Class);
  check_names(sig.roles, NameKind::Role);
  check_names(sig.individuals, NameKind::Individual);

  for (const auto& ax : kb.tbox) {
    const auto subject = ax.str();
    check_expression(ax.sub, sig, subject, out);
    check_expression(ax.sup, sig, subject, out);
  }
  for (const auto& as : kb.abox) {
    const auto subject = as.str();
    if (as.kind == AssertionKind::Class) {
      if (!sig.has_class(as.predicate)) out.push_back({subject, as.predicate, "undeclared class"});
      if (!sig.has_individual(as.subject)) out.push_back({subject, as.subject, "undeclared individual"});
    } else {
      if (!sig.has_role(as.predicate)) out.push_back({subject, as.predicate, "undeclared role"});
      if (!sig.has_individual(as.subject)) out.push_back({subject, as.subject, "undeclared individual"});
      if (!sig.has_individual(as.object)) out.push_back({subject, as.object, "undeclared individual"});
    }
  }
  return out;
}

const std::set<std::string>& SubclassClosure::of(const std::string& cls) const {
  static const std::set<std::string> empty;
  auto it = supers.find(cls);
  return it == supers.end() ? empty : it->second;
}

SubclassClosure subclass_closure(const KnowledgeBase& kb) {
  SubclassClosure result;
  std::map<std::string, std::set<std::string>> direct;
  for (const auto& cls : kb.signature.classes) direct[cls];
  for (const auto& ax : kb.tbox) {
    if (!ax.is_atomic()) {
      result.diagnostics.push_back({ax.str(), {}, "complex axiom not used for retrieval"});
      continue;
    }
    direct[ax.sub.name()].insert(ax.sup.name());
    direct[ax.sup.name()];
  }

  for (const auto& [cls, _] : direct) {
    auto& reach = result.supers[cls];
    std::vector<std::string> stack{cls};
    while (!stack.empty()) {
      auto current = std::move(stack.back());
      stack.pop_back();
      if (!reach.insert(current).second) continue;
      for (const auto& up : direct[current]) {
        if (!reach.contains(up)) stack.push_back(up);
      }
    }
  }

  for (const auto& [cls, reach] : result.supers) {
    for (const auto& other : reach) {
      if (other != cls && result.of(other).contains(cls)) {
        result.diagnostics.push_back({"class " + cls, cls, "subsumption cycle through " + other});
        break;
      }
    }
  }
  return result;
}

}  // namespace dlx
