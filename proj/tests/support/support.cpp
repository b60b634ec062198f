#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dlexplain/text.hpp"

namespace dlx::test {

std::string fixture_path(const std::string& relative) { return std::string(DLX_FIXTURE_DIR) + "/" + relative; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Fixture load_fixture(const std::string& name) {
  Fixture f;
  f.name = name;
  f.kb = parse_kb(read_file(fixture_path(name + "/" + name + ".dlkb")));
  f.problem = parse_problem(read_file(fixture_path(name + "/" + name + ".prob")), f.kb.signature);
  return f;
}

std::vector<std::string> fixture_names() { return {"prop", "trains", "warehouse"}; }

ExpressionGenerator::ExpressionGenerator(std::vector<std::string> classes, std::vector<std::string> roles,
                                         unsigned seed)
    : classes_(std::move(classes)), roles_(std::move(roles)), rng_(seed) {}

ExpressionGenerator::ExpressionGenerator(const Signature& sig, unsigned seed)
    : ExpressionGenerator({sig.classes.begin(), sig.classes.end()}, {sig.roles.begin(), sig.roles.end()}, seed) {}

ClassExpression ExpressionGenerator::leaf() {
  std::uniform_int_distribution<int> pick(0, 9);
  const int r = pick(rng_);
  if (r == 0 || classes_.empty()) return r % 2 == 0 ? ClassExpression::top() : ClassExpression::bottom();
  if (r == 1) return ClassExpression::bottom();
  std::uniform_int_distribution<std::size_t> cls(0, classes_.size() - 1);
  return ClassExpression::atomic(classes_[cls(rng_)]);
}

ClassExpression ExpressionGenerator::generate(int max_depth) {
  if (max_depth <= 0) return leaf();
  std::uniform_int_distribution<int> pick(0, roles_.empty() ? 3 : 5);
  switch (pick(rng_)) {
    case 0:
      return leaf();
    case 1:
      return ClassExpression::negation(generate(max_depth - 1));
    case 2:
      return ClassExpression::conjunction(generate(max_depth - 1), generate(max_depth - 1));
    case 3:
      return ClassExpression::disjunction(generate(max_depth - 1), generate(max_depth - 1));
    default: {
      std::uniform_int_distribution<std::size_t> role(0, roles_.size() - 1);
      const auto& r = roles_[role(rng_)];
      return pick(rng_) % 2 == 0 ? ClassExpression::exists(r, generate(max_depth - 1))
                                 : ClassExpression::forall(r, generate(max_depth - 1));
    }
  }
}

std::map<std::string, std::set<std::string>> closure_fixpoint(const KnowledgeBase& kb) {
  std::map<std::string, std::set<std::string>> up;
  for (const auto& c : kb.signature.classes) up[c] = {c};
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& ax : kb.tbox) {
      if (!ax.sub.is(ExprKind::Atomic) || !ax.sup.is(ExprKind::Atomic)) continue;
      for (auto& [cls, sups] : up) {
        if (sups.contains(ax.sub.name()) && !sups.contains(ax.sup.name())) {
          sups.insert(ax.sup.name());
          changed = true;
        }
      }
    }
  }
  return up;
}

NaiveModel::NaiveModel(const KnowledgeBase& kb) : domain(kb.signature.individuals) {
  const auto up = closure_fixpoint(kb);
  for (const auto& as : kb.abox) {
    if (as.kind == AssertionKind::Class) {
      auto it = up.find(as.predicate);
      if (it == up.end()) {
        types[as.subject].insert(as.predicate);
      } else {
        types[as.subject].insert(it->second.begin(), it->second.end());
      }
    } else {
      edges.insert({as.predicate, {as.subject, as.object}});
    }
  }
}

bool NaiveModel::has_type(const std::string& a, const std::string& cls) const {
  auto it = types.find(a);
  return it != types.end() && it->second.contains(cls);
}

bool NaiveModel::has_edge(const std::string& role, const std::string& a, const std::string& b) const {
  return edges.contains({role, {a, b}});
}

namespace {

bool naive_holds(const NaiveModel& m, const std::string& a, const ClassExpression& e) {
  switch (e.kind()) {
    case ExprKind::Top:
      return true;
    case ExprKind::Bottom:
      return false;
    case ExprKind::Atomic:
      return m.has_type(a, e.name());
    case ExprKind::Not:
      return !naive_holds(m, a, e.child());
    case ExprKind::And:
      return naive_holds(m, a, e.left()) && naive_holds(m, a, e.right());
    case ExprKind::Or:
      return naive_holds(m, a, e.left()) || naive_holds(m, a, e.right());
    case ExprKind::Exists:
      for (const auto& b : m.domain) {
        if (m.has_edge(e.name(), a, b) && naive_holds(m, b, e.child())) return true;
      }
      return false;
    case ExprKind::Forall:
      for (const auto& b : m.domain) {
        if (m.has_edge(e.name(), a, b) && !naive_holds(m, b, e.child())) return false;
      }
      return true;
  }
  return false;
}

}  // namespace

std::set<std::string> naive_retrieve(const NaiveModel& model, const ClassExpression& expr) {
  std::set<std::string> out;
  for (const auto& a : model.domain) {
    if (naive_holds(model, a, expr)) out.insert(a);
  }
  return out;
}

bool fol_holds(const NaiveModel& m, const FolFormula& f, std::map<int, std::string>& env) {
  switch (f.kind()) {
    case FolKind::True:
      return true;
    case FolKind::False:
      return false;
    case FolKind::Pred1:
      return m.has_type(env.at(f.var()), f.name());
    case FolKind::Pred2:
      return m.has_edge(f.name(), env.at(f.var()), env.at(f.var2()));
    case FolKind::Not:
      return !fol_holds(m, f.first(), env);
    case FolKind::And:
      return fol_holds(m, f.first(), env) && fol_holds(m, f.second(), env);
    case FolKind::Or:
      return fol_holds(m, f.first(), env) || fol_holds(m, f.second(), env);
    case FolKind::Implies:
      return !fol_holds(m, f.first(), env) || fol_holds(m, f.second(), env);
    case FolKind::ForallVar:
    case FolKind::ExistsVar: {
      const bool universal = f.kind() == FolKind::ForallVar;
      const auto saved = env.find(f.var()) == env.end() ? std::string() : env[f.var()];
      bool result = universal;
      for (const auto& d : m.domain) {
        env[f.var()] = d;
        const bool v = fol_holds(m, f.first(), env);
        if (universal && !v) {
          result = false;
          break;
        }
        if (!universal && v) {
          result = true;
          break;
        }
      }
      if (saved.empty()) {
        env.erase(f.var());
      } else {
        env[f.var()] = saved;
      }
      return result;
    }
  }
  return false;
}

std::set<std::string> fol_extension(const NaiveModel& model, const FolFormula& f, int free_var) {
  std::set<std::string> out;
  for (const auto& a : model.domain) {
    std::map<int, std::string> env{{free_var, a}};
    if (fol_holds(model, f, env)) out.insert(a);
  }
  return out;
}

}  // namespace dlx::test
