#include "dlexplain/reasoner.hpp"

#include <algorithm>
#include <bit>

namespace dlx {

IndividualSet::IndividualSet(std::size_t size, bool value)
    : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  trim();
}

void IndividualSet::trim() {
  if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

std::size_t IndividualSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool IndividualSet::any() const {
  return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
}

bool IndividualSet::intersects(const IndividualSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::size_t IndividualSet::intersection_count(const IndividualSet& other) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) n += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return n;
}

bool IndividualSet::is_subset_of(const IndividualSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

IndividualSet& IndividualSet::operator&=(const IndividualSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

IndividualSet& IndividualSet::operator|=(const IndividualSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

IndividualSet IndividualSet::complement() const {
  IndividualSet out = *this;
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

namespace {

template <typename Map, typename Key>
const typename Map::mapped_type& lookup_or(const Map& map, const Key& key, const typename Map::mapped_type& fallback) {
  auto it = map.find(key);
  return it == map.end() ? fallback : it->second;
}

const std::set<std::string> kNoNames;

}  // namespace

const std::set<std::string>& MaterializedKb::types(const std::string& individual) const {
  return lookup_or(types_, individual, kNoNames);
}

const std::set<std::string>& MaterializedKb::successors(const std::string& role, const std::string& individual) const {
  return lookup_or(role_succ_, std::make_pair(role, individual), kNoNames);
}

const std::set<std::string>& MaterializedKb::direct_superclasses(const std::string& cls) const {
  return lookup_or(direct_supers_, cls, kNoNames);
}

const std::set<std::string>& MaterializedKb::direct_subclasses(const std::string& cls) const {
  return lookup_or(direct_subs_, cls, kNoNames);
}

std::size_t MaterializedKb::index_of(const std::string& individual) const {
  auto it = index_.find(individual);
  if (it == index_.end()) throw DataError("unknown individual '" + individual + "'");
  return it->second;
}

const IndividualSet& MaterializedKb::class_extension(const std::string& cls) const {
  return lookup_or(class_ext_, cls, empty_);
}

const std::vector<std::vector<std::size_t>>& MaterializedKb::successor_lists(const std::string& role) const {
  return lookup_or(succ_lists_, role, no_successors_);
}

IndividualSet MaterializedKb::to_set(const std::set<std::string>& individuals) const {
  IndividualSet out(names_.size());
  for (const auto& name : individuals) out.set(index_of(name));
  return out;
}

std::set<std::string> MaterializedKb::to_names(const IndividualSet& set) const {
  std::set<std::string> out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (set.test(i)) out.insert(names_[i]);
  }
  return out;
}

MaterializedKb materialize(const KnowledgeBase& kb) {
  MaterializedKb m;
  m.base_ = kb;
  m.universe_ = kb.signature.individuals;

  auto closure = subclass_closure(kb);
  m.diagnostics_ = std::move(closure.diagnostics);
  for (const auto& ax : kb.tbox) {
    if (!ax.is_atomic()) continue;
    m.direct_supers_[ax.sub.name()].insert(ax.sup.name());
    m.direct_subs_[ax.sup.name()].insert(ax.sub.name());
  }

  for (const auto& as : kb.abox) {
    if (as.kind == AssertionKind::Class) {
      const auto& ups = closure.of(as.predicate);
      auto& types = m.types_[as.subject];
      if (ups.empty()) {
        types.insert(as.predicate);
      } else {
        types.insert(ups.begin(), ups.end());
      }
    } else {
      m.role_succ_[{as.predicate, as.subject}].insert(as.object);
    }
  }

  m.names_.assign(m.universe_.begin(), m.universe_.end());
  for (std::size_t i = 0; i < m.names_.size(); ++i) m.index_.emplace(m.names_[i], i);
  const std::size_t n = m.names_.size();
  m.empty_ = IndividualSet(n);
  m.no_successors_.assign(n, {});
  for (const auto& cls : kb.signature.classes) m.class_ext_.emplace(cls, IndividualSet(n));
  for (const auto& [ind, types] : m.types_) {
    auto it = m.index_.find(ind);
    if (it == m.index_.end()) continue;
    for (const auto& cls : types) {
      auto [ext, _] = m.class_ext_.try_emplace(cls, n);
      ext->second.set(it->second);
    }
  }
  for (const auto& role : kb.signature.roles) m.succ_lists_[role].assign(n, {});
  for (const auto& [key, targets] : m.role_succ_) {
    const auto& [role, from] = key;
    auto from_it = m.index_.find(from);
    if (from_it == m.index_.end()) continue;
    auto& lists = m.succ_lists_[role];
    if (lists.empty()) lists.assign(n, {});
    for (const auto& to : targets) {
      if (auto to_it = m.index_.find(to); to_it != m.index_.end()) lists[from_it->second].push_back(to_it->second);
    }
  }
  return m;
}

const IndividualSet& Retriever::extension(const ClassExpression& expr) {
  if (auto it = cache_.find(expr); it != cache_.end()) return it->second;
  auto value = compute(expr);
  return cache_.emplace(expr, std::move(value)).first->second;
}

IndividualSet Retriever::compute(const ClassExpression& expr) {
  const std::size_t n = mkb_->individual_count();
  switch (expr.kind()) {
    case ExprKind::Top:
      return IndividualSet(n, true);
    case ExprKind::Bottom:
      return IndividualSet(n);
    case ExprKind::Atomic:
      return mkb_->class_extension(expr.name());
    case ExprKind::Not:
      return extension(expr.child()).complement();
    case ExprKind::And:
    case ExprKind::Or: {
      // Walk the right spine so inner sub-chains are not memoized.
      const bool conj = expr.is(ExprKind::And);
      IndividualSet out = extension(expr.left());
      auto rest = expr.right();
      for (; rest.kind() == expr.kind(); rest = rest.right()) {
        if (conj) {
          out &= extension(rest.left());
        } else {
          out |= extension(rest.left());
        }
      }
      if (conj) {
        out &= extension(rest);
      } else {
        out |= extension(rest);
      }
      return out;
    }
    case ExprKind::Exists:
    case ExprKind::Forall: {
      const bool existential = expr.is(ExprKind::Exists);
      const IndividualSet filler = extension(expr.child());
      const auto& lists = mkb_->successor_lists(expr.name());
      IndividualSet out(n);
      for (std::size_t a = 0; a < n; ++a) {
        const auto& succ = lists[a];
        const bool holds = existential
                               ? std::any_of(succ.begin(), succ.end(), [&](auto b) { return filler.test(b); })
                               : std::all_of(succ.begin(), succ.end(), [&](auto b) { return filler.test(b); });
        if (holds) out.set(a);
      }
      return out;
    }
  }
  return IndividualSet(n);
}

std::set<std::string> retrieve(const MaterializedKb& mkb, const ClassExpression& expr) {
  Retriever retriever(mkb);
  return mkb.to_names(retriever.extension(canonicalize(expr)));
}

namespace {

bool holds(const MaterializedKb& mkb, const std::string& a, const ClassExpression& expr) {
  switch (expr.kind()) {
    case ExprKind::Top:
      return true;
    case ExprKind::Bottom:
      return false;
    case ExprKind::Atomic:
      return mkb.types(a).contains(expr.name());
    case ExprKind::Not:
      return !holds(mkb, a, expr.child());
    case ExprKind::And:
      return holds(mkb, a, expr.left()) && holds(mkb, a, expr.right());
    case ExprKind::Or:
      return holds(mkb, a, expr.left()) || holds(mkb, a, expr.right());
    case ExprKind::Exists: {
      const auto& succ = mkb.successors(expr.name(), a);
      const auto filler = expr.child();
      return std::any_of(succ.begin(), succ.end(), [&](const auto& b) { return holds(mkb, b, filler); });
    }
    case ExprKind::Forall: {
      const auto& succ = mkb.successors(expr.name(), a);
      const auto filler = expr.child();
      return std::all_of(succ.begin(), succ.end(), [&](const auto& b) { return holds(mkb, b, filler); });
    }
  }
  return false;
}

}  // namespace

bool instance_check(const MaterializedKb& mkb, const std::string& individual, const ClassExpression& expr) {
  if (!mkb.universe().contains(individual)) throw DataError("unknown individual '" + individual + "'");
  return holds(mkb, individual, expr);
}

void check_problem(const MaterializedKb& mkb, const LearningProblem& problem) {
  for (const auto* side : {&problem.positives, &problem.negatives}) {
    for (const auto& name : *side) {
      if (!mkb.universe().contains(name)) throw DataError("unknown individual '" + name + "' in learning problem");
    }
  }
}

Coverage coverage(const MaterializedKb& mkb, const ClassExpression& expr, const LearningProblem& problem) {
  check_problem(mkb, problem);
  Coverage cov;
  for (const auto& p : problem.positives) (instance_check(mkb, p, expr) ? cov.true_pos : cov.false_neg).push_back(p);
  for (const auto& n : problem.negatives) (instance_check(mkb, n, expr) ? cov.false_pos : cov.true_neg).push_back(n);
  const auto total = static_cast<std::int64_t>(problem.size());
  cov.accuracy = total == 0 ? Rational(0)
                            : Rational(static_cast<std::int64_t>(cov.true_pos.size() + cov.true_neg.size()), total);
  return cov;
}

}  // namespace dlx
