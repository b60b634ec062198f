#include "dlexplain/ingest.hpp"

#include <algorithm>

namespace dlx {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ws(s.back())) s.remove_suffix(1);
  return s;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!trim(line).empty()) fn(number, line);
    start = end + 1;
  }
}

}  // namespace

std::vector<AnnotationRecord> parse_annotations(std::string_view text) {
  std::vector<AnnotationRecord> records;
  std::set<std::string> seen;
  for_each_line(text, [&](int number, std::string_view line) {
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw IngestError(number, "expected '<input id><TAB><terms>'");
    AnnotationRecord record;
    record.input_id = std::string(trim(line.substr(0, tab)));
    if (record.input_id.empty()) throw IngestError(number, "blank input id");
    if (!is_identifier(record.input_id)) throw IngestError(number, "invalid input id '" + record.input_id + "'");
    if (!seen.insert(record.input_id).second) throw IngestError(number, "duplicate input id '" + record.input_id + "'");
    const auto rest = line.substr(tab + 1);
    if (!trim(rest).empty()) {
      std::size_t start = 0;
      while (start <= rest.size()) {
        auto comma = rest.find(',', start);
        if (comma == std::string_view::npos) comma = rest.size();
        const auto term = trim(rest.substr(start, comma - start));
        if (term.empty()) throw IngestError(number, "empty term");
        if (!is_identifier(term)) throw IngestError(number, "invalid term '" + std::string(term) + "'");
        record.terms.emplace_back(term);
        start = comma + 1;
      }
    }
    if (record.terms.empty()) throw IngestError(number, "no terms for input '" + record.input_id + "'");
    records.push_back(std::move(record));
  });
  return records;
}

MappingTable parse_mapping(std::string_view text) {
  MappingTable mapping;
  for_each_line(text, [&](int number, std::string_view line) {
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw IngestError(number, "expected '<term><TAB><ClassName>'");
    const std::string term(trim(line.substr(0, tab)));
    const std::string cls(trim(line.substr(tab + 1)));
    if (term.empty() || cls.empty()) throw IngestError(number, "blank term or class");
    if (!is_identifier(cls)) throw IngestError(number, "invalid class name '" + cls + "'");
    auto [it, inserted] = mapping.emplace(term, cls);
    if (!inserted && it->second != cls) {
      throw IngestError(number, "term '" + term + "' mapped to both " + it->second + " and " + cls);
    }
  });
  return mapping;
}

std::string object_individual_name(const std::string& term, const std::string& input_id, std::size_t occurrence) {
  std::string name = term + "_" + input_id;
  if (occurrence > 1) name += "_" + std::to_string(occurrence);
  return name;
}

KnowledgeBase build_abox(const std::vector<AnnotationRecord>& records, const MappingTable& mapping,
                         const std::string& role, const KnowledgeBase& background) {
  if (!is_identifier(role) || is_reserved_word(role)) throw IngestError(0, "invalid role name '" + role + "'");
  if (auto kind = background.signature.kind_of(role); kind && *kind != NameKind::Role) {
    throw IngestError(0, "'" + role + "' is a " + std::string(to_string(*kind)) + " in the background ontology");
  }

  std::set<std::string> unmapped;
  for (const auto& r : records) {
    for (const auto& t : r.terms) {
      if (!mapping.contains(t)) unmapped.insert(t);
    }
  }
  if (!unmapped.empty()) {
    std::string list;
    for (const auto& t : unmapped) list += (list.empty() ? "" : ", ") + t;
    throw IngestError(0, "unmapped terms: " + list);
  }
  for (const auto& [term, cls] : mapping) {
    if (!background.signature.has_class(cls)) {
      throw IngestError(0, "term '" + term + "' maps to class '" + cls + "' missing from the background ontology");
    }
  }

  KnowledgeBase kb = background;
  kb.signature.roles.insert(role);
  auto claim = [&](const std::string& name) {
    if (!is_identifier(name) || is_reserved_word(name)) throw IngestError(0, "invalid individual name '" + name + "'");
    if (background.signature.kind_of(name)) {
      throw IngestError(0, "individual '" + name + "' collides with a name in the background ontology");
    }
    if (!kb.signature.individuals.insert(name).second) {
      throw IngestError(0, "generated individual name '" + name + "' is not unique");
    }
  };

  for (const auto& r : records) {
    claim(r.input_id);
    std::map<std::string, std::size_t> occurrences;
    for (const auto& t : r.terms) {
      const auto obj = object_individual_name(t, r.input_id, ++occurrences[t]);
      claim(obj);
      kb.abox.insert(Assertion::of_class(mapping.at(t), obj));
      kb.abox.insert(Assertion::of_role(role, r.input_id, obj));
    }
  }
  return kb;
}

LearningProblem emit_problem(const std::vector<AnnotationRecord>& records, const std::set<std::string>& positive_ids) {
  LearningProblem problem;
  std::set<std::string> ids;
  for (const auto& r : records) ids.insert(r.input_id);
  for (const auto& p : positive_ids) {
    if (!ids.contains(p)) throw IngestError(0, "positive id '" + p + "' has no annotation record");
  }
  for (const auto& id : ids) (positive_ids.contains(id) ? problem.positives : problem.negatives).insert(id);
  if (problem.positives.empty()) throw IngestError(0, "no positive examples");
  if (problem.negatives.empty()) throw IngestError(0, "no negative examples: every input is positive");
  return problem;
}

}  // namespace dlx
