// Turning per-input object annotations into an ABox over a background
// ontology. Each input becomes an individual; each object term occurrence
// becomes an individual typed with its mapped class and linked to the input
// through a single role.

#ifndef DLEXPLAIN_INGEST_HPP
#define DLEXPLAIN_INGEST_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dlexplain/knowledge_base.hpp"
#include "dlexplain/problem.hpp"

namespace dlx {

struct AnnotationRecord {
  std::string input_id;
  std::vector<std::string> terms;  // in annotation order, duplicates kept

  friend bool operator==(const AnnotationRecord&, const AnnotationRecord&) = default;
};

// term -> atomic class name
using MappingTable = std::map<std::string, std::string>;

class IngestError : public DataError {
 public:
  IngestError(int line, const std::string& message)
      : DataError(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

  // 1-based; 0 when the error is not tied to a line.
  int line() const { return line_; }

 private:
  int line_;
};

// "input_id<TAB>term, term, ..." per line; blank lines and "#" comments skipped.
std::vector<AnnotationRecord> parse_annotations(std::string_view text);

// "term<TAB>ClassName" per line.
MappingTable parse_mapping(std::string_view text);

// Individual name for the k-th (1-based) occurrence of `term` in a record.
std::string object_individual_name(const std::string& term, const std::string& input_id, std::size_t occurrence);

KnowledgeBase build_abox(const std::vector<AnnotationRecord>& records, const MappingTable& mapping,
                         const std::string& role, const KnowledgeBase& background);

LearningProblem emit_problem(const std::vector<AnnotationRecord>& records, const std::set<std::string>& positive_ids);

}  // namespace dlx

#endif  // DLEXPLAIN_INGEST_HPP
