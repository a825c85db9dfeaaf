#pragma once

// Plain-data records the subcommands assemble, plus the JSON / CSV / text
// renderers. All measuring happens here through the core library; main.cpp
// only wires options and picks exit codes.

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "quandles/group.hpp"

namespace quandlescope {

/// Which optional measurements build_class_record should attempt.
struct RecordOptions {
  bool both_connectivity = false;  // subgroup-sweep route next to the orbit BFS
  bool audit = false;              // equivalence audit + translation-group size
  bool with_splits = false;        // orbit sizes of the class under <C>
};

/// Slim row used by the classes subcommand.
struct ClassListing {
  std::string representative;
  std::uint64_t class_size = 0;
  std::int64_t element_order = 0;
};

/// One conjugacy class, fully measured. Optionals stay empty when the
/// measurement was not requested or hit the enumeration bound; bound_hit
/// plus a note records the latter.
struct ClassRecord {
  std::string representative;
  std::uint64_t class_size = 0;
  std::int64_t element_order = 0;
  std::optional<std::uint64_t> subgroup_order;  // |<C>|
  std::optional<std::uint64_t> center_order;    // |Z(<C>)|
  std::optional<std::uint64_t> lmlt_order;      // audit only
  std::optional<bool> lmlt_identity;  // |LMlt| * |Z(<C>)| == |<C>|, audit only
  std::optional<bool> connected_direct;
  std::optional<bool> connected_criterion;
  std::optional<std::vector<std::uint64_t>> split_sizes;
  std::optional<bool> hayashi;
  std::string verdict;  // good / not_good / undecided
  std::string method;
  std::vector<std::pair<std::string, std::string>> witnesses;  // (member, z)
  std::optional<std::string> failing;  // member defeating the criterion
  std::optional<bool> audit_agreement;
  std::vector<std::string> notes;
  bool bound_hit = false;
};

/// One group with its class rows, or the errors that stopped it. Exactly one
/// of listing / classes is populated, depending on the subcommand.
struct GroupRecord {
  std::string name;
  std::string source;  // catalog spec or file path
  std::uint64_t order = 0;
  std::vector<ClassListing> listing;
  std::vector<ClassRecord> classes;
  std::vector<std::string> notes;  // e.g. skipped above the order cap
  std::vector<std::string> errors;
};

/// Measures one conjugacy class. BoundExceeded is folded into the record
/// (bound_hit + note); a failed cross-check sets audit_agreement = false.
/// Anything else propagates: it would be a defect, not a result.
ClassRecord build_class_record(const quandles::ConjClass& cls,
                               const RecordOptions& opt);

/// What the exit code needs to know about a finished run.
struct ReportFlags {
  bool any_negative = false;  // not_good, Hayashi false, or failed cross-check
  bool any_bound_hit = false;
  bool any_error = false;
};

void scan_flags_into(const GroupRecord& group, ReportFlags& flags);
ReportFlags scan_flags(const std::vector<GroupRecord>& groups);

/// Negative beats bound: a wrong verdict matters more than a skipped one.
int exit_code_for(const ReportFlags& flags);

nlohmann::json to_json(const ClassRecord& rec);
nlohmann::json to_json(const GroupRecord& rec);

/// Rolling totals for the document's summary block.
struct SummaryCounters {
  std::uint64_t groups = 0, classes = 0;
  std::uint64_t good = 0, not_good = 0, undecided = 0;
  std::uint64_t hayashi_true = 0, hayashi_false = 0, connected = 0;
  std::uint64_t bound_hits = 0, errors = 0;

  void add(const GroupRecord& rec);
  nlohmann::json to_json() const;
};

/// Full document: schema_version, tool, command, config echo, groups,
/// summary. Keys are sorted by the json library, so equal inputs render
/// byte-identically.
nlohmann::json report_document(const std::string& command,
                               const nlohmann::json& config,
                               const std::vector<GroupRecord>& groups);

/// Same document, written group by group so a large sweep never holds more
/// than one group's records. Produces byte-identical output to dumping
/// report_document with two-space indentation.
class StreamingReportWriter {
 public:
  /// Opens the file and writes everything up to the groups array.
  StreamingReportWriter(const std::string& path, const std::string& command,
                        const nlohmann::json& config);
  void add_group(const GroupRecord& rec);
  /// Writes the summary and tool blocks and closes the file.
  void finish(const SummaryCounters& summary);

 private:
  std::string path_;
  std::ofstream out_;
  bool first_ = true;
};

/// One row per (group, class); listing rows leave the verdict columns empty.
std::string render_csv(const std::vector<GroupRecord>& groups);

/// Human-readable view of the same records for stdout.
std::string render_text(const std::vector<GroupRecord>& groups);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace quandlescope
