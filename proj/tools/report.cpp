#include "report.hpp"

#include <fstream>
#include <sstream>

#include "quandles/errors.hpp"
#include "quandles/goodness.hpp"
#include "quandles/quandle.hpp"
#include "version.hpp"

namespace quandlescope {

using nlohmann::json;
using quandles::BoundExceeded;
using quandles::ConjClass;
using quandles::ConjugationQuandle;
using quandles::EquivalenceViolation;
using quandles::FiniteGroup;

ClassRecord build_class_record(const ConjClass& cls, const RecordOptions& opt) {
  ClassRecord rec;
  const FiniteGroup& g = cls.ambient;
  rec.representative = to_string(cls.representative);
  rec.class_size = cls.size();
  rec.element_order = g.element_order(cls.representative);

  auto note_bound = [&rec](const BoundExceeded& e) {
    rec.bound_hit = true;
    rec.notes.emplace_back(e.what());
  };

  ConjugationQuandle q = ConjugationQuandle::of_class(cls);

  if (cls.size() == 1) {
    // The lone member is central in <C> = <c>, so the subgroup facts and
    // the criterion route collapse by theory; skipping their enumerations
    // keeps large abelian sweeps linear in the class count.
    std::uint64_t ord = static_cast<std::uint64_t>(rec.element_order);
    rec.subgroup_order = ord;
    rec.center_order = ord;
    rec.connected_direct = q.is_connected_direct();
    if (opt.both_connectivity) rec.connected_criterion = true;
    if (opt.with_splits) rec.split_sizes = std::vector<std::uint64_t>{1};
  } else {
    std::optional<FiniteGroup> h;
    try {
      FiniteGroup sub = q.generated();
      rec.subgroup_order = sub.order();
      rec.center_order = static_cast<std::uint64_t>(sub.center().size());
      h = std::move(sub);
    } catch (const BoundExceeded& e) {
      note_bound(e);
    }

    rec.connected_direct = q.is_connected_direct();
    if (opt.both_connectivity) {
      try {
        rec.connected_criterion = q.is_connected_criterion();
      } catch (const BoundExceeded& e) {
        note_bound(e);
      }
      if (rec.connected_criterion &&
          *rec.connected_direct != *rec.connected_criterion)
        rec.notes.emplace_back("connectedness routes disagree");
    }

    if (opt.with_splits && h) {
      std::vector<std::uint64_t> sizes;
      for (const auto& block : split_class_in_subgroup(cls, *h))
        sizes.push_back(block.size());
      rec.split_sizes = std::move(sizes);
    }
  }

  rec.hayashi = q.has_hayashi_property();

  try {
    quandles::GoodnessReport gr = quandles::goodness_report(cls, opt.audit);
    rec.verdict = to_string(gr.verdict);
    rec.method = to_string(gr.method);
    for (const auto& w : gr.witnesses)
      rec.witnesses.emplace_back(to_string(w.first), to_string(w.second));
    if (gr.failing_c) rec.failing = to_string(*gr.failing_c);
    if (!gr.note.empty()) rec.notes.push_back(gr.note);
    if (gr.verdict == quandles::Verdict::undecided) rec.bound_hit = true;
  } catch (const EquivalenceViolation& e) {
    rec.verdict = "undecided";
    rec.audit_agreement = false;
    rec.notes.emplace_back(e.what());
  } catch (const BoundExceeded& e) {
    rec.verdict = "undecided";
    note_bound(e);
  }

  if (opt.audit) {
    try {
      quandles::EquivalenceAudit audit =
          quandles::equivalence_audit(g, cls.representative);
      if (!rec.audit_agreement) rec.audit_agreement = audit.agreement;
    } catch (const EquivalenceViolation& e) {
      rec.audit_agreement = false;
      rec.notes.emplace_back(e.what());
    } catch (const BoundExceeded& e) {
      note_bound(e);
    }
    try {
      rec.lmlt_order = q.lmlt_order();
      if (rec.subgroup_order && rec.center_order)
        rec.lmlt_identity =
            (*rec.lmlt_order * *rec.center_order == *rec.subgroup_order);
    } catch (const BoundExceeded& e) {
      note_bound(e);
    }
  }

  return rec;
}

void scan_flags_into(const GroupRecord& group, ReportFlags& flags) {
  if (!group.errors.empty()) flags.any_error = true;
  for (const auto& c : group.classes) {
    if (c.bound_hit) flags.any_bound_hit = true;
    if (c.verdict == "not_good") flags.any_negative = true;
    if (c.hayashi && !*c.hayashi) flags.any_negative = true;
    if (c.audit_agreement && !*c.audit_agreement) flags.any_negative = true;
    if (c.lmlt_identity && !*c.lmlt_identity) flags.any_negative = true;
    if (c.connected_direct && c.connected_criterion &&
        *c.connected_direct != *c.connected_criterion)
      flags.any_negative = true;
  }
}

ReportFlags scan_flags(const std::vector<GroupRecord>& groups) {
  ReportFlags f;
  for (const auto& g : groups) scan_flags_into(g, f);
  return f;
}

int exit_code_for(const ReportFlags& flags) {
  if (flags.any_negative) return 1;
  if (flags.any_bound_hit) return 3;
  return 0;
}

namespace {

json from_opt(const std::optional<bool>& v) {
  return v ? json(*v) : json(nullptr);
}
json from_opt(const std::optional<std::uint64_t>& v) {
  return v ? json(*v) : json(nullptr);
}
json from_opt(const std::optional<std::string>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

json to_json(const ClassRecord& rec) {
  json j;
  j["representative"] = rec.representative;
  j["class_size"] = rec.class_size;
  j["element_order"] = rec.element_order;
  j["subgroup_order"] = from_opt(rec.subgroup_order);
  j["center_order"] = from_opt(rec.center_order);
  j["lmlt_order"] = from_opt(rec.lmlt_order);
  j["lmlt_identity"] = from_opt(rec.lmlt_identity);
  j["connected_direct"] = from_opt(rec.connected_direct);
  j["connected_criterion"] = from_opt(rec.connected_criterion);
  j["split_sizes"] = rec.split_sizes ? json(*rec.split_sizes) : json(nullptr);
  j["hayashi"] = from_opt(rec.hayashi);
  j["verdict"] = rec.verdict;
  j["method"] = rec.method;
  json ws = json::array();
  for (const auto& w : rec.witnesses)
    ws.push_back(json{{"member", w.first}, {"z", w.second}});
  j["witnesses"] = std::move(ws);
  j["failing"] = from_opt(rec.failing);
  j["audit_agreement"] = from_opt(rec.audit_agreement);
  j["notes"] = rec.notes;
  j["bound_hit"] = rec.bound_hit;
  return j;
}

json to_json(const GroupRecord& rec) {
  json j;
  j["name"] = rec.name;
  j["source"] = rec.source;
  j["order"] = rec.order;
  if (!rec.listing.empty()) {
    json rows = json::array();
    for (const auto& row : rec.listing)
      rows.push_back(json{{"representative", row.representative},
                          {"class_size", row.class_size},
                          {"element_order", row.element_order}});
    j["listing"] = std::move(rows);
  } else {
    json rows = json::array();
    for (const auto& c : rec.classes) rows.push_back(to_json(c));
    j["classes"] = std::move(rows);
  }
  j["notes"] = rec.notes;
  j["errors"] = rec.errors;
  return j;
}

void SummaryCounters::add(const GroupRecord& rec) {
  ++groups;
  classes += rec.listing.size() + rec.classes.size();
  errors += rec.errors.size();
  for (const auto& c : rec.classes) {
    if (c.verdict == "good") ++good;
    if (c.verdict == "not_good") ++not_good;
    if (c.verdict == "undecided") ++undecided;
    if (c.hayashi) (*c.hayashi ? ++hayashi_true : ++hayashi_false);
    if (c.connected_direct && *c.connected_direct) ++connected;
    if (c.bound_hit) ++bound_hits;
  }
}

json SummaryCounters::to_json() const {
  return json{{"groups", groups},
              {"classes", classes},
              {"good", good},
              {"not_good", not_good},
              {"undecided", undecided},
              {"hayashi_true", hayashi_true},
              {"hayashi_false", hayashi_false},
              {"connected", connected},
              {"bound_hits", bound_hits},
              {"errors", errors}};
}

namespace {

json tool_block() {
  return json{{"name", kToolName}, {"version", kToolVersion}};
}

}  // namespace

json report_document(const std::string& command, const json& config,
                     const std::vector<GroupRecord>& groups) {
  SummaryCounters totals;
  json group_rows = json::array();
  for (const auto& g : groups) {
    group_rows.push_back(to_json(g));
    totals.add(g);
  }

  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["tool"] = tool_block();
  doc["command"] = command;
  doc["config"] = config;
  doc["groups"] = std::move(group_rows);
  doc["summary"] = totals.to_json();
  return doc;
}

namespace {

// dump(2), then shift every line after the first so the block sits at the
// given indentation inside an enclosing object.
std::string indent_block(const json& j, int pad) {
  std::string dumped = j.dump(2);
  std::string out;
  out.reserve(dumped.size() + 16 * static_cast<std::size_t>(pad));
  std::string prefix(static_cast<std::size_t>(pad), ' ');
  for (char ch : dumped) {
    out += ch;
    if (ch == '\n') out += prefix;
  }
  return out;
}

}  // namespace

StreamingReportWriter::StreamingReportWriter(const std::string& path,
                                             const std::string& command,
                                             const json& config)
    : path_(path), out_(path, std::ios::binary) {
  if (!out_) throw quandles::Error("cannot open " + path + " for writing");
  out_ << "{\n";
  out_ << "  \"command\": " << json(command).dump() << ",\n";
  out_ << "  \"config\": " << indent_block(config, 2) << ",\n";
  out_ << "  \"groups\": ";
}

void StreamingReportWriter::add_group(const GroupRecord& rec) {
  out_ << (first_ ? "[\n    " : ",\n    ") << indent_block(to_json(rec), 4);
  first_ = false;
}

void StreamingReportWriter::finish(const SummaryCounters& summary) {
  out_ << (first_ ? "[]" : "\n  ]") << ",\n";
  out_ << "  \"schema_version\": " << kReportSchemaVersion << ",\n";
  out_ << "  \"summary\": " << indent_block(summary.to_json(), 2) << ",\n";
  out_ << "  \"tool\": " << indent_block(tool_block(), 2) << "\n";
  out_ << "}\n";
  if (!out_.flush()) throw quandles::Error("write to " + path_ + " failed");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_bool(const std::optional<bool>& v) {
  return v ? (*v ? "true" : "false") : "";
}

}  // namespace

std::string render_csv(const std::vector<GroupRecord>& groups) {
  std::ostringstream out;
  out << "group,group_order,representative,class_size,element_order,"
         "connected_direct,hayashi,verdict,method\n";
  for (const auto& g : groups) {
    for (const auto& row : g.listing)
      out << csv_field(g.name) << ',' << g.order << ','
          << csv_field(row.representative) << ',' << row.class_size << ','
          << row.element_order << ",,,,\n";
    for (const auto& c : g.classes)
      out << csv_field(g.name) << ',' << g.order << ','
          << csv_field(c.representative) << ',' << c.class_size << ','
          << c.element_order << ',' << csv_bool(c.connected_direct) << ','
          << csv_bool(c.hayashi) << ',' << c.verdict << ',' << c.method
          << '\n';
  }
  return out.str();
}

namespace {

std::string yes_no(const std::optional<bool>& v) {
  return v ? (*v ? "yes" : "no") : "-";
}

}  // namespace

std::string render_text(const std::vector<GroupRecord>& groups) {
  std::ostringstream out;
  for (const auto& g : groups) {
    out << g.name << "  order " << g.order << "  [" << g.source << "]\n";
    for (const auto& row : g.listing)
      out << "  " << row.representative << "  size " << row.class_size
          << "  ord " << row.element_order << '\n';
    for (const auto& c : g.classes) {
      out << "  " << c.representative << "  size " << c.class_size << "  ord "
          << c.element_order;
      if (c.subgroup_order) out << "  |H| " << *c.subgroup_order;
      out << "  conn " << yes_no(c.connected_direct);
      if (c.connected_criterion) out << '/' << yes_no(c.connected_criterion);
      if (c.split_sizes) {
        out << "  splits";
        for (std::uint64_t s : *c.split_sizes) out << ' ' << s;
      }
      out << "  hayashi " << yes_no(c.hayashi);
      out << "  " << c.verdict << " (" << c.method << ')';
      if (!c.witnesses.empty()) out << "  witnesses " << c.witnesses.size();
      if (c.failing) out << "  failing " << *c.failing;
      if (c.audit_agreement)
        out << (*c.audit_agreement ? "  audit ok" : "  audit FAILED");
      if (c.lmlt_order) out << "  |LMlt| " << *c.lmlt_order;
      if (c.bound_hit) out << "  [bound hit]";
      out << '\n';
      for (const auto& n : c.notes) out << "    note: " << n << '\n';
    }
    for (const auto& n : g.notes) out << "  note: " << n << '\n';
    for (const auto& e : g.errors) out << "  error: " << e << '\n';
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw quandles::Error("cannot open " + path + " for writing");
  out << text;
  if (!out.flush()) throw quandles::Error("write to " + path + " failed");
}

}  // namespace quandlescope
