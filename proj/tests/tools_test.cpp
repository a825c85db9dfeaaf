#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "quandles/errors.hpp"
#include "quandles/group.hpp"
#include "quandles/perm.hpp"
#include "report.hpp"
#include "schema_check.hpp"
#include "sources.hpp"
#include "survey.hpp"
#include "version.hpp"

using nlohmann::json;
using quandles::FiniteGroup;
using quandles::GroupElement;
using quandles::Permutation;
using namespace quandlescope;

namespace {

GroupElement perm_of(std::string_view text, int degree) {
  return GroupElement(Permutation::parse_cycles(text, degree));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "quandlescope-tools-test";
  std::filesystem::create_directories(dir);
  return dir;
}

json shipped_schema() {
  return schema_check::load_json_file(QUANDLESCOPE_SCHEMA);
}

}  // namespace

TEST_CASE("class record measures a connected class") {
  FiniteGroup s4 = quandles::symmetric_group(4);
  RecordOptions opt;
  opt.both_connectivity = true;
  opt.with_splits = true;
  ClassRecord rec = build_class_record(s4.conjugacy_class(perm_of("(1 2)", 4)),
                                       opt);
  CHECK(rec.representative == "(3 4)");  // canonical: the minimal member
  CHECK(rec.class_size == 6);
  CHECK(rec.element_order == 2);
  CHECK(rec.subgroup_order == std::uint64_t{24});
  CHECK(rec.center_order == std::uint64_t{1});
  CHECK(rec.connected_direct == true);
  CHECK(rec.connected_criterion == true);
  REQUIRE(rec.split_sizes.has_value());
  CHECK(*rec.split_sizes == std::vector<std::uint64_t>{6});
  CHECK(rec.hayashi == true);
  CHECK(rec.verdict == "good");
  CHECK(rec.method == "prime_power_shortcut");
  CHECK(rec.witnesses.empty());
  CHECK(!rec.failing.has_value());
  CHECK(!rec.audit_agreement.has_value());
  CHECK(!rec.lmlt_order.has_value());
  CHECK(rec.notes.empty());
  CHECK(!rec.bound_hit);
}

TEST_CASE("class record measures a disconnected class") {
  FiniteGroup s4 = quandles::symmetric_group(4);
  RecordOptions opt;
  opt.both_connectivity = true;
  opt.with_splits = true;
  ClassRecord rec = build_class_record(
      s4.conjugacy_class(perm_of("(1 2 3)", 4)), opt);
  CHECK(rec.class_size == 8);
  CHECK(rec.subgroup_order == std::uint64_t{12});
  CHECK(rec.connected_direct == false);
  CHECK(rec.connected_criterion == false);
  CHECK(*rec.split_sizes == std::vector<std::uint64_t>{4, 4});
  CHECK(rec.verdict == "good");
  CHECK(rec.notes.empty());
}

TEST_CASE("singleton classes take the composite-order fast path") {
  FiniteGroup c6 = quandles::cyclic_group(6);
  RecordOptions opt;
  opt.both_connectivity = true;
  opt.with_splits = true;
  ClassRecord rec = build_class_record(
      c6.conjugacy_class(c6.generators().front()), opt);
  CHECK(rec.class_size == 1);
  CHECK(rec.element_order == 6);
  CHECK(rec.subgroup_order == std::uint64_t{6});
  CHECK(rec.center_order == std::uint64_t{6});
  CHECK(rec.connected_direct == true);
  CHECK(rec.connected_criterion == true);
  CHECK(*rec.split_sizes == std::vector<std::uint64_t>{1});
  CHECK(rec.hayashi == true);
  CHECK(rec.verdict == "good");
  CHECK(rec.method == "small_class_shortcut");

  // Without the optional measurements the optionals stay empty.
  ClassRecord lean = build_class_record(
      c6.conjugacy_class(c6.generators().front()), RecordOptions{});
  CHECK(!lean.connected_criterion.has_value());
  CHECK(!lean.split_sizes.has_value());
  CHECK(lean.connected_direct == true);
}

TEST_CASE("audited class record carries the translation-group identity") {
  FiniteGroup s4 = quandles::symmetric_group(4);
  RecordOptions opt;
  opt.both_connectivity = true;
  opt.audit = true;
  opt.with_splits = true;
  ClassRecord rec = build_class_record(s4.conjugacy_class(perm_of("(1 2)", 4)),
                                       opt);
  CHECK(rec.lmlt_order == std::uint64_t{24});
  CHECK(rec.lmlt_identity == true);
  CHECK(rec.audit_agreement == true);
  CHECK(rec.witnesses.size() == 6);  // audit backfills shortcut verdicts
  CHECK(rec.verdict == "good");
  CHECK(!rec.bound_hit);
}

TEST_CASE("bound hits fold into notes instead of aborting the record") {
  FiniteGroup p = FiniteGroup::direct_product(quandles::cyclic_group(2),
                                              quandles::symmetric_group(4))
                      .with_bound(10);
  GroupElement e(p.generators().front().components()[0],
                 perm_of("(1 2 3)", 4));
  auto cls = p.conjugacy_class(e);  // 8 members, fits the bound of 10
  REQUIRE(cls.size() == 8);
  RecordOptions opt;
  opt.both_connectivity = true;
  opt.with_splits = true;
  ClassRecord rec = build_class_record(cls, opt);
  CHECK(rec.bound_hit);
  CHECK(!rec.subgroup_order.has_value());       // <C> has 24 > 10 elements
  CHECK(!rec.connected_criterion.has_value());  // same enumeration
  CHECK(!rec.split_sizes.has_value());
  // The orbit route needs no enumeration and still reports: translations
  // conjugate 3-cycles by 3-cycles, so the class splits as under A4.
  CHECK(rec.connected_direct == false);
  CHECK(rec.hayashi == true);
  CHECK(rec.verdict == "good");  // transport route never enumerates <C>
  CHECK(rec.notes.size() == 2);
  for (const auto& n : rec.notes)
    CHECK(n.find("enumeration bound") != std::string::npos);

  ReportFlags flags;
  GroupRecord gr;
  gr.classes.push_back(rec);
  scan_flags_into(gr, flags);
  CHECK(flags.any_bound_hit);
  CHECK(!flags.any_negative);
  CHECK(exit_code_for(flags) == 3);
}

TEST_CASE("exit codes rank negatives above bound hits") {
  auto flags_for = [](ClassRecord rec) {
    GroupRecord gr;
    gr.classes.push_back(std::move(rec));
    ReportFlags f;
    scan_flags_into(gr, f);
    return f;
  };

  ClassRecord clean;
  clean.verdict = "good";
  CHECK(exit_code_for(flags_for(clean)) == 0);

  ClassRecord bad_verdict = clean;
  bad_verdict.verdict = "not_good";
  CHECK(exit_code_for(flags_for(bad_verdict)) == 1);

  ClassRecord bad_hayashi = clean;
  bad_hayashi.hayashi = false;
  CHECK(exit_code_for(flags_for(bad_hayashi)) == 1);

  ClassRecord bad_audit = clean;
  bad_audit.audit_agreement = false;
  CHECK(exit_code_for(flags_for(bad_audit)) == 1);

  ClassRecord bad_lmlt = clean;
  bad_lmlt.lmlt_identity = false;
  CHECK(exit_code_for(flags_for(bad_lmlt)) == 1);

  ClassRecord routes_disagree = clean;
  routes_disagree.connected_direct = true;
  routes_disagree.connected_criterion = false;
  CHECK(exit_code_for(flags_for(routes_disagree)) == 1);

  ClassRecord bounded = clean;
  bounded.bound_hit = true;
  CHECK(exit_code_for(flags_for(bounded)) == 3);

  // A negative wins even when a bound was hit elsewhere.
  ClassRecord both = bad_hayashi;
  both.bound_hit = true;
  CHECK(exit_code_for(flags_for(both)) == 1);

  // Per-source errors surface in the flags but not in the exit code.
  GroupRecord broken;
  broken.errors.push_back("cannot open group file");
  ReportFlags f;
  scan_flags_into(broken, f);
  CHECK(f.any_error);
  CHECK(exit_code_for(f) == 0);
}

TEST_CASE("summary counters add groups, classes and verdicts") {
  GroupRecord a;
  a.listing.push_back(ClassListing{"(1 2)", 3, 2});
  a.listing.push_back(ClassListing{"()", 1, 1});
  GroupRecord b;
  ClassRecord r1;
  r1.verdict = "good";
  r1.hayashi = true;
  r1.connected_direct = true;
  ClassRecord r2;
  r2.verdict = "undecided";
  r2.hayashi = false;
  r2.connected_direct = false;
  r2.bound_hit = true;
  b.classes = {r1, r2};
  b.errors.push_back("boom");

  SummaryCounters totals;
  totals.add(a);
  totals.add(b);
  CHECK(totals.groups == 2);
  CHECK(totals.classes == 4);
  CHECK(totals.good == 1);
  CHECK(totals.not_good == 0);
  CHECK(totals.undecided == 1);
  CHECK(totals.hayashi_true == 1);
  CHECK(totals.hayashi_false == 1);
  CHECK(totals.connected == 1);
  CHECK(totals.bound_hits == 1);
  CHECK(totals.errors == 1);
}

TEST_CASE("csv output quotes awkward fields and pads listing rows") {
  GroupRecord g;
  g.name = "weird,\"name\"";
  g.order = 6;
  g.listing.push_back(ClassListing{"(1 2)", 3, 2});
  std::string csv = render_csv({g});
  std::istringstream lines(csv);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header ==
        "group,group_order,representative,class_size,element_order,"
        "connected_direct,hayashi,verdict,method");
  CHECK(row == "\"weird,\"\"name\"\"\",6,(1 2),3,2,,,,");

  GroupRecord h;
  h.name = "plain";
  h.order = 4;
  ClassRecord c;
  c.representative = "#2";
  c.class_size = 1;
  c.element_order = 2;
  c.connected_direct = true;
  c.hayashi = true;
  c.verdict = "good";
  c.method = "prime_power_shortcut";
  h.classes.push_back(c);
  std::string csv2 = render_csv({h});
  CHECK(csv2.find("plain,4,#2,1,2,true,true,good,prime_power_shortcut\n") !=
        std::string::npos);
}

TEST_CASE("text rendering shows verdict lines and audit state") {
  GroupRecord g;
  g.name = "sample";
  g.source = "symmetric:4";
  g.order = 24;
  ClassRecord c;
  c.representative = "(1 2)";
  c.class_size = 6;
  c.element_order = 2;
  c.subgroup_order = 24;
  c.connected_direct = true;
  c.connected_criterion = true;
  c.hayashi = true;
  c.verdict = "good";
  c.method = "prime_power_shortcut";
  c.audit_agreement = true;
  g.classes.push_back(c);
  c.audit_agreement = false;
  c.notes.push_back("routes disagreed");
  g.classes.push_back(c);
  g.notes.push_back("group-level note");
  g.errors.push_back("group-level error");

  std::string text = render_text({g});
  CHECK(text.find("sample  order 24  [symmetric:4]") != std::string::npos);
  CHECK(text.find("conn yes/yes") != std::string::npos);
  CHECK(text.find("  audit ok") != std::string::npos);
  CHECK(text.find("  audit FAILED") != std::string::npos);
  CHECK(text.find("audit ok FAILED") == std::string::npos);
  CHECK(text.find("note: routes disagreed") != std::string::npos);
  CHECK(text.find("note: group-level note") != std::string::npos);
  CHECK(text.find("error: group-level error") != std::string::npos);
}

TEST_CASE("report documents validate against the shipped schema") {
  SurveyConfig cfg;
  cfg.catalog = {"cyclic:4", "cyclic:6", "symmetric:3", "dihedral:8",
                 "cyclic:2 x symmetric:3"};
  cfg.audit = true;
  auto groups = collect_survey(cfg);
  REQUIRE(groups.size() == 5);
  json config{{"catalog", cfg.catalog}, {"audit", true}};
  json doc = report_document("survey", config, groups);

  json schema = shipped_schema();
  CHECK(schema_check::validate(doc, schema) == "");

  // Listing-shaped documents (the classes subcommand) validate too.
  GroupRecord listing;
  listing.name = "cyclic(3)";
  listing.source = "cyclic:3";
  listing.order = 3;
  listing.listing.push_back(ClassListing{"#1", 1, 1});
  json doc2 = report_document("classes", json::object(), {listing});
  CHECK(schema_check::validate(doc2, schema) == "");

  // The validator itself rejects off-schema documents.
  json broken = doc;
  broken["groups"][0]["classes"][0]["verdict"] = "excellent";
  CHECK(schema_check::validate(broken, schema) != "");
  json extra = doc;
  extra["groups"][0]["surprise"] = 1;
  CHECK(schema_check::validate(extra, schema) != "");
}

TEST_CASE("document structure and summary match the records") {
  SurveyConfig cfg;
  cfg.catalog = {"cyclic:3", "symmetric:3"};
  auto groups = collect_survey(cfg);
  json doc = report_document("survey", json{{"note", "test"}}, groups);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["tool"]["name"] == kToolName);
  CHECK(doc["tool"]["version"] == kToolVersion);
  CHECK(doc["command"] == "survey");
  CHECK(doc["config"]["note"] == "test");
  REQUIRE(doc["groups"].size() == 2);
  CHECK(doc["summary"]["groups"] == 2);
  // cyclic:3 has 3 classes, symmetric:3 has 3.
  CHECK(doc["summary"]["classes"] == 6);
  CHECK(doc["summary"]["good"] == 6);
  CHECK(doc["summary"]["not_good"] == 0);
  CHECK(doc["summary"]["hayashi_true"] == 6);
  // The 3-cycle class of S3 is disconnected; the other five are connected.
  CHECK(doc["summary"]["connected"] == 5);
}

TEST_CASE("streaming writer reproduces the document byte for byte") {
  SurveyConfig cfg;
  cfg.catalog = {"cyclic:4", "symmetric:3", "dihedral:8"};
  cfg.audit = true;
  auto groups = collect_survey(cfg);
  json config{{"catalog", cfg.catalog},
              {"audit", true},
              {"max_order", cfg.max_order}};
  std::string expect = report_document("survey", config, groups).dump(2) + "\n";

  auto path = scratch_dir() / "stream.json";
  StreamingReportWriter writer(path.string(), "survey", config);
  SummaryCounters totals;
  for (const auto& g : groups) {
    writer.add_group(g);
    totals.add(g);
  }
  writer.finish(totals);
  CHECK(slurp(path) == expect);

  auto empty_path = scratch_dir() / "stream-empty.json";
  StreamingReportWriter empty_writer(empty_path.string(), "survey", config);
  empty_writer.finish(SummaryCounters{});
  CHECK(slurp(empty_path) ==
        report_document("survey", config, {}).dump(2) + "\n");
}

TEST_CASE("surveys are deterministic and stream in source order") {
  SurveyConfig cfg;
  cfg.catalog = {"dihedral:10", "cyclic:5", "symmetric:4"};
  auto once = collect_survey(cfg);
  auto twice = collect_survey(cfg);
  REQUIRE(once.size() == 3);
  CHECK(report_document("survey", json::object(), once) ==
        report_document("survey", json::object(), twice));
  CHECK(once[0].source == "dihedral:10");
  CHECK(once[1].source == "cyclic:5");
  CHECK(once[2].source == "symmetric:4");

  std::vector<std::string> streamed;
  run_survey(cfg, [&](GroupRecord&& rec) { streamed.push_back(rec.source); });
  CHECK(streamed ==
        std::vector<std::string>{"dihedral:10", "cyclic:5", "symmetric:4"});
}

TEST_CASE("survey skips oversized groups with a note") {
  SurveyConfig cfg;
  cfg.catalog = {"symmetric:5", "cyclic:3"};
  cfg.max_order = 50;
  auto groups = collect_survey(cfg);
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].classes.empty());
  REQUIRE(groups[0].notes.size() == 1);
  CHECK(groups[0].notes[0].find("exceeds max-order") != std::string::npos);
  CHECK(groups[0].errors.empty());
  CHECK(groups[1].classes.size() == 3);
}

TEST_CASE("survey records per-source failures as errors") {
  SurveyConfig cfg;
  cfg.files = {"/nonexistent/missing.grp"};
  auto groups = collect_survey(cfg);
  REQUIRE(groups.size() == 1);
  CHECK(groups[0].classes.empty());
  REQUIRE(groups[0].errors.size() == 1);
  CHECK(groups[0].errors[0].find("missing.grp") != std::string::npos);
  ReportFlags flags = scan_flags(groups);
  CHECK(flags.any_error);
}

TEST_CASE("survey reads group files next to catalog entries") {
  auto dir = scratch_dir();
  auto file = dir / "v4.grp";
  {
    std::ofstream out(file);
    out << "table 4\n1 2 3 4\n2 1 4 3\n3 4 1 2\n4 3 2 1\n";
  }
  SurveyConfig cfg;
  cfg.catalog = {"cyclic:2"};
  cfg.files = {file.string()};
  auto groups = collect_survey(cfg);
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].source == "cyclic:2");
  CHECK(groups[1].name == "v4");
  CHECK(groups[1].order == 4);
  CHECK(groups[1].classes.size() == 4);
}

TEST_CASE("survey rejects a cap above the enumeration bound") {
  SurveyConfig cfg;
  cfg.catalog = {"cyclic:3"};
  cfg.max_order = cfg.bound + 1;
  CHECK_THROWS_AS(collect_survey(cfg), quandles::ParameterOutOfRange);
}

TEST_CASE("catalog orders come straight from the parameters") {
  CHECK(catalog_order("cyclic:9") == 9);
  CHECK(catalog_order("dihedral:12") == 12);
  CHECK(catalog_order("symmetric:5") == 120);
  CHECK(catalog_order("alternating:5") == 60);
  CHECK(catalog_order("alternating:2") == 1);
  CHECK_THROWS_AS(catalog_order("dihedral:7"), quandles::ParameterOutOfRange);
  CHECK_THROWS_AS(catalog_order("frobnitz:3"), quandles::UnknownFamily);
  CHECK_THROWS_AS(catalog_order("cyclic"), quandles::UnknownFamily);
}

TEST_CASE("catalog groups build from specs, including products") {
  FiniteGroup g = make_catalog_group("cyclic:3 x dihedral:8", 20000);
  CHECK(g.order() == 24);
  CHECK(g.product_factors().has_value());
  CHECK(make_catalog_group("symmetric:4", 20000).order() == 24);
  CHECK_THROWS_AS(make_catalog_group("frobnitz:3", 20000),
                  quandles::UnknownFamily);
  CHECK_THROWS_AS(make_catalog_group("cyclic:3 x", 20000),
                  quandles::UnknownFamily);
  CHECK_THROWS_AS(make_catalog_group("cyclic:3 cyclic:2", 20000),
                  quandles::UnknownFamily);
  CHECK_THROWS_AS(make_catalog_group("dihedral:9", 20000),
                  quandles::ParameterOutOfRange);
}

TEST_CASE("catalog expansion enumerates families within the cap") {
  auto specs = [](const std::vector<CatalogEntry>& es) {
    std::vector<std::string> out;
    for (const auto& e : es) out.push_back(e.spec);
    return out;
  };

  CHECK(specs(expand_catalog({"cyclic"}, 5)) ==
        std::vector<std::string>{"cyclic:2", "cyclic:3", "cyclic:4",
                                 "cyclic:5"});
  CHECK(specs(expand_catalog({"dihedral"}, 12)) ==
        std::vector<std::string>{"dihedral:6", "dihedral:8", "dihedral:10",
                                 "dihedral:12"});
  CHECK(specs(expand_catalog({"symmetric"}, 30)) ==
        std::vector<std::string>{"symmetric:3", "symmetric:4"});
  CHECK(specs(expand_catalog({"alternating"}, 100)) ==
        std::vector<std::string>{"alternating:4", "alternating:5"});

  // Explicit specs survive above the cap; callers filter later.
  CHECK(specs(expand_catalog({"symmetric:10"}, 50)) ==
        std::vector<std::string>{"symmetric:10"});

  // First occurrence wins.
  CHECK(specs(expand_catalog({"cyclic:3", "cyclic"}, 4)) ==
        std::vector<std::string>{"cyclic:3", "cyclic:2", "cyclic:4"});

  // Products pair the single entries in listing order.
  auto with_products = expand_catalog({"cyclic:2", "cyclic:3", "products"}, 10);
  CHECK(specs(with_products) ==
        std::vector<std::string>{"cyclic:2", "cyclic:3",
                                 "cyclic:2 x cyclic:2", "cyclic:2 x cyclic:3",
                                 "cyclic:3 x cyclic:3"});
  CHECK(with_products.back().parts ==
        std::vector<std::string>{"cyclic:3", "cyclic:3"});

  // "standard" unfolds to every family plus products.
  auto standard = expand_catalog({"standard"}, 6);
  CHECK(specs(standard) ==
        std::vector<std::string>{"cyclic:2", "cyclic:3", "cyclic:4",
                                 "cyclic:5", "cyclic:6", "dihedral:6",
                                 "symmetric:3", "cyclic:2 x cyclic:2",
                                 "cyclic:2 x cyclic:3"});

  CHECK_THROWS_AS(expand_catalog({"bogus"}, 10), quandles::UnknownFamily);
}
