// Command-line front end. Subcommands: classes, check, witness, survey,
// product-check. Exit codes: 0 all verdicts positive and cross-checks clean,
// 1 some negative verdict or failed cross-check, 2 usage or input error,
// 3 enumeration bound hit.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quandles/errors.hpp"
#include "quandles/goodness.hpp"
#include "quandles/group.hpp"
#include "quandles/group_io.hpp"
#include "quandles/quandle.hpp"
#include "report.hpp"
#include "sources.hpp"
#include "survey.hpp"
#include "version.hpp"

namespace {

using nlohmann::json;
using quandles::ConjClass;
using quandles::ConjugationQuandle;
using quandles::FiniteGroup;
using quandles::GroupElement;
using quandles::ParseError;
using quandles::Permutation;
using namespace quandlescope;

/// Recursive over the product structure: products split on the last '|'
/// (left-associative, matching how product specs are folded), permutation
/// groups take cycle notation, table groups take "#k" with k 1-based.
GroupElement parse_element(const FiniteGroup& g, std::string_view text) {
  if (auto factors = g.product_factors()) {
    auto pos = text.rfind('|');
    if (pos == std::string_view::npos)
      throw ParseError(
          "element of a product group needs the form \"left | right\"");
    GroupElement left = parse_element(factors->first, text.substr(0, pos));
    GroupElement right = parse_element(factors->second, text.substr(pos + 1));
    return GroupElement(std::move(left), std::move(right));
  }
  if (g.identity().is_permutation())
    return Permutation::parse_cycles(text,
                                     g.identity().permutation().degree());

  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  std::string t = b == std::string_view::npos
                      ? std::string()
                      : std::string(text.substr(b, e - b + 1));
  if (t.size() < 2 || t[0] != '#' ||
      t.find_first_not_of("0123456789", 1) != std::string::npos)
    throw ParseError("element of a table group needs the form \"#k\", got \"" +
                     t + "\"");
  std::uint64_t k = 0;
  try {
    k = std::stoull(t.substr(1));
  } catch (const std::exception&) {
    throw ParseError("cannot parse table element index in \"" + t + "\"");
  }
  if (k < 1 || k > g.order())
    throw ParseError("table element " + t + " out of range 1.." +
                     std::to_string(g.order()));
  return GroupElement(static_cast<std::uint32_t>(k - 1));
}

struct SourceOpts {
  std::string catalog;
  std::string file;
};

FiniteGroup resolve_source(const SourceOpts& s, std::uint64_t bound,
                           std::string& display) {
  if (!s.catalog.empty()) {
    display = s.catalog;
    return make_catalog_group(s.catalog, bound);
  }
  display = s.file;
  return quandles::load_group_file(s.file, bound);
}

void add_source_options(CLI::App* cmd, SourceOpts& s) {
  auto* grp = cmd->add_option_group("source", "group to load");
  grp->add_option("--catalog", s.catalog,
                  "catalog spec: family:param or \"A x B\" (families: "
                  "symmetric, alternating, dihedral, cyclic; dihedral takes "
                  "the group order)");
  grp->add_option("--file", s.file, "group file (see README for the grammar)");
  grp->require_option(1);
}

void emit_reports(const json& doc, const std::vector<GroupRecord>& groups,
                  const std::string& json_path, const std::string& csv_path) {
  if (!json_path.empty()) write_text_file(json_path, doc.dump(2) + "\n");
  if (!csv_path.empty()) write_text_file(csv_path, render_csv(groups));
}

struct ClassesOpts {
  SourceOpts source;
  std::uint64_t bound = quandles::kDefaultEnumerationBound;
  std::string json_path, csv_path;
};

int cmd_classes(const ClassesOpts& o) {
  std::string display;
  FiniteGroup g = resolve_source(o.source, o.bound, display);
  GroupRecord rec;
  rec.name = g.name();
  rec.source = display;
  rec.order = g.order();
  for (const ConjClass& cls : g.conjugacy_classes())
    rec.listing.push_back({to_string(cls.representative), cls.size(),
                           g.element_order(cls.representative)});
  std::vector<GroupRecord> groups{std::move(rec)};
  json config{{"catalog", o.source.catalog},
              {"file", o.source.file},
              {"bound", o.bound}};
  json doc = report_document("classes", config, groups);
  emit_reports(doc, groups, o.json_path, o.csv_path);
  std::cout << render_text(groups);
  std::cout << "summary " << doc["summary"].dump() << "\n";
  return 0;
}

struct CheckOpts {
  SourceOpts source;
  std::string element;
  bool audit = false;
  std::uint64_t bound = quandles::kDefaultEnumerationBound;
  std::string json_path, csv_path;
};

int cmd_check(const CheckOpts& o) {
  std::string display;
  FiniteGroup g = resolve_source(o.source, o.bound, display);
  GroupElement e = parse_element(g, o.element);
  if (!g.contains(e))
    throw quandles::NotAMember(to_string(e) + " is not a member of " +
                               g.name());
  ConjClass cls = g.conjugacy_class(e);

  RecordOptions ro;
  ro.both_connectivity = true;
  ro.audit = o.audit;
  ro.with_splits = true;

  GroupRecord rec;
  rec.name = g.name();
  rec.source = display;
  rec.order = g.order();
  rec.classes.push_back(build_class_record(cls, ro));
  std::vector<GroupRecord> groups{std::move(rec)};

  json config{{"catalog", o.source.catalog},
              {"file", o.source.file},
              {"element", o.element},
              {"audit", o.audit},
              {"bound", o.bound}};
  json doc = report_document("check", config, groups);
  emit_reports(doc, groups, o.json_path, o.csv_path);
  std::cout << render_text(groups);
  std::cout << "summary " << doc["summary"].dump() << "\n";
  return exit_code_for(scan_flags(groups));
}

struct WitnessOpts {
  std::string catalog;
  std::string element;
  bool audit = false;
  std::uint64_t bound = quandles::kDefaultEnumerationBound;
  std::string json_path;
};

int cmd_witness(const WitnessOpts& o) {
  FiniteGroup g = make_catalog_group(o.catalog, o.bound);
  const auto& tag = g.catalog_tag();
  if (!tag || (tag->family != quandles::CatalogFamily::symmetric &&
               tag->family != quandles::CatalogFamily::alternating))
    throw ParseError(
        "witness needs a symmetric:n or alternating:n catalog group");
  GroupElement e = parse_element(g, o.element);
  // Membership in Sym/Alt is a degree and parity question; the generic
  // contains() would enumerate the whole group.
  bool member = e.is_permutation() &&
                e.permutation().degree() == tag->parameter &&
                (tag->family == quandles::CatalogFamily::symmetric ||
                 e.permutation().parity() == quandles::Parity::even);
  if (!member)
    throw quandles::NotAMember(to_string(e) + " is not a member of " +
                               g.name());

  quandles::SymWitness w = quandles::witness_sym(e.permutation());
  std::int64_t ord = e.permutation().order();
  ConjClass cls = g.conjugacy_class(e);
  bool z_in_class = cls.contains(GroupElement(w.z));

  std::cout << "group " << g.name() << ", element " << e.permutation().format()
            << ", order " << ord << "\n";
  std::cout << "sigma = " << w.sigma.format() << ", parity "
            << (w.sigma.parity() == quandles::Parity::even ? "even" : "odd")
            << "\n";
  std::cout << "z = sigma e sigma^-1 = " << w.z.format() << ", in class: "
            << (z_in_class ? "yes" : "no") << "\n";

  json checks = json::array();
  bool all_pass = z_in_class;
  for (std::int64_t k = 1; k < ord; ++k) {
    Permutation ek = e.permutation().pow(k);
    bool commutes = (ek * w.z == w.z * ek);
    if (commutes) all_pass = false;
    checks.push_back(json{{"power", k}, {"commutes", commutes}});
    std::cout << "e^" << k << " z == z e^" << k << ": "
              << (commutes ? "yes (violation)" : "no") << "\n";
  }

  std::optional<bool> brute_agrees;
  if (o.audit) {
    FiniteGroup h = ConjugationQuandle::of_class(cls).generated();
    bool valid = quandles::centralizer_criterion(e, GroupElement(w.z), h);
    bool found = quandles::witness_bruteforce(e, cls, h).has_value();
    brute_agrees = valid && found;
    std::cout << "bruteforce audit: constructed z "
              << (valid ? "passes" : "FAILS")
              << " the centralizer criterion, exhaustive search "
              << (found ? "finds a witness" : "finds none") << "\n";
  }

  json section;
  section["group"] = g.name();
  section["source"] = o.catalog;
  section["element"] = e.permutation().format();
  section["element_order"] = ord;
  section["sigma"] = w.sigma.format();
  section["sigma_parity"] = "even";
  section["z"] = w.z.format();
  section["z_in_class"] = z_in_class;
  section["checks"] = std::move(checks);
  section["all_checks_pass"] = all_pass;
  section["bruteforce_agrees"] =
      brute_agrees ? json(*brute_agrees) : json(nullptr);

  json config{{"catalog", o.catalog},
              {"element", o.element},
              {"audit", o.audit},
              {"bound", o.bound}};
  json doc = report_document("witness", config, {});
  doc["witness"] = std::move(section);
  if (!o.json_path.empty()) write_text_file(o.json_path, doc.dump(2) + "\n");

  bool ok = all_pass && (!brute_agrees || *brute_agrees);
  std::cout << (ok ? "witness verified\n" : "witness FAILED\n");
  return ok ? 0 : 1;
}

struct SurveyOpts {
  std::vector<std::string> catalog;
  std::vector<std::string> files;
  std::uint64_t max_order = 500;
  std::uint64_t bound = quandles::kDefaultEnumerationBound;
  bool audit = false;
  std::uint64_t seed = 0;
  unsigned jobs = 0;
  std::string json_path, csv_path;
};

int cmd_survey(const SurveyOpts& o) {
  if (o.catalog.empty() && o.files.empty())
    throw ParseError("survey needs at least one --catalog or --file source");
  SurveyConfig cfg;
  cfg.catalog = o.catalog;
  cfg.files = o.files;
  cfg.max_order = o.max_order;
  cfg.bound = o.bound;
  cfg.audit = o.audit;
  cfg.seed = o.seed;
  cfg.jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());

  json config{{"catalog", cfg.catalog},
              {"files", cfg.files},
              {"max_order", cfg.max_order},
              {"bound", cfg.bound},
              {"audit", cfg.audit},
              {"seed", cfg.seed},
              {"coverage",
               "constructible catalog only: cyclic, dihedral, symmetric, "
               "alternating and their pairwise direct products within "
               "max-order, plus user files; not every group of a given order "
               "is represented"}};

  // Groups stream through one at a time; a full catalog sweep is too big
  // to hold. Stdout carries problems and totals only; the whole table
  // goes to --json / --csv.
  std::optional<StreamingReportWriter> json_out;
  if (!o.json_path.empty()) json_out.emplace(o.json_path, "survey", config);
  std::optional<std::ofstream> csv_out;
  if (!o.csv_path.empty()) {
    csv_out.emplace(o.csv_path, std::ios::binary);
    if (!*csv_out)
      throw quandles::Error("cannot open " + o.csv_path + " for writing");
  }

  SummaryCounters totals;
  ReportFlags flags;
  bool csv_header_done = false;
  run_survey(cfg, [&](GroupRecord&& rec) {
    totals.add(rec);
    scan_flags_into(rec, flags);
    if (json_out) json_out->add_group(rec);
    if (csv_out) {
      std::string table = render_csv({rec});
      if (csv_header_done) table.erase(0, table.find('\n') + 1);
      *csv_out << table;
      csv_header_done = true;
    }
    for (const auto& n : rec.notes)
      std::cout << rec.source << ": " << n << "\n";
    for (const auto& e : rec.errors)
      std::cout << rec.source << ": error: " << e << "\n";
    for (const auto& c : rec.classes) {
      bool bad = c.verdict == "not_good" || (c.hayashi && !*c.hayashi) ||
                 (c.audit_agreement && !*c.audit_agreement) ||
                 (c.lmlt_identity && !*c.lmlt_identity) || c.bound_hit;
      if (bad)
        std::cout << rec.name << " " << c.representative << ": " << c.verdict
                  << (c.bound_hit ? " [bound hit]" : "") << "\n";
    }
  });

  if (json_out) json_out->finish(totals);
  if (csv_out) {
    if (!csv_header_done)
      *csv_out << render_csv({});
    if (!csv_out->flush())
      throw quandles::Error("write to " + o.csv_path + " failed");
  }
  std::cout << "summary " << totals.to_json().dump() << "\n";
  return exit_code_for(flags);
}

struct ProductCheckOpts {
  SourceOpts source1, source2;
  std::string element1, element2;
  std::uint64_t bound = quandles::kDefaultEnumerationBound;
  std::string json_path;
};

int cmd_product_check(const ProductCheckOpts& o) {
  std::string display1, display2;
  FiniteGroup g1 = resolve_source(o.source1, o.bound, display1);
  FiniteGroup g2 = resolve_source(o.source2, o.bound, display2);
  GroupElement e1 = parse_element(g1, o.element1);
  GroupElement e2 = parse_element(g2, o.element2);
  if (!g1.contains(e1))
    throw quandles::NotAMember(to_string(e1) + " is not a member of " +
                               g1.name());
  if (!g2.contains(e2))
    throw quandles::NotAMember(to_string(e2) + " is not a member of " +
                               g2.name());

  ConjugationQuandle q1 = ConjugationQuandle::of_class(g1.conjugacy_class(e1));
  ConjugationQuandle q2 = ConjugationQuandle::of_class(g2.conjugacy_class(e2));
  bool h1 = q1.has_hayashi_property();
  bool h2 = q2.has_hayashi_property();
  ConjugationQuandle prod = ConjugationQuandle::product(q1, q2);
  bool hp = prod.has_hayashi_property();
  bool implication = !(h1 && h2) || hp;

  auto factor = [](const std::string& source, const std::string& element,
                   const ConjugationQuandle& q, bool hayashi) {
    return json{{"source", source},
                {"element", element},
                {"size", q.size()},
                {"hayashi", hayashi}};
  };
  json section{{"left", factor(display1, o.element1, q1, h1)},
               {"right", factor(display2, o.element2, q2, h2)},
               {"product", json{{"size", prod.size()}, {"hayashi", hp}}},
               {"implication_holds", implication}};

  json config{{"catalog", o.source1.catalog},
              {"file", o.source1.file},
              {"element", o.element1},
              {"catalog2", o.source2.catalog},
              {"file2", o.source2.file},
              {"element2", o.element2},
              {"bound", o.bound}};
  json doc = report_document("product-check", config, {});
  doc["product_check"] = std::move(section);
  if (!o.json_path.empty()) write_text_file(o.json_path, doc.dump(2) + "\n");

  std::cout << "left  " << display1 << " class of " << o.element1 << ": size "
            << q1.size() << ", hayashi " << (h1 ? "yes" : "no") << "\n";
  std::cout << "right " << display2 << " class of " << o.element2 << ": size "
            << q2.size() << ", hayashi " << (h2 ? "yes" : "no") << "\n";
  std::cout << "product: size " << prod.size() << ", hayashi "
            << (hp ? "yes" : "no") << "\n";
  std::cout << "implication (both factors => product): "
            << (implication ? "holds" : "VIOLATED") << "\n";
  return implication ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kToolName) +
               ": finite conjugation quandles, connectedness, the Hayashi "
               "property, and good classes"};
  app.set_version_flag("--version",
                       std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  ClassesOpts classes_opts;
  CLI::App* classes =
      app.add_subcommand("classes", "list conjugacy classes of a group");
  add_source_options(classes, classes_opts.source);
  classes->add_option("--bound", classes_opts.bound, "enumeration bound");
  classes->add_option("--json", classes_opts.json_path, "write a JSON report");
  classes->add_option("--csv", classes_opts.csv_path, "write a CSV summary");

  CheckOpts check_opts;
  CLI::App* check = app.add_subcommand(
      "check", "measure the conjugation quandle of one class");
  add_source_options(check, check_opts.source);
  check->add_option("--element", check_opts.element, "class representative")
      ->required();
  check->add_flag("--audit", check_opts.audit,
                  "run the equivalence audit and the translation-group "
                  "cardinality check");
  check->add_option("--bound", check_opts.bound, "enumeration bound");
  check->add_option("--json", check_opts.json_path, "write a JSON report");
  check->add_option("--csv", check_opts.csv_path, "write a CSV summary");

  WitnessOpts witness_opts;
  CLI::App* witness = app.add_subcommand(
      "witness", "construct a centralizer witness in a symmetric or "
                 "alternating group");
  witness
      ->add_option("--catalog", witness_opts.catalog,
                   "symmetric:n or alternating:n, n >= 5")
      ->required();
  witness->add_option("--element", witness_opts.element, "cycle notation")
      ->required();
  witness->add_flag("--audit", witness_opts.audit,
                    "compare against the exhaustive witness search");
  witness->add_option("--bound", witness_opts.bound, "enumeration bound");
  witness->add_option("--json", witness_opts.json_path, "write a JSON report");

  SurveyOpts survey_opts;
  CLI::App* survey = app.add_subcommand(
      "survey", "measure every class of every group in a catalog sweep");
  survey->add_option("--catalog", survey_opts.catalog,
                     "catalog specs or shorthands (standard, cyclic, "
                     "dihedral, symmetric, alternating, products)");
  survey->add_option("--file", survey_opts.files, "group files to include");
  survey->add_option("--max-order", survey_opts.max_order,
                     "skip groups above this order");
  survey->add_option("--bound", survey_opts.bound, "enumeration bound");
  survey->add_flag("--audit", survey_opts.audit, "run all cross-checks");
  survey->add_option("--seed", survey_opts.seed,
                     "seed for sampled checks (current checks are "
                     "exhaustive; echoed in reports)");
  survey->add_option("--jobs", survey_opts.jobs,
                     "worker threads (default: hardware concurrency)");
  survey->add_option("--json", survey_opts.json_path, "write a JSON report");
  survey->add_option("--csv", survey_opts.csv_path, "write a CSV summary");

  ProductCheckOpts product_opts;
  CLI::App* product = app.add_subcommand(
      "product-check",
      "check that two Hayashi factors give a Hayashi product");
  add_source_options(product, product_opts.source1);
  product->add_option("--element", product_opts.element1, "first class")
      ->required();
  auto* src2 = product->add_option_group("source2", "second group");
  src2->add_option("--catalog2", product_opts.source2.catalog,
                   "second catalog spec");
  src2->add_option("--file2", product_opts.source2.file, "second group file");
  src2->require_option(1);
  product->add_option("--element2", product_opts.element2, "second class")
      ->required();
  product->add_option("--bound", product_opts.bound, "enumeration bound");
  product->add_option("--json", product_opts.json_path, "write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (classes->parsed()) return cmd_classes(classes_opts);
    if (check->parsed()) return cmd_check(check_opts);
    if (witness->parsed()) return cmd_witness(witness_opts);
    if (survey->parsed()) return cmd_survey(survey_opts);
    if (product->parsed()) return cmd_product_check(product_opts);
  } catch (const quandles::BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const quandles::EquivalenceViolation& e) {
    std::cerr << "equivalence violation: " << e.what() << "\n";
    return 1;
  } catch (const quandles::ConstructionPostconditionFailed& e) {
    std::cerr << "construction postcondition failed: " << e.what() << "\n";
    return 1;
  } catch (const quandles::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
