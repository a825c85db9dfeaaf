#include "survey.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "quandles/errors.hpp"
#include "quandles/group_io.hpp"
#include "sources.hpp"

namespace quandlescope {

using quandles::ConjClass;
using quandles::Error;
using quandles::FiniteGroup;

namespace {

void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
      body(i);
  };
  std::vector<std::thread> pool;
  std::size_t workers = std::min<std::size_t>(jobs, count);
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace

void run_survey(const SurveyConfig& cfg,
                const std::function<void(GroupRecord&&)>& on_group) {
  if (cfg.max_order > cfg.bound)
    throw quandles::ParameterOutOfRange(
        "max-order " + std::to_string(cfg.max_order) +
        " exceeds the enumeration bound " + std::to_string(cfg.bound));

  RecordOptions opt;
  opt.both_connectivity = true;
  opt.audit = cfg.audit;
  opt.with_splits = false;

  auto process = [&](FiniteGroup g, const std::string& source) {
    GroupRecord rec;
    rec.name = g.name();
    rec.source = source;
    rec.order = g.order();
    if (rec.order > cfg.max_order) {
      rec.notes.push_back(
          "skipped: order " + std::to_string(rec.order) +
          " exceeds max-order " + std::to_string(cfg.max_order));
      on_group(std::move(rec));
      return;
    }
    std::vector<ConjClass> classes = g.conjugacy_classes();
    rec.classes.resize(classes.size());

    // Each task owns its slot; only the shared error list needs the lock.
    std::mutex errors_mu;
    parallel_for(classes.size(), cfg.jobs, [&](std::size_t ci) {
      try {
        rec.classes[ci] = build_class_record(classes[ci], opt);
      } catch (const std::exception& e) {
        ClassRecord& slot = rec.classes[ci];
        slot.representative = to_string(classes[ci].representative);
        slot.class_size = classes[ci].size();
        slot.verdict = "undecided";
        slot.notes.emplace_back(e.what());
        std::lock_guard<std::mutex> lock(errors_mu);
        rec.errors.emplace_back(e.what());
      }
    });
    on_group(std::move(rec));
  };
  auto fail = [&](const std::string& source, const std::string& what) {
    GroupRecord rec;
    rec.name = source;
    rec.source = source;
    rec.errors.push_back(what);
    on_group(std::move(rec));
  };

  for (const CatalogEntry& entry : expand_catalog(cfg.catalog, cfg.max_order)) {
    try {
      process(realize(entry, cfg.bound), entry.spec);
    } catch (const Error& e) {
      fail(entry.spec, e.what());
    }
  }
  for (const std::string& path : cfg.files) {
    try {
      process(quandles::load_group_file(path, cfg.bound), path);
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
}

std::vector<GroupRecord> collect_survey(const SurveyConfig& cfg) {
  std::vector<GroupRecord> out;
  run_survey(cfg, [&](GroupRecord&& rec) { out.push_back(std::move(rec)); });
  return out;
}

}  // namespace quandlescope
