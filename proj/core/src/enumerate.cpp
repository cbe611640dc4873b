#include "ctlenum/enumerate.hpp"

#include "json.hpp"

#include "ctlenum/error.hpp"
#include "ctlenum/modelcheck.hpp"

namespace ctlenum {

std::string EnumerationStats::to_json() const {
  nlohmann::ordered_json j;
  j["solutions"] = solutions;
  j["delays_ns"] = delays_ns;
  j["oracle_calls"] = oracle_calls;
  j["fallback_queries"] = fallback_queries;
  return j.dump();
}

namespace {

using Clock = std::chrono::steady_clock;

class Engine {
 public:
  Engine(const KripkeModel& model, ExtensionOracle& oracle,
         const EnumerationOptions& options,
         const std::function<bool(const Submodel&)>& emit,
         EnumerationStats& stats)
      : model_(model),
        ground_(ground_set(model)),
        decision_(ground_.size()),
        oracle_(oracle),
        options_(options),
        emit_(emit),
        stats_(stats) {}

  void run(Clock::time_point start) {
    interval_start_ = start;
    if (!(options_.limit && *options_.limit == 0) && ask()) visit();
    close_interval();
  }

 private:
  bool ask() {
    ++calls_;
    return oracle_.extend(decision_);
  }

  void close_interval() {
    const auto now = Clock::now();
    stats_.delays_ns.push_back(
        std::chrono::duration_cast<std::chrono::nanoseconds>(now - interval_start_)
            .count());
    stats_.oracle_calls.push_back(calls_);
    calls_ = 0;
  }

  // Precondition: the oracle accepted the current decision.
  void visit() {
    if (decision_.complete()) {
      emit_solution();
      return;
    }
    decision_.push(Decision::Keep);
    const bool keep_ok = ask();
    if (keep_ok) visit();
    decision_.pop();
    if (stop_) return;
    decision_.push(Decision::Delete);
    // An accepted parent with a rejected Keep child must extend via Delete.
    if (!keep_ok || ask()) visit();
    decision_.pop();
  }

  void emit_solution() {
    Submodel s(std::vector<bool>(model_.num_worlds(), false),
               std::vector<bool>(model_.num_edges(), false));
    s.set_world(model_.root(), true);
    for (std::size_t i = 0; i < ground_.size(); ++i) {
      if (decision_.at(i) != Decision::Keep) continue;
      const ElementId el = ground_[i];
      if (el.is_world()) {
        s.set_world(el.index, true);
      } else {
        s.set_edge(el.index, true);
      }
    }
    close_interval();
    ++stats_.solutions;
    if (!emit_(s)) stop_ = true;
    if (options_.limit && stats_.solutions >= *options_.limit) stop_ = true;
    interval_start_ = Clock::now();
  }

  const KripkeModel& model_;
  std::vector<ElementId> ground_;
  PartialDecision decision_;
  ExtensionOracle& oracle_;
  const EnumerationOptions& options_;
  const std::function<bool(const Submodel&)>& emit_;
  EnumerationStats& stats_;
  Clock::time_point interval_start_;
  std::size_t calls_ = 0;
  bool stop_ = false;
};

}  // namespace

EnumerationStats enumerate_submodels(
    const KripkeModel& model, const Formula& formula,
    const EnumerationOptions& options,
    const std::function<bool(const Submodel&)>& emit) {
  EnumerationStats stats;
  // Oracle construction counts towards the first delay.
  const auto start = Clock::now();
  auto oracle = make_oracle(options.oracle, model, formula, options.connected);
  stats.oracle = oracle->kind();
  Engine(model, *oracle, options, emit, stats).run(start);
  stats.fallback_queries = oracle->fallback_queries();
  return stats;
}

std::vector<Submodel> enumerate_all(const KripkeModel& model,
                                    const Formula& formula,
                                    const EnumerationOptions& options,
                                    EnumerationStats* stats) {
  std::vector<Submodel> out;
  EnumerationStats s = enumerate_submodels(model, formula, options,
                                           [&](const Submodel& sub) {
                                             out.push_back(sub);
                                             return true;
                                           });
  if (stats) *stats = std::move(s);
  return out;
}

std::vector<Submodel> brute_force_enumerate(const KripkeModel& model,
                                            const Formula& formula,
                                            bool connected, std::size_t cap) {
  const auto ground = ground_set(model);
  if (ground.size() > cap) {
    throw CapExceeded("ground set of " + std::to_string(ground.size()) +
                      " elements exceeds the brute-force cap of " +
                      std::to_string(cap));
  }
  CompiledCheck cc(model, formula);
  std::vector<Submodel> out;
  const std::uint64_t total = std::uint64_t{1} << ground.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Submodel s(std::vector<bool>(model.num_worlds(), false),
               std::vector<bool>(model.num_edges(), false));
    s.set_world(model.root(), true);
    for (std::size_t i = 0; i < ground.size(); ++i) {
      if (!(bits >> i & 1)) continue;
      if (ground[i].is_world()) {
        s.set_world(ground[i].index, true);
      } else {
        s.set_edge(ground[i].index, true);
      }
    }
    if (is_valid(model, s, connected) && cc.holds(s)) out.push_back(std::move(s));
  }
  return out;
}

bool exists_submodel(const KripkeModel& model, const Formula& formula,
                     bool connected) {
  auto oracle = make_oracle(OracleKind::Auto, model, formula, connected);
  return oracle->extend(PartialDecision(ground_set(model).size()));
}

}  // namespace ctlenum
