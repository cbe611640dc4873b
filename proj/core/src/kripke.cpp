#include "ctlenum/kripke.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "json.hpp"

#include "ctlenum/error.hpp"

namespace ctlenum {

ValidationReport validate_model(const ModelData& data) {
  ValidationReport report;
  std::map<std::string, std::size_t> ids;
  for (const World& w : data.worlds) {
    if (w.id.empty()) {
      report.violations.push_back("world with empty id");
      continue;
    }
    if (!ids.emplace(w.id, 0).second) {
      report.violations.push_back("duplicate world id: " + w.id);
    }
  }
  if (data.root.empty()) {
    report.violations.push_back("missing root");
  } else if (ids.count(data.root) == 0) {
    report.violations.push_back("root is not a declared world: " + data.root);
  }
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& [s, t] : data.edges) {
    const bool ok_s = ids.count(s) != 0;
    const bool ok_t = ids.count(t) != 0;
    if (!ok_s || !ok_t) {
      report.violations.push_back("dangling edge: (" + s + ", " + t + ")");
      continue;
    }
    if (!seen.insert({s, t}).second) {
      report.violations.push_back("duplicate edge: (" + s + ", " + t + ")");
    }
    ++ids[s];
  }
  for (const World& w : data.worlds) {
    auto it = ids.find(w.id);
    if (it != ids.end() && it->second == 0) {
      report.violations.push_back("non-total world: " + w.id);
      it->second = 1;  // report each id once
    }
  }
  return report;
}

KripkeModel::KripkeModel(ModelData data) {
  ValidationReport report = validate_model(data);
  if (!report.ok()) {
    std::string msg = "invalid model:";
    for (const auto& v : report.violations) msg += " " + v + ";";
    msg.pop_back();
    throw ModelError(msg);
  }
  worlds_ = std::move(data.worlds);
  for (std::size_t i = 0; i < worlds_.size(); ++i) index_[worlds_[i].id] = i;
  root_ = index_.at(data.root);
  edges_.reserve(data.edges.size());
  for (const auto& [s, t] : data.edges) {
    edges_.push_back({index_.at(s), index_.at(t)});
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.source, a.target) < std::pair(b.source, b.target);
  });
  out_.assign(worlds_.size(), {});
  in_.assign(worlds_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    out_[edges_[e].source].push_back(e);
    in_[edges_[e].target].push_back(e);
  }
}

std::optional<std::size_t> KripkeModel::find_world(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> KripkeModel::find_edge(std::size_t source,
                                                  std::size_t target) const {
  const auto& out = out_[source];
  auto it = std::lower_bound(out.begin(), out.end(), target,
                             [this](std::size_t e, std::size_t t) {
                               return edges_[e].target < t;
                             });
  if (it == out.end() || edges_[*it].target != target) return std::nullopt;
  return *it;
}

ModelData KripkeModel::data() const {
  ModelData d;
  d.worlds = worlds_;
  d.root = worlds_[root_].id;
  for (const Edge& e : edges_) {
    d.edges.emplace_back(worlds_[e.source].id, worlds_[e.target].id);
  }
  return d;
}

ValidationReport validate_model(const KripkeModel& model) {
  return validate_model(model.data());
}

std::vector<ElementId> ground_set(const KripkeModel& model) {
  std::vector<ElementId> g;
  g.reserve(model.num_worlds() - 1 + model.num_edges());
  for (std::size_t w = 0; w < model.num_worlds(); ++w) {
    if (w != model.root()) g.push_back(ElementId::world(w));
  }
  for (std::size_t e = 0; e < model.num_edges(); ++e) {
    g.push_back(ElementId::edge(e));
  }
  return g;
}

std::string describe(const KripkeModel& model, ElementId element) {
  if (element.is_world()) return "world " + model.id(element.index);
  const Edge& e = model.edge(element.index);
  return "edge (" + model.id(e.source) + ", " + model.id(e.target) + ")";
}

PartialDecision::PartialDecision(std::vector<Decision> decisions)
    : decisions_(std::move(decisions)) {
  while (frontier_ < decisions_.size() &&
         decisions_[frontier_] != Decision::Undecided) {
    ++frontier_;
  }
  for (std::size_t i = frontier_; i < decisions_.size(); ++i) {
    if (decisions_[i] != Decision::Undecided) {
      throw PreconditionError("partial decision: position " +
                              std::to_string(i) +
                              " is decided after an undecided position");
    }
  }
}

void PartialDecision::push(Decision d) {
  if (complete()) throw PreconditionError("partial decision is complete");
  if (d == Decision::Undecided) {
    throw PreconditionError("cannot push an undecided entry");
  }
  decisions_[frontier_++] = d;
}

void PartialDecision::pop() {
  if (frontier_ == 0) throw PreconditionError("partial decision is empty");
  decisions_[--frontier_] = Decision::Undecided;
}

std::size_t PartialDecision::count(Decision d) const {
  return static_cast<std::size_t>(
      std::count(decisions_.begin(), decisions_.end(), d));
}

Submodel Submodel::full(const KripkeModel& model) {
  return Submodel(std::vector<bool>(model.num_worlds(), true),
                  std::vector<bool>(model.num_edges(), true));
}

std::size_t Submodel::world_count() const {
  return static_cast<std::size_t>(
      std::count(worlds_.begin(), worlds_.end(), true));
}

std::size_t Submodel::edge_count() const {
  return static_cast<std::size_t>(
      std::count(edges_.begin(), edges_.end(), true));
}

bool Submodel::subset_of(const Submodel& other) const {
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    if (worlds_[i] && !other.worlds_[i]) return false;
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i] && !other.edges_[i]) return false;
  }
  return true;
}

std::size_t SubmodelHash::operator()(const Submodel& s) const {
  std::hash<std::vector<bool>> h;
  return h(s.world_mask()) * 1000003u ^ h(s.edge_mask());
}

std::vector<bool> reachable_mask(const KripkeModel& model, const Submodel& sub,
                                 std::size_t from) {
  std::vector<bool> seen(model.num_worlds(), false);
  if (!sub.has_world(from)) return seen;
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    std::size_t w = stack.back();
    stack.pop_back();
    for (std::size_t e : model.out_edges(w)) {
      if (!sub.has_edge(e)) continue;
      std::size_t t = model.edge(e).target;
      if (!seen[t] && sub.has_world(t)) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

bool is_valid(const KripkeModel& model, const Submodel& sub, bool connected) {
  if (!sub.has_world(model.root())) return false;
  std::vector<bool> has_succ(model.num_worlds(), false);
  for (std::size_t e = 0; e < model.num_edges(); ++e) {
    if (!sub.has_edge(e)) continue;
    const Edge& edge = model.edge(e);
    if (!sub.has_world(edge.source) || !sub.has_world(edge.target)) {
      return false;
    }
    has_succ[edge.source] = true;
  }
  for (std::size_t w = 0; w < model.num_worlds(); ++w) {
    if (sub.has_world(w) && !has_succ[w]) return false;
  }
  if (connected) {
    std::vector<bool> reach = reachable_mask(model, sub, model.root());
    for (std::size_t w = 0; w < model.num_worlds(); ++w) {
      if (sub.has_world(w) && !reach[w]) return false;
    }
  }
  return true;
}

std::optional<Submodel> largest_valid_within(const KripkeModel& model,
                                             Submodel candidate,
                                             bool connected) {
  const std::size_t n = model.num_worlds();
  std::vector<std::size_t> outdeg(n, 0);
  for (std::size_t e = 0; e < model.num_edges(); ++e) {
    const Edge& edge = model.edge(e);
    if (candidate.has_edge(e) && (!candidate.has_world(edge.source) ||
                                  !candidate.has_world(edge.target))) {
      candidate.set_edge(e, false);
    }
    if (candidate.has_edge(e)) ++outdeg[edge.source];
  }
  std::vector<std::size_t> queue;
  for (std::size_t w = 0; w < n; ++w) {
    if (candidate.has_world(w) && outdeg[w] == 0) queue.push_back(w);
  }
  while (!queue.empty()) {
    std::size_t w = queue.back();
    queue.pop_back();
    candidate.set_world(w, false);
    for (std::size_t e : model.in_edges(w)) {
      if (!candidate.has_edge(e)) continue;
      candidate.set_edge(e, false);
      std::size_t s = model.edge(e).source;
      if (--outdeg[s] == 0 && candidate.has_world(s)) queue.push_back(s);
    }
  }
  if (!candidate.has_world(model.root())) return std::nullopt;
  if (connected) {
    // Removing unreachable worlds never strands a reachable one, so a single
    // pass reaches the fixed point.
    std::vector<bool> reach = reachable_mask(model, candidate, model.root());
    for (std::size_t w = 0; w < n; ++w) {
      if (candidate.has_world(w) && !reach[w]) {
        candidate.set_world(w, false);
        for (std::size_t e : model.out_edges(w)) candidate.set_edge(e, false);
      }
    }
  }
  return candidate;
}

std::optional<Submodel> closure(const KripkeModel& model,
                                const std::vector<ElementId>& deleted,
                                bool connected) {
  Submodel s = Submodel::full(model);
  for (ElementId el : deleted) {
    if (el.is_world()) {
      if (el.index == model.root()) throw RootDeleted();
      s.set_world(el.index, false);
    } else {
      s.set_edge(el.index, false);
    }
  }
  return largest_valid_within(model, std::move(s), connected);
}

std::set<std::string> reachable_set(const KripkeModel& model,
                                    const Submodel& sub,
                                    std::string_view from) {
  auto w = model.find_world(from);
  if (!w || !sub.has_world(*w)) {
    throw UnknownWorld("unknown world: " + std::string(from));
  }
  std::vector<bool> mask = reachable_mask(model, sub, *w);
  std::set<std::string> out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.insert(model.id(i));
  }
  return out;
}

std::set<std::string> reachable_set(const KripkeModel& model,
                                    std::string_view from) {
  return reachable_set(model, Submodel::full(model), from);
}

std::string canonical_serialize(const KripkeModel& model, const Submodel& sub) {
  std::vector<std::string> worlds;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t w = 0; w < model.num_worlds(); ++w) {
    if (sub.has_world(w)) worlds.push_back(model.id(w));
  }
  for (std::size_t e = 0; e < model.num_edges(); ++e) {
    if (!sub.has_edge(e)) continue;
    const Edge& edge = model.edge(e);
    edges.emplace_back(model.id(edge.source), model.id(edge.target));
  }
  std::sort(worlds.begin(), worlds.end());
  std::sort(edges.begin(), edges.end());
  nlohmann::ordered_json j;
  j["worlds"] = worlds;
  j["edges"] = nlohmann::ordered_json::array();
  for (auto& [s, t] : edges) j["edges"].push_back({s, t});
  return j.dump();
}

KripkeModel induced_model(const KripkeModel& model, const Submodel& sub) {
  ModelData d;
  for (std::size_t w = 0; w < model.num_worlds(); ++w) {
    if (sub.has_world(w)) d.worlds.push_back(model.world(w));
  }
  for (std::size_t e = 0; e < model.num_edges(); ++e) {
    if (!sub.has_edge(e)) continue;
    const Edge& edge = model.edge(e);
    d.edges.emplace_back(model.id(edge.source), model.id(edge.target));
  }
  d.root = model.id(model.root());
  return KripkeModel(std::move(d));
}

Submodel submodel_from_ids(
    const KripkeModel& model, const std::vector<std::string>& worlds,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  Submodel s(std::vector<bool>(model.num_worlds(), false),
             std::vector<bool>(model.num_edges(), false));
  auto lookup = [&](const std::string& id) {
    auto w = model.find_world(id);
    if (!w) throw UnknownWorld("unknown world: " + id);
    return *w;
  };
  for (const auto& id : worlds) s.set_world(lookup(id), true);
  for (const auto& [a, b] : edges) {
    auto e = model.find_edge(lookup(a), lookup(b));
    if (!e) throw ModelError("not an edge of the model: (" + a + ", " + b + ")");
    s.set_edge(*e, true);
  }
  return s;
}

}  // namespace ctlenum
