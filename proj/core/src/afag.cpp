#include <algorithm>
#include <deque>
#include <unordered_map>

#include "ctlenum/error.hpp"
#include "internal.hpp"

namespace ctlenum {
namespace detail {

AfagDecider::AfagDecider(const KripkeModel& model, const TrimmedForm& form)
    : model_(&model), form_(form) {
  const Formula x = Formula::atom(form.atom);
  switch (form.shape) {
    case TrimmedForm::Shape::AF:
      main_ = std::make_unique<CompiledCheck>(model, Formula::ef(x));
      break;
    case TrimmedForm::Shape::AG:
      main_ = std::make_unique<CompiledCheck>(model, Formula::eg(x));
      break;
    case TrimmedForm::Shape::AFAG:
      main_ = std::make_unique<CompiledCheck>(model, Formula::ef(Formula::eg(x)));
      break;
    case TrimmedForm::Shape::AGAF: {
      ModelData hat = model.data();
      for (std::size_t w = 0; w < hat.worlds.size(); ++w) {
        World& world = hat.worlds[w];
        const bool marked = world.labels.count(form.atom) != 0;
        world.labels.clear();
        if (marked) world.labels.insert("x_" + world.id);
      }
      hat_ = std::make_unique<KripkeModel>(std::move(hat));
      for (std::size_t w = 0; w < model.num_worlds(); ++w) {
        if (!model.has_label(w, form.atom)) continue;
        const Formula xw = Formula::atom("x_" + model.id(w));
        const Formula f = Formula::ef(Formula::conj(xw, Formula::ex(Formula::ef(xw))));
        per_world_.emplace_back(w, std::make_unique<CompiledCheck>(*hat_, f));
      }
      break;
    }
  }
  eg_ = std::make_unique<CompiledCheck>(model, Formula::eg(x));
}

std::optional<std::size_t> AfagDecider::agaf_witness(const Submodel& sub) {
  for (auto& [w, cc] : per_world_) {
    if (sub.has_world(w) && cc->holds(sub)) return w;
  }
  return std::nullopt;
}

bool AfagDecider::exists(const Submodel& sub) {
  if (form_.shape == TrimmedForm::Shape::AGAF) {
    return agaf_witness(sub).has_value();
  }
  return main_->holds(sub);
}

const std::vector<char>& AfagDecider::eg_set(const Submodel& sub) {
  return eg_->evaluate(sub);
}

}  // namespace detail

namespace {

// Shortest path (inclusive) from `from` to the nearest world satisfying
// `goal`, over kept edges.
template <typename Goal>
std::optional<std::vector<std::size_t>> shortest_path(const KripkeModel& m,
                                                      const Submodel& sub,
                                                      std::size_t from,
                                                      Goal goal) {
  std::vector<std::size_t> parent(m.num_worlds(), m.num_worlds());
  std::vector<bool> seen(m.num_worlds(), false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    std::size_t w = queue.front();
    queue.pop_front();
    if (goal(w)) {
      std::vector<std::size_t> path{w};
      while (path.back() != from) path.push_back(parent[path.back()]);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::size_t e : m.out_edges(w)) {
      if (!sub.has_edge(e)) continue;
      std::size_t t = m.edge(e).target;
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = w;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

// Extends `path` by always taking the first kept edge into `allowed` until a
// world repeats, then splits at the repeated world.
template <typename Allowed>
Lasso walk_to_lasso(const KripkeModel& m, const Submodel& sub,
                    std::vector<std::size_t> path, Allowed allowed) {
  std::unordered_map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < path.size(); ++i) pos.emplace(path[i], i);
  while (true) {
    const std::size_t cur = path.back();
    std::optional<std::size_t> next;
    for (std::size_t e : m.out_edges(cur)) {
      if (sub.has_edge(e) && allowed(m.edge(e).target)) {
        next = m.edge(e).target;
        break;
      }
    }
    if (!next) throw NoWitness("walk left the witness set");
    if (auto it = pos.find(*next); it != pos.end()) {
      Lasso l;
      for (std::size_t i = 0; i < it->second; ++i) l.stem.push_back(m.id(path[i]));
      for (std::size_t i = it->second; i < path.size(); ++i) {
        l.cycle.push_back(m.id(path[i]));
      }
      return l;
    }
    pos.emplace(*next, path.size());
    path.push_back(*next);
  }
}

}  // namespace

bool exists_afag(const KripkeModel& model, const Submodel& sub,
                 const TrimmedForm& form) {
  if (!is_valid(model, sub, false)) {
    throw InvalidStructure("exists_afag requires a valid submodel");
  }
  return detail::AfagDecider(model, form).exists(sub);
}

bool exists_afag(const KripkeModel& model, const TrimmedForm& form) {
  return exists_afag(model, Submodel::full(model), form);
}

Lasso extract_lasso_witness(const KripkeModel& model, const Submodel& sub,
                            const TrimmedForm& form) {
  if (!is_valid(model, sub, false)) {
    throw InvalidStructure("lasso extraction requires a valid submodel");
  }
  detail::AfagDecider decider(model, form);
  if (!decider.exists(sub)) {
    throw NoWitness("no submodel satisfies " + render_formula(form.to_formula()));
  }
  const std::size_t root = model.root();
  auto any = [&](std::size_t w) { return sub.has_world(w); };
  switch (form.shape) {
    case TrimmedForm::Shape::AF: {
      auto path = shortest_path(model, sub, root, [&](std::size_t w) {
        return model.has_label(w, form.atom);
      });
      return walk_to_lasso(model, sub, std::move(*path), any);
    }
    case TrimmedForm::Shape::AG:
    case TrimmedForm::Shape::AFAG: {
      std::vector<char> eg = decider.eg_set(sub);
      auto in_eg = [&](std::size_t w) { return eg[w] != 0; };
      auto path = shortest_path(model, sub, root, in_eg);
      return walk_to_lasso(model, sub, std::move(*path), in_eg);
    }
    case TrimmedForm::Shape::AGAF: {
      const std::size_t target = *decider.agaf_witness(sub);
      auto stem = *shortest_path(model, sub, root,
                                 [&](std::size_t w) { return w == target; });
      // Shortest cycle through the witness: search from its successors.
      std::optional<std::vector<std::size_t>> best;
      for (std::size_t e : model.out_edges(target)) {
        if (!sub.has_edge(e)) continue;
        auto back = shortest_path(model, sub, model.edge(e).target,
                                  [&](std::size_t w) { return w == target; });
        if (back && (!best || back->size() < best->size())) best = std::move(back);
      }
      std::vector<std::size_t> cycle{target};
      cycle.insert(cycle.end(), best->begin(), best->end() - 1);
      // Cut the stem at its first world on the cycle.
      std::size_t cut = 0;
      std::size_t offset = 0;
      for (; cut < stem.size(); ++cut) {
        auto it = std::find(cycle.begin(), cycle.end(), stem[cut]);
        if (it != cycle.end()) {
          offset = static_cast<std::size_t>(it - cycle.begin());
          break;
        }
      }
      std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(offset),
                  cycle.end());
      Lasso l;
      for (std::size_t i = 0; i < cut; ++i) l.stem.push_back(model.id(stem[i]));
      for (std::size_t w : cycle) l.cycle.push_back(model.id(w));
      return l;
    }
  }
  throw NoWitness("unknown form");
}

Lasso extract_lasso_witness(const KripkeModel& model, const TrimmedForm& form) {
  return extract_lasso_witness(model, Submodel::full(model), form);
}

Submodel lasso_submodel(const KripkeModel& model, const Lasso& lasso) {
  if (lasso.cycle.empty()) throw ModelError("lasso cycle is empty");
  std::vector<std::string> seq = lasso.stem;
  seq.insert(seq.end(), lasso.cycle.begin(), lasso.cycle.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    edges.emplace_back(seq[i], seq[i + 1]);
  }
  edges.emplace_back(seq.back(), lasso.cycle.front());
  return submodel_from_ids(model, seq, edges);
}

}  // namespace ctlenum
