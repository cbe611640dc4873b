#include <deque>

#include "ctlenum/error.hpp"
#include "internal.hpp"

namespace ctlenum::detail {

Commitments commitments(const KripkeModel& model,
                        const std::vector<ElementId>& ground,
                        const PartialDecision& decision) {
  if (decision.size() != ground.size()) {
    throw PreconditionError("partial decision does not match the ground set");
  }
  Commitments c{Submodel::full(model),
                Submodel(std::vector<bool>(model.num_worlds(), false),
                         std::vector<bool>(model.num_edges(), false))};
  c.keep.set_world(model.root(), true);
  for (std::size_t i = 0; i < decision.frontier(); ++i) {
    const ElementId el = ground[i];
    if (decision.at(i) == Decision::Delete) {
      if (el.is_world()) {
        c.allowed.set_world(el.index, false);
      } else {
        c.allowed.set_edge(el.index, false);
      }
    } else {
      c.any_keep = true;
      if (el.is_world()) {
        c.keep.set_world(el.index, true);
      } else {
        c.keep.set_edge(el.index, true);
      }
    }
  }
  return c;
}

std::optional<Submodel> closure_with_keeps(const KripkeModel& model,
                                           const Commitments& c,
                                           bool connected) {
  auto closed = largest_valid_within(model, c.allowed, connected);
  if (!closed || !c.keep.subset_of(*closed)) return std::nullopt;
  return closed;
}

CompletionSearch::CompletionSearch(const KripkeModel& model,
                                   const Formula& formula, bool connected)
    : model_(&model),
      connected_(connected),
      check_(model, formula),
      partial_(model, formula) {}

bool CompletionSearch::extend(const Commitments& c) {
  return search(c.allowed, c.keep.edge_mask(), c.keep);
}

// Every valid submodel is determined by its edge set, so branching on edges
// of the current closure covers all completions.
bool CompletionSearch::search(Submodel allowed, std::vector<bool> keep_edges,
                              const Submodel& keep) {
  const KripkeModel& m = *model_;
  auto closed = largest_valid_within(m, std::move(allowed), connected_);
  if (!closed || !keep.subset_of(*closed)) return false;
  for (std::size_t e = 0; e < m.num_edges(); ++e) {
    if (keep_edges[e] && !closed->has_edge(e)) return false;
  }
  if (check_.holds(*closed)) return true;
  if (!partial_.root_may(*closed, keep_edges)) return false;

  // Branch on an undecided edge whose source is nearest to the root.
  std::optional<std::size_t> pick;
  std::vector<bool> seen(m.num_worlds(), false);
  std::deque<std::size_t> queue{m.root()};
  seen[m.root()] = true;
  while (!queue.empty() && !pick) {
    std::size_t w = queue.front();
    queue.pop_front();
    for (std::size_t e : m.out_edges(w)) {
      if (!closed->has_edge(e)) continue;
      if (!keep_edges[e] && !pick) pick = e;
      std::size_t t = m.edge(e).target;
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  // Satisfaction at the root only depends on the reachable part, so if every
  // reachable edge is committed no completion can do better than `closed`.
  if (!pick) return false;

  Submodel without = *closed;
  without.set_edge(*pick, false);
  if (search(std::move(without), keep_edges, keep)) return true;
  keep_edges[*pick] = true;
  return search(std::move(*closed), std::move(keep_edges), keep);
}

}  // namespace ctlenum::detail
