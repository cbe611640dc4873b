#pragma once

// Rooted Kripke models, submodels and the deletion calculus.
//
// A KripkeModel is always valid (root present, unique ids, no dangling
// edges, total transition relation); unvalidated input lives in ModelData.
// Worlds keep their declaration order. Edges are stored sorted by the
// declaration positions of (source, target), which is also the order in
// which they appear in the ground set.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ctlenum {

struct World {
  std::string id;
  std::set<std::string> labels;
};

/// Raw, unvalidated model contents as read from a file.
struct ModelData {
  std::vector<World> worlds;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string root;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_model(const ModelData& data);

struct Edge {
  std::size_t source;
  std::size_t target;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class KripkeModel {
 public:
  /// Throws ModelError listing every violation if `data` is not a valid model.
  explicit KripkeModel(ModelData data);

  std::size_t num_worlds() const { return worlds_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t root() const { return root_; }

  const World& world(std::size_t w) const { return worlds_[w]; }
  const std::string& id(std::size_t w) const { return worlds_[w].id; }
  const std::vector<World>& worlds() const { return worlds_; }
  bool has_label(std::size_t w, const std::string& atom) const {
    return worlds_[w].labels.count(atom) != 0;
  }

  const Edge& edge(std::size_t e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const std::size_t> out_edges(std::size_t w) const {
    return out_[w];
  }
  std::span<const std::size_t> in_edges(std::size_t w) const { return in_[w]; }

  std::optional<std::size_t> find_world(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::size_t source,
                                       std::size_t target) const;

  ModelData data() const;

 private:
  std::vector<World> worlds_;
  std::vector<Edge> edges_;
  std::size_t root_ = 0;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::unordered_map<std::string, std::size_t> index_;
};

ValidationReport validate_model(const KripkeModel& model);

/// A world or an edge of a model, addressed by index.
struct ElementId {
  enum class Kind : std::uint8_t { World, Edge };
  Kind kind;
  std::size_t index;

  static ElementId world(std::size_t w) { return {Kind::World, w}; }
  static ElementId edge(std::size_t e) { return {Kind::Edge, e}; }
  bool is_world() const { return kind == Kind::World; }
  friend auto operator<=>(const ElementId&, const ElementId&) = default;
};

/// Decidable elements in enumeration order: non-root worlds in declaration
/// order, then all edges. |ground_set| = |W| - 1 + |R|.
std::vector<ElementId> ground_set(const KripkeModel& model);

std::string describe(const KripkeModel& model, ElementId element);

enum class Decision : std::uint8_t { Undecided, Keep, Delete };

/// Keep/delete commitments over a ground set. Decided positions always form
/// a prefix; the frontier is the first undecided position.
class PartialDecision {
 public:
  explicit PartialDecision(std::size_t ground_size)
      : decisions_(ground_size, Decision::Undecided) {}
  /// Throws PreconditionError if an Undecided entry precedes a decided one.
  explicit PartialDecision(std::vector<Decision> decisions);

  std::size_t size() const { return decisions_.size(); }
  std::size_t frontier() const { return frontier_; }
  bool complete() const { return frontier_ == decisions_.size(); }
  Decision at(std::size_t i) const { return decisions_[i]; }

  /// Decides the frontier element.
  void push(Decision d);
  /// Reverts the last decision.
  void pop();
  std::size_t count(Decision d) const;

 private:
  std::vector<Decision> decisions_;
  std::size_t frontier_ = 0;
};

/// Kept worlds and edges of a model (labels and root are inherited).
class Submodel {
 public:
  Submodel(std::vector<bool> worlds, std::vector<bool> edges)
      : worlds_(std::move(worlds)), edges_(std::move(edges)) {}

  static Submodel full(const KripkeModel& model);

  bool has_world(std::size_t w) const { return worlds_[w]; }
  bool has_edge(std::size_t e) const { return edges_[e]; }
  bool contains(ElementId el) const {
    return el.is_world() ? worlds_[el.index] : edges_[el.index];
  }
  void set_world(std::size_t w, bool keep) { worlds_[w] = keep; }
  void set_edge(std::size_t e, bool keep) { edges_[e] = keep; }

  const std::vector<bool>& world_mask() const { return worlds_; }
  const std::vector<bool>& edge_mask() const { return edges_; }
  std::size_t world_count() const;
  std::size_t edge_count() const;

  /// Element-wise inclusion.
  bool subset_of(const Submodel& other) const;

  friend bool operator==(const Submodel&, const Submodel&) = default;

 private:
  std::vector<bool> worlds_;
  std::vector<bool> edges_;
};

struct SubmodelHash {
  std::size_t operator()(const Submodel& s) const;
};

/// Structural validity: root kept, kept edges between kept worlds, kept
/// relation total on kept worlds and, if `connected`, every kept world
/// reachable from the root.
bool is_valid(const KripkeModel& model, const Submodel& sub, bool connected);

/// Largest valid submodel contained in `candidate`: drops edges with a
/// dropped endpoint, then iterates "drop worlds without successors" and,
/// if `connected`, "drop worlds unreachable from the root" to a fixed
/// point. nullopt when the root is dropped.
std::optional<Submodel> largest_valid_within(const KripkeModel& model,
                                             Submodel candidate,
                                             bool connected);

/// The unique maximal valid submodel avoiding `deleted`. Throws RootDeleted.
std::optional<Submodel> closure(const KripkeModel& model,
                                const std::vector<ElementId>& deleted,
                                bool connected);

/// Worlds reachable from `from` over kept edges (including `from`).
std::vector<bool> reachable_mask(const KripkeModel& model, const Submodel& sub,
                                 std::size_t from);
std::set<std::string> reachable_set(const KripkeModel& model,
                                    std::string_view from);
std::set<std::string> reachable_set(const KripkeModel& model,
                                    const Submodel& sub, std::string_view from);

/// One-line JSON record {"worlds":[...],"edges":[[s,t],...]} with world ids
/// and edge pairs sorted as strings. Equal strings iff equal submodels.
std::string canonical_serialize(const KripkeModel& model, const Submodel& sub);

/// The submodel as a standalone model (root unchanged, labels restricted).
KripkeModel induced_model(const KripkeModel& model, const Submodel& sub);

/// Submodel from world id / edge id-pair lists; throws UnknownWorld or
/// ModelError for ids or edges not in the model.
Submodel submodel_from_ids(
    const KripkeModel& model, const std::vector<std::string>& worlds,
    const std::vector<std::pair<std::string, std::string>>& edges);

// ---------------------------------------------------------------------------
// File formats

/// {"worlds":[{"id":..,"labels":[..]},..],"edges":[[s,t],..],"root":..}
/// Throws ModelError for malformed JSON, duplicates or invalid models.
KripkeModel parse_model_json(std::string_view text);
KripkeModel read_model_file(const std::string& path);
std::string model_to_json(const KripkeModel& model);

// ---------------------------------------------------------------------------
// Small model families

struct SmallModelOptions {
  std::size_t min_worlds = 1;
  std::size_t max_worlds = 3;
  std::vector<std::string> atoms = {"p"};
  /// Only frames whose worlds are all reachable from the root.
  bool connected_only = true;
  /// Skip models isomorphic (by a root-fixing permutation) to one already
  /// produced.
  bool dedupe_isomorphic = true;
};

/// Edge lists of all total frames on `n` worlds named w0..w{n-1} (root w0).
void for_each_small_frame(
    std::size_t n, bool connected_only, bool dedupe_isomorphic,
    const std::function<void(const std::vector<Edge>&)>& visit);

/// Every labeled model of the family, in a fixed order.
void for_each_small_model(const SmallModelOptions& options,
                          const std::function<void(const KripkeModel&)>& visit);

}  // namespace ctlenum
