#pragma once

#include <memory>
#include <vector>

#include "ctlenum/enumerate.hpp"
#include "ctlenum/modelcheck.hpp"

namespace ctlenum::detail {

/// The decided part of a partial decision as masks over the model.
struct Commitments {
  Submodel allowed;          // everything not Delete-committed
  Submodel keep;             // Keep-committed worlds and edges
  bool any_keep = false;
};

Commitments commitments(const KripkeModel& model,
                        const std::vector<ElementId>& ground,
                        const PartialDecision& decision);

/// C = largest valid submodel inside `allowed`, provided it contains `keep`.
std::optional<Submodel> closure_with_keeps(const KripkeModel& model,
                                           const Commitments& c,
                                           bool connected);

/// Three-valued labeling over the range of submodels S with
/// must <= S <= may (edges), where `may` is a valid submodel. may(phi)
/// over-approximates the worlds satisfying phi in some S, must(phi)
/// under-approximates those satisfying it in every S containing them.
class PartialCheck {
 public:
  PartialCheck(const KripkeModel& model, const Formula& formula);

  /// Whether the root may satisfy the formula.
  bool root_may(const Submodel& may, const std::vector<bool>& must_edges);

 private:
  void ex(const std::vector<char>& z, bool use_may, std::vector<char>& out);
  void ax(const std::vector<char>& z, bool use_may, std::vector<char>& out);

  CompiledCheck shape_;
  const KripkeModel* model_;
  const Submodel* may_ = nullptr;
  const std::vector<bool>* must_ = nullptr;
  std::vector<std::vector<char>> hi_;
  std::vector<std::vector<char>> lo_;
  std::vector<char> tmp_;
};

/// Depth-first completion search used by the exhaustive oracle.
class CompletionSearch {
 public:
  CompletionSearch(const KripkeModel& model, const Formula& formula,
                   bool connected);

  bool extend(const Commitments& c);

 private:
  bool search(Submodel allowed, std::vector<bool> keep_edges,
              const Submodel& keep);

  const KripkeModel* model_;
  bool connected_;
  CompiledCheck check_;
  PartialCheck partial_;
};

/// The four-case existence test for trimmed AF/AG forms, with the checks
/// compiled once per model. For AG AF x the relabeled model carries a fresh
/// label per x-world and one EF (x_w & EX EF x_w) check per world.
class AfagDecider {
 public:
  AfagDecider(const KripkeModel& model, const TrimmedForm& form);

  bool exists(const Submodel& sub);
  /// For AG AF x: the first x-world (declaration order) of `sub` witnessing
  /// the accepted disjunct.
  std::optional<std::size_t> agaf_witness(const Submodel& sub);
  /// Satisfaction set of EG x on `sub`.
  const std::vector<char>& eg_set(const Submodel& sub);

 private:
  const KripkeModel* model_;
  TrimmedForm form_;
  std::unique_ptr<CompiledCheck> main_;  // EF x, EG x or EF EG x
  std::unique_ptr<CompiledCheck> eg_;
  std::unique_ptr<KripkeModel> hat_;
  std::vector<std::pair<std::size_t, std::unique_ptr<CompiledCheck>>> per_world_;
};

}  // namespace ctlenum::detail
