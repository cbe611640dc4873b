#pragma once

// Bottom-up CTL labeling with direct fixpoint algorithms for all ten
// temporal operators. Each operator runs in O(|W| + |R|), so labeling is
// O(|phi| * (|W| + |R|)).

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctlenum/formula.hpp"
#include "ctlenum/kripke.hpp"

namespace ctlenum {

/// Worlds (by index) satisfying each distinct subformula.
struct LabelingResult {
  std::unordered_map<Formula, std::vector<bool>, FormulaHash> sat;

  /// Throws PreconditionError if `f` is not a subformula of the labeled one.
  const std::vector<bool>& at(const Formula& f) const;
  std::set<std::string> worlds(const KripkeModel& model,
                               const Formula& f) const;
};

/// A formula compiled against one model: shared subformulas become a single
/// DAG node and atom masks are computed once. Evaluation on a submodel
/// reuses internal buffers, so one instance must not be shared between
/// threads.
class CompiledCheck {
 public:
  CompiledCheck(const KripkeModel& model, const Formula& formula);

  /// Satisfaction set of the whole formula on `sub` (assumed valid).
  const std::vector<char>& evaluate(const Submodel& sub);
  bool holds(const Submodel& sub) { return evaluate(sub)[model_->root()] != 0; }
  bool holds_at(const Submodel& sub, std::size_t world) {
    return evaluate(sub)[world] != 0;
  }

  const KripkeModel& model() const { return *model_; }
  std::size_t node_count() const { return nodes_.size(); }

  struct Node {
    Op op;
    int a = -1;  // first child node
    int b = -1;  // second child node
    int atom = -1;
  };
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Formula>& node_formulas() const { return formulas_; }
  const std::vector<char>& atom_mask(int atom) const { return atoms_[atom]; }
  /// Value of DAG node `i` after the last evaluate() call.
  const std::vector<char>& value(std::size_t i) const { return vals_[i]; }

 private:
  int compile(const Formula& f,
              std::unordered_map<Formula, int, FormulaHash>& memo,
              std::unordered_map<std::string, int>& atom_ids);

  const KripkeModel* model_;
  std::vector<Node> nodes_;
  std::vector<Formula> formulas_;
  std::vector<std::vector<char>> atoms_;
  std::vector<std::vector<char>> vals_;
  std::vector<int> counter_;
  std::vector<std::size_t> work_;
};

/// Throws InvalidStructure if `sub` is not a valid (not necessarily
/// connected) submodel.
LabelingResult label(const KripkeModel& model, const Formula& f);
LabelingResult label(const KripkeModel& model, const Submodel& sub,
                     const Formula& f);

bool check(const KripkeModel& model, const Formula& f);
bool check(const KripkeModel& model, const Submodel& sub, const Formula& f);

/// True iff the formulas agree at the root of every model of the family.
bool check_equiv(const Formula& a, const Formula& b,
                 std::span<const KripkeModel> family);
bool check_equiv(const Formula& a, const Formula& b,
                 const SmallModelOptions& family);

}  // namespace ctlenum
