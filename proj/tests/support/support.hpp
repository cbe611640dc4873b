#pragma once

// Shared helpers for the unit and acceptance tests: fixture paths, seeded
// formula generators and an independent reference model checker.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ctlenum/formula.hpp"
#include "ctlenum/kripke.hpp"

namespace ctlenum::testing {

/// Absolute path of a file under data/.
std::string data_path(const std::string& name);
KripkeModel load_fixture(const std::string& name);

enum class Family : std::uint8_t { General, Monotone, AfagChain };

/// Random formulas with nesting depth at most `depth` over `atoms`.
/// General draws from all operators and connectives, Monotone from
/// {EX, EF, EG, EU, ER, &, |} over atoms, AfagChain builds chains of
/// AF/AG over a single atom with 1..depth operators.
class FormulaGen {
 public:
  FormulaGen(std::uint64_t seed, std::vector<std::string> atoms)
      : rng_(seed), atoms_(std::move(atoms)) {}
  Formula operator()(Family family, std::size_t depth);
  std::mt19937_64& rng() { return rng_; }

 private:
  Formula general(std::size_t depth);
  Formula monotone(std::size_t depth);
  Formula leaf();
  std::mt19937_64 rng_;
  std::vector<std::string> atoms_;
};

/// Every AF/AG chain over `atom` with 1..max_ops operators.
std::vector<Formula> all_afag_chains(const std::string& atom, std::size_t max_ops);

/// Reference semantics by bounded path unrolling to the lasso horizon |W|,
/// sharing no code with modelcheck. Exponential; small models only.
std::set<std::string> reference_sat(const ModelData& model, const Formula& f);
bool reference_check(const ModelData& model, const Formula& f);
bool reference_check(const KripkeModel& model, const Submodel& sub,
                     const Formula& f);

/// The largest valid submodel inside a random subset of the edges, or the
/// full model when that subset kills the root.
Submodel random_submodel(const KripkeModel& model,
                                        std::mt19937_64& rng, bool connected);

/// A random total model with `n` worlds over `atoms`, rooted at w0.
KripkeModel random_model(std::mt19937_64& rng, std::size_t n,
                         const std::vector<std::string>& atoms,
                         double edge_density = 0.35);

/// Canonical strings of a solution list, in order.
std::vector<std::string> serialize_all(const KripkeModel& model,
                                       const std::vector<Submodel>& subs);

}  // namespace ctlenum::testing
