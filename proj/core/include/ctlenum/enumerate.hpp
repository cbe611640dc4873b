#pragma once

// Duplicate-free enumeration of satisfying submodels.
//
// The engine walks the ground set in order and decides each element
// Keep (first) or Delete, asking an extension oracle whether the current
// partial decision can still be completed to a solution. Solutions are
// emitted at full assignments only, so each submodel is reached by exactly
// one path.

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctlenum/formula.hpp"
#include "ctlenum/kripke.hpp"

namespace ctlenum {

enum class OracleKind : std::uint8_t { Auto, Exhaustive, Monotone, AFAG };

std::string_view oracle_name(OracleKind k);
/// Accepts "auto", "exhaustive", "monotone", "afag".
std::optional<OracleKind> parse_oracle_kind(std::string_view text);
/// Auto becomes Monotone, AFAG or Exhaustive by fragment; other kinds are
/// returned unchanged.
OracleKind resolve_oracle(OracleKind kind, const FragmentProfile& profile);

/// An extension question for the decision's frontier prefix.
struct ExtensionQuery {
  const KripkeModel& model;
  const Formula& formula;
  const PartialDecision& decision;
  bool connected = true;
};

/// Decides whether a partial decision over ground_set(model) extends to a
/// valid (connected if requested) submodel satisfying the bound formula.
/// Oracles may cache per-model data and are not thread-safe.
class ExtensionOracle {
 public:
  virtual ~ExtensionOracle() = default;
  virtual OracleKind kind() const = 0;
  virtual bool extend(const PartialDecision& decision) = 0;
  /// Queries answered by exhaustive search although a fast path was wanted.
  virtual std::size_t fallback_queries() const { return 0; }
};

/// Throws FragmentMismatch if a fragment oracle is requested for a formula
/// outside its fragment.
std::unique_ptr<ExtensionOracle> make_oracle(OracleKind kind,
                                             const KripkeModel& model,
                                             const Formula& formula,
                                             bool connected);

bool extend_exhaustive(const ExtensionQuery& q);
bool extend_monotone(const ExtensionQuery& q);
bool extend_afag(const ExtensionQuery& q);

// ---------------------------------------------------------------------------
// AF/AG chains

/// Whether some valid connected submodel of `sub` satisfies the form.
bool exists_afag(const KripkeModel& model, const Submodel& sub,
                 const TrimmedForm& form);
bool exists_afag(const KripkeModel& model, const TrimmedForm& form);

struct Lasso {
  std::vector<std::string> stem;
  std::vector<std::string> cycle;
  friend bool operator==(const Lasso&, const Lasso&) = default;
};

/// A single-path submodel of `sub` satisfying the form. Throws NoWitness
/// when exists_afag is false.
Lasso extract_lasso_witness(const KripkeModel& model, const Submodel& sub,
                            const TrimmedForm& form);
Lasso extract_lasso_witness(const KripkeModel& model, const TrimmedForm& form);

/// The worlds and consecutive-pair edges of a lasso. Throws ModelError if a
/// pair is not an edge.
Submodel lasso_submodel(const KripkeModel& model, const Lasso& lasso);

// ---------------------------------------------------------------------------
// Enumeration

struct EnumerationOptions {
  OracleKind oracle = OracleKind::Auto;
  bool connected = true;
  std::optional<std::size_t> limit;
};

struct EnumerationStats {
  OracleKind oracle = OracleKind::Auto;  // resolved kind
  std::size_t solutions = 0;
  /// solutions + 1 entries: the time before each emission and after the last.
  std::vector<std::int64_t> delays_ns;
  /// Oracle calls in the same intervals as delays_ns.
  std::vector<std::size_t> oracle_calls;
  std::size_t fallback_queries = 0;

  std::string to_json() const;
};

/// Streams each solution to `emit`; returning false from `emit` stops the
/// search. Time spent inside `emit` is not counted as delay.
EnumerationStats enumerate_submodels(
    const KripkeModel& model, const Formula& formula,
    const EnumerationOptions& options,
    const std::function<bool(const Submodel&)>& emit);

std::vector<Submodel> enumerate_all(const KripkeModel& model,
                                    const Formula& formula,
                                    const EnumerationOptions& options = {},
                                    EnumerationStats* stats = nullptr);

/// All 2^|ground set| candidates filtered by validity and model checking.
/// Throws CapExceeded if the ground set is larger than `cap`.
std::vector<Submodel> brute_force_enumerate(const KripkeModel& model,
                                            const Formula& formula,
                                            bool connected,
                                            std::size_t cap = 20);

/// The Auto oracle on the empty decision.
bool exists_submodel(const KripkeModel& model, const Formula& formula,
                     bool connected = true);

}  // namespace ctlenum
