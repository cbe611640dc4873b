#pragma once

// Generators for the SAT and HAMPATH hardness constructions, together with
// brute-force solvers used to validate them on small instances.
//
// Naming scheme of generated worlds and labels:
//   sat_to_ag      worlds w0 and w<i>^<k>, labels <atom> and <atom>^<k>,
//                  complement labels not<atom> in the relabel encoding
//   hampath_to_af  worlds w_<v> and w_hat, labels x_<v>
//   hampath_to_au  worlds w_<v>, w_hat_<v>, w_<v>_<i>, labels x<i> and x_t
//   hampath_to_ar  as above plus w_tilde_<v>, labels x<i>, y and z
//   hampath_to_ar_guarded  as hampath_to_ar plus w_sink and label x_t

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctlenum/formula.hpp"
#include "ctlenum/kripke.hpp"

namespace ctlenum {

/// Propositional formulas share the CTL syntax tree; they contain no
/// temporal operators. Variables are ordered by natural (digit-aware) sort.
using PropFormula = Formula;

/// Throws ParseError, or PreconditionError for temporal operators.
PropFormula parse_prop_formula(std::string_view text);
std::vector<std::string> prop_variables(const PropFormula& f);
/// Throws PartialAssignment if a variable is unassigned.
bool evaluate_prop(const PropFormula& f, const std::map<std::string, bool>& a);

struct HampathInstance {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string source;
  std::string target;
};

/// Throws ModelError for duplicates, unknown endpoints, s = t or missing s/t.
void validate_hampath(const HampathInstance& h);
HampathInstance parse_digraph_json(std::string_view text);
HampathInstance read_digraph_file(const std::string& path);
std::string digraph_to_json(const HampathInstance& h);

struct Provenance {
  std::string construction;  // "sat-ag", "hampath-af", ...
  std::string source;        // canonical text of the source instance
  std::string digest;        // FNV-1a 64 of `source`, hex

  std::string to_json() const;
};

struct ReductionInstance {
  KripkeModel model;
  Formula formula;
  Provenance provenance;
};

enum class SatEncoding : std::uint8_t { Negation, Relabel };

/// Throws NotNNF, or PreconditionError for formulas without variables.
ReductionInstance sat_to_ag(const PropFormula& f,
                            SatEncoding encoding = SatEncoding::Negation);
ReductionInstance hampath_to_af(const HampathInstance& h);
ReductionInstance hampath_to_ax(const HampathInstance& h);
ReductionInstance hampath_to_au(const HampathInstance& h);
ReductionInstance hampath_to_ar(const HampathInstance& h);
/// hampath_to_ar accepts any s-t path that reaches the target early, since
/// the target's hat world loops on z and satisfies every `phi AR z`
/// vacuously. This variant routes that world and all dead ends into an
/// unlabeled sink and ends the chain in x_t, which makes it exact.
ReductionInstance hampath_to_ar_guarded(const HampathInstance& h);

/// Throws CapExceeded above `cap` variables.
std::optional<std::map<std::string, bool>> brute_sat(const PropFormula& f,
                                                     std::size_t cap = 20);
/// Throws CapExceeded above `cap` vertices.
std::optional<std::vector<std::string>> brute_hampath(const HampathInstance& h,
                                                      std::size_t cap = 10);

/// The submodel of sat_to_ag(f).model keeping w<i>^<a(x_i)> on every level.
Submodel assignment_to_submodel(const PropFormula& f,
                                const std::map<std::string, bool>& assignment,
                                const KripkeModel& sat_model);

}  // namespace ctlenum
