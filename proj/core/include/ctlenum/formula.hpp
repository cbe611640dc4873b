#pragma once

// CTL formulas: immutable syntax trees, the text grammar, fragment
// classification and the rewrites used by the tractable-fragment oracles.
//
// Grammar (lowest to highest precedence):
//   a -> b      right-associative, desugared to !a | b
//   a | b       left-associative
//   a & b       left-associative
//   !a  AX a  EX a  AF a  EF a  AG a  EG a
//   atom  true  false  ( a )  A[a U b]  E[a U b]  A[a R b]  E[a R b]

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ctlenum {

enum class Op : std::uint8_t {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  EX,
  AX,
  EF,
  AF,
  EG,
  AG,
  EU,
  AU,
  ER,
  AR,
};

std::string_view op_name(Op op);
std::size_t op_arity(Op op);
bool is_temporal(Op op);
bool is_connective(Op op);

/// Value handle to an immutable formula node. Copies share structure;
/// equality and hashing are structural.
class Formula {
 public:
  static Formula top();
  static Formula bottom();
  static Formula atom(std::string name);
  static Formula unary(Op op, Formula child);
  static Formula binary(Op op, Formula lhs, Formula rhs);

  static Formula negation(Formula f) { return unary(Op::Not, std::move(f)); }
  static Formula conj(Formula a, Formula b) {
    return binary(Op::And, std::move(a), std::move(b));
  }
  static Formula disj(Formula a, Formula b) {
    return binary(Op::Or, std::move(a), std::move(b));
  }
  static Formula ex(Formula f) { return unary(Op::EX, std::move(f)); }
  static Formula ax(Formula f) { return unary(Op::AX, std::move(f)); }
  static Formula ef(Formula f) { return unary(Op::EF, std::move(f)); }
  static Formula af(Formula f) { return unary(Op::AF, std::move(f)); }
  static Formula eg(Formula f) { return unary(Op::EG, std::move(f)); }
  static Formula ag(Formula f) { return unary(Op::AG, std::move(f)); }
  static Formula eu(Formula a, Formula b) {
    return binary(Op::EU, std::move(a), std::move(b));
  }
  static Formula au(Formula a, Formula b) {
    return binary(Op::AU, std::move(a), std::move(b));
  }
  static Formula er(Formula a, Formula b) {
    return binary(Op::ER, std::move(a), std::move(b));
  }
  static Formula ar(Formula a, Formula b) {
    return binary(Op::AR, std::move(a), std::move(b));
  }

  Op op() const;
  /// Atom name; empty for every other node kind.
  const std::string& name() const;
  std::size_t arity() const;
  /// Child 0 is the operand of a unary node and the left side of a binary one.
  const Formula& child(std::size_t i) const;
  const Formula& lhs() const { return child(0); }
  const Formula& rhs() const { return child(1); }

  /// Number of nodes in the tree (shared subtrees counted per occurrence).
  std::size_t size() const;
  std::size_t depth() const;
  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) {
    return !(a == b);
  }
  /// Total structural order, usable as a map key.
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

Formula parse_formula(std::string_view text);
std::string render_formula(const Formula& f);

/// Atom names occurring in the formula.
std::set<std::string> atoms_of(const Formula& f);

enum class FragmentTag : std::uint8_t { MonotoneE, AfagChain, General };

struct FragmentProfile {
  std::set<Op> operators;    // temporal operators
  std::set<Op> connectives;  // subset of {Not, And, Or}
  bool uses_constants = false;
  std::set<FragmentTag> tags;

  bool has(FragmentTag t) const { return tags.count(t) != 0; }
};

FragmentProfile classify_fragment(const Formula& f);

/// The equivalences between CTL operators that dualize_step can apply.
enum class Equivalence : std::uint8_t {
  ExAsNotAxNot,   // EX a == !AX !a
  AgAsNotEfNot,   // AG a == !EF !a
  EgAsNotAfNot,   // EG a == !AF !a
  EgAsFalseEr,    // EG a == E[false R a]
  AgAsFalseAr,    // AG a == A[false R a]
  EfAsTrueEu,     // EF a == E[true U a]
  AfAsTrueAu,     // AF a == A[true U a]
  ErAsNotAuNot,   // E[a R b] == !A[!a U !b]
  ArAsNotEuNot,   // A[a R b] == !E[!a U !b]
};

std::vector<Equivalence> all_equivalences();
Op equivalence_source(Equivalence e);

/// Rewrites the root with the given equivalence. Throws NotApplicable when
/// the root operator does not match its left-hand side.
Formula dualize_step(const Formula& f, Equivalence e);
/// Rewrites the root with the first listed equivalence whose left-hand side
/// matches. Throws NotApplicable if there is none.
Formula dualize_step(const Formula& f);

struct TrimmedForm {
  enum class Shape : std::uint8_t { AF, AG, AFAG, AGAF };
  Shape shape;
  std::string atom;

  Formula to_formula() const;
  friend bool operator==(const TrimmedForm&, const TrimmedForm&) = default;
};

std::string_view shape_name(TrimmedForm::Shape s);

/// Outermost-first list of AF/AG operators over a single atom.
struct AfagChain {
  std::vector<Op> ops;
  std::string atom;
};

/// Decomposes an AF/AG chain; nullopt if the formula is not one.
std::optional<AfagChain> as_afag_chain(const Formula& f);

/// One innermost-first rewrite step on the chain; false at a fixed point.
bool afag_trim_step(AfagChain& chain);

/// Trims an AF/AG chain with at least one operator to one of the four shapes.
TrimmedForm afag_trim(const Formula& f);

/// A literal key for substitute_atoms: the atom and whether it is negated.
struct Literal {
  std::string atom;
  bool negated = false;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Replaces every literal of a propositional NNF formula by its image.
Formula substitute_atoms(const Formula& f,
                         const std::map<Literal, Formula>& images);

bool is_propositional(const Formula& f);
bool is_nnf(const Formula& f);

}  // namespace ctlenum
