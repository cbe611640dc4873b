#include "ctlenum/formula.hpp"

#include <algorithm>

#include "ctlenum/error.hpp"

namespace ctlenum {

struct Formula::Node {
  Op op;
  std::string name;
  std::vector<Formula> kids;
  std::size_t hash;
  std::size_t size;
  std::size_t depth;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::string_view op_name(Op op) {
  switch (op) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Atom: return "atom";
    case Op::Not: return "!";
    case Op::And: return "&";
    case Op::Or: return "|";
    case Op::EX: return "EX";
    case Op::AX: return "AX";
    case Op::EF: return "EF";
    case Op::AF: return "AF";
    case Op::EG: return "EG";
    case Op::AG: return "AG";
    case Op::EU: return "EU";
    case Op::AU: return "AU";
    case Op::ER: return "ER";
    case Op::AR: return "AR";
  }
  return "?";
}

std::size_t op_arity(Op op) {
  switch (op) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return 0;
    case Op::And:
    case Op::Or:
    case Op::EU:
    case Op::AU:
    case Op::ER:
    case Op::AR:
      return 2;
    default:
      return 1;
  }
}

bool is_temporal(Op op) {
  switch (op) {
    case Op::EX: case Op::AX: case Op::EF: case Op::AF: case Op::EG:
    case Op::AG: case Op::EU: case Op::AU: case Op::ER: case Op::AR:
      return true;
    default:
      return false;
  }
}

bool is_connective(Op op) {
  return op == Op::Not || op == Op::And || op == Op::Or;
}

Formula Formula::top() {
  static const Formula t(std::make_shared<const Node>(
      Node{Op::True, {}, {}, mix(1, static_cast<std::size_t>(Op::True)), 1, 1}));
  return t;
}

Formula Formula::bottom() {
  static const Formula f(std::make_shared<const Node>(Node{
      Op::False, {}, {}, mix(1, static_cast<std::size_t>(Op::False)), 1, 1}));
  return f;
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw PreconditionError("atom name must be non-empty");
  std::size_t h = mix(std::hash<std::string>{}(name),
                      static_cast<std::size_t>(Op::Atom));
  return Formula(std::make_shared<const Node>(
      Node{Op::Atom, std::move(name), {}, h, 1, 1}));
}

Formula Formula::unary(Op op, Formula child) {
  if (op_arity(op) != 1) {
    throw PreconditionError(std::string(op_name(op)) + " is not unary");
  }
  std::size_t h = mix(mix(17, static_cast<std::size_t>(op)), child.hash());
  std::size_t size = child.size() + 1;
  std::size_t depth = child.depth() + 1;
  return Formula(std::make_shared<const Node>(
      Node{op, {}, {std::move(child)}, h, size, depth}));
}

Formula Formula::binary(Op op, Formula lhs, Formula rhs) {
  if (op_arity(op) != 2) {
    throw PreconditionError(std::string(op_name(op)) + " is not binary");
  }
  std::size_t h = mix(mix(mix(31, static_cast<std::size_t>(op)), lhs.hash()),
                      rhs.hash());
  std::size_t size = lhs.size() + rhs.size() + 1;
  std::size_t depth = std::max(lhs.depth(), rhs.depth()) + 1;
  return Formula(std::make_shared<const Node>(
      Node{op, {}, {std::move(lhs), std::move(rhs)}, h, size, depth}));
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
std::size_t Formula::arity() const { return node_->kids.size(); }
const Formula& Formula::child(std::size_t i) const { return node_->kids.at(i); }
std::size_t Formula::size() const { return node_->size; }
std::size_t Formula::depth() const { return node_->depth; }
std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.op() != b.op() || a.size() != b.size() ||
      a.name() != b.name()) {
    return false;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a.child(i) != b.child(i)) return false;
  }
  return true;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  if (a.op() != b.op()) return a.op() < b.op();
  if (a.name() != b.name()) return a.name() < b.name();
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a.child(i) < b.child(i)) return true;
    if (b.child(i) < a.child(i)) return false;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Binding strength; a child rendered below `min_level` gets parentheses.
enum Level { kImpl = 0, kDisj = 1, kConj = 2, kUnary = 3, kPrimary = 4 };

int level_of(Op op) {
  switch (op) {
    case Op::Or: return kDisj;
    case Op::And: return kConj;
    case Op::Not: case Op::EX: case Op::AX: case Op::EF: case Op::AF:
    case Op::EG: case Op::AG:
      return kUnary;
    default:
      return kPrimary;
  }
}

void render_into(const Formula& f, int min_level, std::string& out) {
  const bool wrap = level_of(f.op()) < min_level;
  if (wrap) out += '(';
  switch (f.op()) {
    case Op::True: out += "true"; break;
    case Op::False: out += "false"; break;
    case Op::Atom: out += f.name(); break;
    case Op::Not:
      out += '!';
      render_into(f.child(0), kUnary, out);
      break;
    case Op::And:
      render_into(f.lhs(), kConj, out);
      out += " & ";
      render_into(f.rhs(), kUnary, out);
      break;
    case Op::Or:
      render_into(f.lhs(), kDisj, out);
      out += " | ";
      render_into(f.rhs(), kConj, out);
      break;
    case Op::EX: case Op::AX: case Op::EF: case Op::AF: case Op::EG:
    case Op::AG:
      out += op_name(f.op());
      out += ' ';
      render_into(f.child(0), kUnary, out);
      break;
    case Op::EU: case Op::AU: case Op::ER: case Op::AR: {
      const bool universal = f.op() == Op::AU || f.op() == Op::AR;
      const bool until = f.op() == Op::EU || f.op() == Op::AU;
      out += universal ? "A[" : "E[";
      render_into(f.lhs(), kImpl, out);
      out += until ? " U " : " R ";
      render_into(f.rhs(), kImpl, out);
      out += ']';
      break;
    }
  }
  if (wrap) out += ')';
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.op() == Op::Atom) {
    out.insert(f.name());
    return;
  }
  for (std::size_t i = 0; i < f.arity(); ++i) collect_atoms(f.child(i), out);
}

}  // namespace

std::string render_formula(const Formula& f) {
  std::string out;
  render_into(f, kImpl, out);
  return out;
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Fragments

namespace {

void scan(const Formula& f, FragmentProfile& p) {
  const Op op = f.op();
  if (op == Op::True || op == Op::False) p.uses_constants = true;
  if (is_temporal(op)) p.operators.insert(op);
  if (is_connective(op)) p.connectives.insert(op);
  for (std::size_t i = 0; i < f.arity(); ++i) scan(f.child(i), p);
}

}  // namespace

FragmentProfile classify_fragment(const Formula& f) {
  FragmentProfile p;
  scan(f, p);
  static const std::set<Op> kExistential = {Op::EX, Op::EF, Op::EG, Op::EU,
                                            Op::ER};
  const bool existential_ops =
      std::includes(kExistential.begin(), kExistential.end(),
                    p.operators.begin(), p.operators.end());
  if (existential_ops && p.connectives.count(Op::Not) == 0) {
    p.tags.insert(FragmentTag::MonotoneE);
  }
  if (as_afag_chain(f)) p.tags.insert(FragmentTag::AfagChain);
  p.tags.insert(FragmentTag::General);
  return p;
}

// ---------------------------------------------------------------------------
// Dualities

std::vector<Equivalence> all_equivalences() {
  return {Equivalence::ExAsNotAxNot, Equivalence::AgAsNotEfNot,
          Equivalence::EgAsNotAfNot, Equivalence::EgAsFalseEr,
          Equivalence::AgAsFalseAr,  Equivalence::EfAsTrueEu,
          Equivalence::AfAsTrueAu,   Equivalence::ErAsNotAuNot,
          Equivalence::ArAsNotEuNot};
}

Op equivalence_source(Equivalence e) {
  switch (e) {
    case Equivalence::ExAsNotAxNot: return Op::EX;
    case Equivalence::AgAsNotEfNot: return Op::AG;
    case Equivalence::EgAsNotAfNot: return Op::EG;
    case Equivalence::EgAsFalseEr: return Op::EG;
    case Equivalence::AgAsFalseAr: return Op::AG;
    case Equivalence::EfAsTrueEu: return Op::EF;
    case Equivalence::AfAsTrueAu: return Op::AF;
    case Equivalence::ErAsNotAuNot: return Op::ER;
    case Equivalence::ArAsNotEuNot: return Op::AR;
  }
  return Op::True;
}

Formula dualize_step(const Formula& f, Equivalence e) {
  if (f.op() != equivalence_source(e)) {
    throw NotApplicable("equivalence does not apply to root operator " +
                        std::string(op_name(f.op())));
  }
  using F = Formula;
  switch (e) {
    case Equivalence::ExAsNotAxNot:
      return F::negation(F::ax(F::negation(f.child(0))));
    case Equivalence::AgAsNotEfNot:
      return F::negation(F::ef(F::negation(f.child(0))));
    case Equivalence::EgAsNotAfNot:
      return F::negation(F::af(F::negation(f.child(0))));
    case Equivalence::EgAsFalseEr:
      return F::er(F::bottom(), f.child(0));
    case Equivalence::AgAsFalseAr:
      return F::ar(F::bottom(), f.child(0));
    case Equivalence::EfAsTrueEu:
      return F::eu(F::top(), f.child(0));
    case Equivalence::AfAsTrueAu:
      return F::au(F::top(), f.child(0));
    case Equivalence::ErAsNotAuNot:
      return F::negation(F::au(F::negation(f.lhs()), F::negation(f.rhs())));
    case Equivalence::ArAsNotEuNot:
      return F::negation(F::eu(F::negation(f.lhs()), F::negation(f.rhs())));
  }
  throw NotApplicable("unknown equivalence");
}

Formula dualize_step(const Formula& f) {
  for (Equivalence e : all_equivalences()) {
    if (equivalence_source(e) == f.op()) return dualize_step(f, e);
  }
  throw NotApplicable("no equivalence applies to root operator " +
                      std::string(op_name(f.op())));
}

// ---------------------------------------------------------------------------
// AF/AG chains

std::string_view shape_name(TrimmedForm::Shape s) {
  switch (s) {
    case TrimmedForm::Shape::AF: return "AF";
    case TrimmedForm::Shape::AG: return "AG";
    case TrimmedForm::Shape::AFAG: return "AF AG";
    case TrimmedForm::Shape::AGAF: return "AG AF";
  }
  return "?";
}

Formula TrimmedForm::to_formula() const {
  Formula x = Formula::atom(atom);
  switch (shape) {
    case Shape::AF: return Formula::af(x);
    case Shape::AG: return Formula::ag(x);
    case Shape::AFAG: return Formula::af(Formula::ag(x));
    case Shape::AGAF: return Formula::ag(Formula::af(x));
  }
  return x;
}

std::optional<AfagChain> as_afag_chain(const Formula& f) {
  AfagChain chain;
  const Formula* cur = &f;
  while (cur->op() == Op::AF || cur->op() == Op::AG) {
    chain.ops.push_back(cur->op());
    cur = &cur->child(0);
  }
  if (cur->op() != Op::Atom) return std::nullopt;
  chain.atom = cur->name();
  return chain;
}

bool afag_trim_step(AfagChain& chain) {
  auto& ops = chain.ops;
  // Scan windows from the innermost operator outwards; every rule drops the
  // outermost operator of its window.
  for (std::size_t end = ops.size(); end-- > 1;) {
    if (ops[end - 1] == ops[end]) {
      ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(end - 1));
      return true;
    }
    if (end >= 2 && ops[end - 2] == ops[end]) {
      // AG AF AG -> AF AG and AF AG AF -> AG AF
      ops.erase(ops.begin() + static_cast<std::ptrdiff_t>(end - 2));
      return true;
    }
  }
  return false;
}

TrimmedForm afag_trim(const Formula& f) {
  auto chain = as_afag_chain(f);
  if (!chain || chain->ops.empty()) {
    throw NotAFAGChain("not an AF/AG chain with at least one operator: " +
                       render_formula(f));
  }
  while (afag_trim_step(*chain)) {
  }
  const auto& ops = chain->ops;
  TrimmedForm out{TrimmedForm::Shape::AF, chain->atom};
  if (ops.size() == 1) {
    out.shape = ops[0] == Op::AF ? TrimmedForm::Shape::AF
                                 : TrimmedForm::Shape::AG;
  } else {
    out.shape = ops[0] == Op::AF ? TrimmedForm::Shape::AFAG
                                 : TrimmedForm::Shape::AGAF;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Propositional helpers

bool is_propositional(const Formula& f) {
  if (is_temporal(f.op())) return false;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (!is_propositional(f.child(i))) return false;
  }
  return true;
}

bool is_nnf(const Formula& f) {
  if (f.op() == Op::Not) return f.child(0).op() == Op::Atom;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (!is_nnf(f.child(i))) return false;
  }
  return true;
}

namespace {

Formula substitute_rec(const Formula& f,
                       const std::map<Literal, Formula>& images) {
  auto lookup = [&](const std::string& name, bool negated) {
    auto it = images.find(Literal{name, negated});
    if (it == images.end()) {
      throw UnmappedAtom("no image for literal " +
                         std::string(negated ? "!" : "") + name);
    }
    return it->second;
  };
  switch (f.op()) {
    case Op::True:
    case Op::False:
      return f;
    case Op::Atom:
      return lookup(f.name(), false);
    case Op::Not:
      return lookup(f.child(0).name(), true);
    case Op::And:
    case Op::Or:
      return Formula::binary(f.op(), substitute_rec(f.lhs(), images),
                             substitute_rec(f.rhs(), images));
    default:
      throw NotNNF("temporal operator in propositional formula");
  }
}

}  // namespace

Formula substitute_atoms(const Formula& f,
                         const std::map<Literal, Formula>& images) {
  if (!is_propositional(f) || !is_nnf(f)) {
    throw NotNNF("substitution requires a propositional formula in NNF: " +
                 render_formula(f));
  }
  return substitute_rec(f, images);
}

}  // namespace ctlenum
