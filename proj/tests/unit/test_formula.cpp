#include "doctest.h"

#include "ctlenum/error.hpp"
#include "ctlenum/formula.hpp"
#include "ctlenum/modelcheck.hpp"
#include "support.hpp"

using namespace ctlenum;
using ctlenum::testing::Family;
using ctlenum::testing::FormulaGen;

namespace {

Formula P(const char* text) { return parse_formula(text); }
Formula a(const char* n) { return Formula::atom(n); }

}  // namespace

TEST_CASE("parser builds the expected trees") {
  CHECK(P("AG (Error -> A[!Heat U !Start])") ==
        Formula::ag(Formula::disj(
            Formula::negation(a("Error")),
            Formula::au(Formula::negation(a("Heat")),
                        Formula::negation(a("Start"))))));
  CHECK(P("true") == Formula::top());
  CHECK(P("A[p U q] & E[p R q]") ==
        Formula::conj(Formula::au(a("p"), a("q")), Formula::er(a("p"), a("q"))));
}

TEST_CASE("precedence and associativity") {
  CHECK(P("a | b & c") == Formula::disj(a("a"), Formula::conj(a("b"), a("c"))));
  CHECK(P("a & b & c") == Formula::conj(Formula::conj(a("a"), a("b")), a("c")));
  CHECK(P("a -> b -> c") ==
        Formula::disj(Formula::negation(a("a")),
                      Formula::disj(Formula::negation(a("b")), a("c"))));
  CHECK(P("!a & b") == Formula::conj(Formula::negation(a("a")), a("b")));
  CHECK(P("AX a | b") == Formula::disj(Formula::ax(a("a")), a("b")));
  CHECK(P("x1^0 & x_t") == Formula::conj(a("x1^0"), a("x_t")));
}

TEST_CASE("parse errors carry a position") {
  for (const char* bad : {"", "A[p U q", "p &", "AG", "A[p X q]", "(p", "p q", "1p"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(P(bad), ParseError);
  }
  try {
    P("p &\n  )");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("render") {
  CHECK(render_formula(Formula::af(a("x"))) == "AF x");
  CHECK(render_formula(Formula::au(Formula::top(), a("x_t"))) == "A[true U x_t]");
  CHECK(render_formula(Formula::negation(Formula::top())) == "!true");
}

TEST_CASE("render/parse round trip on random formulas") {
  FormulaGen gen(11, {"p", "q", "r1"});
  for (int i = 0; i < 3000; ++i) {
    const Formula f = gen(Family::General, 6);
    CAPTURE(render_formula(f));
    REQUIRE(P(render_formula(f).c_str()) == f);
  }
}

TEST_CASE("fragment classification") {
  auto prof = classify_fragment(P("E[p U q] | EX r"));
  CHECK(prof.operators == std::set<Op>{Op::EU, Op::EX});
  CHECK(prof.connectives == std::set<Op>{Op::Or});
  CHECK(prof.has(FragmentTag::MonotoneE));
  CHECK(prof.has(FragmentTag::General));
  CHECK_FALSE(prof.has(FragmentTag::AfagChain));

  prof = classify_fragment(P("AF AG AF x"));
  CHECK(prof.operators == std::set<Op>{Op::AF, Op::AG});
  CHECK(prof.connectives.empty());
  CHECK(prof.has(FragmentTag::AfagChain));

  prof = classify_fragment(P("AG !Heat"));
  CHECK(prof.connectives == std::set<Op>{Op::Not});
  CHECK(prof.tags == std::set<FragmentTag>{FragmentTag::General});

  CHECK(classify_fragment(P("E[true U x] & EG false")).has(FragmentTag::MonotoneE));
  CHECK(classify_fragment(P("x")).has(FragmentTag::AfagChain));
  CHECK(classify_fragment(P("x")).has(FragmentTag::MonotoneE));
  CHECK_FALSE(classify_fragment(P("AF (x & y)")).has(FragmentTag::AfagChain));
}

TEST_CASE("fragment tags match a structural scan") {
  FormulaGen gen(5, {"p", "q"});
  std::function<bool(const Formula&)> monotone = [&](const Formula& f) {
    switch (f.op()) {
      case Op::True: case Op::False: case Op::Atom: return true;
      case Op::And: case Op::Or: case Op::EX: case Op::EF: case Op::EG:
      case Op::EU: case Op::ER:
        for (std::size_t i = 0; i < f.arity(); ++i) {
          if (!monotone(f.child(i))) return false;
        }
        return true;
      default: return false;
    }
  };
  for (int i = 0; i < 2000; ++i) {
    const Formula f = gen(i % 2 ? Family::General : Family::Monotone, 4);
    const auto prof = classify_fragment(f);
    CHECK(prof.has(FragmentTag::General));
    CHECK(prof.has(FragmentTag::MonotoneE) == monotone(f));
    CHECK(prof.has(FragmentTag::AfagChain) == as_afag_chain(f).has_value());
  }
}

TEST_CASE("dualize_step examples") {
  CHECK(dualize_step(P("EF x")) == P("E[true U x]"));
  CHECK(dualize_step(P("EX x")) == P("!AX !x"));
  CHECK(dualize_step(P("E[p R q]")) == P("!A[!p U !q]"));
  CHECK(dualize_step(P("AG x"), Equivalence::AgAsFalseAr) == P("A[false R x]"));
  CHECK_THROWS_AS(dualize_step(P("p & q")), NotApplicable);
  CHECK_THROWS_AS(dualize_step(P("EF x"), Equivalence::ExAsNotAxNot), NotApplicable);
}

TEST_CASE("every equivalence is sound on the 3-world family") {
  SmallModelOptions fam;
  fam.max_worlds = 3;
  fam.atoms = {"p", "q"};
  std::vector<KripkeModel> models;
  for_each_small_model(fam, [&](const KripkeModel& m) { models.push_back(m); });
  for (Equivalence e : all_equivalences()) {
    const Op src = equivalence_source(e);
    const Formula f = op_arity(src) == 1
                          ? Formula::unary(src, P("p & EX q"))
                          : Formula::binary(src, P("p"), P("q | AX p"));
    CAPTURE(render_formula(f));
    CHECK(check_equiv(f, dualize_step(f, e), models));
  }
}

TEST_CASE("afag_trim") {
  CHECK(afag_trim(P("AF AF x")) == TrimmedForm{TrimmedForm::Shape::AF, "x"});
  CHECK(afag_trim(P("AF AG AG AF x")) == TrimmedForm{TrimmedForm::Shape::AGAF, "x"});
  CHECK(afag_trim(P("AG x")) == TrimmedForm{TrimmedForm::Shape::AG, "x"});
  CHECK(afag_trim(P("AG AF AG y")) == TrimmedForm{TrimmedForm::Shape::AFAG, "y"});
  CHECK(render_formula(afag_trim(P("AF AG AG AF x")).to_formula()) == "AG AF x");
  CHECK_THROWS_AS(afag_trim(P("x")), NotAFAGChain);
  CHECK_THROWS_AS(afag_trim(P("EF x")), NotAFAGChain);
  CHECK_THROWS_AS(afag_trim(P("AF (x | y)")), NotAFAGChain);
}

TEST_CASE("afag trimming terminates and never grows the chain") {
  for (const Formula& f : ctlenum::testing::all_afag_chains("x", 8)) {
    auto chain = *as_afag_chain(f);
    const std::size_t start = chain.ops.size();
    std::size_t steps = 0, prev = start;
    while (afag_trim_step(chain)) {
      REQUIRE(chain.ops.size() <= prev);
      prev = chain.ops.size();
      REQUIRE(++steps <= start);
    }
    CHECK(chain.ops.size() <= 2);
  }
}

TEST_CASE("substitute_atoms") {
  std::map<Literal, Formula> images;
  for (const char* x : {"x1", "x2"}) {
    const std::string s = x;
    images.emplace(Literal{s, false}, P((std::string("AG (") + s + " -> " + s + "^1)").c_str()));
    images.emplace(Literal{s, true}, P((std::string("AG (") + s + " -> " + s + "^0)").c_str()));
  }
  CHECK(substitute_atoms(P("x1 & !x2"), images) ==
        P("AG (x1 -> x1^1) & AG (x2 -> x2^0)"));
  CHECK(substitute_atoms(P("!x1 | x2"), images) ==
        P("AG (x1 -> x1^0) | AG (x2 -> x2^1)"));
  CHECK(substitute_atoms(P("x"), {{Literal{"x", false}, P("x")}}) == P("x"));
  CHECK_THROWS_AS(substitute_atoms(P("x3"), images), UnmappedAtom);
  CHECK_THROWS_AS(substitute_atoms(P("!x3"), images), UnmappedAtom);
  CHECK_THROWS_AS(substitute_atoms(P("!(x1 & x2)"), images), NotNNF);
  CHECK_THROWS_AS(substitute_atoms(P("EX x1"), images), NotNNF);
}

TEST_CASE("structural equality, ordering and hashing") {
  const Formula f = P("A[p U EX q]"), g = P("A[p U EX q]"), h = P("A[p U EX r]");
  CHECK(f == g);
  CHECK(f.hash() == g.hash());
  CHECK(f != h);
  CHECK((f < h) != (h < f));
  CHECK(f.size() == 4);
  CHECK(f.depth() == 3);
  CHECK(atoms_of(P("p & AG (q | !p)")) == std::set<std::string>{"p", "q"});
}
