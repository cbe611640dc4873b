#include "doctest.h"

#include "ctlenum/enumerate.hpp"
#include "ctlenum/error.hpp"
#include "ctlenum/modelcheck.hpp"
#include "ctlenum/reductions.hpp"
#include "support.hpp"

using namespace ctlenum;
using namespace ctlenum::testing;

namespace {

HampathInstance fig3() { return read_digraph_file(data_path("fig3_graph.json")); }

HampathInstance k2() { return {{"s", "t"}, {{"s", "t"}}, "s", "t"}; }

std::set<std::string> world_ids(const KripkeModel& m) {
  std::set<std::string> out;
  for (const auto& w : m.worlds()) out.insert(w.id);
  return out;
}

}  // namespace

TEST_CASE("sat_to_ag builds the two-variable model") {
  const auto inst = sat_to_ag(parse_prop_formula("(x1 & !x2) | (!x1 & x2)"));
  const KripkeModel& m = inst.model;
  CHECK(world_ids(m) == std::set<std::string>{"w0", "w1^0", "w1^1", "w2^0", "w2^1"});
  CHECK(m.num_edges() == 8);
  CHECK(m.world(*m.find_world("w1^1")).labels == std::set<std::string>{"x1", "x1^1"});
  CHECK(m.find_edge(*m.find_world("w1^0"), *m.find_world("w2^1")));
  CHECK(m.find_edge(*m.find_world("w2^1"), *m.find_world("w2^1")));
  CHECK(inst.formula ==
        parse_formula("AG (!x1 | x1^1) & AG (!x2 | x2^0) | AG (!x1 | x1^0) & AG (!x2 | x2^1)"));
  CHECK(inst.provenance.construction == "sat-ag");
  CHECK(inst.provenance.digest.size() == 16);
  CHECK(inst.provenance.to_json().find("fnv1a64:") != std::string::npos);
}

TEST_CASE("sat_to_ag edge cases") {
  const auto one = sat_to_ag(parse_prop_formula("x1"));
  CHECK(one.model.num_worlds() == 3);
  CHECK(one.model.num_edges() == 4);
  CHECK(one.formula == parse_formula("AG (!x1 | x1^1)"));
  CHECK_FALSE(exists_submodel(sat_to_ag(parse_prop_formula("x1 & !x1")).model,
                              sat_to_ag(parse_prop_formula("x1 & !x1")).formula));
  CHECK_THROWS_AS(sat_to_ag(parse_prop_formula("!(x1 & x2)")), NotNNF);
  CHECK_THROWS_AS(parse_prop_formula("EX x1"), PreconditionError);

  const auto rel = sat_to_ag(parse_prop_formula("x1 | !x2"), SatEncoding::Relabel);
  CHECK(rel.model.world(*rel.model.find_world("w0")).labels ==
        std::set<std::string>{"notx1", "notx2"});
  CHECK(rel.model.world(*rel.model.find_world("w2^0")).labels ==
        std::set<std::string>{"x2", "x2^0", "notx1"});
  CHECK_FALSE(classify_fragment(rel.formula).connectives.count(Op::Not));
}

TEST_CASE("natural variable order") {
  CHECK(prop_variables(parse_prop_formula("x10 | x2 & x1")) ==
        std::vector<std::string>{"x1", "x2", "x10"});
}

TEST_CASE("assignment_to_submodel is sound for every assignment") {
  for (const char* text : {"(x1 & !x2) | (!x1 & x2)", "x1 & (x2 | !x3)", "!x1 & !x2 & x3",
                           "x1 | x2 | x3", "x1 & !x1"}) {
    const auto f = parse_prop_formula(text);
    const auto inst = sat_to_ag(f);
    const auto vars = prop_variables(f);
    for (unsigned bits = 0; bits < (1u << vars.size()); ++bits) {
      std::map<std::string, bool> a;
      for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = bits >> i & 1;
      const Submodel s = assignment_to_submodel(f, a, inst.model);
      REQUIRE(is_valid(inst.model, s, true));
      REQUIRE(check(inst.model, s, inst.formula) == evaluate_prop(f, a));
    }
  }
  const auto f = parse_prop_formula("x1 & x2");
  CHECK_THROWS_AS(assignment_to_submodel(f, {{"x1", true}}, sat_to_ag(f).model),
                  PartialAssignment);
  CHECK_THROWS_AS(evaluate_prop(f, {{"x1", true}}), PartialAssignment);
}

TEST_CASE("hampath_to_af and ax on the four-vertex graph") {
  const auto af = hampath_to_af(fig3());
  CHECK(world_ids(af.model) == std::set<std::string>{"w_s", "w_a", "w_b", "w_t", "w_hat"});
  CHECK_FALSE(af.model.find_edge(*af.model.find_world("w_t"), *af.model.find_world("w_a")));
  CHECK(af.model.find_edge(*af.model.find_world("w_t"), *af.model.find_world("w_hat")));
  CHECK(af.formula == parse_formula("AF x_s & AF x_a & AF x_b & AF x_t"));
  CHECK(exists_submodel(af.model, af.formula));

  const auto ax = hampath_to_ax(fig3());
  CHECK(ax.formula == parse_formula("AX AX AX x_t"));
  CHECK(exists_submodel(ax.model, ax.formula));

  CHECK(hampath_to_ax(k2()).formula == parse_formula("AX x_t"));
  CHECK(exists_submodel(hampath_to_af(k2()).model, hampath_to_af(k2()).formula));

  const HampathInstance unreachable{{"s", "a", "t"}, {{"s", "a"}, {"a", "s"}}, "s", "t"};
  const auto u = hampath_to_af(unreachable);
  CHECK_FALSE(exists_submodel(u.model, u.formula));

  // s -> t and s -> a -> nothing useful: no path of length two ends in t
  const HampathInstance short_only{{"s", "a", "t"}, {{"s", "t"}, {"t", "a"}}, "s", "t"};
  const auto ax3 = hampath_to_ax(short_only);
  CHECK_FALSE(exists_submodel(ax3.model, ax3.formula));
}

TEST_CASE("hampath_to_au and ar") {
  const auto au = hampath_to_au(fig3());
  CHECK(au.model.num_worlds() == 4 * 4 + 2 * 4);
  CHECK(au.formula ==
        parse_formula("A[A[A[A[A[true U x_t] U x1] U x2] U x3] U x4]"));
  CHECK(au.model.world(*au.model.find_world("w_hat_t")).labels ==
        std::set<std::string>{"x_t"});
  CHECK(au.model.world(*au.model.find_world("w_a_3")).labels ==
        std::set<std::string>{"x3"});

  const auto ar = hampath_to_ar(fig3());
  CHECK(ar.model.num_worlds() == 4 * 4 + 3 * 4);
  CHECK(ar.model.world(*ar.model.find_world("w_tilde_b")).labels ==
        std::set<std::string>{"y", "x1", "x2", "x3", "x4"});
  CHECK(classify_fragment(ar.formula).operators == std::set<Op>{Op::AR});
  CHECK(classify_fragment(au.formula).operators == std::set<Op>{Op::AU});

  for (auto make : {hampath_to_au, hampath_to_ar}) {
    const auto inst = make(k2());
    CHECK(validate_model(inst.model).ok());
    CHECK(exists_submodel(inst.model, inst.formula));
  }
}

TEST_CASE("hampath_to_ar accepts an early s-t path; the guarded variant does not") {
  // s -> t only, with a third vertex left unvisited
  const HampathInstance early{{"s", "t", "a"}, {{"s", "t"}}, "s", "t"};
  CHECK_FALSE(brute_hampath(early));
  const auto ar = hampath_to_ar(early);
  CHECK(exists_submodel(ar.model, ar.formula));
  const auto guarded = hampath_to_ar_guarded(early);
  CHECK_FALSE(exists_submodel(guarded.model, guarded.formula));

  const auto g = hampath_to_ar_guarded(fig3());
  CHECK(g.model.num_worlds() == 4 * 4 + 3 * 4 + 1);
  CHECK(g.model.world(*g.model.find_world("w_hat_t")).labels ==
        std::set<std::string>{"x_t", "y", "z"});
  CHECK(g.model.world(*g.model.find_world("w_sink")).labels.empty());
  CHECK(g.provenance.construction == "hampath-ar-guarded");
  CHECK(exists_submodel(g.model, g.formula));
  CHECK(exists_submodel(hampath_to_ar_guarded(k2()).model,
                        hampath_to_ar_guarded(k2()).formula));
}

TEST_CASE("hampath inputs are validated") {
  CHECK_THROWS_AS(hampath_to_af({{"s"}, {}, "s", "s"}), ModelError);
  CHECK_THROWS_AS(hampath_to_af({{"s", "t"}, {{"s", "q"}}, "s", "t"}), ModelError);
  CHECK_THROWS_AS(hampath_to_af({{"s", "s", "t"}, {}, "s", "t"}), ModelError);
  CHECK_THROWS_AS(parse_digraph_json("{\"vertices\":[]}"), ModelError);
  const auto h = fig3();
  CHECK(parse_digraph_json(digraph_to_json(h)).edges == h.edges);
}

TEST_CASE("brute solvers") {
  const auto a = brute_sat(parse_prop_formula("(x1 & !x2) | (!x1 & x2)"));
  REQUIRE(a);
  CHECK((*a).at("x1") != (*a).at("x2"));
  CHECK_FALSE(brute_sat(parse_prop_formula("x1 & !x1")));
  const auto t = brute_sat(parse_prop_formula("true"));
  REQUIRE(t);
  CHECK(t->empty());

  CHECK(brute_hampath(fig3()) == std::vector<std::string>{"s", "a", "b", "t"});
  CHECK_FALSE(brute_hampath({{"s", "t"}, {{"t", "s"}}, "s", "t"}));
  CHECK_THROWS_AS(brute_hampath({{"s"}, {}, "s", "s"}), ModelError);

  std::string big = "x1";
  for (int i = 2; i <= 22; ++i) big += " & x" + std::to_string(i);
  CHECK_THROWS_AS(brute_sat(parse_prop_formula(big)), CapExceeded);
}
