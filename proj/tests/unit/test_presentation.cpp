#include "aop/cactus.hpp"
#include "aop/error.hpp"
#include "aop/presentation.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "term_corpus.hpp"

using namespace aop;

namespace {

GeneratorCollection one_swap() {
  GeneratorCollection g;
  g.add({"s", 2, Perm({2, 1})});
  return g;
}

}  // namespace

TEST_CASE("term: parse and format roundtrip") {
  for (const char* text : {"gen(s)", "id(0)", "mul(gen(s),inv(gen(s)))", "beta()", "beta(id(1),gen(s),id(0))",
                           "delta(gen(s);[2,1])", "delta(id(0);[])"}) {
    CAPTURE(text);
    CHECK(format_term(parse_term(text)) == text);
  }
  CHECK(format_term(parse_term("  mul( gen(s) , id(2) ) ")) == "mul(gen(s),id(2))");
  for (const char* bad : {"", "gen", "gen(s", "foo(s)", "id(-1)", "delta(gen(s);2)", "mul(gen(s))", "gen(s) x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_term(bad), InputError);
  }
}

TEST_CASE("term: arity rules") {
  const auto g = one_swap();
  CHECK(term_arity(parse_term("beta(gen(s),id(3))"), g) == 5);
  CHECK(term_arity(parse_term("delta(gen(s);[0,4])"), g) == 4);
  CHECK_THROWS_AS(term_arity(parse_term("mul(gen(s),id(3))"), g), InputError);
  CHECK_THROWS_AS(term_arity(parse_term("delta(gen(s);[1])"), g), InputError);
  CHECK_THROWS_AS(term_arity(parse_term("gen(t)"), g), InputError);
}

TEST_CASE("term_pi") {
  const auto g = one_swap();
  CHECK(term_pi(parse_term("id(3)"), g) == Perm::identity(3));
  CHECK(term_pi(parse_term("mul(gen(s),gen(s))"), g) == Perm::identity(2));
  CHECK(term_pi(parse_term("delta(gen(s);[2,1])"), g) == Perm({2, 3, 1}));
  CHECK(term_pi(parse_term("delta(gen(s);[2,1])"), g) .images() == oracle::block_perm({2, 1}, {2, 1}));
  CHECK(term_pi(parse_term("beta(gen(s),gen(s))"), g) == Perm({2, 1, 4, 3}));
}

TEST_CASE("eval_term") {
  const auto g = one_swap();
  const auto cactus = make_operad("cactus");
  const auto sym = make_symmetric();
  const auto ic = parse_interpretation({{"s", "s(1,2)"}}, g, *cactus);
  const auto d = eval_term(parse_term("delta(gen(s);[2,1])"), g, ic, *cactus);
  CHECK(cactus->same(d, cactus->parse("s(1,3) s(1,2)", 3)));
  CHECK(cactus->same(eval_term(parse_term("id(3)"), g, ic, *cactus), cactus->identity(3)));
  const auto is = parse_interpretation({{"s", "[2,1]"}}, g, *sym);
  CHECK(eval_term(parse_term("beta(gen(s),gen(s))"), g, is, *sym).perm() == Perm({2, 1, 4, 3}));
}

TEST_CASE("eval_term: pi-incompatible interpretations are rejected") {
  const auto g = one_swap();
  const auto sym = make_symmetric();
  CHECK_THROWS_AS(parse_interpretation({{"s", "[1,2]"}}, g, *sym), InputError);
  CHECK_THROWS_AS(parse_interpretation({{"s", "[2,1,3]"}}, g, *sym), InputError);
  CHECK_THROWS_AS(parse_interpretation({}, g, *sym), InputError);
  Interpretation bad{{"s", sym->identity(2)}};
  CHECK_THROWS_AS(eval_term(parse_term("gen(s)"), g, bad, *sym), InputError);
}

TEST_CASE("presentation: relations with different permutations are rejected at load") {
  const auto j = nlohmann::json::parse(R"J({
    "generators": [{"name": "s", "arity": 2, "pi": [2,1]}],
    "relations": [{"lhs": "gen(s)", "rhs": "id(2)"}]})J");
  CHECK_THROWS_AS(presentation_from_json(j), InputError);
  const auto k = nlohmann::json::parse(R"J({
    "generators": [{"name": "s", "arity": 2, "pi": [2,1]}],
    "relations": [{"lhs": "gen(s)", "rhs": "id(3)"}]})J");
  CHECK_THROWS_AS(presentation_from_json(k), InputError);
  const auto bad_gen = nlohmann::json::parse(R"J({"generators": [{"name": "s", "arity": 3, "pi": [2,1]}]})J");
  CHECK_THROWS_AS(presentation_from_json(bad_gen), InputError);
}

TEST_CASE("presentation: coboundary relations hold in the cactus and symmetric groups") {
  const auto p = coboundary_presentation();
  for (const char* name : {"cactus", "sym"}) {
    CAPTURE(name);
    const auto inst = make_operad(name);
    const auto interp = parse_interpretation(p.interpretations.at(name), p.generators, *inst);
    const auto r = check_presentation(p, interp, *inst);
    CHECK_MESSAGE(r.holds(), format_presentation_report(r, *inst));
  }
  // the worked instance: both sides are s(1,3)
  const auto cactus = make_operad("cactus");
  const auto interp = parse_interpretation(p.interpretations.at("cactus"), p.generators, *cactus);
  const auto s13 = cactus->parse("s(1,3)", 3);
  CHECK(cactus->same(eval_term(p.relations[1].lhs, p.generators, interp, *cactus), s13));
  CHECK(cactus->same(eval_term(p.relations[1].rhs, p.generators, interp, *cactus), s13));
}

TEST_CASE("presentation: symmetric relations hold in sym but not in braid or cactus") {
  const auto p = symmetric_presentation();
  const auto sym = make_symmetric();
  const auto rs = check_presentation(p, parse_interpretation(p.interpretations.at("sym"), p.generators, *sym), *sym);
  CHECK(rs.holds());
  const auto braid = make_operad("braid");
  const auto rb =
      check_presentation(p, parse_interpretation(p.interpretations.at("braid"), p.generators, *braid), *braid);
  CHECK(rb.refuted());
  CHECK(rb.rows[0].result.verdict == EqResult::Verdict::Distinct);
  CHECK(rb.rows[1].result.is_equal());
  const auto cactus = make_operad("cactus");
  const auto rc =
      check_presentation(p, parse_interpretation(p.interpretations.at("cactus"), p.generators, *cactus), *cactus);
  CHECK(rc.rows[0].result.is_equal());
  CHECK_FALSE(rc.holds());
}

TEST_CASE("presentation: json roundtrip") {
  const auto p = coboundary_presentation();
  const auto back = presentation_from_json(presentation_to_json(p));
  CHECK(presentation_to_json(back) == presentation_to_json(p));
}

TEST_CASE("term corpus: pi of the evaluation is the term's permutation") {
  for (const auto& s : corpus::setups()) {
    CAPTURE(s.operad);
    const auto inst = make_operad(s.operad);
    const auto interp = parse_interpretation(s.interp, s.gens, *inst);
    const auto ts = corpus::terms(s.gens, 100, 20261018u);
    REQUIRE(ts.size() == 100);
    int mismatches = 0;
    for (const auto& t : ts) {
      const Perm want = term_pi(t, s.gens);
      const Perm got = inst->pi(eval_term(t, s.gens, interp, *inst));
      if (want != got) ++mismatches;
    }
    CHECK(mismatches == 0);
  }
}
