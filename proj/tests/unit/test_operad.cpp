#include "aop/braid.hpp"
#include "aop/cactus.hpp"
#include "aop/error.hpp"
#include "aop/operad.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace aop;

TEST_CASE("operad: registry") {
  for (const char* n : {"trivial", "sym", "braid", "cactus"}) CHECK(make_operad(n)->name() == n);
  CHECK_THROWS_AS(make_operad("ribbon"), InputError);
}

TEST_CASE("operad: pi values") {
  const auto T = make_trivial();
  CHECK(T->pi(T->identity(4)) == Perm::identity(4));
  const auto J = make_cactus();
  CHECK(J->pi(J->parse("s(1,3)", 3)) == Perm({3, 2, 1}));
  const auto B = make_braid();
  CHECK(B->pi(B->parse("b1 b1", 2)) == Perm::identity(2));
  CHECK(B->pi(B->parse("b1 b2", 3)) == Perm({2, 3, 1}));
}

TEST_CASE("operad: symmetric beta, delta, mu") {
  const auto S = make_symmetric();
  const OperadElement hs[] = {S->parse("[2,1]", -1), S->parse("[2,3,1]", -1)};
  CHECK(S->format(S->beta(hs)) == "[2,1,4,5,3]");
  const OperadElement one[] = {hs[1]};
  CHECK(S->beta(one) == hs[1]);
  const int k21[] = {2, 1};
  CHECK(S->format(S->delta(hs[0], k21)) == "[2,3,1]");
  const OperadElement inner[] = {S->identity(1), S->parse("[2,1]", -1)};
  CHECK(S->format(S->mu(S->parse("[2,1]", -1), inner)) == "[3,2,1]");
  // Oracle: delta(g,k) beta(h) composed pointwise.
  const int k12[] = {1, 2};
  const auto d = oracle::block_perm({2, 1}, {1, 2});
  const auto b = oracle::block_sum({{1}, {2, 1}});
  CHECK(S->mu(hs[0], inner).perm().images() == oracle::compose(d, b));
  CHECK(S->delta(hs[0], k12).perm().images() == d);
  // Unit laws.
  const OperadElement g = S->parse("[3,1,2]", -1);
  const OperadElement just_g[] = {g};
  CHECK(S->mu(S->identity(1), just_g) == g);
  const OperadElement units[] = {S->identity(1), S->identity(1), S->identity(1)};
  CHECK(S->mu(g, units) == g);
  CHECK_THROWS_AS(S->mu(g, just_g), InputError);
  CHECK_THROWS_AS(S->mul(g, hs[0]), InputError);
}

TEST_CASE("operad: mixed instances rejected") {
  const auto S = make_symmetric();
  const auto J = make_cactus();
  const OperadElement mixed[] = {S->identity(2), J->identity(2)};
  CHECK_THROWS_AS(S->beta(mixed), InputError);
  CHECK_THROWS_AS(J->pi(S->identity(2)), InputError);
}

TEST_CASE("operad: cactus beta and delta values") {
  const auto J = make_cactus();
  const OperadElement s12 = J->parse("s(1,2)", 2);
  const OperadElement two[] = {s12, s12};
  CHECK(J->format(J->beta(two)) == "s(1,2) s(3,4)");
  const int k21[] = {2, 1};
  CHECK(J->format(J->delta(s12, k21)) == "s(1,3) s(1,2)");
  const OperadElement g = J->parse("s(1,3) s(2,3)", 3);
  const int ones[] = {1, 1, 1};
  CHECK(J->delta(g, ones) == g);
}

TEST_CASE("operad: word delta is pi-compatible on balls") {
  // pi(delta(g,k)) = block_perm(pi(g),k), checked with the oracle block_perm.
  for (const auto& inst : {OperadPtr(make_cactus()), OperadPtr(make_braid())}) {
    for (int n = 1; n <= 3; ++n) {
      const auto dom = inst->ball(n, 3);
      std::vector<int> k(static_cast<std::size_t>(n), 0);
      for (;;) {
        for (const auto& g : dom) {
          const auto d = inst->delta(g, k);
          CHECK(inst->pi(d).images() == oracle::block_perm(inst->pi(g).images(), k));
        }
        std::size_t i = 0;
        while (i < k.size() && k[i] == 2) k[i++] = 0;
        if (i == k.size()) break;
        ++k[i];
      }
    }
  }
}

TEST_CASE("operad: ball and enumerate") {
  const auto J = make_cactus();
  CHECK(J->enumerate(2).size() == 2);
  CHECK(J->ball(2, 5).size() == 2);
  CHECK_THROWS_AS(J->enumerate(3), InputError);
  // J_3 reduced words of length <= 1: e plus three generators.
  CHECK(J->ball(3, 1).size() == 4);
  const auto S = make_symmetric();
  CHECK(S->ball(3, 10).size() == 6);
  CHECK(S->domain(4, 0).size() == 24);
  const auto B = make_braid();
  // e, b1, B1, b1 b1, B1 B1.
  CHECK(B->ball(2, 2).size() == 5);
}

TEST_CASE("operad: factor and generator relations") {
  for (const auto& inst : {make_symmetric(), OperadPtr(make_cactus()), OperadPtr(make_braid())}) {
    for (int n = 0; n <= 4; ++n) {
      for (const auto& g : inst->ball(n, 3)) CHECK(inst->same(inst->eval_gen_word(inst->factor(g), n), g));
      for (const auto& [l, r] : inst->generator_relations(n))
        CHECK(inst->same(inst->eval_gen_word(l, n), inst->eval_gen_word(r, n)));
    }
  }
}
