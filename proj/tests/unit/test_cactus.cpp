#include "aop/cactus.hpp"
#include "aop/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace aop;

namespace {
const CactusAlphabet kA;
Word cw(std::string_view s, int n) { return parse_word(s, n, kA); }
std::string fmt(const Word& w) { return format_word(w, kA); }
}  // namespace

TEST_CASE("cactus: generator ids") {
  int expect = 0;
  for (int q = 2; q <= 9; ++q)
    for (int p = 1; p < q; ++p) {
      CHECK(CactusAlphabet::id(p, q) == expect++);
      CHECK(CactusAlphabet::interval(CactusAlphabet::id(p, q)) == std::pair{p, q});
    }
}

TEST_CASE("cactus: s_hat") {
  CHECK(s_hat(1, 2, 2) == Perm({2, 1}));
  CHECK(s_hat(1, 3, 3) == Perm({3, 2, 1}));
  CHECK(s_hat(2, 3, 4) == Perm({1, 3, 2, 4}));
  for (int n = 2; n <= 7; ++n)
    for (int q = 2; q <= n; ++q)
      for (int p = 1; p < q; ++p) CHECK(s_hat(p, q, n).images() == oracle::interval_reversal(p, q, n));
  CHECK_THROWS_AS(s_hat(2, 2, 3), InputError);
  CHECK_THROWS_AS(s_hat(1, 4, 3), InputError);
}

TEST_CASE("cactus: relation systems") {
  const auto r2 = cactus_relations(2);
  CHECK(kA.generators(2).size() == 1);
  CHECK(r2.relations.size() == 1);
  const auto r3 = cactus_relations(3);
  CHECK(kA.generators(3).size() == 3);
  bool found = false;
  for (const auto& rel : r3.relations)
    if (rel.lhs == cw("s(1,3) s(1,2)", 3) && rel.rhs == cw("s(2,3) s(1,3)", 3)) found = true;
  CHECK(found);
  bool disjoint = false;
  for (const auto& rel : cactus_relations(4).relations)
    if (rel.lhs == cw("s(1,2) s(3,4)", 4) && rel.rhs == cw("s(3,4) s(1,2)", 4)) disjoint = true;
  CHECK(disjoint);
  for (int n = 1; n <= 6; ++n) {
    const auto sys = cactus_relations(n);
    CHECK(kA.generators(n).size() == static_cast<std::size_t>(n * (n - 1) / 2));
    REQUIRE(sys.invariants.size() == 1);
    CHECK(sys.invariants[0].name == "pi");
  }
}

TEST_CASE("cactus: beta and delta_gen values") {
  const Word e2{2, {}};
  const Word ee[] = {e2, e2};
  CHECK(cactus_beta(ee).empty());
  const Word ss[] = {cw("s(1,2)", 2), cw("s(1,2)", 2)};
  CHECK(fmt(cactus_beta(ss)) == "s(1,2) s(3,4)");
  const Word one[] = {cw("s(1,3)", 3)};
  CHECK(fmt(cactus_beta(one)) == "s(1,3)");

  const int k21[] = {2, 1};
  CHECK(fmt(cactus_delta_gen(1, 2, 2, k21)) == "s(1,3) s(1,2)");
  const int k121[] = {1, 2, 1};
  const Word d = cactus_delta_gen(2, 3, 3, k121);
  CHECK(fmt(d) == "s(2,4) s(2,3)");
  CHECK(word_pi(d, kA) == Perm({1, 3, 4, 2}));
  const int ones[] = {1, 1, 1, 1};
  CHECK(fmt(cactus_delta_gen(2, 4, 4, ones)) == "s(2,4)");
  CHECK_THROWS_AS(cactus_delta_gen(2, 2, 2, k21), InputError);
}

TEST_CASE("cactus: delta_gen is pi-compatible") {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    for (;;) {
      for (int q = 2; q <= n; ++q)
        for (int p = 1; p < q; ++p) {
          const Word d = cactus_delta_gen(p, q, n, k);
          CHECK(word_pi(d, kA).images() ==
                oracle::block_perm(oracle::interval_reversal(p, q, n), k));
        }
      std::size_t i = 0;
      while (i < k.size() && k[i] == 3) k[i++] = 0;
      if (i == k.size()) break;
      ++k[i];
    }
  }
}

TEST_CASE("cactus: commutor") {
  CHECK(fmt(commutor(1, 1)) == "s(1,2)");
  CHECK(fmt(commutor(1, 2)) == "s(1,3) s(2,3)");
  CHECK(fmt(commutor(2, 1)) == "s(1,3) s(1,2)");
  CHECK_THROWS_AS(commutor(0, 2), InputError);
  // pi(commutor(m,n)) is the block swap of sizes (m,n).
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      CHECK(word_pi(commutor(m, n), kA).images() == oracle::block_perm({2, 1}, {m, n}));
}

TEST_CASE("cactus: coboundary suites at small size") {
  for (const auto& c : check_commutor_involution(4)) CHECK(c.result.is_equal());
  for (const auto& c : check_coboundary_square(4)) CHECK(c.result.is_equal());
  for (const auto& c : check_commutor_is_delta(4)) CHECK(c.result.is_equal());
  for (const auto& c : check_delta_well_defined(3, 0, 2)) {
    INFO(c.label);
    CHECK(c.result.is_equal());
  }
}
