#include "aop/braid.hpp"
#include "aop/cactus.hpp"
#include "aop/error.hpp"
#include "aop/rewrite.hpp"
#include "doctest.h"

using namespace aop;

namespace {
const CactusAlphabet kCactus;
const BraidAlphabet kBraid;

Word cw(std::string_view s, int n) { return parse_word(s, n, kCactus); }
Word bw(std::string_view s, int n) { return parse_word(s, n, kBraid); }

void check_path(const Word& a, const Word& b, const RelationSystem& sys, const EqResult& r) {
  REQUIRE(r.is_equal());
  std::string err;
  const auto end = replay(a, r.path, sys, &err);
  INFO(err);
  REQUIRE(end.has_value());
  CHECK(free_reduce(*end, *sys.alphabet) == free_reduce(b, *sys.alphabet));
  // Text round trip of the path.
  CHECK(parse_path(format_path(r.path, *sys.alphabet), *sys.alphabet) == r.path);
}
}  // namespace

TEST_CASE("rewrite: word syntax") {
  CHECK(format_word(cw("s(1,2)  s(2,3)", 3), kCactus) == "s(1,2) s(2,3)");
  CHECK(format_word(cw("e", 3), kCactus) == "e");
  CHECK(format_word(bw("b1 B2", 3), kBraid) == "b1 B2");
  CHECK_THROWS_AS(cw("s(1,4)", 3), InputError);
  CHECK_THROWS_AS(cw("s(2,2)", 3), InputError);
  CHECK_THROWS_AS(bw("b3", 3), InputError);
  CHECK_THROWS_AS(bw("x1", 3), InputError);
}

TEST_CASE("rewrite: free reduction") {
  CHECK(free_reduce(cw("s(1,2) s(1,2)", 2), kCactus).empty());
  CHECK(free_reduce(cw("e", 2), kCactus).empty());
  CHECK(free_reduce(bw("b1 B1 b2", 3), kBraid) == bw("b2", 3));
  CHECK(free_reduce(bw("b1 b2 B2 B1", 3), kBraid).empty());
  CHECK(free_reduce(bw("b1 b1", 3), kBraid).size() == 2);
  CHECK(inverse(bw("b1 B2", 3), kBraid) == bw("b2 B1", 3));
  CHECK(inverse(cw("s(1,2) s(2,3)", 3), kCactus) == cw("s(2,3) s(1,2)", 3));
}

TEST_CASE("rewrite: documented equalities") {
  const auto sys4 = cactus_relations(4);
  const Word a = cw("s(1,4) s(2,3)", 4), b = cw("s(2,3) s(1,4)", 4);
  const auto r = equal(a, b, sys4, {8, 10000});
  check_path(a, b, sys4, r);
  CHECK(r.path.size() == 1);

  const auto sys2 = cactus_relations(2);
  const auto d = equal(cw("s(1,2)", 2), cw("e", 2), sys2, {8, 10000});
  CHECK(d.verdict == EqResult::Verdict::Distinct);
  CHECK(d.invariant == "pi");

  const auto same = equal(a, a, sys4);
  CHECK(same.is_equal());
  CHECK(same.states == 0);
  CHECK_THROWS_AS(equal(a, cw("e", 3), sys4), InputError);
}

TEST_CASE("rewrite: invariants are constant on every relation") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(invariant_violations(cactus_relations(n)).empty());
    CHECK(invariant_violations(braid_relations(n)).empty());
  }
}

TEST_CASE("rewrite: braid search needs insertions") {
  const auto sys = braid_relations(3);
  // b1 b2 b1 B2 = b2 b1 (braid relation then cancellation).
  const Word a = bw("b1 b2 b1 B2", 3), b = bw("b2 b1", 3);
  check_path(a, b, sys, equal(a, b, sys));
  // Conjugation identity B1 b2 b1 = b2 b1 B2.
  const Word c = bw("B1 b2 b1", 3), d = bw("b2 b1 B2", 3);
  check_path(c, d, sys, equal(c, d, sys));
  const auto distinct = equal(bw("b1", 3), bw("b2", 3), sys);
  CHECK(distinct.verdict == EqResult::Verdict::Distinct);
  const auto by_sum = equal(bw("b1 b1", 3), bw("e", 3), sys);
  CHECK(by_sum.verdict == EqResult::Verdict::Distinct);
  CHECK(by_sum.invariant == "exponent_sum");
}

TEST_CASE("rewrite: derived braid relations follow from the defining ones") {
  for (int n = 3; n <= 5; ++n) {
    const auto base = braid_relations(n, false);
    const auto full = braid_relations(n, true);
    for (const auto& rel : full.relations) {
      const auto r = equal(rel.lhs, rel.rhs, base, {9, 1000000});
      INFO(rel.label, " ", format_word(rel.lhs, kBraid), " = ", format_word(rel.rhs, kBraid));
      check_path(rel.lhs, rel.rhs, base, r);
    }
  }
}

TEST_CASE("rewrite: replay rejects illegal steps") {
  const auto sys = cactus_relations(3);
  const Word w = cw("s(1,2) s(2,3)", 3);
  RewriteStep bad{RewriteStep::Kind::Apply, 0, true, 0, {}};
  std::string err;
  CHECK_FALSE(replay(w, {bad}, sys, &err).has_value());
  CHECK_FALSE(err.empty());
  RewriteStep cancel{RewriteStep::Kind::Cancel, -1, true, 0, s_letter(1, 2)};
  CHECK_FALSE(replay(w, {cancel}, sys).has_value());
}

TEST_CASE("rewrite: determinism") {
  const auto sys = braid_relations(4);
  const Word a = bw("b1 b2 b3 b1 b2 b1", 4), b = bw("b3 b2 b1 b3 b2 b3", 4);
  const auto r1 = equal(a, b, sys), r2 = equal(a, b, sys);
  CHECK(r1.verdict == r2.verdict);
  CHECK(r1.path == r2.path);
  CHECK(r1.states == r2.states);
}
