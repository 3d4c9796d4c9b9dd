#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "aop/operad.hpp"
#include "aop/rewrite.hpp"

namespace aop {

/// Artin generators: gen id i-1 is sigma_i, written b<i>; the inverse is B<i>.
class BraidAlphabet final : public Alphabet {
 public:
  std::string name() const override { return "braid"; }
  bool involutive(int) const override { return false; }
  bool valid(int gen, int arity) const override { return gen >= 0 && gen + 1 < arity; }
  std::vector<int> generators(int arity) const override;
  Perm letter_pi(int gen, int arity) const override;
  std::string format(Letter l) const override;
  std::optional<Letter> parse(std::string_view token) const override;
};

Letter braid_letter(int i, int sign = 1);

/// Commutation and braid relations, with the pi and exponent-sum invariants.
/// Besides the two defining families the system carries their standard
/// mixed-sign consequences (commutation for every sign pattern, and
/// x y x^-1 = y^-1 x y, x y^-1 x^-1 = y^-1 x^-1 y, x^-1 y^-1 x^-1 = y^-1 x^-1 y^-1
/// for adjacent x, y); these are labelled "derived" and shorten searches.
RelationSystem braid_relations(int n, bool with_derived = true);

int exponent_sum(const Word& w);

Word braid_beta(std::span<const Word> ws);

/// Positive crossing of the a strands starting at p over the next b strands.
/// block_cross(p,0,b) = e and
/// block_cross(p,a,b) = block_cross(p,a-1,b) * b_{p+a+b-2} ... b_{p+a-1}.
/// Its permutation is the transposition of the two blocks. `arity` defaults
/// to p+a+b-1.
Word block_cross(int p, int a, int b, int arity = -1);

/// Cabling of sigma_i: block_cross(k_1+...+k_{i-1}+1, k_i, k_{i+1}).
Word braid_delta_gen(int i, int n, std::span<const int> sizes);

class BraidOperad final : public WordOperad {
 public:
  BraidOperad();

  std::string name() const override { return "braid"; }
  bool is_finite(int n) const override { return n <= 1; }
  std::vector<OperadElement> enumerate(int n) const override;

  Word delta_gen(Letter l, std::span<const int> sizes) const override;
  Letter shift(Letter l, int offset) const override { return {l.gen + offset, l.sign}; }

 protected:
  RelationSystem build_relations(int n) const override { return braid_relations(n); }
};

std::shared_ptr<const BraidOperad> make_braid();

}  // namespace aop
