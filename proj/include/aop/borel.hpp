#pragma once

#include <string>
#include <vector>

#include "aop/fincat.hpp"
#include "aop/operad.hpp"

namespace aop {

/// The class [e; x_1..x_n] of E Lambda(n) x_{Lambda(n)} X^n. Objects are indices into X.
struct BorelObject {
  std::vector<int> objects;

  int arity() const { return static_cast<int>(objects.size()); }
  friend bool operator==(const BorelObject&, const BorelObject&) = default;
  friend auto operator<=>(const BorelObject&, const BorelObject&) = default;
};

/// A morphism (g, (f_i)) : [e; x] -> [e; y] with f_i : x_i -> y_{pi(g)(i)}.
struct BorelMorphism {
  BorelObject src;
  BorelObject tgt;
  OperadElement g;
  std::vector<int> f;  // morphism indices into X
};

/// [e; x_{pi(g)^-1(1)}, .., x_{pi(g)^-1(n)}], the representative of (g; x).
BorelObject normalize(const ActionOperad& inst, const OperadElement& g, const std::vector<int>& xs);

/// All morphisms src -> tgt, grouped by g in the order of inst.domain(n, bound)
/// and, within one g, lexicographically in the component hom-sets. For
/// infinite Lambda(n) only the ball of radius `bound` is listed. Different
/// arities give the empty list.
std::vector<BorelMorphism> hom_set(const BorelObject& src, const BorelObject& tgt, const FinCat& X,
                                   const ActionOperad& inst, int bound = 2);

/// (g2, k) o (g1, f) = (g2 g1, k_{pi(g1)(i)} o f_i).
BorelMorphism compose_borel(const BorelMorphism& m2, const BorelMorphism& m1, const FinCat& X,
                            const ActionOperad& inst);
BorelMorphism borel_identity(const BorelObject& x, const FinCat& X, const ActionOperad& inst);
bool same_morphism(const BorelMorphism& a, const BorelMorphism& b, const ActionOperad& inst);

BorelObject borel_unit(int x);
/// normalize(delta(g; inner arities), concatenated inner objects).
BorelObject borel_mult(const ActionOperad& inst, const OperadElement& g,
                       const std::vector<BorelObject>& inners);
/// (g, identities) : [e; x] -> normalize(g, x).
BorelMorphism act(const ActionOperad& inst, const OperadElement& g, const BorelObject& x,
                  const FinCat& X);

struct LambdaInfinityReport {
  int arity = 0;
  int objects = 0;
  bool contractible = false;
  bool free_action = false;
  std::string detail;  // first failure, empty on success

  bool passed() const { return contractible && free_action; }
};

/// Builds E Lambda(n) (objects Lambda(n), one morphism a -> b for every pair),
/// validates it as a category, checks every hom-set is a singleton of an
/// isomorphism, and checks right multiplication on objects has trivial
/// stabilisers. Throws InputError when Lambda(n) is infinite.
LambdaInfinityReport lambda_infinity_check(const ActionOperad& inst, int n);

/// "g | f1,...,fn".
std::string format_borel_morphism(const BorelMorphism& m, const FinCat& X, const ActionOperad& inst);
std::string format_borel_object(const BorelObject& x, const FinCat& X);
/// Parses "a,b,c" (object names; "" is the arity-0 object).
BorelObject parse_borel_object(const std::string& text, const FinCat& X);

}  // namespace aop
