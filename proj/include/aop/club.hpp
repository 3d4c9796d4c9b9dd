#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "aop/fincat.hpp"
#include "aop/operad.hpp"

namespace aop {

/// A morphism of a club K over B Sigma, as a cell between objects of K.
struct ClubMorphism {
  int src = 0;
  int tgt = 0;
  OperadElement cell;
};

/// A club over B Sigma given operationally: a category with a functor to
/// B Sigma and the multiplication K o K -> K on morphisms. Heads and legs of
/// a composite cell f(g_1..g_n) are ordinary morphisms.
class Club {
 public:
  virtual ~Club() = default;
  virtual std::string name() const = 0;
  /// Objects whose image in B Sigma is at most max_arity.
  virtual std::vector<int> objects(int max_arity) const = 0;
  /// The functor to B Sigma on objects.
  virtual int arity(int object) const = 0;
  virtual bool finite_hom(int a, int b) const = 0;
  virtual std::vector<ClubMorphism> hom(int a, int b) const = 0;
  virtual ClubMorphism identity(int a) const = 0;
  virtual ClubMorphism compose(const ClubMorphism& g, const ClubMorphism& f) const = 0;
  virtual ClubMorphism inverse(const ClubMorphism& f) const = 0;
  virtual Perm pi(const ClubMorphism& f) const = 0;
  virtual ClubMorphism mult(const ClubMorphism& head, std::span<const ClubMorphism> legs) const = 0;
  virtual bool same(const ClubMorphism& a, const ClubMorphism& b) const = 0;
  virtual std::string format(const ClubMorphism& f) const = 0;
  virtual ClubMorphism parse(std::string_view text, int object) const = 0;
};

using ClubPtr = std::shared_ptr<const Club>;

/// f(g_1..g_n) in K_Lambda, i.e. mu(f; g).
OperadElement club_mult(const ActionOperad& inst, const OperadElement& head,
                        std::span<const OperadElement> legs);

/// K_Lambda = B Lambda over B Sigma, objects n, multiplication mu. For
/// infinite Lambda(n) hom lists the ball of radius `bound`.
ClubPtr club_from(OperadPtr inst, int bound = 2);

/// Recovers an action operad from a club with beta(g) = e_n(g_1..g_n) and
/// delta(f; k) = f(e_{k_1}..e_{k_n}). Checks, for objects of arity <= max_arity,
/// that K -> B Sigma is bijective on objects and K is a groupoid; throws
/// InputError naming the first violation.
OperadPtr operad_from_club(ClubPtr club, int max_arity);

struct PullbackReport {
  int arity = 0;
  std::size_t object_pairs = 0;
  std::size_t downstairs = 0;  // compatible (g, Sigma-side morphism) pairs examined
  std::size_t failures = 0;
  std::string detail;          // first failure

  bool passed() const { return failures == 0; }
};

/// Compares E Lambda(n) x_{Lambda(n)} X^n -> B Lambda(n) with the Sigma_n
/// version along pi: objects must correspond and every pair (g, (sigma, f))
/// with sigma = pi(g) must have exactly one lift (g, f). Throws InputError
/// when Lambda(n) is infinite.
PullbackReport check_pullback(const ActionOperad& inst, int n, const FinCat& X);

}  // namespace aop
