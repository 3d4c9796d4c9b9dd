#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aop/operad.hpp"
#include "aop/rewrite.hpp"

namespace aop {

/// Generators s(p,q), 1 <= p < q. Ids are independent of the arity:
/// id = (q-1)(q-2)/2 + (p-1).
class CactusAlphabet final : public Alphabet {
 public:
  static int id(int p, int q) { return (q - 1) * (q - 2) / 2 + (p - 1); }
  static std::pair<int, int> interval(int id);

  std::string name() const override { return "cactus"; }
  bool involutive(int) const override { return true; }
  bool valid(int gen, int arity) const override;
  std::vector<int> generators(int arity) const override;
  Perm letter_pi(int gen, int arity) const override;
  std::string format(Letter l) const override;
  std::optional<Letter> parse(std::string_view token) const override;
};

/// Reverses [p,q] and fixes everything else.
Perm s_hat(int p, int q, int n);

/// The letter s(p,q); s_word gives the one-letter word, or the empty word
/// when p >= q (the degenerate s(k,k) and m_1, m_0).
Letter s_letter(int p, int q);
Word s_word(int p, int q, int n);

/// Involution, disjoint commutation and containment relations of J_n, with
/// the pi invariant.
///
/// Containment reads s(p,q) s(k,l) = s(a,b) s(p,q) with a = s_hat(p,q)(l) and
/// b = s_hat(p,q)(k); the letters are renamed (a,b) because the textbook
/// statement reuses n for one of them.
RelationSystem cactus_relations(int n);

Word cactus_beta(std::span<const Word> ws);
Word cactus_delta_gen(int p, int q, int n, std::span<const int> sizes);

/// sigma_{m,n} = s(1,m+n) s(1,m) s(m+1,m+n) in J_{m+n}, degenerate factors dropped.
Word commutor(int m, int n);

class CactusOperad final : public WordOperad {
 public:
  CactusOperad();

  std::string name() const override { return "cactus"; }
  bool is_finite(int n) const override { return n <= 2; }
  std::vector<OperadElement> enumerate(int n) const override;

  Word delta_gen(Letter l, std::span<const int> sizes) const override;
  Letter shift(Letter l, int offset) const override;

 protected:
  RelationSystem build_relations(int n) const override { return cactus_relations(n); }
};

std::shared_ptr<const CactusOperad> make_cactus();

/// One equality obligation of the coboundary / well-definedness suites.
struct CactusCheck {
  std::string label;
  Word lhs;
  Word rhs;
  EqResult result;
};

/// sigma_{n,m} sigma_{m,n} = e for all m,n >= 1 with m + n <= max_total.
std::vector<CactusCheck> check_commutor_involution(int max_total, SearchBounds bounds = {});
/// sigma_{m,p+n} beta(e_m, sigma_{n,p}) = sigma_{n+m,p} beta(sigma_{m,n}, e_p), m+n+p <= max_total.
std::vector<CactusCheck> check_coboundary_square(int max_total, SearchBounds bounds = {});
/// commutor(m,n) = delta(s(1,2), [m,n]) for m + n <= max_total.
std::vector<CactusCheck> check_commutor_is_delta(int max_total, SearchBounds bounds = {});
/// delta(lhs) = delta(rhs) for every defining relation of J_n, n <= max_n, and
/// every size vector with entries in [min_size, max_size].
std::vector<CactusCheck> check_delta_well_defined(int max_n, int min_size, int max_size,
                                                  SearchBounds bounds = {});

}  // namespace aop
