#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aop/perm.hpp"
#include "aop/rewrite.hpp"

namespace aop {

/// An element g of Lambda(n) for one concrete instance.
struct OperadElement {
  std::string tag;  // instance name
  int arity = 0;
  std::variant<std::monostate, Perm, Word> payload;

  const Perm& perm() const { return std::get<Perm>(payload); }
  const Word& word() const { return std::get<Word>(payload); }
  friend bool operator==(const OperadElement&, const OperadElement&) = default;
};

/// A generator letter of Lambda(n) by position in generators(n), with a sign.
struct GenLetter {
  int index = 0;
  int sign = 1;
  friend bool operator==(const GenLetter&, const GenLetter&) = default;
};
using GenWord = std::vector<GenLetter>;

/// An action operad given by its groups, pi, block sum (beta) and diagonal
/// (delta). Operadic composition is derived: mu(g; h...) = delta(g) * beta(h...).
///
/// Implementations are immutable after construction; every member function
/// may be called concurrently.
class ActionOperad {
 public:
  virtual ~ActionOperad() = default;

  virtual std::string name() const = 0;

  OperadElement identity(int n) const { return identity_impl(n); }
  Perm pi(const OperadElement& g) const;
  OperadElement mul(const OperadElement& g, const OperadElement& h) const;
  OperadElement inv(const OperadElement& g) const;
  OperadElement beta(std::span<const OperadElement> hs) const;
  OperadElement delta(const OperadElement& g, std::span<const int> sizes) const;
  OperadElement mu(const OperadElement& g, std::span<const OperadElement> hs) const;

  /// Equality oracle. Finite instances decide exactly (never Inconclusive).
  virtual EqResult equal(const OperadElement& a, const OperadElement& b,
                         SearchBounds bounds = {}) const = 0;
  bool same(const OperadElement& a, const OperadElement& b, SearchBounds bounds = {}) const {
    return equal(a, b, bounds).is_equal();
  }

  virtual bool is_finite(int n) const = 0;
  /// Every element of Lambda(n); throws InputError when Lambda(n) is infinite.
  virtual std::vector<OperadElement> enumerate(int n) const = 0;
  /// Distinct reduced generator words of length <= max_len (the whole group
  /// when finite and max_len is large enough).
  virtual std::vector<OperadElement> ball(int n, int max_len) const;
  /// Elements for axiom checks: enumerate(n) when finite, else ball(n, max_len).
  std::vector<OperadElement> domain(int n, int max_len) const;

  virtual std::vector<OperadElement> generators(int n) const = 0;
  /// Expresses g as a word in generators(n).
  virtual GenWord factor(const OperadElement& g) const = 0;
  /// Defining relations between generator words at arity n.
  virtual std::vector<std::pair<GenWord, GenWord>> generator_relations(int n) const = 0;
  OperadElement eval_gen_word(const GenWord& w, int n) const;

  virtual std::string format(const OperadElement& g) const = 0;
  /// Parses the instance's element syntax at arity n (n < 0: infer if possible).
  virtual OperadElement parse(std::string_view text, int n) const = 0;

 protected:
  virtual OperadElement identity_impl(int n) const = 0;
  virtual Perm pi_impl(const OperadElement& g) const = 0;
  virtual OperadElement mul_impl(const OperadElement& g, const OperadElement& h) const = 0;
  virtual OperadElement inv_impl(const OperadElement& g) const = 0;
  virtual OperadElement beta_impl(std::span<const OperadElement> hs) const = 0;
  virtual OperadElement delta_impl(const OperadElement& g, std::span<const int> sizes) const = 0;

  void check_tag(const OperadElement& g, const char* op) const;
  const std::string& tag() const;

 private:
  mutable std::once_flag tag_once_;
  mutable std::string tag_;
};

using OperadPtr = std::shared_ptr<const ActionOperad>;

/// Lambda(n) = {e} for every n.
class TrivialOperad final : public ActionOperad {
 public:
  std::string name() const override { return "trivial"; }
  EqResult equal(const OperadElement& a, const OperadElement& b, SearchBounds = {}) const override;
  bool is_finite(int) const override { return true; }
  std::vector<OperadElement> enumerate(int n) const override { return {identity(n)}; }
  std::vector<OperadElement> generators(int) const override { return {}; }
  GenWord factor(const OperadElement&) const override { return {}; }
  std::vector<std::pair<GenWord, GenWord>> generator_relations(int) const override { return {}; }
  std::string format(const OperadElement& g) const override;
  OperadElement parse(std::string_view text, int n) const override;

 protected:
  OperadElement identity_impl(int n) const override;
  Perm pi_impl(const OperadElement& g) const override { return Perm::identity(g.arity); }
  OperadElement mul_impl(const OperadElement& g, const OperadElement&) const override { return g; }
  OperadElement inv_impl(const OperadElement& g) const override { return g; }
  OperadElement beta_impl(std::span<const OperadElement> hs) const override;
  OperadElement delta_impl(const OperadElement& g, std::span<const int> sizes) const override;
};

/// Lambda(n) = Sigma_n with pi the identity.
class SymmetricOperad : public ActionOperad {
 public:
  std::string name() const override { return "sym"; }
  EqResult equal(const OperadElement& a, const OperadElement& b, SearchBounds = {}) const override;
  bool is_finite(int) const override { return true; }
  std::vector<OperadElement> enumerate(int n) const override;
  /// Adjacent transpositions t_1..t_{n-1}.
  std::vector<OperadElement> generators(int n) const override;
  GenWord factor(const OperadElement& g) const override;
  /// Coxeter relations of Sigma_n.
  std::vector<std::pair<GenWord, GenWord>> generator_relations(int n) const override;
  std::string format(const OperadElement& g) const override { return to_string(g.perm()); }
  OperadElement parse(std::string_view text, int n) const override;

  OperadElement element(Perm p) const;

 protected:
  OperadElement identity_impl(int n) const override { return element(Perm::identity(n)); }
  Perm pi_impl(const OperadElement& g) const override { return g.perm(); }
  OperadElement mul_impl(const OperadElement& g, const OperadElement& h) const override;
  OperadElement inv_impl(const OperadElement& g) const override;
  OperadElement beta_impl(std::span<const OperadElement> hs) const override;
  OperadElement delta_impl(const OperadElement& g, std::span<const int> sizes) const override;
};

/// Shared machinery for groups presented by generator words (braid, cactus):
/// beta shifts and concatenates, delta folds delta_gen over the word using
///   delta_j(w x) = delta_k(w) delta_j(x),  k_i = j_{pi(x)^-1(i)}.
class WordOperad : public ActionOperad {
 public:
  explicit WordOperad(std::shared_ptr<const Alphabet> alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const { return *alphabet_; }
  std::shared_ptr<const Alphabet> alphabet_ptr() const { return alphabet_; }

  OperadElement element(Word w) const;
  /// Cached relation system at arity n.
  std::shared_ptr<const RelationSystem> relations(int n) const;

  EqResult equal(const OperadElement& a, const OperadElement& b,
                 SearchBounds bounds = {}) const override;
  std::vector<OperadElement> ball(int n, int max_len) const override;
  std::vector<OperadElement> generators(int n) const override;
  GenWord factor(const OperadElement& g) const override;
  std::vector<std::pair<GenWord, GenWord>> generator_relations(int n) const override;
  std::string format(const OperadElement& g) const override;
  OperadElement parse(std::string_view text, int n) const override;

  /// delta of a single positive generator letter.
  virtual Word delta_gen(Letter l, std::span<const int> sizes) const = 0;
  virtual Letter shift(Letter l, int offset) const = 0;

 protected:
  virtual RelationSystem build_relations(int n) const = 0;

  OperadElement identity_impl(int n) const override { return element(Word{n, {}}); }
  Perm pi_impl(const OperadElement& g) const override { return word_pi(g.word(), *alphabet_); }
  OperadElement mul_impl(const OperadElement& g, const OperadElement& h) const override;
  OperadElement inv_impl(const OperadElement& g) const override;
  OperadElement beta_impl(std::span<const OperadElement> hs) const override;
  OperadElement delta_impl(const OperadElement& g, std::span<const int> sizes) const override;

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::shared_ptr<const RelationSystem>> cache_;
};

OperadPtr make_trivial();
OperadPtr make_symmetric();
/// Looks up "trivial", "sym", "braid" or "cactus"; throws InputError otherwise.
OperadPtr make_operad(std::string_view name);

}  // namespace aop
