#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aop/perm.hpp"

namespace aop {

/// A generator letter. `gen` is an alphabet-specific id that does not depend
/// on the ambient arity, so shifting a letter into a larger arity is cheap.
struct Letter {
  int gen = 0;
  int sign = 1;

  Letter inverse() const { return {gen, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Generator alphabet of a finitely presented group family.
class Alphabet {
 public:
  virtual ~Alphabet() = default;

  virtual std::string name() const = 0;
  /// Involutive generators never carry sign -1.
  virtual bool involutive(int gen) const = 0;
  virtual bool valid(int gen, int arity) const = 0;
  /// Generators usable at this arity, in canonical order.
  virtual std::vector<int> generators(int arity) const = 0;
  virtual Perm letter_pi(int gen, int arity) const = 0;
  virtual std::string format(Letter l) const = 0;
  /// Parses one token such as "s(1,2)" or "B3"; nullopt if not a letter.
  virtual std::optional<Letter> parse(std::string_view token) const = 0;
};

struct Word {
  int arity = 0;
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
};

Word concat(const Word& a, const Word& b);

/// Inverse element: reversed word; signs flip only for non-involutive letters.
Word inverse(const Word& w, const Alphabet& alphabet);

struct Relation {
  Word lhs;
  Word rhs;
  std::string label;
};

/// A function into a structure with decidable equality, rendered as text.
struct Invariant {
  std::string name;
  std::function<std::string(const Word&)> eval;
};

struct RelationSystem {
  int arity = 0;
  std::shared_ptr<const Alphabet> alphabet;
  std::vector<Relation> relations;  // unoriented
  std::vector<Invariant> invariants;
};

/// One replayable rewrite step.
struct RewriteStep {
  enum class Kind { Apply, Cancel, Insert };
  Kind kind = Kind::Apply;
  int relation = -1;     // Apply only
  bool forward = true;   // Apply: lhs -> rhs when true
  int pos = 0;           // 0-indexed letter position
  Letter letter{};       // Cancel/Insert: the first letter of the pair

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

struct EqResult {
  enum class Verdict { Equal, Distinct, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::string invariant;             // separating invariant for Distinct
  std::vector<RewriteStep> path;     // w1 -> w2 for Equal
  std::size_t states = 0;            // words visited by the search

  bool is_equal() const { return verdict == Verdict::Equal; }
};

struct SearchBounds {
  std::size_t max_len = 0;  // 0 selects max(|w1|,|w2|) + 6
  std::size_t budget = 100000;
};

/// Throws InputError if any letter is invalid at the word's arity.
void check_word(const Word& w, const Alphabet& alphabet);

/// Removes adjacent x x^-1 pairs (x x for involutive letters).
Word free_reduce(const Word& w, const Alphabet& alphabet);

/// Sound semidecision for equality of w1 and w2 in the group presented by sys.
/// Equal always carries a path accepted by replay(); Distinct names an
/// invariant that differs; otherwise Inconclusive.
EqResult equal(const Word& w1, const Word& w2, const RelationSystem& sys,
               SearchBounds bounds = {});

/// Applies `path` to `from`; returns the final word, or nullopt (with a reason
/// in `error`) if some step is not a legal relation application or free
/// cancellation/insertion.
std::optional<Word> replay(const Word& from, const std::vector<RewriteStep>& path,
                           const RelationSystem& sys, std::string* error = nullptr);

/// Relations on which some invariant is not constant, as (invariant, relation).
std::vector<std::pair<std::string, int>> invariant_violations(const RelationSystem& sys);

std::string format_word(const Word& w, const Alphabet& alphabet);
/// Whitespace-separated letters or "e"; validates letters against `arity`.
Word parse_word(std::string_view text, int arity, const Alphabet& alphabet);

Perm word_pi(const Word& w, const Alphabet& alphabet);

std::string format_step(const RewriteStep& s, const Alphabet& alphabet);
std::string format_path(const std::vector<RewriteStep>& path, const Alphabet& alphabet);
std::vector<RewriteStep> parse_path(std::string_view text, const Alphabet& alphabet);

std::string to_string(EqResult::Verdict v);

}  // namespace aop
