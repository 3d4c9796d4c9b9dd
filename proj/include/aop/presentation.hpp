#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "aop/operad.hpp"
#include "json.hpp"

namespace aop {

/// A generator of a collection over the symmetric groups.
struct Generator {
  std::string name;
  int arity = 0;
  Perm pi;
};

class GeneratorCollection {
 public:
  void add(Generator g);  // throws InputError on duplicate names or arity mismatch
  const Generator& at(std::string_view name) const;  // throws InputError
  bool contains(std::string_view name) const;
  const std::vector<Generator>& all() const { return gens_; }

 private:
  std::vector<Generator> gens_;
};

/// Unreduced terms of the free action operad on a collection.
struct Term {
  enum class Kind { Gen, Id, Mul, Inv, Beta, Delta };
  Kind kind = Kind::Id;
  std::string name;                        // Gen
  int n = 0;                               // Id
  std::vector<std::shared_ptr<const Term>> args;  // Mul: 2, Inv: 1, Beta: any, Delta: 1
  std::vector<int> sizes;                  // Delta

  static Term gen(std::string name);
  static Term id(int n);
  static Term mul(Term a, Term b);
  static Term inv(Term a);
  static Term beta(std::vector<Term> parts);
  static Term delta(Term a, std::vector<int> sizes);
};

/// Syntax: gen(name), id(n), mul(t,t), inv(t), beta(t,...), delta(t;[k,...]).
Term parse_term(std::string_view text);
std::string format_term(const Term& t);

/// Arity of a well-formed term; throws InputError otherwise.
int term_arity(const Term& t, const GeneratorCollection& gens);
/// Underlying permutation, computed in the symmetric groups.
Perm term_pi(const Term& t, const GeneratorCollection& gens);

using Interpretation = std::map<std::string, OperadElement>;

/// Throws InputError unless every generator is interpreted by an element of
/// its arity with the same underlying permutation.
void check_interpretation(const GeneratorCollection& gens, const Interpretation& interp, const ActionOperad& inst);
/// Reads {name: element text} in the instance's syntax and checks it.
Interpretation parse_interpretation(const std::map<std::string, std::string>& text, const GeneratorCollection& gens,
                                    const ActionOperad& inst);

/// Homomorphic evaluation; checks the interpretation first.
OperadElement eval_term(const Term& t, const GeneratorCollection& gens, const Interpretation& interp,
                        const ActionOperad& inst);

struct Presentation {
  struct Relation {
    Term lhs;
    Term rhs;
  };
  GeneratorCollection generators;
  std::vector<Relation> relations;
  /// Optional interpretations per instance name, element text by generator.
  std::map<std::string, std::map<std::string, std::string>> interpretations;
};

/// Rejects relations whose sides differ in arity or underlying permutation.
void check_relations(const Presentation& p);
/// {generators:[{name, arity, pi}], relations:[{lhs, rhs}], interpretations:{instance:{name: element}}}.
Presentation presentation_from_json(const nlohmann::json& j);
Presentation load_presentation(const std::string& path);
nlohmann::json presentation_to_json(const Presentation& p);

/// Coboundary presentation: s with pi = (12), s s = e and
/// delta(s;[1,2]) beta(e1,s) = delta(s;[2,1]) beta(s,e1).
Presentation coboundary_presentation();
/// Symmetric presentation: s s = e, the braid relation and the two hexagons
/// delta(s;[1,2]) = beta(e1,s) beta(s,e1), delta(s;[2,1]) = beta(s,e1) beta(e1,s).
Presentation symmetric_presentation();

struct RelationCheck {
  std::string lhs;
  std::string rhs;
  EqResult result;
};

struct PresentationReport {
  std::string operad;
  std::vector<RelationCheck> rows;

  bool holds() const;          // no Distinct, no Inconclusive
  bool refuted() const;        // some Distinct
  bool inconclusive() const;   // some Inconclusive
};

PresentationReport check_presentation(const Presentation& p, const Interpretation& interp, const ActionOperad& inst,
                                      SearchBounds bounds = {});
std::string format_presentation_report(const PresentationReport& r, const ActionOperad& inst);

}  // namespace aop
