#pragma once

#include <map>
#include <string>
#include <vector>

#include "aop/operad.hpp"
#include "json.hpp"

namespace aop {

/// A finite Lambda-multicategory given extensionally. Element names are
/// global. Actions are right actions: for a generator alpha of Lambda(n),
/// f in M(x_1..x_n; y) goes to f.alpha in M(x_{pi(alpha)(1)}..x_{pi(alpha)(n)}; y).
struct FinMulticat {
  struct Hom {
    std::vector<std::string> inputs;
    std::string output;
    std::vector<std::string> elements;
  };
  struct Composite {
    std::string outer;
    std::vector<std::string> inner;
    std::string result;
  };
  struct Action {
    int arity = 0;
    std::string generator;  // element syntax of the instance
    std::map<std::string, std::string> mapping;
  };

  std::vector<std::string> objects;
  std::vector<Hom> homs;
  std::map<std::string, std::string> identities;  // object -> element
  std::vector<Composite> compose;
  std::vector<Action> actions;
};

FinMulticat multicat_from_json(const nlohmann::json& j);
FinMulticat load_multicat(const std::string& path);
nlohmann::json multicat_to_json(const FinMulticat& m);

/// One-object multicategory of an operad with finite Lambda(n): elements
/// "n:<g>" for n <= max_arity, composition mu for every tuple with arity and
/// total arity <= max_arity, and right multiplication by each generator.
FinMulticat multicat_from_operad(const ActionOperad& inst, int max_arity);

/// The terminal Lambda-multicategory up to max_arity: one object, one element
/// "t<n>" in each arity.
FinMulticat terminal_multicat(const ActionOperad& inst, int max_arity);

struct Violation {
  std::string kind;     // signature, identity, unit, associativity, equivariance, action, relation
  std::string witness;
};

struct ValidationReport {
  std::size_t checks = 0;
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
};

/// Unit laws, associativity over listed triples, both equivariance laws
///   f(g.alpha) = f(g).beta(e..alpha..e)
///   (f.alpha)(g) = f(g_{pi(alpha)^-1(1)}..g_{pi(alpha)^-1(n)}).delta(alpha; k)
/// over listed generators, bijectivity of action maps and compatibility with
/// the instance's defining relations. Unlisted composites are not required.
ValidationReport validate_multicat(const FinMulticat& m, const ActionOperad& inst);

struct FinMultifunctor {
  std::map<std::string, std::string> objects;
  std::map<std::string, std::string> elements;
};

FinMultifunctor multifunctor_from_json(const nlohmann::json& j);
FinMultifunctor identity_multifunctor(const FinMulticat& m);

/// Signatures, identities, listed composites and F(f.alpha) = F(f).alpha.
ValidationReport validate_multifunctor(const FinMultifunctor& f, const FinMulticat& from,
                                       const FinMulticat& to, const ActionOperad& inst);

std::string format_validation(const ValidationReport& r);

}  // namespace aop
