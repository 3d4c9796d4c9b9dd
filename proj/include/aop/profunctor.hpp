#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "aop/borel.hpp"
#include "aop/fincat.hpp"
#include "aop/operad.hpp"
#include "json.hpp"

namespace aop {

/// A finite profunctor F : X -|-> Y, i.e. a functor Y^op x X -> Sets. Each
/// element lives in one F(y, x).
struct FinProf {
  struct Element {
    std::string name;
    int y = 0;  // object of target
    int x = 0;  // object of source
  };

  FinCat source;  // X
  FinCat target;  // Y
  std::vector<Element> elements;
  /// source_action[m][e] = F(y, m)(e) for m : x -> x' in X, -1 unless src(m) = x(e).
  std::vector<std::vector<int>> source_action;
  /// target_action[h][e] = F(h, x)(e) for h : y' -> y in Y, -1 unless tgt(h) = y(e).
  std::vector<std::vector<int>> target_action;

  int size() const { return static_cast<int>(elements.size()); }
  std::vector<int> value(int y, int x) const;
};

/// Throws InputError unless actions are well typed and functorial and the
/// two actions commute.
void validate_prof(const FinProf& f);

/// {source, target, elements:[{id, target, source}], source_action:[[m,e,e']],
///  target_action:[[h,e,e']]} with every defined action listed.
FinProf prof_from_json(const nlohmann::json& j);
FinProf load_prof(const std::string& path);
nlohmann::json prof_to_json(const FinProf& f);

/// {objects:{a:b}, morphisms:{f:g}}.
FinFunctor functor_from_json(const nlohmann::json& j, const FinCat& from, const FinCat& to);

/// C(-, -) : C -|-> C, elements named after morphisms.
FinProf identity_prof(const FinCat& c);
/// G+ (y, x) = Y(y, G x), elements named "u@x".
FinProf representable_prof(const FinFunctor& g, const FinCat& x, const FinCat& y);

struct ProfComposite {
  FinProf value;
  /// Members (t, s) of each class; t in G, s in F.
  std::vector<std::vector<std::pair<int, int>>> classes;
};

/// (G o F)(z, x) = coend over y of G(z, y) x F(y, x): pairs modulo
/// (G(z,h) t, s) ~ (t, F(h,x) s). Throws InputError if G.source differs from F.target.
ProfComposite prof_compose(const FinProf& g, const FinProf& f);

struct ProfIso {
  std::vector<int> forward;  // element of the first profunctor -> element of the second
  std::string failure;       // empty when a natural bijection

  bool ok() const { return failure.empty(); }
};

/// Checks that forward is a bijection preserving value sets and both actions.
ProfIso check_prof_iso(const FinProf& a, const FinProf& b, std::vector<int> forward);
/// (I o F) -> F, [(h, s)] |-> F(h, x) s.
ProfIso left_unitor(const ProfComposite& composite, const FinProf& f);
/// (F o I) -> F, [(t, m)] |-> F(y, m) t.
ProfIso right_unitor(const ProfComposite& composite, const FinProf& f);

/// The arity-n part of the Borel construction on X as a finite category.
struct BorelCategory {
  int arity = 0;
  FinCat cat;
  std::vector<BorelObject> objects;
  std::vector<BorelMorphism> morphisms;
  std::vector<OperadElement> group;  // inst.enumerate(arity)

  /// Index of an object or morphism; -1 if absent.
  int find(const BorelObject& x) const;
  int group_index(const OperadElement& g, const ActionOperad& inst) const;
  int locate(const BorelMorphism& m, const ActionOperad& inst) const;

 private:
  friend BorelCategory borel_category(const FinCat&, const ActionOperad&, int);
  std::map<BorelObject, int> object_index_;
  std::map<std::tuple<int, int, int, std::vector<int>>, int> morphism_index_;
};

/// Throws InputError when Lambda(n) is infinite.
BorelCategory borel_category(const FinCat& x, const ActionOperad& inst, int n);
/// E Lambda G on the arity-n parts: [e; x] |-> [e; G x], (g, f) |-> (g, G f).
FinFunctor borel_functor(const FinFunctor& g, const BorelCategory& ex, const BorelCategory& ey,
                         const ActionOperad& inst);

/// The lifted value set at ([e; y], [e; x]): pairs (g, (s_i)) with
/// s_i in F(y_i, x_{pi(g)(i)}), g over inst.domain(n, bound). Empty when the arities differ.
std::vector<std::pair<OperadElement, std::vector<int>>> lift_value(const FinProf& f, const ActionOperad& inst,
                                                                   const BorelObject& y, const BorelObject& x,
                                                                   int bound = 2);

struct LiftedProf {
  BorelCategory source;  // E Lambda X, arity n
  BorelCategory target;  // E Lambda Y, arity n
  FinProf value;
  std::vector<std::pair<OperadElement, std::vector<int>>> data;  // per element
};

/// The lift of F between the arity-n Borel categories. Throws InputError when
/// Lambda(n) is infinite.
LiftedProf lift_prof(const FinProf& f, const ActionOperad& inst, int n);

/// lift(G+) against (E Lambda G)+ at arity n, with the explicit bijection.
ProfIso check_lift_representable(const FinFunctor& g, const FinCat& x, const FinCat& y,
                                 const ActionOperad& inst, int n);

}  // namespace aop
