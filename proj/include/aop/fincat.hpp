#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace aop {

/// A finite category given by tables. Objects and morphisms are addressed by
/// index; names are kept for I/O.
struct FinCat {
  struct Morphism {
    std::string name;
    int src = 0;
    int tgt = 0;
  };

  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::vector<int> identities;           // per object
  std::vector<std::vector<int>> table;   // table[g][f] = g o f, -1 when not composable

  int object_count() const { return static_cast<int>(objects.size()); }
  int morphism_count() const { return static_cast<int>(morphisms.size()); }
  int src(int m) const { return morphisms[static_cast<std::size_t>(m)].src; }
  int tgt(int m) const { return morphisms[static_cast<std::size_t>(m)].tgt; }
  int id(int x) const { return identities[static_cast<std::size_t>(x)]; }
  /// g o f; throws InputError if not composable.
  int compose(int g, int f) const;
  /// Morphisms x -> y in index order.
  std::vector<int> hom(int x, int y) const;

  int object(std::string_view name) const;  // throws InputError
  int morphism(std::string_view name) const;
  const std::string& object_name(int x) const { return objects[static_cast<std::size_t>(x)]; }
  const std::string& morphism_name(int m) const { return morphisms[static_cast<std::size_t>(m)].name; }
};

/// Parses and validates {objects, morphisms:[{id,src,tgt}], identities:{obj:mor},
/// compose:[[g,f,gf]]}. Composition must be listed for every composable pair;
/// unit and associativity laws are checked and the first failure is reported.
FinCat fincat_from_json(const nlohmann::json& j);
FinCat load_fincat(const std::string& path);
nlohmann::json fincat_to_json(const FinCat& c);

/// Throws InputError describing the first violated law.
void validate_fincat(const FinCat& c);

FinCat discrete_category(const std::vector<std::string>& names);
/// One object whose endomorphisms form Z/order, named "<object>^i" (i = 0 is the identity).
FinCat cyclic_group_category(const std::string& object, int order);
/// Objects 0..n-1 with exactly one morphism between any two (the translation
/// category of an n-element set).
FinCat chaotic_category(const std::vector<std::string>& names);

/// A functor between finite categories, by object and morphism tables.
struct FinFunctor {
  std::vector<int> on_objects;
  std::vector<int> on_morphisms;
};

/// Throws InputError unless F preserves sources, targets, identities and composition.
void validate_functor(const FinFunctor& f, const FinCat& from, const FinCat& to);

}  // namespace aop
