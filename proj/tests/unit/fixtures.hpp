#pragma once
// Small categories, functors and multicategory mutations shared by the unit
// and acceptance tests.

#include <string>
#include <vector>

#include "aop/error.hpp"
#include "aop/fincat.hpp"
#include "aop/multicat.hpp"
#include "aop/operad.hpp"
#include "aop/profunctor.hpp"

namespace fixture {

/// The total order 0 < 1 < .. < n-1; morphism "i<=j".
inline aop::FinCat chain(int n) {
  aop::FinCat c;
  std::vector<std::vector<int>> id(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) c.objects.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      id[i][j] = static_cast<int>(c.morphisms.size());
      c.morphisms.push_back({std::to_string(i) + "<=" + std::to_string(j), i, j});
    }
  for (int i = 0; i < n; ++i) c.identities.push_back(id[i][i]);
  c.table.assign(c.morphisms.size(), std::vector<int>(c.morphisms.size(), -1));
  for (const auto& g : c.morphisms)
    for (const auto& f : c.morphisms)
      if (g.src == f.tgt) c.table[id[g.src][g.tgt]][id[f.src][f.tgt]] = id[f.src][g.tgt];
  aop::validate_fincat(c);
  return c;
}

/// The functor of a monotone object map between chains.
inline aop::FinFunctor chain_map(const aop::FinCat& from, const aop::FinCat& to, std::vector<int> objects) {
  aop::FinFunctor g;
  g.on_objects = objects;
  for (const auto& m : from.morphisms)
    g.on_morphisms.push_back(to.morphism(std::to_string(objects[m.src]) + "<=" + std::to_string(objects[m.tgt])));
  aop::validate_functor(g, from, to);
  return g;
}

/// 0 <= 1 to Z/order, sending the arrow to the generator.
inline aop::FinFunctor arrow_to_cyclic(const aop::FinCat& arrow, const aop::FinCat& cyc) {
  aop::FinFunctor g;
  g.on_objects = {0, 0};
  for (const auto& m : arrow.morphisms) g.on_morphisms.push_back(m.src == m.tgt ? cyc.id(0) : 1);
  aop::validate_functor(g, arrow, cyc);
  return g;
}

/// Discrete {p,q,r} onto chaotic {u,v}: p,q -> u, r -> v.
inline aop::FinFunctor discrete_to_chaotic(const aop::FinCat& d, const aop::FinCat& ch) {
  aop::FinFunctor g;
  g.on_objects = {0, 0, 1};
  for (int x = 0; x < 3; ++x) g.on_morphisms.push_back(ch.id(g.on_objects[x]));
  aop::validate_functor(g, d, ch);
  return g;
}

struct FunctorFixture {
  std::string label;
  aop::FinCat x, y;
  aop::FinFunctor g;
};

inline std::vector<FunctorFixture> functor_fixtures() {
  std::vector<FunctorFixture> out;
  {
    auto x = chain(2), y = chain(3);
    auto g = chain_map(x, y, {0, 2});
    out.push_back({"chain2->chain3", x, y, g});
  }
  {
    auto x = chain(2), y = aop::cyclic_group_category("c", 2);
    auto g = arrow_to_cyclic(x, y);
    out.push_back({"arrow->Z/2", x, y, g});
  }
  {
    auto x = aop::discrete_category({"p", "q", "r"}), y = aop::chaotic_category({"u", "v"});
    auto g = discrete_to_chaotic(x, y);
    out.push_back({"discrete3->chaotic2", x, y, g});
  }
  return out;
}

struct Mutation {
  std::string label;
  aop::FinMulticat m;
};

inline const std::vector<std::string>& hom_of(const aop::FinMulticat& m, const std::string& element) {
  for (const auto& h : m.homs)
    for (const auto& e : h.elements)
      if (e == element) return h.elements;
  throw aop::InputError("no element " + element);
}

inline std::string next_in_hom(const aop::FinMulticat& m, const std::string& element) {
  const auto& es = hom_of(m, element);
  for (std::size_t i = 0; i < es.size(); ++i)
    if (es[i] == element) return es[(i + 1) % es.size()];
  return element;
}

/// Ten single-entry changes of a one-object multicategory built from an
/// operad with max arity >= 3: four composites, three actions, three identities.
inline std::vector<Mutation> single_entry_mutations(const aop::FinMulticat& base) {
  std::vector<Mutation> out;
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < base.compose.size(); ++i)
    if (hom_of(base, base.compose[i].result).size() > 1) candidates.push_back(i);
  for (int k = 0; k < 4; ++k) {
    const std::size_t i = candidates[candidates.size() * static_cast<std::size_t>(2 * k + 1) / 8];
    Mutation mu{"composite " + base.compose[i].outer + "(...) changed", base};
    mu.m.compose[i].result = next_in_hom(base, base.compose[i].result);
    out.push_back(std::move(mu));
  }
  std::vector<std::size_t> acts;
  for (std::size_t i = 0; i < base.actions.size(); ++i)
    if (base.actions[i].mapping.size() > 1) acts.push_back(i);
  {
    // two images exchanged: still a bijection
    Mutation mu{"action images swapped", base};
    auto& mp = mu.m.actions[acts.front()].mapping;
    auto a = mp.begin(), b = std::next(mp.begin());
    std::swap(a->second, b->second);
    out.push_back(std::move(mu));
  }
  {
    Mutation mu{"action image redirected", base};
    auto& mp = mu.m.actions[acts.back()].mapping;
    mp.begin()->second = std::next(mp.begin())->second;
    out.push_back(std::move(mu));
  }
  {
    Mutation mu{"action made trivial on one element", base};
    auto& mp = mu.m.actions[acts.back()].mapping;
    auto it = std::next(mp.begin(), 2);
    const std::string self = it->first;
    const std::string old = it->second;
    // keep a bijection: whoever mapped to self now maps to old
    for (auto& [k, v] : mp)
      if (v == self) v = old;
    it->second = self;
    out.push_back(std::move(mu));
  }
  const std::string obj = base.objects.front();
  {
    Mutation mu{"identity points at a binary arrow", base};
    mu.m.identities[obj] = base.homs[2].elements.back();
    out.push_back(std::move(mu));
  }
  {
    Mutation mu{"identity points at a constant", base};
    mu.m.identities[obj] = base.homs[0].elements.front();
    out.push_back(std::move(mu));
  }
  {
    Mutation mu{"identity removed", base};
    mu.m.identities.erase(obj);
    out.push_back(std::move(mu));
  }
  return out;
}

}  // namespace fixture
