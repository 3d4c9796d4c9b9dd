#include "aop/fincat.hpp"

#include <fstream>
#include <map>

#include "aop/error.hpp"

namespace aop {

int FinCat::compose(int g, int f) const {
  const int r = table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
  if (r < 0) throw InputError("cannot compose " + morphism_name(g) + " o " + morphism_name(f));
  return r;
}

std::vector<int> FinCat::hom(int x, int y) const {
  std::vector<int> out;
  for (int m = 0; m < morphism_count(); ++m)
    if (src(m) == x && tgt(m) == y) out.push_back(m);
  return out;
}

int FinCat::object(std::string_view name) const {
  for (int i = 0; i < object_count(); ++i)
    if (objects[static_cast<std::size_t>(i)] == name) return i;
  throw InputError("unknown object '" + std::string(name) + "'");
}

int FinCat::morphism(std::string_view name) const {
  for (int i = 0; i < morphism_count(); ++i)
    if (morphisms[static_cast<std::size_t>(i)].name == name) return i;
  throw InputError("unknown morphism '" + std::string(name) + "'");
}

void validate_fincat(const FinCat& c) {
  const int M = c.morphism_count();
  if (static_cast<int>(c.identities.size()) != c.object_count())
    throw InputError("every object needs an identity");
  for (int x = 0; x < c.object_count(); ++x) {
    const int i = c.id(x);
    if (i < 0 || i >= M || c.src(i) != x || c.tgt(i) != x)
      throw InputError("identity of " + c.object_name(x) + " is not an endomorphism of it");
  }
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f) {
      const int gf = c.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
      if (c.src(g) != c.tgt(f)) {
        if (gf >= 0)
          throw InputError("composite listed for non-composable pair " + c.morphism_name(g) + " o " +
                           c.morphism_name(f));
        continue;
      }
      if (gf < 0)
        throw InputError("missing composite " + c.morphism_name(g) + " o " + c.morphism_name(f));
      if (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g))
        throw InputError("composite " + c.morphism_name(g) + " o " + c.morphism_name(f) +
                         " has the wrong source or target");
    }
  for (int f = 0; f < M; ++f) {
    if (c.compose(c.id(c.tgt(f)), f) != f || c.compose(f, c.id(c.src(f))) != f)
      throw InputError("unit law fails at " + c.morphism_name(f));
  }
  for (int h = 0; h < M; ++h)
    for (int g = 0; g < M; ++g) {
      if (c.src(h) != c.tgt(g)) continue;
      for (int f = 0; f < M; ++f) {
        if (c.src(g) != c.tgt(f)) continue;
        if (c.compose(c.compose(h, g), f) != c.compose(h, c.compose(g, f)))
          throw InputError("associativity fails at (" + c.morphism_name(h) + ", " +
                           c.morphism_name(g) + ", " + c.morphism_name(f) + ")");
      }
    }
}

FinCat fincat_from_json(const nlohmann::json& j) {
  FinCat c;
  try {
    std::map<std::string, int> obj, mor;
    for (const auto& o : j.at("objects")) {
      const std::string name = o.get<std::string>();
      if (!obj.emplace(name, c.object_count()).second) throw InputError("duplicate object " + name);
      c.objects.push_back(name);
    }
    auto lookup = [](const std::map<std::string, int>& m, const std::string& k, const char* what) {
      const auto it = m.find(k);
      if (it == m.end()) throw InputError(std::string("unknown ") + what + " '" + k + "'");
      return it->second;
    };
    for (const auto& m : j.at("morphisms")) {
      const std::string name = m.at("id").get<std::string>();
      if (!mor.emplace(name, c.morphism_count()).second) throw InputError("duplicate morphism " + name);
      c.morphisms.push_back({name, lookup(obj, m.at("src").get<std::string>(), "object"),
                             lookup(obj, m.at("tgt").get<std::string>(), "object")});
    }
    c.identities.assign(c.objects.size(), -1);
    for (const auto& [o, m] : j.at("identities").items())
      c.identities[static_cast<std::size_t>(lookup(obj, o, "object"))] =
          lookup(mor, m.get<std::string>(), "morphism");
    for (std::size_t x = 0; x < c.identities.size(); ++x)
      if (c.identities[x] < 0) throw InputError("object " + c.objects[x] + " has no identity");
    c.table.assign(c.morphisms.size(), std::vector<int>(c.morphisms.size(), -1));
    for (const auto& row : j.at("compose")) {
      if (!row.is_array() || row.size() != 3) throw InputError("compose entries are [g, f, gf]");
      const int g = lookup(mor, row[0].get<std::string>(), "morphism");
      const int f = lookup(mor, row[1].get<std::string>(), "morphism");
      const int gf = lookup(mor, row[2].get<std::string>(), "morphism");
      int& slot = c.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
      if (slot >= 0 && slot != gf)
        throw InputError("conflicting composites for " + c.morphism_name(g) + " o " + c.morphism_name(f));
      slot = gf;
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed category: ") + e.what());
  }
  validate_fincat(c);
  return c;
}

FinCat load_fincat(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return fincat_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

nlohmann::json fincat_to_json(const FinCat& c) {
  nlohmann::ordered_json j;
  j["objects"] = c.objects;
  j["morphisms"] = nlohmann::ordered_json::array();
  for (const auto& m : c.morphisms)
    j["morphisms"].push_back({{"id", m.name}, {"src", c.object_name(m.src)}, {"tgt", c.object_name(m.tgt)}});
  j["identities"] = nlohmann::ordered_json::object();
  for (int x = 0; x < c.object_count(); ++x) j["identities"][c.object_name(x)] = c.morphism_name(c.id(x));
  j["compose"] = nlohmann::ordered_json::array();
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f) {
      const int gf = c.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)];
      if (gf >= 0) j["compose"].push_back({c.morphism_name(g), c.morphism_name(f), c.morphism_name(gf)});
    }
  return j;
}

FinCat discrete_category(const std::vector<std::string>& names) {
  FinCat c;
  c.objects = names;
  for (int x = 0; x < static_cast<int>(names.size()); ++x) {
    c.morphisms.push_back({"id_" + names[static_cast<std::size_t>(x)], x, x});
    c.identities.push_back(x);
  }
  c.table.assign(names.size(), std::vector<int>(names.size(), -1));
  for (std::size_t x = 0; x < names.size(); ++x) c.table[x][x] = static_cast<int>(x);
  validate_fincat(c);
  return c;
}

FinCat cyclic_group_category(const std::string& object, int order) {
  if (order < 1) throw InputError("group order must be positive");
  FinCat c;
  c.objects = {object};
  for (int i = 0; i < order; ++i) c.morphisms.push_back({object + "^" + std::to_string(i), 0, 0});
  c.identities = {0};
  c.table.assign(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      c.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % order;
  validate_fincat(c);
  return c;
}

FinCat chaotic_category(const std::vector<std::string>& names) {
  FinCat c;
  c.objects = names;
  const int n = static_cast<int>(names.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      c.morphisms.push_back({names[static_cast<std::size_t>(x)] + "->" + names[static_cast<std::size_t>(y)], x, y});
  for (int x = 0; x < n; ++x) c.identities.push_back(x * n + x);
  c.table.assign(c.morphisms.size(), std::vector<int>(c.morphisms.size(), -1));
  for (int g = 0; g < n * n; ++g)
    for (int f = 0; f < n * n; ++f)
      if (g / n == f % n) c.table[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = (f / n) * n + g % n;
  validate_fincat(c);
  return c;
}

void validate_functor(const FinFunctor& F, const FinCat& from, const FinCat& to) {
  if (static_cast<int>(F.on_objects.size()) != from.object_count() ||
      static_cast<int>(F.on_morphisms.size()) != from.morphism_count())
    throw InputError("functor tables do not cover the source category");
  for (int x : F.on_objects)
    if (x < 0 || x >= to.object_count()) throw InputError("functor object image out of range");
  for (int m = 0; m < from.morphism_count(); ++m) {
    const int fm = F.on_morphisms[static_cast<std::size_t>(m)];
    if (fm < 0 || fm >= to.morphism_count()) throw InputError("functor morphism image out of range");
    if (to.src(fm) != F.on_objects[static_cast<std::size_t>(from.src(m))] ||
        to.tgt(fm) != F.on_objects[static_cast<std::size_t>(from.tgt(m))])
      throw InputError("functor breaks source/target at " + from.morphism_name(m));
  }
  for (int x = 0; x < from.object_count(); ++x)
    if (F.on_morphisms[static_cast<std::size_t>(from.id(x))] != to.id(F.on_objects[static_cast<std::size_t>(x)]))
      throw InputError("functor does not preserve the identity of " + from.object_name(x));
  for (int g = 0; g < from.morphism_count(); ++g)
    for (int f = 0; f < from.morphism_count(); ++f) {
      if (from.src(g) != from.tgt(f)) continue;
      if (F.on_morphisms[static_cast<std::size_t>(from.compose(g, f))] !=
          to.compose(F.on_morphisms[static_cast<std::size_t>(g)], F.on_morphisms[static_cast<std::size_t>(f)]))
        throw InputError("functor does not preserve " + from.morphism_name(g) + " o " + from.morphism_name(f));
    }
}

}  // namespace aop
