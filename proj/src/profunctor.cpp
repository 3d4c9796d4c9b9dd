#include "aop/profunctor.hpp"

#include <fstream>
#include <map>
#include <numeric>

#include "aop/error.hpp"

namespace aop {

using nlohmann::json;

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    // keep the smaller index as root so class representatives are stable
    if (a < b) std::swap(a, b);
    parent[static_cast<std::size_t>(a)] = b;
  }
};

std::size_t u(int i) { return static_cast<std::size_t>(i); }

bool same_category(const FinCat& a, const FinCat& b) {
  if (a.objects != b.objects || a.identities != b.identities || a.table != b.table) return false;
  if (a.morphisms.size() != b.morphisms.size()) return false;
  for (std::size_t i = 0; i < a.morphisms.size(); ++i)
    if (a.morphisms[i].name != b.morphisms[i].name || a.morphisms[i].src != b.morphisms[i].src ||
        a.morphisms[i].tgt != b.morphisms[i].tgt)
      return false;
  return true;
}

std::vector<std::vector<int>> empty_actions(const FinCat& c, int elements) {
  return std::vector<std::vector<int>>(c.morphisms.size(), std::vector<int>(u(elements), -1));
}

}  // namespace

std::vector<int> FinProf::value(int y, int x) const {
  std::vector<int> out;
  for (int e = 0; e < size(); ++e)
    if (elements[u(e)].y == y && elements[u(e)].x == x) out.push_back(e);
  return out;
}

void validate_prof(const FinProf& F) {
  const FinCat& X = F.source;
  const FinCat& Y = F.target;
  const int E = F.size();
  if (F.source_action.size() != X.morphisms.size() || F.target_action.size() != Y.morphisms.size())
    throw InputError("profunctor: action tables do not cover the categories");
  for (const auto& e : F.elements)
    if (e.x < 0 || e.x >= X.object_count() || e.y < 0 || e.y >= Y.object_count())
      throw InputError("profunctor: element " + e.name + " sits at an unknown object");
  auto name = [&](int e) { return F.elements[u(e)].name; };

  std::vector<std::vector<int>> at_x(u(X.object_count())), at_y(u(Y.object_count()));
  for (int e = 0; e < E; ++e) {
    at_x[u(F.elements[u(e)].x)].push_back(e);
    at_y[u(F.elements[u(e)].y)].push_back(e);
  }

  for (int m = 0; m < X.morphism_count(); ++m) {
    if (static_cast<int>(F.source_action[u(m)].size()) != E) throw InputError("profunctor: short action row");
    for (int e = 0; e < E; ++e) {
      const int r = F.source_action[u(m)][u(e)];
      const auto& el = F.elements[u(e)];
      if (el.x != X.src(m)) {
        if (r >= 0) throw InputError("profunctor: " + X.morphism_name(m) + " acts on " + name(e) + " of the wrong object");
        continue;
      }
      if (r < 0 || r >= E) throw InputError("profunctor: missing action of " + X.morphism_name(m) + " on " + name(e));
      if (F.elements[u(r)].x != X.tgt(m) || F.elements[u(r)].y != el.y)
        throw InputError("profunctor: " + X.morphism_name(m) + " . " + name(e) + " lands in the wrong set");
    }
  }
  for (int h = 0; h < Y.morphism_count(); ++h) {
    if (static_cast<int>(F.target_action[u(h)].size()) != E) throw InputError("profunctor: short action row");
    for (int e = 0; e < E; ++e) {
      const int r = F.target_action[u(h)][u(e)];
      const auto& el = F.elements[u(e)];
      if (el.y != Y.tgt(h)) {
        if (r >= 0) throw InputError("profunctor: " + Y.morphism_name(h) + " acts on " + name(e) + " of the wrong object");
        continue;
      }
      if (r < 0 || r >= E) throw InputError("profunctor: missing action of " + Y.morphism_name(h) + " on " + name(e));
      if (F.elements[u(r)].y != Y.src(h) || F.elements[u(r)].x != el.x)
        throw InputError("profunctor: " + name(e) + " . " + Y.morphism_name(h) + " lands in the wrong set");
    }
  }

  for (int x = 0; x < X.object_count(); ++x)
    for (int e : at_x[u(x)])
      if (F.source_action[u(X.id(x))][u(e)] != e)
        throw InputError("profunctor: identity of " + X.object_name(x) + " moves " + name(e));
  for (int y = 0; y < Y.object_count(); ++y)
    for (int e : at_y[u(y)])
      if (F.target_action[u(Y.id(y))][u(e)] != e)
        throw InputError("profunctor: identity of " + Y.object_name(y) + " moves " + name(e));

  for (int g = 0; g < X.morphism_count(); ++g)
    for (int f = 0; f < X.morphism_count(); ++f) {
      const int gf = X.table[u(g)][u(f)];
      if (gf < 0) continue;
      for (int e : at_x[u(X.src(f))])
        if (F.source_action[u(gf)][u(e)] != F.source_action[u(g)][u(F.source_action[u(f)][u(e)])])
          throw InputError("profunctor: action of " + X.morphism_name(g) + " o " + X.morphism_name(f) +
                           " on " + name(e) + " is not functorial");
    }
  for (int g = 0; g < Y.morphism_count(); ++g)
    for (int f = 0; f < Y.morphism_count(); ++f) {
      const int gf = Y.table[u(g)][u(f)];
      if (gf < 0) continue;
      for (int e : at_y[u(Y.tgt(g))])
        if (F.target_action[u(gf)][u(e)] != F.target_action[u(f)][u(F.target_action[u(g)][u(e)])])
          throw InputError("profunctor: action of " + Y.morphism_name(g) + " o " + Y.morphism_name(f) +
                           " on " + name(e) + " is not functorial");
    }

  for (int e = 0; e < E; ++e)
    for (int m = 0; m < X.morphism_count(); ++m) {
      const int me = F.source_action[u(m)][u(e)];
      if (me < 0) continue;
      for (int h = 0; h < Y.morphism_count(); ++h) {
        const int he = F.target_action[u(h)][u(e)];
        if (he < 0) continue;
        if (F.target_action[u(h)][u(me)] != F.source_action[u(m)][u(he)])
          throw InputError("profunctor: actions of " + X.morphism_name(m) + " and " + Y.morphism_name(h) +
                           " do not commute on " + name(e));
      }
    }
}

FinProf prof_from_json(const json& j) {
  FinProf F;
  try {
    F.source = fincat_from_json(j.at("source"));
    F.target = fincat_from_json(j.at("target"));
    std::map<std::string, int> ids;
    for (const auto& e : j.at("elements")) {
      FinProf::Element el{e.at("id").get<std::string>(), F.target.object(e.at("target").get<std::string>()),
                          F.source.object(e.at("source").get<std::string>())};
      if (!ids.emplace(el.name, F.size()).second) throw InputError("duplicate profunctor element " + el.name);
      F.elements.push_back(std::move(el));
    }
    auto elem = [&](const json& v) {
      auto it = ids.find(v.get<std::string>());
      if (it == ids.end()) throw InputError("unknown profunctor element '" + v.get<std::string>() + "'");
      return it->second;
    };
    F.source_action = empty_actions(F.source, F.size());
    F.target_action = empty_actions(F.target, F.size());
    for (const auto& row : j.value("source_action", json::array())) {
      if (!row.is_array() || row.size() != 3) throw InputError("source_action entries are [m, e, e']");
      F.source_action[u(F.source.morphism(row[0].get<std::string>()))][u(elem(row[1]))] = elem(row[2]);
    }
    for (const auto& row : j.value("target_action", json::array())) {
      if (!row.is_array() || row.size() != 3) throw InputError("target_action entries are [h, e, e']");
      F.target_action[u(F.target.morphism(row[0].get<std::string>()))][u(elem(row[1]))] = elem(row[2]);
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed profunctor: ") + e.what());
  }
  // identities act trivially; fill them so files may omit them
  for (int x = 0; x < F.source.object_count(); ++x)
    for (int e = 0; e < F.size(); ++e)
      if (F.elements[u(e)].x == x && F.source_action[u(F.source.id(x))][u(e)] < 0)
        F.source_action[u(F.source.id(x))][u(e)] = e;
  for (int y = 0; y < F.target.object_count(); ++y)
    for (int e = 0; e < F.size(); ++e)
      if (F.elements[u(e)].y == y && F.target_action[u(F.target.id(y))][u(e)] < 0)
        F.target_action[u(F.target.id(y))][u(e)] = e;
  validate_prof(F);
  return F;
}

FinProf load_prof(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return prof_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

json prof_to_json(const FinProf& F) {
  nlohmann::ordered_json j;
  j["source"] = fincat_to_json(F.source);
  j["target"] = fincat_to_json(F.target);
  j["elements"] = nlohmann::ordered_json::array();
  for (const auto& e : F.elements)
    j["elements"].push_back(
        {{"id", e.name}, {"target", F.target.object_name(e.y)}, {"source", F.source.object_name(e.x)}});
  j["source_action"] = nlohmann::ordered_json::array();
  for (int m = 0; m < F.source.morphism_count(); ++m)
    for (int e = 0; e < F.size(); ++e)
      if (const int r = F.source_action[u(m)][u(e)]; r >= 0)
        j["source_action"].push_back({F.source.morphism_name(m), F.elements[u(e)].name, F.elements[u(r)].name});
  j["target_action"] = nlohmann::ordered_json::array();
  for (int h = 0; h < F.target.morphism_count(); ++h)
    for (int e = 0; e < F.size(); ++e)
      if (const int r = F.target_action[u(h)][u(e)]; r >= 0)
        j["target_action"].push_back({F.target.morphism_name(h), F.elements[u(e)].name, F.elements[u(r)].name});
  return j;
}

FinFunctor functor_from_json(const json& j, const FinCat& from, const FinCat& to) {
  FinFunctor G;
  G.on_objects.assign(u(from.object_count()), -1);
  G.on_morphisms.assign(u(from.morphism_count()), -1);
  try {
    for (const auto& [a, b] : j.at("objects").items()) G.on_objects[u(from.object(a))] = to.object(b.get<std::string>());
    for (const auto& [f, g] : j.at("morphisms").items())
      G.on_morphisms[u(from.morphism(f))] = to.morphism(g.get<std::string>());
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed functor: ") + e.what());
  }
  // identities may be left implicit
  for (int x = 0; x < from.object_count(); ++x)
    if (G.on_morphisms[u(from.id(x))] < 0 && G.on_objects[u(x)] >= 0)
      G.on_morphisms[u(from.id(x))] = to.id(G.on_objects[u(x)]);
  validate_functor(G, from, to);
  return G;
}

FinProf identity_prof(const FinCat& c) {
  FinProf F;
  F.source = c;
  F.target = c;
  for (const auto& m : c.morphisms) F.elements.push_back({m.name, m.src, m.tgt});
  F.source_action = empty_actions(c, F.size());
  F.target_action = empty_actions(c, F.size());
  for (int a = 0; a < c.morphism_count(); ++a)
    for (int e = 0; e < c.morphism_count(); ++e) {
      if (c.src(a) == c.tgt(e)) F.source_action[u(a)][u(e)] = c.compose(a, e);
      if (c.tgt(a) == c.src(e)) F.target_action[u(a)][u(e)] = c.compose(e, a);
    }
  return F;
}

namespace {

/// G+ together with the morphism of Y behind each element.
std::pair<FinProf, std::vector<int>> representable_with_data(const FinFunctor& G, const FinCat& X, const FinCat& Y) {
  FinProf F;
  F.source = X;
  F.target = Y;
  std::vector<int> morph;
  std::map<std::pair<int, int>, int> index;  // (u, x) -> element
  for (int x = 0; x < X.object_count(); ++x)
    for (int y = 0; y < Y.object_count(); ++y)
      for (int m : Y.hom(y, G.on_objects[u(x)])) {
        index[{m, x}] = F.size();
        F.elements.push_back({Y.morphism_name(m) + "@" + X.object_name(x), y, x});
        morph.push_back(m);
      }
  F.source_action = empty_actions(X, F.size());
  F.target_action = empty_actions(Y, F.size());
  for (int e = 0; e < F.size(); ++e) {
    const int m = morph[u(e)];
    const int x = F.elements[u(e)].x;
    for (int a = 0; a < X.morphism_count(); ++a)
      if (X.src(a) == x) F.source_action[u(a)][u(e)] = index.at({Y.compose(G.on_morphisms[u(a)], m), X.tgt(a)});
    for (int h = 0; h < Y.morphism_count(); ++h)
      if (Y.tgt(h) == Y.src(m)) F.target_action[u(h)][u(e)] = index.at({Y.compose(m, h), x});
  }
  return {std::move(F), std::move(morph)};
}

}  // namespace

FinProf representable_prof(const FinFunctor& G, const FinCat& X, const FinCat& Y) {
  return representable_with_data(G, X, Y).first;
}

ProfComposite prof_compose(const FinProf& G, const FinProf& F) {
  if (!same_category(G.source, F.target))
    throw InputError("prof_compose: the middle categories differ");
  const FinCat& Y = F.target;

  std::vector<std::vector<int>> f_at_y(u(Y.object_count()));
  for (int s = 0; s < F.size(); ++s) f_at_y[u(F.elements[u(s)].y)].push_back(s);

  // pair ids: G elements in order, each followed by the F elements over its middle object
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pair_id;
  for (int t = 0; t < G.size(); ++t)
    for (int s : f_at_y[u(G.elements[u(t)].x)]) {
      pair_id[{t, s}] = static_cast<int>(pairs.size());
      pairs.emplace_back(t, s);
    }

  UnionFind uf(pairs.size());
  for (int t = 0; t < G.size(); ++t) {
    const int y = G.elements[u(t)].x;
    for (int h = 0; h < Y.morphism_count(); ++h) {
      if (Y.src(h) != y) continue;
      const int th = G.source_action[u(h)][u(t)];
      for (int s2 : f_at_y[u(Y.tgt(h))]) {
        const int hs = F.target_action[u(h)][u(s2)];
        uf.unite(pair_id.at({th, s2}), pair_id.at({t, hs}));
      }
    }
  }

  ProfComposite out;
  out.value.source = F.source;
  out.value.target = G.target;
  std::vector<int> class_of(pairs.size(), -1);
  std::map<int, int> root_class;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const int root = uf.find(static_cast<int>(p));
    auto [it, fresh] = root_class.emplace(root, static_cast<int>(out.classes.size()));
    if (fresh) {
      const auto [t, s] = pairs[p];
      out.classes.emplace_back();
      out.value.elements.push_back({G.elements[u(t)].name + "|" + F.elements[u(s)].name, G.elements[u(t)].y,
                                    F.elements[u(s)].x});
    }
    class_of[p] = it->second;
    out.classes[u(it->second)].push_back(pairs[p]);
  }

  const int C = out.value.size();
  out.value.source_action = empty_actions(F.source, C);
  out.value.target_action = empty_actions(G.target, C);
  for (int c = 0; c < C; ++c) {
    const auto [t, s] = out.classes[u(c)].front();
    for (int m = 0; m < F.source.morphism_count(); ++m)
      if (const int ms = F.source_action[u(m)][u(s)]; ms >= 0)
        out.value.source_action[u(m)][u(c)] = class_of[u(pair_id.at({t, ms}))];
    for (int k = 0; k < G.target.morphism_count(); ++k)
      if (const int kt = G.target_action[u(k)][u(t)]; kt >= 0)
        out.value.target_action[u(k)][u(c)] = class_of[u(pair_id.at({kt, s}))];
  }
  return out;
}

ProfIso check_prof_iso(const FinProf& A, const FinProf& B, std::vector<int> forward) {
  ProfIso iso{std::move(forward), {}};
  if (!same_category(A.source, B.source) || !same_category(A.target, B.target)) {
    iso.failure = "boundaries differ";
    return iso;
  }
  if (static_cast<int>(iso.forward.size()) != A.size()) {
    iso.failure = "map does not cover every element";
    return iso;
  }
  std::vector<int> hit(u(B.size()), -1);
  for (int e = 0; e < A.size(); ++e) {
    const int b = iso.forward[u(e)];
    if (b < 0 || b >= B.size()) {
      iso.failure = A.elements[u(e)].name + " has no image";
      return iso;
    }
    if (hit[u(b)] >= 0) {
      iso.failure = "not injective: " + A.elements[u(hit[u(b)])].name + " and " + A.elements[u(e)].name + " both go to " +
                    B.elements[u(b)].name;
      return iso;
    }
    hit[u(b)] = e;
    if (A.elements[u(e)].x != B.elements[u(b)].x || A.elements[u(e)].y != B.elements[u(b)].y) {
      iso.failure = A.elements[u(e)].name + " goes to " + B.elements[u(b)].name + " in another value set";
      return iso;
    }
  }
  if (A.size() != B.size()) {
    iso.failure = "not surjective: " + std::to_string(A.size()) + " vs " + std::to_string(B.size()) + " elements";
    return iso;
  }
  for (int e = 0; e < A.size(); ++e) {
    const int b = iso.forward[u(e)];
    for (int m = 0; m < A.source.morphism_count(); ++m) {
      const int r = A.source_action[u(m)][u(e)];
      if (r >= 0 && iso.forward[u(r)] != B.source_action[u(m)][u(b)]) {
        iso.failure = "not natural at " + A.source.morphism_name(m) + " on " + A.elements[u(e)].name;
        return iso;
      }
    }
    for (int h = 0; h < A.target.morphism_count(); ++h) {
      const int r = A.target_action[u(h)][u(e)];
      if (r >= 0 && iso.forward[u(r)] != B.target_action[u(h)][u(b)]) {
        iso.failure = "not natural at " + A.target.morphism_name(h) + " on " + A.elements[u(e)].name;
        return iso;
      }
    }
  }
  return iso;
}

ProfIso left_unitor(const ProfComposite& c, const FinProf& F) {
  std::vector<int> forward;
  for (const auto& members : c.classes) {
    const auto [h, s] = members.front();
    forward.push_back(F.target_action[u(h)][u(s)]);
  }
  return check_prof_iso(c.value, F, std::move(forward));
}

ProfIso right_unitor(const ProfComposite& c, const FinProf& F) {
  std::vector<int> forward;
  for (const auto& members : c.classes) {
    const auto [t, m] = members.front();
    forward.push_back(F.source_action[u(m)][u(t)]);
  }
  return check_prof_iso(c.value, F, std::move(forward));
}

int BorelCategory::find(const BorelObject& x) const {
  auto it = object_index_.find(x);
  return it == object_index_.end() ? -1 : it->second;
}

int BorelCategory::group_index(const OperadElement& g, const ActionOperad& inst) const {
  for (std::size_t i = 0; i < group.size(); ++i)
    if (inst.same(group[i], g)) return static_cast<int>(i);
  return -1;
}

int BorelCategory::locate(const BorelMorphism& m, const ActionOperad& inst) const {
  const int a = find(m.src), b = find(m.tgt), g = group_index(m.g, inst);
  if (a < 0 || b < 0 || g < 0) return -1;
  auto it = morphism_index_.find({a, b, g, m.f});
  return it == morphism_index_.end() ? -1 : it->second;
}

BorelCategory borel_category(const FinCat& X, const ActionOperad& inst, int n) {
  if (!inst.is_finite(n))
    throw InputError("Borel category: " + inst.name() + " is infinite at arity " + std::to_string(n));
  BorelCategory B;
  B.arity = n;
  B.group = inst.enumerate(n);

  std::vector<int> digits(u(n), 0);
  const int N = X.object_count();
  for (;;) {
    if (N == 0 && n > 0) break;
    BorelObject o{digits};
    B.object_index_[o] = static_cast<int>(B.objects.size());
    B.cat.objects.push_back(format_borel_object(o, X));
    B.objects.push_back(std::move(o));
    int i = n - 1;
    while (i >= 0 && ++digits[u(i)] == N) digits[u(i--)] = 0;
    if (i < 0) break;
  }

  const int O = static_cast<int>(B.objects.size());
  for (int a = 0; a < O; ++a)
    for (int b = 0; b < O; ++b)
      for (BorelMorphism& m : hom_set(B.objects[u(a)], B.objects[u(b)], X, inst)) {
        const int id = static_cast<int>(B.morphisms.size());
        B.morphism_index_[{a, b, B.group_index(m.g, inst), m.f}] = id;
        B.cat.morphisms.push_back(
            {B.cat.objects[u(a)] + ">" + B.cat.objects[u(b)] + ":" + format_borel_morphism(m, X, inst), a, b});
        B.morphisms.push_back(std::move(m));
      }
  for (int a = 0; a < O; ++a) B.cat.identities.push_back(B.locate(borel_identity(B.objects[u(a)], X, inst), inst));

  const std::size_t M = B.morphisms.size();
  std::vector<std::vector<int>> out_of(u(O));
  for (std::size_t m = 0; m < M; ++m) out_of[u(B.cat.morphisms[m].src)].push_back(static_cast<int>(m));
  B.cat.table.assign(M, std::vector<int>(M, -1));
  for (std::size_t f = 0; f < M; ++f)
    for (int g : out_of[u(B.cat.morphisms[f].tgt)])
      B.cat.table[u(g)][f] = B.locate(compose_borel(B.morphisms[u(g)], B.morphisms[f], X, inst), inst);
  return B;
}

FinFunctor borel_functor(const FinFunctor& G, const BorelCategory& EX, const BorelCategory& EY,
                         const ActionOperad& inst) {
  FinFunctor out;
  auto image = [&](const BorelObject& x) {
    BorelObject y;
    for (int o : x.objects) y.objects.push_back(G.on_objects[u(o)]);
    return y;
  };
  for (const auto& x : EX.objects) out.on_objects.push_back(EY.find(image(x)));
  for (const auto& m : EX.morphisms) {
    BorelMorphism fm{image(m.src), image(m.tgt), m.g, {}};
    for (int f : m.f) fm.f.push_back(G.on_morphisms[u(f)]);
    out.on_morphisms.push_back(EY.locate(fm, inst));
  }
  return out;
}

std::vector<std::pair<OperadElement, std::vector<int>>> lift_value(const FinProf& F, const ActionOperad& inst,
                                                                   const BorelObject& y, const BorelObject& x,
                                                                   int bound) {
  std::vector<std::pair<OperadElement, std::vector<int>>> out;
  const int n = y.arity();
  if (x.arity() != n) return out;
  for (const OperadElement& g : inst.domain(n, bound)) {
    const Perm p = inst.pi(g);
    std::vector<std::vector<int>> factors;
    bool empty = false;
    for (int i = 1; i <= n; ++i) {
      factors.push_back(F.value(y.objects[u(i - 1)], x.objects[u(p(i) - 1)]));
      empty = empty || factors.back().empty();
    }
    if (empty) continue;
    std::vector<std::size_t> digit(u(n), 0);
    for (;;) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i) s.push_back(factors[u(i)][digit[u(i)]]);
      out.emplace_back(g, std::move(s));
      int i = n - 1;
      while (i >= 0 && ++digit[u(i)] == factors[u(i)].size()) digit[u(i--)] = 0;
      if (i < 0) break;
    }
  }
  return out;
}

LiftedProf lift_prof(const FinProf& F, const ActionOperad& inst, int n) {
  LiftedProf L;
  L.source = borel_category(F.source, inst, n);
  L.target = borel_category(F.target, inst, n);
  FinProf& V = L.value;
  V.source = L.source.cat;
  V.target = L.target.cat;

  std::map<std::tuple<int, int, int, std::vector<int>>, int> index;  // (b, a, g, s) -> element
  std::vector<int> gid;
  for (int b = 0; b < static_cast<int>(L.target.objects.size()); ++b)
    for (int a = 0; a < static_cast<int>(L.source.objects.size()); ++a)
      for (auto& [g, s] : lift_value(F, inst, L.target.objects[u(b)], L.source.objects[u(a)])) {
        const int gi = L.source.group_index(g, inst);
        std::string name = V.target.object_name(b) + "<" + V.source.object_name(a) + ":" + inst.format(g) + "|";
        for (std::size_t i = 0; i < s.size(); ++i) name += (i ? "," : "") + F.elements[u(s[i])].name;
        index[{b, a, gi, s}] = V.size();
        V.elements.push_back({std::move(name), b, a});
        gid.push_back(gi);
        L.data.emplace_back(std::move(g), std::move(s));
      }

  const std::size_t G = L.source.group.size();
  std::vector<std::vector<int>> mul(G, std::vector<int>(G));
  std::vector<Perm> pis;
  for (std::size_t a = 0; a < G; ++a) {
    pis.push_back(inst.pi(L.source.group[a]));
    for (std::size_t b = 0; b < G; ++b)
      mul[a][b] = L.source.group_index(inst.mul(L.source.group[a], L.source.group[b]), inst);
  }

  V.source_action = empty_actions(V.source, V.size());
  V.target_action = empty_actions(V.target, V.size());
  for (int e = 0; e < V.size(); ++e) {
    const auto& el = V.elements[u(e)];
    const auto& s = L.data[u(e)].second;
    const Perm& pg = pis[u(gid[u(e)])];
    // (h, k) : a -> a' sends (g, s) to (hg, F(y_i, k_{pi(g)(i)}) s_i)
    for (int m = 0; m < V.source.morphism_count(); ++m) {
      if (V.source.src(m) != el.x) continue;
      const BorelMorphism& bm = L.source.morphisms[u(m)];
      const int h = L.source.group_index(bm.g, inst);
      std::vector<int> s2(s.size());
      for (int i = 1; i <= n; ++i)
        s2[u(i - 1)] = F.source_action[u(bm.f[u(pg(i) - 1)])][u(s[u(i - 1)])];
      V.source_action[u(m)][u(e)] = index.at({el.y, V.source.tgt(m), mul[u(h)][u(gid[u(e)])], s2});
    }
    // (h, l) : b' -> b sends (g, s) to (gh, F(l_j, x_{pi(gh)(j)}) s_{pi(h)(j)})
    for (int m = 0; m < V.target.morphism_count(); ++m) {
      if (V.target.tgt(m) != el.y) continue;
      const BorelMorphism& bm = L.target.morphisms[u(m)];
      const int h = L.target.group_index(bm.g, inst);
      const Perm& ph = pis[u(h)];
      std::vector<int> s2(s.size());
      for (int j = 1; j <= n; ++j) s2[u(j - 1)] = F.target_action[u(bm.f[u(j - 1)])][u(s[u(ph(j) - 1)])];
      V.target_action[u(m)][u(e)] = index.at({V.target.src(m), el.x, mul[u(gid[u(e)])][u(h)], s2});
    }
  }
  return L;
}

ProfIso check_lift_representable(const FinFunctor& G, const FinCat& X, const FinCat& Y, const ActionOperad& inst,
                                 int n) {
  auto [Gp, morph] = representable_with_data(G, X, Y);
  const LiftedProf L = lift_prof(Gp, inst, n);
  const FinFunctor EG = borel_functor(G, L.source, L.target, inst);
  auto [R, rmorph] = representable_with_data(EG, L.source.cat, L.target.cat);

  std::map<std::pair<int, int>, int> r_index;  // (morphism of E Y, object of E X) -> element
  for (int e = 0; e < R.size(); ++e) r_index[{rmorph[u(e)], R.elements[u(e)].x}] = e;

  std::vector<int> forward;
  for (int e = 0; e < L.value.size(); ++e) {
    const auto& el = L.value.elements[u(e)];
    const auto& [g, s] = L.data[u(e)];
    BorelMorphism m{L.target.objects[u(el.y)], L.target.objects[u(EG.on_objects[u(el.x)])], g, {}};
    for (int si : s) m.f.push_back(morph[u(si)]);
    const int um = L.target.locate(m, inst);
    auto it = r_index.find({um, el.x});
    forward.push_back(it == r_index.end() ? -1 : it->second);
  }
  return check_prof_iso(L.value, R, std::move(forward));
}

}  // namespace aop
