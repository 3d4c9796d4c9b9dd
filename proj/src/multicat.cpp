#include "aop/multicat.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "aop/error.hpp"

namespace aop {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += xs[i];
  }
  return out;
}

template <class T>
T field(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string(where) + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string(where) + ": bad field '" + key + "'");
  }
}

/// Indexed view of a FinMulticat used by the validators.
struct Index {
  struct Sig {
    std::vector<int> inputs;
    int output = -1;
  };
  struct GenAction {
    int generator = -1;        // position in inst.generators(n)
    std::vector<int> forward;  // by element id, -1 outside arity n
    std::vector<int> backward;
  };

  std::map<std::string, int> object_id;
  std::vector<std::string> names;
  std::map<std::string, int> element_id;
  std::vector<Sig> sig;
  std::map<std::vector<int>, int> table;  // (outer, inner...) -> result
  std::map<int, std::vector<int>> by_arity;
  std::map<int, std::vector<GenAction>> actions;  // arity -> one per generator, generator -1 if missing

  int arity(int e) const { return static_cast<int>(sig[static_cast<std::size_t>(e)].inputs.size()); }
  const std::string& name(int e) const { return names[static_cast<std::size_t>(e)]; }

  int lookup(const std::vector<int>& key) const {
    auto it = table.find(key);
    return it == table.end() ? -1 : it->second;
  }

  std::string term(const std::vector<int>& key) const {
    std::string out = name(key[0]) + "(";
    for (std::size_t i = 1; i < key.size(); ++i) {
      if (i > 1) out += ',';
      out += name(key[i]);
    }
    return out + ")";
  }

  const GenAction* action(int n, int gen) const {
    auto it = actions.find(n);
    if (it == actions.end()) return nullptr;
    const auto& a = it->second[static_cast<std::size_t>(gen)];
    return a.generator < 0 ? nullptr : &a;
  }

  /// e . w, folding left to right; -1 when an action is missing or not invertible.
  int act(int e, const GenWord& w) const {
    const int n = arity(e);
    for (const GenLetter& l : w) {
      const GenAction* a = action(n, l.index);
      if (!a) return -1;
      const auto& map = l.sign > 0 ? a->forward : a->backward;
      if (map.empty()) return -1;
      e = map[static_cast<std::size_t>(e)];
      if (e < 0) return -1;
    }
    return e;
  }
};

Index build_index(const FinMulticat& m, ValidationReport& rep) {
  Index ix;
  auto bad = [&](const std::string& kind, const std::string& w) { rep.violations.push_back({kind, w}); };

  for (const auto& o : m.objects)
    if (!ix.object_id.emplace(o, static_cast<int>(ix.object_id.size())).second)
      bad("signature", "duplicate object " + o);
  auto obj = [&](const std::string& o) -> int {
    auto it = ix.object_id.find(o);
    if (it == ix.object_id.end()) {
      bad("signature", "unknown object " + o);
      return -1;
    }
    return it->second;
  };

  for (const auto& h : m.homs) {
    Index::Sig s;
    for (const auto& x : h.inputs) s.inputs.push_back(obj(x));
    s.output = obj(h.output);
    for (const auto& e : h.elements) {
      const int id = static_cast<int>(ix.names.size());
      if (!ix.element_id.emplace(e, id).second) {
        bad("signature", "element " + e + " listed twice");
        continue;
      }
      ix.names.push_back(e);
      ix.sig.push_back(s);
      ix.by_arity[static_cast<int>(s.inputs.size())].push_back(id);
    }
  }
  return ix;
}

std::string sig_text(const FinMulticat& m, const std::vector<int>& inputs, int output) {
  std::vector<std::string> xs;
  for (int x : inputs) xs.push_back(x < 0 ? "?" : m.objects[static_cast<std::size_t>(x)]);
  return "(" + join(xs) + "; " + (output < 0 ? "?" : m.objects[static_cast<std::size_t>(output)]) + ")";
}

}  // namespace

FinMulticat multicat_from_json(const json& j) {
  if (!j.is_object()) throw InputError("multicategory: expected an object");
  FinMulticat m;
  m.objects = field<std::vector<std::string>>(j, "objects", "multicategory");
  for (const auto& h : j.value("homs", json::array())) {
    FinMulticat::Hom hom;
    hom.inputs = field<std::vector<std::string>>(h, "inputs", "hom");
    hom.output = field<std::string>(h, "output", "hom");
    hom.elements = field<std::vector<std::string>>(h, "elements", "hom");
    m.homs.push_back(std::move(hom));
  }
  if (j.contains("identities")) {
    if (!j["identities"].is_object()) throw InputError("multicategory: identities must map objects to elements");
    m.identities = j["identities"].get<std::map<std::string, std::string>>();
  }
  for (const auto& c : j.value("compose", json::array())) {
    FinMulticat::Composite comp;
    comp.outer = field<std::string>(c, "outer", "compose entry");
    comp.inner = field<std::vector<std::string>>(c, "inner", "compose entry");
    comp.result = field<std::string>(c, "result", "compose entry");
    m.compose.push_back(std::move(comp));
  }
  for (const auto& a : j.value("actions", json::array())) {
    FinMulticat::Action act;
    act.arity = field<int>(a, "arity", "action");
    act.generator = field<std::string>(a, "generator", "action");
    act.mapping = field<std::map<std::string, std::string>>(a, "mapping", "action");
    m.actions.push_back(std::move(act));
  }
  return m;
}

FinMulticat load_multicat(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return multicat_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

json multicat_to_json(const FinMulticat& m) {
  json j;
  j["objects"] = m.objects;
  j["homs"] = json::array();
  for (const auto& h : m.homs)
    j["homs"].push_back({{"inputs", h.inputs}, {"output", h.output}, {"elements", h.elements}});
  j["identities"] = m.identities;
  j["compose"] = json::array();
  for (const auto& c : m.compose)
    j["compose"].push_back({{"outer", c.outer}, {"inner", c.inner}, {"result", c.result}});
  j["actions"] = json::array();
  for (const auto& a : m.actions)
    j["actions"].push_back({{"arity", a.arity}, {"generator", a.generator}, {"mapping", a.mapping}});
  return j;
}

namespace {

// Calls visit(k) for every vector k of length n with entries >= 0 and sum <= total.
void arity_vectors(int n, int total, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      visit(k);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[static_cast<std::size_t>(i)] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, total);
}

}  // namespace

FinMulticat multicat_from_operad(const ActionOperad& inst, int max_arity) {
  FinMulticat m;
  m.objects = {"*"};
  std::vector<std::vector<OperadElement>> groups;
  auto label = [&](const OperadElement& g) { return std::to_string(g.arity) + ":" + inst.format(g); };
  auto index_in = [&](const OperadElement& g) -> std::size_t {
    const auto& gs = groups[static_cast<std::size_t>(g.arity)];
    for (std::size_t i = 0; i < gs.size(); ++i)
      if (inst.same(gs[i], g)) return i;
    throw InputError("multicategory: element outside the enumerated group");
  };
  for (int n = 0; n <= max_arity; ++n) {
    groups.push_back(inst.enumerate(n));
    FinMulticat::Hom h;
    h.inputs.assign(static_cast<std::size_t>(n), "*");
    h.output = "*";
    for (const auto& g : groups.back()) h.elements.push_back(label(g));
    m.homs.push_back(std::move(h));
  }
  m.identities["*"] = label(inst.identity(1));

  for (int n = 0; n <= max_arity; ++n) {
    arity_vectors(n, max_arity, [&](const std::vector<int>& k) {
      // every tuple (f; g_1..g_n) with g_i in Lambda(k_i)
      std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
      for (const auto& f : groups[static_cast<std::size_t>(n)]) {
        std::fill(pos.begin(), pos.end(), 0);
        while (true) {
          std::vector<OperadElement> hs;
          FinMulticat::Composite c;
          c.outer = label(f);
          for (int i = 0; i < n; ++i) {
            hs.push_back(groups[static_cast<std::size_t>(k[static_cast<std::size_t>(i)])][pos[static_cast<std::size_t>(i)]]);
            c.inner.push_back(label(hs.back()));
          }
          const OperadElement r = inst.mu(f, hs);
          c.result = label(groups[static_cast<std::size_t>(r.arity)][index_in(r)]);
          m.compose.push_back(std::move(c));
          int i = n - 1;
          for (; i >= 0; --i) {
            auto& p = pos[static_cast<std::size_t>(i)];
            if (++p < groups[static_cast<std::size_t>(k[static_cast<std::size_t>(i)])].size()) break;
            p = 0;
          }
          if (i < 0) break;
        }
      }
    });
  }

  for (int n = 0; n <= max_arity; ++n) {
    for (const auto& a : inst.generators(n)) {
      FinMulticat::Action act;
      act.arity = n;
      act.generator = inst.format(a);
      for (const auto& f : groups[static_cast<std::size_t>(n)]) {
        const OperadElement fa = inst.mul(f, a);
        act.mapping[label(f)] = label(groups[static_cast<std::size_t>(n)][index_in(fa)]);
      }
      m.actions.push_back(std::move(act));
    }
  }
  return m;
}

FinMulticat terminal_multicat(const ActionOperad& inst, int max_arity) {
  FinMulticat m;
  m.objects = {"*"};
  auto t = [](int n) { return "t" + std::to_string(n); };
  for (int n = 0; n <= max_arity; ++n) {
    m.homs.push_back({std::vector<std::string>(static_cast<std::size_t>(n), "*"), "*", {t(n)}});
    for (const auto& a : inst.generators(n)) m.actions.push_back({n, inst.format(a), {{t(n), t(n)}}});
  }
  m.identities["*"] = t(1);
  for (int n = 0; n <= max_arity; ++n)
    arity_vectors(n, max_arity, [&](const std::vector<int>& k) {
      FinMulticat::Composite c;
      c.outer = t(n);
      int total = 0;
      for (int v : k) {
        c.inner.push_back(t(v));
        total += v;
      }
      c.result = t(total);
      m.compose.push_back(std::move(c));
    });
  return m;
}

namespace {

/// Structural checks plus the action tables; fills ix.table and ix.actions.
void index_structure(const FinMulticat& m, const ActionOperad& inst, Index& ix, ValidationReport& rep) {
  auto bad = [&](const std::string& kind, const std::string& w) { rep.violations.push_back({kind, w}); };
  auto elem = [&](const std::string& e, const char* role) -> int {
    auto it = ix.element_id.find(e);
    if (it == ix.element_id.end()) {
      bad("signature", std::string("unknown element ") + e + " as " + role);
      return -1;
    }
    return it->second;
  };

  for (const auto& [o, e] : m.identities) {
    ++rep.checks;
    auto ot = ix.object_id.find(o);
    const int id = elem(e, "identity");
    if (ot == ix.object_id.end()) {
      bad("identity", "identity listed for unknown object " + o);
      continue;
    }
    if (id < 0) continue;
    const auto& s = ix.sig[static_cast<std::size_t>(id)];
    if (s.inputs != std::vector<int>{ot->second} || s.output != ot->second)
      bad("identity", "id_" + o + " = " + e + " has signature " + sig_text(m, s.inputs, s.output) +
                          ", expected (" + o + "; " + o + ")");
  }
  for (const auto& o : m.objects)
    if (!m.identities.count(o)) bad("identity", "no identity for object " + o);

  for (const auto& c : m.compose) {
    ++rep.checks;
    std::vector<int> key{elem(c.outer, "outer")};
    for (const auto& g : c.inner) key.push_back(elem(g, "inner"));
    const int r = elem(c.result, "result");
    if (r < 0 || std::find(key.begin(), key.end(), -1) != key.end()) continue;
    const auto& fs = ix.sig[static_cast<std::size_t>(key[0])];
    const std::string t = ix.term(key);
    if (fs.inputs.size() + 1 != key.size()) {
      bad("signature", t + ": outer arity " + std::to_string(fs.inputs.size()) + " with " +
                           std::to_string(key.size() - 1) + " inner arrows");
      continue;
    }
    std::vector<int> inputs;
    bool ok = true;
    for (std::size_t i = 1; i < key.size(); ++i) {
      const auto& gs = ix.sig[static_cast<std::size_t>(key[i])];
      if (gs.output != fs.inputs[i - 1]) ok = false;
      inputs.insert(inputs.end(), gs.inputs.begin(), gs.inputs.end());
    }
    if (!ok) {
      bad("signature", t + ": inner outputs do not match the inputs of " + c.outer);
      continue;
    }
    const auto& rs = ix.sig[static_cast<std::size_t>(r)];
    if (rs.inputs != inputs || rs.output != fs.output) {
      bad("signature", t + " = " + c.result + " has signature " + sig_text(m, rs.inputs, rs.output) +
                           ", expected " + sig_text(m, inputs, fs.output));
      continue;
    }
    auto [it, fresh] = ix.table.emplace(key, r);
    if (!fresh && it->second != r)
      bad("signature", t + " listed as both " + ix.name(it->second) + " and " + c.result);
  }

  for (const auto& a : m.actions) {
    ++rep.checks;
    const int n = a.arity;
    OperadElement g;
    try {
      g = inst.parse(a.generator, n);
    } catch (const InputError& e) {
      bad("action", "arity " + std::to_string(n) + ": cannot read generator " + a.generator + ": " + e.what());
      continue;
    }
    const auto gens = inst.generators(n);
    int gi = -1;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (inst.same(gens[i], g)) gi = static_cast<int>(i);
    if (gi < 0) {
      bad("action", a.generator + " is not a generator at arity " + std::to_string(n));
      continue;
    }
    auto& slots = ix.actions[n];
    slots.resize(gens.size());
    auto& ga = slots[static_cast<std::size_t>(gi)];
    if (ga.generator >= 0) {
      bad("action", "generator " + a.generator + " at arity " + std::to_string(n) + " listed twice");
      continue;
    }
    ga.generator = gi;
    ga.forward.assign(ix.names.size(), -1);
    const Perm p = inst.pi(g);
    bool ok = true;
    for (const auto& [from, to] : a.mapping) {
      const int x = elem(from, "action source"), y = elem(to, "action image");
      if (x < 0 || y < 0) {
        ok = false;
        continue;
      }
      const auto& xs = ix.sig[static_cast<std::size_t>(x)];
      const auto& ys = ix.sig[static_cast<std::size_t>(y)];
      if (static_cast<int>(xs.inputs.size()) != n) {
        bad("action", from + " has arity " + std::to_string(xs.inputs.size()) + ", acted on at arity " +
                          std::to_string(n));
        ok = false;
        continue;
      }
      std::vector<int> want(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) want[static_cast<std::size_t>(i - 1)] = xs.inputs[static_cast<std::size_t>(p(i) - 1)];
      if (ys.inputs != want || ys.output != xs.output) {
        bad("action", from + "." + a.generator + " = " + to + " has signature " +
                          sig_text(m, ys.inputs, ys.output) + ", expected " + sig_text(m, want, xs.output));
        ok = false;
      }
      ga.forward[static_cast<std::size_t>(x)] = y;
    }
    for (int e : ix.by_arity[n])
      if (ga.forward[static_cast<std::size_t>(e)] < 0) {
        bad("action", "." + a.generator + " undefined on " + ix.name(e));
        ok = false;
      }
    ga.backward.assign(ix.names.size(), -1);
    for (int e : ix.by_arity[n]) {
      const int y = ga.forward[static_cast<std::size_t>(e)];
      if (y < 0) continue;
      if (ga.backward[static_cast<std::size_t>(y)] >= 0) {
        bad("action", "." + a.generator + " is not a bijection: " + ix.name(ga.backward[static_cast<std::size_t>(y)]) +
                          " and " + ix.name(e) + " both go to " + ix.name(y));
        ok = false;
      } else {
        ga.backward[static_cast<std::size_t>(y)] = e;
      }
    }
    if (!ok) ga.backward.clear();
  }

  for (const auto& [n, elems] : ix.by_arity) {
    if (elems.empty()) continue;
    const auto gens = inst.generators(n);
    auto& slots = ix.actions[n];
    slots.resize(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (slots[i].generator < 0)
        bad("action", "no action listed for generator " + inst.format(gens[i]) + " at arity " + std::to_string(n));
  }
}

}  // namespace

ValidationReport validate_multicat(const FinMulticat& m, const ActionOperad& inst) {
  ValidationReport rep;
  Index ix = build_index(m, rep);
  index_structure(m, inst, ix, rep);
  auto bad = [&](const std::string& kind, const std::string& w) { rep.violations.push_back({kind, w}); };

  // relations of Lambda(n) hold in the action
  for (const auto& [n, elems] : ix.by_arity) {
    const auto gens = inst.generators(n);
    auto word_text = [&](const GenWord& w) {
      std::string out;
      for (const GenLetter& x : w) {
        if (!out.empty()) out += ' ';
        out += inst.format(gens[static_cast<std::size_t>(x.index)]);
        if (x.sign < 0) out += "^-1";
      }
      return out.empty() ? std::string("e") : out;
    };
    for (const auto& [l, r] : inst.generator_relations(n)) {
      for (int e : elems) {
        ++rep.checks;
        const int a = ix.act(e, l), b = ix.act(e, r);
        if (a < 0 || b < 0) continue;  // already reported
        if (a != b)
          bad("relation", ix.name(e) + " . " + word_text(l) + " = " + ix.name(a) + " but " + ix.name(e) + " . " +
                              word_text(r) + " = " + ix.name(b));
      }
    }
  }

  std::map<int, int> id_of;  // object -> identity element
  for (const auto& [o, e] : m.identities) {
    auto ot = ix.object_id.find(o);
    auto et = ix.element_id.find(e);
    if (ot != ix.object_id.end() && et != ix.element_id.end()) id_of[ot->second] = et->second;
  }
  auto is_identity = [&](int e) {
    const auto& s = ix.sig[static_cast<std::size_t>(e)];
    if (s.inputs.size() != 1) return false;
    auto it = id_of.find(s.output);
    return it != id_of.end() && it->second == e;
  };

  for (const auto& [key, r] : ix.table) {
    // unit laws
    if (key.size() == 2 && is_identity(key[0])) {
      ++rep.checks;
      if (r != key[1]) bad("unit", ix.term(key) + " = " + ix.name(r) + ", expected " + ix.name(key[1]));
    }
    bool inner_ids = true;
    for (std::size_t i = 1; i < key.size(); ++i) inner_ids = inner_ids && is_identity(key[i]);
    if (inner_ids) {
      ++rep.checks;
      if (r != key[0]) bad("unit", ix.term(key) + " = " + ix.name(r) + ", expected " + ix.name(key[0]));
    }
  }

  // associativity: f(g)(h) against f(g_1(h_1), .., g_n(h_n)) for listed pieces
  std::map<int, std::vector<const std::pair<const std::vector<int>, int>*>> by_outer;
  for (const auto& entry : ix.table) by_outer[entry.first[0]].push_back(&entry);
  for (const auto& [key, r] : ix.table) {
    auto it = by_outer.find(r);
    if (it == by_outer.end()) continue;
    for (const auto* second : it->second) {
      const auto& hs = second->first;
      std::vector<int> outer{key[0]};
      std::size_t pos = 1;
      bool listed = true;
      for (std::size_t i = 1; i < key.size() && listed; ++i) {
        const std::size_t k = static_cast<std::size_t>(ix.arity(key[i]));
        std::vector<int> inner{key[i]};
        inner.insert(inner.end(), hs.begin() + static_cast<long>(pos), hs.begin() + static_cast<long>(pos + k));
        pos += k;
        const int gi = ix.lookup(inner);
        if (gi < 0) listed = false;
        outer.push_back(gi);
      }
      if (!listed) continue;
      const int t = ix.lookup(outer);
      if (t < 0) continue;
      ++rep.checks;
      if (t != second->second)
        bad("associativity", ix.term(key) + " = " + ix.name(r) + ", then " + ix.term(hs) + " = " +
                                 ix.name(second->second) + ", but " + ix.term(outer) + " = " + ix.name(t));
    }
  }

  // f(g_1..g_i.a..g_n) = f(g).beta(e..a..e)
  for (const auto& [key, r] : ix.table) {
    const std::size_t n = key.size() - 1;
    for (std::size_t i = 1; i <= n; ++i) {
      const int k = ix.arity(key[i]);
      const auto gens = inst.generators(k);
      for (std::size_t a = 0; a < gens.size(); ++a) {
        const int moved = ix.act(key[i], GenWord{{static_cast<int>(a), 1}});
        if (moved < 0) continue;
        std::vector<int> key2 = key;
        key2[i] = moved;
        const int lhs = ix.lookup(key2);
        if (lhs < 0) continue;
        std::vector<OperadElement> blocks;
        for (std::size_t j = 1; j <= n; ++j) blocks.push_back(j == i ? gens[a] : inst.identity(ix.arity(key[j])));
        const OperadElement b = inst.beta(blocks);
        const int rhs = ix.act(r, inst.factor(b));
        if (rhs < 0) continue;
        ++rep.checks;
        if (lhs != rhs)
          bad("equivariance", ix.term(key2) + " = " + ix.name(lhs) + " but " + ix.term(key) + " . " +
                                  inst.format(b) + " = " + ix.name(rhs));
      }
    }
  }

  // (f.a)(g) = f(g_{pi(a)^-1(1)}..).delta(a; k)
  for (const auto& [key, s] : ix.table) {
    const int n = static_cast<int>(key.size()) - 1;
    const auto gens = inst.generators(n);
    for (std::size_t a = 0; a < gens.size(); ++a) {
      const int fa = ix.act(key[0], GenWord{{static_cast<int>(a), 1}});
      if (fa < 0) continue;
      const Perm p = inst.pi(gens[a]);
      std::vector<int> key2{fa};
      std::vector<int> k;
      for (int i = 1; i <= n; ++i) {
        key2.push_back(key[static_cast<std::size_t>(p(i))]);
        k.push_back(ix.arity(key2.back()));
      }
      const int lhs = ix.lookup(key2);
      if (lhs < 0) continue;
      const OperadElement d = inst.delta(gens[a], k);
      const int rhs = ix.act(s, inst.factor(d));
      if (rhs < 0) continue;
      ++rep.checks;
      if (lhs != rhs)
        bad("equivariance", ix.term(key2) + " = " + ix.name(lhs) + " but " + ix.term(key) + " . " +
                                inst.format(d) + " = " + ix.name(rhs));
    }
  }
  return rep;
}

FinMultifunctor multifunctor_from_json(const json& j) {
  FinMultifunctor f;
  f.objects = field<std::map<std::string, std::string>>(j, "objects", "multifunctor");
  f.elements = field<std::map<std::string, std::string>>(j, "elements", "multifunctor");
  return f;
}

FinMultifunctor identity_multifunctor(const FinMulticat& m) {
  FinMultifunctor f;
  for (const auto& o : m.objects) f.objects[o] = o;
  for (const auto& h : m.homs)
    for (const auto& e : h.elements) f.elements[e] = e;
  return f;
}

ValidationReport validate_multifunctor(const FinMultifunctor& F, const FinMulticat& from,
                                       const FinMulticat& to, const ActionOperad& inst) {
  ValidationReport rep;
  ValidationReport scratch;
  Index src = build_index(from, scratch);
  index_structure(from, inst, src, scratch);
  Index dst = build_index(to, scratch);
  index_structure(to, inst, dst, scratch);
  auto bad = [&](const std::string& kind, const std::string& w) { rep.violations.push_back({kind, w}); };

  std::vector<int> on_obj(from.objects.size(), -1);
  for (std::size_t x = 0; x < from.objects.size(); ++x) {
    auto it = F.objects.find(from.objects[x]);
    if (it == F.objects.end()) {
      bad("signature", "object " + from.objects[x] + " is not mapped");
      continue;
    }
    auto jt = dst.object_id.find(it->second);
    if (jt == dst.object_id.end()) bad("signature", from.objects[x] + " maps to unknown object " + it->second);
    else on_obj[x] = jt->second;
  }
  std::vector<int> on_elem(src.names.size(), -1);
  for (std::size_t e = 0; e < src.names.size(); ++e) {
    ++rep.checks;
    auto it = F.elements.find(src.names[e]);
    if (it == F.elements.end()) {
      bad("signature", "element " + src.names[e] + " is not mapped");
      continue;
    }
    auto jt = dst.element_id.find(it->second);
    if (jt == dst.element_id.end()) {
      bad("signature", src.names[e] + " maps to unknown element " + it->second);
      continue;
    }
    const auto& s = src.sig[e];
    std::vector<int> want;
    for (int x : s.inputs) want.push_back(x < 0 ? -1 : on_obj[static_cast<std::size_t>(x)]);
    const int want_out = s.output < 0 ? -1 : on_obj[static_cast<std::size_t>(s.output)];
    const auto& t = dst.sig[static_cast<std::size_t>(jt->second)];
    if (t.inputs != want || t.output != want_out) {
      bad("signature", "F(" + src.names[e] + ") = " + it->second + " has signature " +
                           sig_text(to, t.inputs, t.output) + ", expected " + sig_text(to, want, want_out));
      continue;
    }
    on_elem[e] = jt->second;
  }

  for (const auto& [o, e] : from.identities) {
    auto ot = src.object_id.find(o);
    auto et = src.element_id.find(e);
    if (ot == src.object_id.end() || et == src.element_id.end()) continue;
    const int fo = on_obj[static_cast<std::size_t>(ot->second)];
    const int fe = on_elem[static_cast<std::size_t>(et->second)];
    if (fo < 0 || fe < 0) continue;
    ++rep.checks;
    auto want = to.identities.find(to.objects[static_cast<std::size_t>(fo)]);
    if (want == to.identities.end() || want->second != dst.name(fe))
      bad("identity", "F(id_" + o + ") = " + dst.name(fe) + " is not the identity of " +
                          to.objects[static_cast<std::size_t>(fo)]);
  }

  for (const auto& [key, r] : src.table) {
    std::vector<int> image;
    for (int e : key) image.push_back(on_elem[static_cast<std::size_t>(e)]);
    const int fr = on_elem[static_cast<std::size_t>(r)];
    if (fr < 0 || std::find(image.begin(), image.end(), -1) != image.end()) continue;
    const int t = dst.lookup(image);
    if (t < 0) continue;
    ++rep.checks;
    if (t != fr)
      bad("composition", "F(" + src.term(key) + ") = " + dst.name(fr) + " but " + dst.term(image) + " = " +
                             dst.name(t));
  }

  for (std::size_t e = 0; e < src.names.size(); ++e) {
    const int fe = on_elem[e];
    if (fe < 0) continue;
    const int n = src.arity(static_cast<int>(e));
    const auto gens = inst.generators(n);
    for (std::size_t a = 0; a < gens.size(); ++a) {
      const GenWord w{{static_cast<int>(a), 1}};
      const int ea = src.act(static_cast<int>(e), w);
      const int rhs = dst.act(fe, w);
      if (ea < 0 || rhs < 0) continue;
      const int lhs = on_elem[static_cast<std::size_t>(ea)];
      if (lhs < 0) continue;
      ++rep.checks;
      if (lhs != rhs)
        bad("equivariance", "F(" + src.names[e] + " . " + inst.format(gens[a]) + ") = " + dst.name(lhs) +
                                " but F(" + src.names[e] + ") . " + inst.format(gens[a]) + " = " + dst.name(rhs));
    }
  }
  return rep;
}

std::string format_validation(const ValidationReport& r) {
  std::ostringstream os;
  for (const auto& v : r.violations) os << v.kind << ": " << v.witness << '\n';
  os << "result: " << (r.valid() ? "valid" : "invalid") << " checks=" << r.checks
     << " violations=" << r.violations.size() << '\n';
  return os.str();
}

}  // namespace aop
