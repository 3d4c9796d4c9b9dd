#include "aop/borel.hpp"

#include <sstream>

#include "aop/error.hpp"

namespace aop {

BorelObject normalize(const ActionOperad& inst, const OperadElement& g, const std::vector<int>& xs) {
  if (g.arity != static_cast<int>(xs.size()))
    throw InputError("normalize: arity " + std::to_string(g.arity) + " with " +
                     std::to_string(xs.size()) + " objects");
  const Perm p = inst.pi(g);
  BorelObject out;
  out.objects.resize(xs.size());
  // position i of the result holds x_{p^-1(i)}, i.e. x_j lands at p(j).
  for (int j = 1; j <= g.arity; ++j)
    out.objects[static_cast<std::size_t>(p(j) - 1)] = xs[static_cast<std::size_t>(j - 1)];
  return out;
}

std::vector<BorelMorphism> hom_set(const BorelObject& src, const BorelObject& tgt, const FinCat& X,
                                   const ActionOperad& inst, int bound) {
  std::vector<BorelMorphism> out;
  const int n = src.arity();
  if (tgt.arity() != n) return out;
  for (const OperadElement& g : inst.domain(n, bound)) {
    const Perm p = inst.pi(g);
    std::vector<std::vector<int>> factors;
    bool empty = false;
    for (int i = 1; i <= n; ++i) {
      factors.push_back(X.hom(src.objects[static_cast<std::size_t>(i - 1)],
                              tgt.objects[static_cast<std::size_t>(p(i) - 1)]));
      empty = empty || factors.back().empty();
    }
    if (empty) continue;
    std::vector<std::size_t> digit(static_cast<std::size_t>(n), 0);
    for (;;) {
      BorelMorphism m{src, tgt, g, {}};
      for (int i = 0; i < n; ++i)
        m.f.push_back(factors[static_cast<std::size_t>(i)][digit[static_cast<std::size_t>(i)]]);
      out.push_back(std::move(m));
      int i = n - 1;
      while (i >= 0 && ++digit[static_cast<std::size_t>(i)] == factors[static_cast<std::size_t>(i)].size())
        digit[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
    }
  }
  return out;
}

BorelMorphism compose_borel(const BorelMorphism& m2, const BorelMorphism& m1, const FinCat& X,
                            const ActionOperad& inst) {
  if (m1.tgt != m2.src) throw InputError("compose_borel: morphisms are not composable");
  const Perm p1 = inst.pi(m1.g);
  BorelMorphism out{m1.src, m2.tgt, inst.mul(m2.g, m1.g), {}};
  for (int i = 1; i <= m1.src.arity(); ++i)
    out.f.push_back(X.compose(m2.f[static_cast<std::size_t>(p1(i) - 1)],
                              m1.f[static_cast<std::size_t>(i - 1)]));
  return out;
}

BorelMorphism borel_identity(const BorelObject& x, const FinCat& X, const ActionOperad& inst) {
  BorelMorphism m{x, x, inst.identity(x.arity()), {}};
  for (int o : x.objects) m.f.push_back(X.id(o));
  return m;
}

bool same_morphism(const BorelMorphism& a, const BorelMorphism& b, const ActionOperad& inst) {
  return a.src == b.src && a.tgt == b.tgt && a.f == b.f && inst.same(a.g, b.g);
}

BorelObject borel_unit(int x) { return BorelObject{{x}}; }

BorelObject borel_mult(const ActionOperad& inst, const OperadElement& g,
                       const std::vector<BorelObject>& inners) {
  if (static_cast<int>(inners.size()) != g.arity)
    throw InputError("borel_mult: " + std::to_string(inners.size()) + " inner objects for arity " +
                     std::to_string(g.arity));
  std::vector<int> sizes, all;
  for (const auto& b : inners) {
    sizes.push_back(b.arity());
    all.insert(all.end(), b.objects.begin(), b.objects.end());
  }
  return normalize(inst, inst.delta(g, sizes), all);
}

BorelMorphism act(const ActionOperad& inst, const OperadElement& g, const BorelObject& x,
                  const FinCat& X) {
  BorelMorphism m{x, normalize(inst, g, x.objects), g, {}};
  for (int o : x.objects) m.f.push_back(X.id(o));
  return m;
}

LambdaInfinityReport lambda_infinity_check(const ActionOperad& inst, int n) {
  if (!inst.is_finite(n))
    throw InputError(inst.name() + "(" + std::to_string(n) + ") is infinite");
  const auto elems = inst.enumerate(n);
  LambdaInfinityReport r;
  r.arity = n;
  r.objects = static_cast<int>(elems.size());

  std::vector<std::string> names;
  for (const auto& g : elems) names.push_back(inst.format(g));
  try {
    const FinCat E = chaotic_category(names);
    r.contractible = true;
    for (int a = 0; a < E.object_count() && r.contractible; ++a)
      for (int b = 0; b < E.object_count() && r.contractible; ++b) {
        const auto ab = E.hom(a, b);
        const auto ba = E.hom(b, a);
        if (ab.size() != 1 || ba.size() != 1 || E.compose(ba[0], ab[0]) != E.id(a)) {
          r.contractible = false;
          r.detail = "hom(" + names[static_cast<std::size_t>(a)] + ", " + names[static_cast<std::size_t>(b)] +
                     ") is not a single isomorphism";
        }
      }
  } catch (const InputError& e) {
    r.detail = e.what();
  }
  // Distinct enumerated elements must be distinct group elements, else the
  // object set is not Lambda(n).
  for (std::size_t i = 0; i < elems.size() && r.detail.empty(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (inst.same(elems[i], elems[j])) {
        r.contractible = false;
        r.detail = "enumeration repeats " + names[i];
        break;
      }

  r.free_action = true;
  for (const auto& a : elems)
    for (const auto& h : elems) {
      if (inst.same(inst.mul(a, h), a) && !inst.same(h, inst.identity(n))) {
        r.free_action = false;
        if (r.detail.empty()) r.detail = inst.format(h) + " fixes " + inst.format(a);
      }
    }
  return r;
}

std::string format_borel_morphism(const BorelMorphism& m, const FinCat& X, const ActionOperad& inst) {
  std::string s = inst.format(m.g) + " | ";
  for (std::size_t i = 0; i < m.f.size(); ++i) s += (i ? "," : "") + X.morphism_name(m.f[i]);
  return s;
}

std::string format_borel_object(const BorelObject& x, const FinCat& X) {
  std::string s = "[e;";
  for (std::size_t i = 0; i < x.objects.size(); ++i) s += (i ? "," : "") + X.object_name(x.objects[i]);
  return s + "]";
}

BorelObject parse_borel_object(const std::string& text, const FinCat& X) {
  BorelObject b;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    b.objects.push_back(X.object(item.substr(first, last - first + 1)));
  }
  return b;
}

}  // namespace aop
