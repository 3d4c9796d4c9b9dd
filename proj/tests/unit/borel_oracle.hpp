#pragma once
// Brute-force model of E Lambda(n) x_{Lambda(n)} X^n: builds the product
// category E Lambda(n) x X^n explicitly and quotients by the diagonal action
// with union-find. Only the operad's enumerate/mul/pi/same are used.

#include <map>
#include <numeric>
#include <vector>

#include "aop/borel.hpp"

namespace oracle {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

class BorelQuotient {
 public:
  BorelQuotient(const aop::ActionOperad& inst, int n, const aop::FinCat& X)
      : inst_(inst), n_(n), X_(X), elems_(inst.enumerate(n)) {
    const std::size_t G = elems_.size();
    mul_.assign(G, std::vector<std::size_t>(G));
    for (std::size_t a = 0; a < G; ++a)
      for (std::size_t h = 0; h < G; ++h) mul_[a][h] = index_of(inst.mul(elems_[a], elems_[h]));
    for (const auto& g : elems_) pi_.push_back(inst.pi(g).images());
    e_ = index_of(inst.identity(n));

    const std::size_t M = static_cast<std::size_t>(X.morphism_count());
    tuples_ = 1;
    for (int i = 0; i < n; ++i) tuples_ *= M;
    uf_ = std::make_unique<UnionFind>(G * G * tuples_);
    for (std::size_t a = 0; a < G; ++a)
      for (std::size_t b = 0; b < G; ++b)
        for (std::size_t t = 0; t < tuples_; ++t)
          for (std::size_t h = 0; h < G; ++h) {
            // ((a,b),F) ~ ((ah,bh), F_{pi(h)(i)})
            const auto F = decode(t);
            std::vector<int> moved(F.size());
            for (int i = 0; i < n; ++i) moved[i] = F[pi_[h][i] - 1];
            uf_->unite(id(a, b, t), id(mul_[a][h], mul_[b][h], encode(moved)));
          }
  }

  std::size_t group_order() const { return elems_.size(); }

  /// Class of the hom-set morphism (g, f) viewed as ((e, g), f).
  std::size_t class_of(const aop::BorelMorphism& m) { return uf_->find(id(e_, index_of(m.g), encode(m.f))); }

  /// Classes of all morphisms whose source is equivalent to (e; x) and target to (e; y).
  std::vector<std::size_t> classes_between(const aop::BorelObject& x, const aop::BorelObject& y) {
    std::map<std::size_t, int> seen;
    const std::size_t G = elems_.size();
    for (std::size_t a = 0; a < G; ++a)
      for (std::size_t b = 0; b < G; ++b)
        for (std::size_t t = 0; t < tuples_; ++t) {
          const auto F = decode(t);
          std::vector<int> s, u;
          for (int f : F) {
            s.push_back(X_.src(f));
            u.push_back(X_.tgt(f));
          }
          if (object_class(a, s) == x && object_class(b, u) == y) seen[uf_->find(id(a, b, t))] = 1;
        }
    std::vector<std::size_t> out;
    for (const auto& [c, _] : seen) out.push_back(c);
    return out;
  }

  /// Composite in the product category, after moving m2 so its source matches m1's target.
  std::size_t compose_class(const aop::BorelMorphism& m2, const aop::BorelMorphism& m1) {
    const std::size_t g1 = index_of(m1.g), g2 = index_of(m2.g);
    // m2 ~ ((g1, g2 g1), k_{pi(g1)(i)})
    std::vector<int> k(m2.f.size());
    for (int i = 0; i < n_; ++i) k[i] = m2.f[pi_[g1][i] - 1];
    std::vector<int> comp(m1.f.size());
    for (int i = 0; i < n_; ++i) comp[i] = X_.compose(k[i], m1.f[i]);
    return uf_->find(id(e_, mul_[g2][g1], encode(comp)));
  }

 private:
  const aop::ActionOperad& inst_;
  int n_;
  const aop::FinCat& X_;
  std::vector<aop::OperadElement> elems_;
  std::vector<std::vector<std::size_t>> mul_;
  std::vector<std::vector<int>> pi_;
  std::size_t e_ = 0;
  std::size_t tuples_ = 1;
  std::unique_ptr<UnionFind> uf_;

  std::size_t index_of(const aop::OperadElement& g) const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (inst_.same(elems_[i], g)) return i;
    throw std::logic_error("element not in enumeration");
  }
  std::size_t id(std::size_t a, std::size_t b, std::size_t t) const {
    return (a * elems_.size() + b) * tuples_ + t;
  }
  std::size_t encode(const std::vector<int>& F) const {
    std::size_t t = 0;
    for (int f : F) t = t * static_cast<std::size_t>(X_.morphism_count()) + static_cast<std::size_t>(f);
    return t;
  }
  std::vector<int> decode(std::size_t t) const {
    std::vector<int> F(static_cast<std::size_t>(n_));
    for (int i = n_ - 1; i >= 0; --i) {
      F[i] = static_cast<int>(t % static_cast<std::size_t>(X_.morphism_count()));
      t /= static_cast<std::size_t>(X_.morphism_count());
    }
    return F;
  }
  // Representative with group part e, found by trying every h.
  aop::BorelObject object_class(std::size_t a, const std::vector<int>& u) const {
    // (a, u) ~ (a h, u_{pi(h)(i)}); pick h = a^-1.
    for (std::size_t h = 0; h < elems_.size(); ++h)
      if (mul_[a][h] == e_) {
        aop::BorelObject b;
        for (int i = 0; i < n_; ++i) b.objects.push_back(u[pi_[h][i] - 1]);
        return b;
      }
    throw std::logic_error("no inverse");
  }
};

/// Small categories used across tests.
inline aop::FinCat walking_arrow_plus_point() {
  // a -f-> b, and c.
  aop::FinCat c;
  c.objects = {"a", "b", "c"};
  c.morphisms = {{"id_a", 0, 0}, {"id_b", 1, 1}, {"id_c", 2, 2}, {"f", 0, 1}};
  c.identities = {0, 1, 2};
  c.table.assign(4, std::vector<int>(4, -1));
  for (int i = 0; i < 3; ++i) c.table[i][i] = i;
  c.table[3][0] = 3;
  c.table[1][3] = 3;
  aop::validate_fincat(c);
  return c;
}

inline std::vector<aop::BorelObject> all_objects(const aop::FinCat& X, int n) {
  std::vector<aop::BorelObject> out;
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  for (;;) {
    out.push_back({digits});
    int i = n - 1;
    while (i >= 0 && ++digits[i] == X.object_count()) digits[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

}  // namespace oracle
