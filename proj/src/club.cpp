#include "aop/club.hpp"

#include <map>

#include "aop/borel.hpp"
#include "aop/error.hpp"

namespace aop {

OperadElement club_mult(const ActionOperad& inst, const OperadElement& head,
                        std::span<const OperadElement> legs) {
  return inst.mu(head, legs);
}

namespace {

class OperadClub final : public Club {
 public:
  OperadClub(OperadPtr inst, int bound) : inst_(std::move(inst)), bound_(bound) {}

  std::string name() const override { return inst_->name(); }
  std::vector<int> objects(int max_arity) const override {
    std::vector<int> out;
    for (int n = 0; n <= max_arity; ++n) out.push_back(n);
    return out;
  }
  int arity(int object) const override { return object; }
  bool finite_hom(int a, int) const override { return inst_->is_finite(a); }
  std::vector<ClubMorphism> hom(int a, int b) const override {
    std::vector<ClubMorphism> out;
    if (a != b) return out;
    for (auto& g : inst_->domain(a, bound_)) out.push_back({a, a, std::move(g)});
    return out;
  }
  ClubMorphism identity(int a) const override { return {a, a, inst_->identity(a)}; }
  ClubMorphism compose(const ClubMorphism& g, const ClubMorphism& f) const override {
    if (g.src != f.tgt) throw InputError("club: cannot compose");
    return {f.src, g.tgt, inst_->mul(g.cell, f.cell)};
  }
  ClubMorphism inverse(const ClubMorphism& f) const override { return {f.tgt, f.src, inst_->inv(f.cell)}; }
  Perm pi(const ClubMorphism& f) const override { return inst_->pi(f.cell); }
  ClubMorphism mult(const ClubMorphism& head, std::span<const ClubMorphism> legs) const override {
    std::vector<OperadElement> cells;
    int src = 0, tgt = 0;
    for (const auto& l : legs) {
      cells.push_back(l.cell);
      src += l.src;
      tgt += l.tgt;
    }
    return {src, tgt, club_mult(*inst_, head.cell, cells)};
  }
  bool same(const ClubMorphism& a, const ClubMorphism& b) const override {
    return a.src == b.src && a.tgt == b.tgt && inst_->same(a.cell, b.cell);
  }
  std::string format(const ClubMorphism& f) const override { return inst_->format(f.cell); }
  ClubMorphism parse(std::string_view text, int object) const override {
    return {object, object, inst_->parse(text, object)};
  }

 private:
  OperadPtr inst_;
  int bound_;
};

/// The action operad read off a club.
class ClubOperad final : public ActionOperad {
 public:
  ClubOperad(ClubPtr club, std::map<int, int> object_of_arity)
      : club_(std::move(club)), object_of_(std::move(object_of_arity)) {}

  std::string name() const override { return club_->name(); }

  EqResult equal(const OperadElement& a, const OperadElement& b, SearchBounds = {}) const override {
    EqResult r;
    if (club_->same(wrap(a), wrap(b))) {
      r.verdict = EqResult::Verdict::Equal;
    } else if (pi_impl(a) != pi_impl(b)) {
      r.verdict = EqResult::Verdict::Distinct;
      r.invariant = "pi";
    } else if (is_finite(a.arity)) {
      r.verdict = EqResult::Verdict::Distinct;
      r.invariant = "club";
    }
    return r;
  }
  bool is_finite(int n) const override { return club_->finite_hom(obj(n), obj(n)); }
  std::vector<OperadElement> enumerate(int n) const override {
    if (!is_finite(n)) throw InputError("hom-set of " + std::to_string(n) + " is infinite");
    std::vector<OperadElement> out;
    for (auto& m : club_->hom(obj(n), obj(n))) out.push_back(std::move(m.cell));
    return out;
  }
  std::vector<OperadElement> ball(int n, int) const override {
    std::vector<OperadElement> out;
    for (auto& m : club_->hom(obj(n), obj(n))) out.push_back(std::move(m.cell));
    return out;
  }
  /// Every non-identity element of the listed hom-set is a generator.
  std::vector<OperadElement> generators(int n) const override {
    std::vector<OperadElement> out;
    for (auto& g : ball(n, 0))
      if (!same(g, identity(n))) out.push_back(std::move(g));
    return out;
  }
  GenWord factor(const OperadElement& g) const override {
    const auto gens = generators(g.arity);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (same(gens[i], g)) return {GenLetter{static_cast<int>(i), 1}};
    if (same(g, identity(g.arity))) return {};
    throw InputError("element outside the listed hom-set");
  }
  /// The multiplication table of the listed generators.
  std::vector<std::pair<GenWord, GenWord>> generator_relations(int n) const override {
    std::vector<std::pair<GenWord, GenWord>> out;
    const auto gens = generators(n);
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = 0; b < gens.size(); ++b) {
        GenWord lhs{GenLetter{static_cast<int>(a), 1}, GenLetter{static_cast<int>(b), 1}};
        out.emplace_back(std::move(lhs), factor(mul(gens[a], gens[b])));
      }
    return out;
  }
  std::string format(const OperadElement& g) const override { return club_->format(wrap(g)); }
  OperadElement parse(std::string_view text, int n) const override {
    return club_->parse(text, obj(n)).cell;
  }

 protected:
  OperadElement identity_impl(int n) const override { return club_->identity(obj(n)).cell; }
  Perm pi_impl(const OperadElement& g) const override { return club_->pi(wrap(g)); }
  OperadElement mul_impl(const OperadElement& g, const OperadElement& h) const override {
    return club_->compose(wrap(g), wrap(h)).cell;
  }
  OperadElement inv_impl(const OperadElement& g) const override { return club_->inverse(wrap(g)).cell; }
  // beta(g) = e_n(g_1..g_n)
  OperadElement beta_impl(std::span<const OperadElement> hs) const override {
    std::vector<ClubMorphism> legs;
    for (const auto& h : hs) legs.push_back(wrap(h));
    const int n = static_cast<int>(hs.size());
    return club_->mult(club_->identity(obj(n)), legs).cell;
  }
  // delta(f; k) = f(e_{k_1}..e_{k_n})
  OperadElement delta_impl(const OperadElement& g, std::span<const int> sizes) const override {
    if (static_cast<int>(sizes.size()) != g.arity) throw InputError("delta: arity mismatch");
    std::vector<ClubMorphism> legs;
    for (int k : sizes) legs.push_back(club_->identity(obj(k)));
    return club_->mult(wrap(g), legs).cell;
  }

 private:
  ClubPtr club_;
  std::map<int, int> object_of_;

  int obj(int n) const {
    const auto it = object_of_.find(n);
    if (it == object_of_.end()) throw InputError("club has no object over " + std::to_string(n));
    return it->second;
  }
  ClubMorphism wrap(const OperadElement& g) const { return {obj(g.arity), obj(g.arity), g}; }
};

}  // namespace

ClubPtr club_from(OperadPtr inst, int bound) {
  return std::make_shared<const OperadClub>(std::move(inst), bound);
}

OperadPtr operad_from_club(ClubPtr club, int max_arity) {
  std::map<int, int> object_of;
  const auto objs = club->objects(max_arity);
  for (int o : objs) {
    const int n = club->arity(o);
    if (n < 0 || n > max_arity)
      throw InputError("object " + std::to_string(o) + " lies over " + std::to_string(n));
    if (!object_of.emplace(n, o).second)
      throw InputError("not bijective on objects: two objects over " + std::to_string(n));
  }
  for (int n = 0; n <= max_arity; ++n)
    if (!object_of.count(n)) throw InputError("not bijective on objects: nothing over " + std::to_string(n));

  for (int a : objs)
    for (int b : objs) {
      const auto hs = club->hom(a, b);
      if (a != b && !hs.empty())
        throw InputError("morphism between objects over different arities");
      for (const auto& f : hs) {
        const auto inv = club->inverse(f);
        if (!club->same(club->compose(inv, f), club->identity(a)) ||
            !club->same(club->compose(f, inv), club->identity(b)))
          throw InputError("not a groupoid: " + club->format(f) + " has no inverse");
        if (club->pi(f).arity() != club->arity(a))
          throw InputError("functor to B Sigma changes arity at " + club->format(f));
      }
    }
  return std::make_shared<const ClubOperad>(std::move(club), std::move(object_of));
}

PullbackReport check_pullback(const ActionOperad& inst, int n, const FinCat& X) {
  if (!inst.is_finite(n)) throw InputError(inst.name() + "(" + std::to_string(n) + ") is infinite");
  const auto sym = std::make_shared<const SymmetricOperad>();
  PullbackReport r;
  r.arity = n;
  auto fail = [&r](std::string why) {
    if (r.failures++ == 0) r.detail = std::move(why);
  };

  const auto elems = inst.enumerate(n);
  std::vector<BorelObject> objs;
  {
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (;;) {
      objs.push_back({digits});
      int i = n - 1;
      while (i >= 0 && ++digits[static_cast<std::size_t>(i)] == X.object_count()) digits[static_cast<std::size_t>(i--)] = 0;
      if (i < 0 || X.object_count() == 0) break;
    }
  }
  // Objects: (g; x) must normalise the same way on both sides.
  for (const auto& g : elems)
    for (const auto& x : objs)
      if (normalize(inst, g, x.objects) != normalize(*sym, sym->element(inst.pi(g)), x.objects))
        fail("object (" + inst.format(g) + "; " + format_borel_object(x, X) + ") normalises differently");

  for (const auto& x : objs)
    for (const auto& y : objs) {
      ++r.object_pairs;
      const auto up = hom_set(x, y, X, inst);
      const auto down = hom_set(x, y, X, *sym);
      for (const auto& g : elems) {
        const Perm p = inst.pi(g);
        for (const auto& s : down) {
          if (s.g.perm() != p) continue;
          ++r.downstairs;
          int lifts = 0;
          for (const auto& u : up)
            if (inst.same(u.g, g) && inst.pi(u.g) == s.g.perm() && u.f == s.f) ++lifts;
          if (lifts != 1)
            fail(std::to_string(lifts) + " lifts of (" + inst.format(g) + ", " +
                 format_borel_morphism(s, X, *sym) + ") from " + format_borel_object(x, X) + " to " +
                 format_borel_object(y, X));
        }
      }
      // Every upstairs morphism maps to a compatible pair.
      for (const auto& u : up) {
        bool found = false;
        for (const auto& s : down) found = found || (s.g.perm() == inst.pi(u.g) && s.f == u.f);
        if (!found) fail("upstairs morphism " + format_borel_morphism(u, X, inst) + " has no image");
      }
    }
  return r;
}

}  // namespace aop
