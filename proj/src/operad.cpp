#include "aop/operad.hpp"

#include <algorithm>
#include <numeric>

#include "aop/error.hpp"

namespace aop {

namespace {

int total(std::span<const int> sizes) { return std::accumulate(sizes.begin(), sizes.end(), 0); }

}  // namespace

// ---------------------------------------------------------------------------
// ActionOperad

const std::string& ActionOperad::tag() const {
  std::call_once(tag_once_, [this] { tag_ = name(); });
  return tag_;
}

void ActionOperad::check_tag(const OperadElement& g, const char* op) const {
  if (g.tag != tag())
    throw InputError(std::string(op) + ": element of '" + g.tag + "' passed to '" + name() + "'");
}

Perm ActionOperad::pi(const OperadElement& g) const {
  check_tag(g, "pi");
  return pi_impl(g);
}

OperadElement ActionOperad::mul(const OperadElement& g, const OperadElement& h) const {
  check_tag(g, "mul");
  check_tag(h, "mul");
  if (g.arity != h.arity)
    throw InputError("mul: arity mismatch " + std::to_string(g.arity) + " vs " +
                     std::to_string(h.arity));
  return mul_impl(g, h);
}

OperadElement ActionOperad::inv(const OperadElement& g) const {
  check_tag(g, "inv");
  return inv_impl(g);
}

OperadElement ActionOperad::beta(std::span<const OperadElement> hs) const {
  for (const auto& h : hs) check_tag(h, "beta");
  return beta_impl(hs);
}

OperadElement ActionOperad::delta(const OperadElement& g, std::span<const int> sizes) const {
  check_tag(g, "delta");
  if (static_cast<int>(sizes.size()) != g.arity)
    throw InputError("delta: " + std::to_string(sizes.size()) + " sizes for arity " +
                     std::to_string(g.arity));
  if (std::any_of(sizes.begin(), sizes.end(), [](int k) { return k < 0; }))
    throw InputError("delta: negative block size");
  return delta_impl(g, sizes);
}

OperadElement ActionOperad::mu(const OperadElement& g, std::span<const OperadElement> hs) const {
  check_tag(g, "mu");
  if (static_cast<int>(hs.size()) != g.arity)
    throw InputError("mu: " + std::to_string(hs.size()) + " inputs for arity " +
                     std::to_string(g.arity));
  std::vector<int> sizes;
  sizes.reserve(hs.size());
  for (const auto& h : hs) sizes.push_back(h.arity);
  return mul(delta(g, sizes), beta(hs));
}

std::vector<OperadElement> ActionOperad::ball(int n, int max_len) const {
  // Products of generators and their inverses, deduplicated by the oracle.
  std::vector<OperadElement> out{identity(n)};
  std::vector<OperadElement> layer = out;
  std::vector<OperadElement> steps;
  for (const auto& g : generators(n)) {
    steps.push_back(g);
    steps.push_back(inv(g));
  }
  for (int len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<OperadElement> next;
    for (const auto& w : layer)
      for (const auto& s : steps) {
        OperadElement c = mul(w, s);
        const bool seen = std::any_of(out.begin(), out.end(),
                                      [&](const OperadElement& o) { return same(o, c); });
        if (!seen) {
          out.push_back(c);
          next.push_back(c);
        }
      }
    layer = std::move(next);
  }
  return out;
}

std::vector<OperadElement> ActionOperad::domain(int n, int max_len) const {
  return is_finite(n) ? enumerate(n) : ball(n, max_len);
}

OperadElement ActionOperad::eval_gen_word(const GenWord& w, int n) const {
  const auto gens = generators(n);
  OperadElement out = identity(n);
  for (const GenLetter& l : w) {
    if (l.index < 0 || l.index >= static_cast<int>(gens.size()))
      throw InputError("generator index out of range");
    const OperadElement& g = gens[static_cast<std::size_t>(l.index)];
    out = mul(out, l.sign < 0 ? inv(g) : g);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Trivial

EqResult TrivialOperad::equal(const OperadElement& a, const OperadElement& b, SearchBounds) const {
  check_tag(a, "equal");
  check_tag(b, "equal");
  if (a.arity != b.arity) throw InputError("equal: arity mismatch");
  EqResult r;
  r.verdict = EqResult::Verdict::Equal;
  return r;
}

std::string TrivialOperad::format(const OperadElement&) const { return "e"; }

OperadElement TrivialOperad::parse(std::string_view text, int n) const {
  if (text != "e") throw InputError("trivial elements are written 'e'");
  if (n < 0) throw InputError("trivial elements need an explicit arity");
  return identity(n);
}

OperadElement TrivialOperad::identity_impl(int n) const { return {name(), n, std::monostate{}}; }

OperadElement TrivialOperad::beta_impl(std::span<const OperadElement> hs) const {
  int n = 0;
  for (const auto& h : hs) n += h.arity;
  return identity(n);
}

OperadElement TrivialOperad::delta_impl(const OperadElement&, std::span<const int> sizes) const {
  return identity(total(sizes));
}

// ---------------------------------------------------------------------------
// Symmetric

OperadElement SymmetricOperad::element(Perm p) const {
  const int n = p.arity();
  return {name(), n, std::move(p)};
}

EqResult SymmetricOperad::equal(const OperadElement& a, const OperadElement& b, SearchBounds) const {
  check_tag(a, "equal");
  check_tag(b, "equal");
  if (a.arity != b.arity) throw InputError("equal: arity mismatch");
  EqResult r;
  if (a.perm() == b.perm()) {
    r.verdict = EqResult::Verdict::Equal;
  } else {
    r.verdict = EqResult::Verdict::Distinct;
    r.invariant = "pi";
  }
  return r;
}

std::vector<OperadElement> SymmetricOperad::enumerate(int n) const {
  std::vector<OperadElement> out;
  for (Perm& p : all_perms(n)) out.push_back(element(std::move(p)));
  return out;
}

std::vector<OperadElement> SymmetricOperad::generators(int n) const {
  std::vector<OperadElement> out;
  for (int i = 1; i < n; ++i) out.push_back(element(adjacent_transposition(i, n)));
  return out;
}

GenWord SymmetricOperad::factor(const OperadElement& g) const {
  GenWord out;
  for (int i : adjacent_factorization(g.perm())) out.push_back({i - 1, 1});
  return out;
}

std::vector<std::pair<GenWord, GenWord>> SymmetricOperad::generator_relations(int n) const {
  std::vector<std::pair<GenWord, GenWord>> out;
  for (int i = 0; i + 1 < n; ++i) out.push_back({{{i, 1}, {i, 1}}, {}});
  for (int i = 0; i + 1 < n; ++i)
    for (int j = i + 1; j + 1 < n; ++j) {
      if (j == i + 1)
        out.push_back({{{i, 1}, {j, 1}, {i, 1}}, {{j, 1}, {i, 1}, {j, 1}}});
      else
        out.push_back({{{i, 1}, {j, 1}}, {{j, 1}, {i, 1}}});
    }
  return out;
}

OperadElement SymmetricOperad::parse(std::string_view text, int n) const {
  Perm p = parse_perm(text);
  if (n >= 0 && p.arity() != n)
    throw InputError("permutation " + to_string(p) + " does not have arity " + std::to_string(n));
  return element(std::move(p));
}

OperadElement SymmetricOperad::mul_impl(const OperadElement& g, const OperadElement& h) const {
  return element(g.perm() * h.perm());
}

OperadElement SymmetricOperad::inv_impl(const OperadElement& g) const {
  return element(inverse(g.perm()));
}

OperadElement SymmetricOperad::beta_impl(std::span<const OperadElement> hs) const {
  std::vector<int> out;
  for (const auto& h : hs) {
    const int offset = static_cast<int>(out.size());
    for (int v : h.perm().images()) out.push_back(v + offset);
  }
  return element(Perm::trusted(std::move(out)));
}

OperadElement SymmetricOperad::delta_impl(const OperadElement& g, std::span<const int> sizes) const {
  return element(block_perm(g.perm(), sizes));
}

// ---------------------------------------------------------------------------
// WordOperad

OperadElement WordOperad::element(Word w) const {
  check_word(w, *alphabet_);
  const int n = w.arity;
  return {name(), n, free_reduce(w, *alphabet_)};
}

std::shared_ptr<const RelationSystem> WordOperad::relations(int n) const {
  std::lock_guard lock(cache_mutex_);
  auto it = cache_.find(n);
  if (it == cache_.end())
    it = cache_.emplace(n, std::make_shared<const RelationSystem>(build_relations(n))).first;
  return it->second;
}

EqResult WordOperad::equal(const OperadElement& a, const OperadElement& b,
                           SearchBounds bounds) const {
  check_tag(a, "equal");
  check_tag(b, "equal");
  if (a.arity != b.arity) throw InputError("equal: arity mismatch");
  return aop::equal(a.word(), b.word(), *relations(a.arity), bounds);
}

std::vector<OperadElement> WordOperad::ball(int n, int max_len) const {
  std::vector<Letter> letters;
  for (int g : alphabet_->generators(n)) {
    letters.push_back({g, 1});
    if (!alphabet_->involutive(g)) letters.push_back({g, -1});
  }
  std::vector<Word> layer{Word{n, {}}};
  std::vector<OperadElement> out{identity(n)};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (Letter l : letters) {
        if (!w.empty()) {
          const Letter last = w.letters.back();
          if (last.gen == l.gen && (alphabet_->involutive(l.gen) || last.sign == -l.sign)) continue;
        }
        Word x = w;
        x.letters.push_back(l);
        next.push_back(x);
        out.push_back(element(std::move(x)));
      }
    layer = std::move(next);
  }
  return out;
}

std::vector<OperadElement> WordOperad::generators(int n) const {
  std::vector<OperadElement> out;
  for (int g : alphabet_->generators(n)) out.push_back(element(Word{n, {{g, 1}}}));
  return out;
}

GenWord WordOperad::factor(const OperadElement& g) const {
  const auto gens = alphabet_->generators(g.arity);
  GenWord out;
  for (Letter l : g.word().letters) {
    const auto it = std::find(gens.begin(), gens.end(), l.gen);
    out.push_back({static_cast<int>(it - gens.begin()), l.sign});
  }
  return out;
}

std::vector<std::pair<GenWord, GenWord>> WordOperad::generator_relations(int n) const {
  const auto sys = relations(n);
  const auto gens = alphabet_->generators(n);
  auto convert = [&](const Word& w) {
    GenWord out;
    for (Letter l : w.letters) {
      const auto it = std::find(gens.begin(), gens.end(), l.gen);
      out.push_back({static_cast<int>(it - gens.begin()), l.sign});
    }
    return out;
  };
  std::vector<std::pair<GenWord, GenWord>> out;
  for (const Relation& r : sys->relations) out.emplace_back(convert(r.lhs), convert(r.rhs));
  return out;
}

std::string WordOperad::format(const OperadElement& g) const {
  return format_word(g.word(), *alphabet_);
}

OperadElement WordOperad::parse(std::string_view text, int n) const {
  if (n < 0) throw InputError(name() + " elements need an explicit arity (--n or 'n:word')");
  return element(parse_word(text, n, *alphabet_));
}

OperadElement WordOperad::mul_impl(const OperadElement& g, const OperadElement& h) const {
  return element(concat(g.word(), h.word()));
}

OperadElement WordOperad::inv_impl(const OperadElement& g) const {
  return element(inverse(g.word(), *alphabet_));
}

OperadElement WordOperad::beta_impl(std::span<const OperadElement> hs) const {
  Word out{0, {}};
  for (const auto& h : hs) out.arity += h.arity;
  int offset = 0;
  for (const auto& h : hs) {
    for (Letter l : h.word().letters) out.letters.push_back(shift(l, offset));
    offset += h.arity;
  }
  return element(std::move(out));
}

OperadElement WordOperad::delta_impl(const OperadElement& g, std::span<const int> sizes) const {
  const int n = g.arity;
  const auto& letters = g.word().letters;
  std::vector<int> cur(sizes.begin(), sizes.end());
  std::vector<Word> pieces(letters.size());
  for (std::size_t t = letters.size(); t-- > 0;) {
    const Letter x = letters[t];
    const Perm px = alphabet_->letter_pi(x.gen, n);
    std::vector<int> next(cur.size());
    if (x.sign > 0) {
      pieces[t] = delta_gen(x, cur);
      const Perm pinv = inverse(px);
      for (int i = 1; i <= n; ++i)
        next[static_cast<std::size_t>(i - 1)] = cur[static_cast<std::size_t>(pinv(i) - 1)];
    } else {
      // delta_k(y^-1) = delta_j(y)^-1 with j_i = k_{pi(y)(i)}.
      for (int i = 1; i <= n; ++i)
        next[static_cast<std::size_t>(i - 1)] = cur[static_cast<std::size_t>(px(i) - 1)];
      pieces[t] = inverse(delta_gen(x.inverse(), next), *alphabet_);
    }
    cur = std::move(next);
  }
  Word out{total(sizes), {}};
  for (const Word& p : pieces) out.letters.insert(out.letters.end(), p.letters.begin(), p.letters.end());
  return element(std::move(out));
}

OperadPtr make_trivial() { return std::make_shared<const TrivialOperad>(); }
OperadPtr make_symmetric() { return std::make_shared<const SymmetricOperad>(); }

}  // namespace aop
