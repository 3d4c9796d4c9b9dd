#include "aop/braid.hpp"

#include <charconv>
#include <numeric>

#include "aop/error.hpp"

namespace aop {

std::vector<int> BraidAlphabet::generators(int arity) const {
  std::vector<int> out;
  for (int g = 0; g + 1 < arity; ++g) out.push_back(g);
  return out;
}

Perm BraidAlphabet::letter_pi(int gen, int arity) const {
  return adjacent_transposition(gen + 1, arity);
}

std::string BraidAlphabet::format(Letter l) const {
  return (l.sign > 0 ? "b" : "B") + std::to_string(l.gen + 1);
}

std::optional<Letter> BraidAlphabet::parse(std::string_view token) const {
  if (token.size() < 2 || (token[0] != 'b' && token[0] != 'B')) return std::nullopt;
  int i = 0;
  auto r = std::from_chars(token.data() + 1, token.data() + token.size(), i);
  if (r.ec != std::errc() || r.ptr != token.data() + token.size() || i < 1) return std::nullopt;
  return Letter{i - 1, token[0] == 'b' ? 1 : -1};
}

Letter braid_letter(int i, int sign) { return {i - 1, sign}; }

RelationSystem braid_relations(int n, bool with_derived) {
  RelationSystem sys;
  sys.arity = n;
  auto alphabet = std::make_shared<const BraidAlphabet>();
  sys.alphabet = alphabet;
  auto word = [n](std::initializer_list<Letter> ls) { return Word{n, std::vector<Letter>(ls)}; };
  auto name = [&](Letter l) { return alphabet->format(l); };

  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      const Letter x = braid_letter(i), y = braid_letter(j);
      sys.relations.push_back({word({x, y}), word({y, x}), "commute " + name(x) + " " + name(y)});
    }
  for (int i = 1; i + 1 < n; ++i) {
    const Letter x = braid_letter(i), y = braid_letter(i + 1);
    sys.relations.push_back({word({x, y, x}), word({y, x, y}), "braid " + name(x) + " " + name(y)});
  }

  if (with_derived) {
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        for (int s : {1, -1})
          for (int t : {1, -1}) {
            if (s == 1 && t == 1) continue;
            const Letter x = braid_letter(i, s), y = braid_letter(j, t);
            sys.relations.push_back({word({x, y}), word({y, x}), "derived commute"});
          }
    for (int i = 1; i + 1 < n; ++i) {
      const Letter x = braid_letter(i), y = braid_letter(i + 1);
      const Letter X = x.inverse(), Y = y.inverse();
      sys.relations.push_back({word({X, Y, X}), word({Y, X, Y}), "derived braid"});
      for (auto [u, v] : {std::pair{x, y}, std::pair{y, x}}) {
        const Letter U = u.inverse(), V = v.inverse();
        sys.relations.push_back({word({u, v, U}), word({V, u, v}), "derived braid"});
        sys.relations.push_back({word({u, V, U}), word({V, U, v}), "derived braid"});
      }
    }
  }

  sys.invariants.push_back(
      {"pi", [alphabet](const Word& w) { return to_string(word_pi(w, *alphabet)); }});
  sys.invariants.push_back({"exponent_sum", [](const Word& w) { return std::to_string(exponent_sum(w)); }});
  return sys;
}

int exponent_sum(const Word& w) {
  int s = 0;
  for (Letter l : w.letters) s += l.sign;
  return s;
}

Word braid_beta(std::span<const Word> ws) {
  Word out{0, {}};
  for (const Word& w : ws) out.arity += w.arity;
  int offset = 0;
  for (const Word& w : ws) {
    for (Letter l : w.letters) out.letters.push_back({l.gen + offset, l.sign});
    offset += w.arity;
  }
  return free_reduce(out, BraidAlphabet{});
}

Word block_cross(int p, int a, int b, int arity) {
  if (p < 1 || a < 0 || b < 0) throw InputError("block_cross: need p >= 1 and a, b >= 0");
  if (arity < 0) arity = std::max(p + a + b - 1, 0);
  if (p + a + b - 1 > arity) throw InputError("block_cross: blocks exceed the arity");
  Word out{arity, {}};
  for (int r = 1; r <= a; ++r)
    for (int i = p + r + b - 2; i >= p + r - 1; --i) out.letters.push_back(braid_letter(i));
  return out;
}

Word braid_delta_gen(int i, int n, std::span<const int> sizes) {
  if (i < 1 || i >= n || static_cast<int>(sizes.size()) != n)
    throw InputError("braid_delta_gen: need 1 <= i <= n-1 and n = #sizes");
  int start = 1;
  for (int j = 0; j + 1 < i; ++j) start += sizes[static_cast<std::size_t>(j)];
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  return block_cross(start, sizes[static_cast<std::size_t>(i - 1)], sizes[static_cast<std::size_t>(i)],
                     total);
}

BraidOperad::BraidOperad() : WordOperad(std::make_shared<const BraidAlphabet>()) {}

std::vector<OperadElement> BraidOperad::enumerate(int n) const {
  if (n > 1) throw InputError("B_" + std::to_string(n) + " is infinite");
  return {identity(n)};
}

Word BraidOperad::delta_gen(Letter l, std::span<const int> sizes) const {
  return braid_delta_gen(l.gen + 1, static_cast<int>(sizes.size()), sizes);
}

std::shared_ptr<const BraidOperad> make_braid() { return std::make_shared<const BraidOperad>(); }

}  // namespace aop
