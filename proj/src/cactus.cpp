#include "aop/cactus.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "aop/error.hpp"

namespace aop {

std::pair<int, int> CactusAlphabet::interval(int id) {
  int q = 2;
  while (q * (q - 1) / 2 <= id) ++q;
  return {id - (q - 1) * (q - 2) / 2 + 1, q};
}

bool CactusAlphabet::valid(int gen, int arity) const {
  if (gen < 0) return false;
  const auto [p, q] = interval(gen);
  return 1 <= p && p < q && q <= arity;
}

std::vector<int> CactusAlphabet::generators(int arity) const {
  std::vector<int> out;
  for (int q = 2; q <= arity; ++q)
    for (int p = 1; p < q; ++p) out.push_back(id(p, q));
  return out;
}

Perm CactusAlphabet::letter_pi(int gen, int arity) const {
  const auto [p, q] = interval(gen);
  return s_hat(p, q, arity);
}

std::string CactusAlphabet::format(Letter l) const {
  const auto [p, q] = interval(l.gen);
  return "s(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::optional<Letter> CactusAlphabet::parse(std::string_view token) const {
  if (token.size() < 6 || token.substr(0, 2) != "s(" || token.back() != ')') return std::nullopt;
  const std::string_view body = token.substr(2, token.size() - 3);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  int p = 0, q = 0;
  auto r1 = std::from_chars(body.data(), body.data() + comma, p);
  auto r2 = std::from_chars(body.data() + comma + 1, body.data() + body.size(), q);
  if (r1.ec != std::errc() || r1.ptr != body.data() + comma) return std::nullopt;
  if (r2.ec != std::errc() || r2.ptr != body.data() + body.size()) return std::nullopt;
  if (p < 1 || p >= q) return std::nullopt;
  return Letter{id(p, q), 1};
}

Perm s_hat(int p, int q, int n) {
  if (p < 1 || p >= q || q > n)
    throw InputError("s_hat: need 1 <= p < q <= n, got p=" + std::to_string(p) +
                     " q=" + std::to_string(q) + " n=" + std::to_string(n));
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (int i = p; i <= q; ++i) images[static_cast<std::size_t>(i - 1)] = p + q - i;
  return Perm(std::move(images));
}

Letter s_letter(int p, int q) { return {CactusAlphabet::id(p, q), 1}; }

Word s_word(int p, int q, int n) {
  Word w{n, {}};
  if (p < q) w.letters.push_back(s_letter(p, q));
  return w;
}

RelationSystem cactus_relations(int n) {
  RelationSystem sys;
  sys.arity = n;
  auto alphabet = std::make_shared<const CactusAlphabet>();
  sys.alphabet = alphabet;
  const std::vector<int> gens = alphabet->generators(n);
  auto word = [n](std::initializer_list<Letter> ls) { return Word{n, std::vector<Letter>(ls)}; };

  for (int g : gens) {
    const Letter s{g, 1};
    sys.relations.push_back({word({s, s}), word({}), alphabet->format(s) + "^2 = e"});
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto [p, q] = CactusAlphabet::interval(gens[i]);
      const auto [k, l] = CactusAlphabet::interval(gens[j]);
      if (q < k || l < p) {
        const Letter x{gens[i], 1}, y{gens[j], 1};
        sys.relations.push_back({word({x, y}), word({y, x}),
                                 "disjoint " + alphabet->format(x) + " " + alphabet->format(y)});
      }
    }
  for (int outer : gens) {
    const auto [p, q] = CactusAlphabet::interval(outer);
    const Perm sh = s_hat(p, q, n);
    for (int inner : gens) {
      if (inner == outer) continue;
      const auto [k, l] = CactusAlphabet::interval(inner);
      if (!(p <= k && l <= q)) continue;
      const int a = sh(l), b = sh(k);
      const Letter x{outer, 1}, y{inner, 1}, z = s_letter(a, b);
      sys.relations.push_back({word({x, y}), word({z, x}),
                               "contain " + alphabet->format(x) + " " + alphabet->format(y)});
    }
  }
  sys.invariants.push_back(
      {"pi", [alphabet](const Word& w) { return to_string(word_pi(w, *alphabet)); }});
  return sys;
}

Word cactus_beta(std::span<const Word> ws) {
  Word out{0, {}};
  for (const Word& w : ws) out.arity += w.arity;
  int offset = 0;
  for (const Word& w : ws) {
    for (Letter l : w.letters) {
      const auto [p, q] = CactusAlphabet::interval(l.gen);
      out.letters.push_back(s_letter(p + offset, q + offset));
    }
    offset += w.arity;
  }
  return free_reduce(out, CactusAlphabet{});
}

Word cactus_delta_gen(int p, int q, int n, std::span<const int> sizes) {
  if (p < 1 || p >= q || q > n || static_cast<int>(sizes.size()) != n)
    throw InputError("cactus_delta_gen: need 1 <= p < q <= n = #sizes");
  int before = 0;
  for (int i = 1; i < p; ++i) before += sizes[static_cast<std::size_t>(i - 1)];
  int span_total = 0;
  for (int i = p; i <= q; ++i) span_total += sizes[static_cast<std::size_t>(i - 1)];
  const int arity = std::accumulate(sizes.begin(), sizes.end(), 0);

  // s(A+1, A+K) * beta(e_A, m_{k_p}, ..., m_{k_q}, e_B), m_k = s(1,k).
  Word out = s_word(before + 1, before + span_total, arity);
  int offset = before;
  for (int i = p; i <= q; ++i) {
    const int k = sizes[static_cast<std::size_t>(i - 1)];
    if (k >= 2) out.letters.push_back(s_letter(offset + 1, offset + k));
    offset += k;
  }
  return free_reduce(out, CactusAlphabet{});
}

Word commutor(int m, int n) {
  if (m < 1 || n < 1) throw InputError("commutor: need m, n >= 1");
  Word out = s_word(1, m + n, m + n);
  if (m >= 2) out.letters.push_back(s_letter(1, m));
  if (n >= 2) out.letters.push_back(s_letter(m + 1, m + n));
  return out;
}

CactusOperad::CactusOperad() : WordOperad(std::make_shared<const CactusAlphabet>()) {}

std::vector<OperadElement> CactusOperad::enumerate(int n) const {
  if (n > 2) throw InputError("J_" + std::to_string(n) + " is infinite");
  std::vector<OperadElement> out{identity(n)};
  if (n == 2) out.push_back(element(s_word(1, 2, 2)));
  return out;
}

Word CactusOperad::delta_gen(Letter l, std::span<const int> sizes) const {
  const auto [p, q] = CactusAlphabet::interval(l.gen);
  return cactus_delta_gen(p, q, static_cast<int>(sizes.size()), sizes);
}

Letter CactusOperad::shift(Letter l, int offset) const {
  const auto [p, q] = CactusAlphabet::interval(l.gen);
  return s_letter(p + offset, q + offset);
}

std::shared_ptr<const CactusOperad> make_cactus() { return std::make_shared<const CactusOperad>(); }

// ---------------------------------------------------------------------------
// Coboundary and well-definedness suites

namespace {

const CactusOperad& cactus() {
  static const CactusOperad instance;
  return instance;
}

CactusCheck run_check(std::string label, Word lhs, Word rhs, SearchBounds bounds) {
  const auto sys = cactus().relations(lhs.arity);
  CactusCheck c{std::move(label), std::move(lhs), std::move(rhs), {}};
  c.result = equal(c.lhs, c.rhs, *sys, bounds);
  return c;
}

std::string pair_label(const char* what, std::initializer_list<int> xs) {
  std::string s = what;
  s += "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

std::vector<CactusCheck> check_commutor_involution(int max_total, SearchBounds bounds) {
  std::vector<CactusCheck> out;
  for (int total = 2; total <= max_total; ++total)
    for (int m = 1; m < total; ++m) {
      const int n = total - m;
      Word lhs = concat(commutor(n, m), commutor(m, n));
      out.push_back(run_check(pair_label("sigma-involution", {m, n}), std::move(lhs),
                              Word{total, {}}, bounds));
    }
  return out;
}

std::vector<CactusCheck> check_coboundary_square(int max_total, SearchBounds bounds) {
  std::vector<CactusCheck> out;
  const CactusOperad& J = cactus();
  for (int total = 3; total <= max_total; ++total)
    for (int m = 1; m <= total - 2; ++m)
      for (int n = 1; m + n <= total - 1; ++n) {
        const int p = total - m - n;
        const Word left_beta[] = {Word{m, {}}, commutor(n, p)};
        const Word right_beta[] = {commutor(m, n), Word{p, {}}};
        Word lhs = concat(commutor(m, p + n), cactus_beta(left_beta));
        Word rhs = concat(commutor(n + m, p), cactus_beta(right_beta));
        (void)J;
        out.push_back(run_check(pair_label("coboundary-square", {m, n, p}), std::move(lhs),
                                std::move(rhs), bounds));
      }
  return out;
}

std::vector<CactusCheck> check_commutor_is_delta(int max_total, SearchBounds bounds) {
  std::vector<CactusCheck> out;
  const CactusOperad& J = cactus();
  const OperadElement s12 = J.element(s_word(1, 2, 2));
  for (int total = 2; total <= max_total; ++total)
    for (int m = 1; m < total; ++m) {
      const int n = total - m;
      const int sizes[] = {m, n};
      Word d = J.delta(s12, sizes).word();
      out.push_back(run_check(pair_label("commutor=delta", {m, n}), commutor(m, n), std::move(d),
                              bounds));
    }
  return out;
}

std::vector<CactusCheck> check_delta_well_defined(int max_n, int min_size, int max_size,
                                                  SearchBounds bounds) {
  std::vector<CactusCheck> out;
  const CactusOperad& J = cactus();
  for (int n = 2; n <= max_n; ++n) {
    const auto sys = J.relations(n);
    std::vector<int> sizes(static_cast<std::size_t>(n), min_size);
    for (;;) {
      for (const Relation& rel : sys->relations) {
        const OperadElement lhs{J.name(), n, rel.lhs};
        const OperadElement rhs{J.name(), n, rel.rhs};
        std::string label = "delta[" + rel.label + "] sizes=";
        for (std::size_t i = 0; i < sizes.size(); ++i)
          label += (i ? "," : "") + std::to_string(sizes[i]);
        out.push_back(run_check(std::move(label), J.delta(lhs, sizes).word(),
                                J.delta(rhs, sizes).word(), bounds));
      }
      std::size_t i = 0;
      while (i < sizes.size() && sizes[i] == max_size) sizes[i++] = min_size;
      if (i == sizes.size()) break;
      ++sizes[i];
    }
  }
  return out;
}

}  // namespace aop
