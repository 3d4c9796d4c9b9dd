#include "aop/axioms.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"

namespace aop {

namespace {

using Elements = std::vector<OperadElement>;

enum class Outcome : std::uint8_t { Pass, Fail, Inconclusive };

/// One family of cases: integer parameters plus one domain (by arity) per
/// element slot. Its cases are the product of the domains.
struct Shape {
  std::vector<std::vector<int>> params;
  std::vector<int> slots;
};

using Check = std::function<Outcome(const Shape&, const std::vector<const OperadElement*>&,
                                    std::string*)>;

struct Axiom {
  std::string id;
  std::string statement;
  std::vector<Shape> shapes;
  Check check;
};

int weight(const std::vector<int>& k) {
  int w = 0;
  for (int x : k) w += std::max(x, 1);
  return w;
}

int total(const std::vector<int>& k) { return std::accumulate(k.begin(), k.end(), 0); }

/// All lists of naturals with weight <= budget, by length then lexicographically.
std::vector<std::vector<int>> lists(int budget) {
  std::vector<std::vector<int>> out{{}};
  std::vector<std::vector<int>> layer{{}};
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& l : layer)
      for (int x = 0; weight(l) + std::max(x, 1) <= budget; ++x) {
        auto m = l;
        m.push_back(x);
        next.push_back(std::move(m));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<std::vector<int>> lists_of_length(int len, int budget) {
  std::vector<std::vector<int>> out;
  for (auto& l : lists(budget))
    if (static_cast<int>(l.size()) == len) out.push_back(std::move(l));
  return out;
}

std::string show(const std::vector<int>& k) {
  std::string s = "[";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + "]";
}

class Checker {
 public:
  Checker(const ActionOperad& inst, const CheckConfig& cfg) : inst_(inst), cfg_(cfg) {
    for (int n = 0; n <= cfg.max_arity; ++n) domains_.push_back(inst.domain(n, cfg.max_word_len));
  }

  AxiomReport run() {
    AxiomReport report{inst_.name(), cfg_, {}};
    for (const Axiom& ax : axioms()) report.rows.push_back(run_axiom(ax));
    return report;
  }

 private:
  const ActionOperad& inst_;
  const CheckConfig& cfg_;
  std::vector<Elements> domains_;

  const Elements& dom(int n) const { return domains_[static_cast<std::size_t>(n)]; }

  std::size_t count(const Shape& s) const {
    std::size_t c = 1;
    for (int a : s.slots) c *= dom(a).size();
    return c;
  }

  std::string fmt(const OperadElement& g) const {
    return std::to_string(g.arity) + ":" + inst_.format(g);
  }
  std::string fmt(const std::vector<const OperadElement*>& gs, std::size_t from, std::size_t to) const {
    std::string s = "(";
    for (std::size_t i = from; i < to; ++i) s += (i > from ? ", " : "") + fmt(*gs[i]);
    return s + ")";
  }
  static Elements copy(const std::vector<const OperadElement*>& gs, std::size_t from, std::size_t to) {
    Elements out;
    for (std::size_t i = from; i < to; ++i) out.push_back(*gs[i]);
    return out;
  }

  // `context` is only rendered when a message is requested.
  template <class Ctx>
  Outcome same(const OperadElement& a, const OperadElement& b, std::string* msg,
               Ctx&& context) const {
    const EqResult r = inst_.equal(a, b, cfg_.bounds);
    if (r.is_equal()) return Outcome::Pass;
    if (msg)
      *msg = context() + "; lhs = " + fmt(a) + ", rhs = " + fmt(b) +
             (r.verdict == EqResult::Verdict::Distinct ? " (distinct by " + r.invariant + ")"
                                                       : " (inconclusive)");
    return r.verdict == EqResult::Verdict::Distinct ? Outcome::Fail : Outcome::Inconclusive;
  }

  template <class Ctx>
  static Outcome same_perm(const Perm& a, const Perm& b, std::string* msg, Ctx&& context) {
    if (a == b) return Outcome::Pass;
    if (msg) *msg = context() + "; lhs = " + to_string(a) + ", rhs = " + to_string(b);
    return Outcome::Fail;
  }

  std::vector<Axiom> axioms() const;

  AxiomRow run_axiom(const Axiom& ax) const {
    AxiomRow row{ax.id, ax.statement, 0, 0, 0, 0, std::nullopt};
    std::vector<std::size_t> prefix{0};
    for (const Shape& s : ax.shapes) prefix.push_back(prefix.back() + count(s));
    row.total = prefix.back();

    std::vector<std::size_t> cases;
    if (row.total <= cfg_.max_cases) {
      cases.resize(row.total);
      std::iota(cases.begin(), cases.end(), std::size_t{0});
    } else {
      std::mt19937_64 rng(cfg_.seed);
      cases.reserve(cfg_.max_cases);
      // Selection sampling: keeps case order and needs no index table.
      std::uniform_int_distribution<std::size_t> pick;
      for (std::size_t i = 0; i < row.total && cases.size() < cfg_.max_cases; ++i) {
        const std::size_t need = cfg_.max_cases - cases.size();
        if (pick(rng, decltype(pick)::param_type(0, row.total - i - 1)) < need) cases.push_back(i);
      }
    }
    row.checked = cases.size();

    auto evaluate = [&](std::size_t index, std::string* msg) {
      const auto it = std::upper_bound(prefix.begin(), prefix.end(), index);
      const std::size_t si = static_cast<std::size_t>(it - prefix.begin()) - 1;
      const Shape& shape = ax.shapes[si];
      std::size_t rest = index - prefix[si];
      std::vector<const OperadElement*> elems(shape.slots.size());
      for (std::size_t j = shape.slots.size(); j-- > 0;) {
        const Elements& d = dom(shape.slots[j]);
        elems[j] = &d[rest % d.size()];
        rest /= d.size();
      }
      try {
        return ax.check(shape, elems, msg);
      } catch (const std::exception& e) {
        if (msg) *msg = std::string("exception: ") + e.what();
        return Outcome::Fail;
      }
    };

    std::vector<Outcome> outcomes(cases.size());
    const auto n = static_cast<std::ptrdiff_t>(cases.size());
    if (cfg_.parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (std::ptrdiff_t i = 0; i < n; ++i)
        outcomes[static_cast<std::size_t>(i)] = evaluate(cases[static_cast<std::size_t>(i)], nullptr);
    } else {
      for (std::ptrdiff_t i = 0; i < n; ++i)
        outcomes[static_cast<std::size_t>(i)] = evaluate(cases[static_cast<std::size_t>(i)], nullptr);
    }

    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (outcomes[i] == Outcome::Inconclusive) ++row.inconclusive;
      if (outcomes[i] != Outcome::Fail) continue;
      if (row.failed++ == 0) {
        std::string msg;
        evaluate(cases[i], &msg);
        row.counterexample = "case " + std::to_string(cases[i]) + ": " + msg;
      }
    }
    return row;
  }
};

std::vector<Axiom> Checker::axioms() const {
  const int N = cfg_.max_arity;
  const ActionOperad& L = inst_;
  std::vector<Axiom> out;

  // Shapes shared by several axioms.
  std::vector<Shape> by_list, by_list_twice;
  for (const auto& k : lists(N)) {
    by_list.push_back({{k}, k});
    auto twice = k;
    twice.insert(twice.end(), k.begin(), k.end());
    by_list_twice.push_back({{k}, twice});
  }
  std::vector<Shape> g_and_sizes;  // params {n-list {n}, k}; slot: g in Lambda(n)
  std::vector<Shape> gh_and_sizes;
  std::vector<Shape> g_sizes_blocks;  // g in Lambda(n), h_i in Lambda(k_i)
  for (int n = 0; n <= N; ++n)
    for (const auto& k : lists_of_length(n, N)) {
      g_and_sizes.push_back({{{n}, k}, {n}});
      gh_and_sizes.push_back({{{n}, k}, {n, n}});
      std::vector<int> slots{n};
      slots.insert(slots.end(), k.begin(), k.end());
      g_sizes_blocks.push_back({{{n}, k}, slots});
    }

  out.push_back({"pi-hom", "pi(g h) = pi(g) pi(h), g inv(g) = e", {}, nullptr});
  for (int n = 0; n <= N; ++n) out.back().shapes.push_back({{{n}}, {n, n}});
  out.back().check = [&L, this](const Shape& s, const auto& e, std::string* msg) {
    const auto& g = *e[0];
    const auto& h = *e[1];
    auto ctx = [&] { return "g = " + fmt(g) + ", h = " + fmt(h); };
    const Outcome a = same_perm(L.pi(L.mul(g, h)), L.pi(g) * L.pi(h), msg, ctx);
    if (a != Outcome::Pass) return a;
    return same(L.mul(g, L.inv(g)), L.identity(s.params[0][0]), msg, [&] { return ctx() + ", g inv(g)"; });
  };

  out.push_back({"1", "pi(beta(h_1..h_n)) = block_sum(pi(h_i))", by_list, nullptr});
  out.back().check = [&L, this](const Shape&, const auto& e, std::string* msg) {
    const Elements hs = copy(e, 0, e.size());
    std::vector<Perm> ps;
    for (const auto& h : hs) ps.push_back(L.pi(h));
    return same_perm(L.pi(L.beta(hs)), block_sum(ps), msg, [&] { return "h = " + fmt(e, 0, e.size()); });
  };

  out.push_back({"2", "beta(g) = g", {}, nullptr});
  for (int n = 0; n <= N; ++n) out.back().shapes.push_back({{}, {n}});
  out.back().check = [&L, this](const Shape&, const auto& e, std::string* msg) {
    const Elements one{*e[0]};
    return same(L.beta(one), *e[0], msg, [&] { return "g = " + fmt(*e[0]); });
  };

  // beta associativity: groups of lists, empty groups allowed, weight per group >= 1.
  out.push_back({"3", "beta(beta(g_1..), .., beta(..g_m)) = beta(g_1..g_m)", {}, nullptr});
  {
    std::function<void(std::vector<std::vector<int>>&, int)> rec =
        [&](std::vector<std::vector<int>>& groups, int budget) {
          std::vector<int> slots;
          for (const auto& g : groups) slots.insert(slots.end(), g.begin(), g.end());
          out.back().shapes.push_back({groups, slots});
          for (const auto& g : lists(budget)) {
            const int w = std::max(weight(g), 1);
            if (w > budget) continue;
            groups.push_back(g);
            rec(groups, budget - w);
            groups.pop_back();
          }
        };
    std::vector<std::vector<int>> groups;
    rec(groups, N);
  }
  out.back().check = [&L, this](const Shape& s, const auto& e, std::string* msg) {
    Elements inner;
    std::size_t at = 0;
    for (const auto& g : s.params) {
      const Elements part = copy(e, at, at + g.size());
      at += g.size();
      if (part.empty()) {
        inner.push_back(L.identity(0));
      } else {
        inner.push_back(L.beta(part));
      }
    }
    return same(L.beta(inner), L.beta(copy(e, 0, e.size())), msg, [&] { return "g = " + fmt(e, 0, e.size()); });
  };

  out.push_back({"4", "pi(delta(g; k)) = block_perm(pi(g), k)", g_and_sizes, nullptr});
  out.back().check = [&L, this](const Shape& s, const auto& e, std::string* msg) {
    const auto& k = s.params[1];
    return same_perm(L.pi(L.delta(*e[0], k)), block_perm(L.pi(*e[0]), k), msg, [&] { return "g = " + fmt(*e[0]) + ", k = " + show(k); });
  };

  out.push_back({"5", "delta(g; 1..1) = g and delta(e_1; n) = e_n", {}, nullptr});
  for (int n = 0; n <= N; ++n) out.back().shapes.push_back({{{n}}, {n}});
  out.back().check = [&L, this](const Shape& s, const auto& e, std::string* msg) {
    const int n = s.params[0][0];
    const std::vector<int> ones(static_cast<std::size_t>(n), 1);
    const Outcome a = same(L.delta(*e[0], ones), *e[0], msg, [&] { return "g = " + fmt(*e[0]); });
    if (a != Outcome::Pass) return a;
    const int one[] = {n};
    return same(L.delta(L.identity(1), one), L.identity(n), msg, [&] { return "n = " + std::to_string(n); });
  };

  out.push_back({"6", "delta(g; k) delta(h; j) = delta(g h; j), k_i = j_{pi(h)^-1(i)}", gh_and_sizes,
                 nullptr});
  out.back().check = [&L, this](const Shape& s, const auto& e, std::string* msg) {
    const auto& g = *e[0];
    const auto& h = *e[1];
    const auto& j = s.params[1];
    const Perm ph_inv = inverse(L.pi(h));
    std::vector<int> k(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
      k[i] = j[static_cast<std::size_t>(ph_inv(static_cast<int>(i) + 1) - 1)];
    return same(L.mul(L.delta(g, k), L.delta(h, j)), L.delta(L.mul(g, h), j), msg, [&] { return "g = " + fmt(g) + ", h = " + fmt(h) + ", j = " + show(j); });
  };

  out.push_back({"7", "delta(delta(f; m); p) = delta(f; P), P_i = sum of block i of p", {}, nullptr});
  for (int n = 0; n <= N; ++n)
    for (const auto& m : lists_of_length(n, N))
      for (const auto& p : lists_of_length(total(m), N)) out.back().shapes.push_back({{m, p}, {n}});
  out.back().check = [&L, this](const Shape& s, const auto& e, std::string* msg) {
    const auto& m = s.params[0];
    const auto& p = s.params[1];
    std::vector<int> P;
    std::size_t at = 0;
    for (int mi : m) {
      int sum = 0;
      for (int t = 0; t < mi; ++t) sum += p[at++];
      P.push_back(sum);
    }
    return same(L.delta(L.delta(*e[0], m), p), L.delta(*e[0], P), msg, [&] { return "f = " + fmt(*e[0]) + ", m = " + show(m) + ", p = " + show(p); });
  };

  out.push_back({"8", "delta(g; k) beta(h) = beta(h_{pi(g)^-1(i)}) delta(g; k)", g_sizes_blocks,
                 nullptr});
  out.back().check = [&L, this](const Shape& s, const auto& e, std::string* msg) {
    const auto& g = *e[0];
    const auto& k = s.params[1];
    const Elements hs = copy(e, 1, e.size());
    const Perm pg_inv = inverse(L.pi(g));
    Elements twisted;
    for (std::size_t i = 0; i < hs.size(); ++i)
      twisted.push_back(hs[static_cast<std::size_t>(pg_inv(static_cast<int>(i) + 1) - 1)]);
    const OperadElement d = L.delta(g, k);
    return same(L.mul(d, L.beta(hs)), L.mul(L.beta(twisted), d), msg, [&] { return "g = " + fmt(g) + ", k = " + show(k) + ", h = " + fmt(e, 1, e.size()); });
  };

  // beta(delta(g_1; k^1), ..) = delta(beta(g_1..); k^1 ++ ..)
  out.push_back({"9", "beta(delta(g_i; k^i)) = delta(beta(g); concatenated k)", {}, nullptr});
  {
    std::function<void(std::vector<std::vector<int>>&, int)> rec =
        [&](std::vector<std::vector<int>>& groups, int budget) {
          std::vector<int> slots;
          for (const auto& g : groups) slots.push_back(static_cast<int>(g.size()));
          out.back().shapes.push_back({groups, slots});
          for (const auto& k : lists(budget)) {
            const int w = std::max(weight(k), 1);
            if (w > budget) continue;
            groups.push_back(k);
            rec(groups, budget - w);
            groups.pop_back();
          }
        };
    std::vector<std::vector<int>> groups;
    rec(groups, N);
  }
  out.back().check = [&L, this](const Shape& s, const auto& e, std::string* msg) {
    Elements parts;
    std::vector<int> all;
    for (std::size_t i = 0; i < s.params.size(); ++i) {
      parts.push_back(L.delta(*e[i], s.params[i]));
      all.insert(all.end(), s.params[i].begin(), s.params[i].end());
    }
    return same(L.beta(parts), L.delta(L.beta(copy(e, 0, e.size())), all), msg, [&] { return "g = " + fmt(e, 0, e.size()) + ", k = " + show(all); });
  };

  // Action law with f~_i = f_{pi(g')(i)} in Lambda(k_i) as the free parameter.
  out.push_back({"action", "mu(g; f) mu(g'; f') = mu(g g'; f_{pi(g')(i)} f'_i)", {}, nullptr});
  for (int n = 0; n <= N; ++n)
    for (const auto& k : lists_of_length(n, N)) {
      std::vector<int> slots{n, n};
      slots.insert(slots.end(), k.begin(), k.end());
      slots.insert(slots.end(), k.begin(), k.end());
      out.back().shapes.push_back({{{n}, k}, slots});
    }
  out.back().check = [&L, this](const Shape& s, const auto& e, std::string* msg) {
    const int n = s.params[0][0];
    const auto& g = *e[0];
    const auto& g2 = *e[1];
    const Elements ft = copy(e, 2, 2 + static_cast<std::size_t>(n));
    const Elements f2 = copy(e, 2 + static_cast<std::size_t>(n), e.size());
    const Perm pg2 = L.pi(g2);
    const Perm pg2_inv = inverse(pg2);
    Elements f(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) f[static_cast<std::size_t>(j - 1)] = ft[static_cast<std::size_t>(pg2_inv(j) - 1)];
    Elements prod;
    for (int i = 0; i < n; ++i)
      prod.push_back(L.mul(f[static_cast<std::size_t>(pg2(i + 1) - 1)], f2[static_cast<std::size_t>(i)]));
    std::string ctx;
    if (msg) {
      ctx = "g = " + fmt(g) + ", g' = " + fmt(g2) + ", f = (";
      for (int i = 0; i < n; ++i) ctx += (i ? ", " : "") + fmt(f[static_cast<std::size_t>(i)]);
      ctx += "), f' = " + fmt(e, 2 + static_cast<std::size_t>(n), e.size());
    }
    return same(L.mul(L.mu(g, f), L.mu(g2, f2)), L.mu(L.mul(g, g2), prod), msg, [&] { return ctx; });
  };

  out.push_back({"op-assoc", "mu(mu(f; g); h) = mu(f; mu(g_i; h_i))", {}, nullptr});
  for (int n = 0; n <= N; ++n)
    for (const auto& k : lists_of_length(n, N))
      for (const auto& l : lists_of_length(total(k), N)) {
        std::vector<int> slots{n};
        slots.insert(slots.end(), k.begin(), k.end());
        slots.insert(slots.end(), l.begin(), l.end());
        out.back().shapes.push_back({{k, l}, slots});
      }
  out.back().check = [&L, this](const Shape& s, const auto& e, std::string* msg) {
    const auto& k = s.params[0];
    const auto& f = *e[0];
    const Elements gs = copy(e, 1, 1 + k.size());
    const Elements hs = copy(e, 1 + k.size(), e.size());
    Elements inner;
    std::size_t at = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      const Elements hi(hs.begin() + static_cast<std::ptrdiff_t>(at),
                        hs.begin() + static_cast<std::ptrdiff_t>(at + static_cast<std::size_t>(k[i])));
      at += static_cast<std::size_t>(k[i]);
      inner.push_back(L.mu(gs[i], hi));
    }
    return same(L.mu(L.mu(f, gs), hs), L.mu(f, inner), msg, [&] { return "f = " + fmt(f) + ", g = " + fmt(e, 1, 1 + k.size()) + ", h = " +
                    fmt(e, 1 + k.size(), e.size()); });
  };

  out.push_back({"beta-hom", "beta(g) beta(h) = beta(g_i h_i)", by_list_twice, nullptr});
  out.back().check = [&L, this](const Shape& s, const auto& e, std::string* msg) {
    const std::size_t m = s.params[0].size();
    const Elements g = copy(e, 0, m), h = copy(e, m, 2 * m);
    Elements gh;
    for (std::size_t i = 0; i < m; ++i) gh.push_back(L.mul(g[i], h[i]));
    return same(L.mul(L.beta(g), L.beta(h)), L.beta(gh), msg, [&] { return "g = " + fmt(e, 0, m) + ", h = " + fmt(e, m, 2 * m); });
  };

  return out;
}

}  // namespace

bool AxiomReport::passed(bool strict) const {
  return std::ranges::all_of(rows, [strict](const AxiomRow& r) { return r.passed(strict); });
}

std::size_t AxiomReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.failed;
  return n;
}

std::size_t AxiomReport::inconclusive() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.inconclusive;
  return n;
}

std::size_t AxiomReport::cases() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.checked;
  return n;
}

AxiomReport check_axioms(const ActionOperad& inst, const CheckConfig& config) {
  return Checker(inst, config).run();
}

std::string format_report(const AxiomReport& report, bool strict) {
  std::ostringstream os;
  os << "axioms operad=" << report.operad << " max_arity=" << report.config.max_arity
     << " max_word_len=" << report.config.max_word_len << "\n";
  for (const auto& r : report.rows) {
    os << (r.passed(strict) ? "  pass " : "  FAIL ") << r.id << ": " << r.statement
       << "  checked=" << r.checked;
    if (r.sampled()) os << " (sampled of " << r.total << ")";
    os << " failed=" << r.failed << " inconclusive=" << r.inconclusive << "\n";
    if (r.counterexample) os << "    counterexample " << *r.counterexample << "\n";
  }
  os << "result: " << (report.passed(strict) ? "pass" : "fail") << " cases=" << report.cases()
     << " failed=" << report.failures() << " inconclusive=" << report.inconclusive() << "\n";
  return os.str();
}

std::string report_json(const AxiomReport& report, bool strict) {
  nlohmann::ordered_json j;
  j["operad"] = report.operad;
  j["max_arity"] = report.config.max_arity;
  j["max_word_len"] = report.config.max_word_len;
  j["axioms"] = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json row;
    row["id"] = r.id;
    row["statement"] = r.statement;
    row["passed"] = r.passed(strict);
    row["total"] = r.total;
    row["checked"] = r.checked;
    row["failed"] = r.failed;
    row["inconclusive"] = r.inconclusive;
    if (r.counterexample) row["counterexample"] = *r.counterexample;
    j["axioms"].push_back(row);
  }
  j["passed"] = report.passed(strict);
  return j.dump(2) + "\n";
}

}  // namespace aop
