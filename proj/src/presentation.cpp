#include "aop/presentation.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "aop/error.hpp"

namespace aop {

using nlohmann::json;

void GeneratorCollection::add(Generator g) {
  if (g.name.empty()) throw InputError("generator without a name");
  if (contains(g.name)) throw InputError("generator " + g.name + " declared twice");
  if (g.pi.arity() != g.arity)
    throw InputError("generator " + g.name + ": permutation " + to_string(g.pi) + " has arity " +
                     std::to_string(g.pi.arity()) + ", declared " + std::to_string(g.arity));
  gens_.push_back(std::move(g));
}

bool GeneratorCollection::contains(std::string_view name) const {
  for (const auto& g : gens_)
    if (g.name == name) return true;
  return false;
}

const Generator& GeneratorCollection::at(std::string_view name) const {
  for (const auto& g : gens_)
    if (g.name == name) return g;
  throw InputError("unknown generator '" + std::string(name) + "'");
}

Term Term::gen(std::string name) {
  Term t;
  t.kind = Kind::Gen;
  t.name = std::move(name);
  return t;
}

Term Term::id(int n) {
  Term t;
  t.kind = Kind::Id;
  t.n = n;
  return t;
}

Term Term::mul(Term a, Term b) {
  Term t;
  t.kind = Kind::Mul;
  t.args = {std::make_shared<const Term>(std::move(a)), std::make_shared<const Term>(std::move(b))};
  return t;
}

Term Term::inv(Term a) {
  Term t;
  t.kind = Kind::Inv;
  t.args = {std::make_shared<const Term>(std::move(a))};
  return t;
}

Term Term::beta(std::vector<Term> parts) {
  Term t;
  t.kind = Kind::Beta;
  for (auto& p : parts) t.args.push_back(std::make_shared<const Term>(std::move(p)));
  return t;
}

Term Term::delta(Term a, std::vector<int> sizes) {
  Term t;
  t.kind = Kind::Delta;
  t.args = {std::make_shared<const Term>(std::move(a))};
  t.sizes = std::move(sizes);
  return t;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = term();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("term: " + what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  static bool name_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',' && c != ';' && c != '[' &&
           c != ']';
  }
  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }
  int number() {
    skip();
    int v = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc() || v < 0) fail("expected a non-negative integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  Term term() {
    const std::string head = word();
    expect('(');
    Term t;
    if (head == "gen") {
      t = Term::gen(word());
    } else if (head == "id") {
      t = Term::id(number());
    } else if (head == "mul") {
      Term a = term();
      expect(',');
      Term b = term();
      t = Term::mul(std::move(a), std::move(b));
    } else if (head == "inv") {
      t = Term::inv(term());
    } else if (head == "beta") {
      std::vector<Term> parts;
      if (!peek(')')) {
        parts.push_back(term());
        while (peek(',')) {
          ++pos_;
          parts.push_back(term());
        }
      }
      t = Term::beta(std::move(parts));
    } else if (head == "delta") {
      Term a = term();
      expect(';');
      expect('[');
      std::vector<int> sizes;
      if (!peek(']')) {
        sizes.push_back(number());
        while (peek(',')) {
          ++pos_;
          sizes.push_back(number());
        }
      }
      expect(']');
      t = Term::delta(std::move(a), std::move(sizes));
    } else {
      fail("unknown constructor '" + head + "'");
    }
    expect(')');
    return t;
  }
};

std::string join_sizes(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

std::string format_term(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Gen:
      return "gen(" + t.name + ")";
    case Term::Kind::Id:
      return "id(" + std::to_string(t.n) + ")";
    case Term::Kind::Mul:
      return "mul(" + format_term(*t.args[0]) + "," + format_term(*t.args[1]) + ")";
    case Term::Kind::Inv:
      return "inv(" + format_term(*t.args[0]) + ")";
    case Term::Kind::Beta: {
      std::string out = "beta(";
      for (std::size_t i = 0; i < t.args.size(); ++i) out += (i ? "," : "") + format_term(*t.args[i]);
      return out + ")";
    }
    case Term::Kind::Delta:
      return "delta(" + format_term(*t.args[0]) + ";[" + join_sizes(t.sizes) + "])";
  }
  return {};
}

int term_arity(const Term& t, const GeneratorCollection& gens) {
  switch (t.kind) {
    case Term::Kind::Gen:
      return gens.at(t.name).arity;
    case Term::Kind::Id:
      return t.n;
    case Term::Kind::Mul: {
      const int a = term_arity(*t.args[0], gens), b = term_arity(*t.args[1], gens);
      if (a != b)
        throw InputError("mul of arities " + std::to_string(a) + " and " + std::to_string(b) + " in " + format_term(t));
      return a;
    }
    case Term::Kind::Inv:
      return term_arity(*t.args[0], gens);
    case Term::Kind::Beta: {
      int total = 0;
      for (const auto& a : t.args) total += term_arity(*a, gens);
      return total;
    }
    case Term::Kind::Delta: {
      const int a = term_arity(*t.args[0], gens);
      if (a != static_cast<int>(t.sizes.size()))
        throw InputError("delta of an arity " + std::to_string(a) + " term with " + std::to_string(t.sizes.size()) +
                         " sizes in " + format_term(t));
      int total = 0;
      for (int k : t.sizes) total += k;
      return total;
    }
  }
  return 0;
}

Perm term_pi(const Term& t, const GeneratorCollection& gens) {
  term_arity(t, gens);
  switch (t.kind) {
    case Term::Kind::Gen:
      return gens.at(t.name).pi;
    case Term::Kind::Id:
      return Perm::identity(t.n);
    case Term::Kind::Mul:
      return compose(term_pi(*t.args[0], gens), term_pi(*t.args[1], gens));
    case Term::Kind::Inv:
      return inverse(term_pi(*t.args[0], gens));
    case Term::Kind::Beta: {
      std::vector<Perm> parts;
      for (const auto& a : t.args) parts.push_back(term_pi(*a, gens));
      return block_sum(parts);
    }
    case Term::Kind::Delta:
      return block_perm(term_pi(*t.args[0], gens), t.sizes);
  }
  return Perm{};
}

void check_interpretation(const GeneratorCollection& gens, const Interpretation& interp, const ActionOperad& inst) {
  for (const auto& g : gens.all()) {
    auto it = interp.find(g.name);
    if (it == interp.end()) throw InputError("generator " + g.name + " is not interpreted");
    if (it->second.arity != g.arity)
      throw InputError("generator " + g.name + " has arity " + std::to_string(g.arity) + " but is sent to arity " +
                       std::to_string(it->second.arity));
    const Perm p = inst.pi(it->second);
    if (p != g.pi)
      throw InputError("generator " + g.name + " has permutation " + to_string(g.pi) + " but " +
                       inst.format(it->second) + " has " + to_string(p));
  }
}

Interpretation parse_interpretation(const std::map<std::string, std::string>& text, const GeneratorCollection& gens,
                                    const ActionOperad& inst) {
  Interpretation out;
  for (const auto& [name, elem] : text) out[name] = inst.parse(elem, gens.at(name).arity);
  check_interpretation(gens, out, inst);
  return out;
}

namespace {

OperadElement eval(const Term& t, const Interpretation& interp, const ActionOperad& inst) {
  switch (t.kind) {
    case Term::Kind::Gen:
      return interp.at(t.name);
    case Term::Kind::Id:
      return inst.identity(t.n);
    case Term::Kind::Mul:
      return inst.mul(eval(*t.args[0], interp, inst), eval(*t.args[1], interp, inst));
    case Term::Kind::Inv:
      return inst.inv(eval(*t.args[0], interp, inst));
    case Term::Kind::Beta: {
      std::vector<OperadElement> parts;
      for (const auto& a : t.args) parts.push_back(eval(*a, interp, inst));
      return inst.beta(parts);
    }
    case Term::Kind::Delta:
      return inst.delta(eval(*t.args[0], interp, inst), t.sizes);
  }
  return inst.identity(0);
}

}  // namespace

OperadElement eval_term(const Term& t, const GeneratorCollection& gens, const Interpretation& interp,
                        const ActionOperad& inst) {
  check_interpretation(gens, interp, inst);
  term_arity(t, gens);
  return eval(t, interp, inst);
}

void check_relations(const Presentation& p) {
  for (const auto& r : p.relations) {
    const std::string text = format_term(r.lhs) + " = " + format_term(r.rhs);
    const int a = term_arity(r.lhs, p.generators), b = term_arity(r.rhs, p.generators);
    if (a != b)
      throw InputError("relation " + text + " relates arities " + std::to_string(a) + " and " + std::to_string(b));
    const Perm pa = term_pi(r.lhs, p.generators), pb = term_pi(r.rhs, p.generators);
    if (pa != pb)
      throw InputError("relation " + text + " relates permutations " + to_string(pa) + " and " + to_string(pb));
  }
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  try {
    for (const auto& g : j.at("generators")) {
      const auto& pi = g.at("pi");
      Perm perm = pi.is_string() ? parse_perm(pi.get<std::string>()) : Perm(pi.get<std::vector<int>>());
      p.generators.add({g.at("name").get<std::string>(), g.at("arity").get<int>(), std::move(perm)});
    }
    for (const auto& r : j.value("relations", json::array()))
      p.relations.push_back({parse_term(r.at("lhs").get<std::string>()), parse_term(r.at("rhs").get<std::string>())});
    if (j.contains("interpretations"))
      p.interpretations = j.at("interpretations").get<std::map<std::string, std::map<std::string, std::string>>>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed presentation: ") + e.what());
  }
  check_relations(p);
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return presentation_from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

json presentation_to_json(const Presentation& p) {
  nlohmann::ordered_json j;
  j["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : p.generators.all())
    j["generators"].push_back({{"name", g.name}, {"arity", g.arity}, {"pi", g.pi.images()}});
  j["relations"] = nlohmann::ordered_json::array();
  for (const auto& r : p.relations) j["relations"].push_back({{"lhs", format_term(r.lhs)}, {"rhs", format_term(r.rhs)}});
  j["interpretations"] = p.interpretations;
  return j;
}

namespace {

Presentation from_text(const std::vector<std::pair<std::string, std::string>>& relations,
                       std::map<std::string, std::map<std::string, std::string>> interps) {
  Presentation p;
  p.generators.add({"s", 2, Perm({2, 1})});
  for (const auto& [l, r] : relations) p.relations.push_back({parse_term(l), parse_term(r)});
  p.interpretations = std::move(interps);
  check_relations(p);
  return p;
}

}  // namespace

Presentation coboundary_presentation() {
  return from_text({{"mul(gen(s),gen(s))", "id(2)"},
                    {"mul(delta(gen(s);[1,2]),beta(id(1),gen(s)))", "mul(delta(gen(s);[2,1]),beta(gen(s),id(1)))"}},
                   {{"cactus", {{"s", "s(1,2)"}}}, {"sym", {{"s", "[2,1]"}}}});
}

Presentation symmetric_presentation() {
  return from_text({{"mul(gen(s),gen(s))", "id(2)"},
                    {"mul(mul(beta(gen(s),id(1)),beta(id(1),gen(s))),beta(gen(s),id(1)))",
                     "mul(mul(beta(id(1),gen(s)),beta(gen(s),id(1))),beta(id(1),gen(s)))"},
                    {"delta(gen(s);[1,2])", "mul(beta(id(1),gen(s)),beta(gen(s),id(1)))"},
                    {"delta(gen(s);[2,1])", "mul(beta(gen(s),id(1)),beta(id(1),gen(s)))"}},
                   {{"sym", {{"s", "[2,1]"}}}, {"braid", {{"s", "b1"}}}, {"cactus", {{"s", "s(1,2)"}}}});
}

bool PresentationReport::holds() const {
  for (const auto& r : rows)
    if (!r.result.is_equal()) return false;
  return true;
}

bool PresentationReport::refuted() const {
  for (const auto& r : rows)
    if (r.result.verdict == EqResult::Verdict::Distinct) return true;
  return false;
}

bool PresentationReport::inconclusive() const {
  for (const auto& r : rows)
    if (r.result.verdict == EqResult::Verdict::Inconclusive) return true;
  return false;
}

PresentationReport check_presentation(const Presentation& p, const Interpretation& interp, const ActionOperad& inst,
                                      SearchBounds bounds) {
  check_interpretation(p.generators, interp, inst);
  PresentationReport rep;
  rep.operad = inst.name();
  for (const auto& r : p.relations) {
    const OperadElement a = eval_term(r.lhs, p.generators, interp, inst);
    const OperadElement b = eval_term(r.rhs, p.generators, interp, inst);
    rep.rows.push_back({format_term(r.lhs), format_term(r.rhs), inst.equal(a, b, bounds)});
  }
  return rep;
}

std::string format_presentation_report(const PresentationReport& r, const ActionOperad&) {
  std::ostringstream os;
  for (const auto& row : r.rows) {
    os << to_string(row.result.verdict) << ": " << row.lhs << " = " << row.rhs;
    if (!row.result.invariant.empty()) os << " [" << row.result.invariant << "]";
    os << '\n';
  }
  os << "result: " << (r.holds() ? "holds" : r.refuted() ? "refuted" : "inconclusive") << " relations=" << r.rows.size()
     << '\n';
  return os.str();
}

}  // namespace aop
