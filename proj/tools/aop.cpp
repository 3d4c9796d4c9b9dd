// Command-line front end: queries on action operads and batch verification.
// Exit codes: 0 ok, 1 verification failure, 2 inconclusive under --strict, 3 input error.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "aop/axioms.hpp"
#include "aop/borel.hpp"
#include "aop/cactus.hpp"
#include "aop/club.hpp"
#include "aop/error.hpp"
#include "aop/multicat.hpp"
#include "aop/operad.hpp"
#include "aop/presentation.hpp"
#include "aop/profunctor.hpp"
#include "json.hpp"

using namespace aop;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kFail = 1, kInconclusive = 2, kInput = 3;

struct Common {
  std::string operad = "sym";
  int n = -1;
  std::size_t max_len = 0;
  std::size_t budget = 100000;
  int max_arity = 3;
  bool strict = false;
  std::string format = "text";

  SearchBounds bounds() const { return {max_len, budget}; }
  bool structured() const { return format == "structured"; }
};

/// Text and structured renderings of one command's result.
struct Out {
  std::ostringstream text;
  ojson doc = ojson::object();
  int code = kOk;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("not an integer list: '" + s + "'");
    }
  }
  return out;
}

int verdict_code(const EqResult& r, bool strict) {
  if (r.is_equal()) return kOk;
  if (r.verdict == EqResult::Verdict::Distinct) return kFail;
  return strict ? kInconclusive : kOk;
}

void add_common(CLI::App* app, Common& c, bool with_n = true) {
  app->add_option("--operad", c.operad, "trivial, sym, braid or cactus")->capture_default_str();
  if (with_n) app->add_option("--n", c.n, "arity of the elements");
  app->add_option("--max-len", c.max_len, "longest intermediate word (0: automatic)");
  app->add_option("--budget", c.budget, "words visited per equality query")->capture_default_str();
  app->add_option("--max-arity", c.max_arity, "largest arity considered")->capture_default_str();
  app->add_flag("--strict", c.strict, "exit 2 when any verdict is inconclusive");
  app->add_option("--format", c.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
}

// Splits "g | f1,f2" into the element and the morphism names.
std::pair<std::string, std::vector<std::string>> split_borel(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos) throw InputError("morphism must look like 'g | f1,f2': '" + text + "'");
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return std::string();
    return s.substr(a, s.find_last_not_of(" \t") - a + 1);
  };
  std::vector<std::string> fs;
  std::stringstream ss(text.substr(bar + 1));
  std::string item;
  while (std::getline(ss, item, ','))
    if (!trim(item).empty()) fs.push_back(trim(item));
  return {trim(text.substr(0, bar)), fs};
}

BorelMorphism parse_borel_morphism(const std::string& text, const BorelObject& src, const BorelObject& tgt,
                                   const FinCat& X, const ActionOperad& inst) {
  auto [g, fs] = split_borel(text);
  BorelMorphism m{src, tgt, inst.parse(g, src.arity()), {}};
  for (const auto& f : fs) m.f.push_back(X.morphism(f));
  if (static_cast<int>(m.f.size()) != src.arity()) throw InputError("morphism '" + text + "' has the wrong length");
  const Perm p = inst.pi(m.g);
  for (int i = 0; i < src.arity(); ++i) {
    const int f = m.f[static_cast<std::size_t>(i)];
    if (X.src(f) != src.objects[static_cast<std::size_t>(i)] ||
        X.tgt(f) != tgt.objects[static_cast<std::size_t>(p(i + 1) - 1)])
      throw InputError("component " + X.morphism_name(f) + " of '" + text + "' has the wrong source or target");
  }
  return m;
}

}  // namespace

std::vector<std::string> leftover_elements(const CLI::App* sub) {
  std::vector<std::string> out;
  for (const auto& a : sub->remaining()) {
    if (a.size() > 1 && a[0] == '-' && !std::isdigit(static_cast<unsigned char>(a[1])))
      throw CLI::ExtrasError(sub->get_name(), {a});
    out.push_back(a);
  }
  return out;
}

int main(int argc, char** argv) {
  CLI::App app{"Action operads: groups, block sums, diagonals, axiom checks and constructions", "aop"};
  app.require_subcommand(1);
  Common c;
  Out out;
  std::function<void()> action;

  // element queries
  std::vector<std::string> elems;
  std::string sizes, arities;

  auto* pi = app.add_subcommand("pi", "underlying permutation of an element");
  add_common(pi, c);
  pi->add_option("element", elems, "element")->required()->expected(1)->allow_extra_args(false);
  pi->callback([&] {
    action = [&] {
      const auto inst = make_operad(c.operad);
      const auto g = inst->parse(elems.at(0), c.n);
      const std::string p = to_string(inst->pi(g));
      out.text << p << '\n';
      out.doc["pi"] = inst->pi(g).images();
    };
  });

  auto* mul = app.add_subcommand("mul", "product g h (h acts first)");
  add_common(mul, c);
  mul->add_option("elements", elems, "g h")->required()->expected(2)->allow_extra_args(false);
  mul->callback([&] {
    action = [&] {
      const auto inst = make_operad(c.operad);
      const auto r = inst->mul(inst->parse(elems.at(0), c.n), inst->parse(elems.at(1), c.n));
      out.text << inst->format(r) << '\n';
      out.doc["result"] = inst->format(r);
      out.doc["pi"] = inst->pi(r).images();
    };
  });

  auto* beta = app.add_subcommand("beta", "block sum of elements");
  add_common(beta, c, false);
  beta->add_option("--arities", arities, "arity of each element, e.g. 2,1");
  // bracketed positionals would be split by CLI11, so the elements are the leftovers
  beta->allow_extras();
  beta->footer("elements follow the options, e.g. beta [2,1] [1]");
  beta->callback([&] {
    elems = leftover_elements(beta);
    action = [&] {
      const auto inst = make_operad(c.operad);
      const auto ks = parse_ints(arities);
      if (!ks.empty() && ks.size() != elems.size()) throw InputError("--arities needs one entry per element");
      std::vector<OperadElement> hs;
      for (std::size_t i = 0; i < elems.size(); ++i) hs.push_back(inst->parse(elems[i], ks.empty() ? -1 : ks[i]));
      const auto r = inst->beta(hs);
      out.text << inst->format(r) << '\n';
      out.doc["result"] = inst->format(r);
      out.doc["pi"] = inst->pi(r).images();
    };
  });

  auto* delta = app.add_subcommand("delta", "diagonal delta(g; sizes)");
  add_common(delta, c);
  delta->add_option("--sizes", sizes, "block sizes, e.g. 2,1")->required();
  delta->add_option("element", elems, "element")->required()->expected(1)->allow_extra_args(false);
  delta->callback([&] {
    action = [&] {
      const auto inst = make_operad(c.operad);
      const auto r = inst->delta(inst->parse(elems.at(0), c.n), parse_ints(sizes));
      out.text << inst->format(r) << '\n';
      out.doc["result"] = inst->format(r);
      out.doc["pi"] = inst->pi(r).images();
    };
  });

  auto* mu = app.add_subcommand("mu", "operadic composition mu(g; h_1..h_n)");
  add_common(mu, c);
  mu->add_option("--arities", arities, "arities of h_1..h_n");
  mu->allow_extras();
  mu->footer("elements g h_1 .. h_n follow the options");
  mu->callback([&] {
    elems = leftover_elements(mu);
    if (elems.empty()) throw CLI::RequiredError("g h_1 .. h_n");
    action = [&] {
      const auto inst = make_operad(c.operad);
      const auto ks = parse_ints(arities);
      if (!ks.empty() && ks.size() + 1 != elems.size()) throw InputError("--arities needs one entry per h_i");
      const auto g = inst->parse(elems.at(0), c.n);
      std::vector<OperadElement> hs;
      for (std::size_t i = 1; i < elems.size(); ++i) hs.push_back(inst->parse(elems[i], ks.empty() ? -1 : ks[i - 1]));
      const auto r = inst->mu(g, hs);
      out.text << inst->format(r) << '\n';
      out.doc["result"] = inst->format(r);
      out.doc["pi"] = inst->pi(r).images();
    };
  });

  bool explain = false;
  std::string replay_path;
  auto* equal = app.add_subcommand("equal", "decide g = h with the rewrite oracle");
  add_common(equal, c);
  equal->add_flag("--explain", explain, "print the rewrite path of an Equal verdict");
  equal->add_option("--replay", replay_path, "check a printed path from g to h instead of searching");
  equal->add_option("elements", elems, "g h")->required()->expected(2)->allow_extra_args(false);
  equal->callback([&] {
    action = [&] {
      const auto inst = make_operad(c.operad);
      const auto a = inst->parse(elems.at(0), c.n);
      const auto b = inst->parse(elems.at(1), c.n);
      const auto* words = dynamic_cast<const WordOperad*>(inst.get());
      if (!replay_path.empty()) {
        if (!words) throw InputError("--replay needs a word instance (braid or cactus)");
        const auto path = parse_path(replay_path, words->alphabet());
        std::string why;
        const auto end = replay(a.word(), path, *words->relations(a.arity), &why);
        const bool ok = end && *end == b.word();
        out.text << (ok ? "replay: ok" : "replay: rejected") << '\n';
        if (!ok) out.text << (end ? "path ends at " + format_word(*end, words->alphabet()) : why) << '\n';
        out.doc["replay"] = ok;
        if (!ok) out.doc["reason"] = end ? "path ends at " + format_word(*end, words->alphabet()) : why;
        out.code = ok ? kOk : kFail;
        return;
      }
      const EqResult r = inst->equal(a, b, c.bounds());
      out.text << to_string(r.verdict) << '\n';
      out.doc["verdict"] = to_string(r.verdict);
      out.doc["states"] = r.states;
      if (!r.invariant.empty()) {
        out.text << "invariant: " << r.invariant << '\n';
        out.doc["invariant"] = r.invariant;
      }
      if (explain && r.is_equal() && words) {
        const std::string p = format_path(r.path, words->alphabet());
        out.text << "path: " << p << '\n';
        out.doc["path"] = p;
      }
      out.code = verdict_code(r, c.strict);
    };
  });

  std::size_t max_cases = 200000;
  std::uint64_t seed = 0x5eed;
  int max_word_len = 2;
  bool serial = false;
  auto* axioms = app.add_subcommand("axioms", "check the action-operad axioms on bounded cases");
  add_common(axioms, c, false);
  axioms->add_option("--max-word-len", max_word_len, "ball radius for infinite groups")->capture_default_str();
  axioms->add_option("--max-cases", max_cases, "cases per axiom before sampling")->capture_default_str();
  axioms->add_option("--seed", seed, "sampling seed")->capture_default_str();
  axioms->add_flag("--serial", serial, "run without threads");
  axioms->callback([&] {
    action = [&] {
      const auto inst = make_operad(c.operad);
      CheckConfig cfg;
      cfg.max_arity = c.max_arity;
      cfg.max_word_len = max_word_len;
      cfg.max_cases = max_cases;
      cfg.seed = seed;
      cfg.bounds = c.bounds();
      cfg.parallel = !serial;
      const auto rep = check_axioms(*inst, cfg);
      out.text << format_report(rep, c.strict);
      out.doc = ojson::parse(report_json(rep, c.strict));
      out.code = rep.failures() > 0 ? kFail : (c.strict && rep.inconclusive() > 0) ? kInconclusive : kOk;
    };
  });

  // cactus
  auto* cactus = app.add_subcommand("cactus", "cactus group constructions");
  cactus->require_subcommand(1);
  std::vector<int> ints;
  auto* shat = cactus->add_subcommand("shat", "the permutation reversing [p,q] in arity n");
  add_common(shat, c);
  shat->add_option("interval", ints, "interval ends p q")->required()->expected(2);
  shat->callback([&] {
    action = [&] {
      if (c.n < 0) throw InputError("shat needs --n");
      const Perm p = s_hat(ints.at(0), ints.at(1), c.n);
      out.text << to_string(p) << '\n';
      out.doc["pi"] = p.images();
    };
  });
  auto* comm = cactus->add_subcommand("commutor", "the commutor sigma_{m,n}");
  add_common(comm, c, false);
  comm->add_option("blocks", ints, "block sizes m n")->required()->expected(2);
  comm->callback([&] {
    action = [&] {
      const auto J = make_cactus();
      const Word w = commutor(ints.at(0), ints.at(1));
      const std::string text = format_word(w, J->alphabet());
      const Perm p = word_pi(w, J->alphabet());
      out.text << text << '\n' << "pi: " << to_string(p) << '\n';
      out.doc["word"] = text;
      out.doc["pi"] = p.images();
    };
  });
  int max_total = 6;
  int well_defined_n = 0;
  auto* cob = cactus->add_subcommand("coboundary", "commutor involution, square law and commutor = delta");
  add_common(cob, c, false);
  cob->add_option("--max-total", max_total, "largest m+n(+p)")->capture_default_str();
  cob->add_option("--well-defined", well_defined_n, "also check delta on the relations of J_n for n up to this");
  cob->callback([&] {
    action = [&] {
      const auto J = make_cactus();
      std::vector<std::pair<std::string, std::vector<CactusCheck>>> suites;
      suites.emplace_back("involution", check_commutor_involution(max_total, c.bounds()));
      suites.emplace_back("square", check_coboundary_square(max_total, c.bounds()));
      suites.emplace_back("commutor-delta", check_commutor_is_delta(max_total, c.bounds()));
      if (well_defined_n > 0)
        suites.emplace_back("well-defined", check_delta_well_defined(well_defined_n, 1, 3, c.bounds()));
      std::size_t equal_n = 0, distinct = 0, open = 0;
      out.doc["suites"] = ojson::array();
      for (const auto& [name, checks] : suites) {
        std::size_t e = 0, d = 0, i = 0;
        ojson failed = ojson::array();
        for (const auto& ch : checks) {
          if (ch.result.is_equal()) {
            ++e;
            continue;
          }
          (ch.result.verdict == EqResult::Verdict::Distinct ? d : i)++;
          out.text << to_string(ch.result.verdict) << ": " << ch.label << '\n';
          failed.push_back({{"label", ch.label}, {"verdict", to_string(ch.result.verdict)}});
        }
        out.text << name << ": checks=" << checks.size() << " equal=" << e << " distinct=" << d
                 << " inconclusive=" << i << '\n';
        out.doc["suites"].push_back({{"suite", name},
                                     {"checks", checks.size()},
                                     {"equal", e},
                                     {"distinct", d},
                                     {"inconclusive", i},
                                     {"not_equal", failed}});
        equal_n += e;
        distinct += d;
        open += i;
      }
      out.text << "result: " << (distinct ? "fail" : open ? "inconclusive" : "pass") << '\n';
      out.doc["result"] = distinct ? "fail" : open ? "inconclusive" : "pass";
      out.code = distinct ? kFail : (open && c.strict) ? kInconclusive : kOk;
    };
  });

  // borel
  auto* borel = app.add_subcommand("borel", "Borel construction on a finite category");
  borel->require_subcommand(1);
  std::string category, src_text, mid_text, tgt_text;
  int bound = 2;
  auto* bhom = borel->add_subcommand("hom", "list the morphisms [e;x] -> [e;y]");
  add_common(bhom, c, false);
  bhom->add_option("--category", category, "category file")->required();
  bhom->add_option("--src", src_text, "source objects, e.g. a,b")->required();
  bhom->add_option("--tgt", tgt_text, "target objects")->required();
  bhom->add_option("--bound", bound, "ball radius for infinite groups")->capture_default_str();
  bhom->callback([&] {
    action = [&] {
      const auto inst = make_operad(c.operad);
      const FinCat X = load_fincat(category);
      const auto s = parse_borel_object(src_text, X), t = parse_borel_object(tgt_text, X);
      const auto ms = hom_set(s, t, X, *inst, bound);
      out.doc["src"] = format_borel_object(s, X);
      out.doc["tgt"] = format_borel_object(t, X);
      out.doc["finite"] = inst->is_finite(s.arity());
      out.doc["morphisms"] = ojson::array();
      out.text << format_borel_object(s, X) << " -> " << format_borel_object(t, X) << ": " << ms.size()
               << (inst->is_finite(s.arity()) ? "" : " (ball)") << '\n';
      for (const auto& m : ms) {
        out.text << "  " << format_borel_morphism(m, X, *inst) << '\n';
        out.doc["morphisms"].push_back(format_borel_morphism(m, X, *inst));
      }
    };
  });
  auto* bcomp = borel->add_subcommand("compose", "compose m2 o m1 for [e;src] -m1-> [e;mid] -m2-> [e;tgt]");
  add_common(bcomp, c, false);
  bcomp->add_option("--category", category, "category file")->required();
  bcomp->add_option("--src", src_text, "source objects")->required();
  bcomp->add_option("--mid", mid_text, "middle objects")->required();
  bcomp->add_option("--tgt", tgt_text, "target objects")->required();
  bcomp->add_option("morphisms", elems, "m1 m2, each 'g | f1,..'")->required()->expected(2)->allow_extra_args(false);
  bcomp->callback([&] {
    action = [&] {
      const auto inst = make_operad(c.operad);
      const FinCat X = load_fincat(category);
      const auto s = parse_borel_object(src_text, X), m = parse_borel_object(mid_text, X),
                 t = parse_borel_object(tgt_text, X);
      const auto m1 = parse_borel_morphism(elems.at(0), s, m, X, *inst);
      const auto m2 = parse_borel_morphism(elems.at(1), m, t, X, *inst);
      const auto r = compose_borel(m2, m1, X, *inst);
      out.text << format_borel_morphism(r, X, *inst) << '\n';
      out.doc["result"] = format_borel_morphism(r, X, *inst);
    };
  });
  auto* binf = borel->add_subcommand("infinity", "E Lambda(n) is contractible with a free action");
  add_common(binf, c);
  binf->callback([&] {
    action = [&] {
      const auto inst = make_operad(c.operad);
      const int n = c.n < 0 ? c.max_arity : c.n;
      out.doc["arities"] = ojson::array();
      bool ok = true;
      for (int k = (c.n < 0 ? 0 : n); k <= n; ++k) {
        const auto r = lambda_infinity_check(*inst, k);
        out.text << "n=" << k << " objects=" << r.objects << " contractible=" << (r.contractible ? "yes" : "no")
                 << " free=" << (r.free_action ? "yes" : "no") << (r.detail.empty() ? "" : " " + r.detail) << '\n';
        out.doc["arities"].push_back({{"n", k},
                                      {"objects", r.objects},
                                      {"contractible", r.contractible},
                                      {"free_action", r.free_action},
                                      {"detail", r.detail}});
        ok = ok && r.passed();
      }
      out.text << "result: " << (ok ? "pass" : "fail") << '\n';
      out.doc["result"] = ok ? "pass" : "fail";
      out.code = ok ? kOk : kFail;
    };
  });

  // club
  auto* club = app.add_subcommand("club", "club over B Sigma of an action operad");
  club->require_subcommand(1);
  auto* ccheck = club->add_subcommand("check", "operad -> club -> operad roundtrip and axioms");
  add_common(ccheck, c, false);
  ccheck->callback([&] {
    action = [&] {
      const auto inst = make_operad(c.operad);
      const auto K = club_from(inst);
      const auto back = operad_from_club(K, c.max_arity);
      CheckConfig cfg;
      cfg.max_arity = c.max_arity;
      cfg.bounds = c.bounds();
      const auto rep = check_axioms(*back, cfg);
      // beta and delta of the recovered operad agree with the original
      std::size_t compared = 0, differ = 0;
      std::string first;
      for (int n = 0; n <= c.max_arity; ++n)
        for (const auto& g : inst->domain(n, cfg.max_word_len)) {
          const auto g2 = back->parse(inst->format(g), n);
          for (int k = 0; k <= 2; ++k) {
            const std::vector<int> ks(static_cast<std::size_t>(n), k);
            ++compared;
            if (!inst->same(back->delta(g2, ks), inst->delta(g, ks), c.bounds())) {
              ++differ;
              if (first.empty()) first = "delta(" + inst->format(g) + ")";
            }
          }
          const std::vector<OperadElement> pair{g, inst->identity(1)};
          const std::vector<OperadElement> pair2{g2, back->identity(1)};
          ++compared;
          if (!inst->same(back->beta(pair2), inst->beta(pair), c.bounds())) {
            ++differ;
            if (first.empty()) first = "beta(" + inst->format(g) + ", e1)";
          }
        }
      out.text << format_report(rep, c.strict);
      out.text << "roundtrip: compared=" << compared << " differ=" << differ << (first.empty() ? "" : " first=" + first)
               << '\n';
      out.doc["axioms"] = ojson::parse(report_json(rep, c.strict));
      out.doc["roundtrip"] = {{"compared", compared}, {"differ", differ}, {"first", first}};
      const bool fail = rep.failures() > 0 || differ > 0;
      out.code = fail ? kFail : (c.strict && rep.inconclusive() > 0) ? kInconclusive : kOk;
    };
  });
  auto* cpull = club->add_subcommand("pullback", "the Borel construction is a pullback along pi");
  add_common(cpull, c);
  cpull->add_option("--category", category, "category file")->required();
  cpull->callback([&] {
    action = [&] {
      const auto inst = make_operad(c.operad);
      const FinCat X = load_fincat(category);
      const int n = c.n < 0 ? 2 : c.n;
      const auto r = check_pullback(*inst, n, X);
      out.text << "n=" << r.arity << " object_pairs=" << r.object_pairs << " downstairs=" << r.downstairs
               << " failures=" << r.failures << (r.detail.empty() ? "" : " first=" + r.detail) << '\n'
               << "result: " << (r.passed() ? "pass" : "fail") << '\n';
      out.doc = {{"n", r.arity},
                 {"object_pairs", r.object_pairs},
                 {"downstairs", r.downstairs},
                 {"failures", r.failures},
                 {"detail", r.detail},
                 {"result", r.passed() ? "pass" : "fail"}};
      out.code = r.passed() ? kOk : kFail;
    };
  });

  // multicategories
  auto* mc = app.add_subcommand("multicat", "Lambda-multicategories and profunctor lifts");
  mc->require_subcommand(1);
  std::string file, functor_file, to_file, prof_file;
  auto* mval = mc->add_subcommand("validate", "validate a multicategory, or a multifunctor with --functor");
  add_common(mval, c, false);
  mval->add_option("file", file, "multicategory file")->required();
  mval->add_option("--functor", functor_file, "multifunctor file {objects, elements}");
  mval->add_option("--to", to_file, "target multicategory of --functor (default: the same)");
  mval->callback([&] {
    action = [&] {
      const auto inst = make_operad(c.operad);
      const auto M = load_multicat(file);
      ValidationReport r = validate_multicat(M, *inst);
      if (!functor_file.empty() && r.valid()) {
        std::ifstream in(functor_file);
        if (!in) throw InputError("cannot open " + functor_file);
        const auto F = multifunctor_from_json(nlohmann::json::parse(in, nullptr, true));
        const auto N = to_file.empty() ? M : load_multicat(to_file);
        const auto rn = validate_multicat(N, *inst);
        r = rn.valid() ? validate_multifunctor(F, M, N, *inst) : rn;
      }
      out.text << format_validation(r);
      out.doc["checks"] = r.checks;
      out.doc["violations"] = ojson::array();
      for (const auto& v : r.violations) out.doc["violations"].push_back({{"kind", v.kind}, {"witness", v.witness}});
      out.doc["result"] = r.valid() ? "valid" : "invalid";
      out.code = r.valid() ? kOk : kFail;
    };
  });
  std::string x_text, y_text;
  auto* mlift = mc->add_subcommand("lift", "lift a profunctor to the Borel constructions");
  add_common(mlift, c);
  mlift->add_option("--prof", prof_file, "profunctor file: print lifted value sets");
  mlift->add_option("--functor", functor_file, "functor file {source, target, objects, morphisms}: check lift(G+) = (E G)+");
  mlift->add_option("--y", y_text, "target-side objects of one value set");
  mlift->add_option("--x", x_text, "source-side objects of one value set");
  mlift->add_option("--bound", bound, "ball radius for infinite groups")->capture_default_str();
  mlift->callback([&] {
    action = [&] {
      const auto inst = make_operad(c.operad);
      if (prof_file.empty() == functor_file.empty()) throw InputError("lift needs exactly one of --prof or --functor");
      if (!functor_file.empty()) {
        std::ifstream in(functor_file);
        if (!in) throw InputError("cannot open " + functor_file);
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
          throw InputError(functor_file + ": " + e.what());
        }
        if (!j.contains("source") || !j.contains("target")) throw InputError("functor file needs source and target");
        const FinCat X = fincat_from_json(j["source"]), Y = fincat_from_json(j["target"]);
        const FinFunctor G = functor_from_json(j, X, Y);
        const int top = c.n < 0 ? c.max_arity : c.n;
        bool ok = true;
        out.doc["arities"] = ojson::array();
        for (int n = (c.n < 0 ? 0 : top); n <= top; ++n) {
          const auto iso = check_lift_representable(G, X, Y, *inst, n);
          out.text << "n=" << n << " elements=" << iso.forward.size() << " bijection=" << (iso.ok() ? "yes" : "no")
                   << (iso.ok() ? "" : " " + iso.failure) << '\n';
          out.doc["arities"].push_back({{"n", n}, {"elements", iso.forward.size()}, {"bijection", iso.ok()},
                                        {"failure", iso.failure}});
          ok = ok && iso.ok();
        }
        out.text << "result: " << (ok ? "pass" : "fail") << '\n';
        out.doc["result"] = ok ? "pass" : "fail";
        out.code = ok ? kOk : kFail;
        return;
      }
      const FinProf F = load_prof(prof_file);
      if (x_text.empty() && y_text.empty() && c.n < 0) throw InputError("lift --prof needs --y/--x or --n");
      if (!x_text.empty() || !y_text.empty()) {
        const auto y = parse_borel_object(y_text, F.target), x = parse_borel_object(x_text, F.source);
        const auto vs = lift_value(F, *inst, y, x, bound);
        out.text << format_borel_object(y, F.target) << " <- " << format_borel_object(x, F.source) << ": " << vs.size()
                 << '\n';
        out.doc["size"] = vs.size();
        out.doc["elements"] = ojson::array();
        for (const auto& [g, s] : vs) {
          std::string line = inst->format(g) + " |";
          for (std::size_t i = 0; i < s.size(); ++i) line += (i ? "," : " ") + F.elements[static_cast<std::size_t>(s[i])].name;
          out.text << "  " << line << '\n';
          out.doc["elements"].push_back(line);
        }
        return;
      }
      const auto L = lift_prof(F, *inst, c.n);
      validate_prof(L.value);
      out.text << "n=" << c.n << " source_objects=" << L.source.objects.size()
               << " target_objects=" << L.target.objects.size() << " elements=" << L.value.size() << '\n';
      out.doc = {{"n", c.n},
                 {"source_objects", L.source.objects.size()},
                 {"target_objects", L.target.objects.size()},
                 {"elements", L.value.size()}};
    };
  });

  // presentations
  auto* present = app.add_subcommand("present", "presentations by generators and relations");
  present->require_subcommand(1);
  auto* pcheck = present->add_subcommand("check", "evaluate relations in an instance");
  add_common(pcheck, c, false);
  pcheck->add_option("file", file, "presentation file")->required();
  pcheck->callback([&] {
    action = [&] {
      const auto inst = make_operad(c.operad);
      const auto P = load_presentation(file);
      auto it = P.interpretations.find(inst->name());
      if (it == P.interpretations.end()) throw InputError("no interpretation for " + inst->name() + " in " + file);
      const auto interp = parse_interpretation(it->second, P.generators, *inst);
      const auto r = check_presentation(P, interp, *inst, c.bounds());
      out.text << format_presentation_report(r, *inst);
      out.doc["relations"] = ojson::array();
      for (const auto& row : r.rows)
        out.doc["relations"].push_back({{"lhs", row.lhs},
                                        {"rhs", row.rhs},
                                        {"verdict", to_string(row.result.verdict)},
                                        {"invariant", row.result.invariant}});
      out.doc["result"] = r.holds() ? "holds" : r.refuted() ? "refuted" : "inconclusive";
      out.code = r.refuted() ? kFail : (c.strict && r.inconclusive()) ? kInconclusive : kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kInput;
  }
  try {
    if (c.budget == 0) throw InputError("--budget must be positive");
    if (c.max_arity < 0) throw InputError("--max-arity must be non-negative");
    action();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  if (c.structured()) {
    out.doc["exit"] = out.code;
    std::cout << out.doc.dump(2) << '\n';
  } else {
    std::cout << out.text.str();
  }
  return out.code;
}
