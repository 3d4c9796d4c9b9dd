#include "aop/cactus.hpp"
#include "aop/error.hpp"
#include "aop/multicat.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace aop;

namespace {

class FlatDeltaSym final : public SymmetricOperad {
 protected:
  OperadElement delta_impl(const OperadElement&, std::span<const int> sizes) const override {
    int total = 0;
    for (int k : sizes) total += k;
    return identity(total);
  }
};

bool has_kind(const ValidationReport& r, const std::string& kind) {
  for (const auto& v : r.violations)
    if (v.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("multicat: one-object multicategories of operads validate") {
  for (const char* name : {"trivial", "sym", "cactus", "braid"}) {
    CAPTURE(name);
    const auto inst = make_operad(name);
    const int N = std::string(name) == "braid" ? 1 : std::string(name) == "cactus" ? 2 : 3;
    const auto m = multicat_from_operad(*inst, N);
    const auto r = validate_multicat(m, *inst);
    CHECK_MESSAGE(r.valid(), format_validation(r));
    CHECK(r.checks > 0);
  }
}

TEST_CASE("multicat: sigma fixture size") {
  const auto inst = make_symmetric();
  const auto m = multicat_from_operad(*inst, 3);
  // elements: 1 + 1 + 2 + 6
  std::size_t elements = 0;
  for (const auto& h : m.homs) elements += h.elements.size();
  CHECK(elements == 10);
  CHECK(m.identities.at("*") == "1:[1]");
  // actions: t1 at arity 2, t1 and t2 at arity 3
  CHECK(m.actions.size() == 3);
}

TEST_CASE("multicat: broken delta is detected through equivariance") {
  const FlatDeltaSym bad;
  const auto m = multicat_from_operad(bad, 3);
  const auto r = validate_multicat(m, bad);
  CHECK_FALSE(r.valid());
  CHECK(has_kind(r, "equivariance"));
}

TEST_CASE("multicat: empty multicategory is valid") {
  const auto inst = make_symmetric();
  const auto r = validate_multicat(FinMulticat{}, *inst);
  CHECK(r.valid());
}

TEST_CASE("multicat: ten single-entry mutations are rejected") {
  const auto inst = make_symmetric();
  const auto base = multicat_from_operad(*inst, 3);
  const auto muts = fixture::single_entry_mutations(base);
  REQUIRE(muts.size() == 10);
  for (const auto& mu : muts) {
    CAPTURE(mu.label);
    const auto r = validate_multicat(mu.m, *inst);
    CHECK_FALSE(r.valid());
    REQUIRE_FALSE(r.violations.empty());
    CHECK_FALSE(r.violations.front().witness.empty());
  }
}

TEST_CASE("multicat: permuted composite gives an associativity witness") {
  const auto inst = make_symmetric();
  auto m = multicat_from_operad(*inst, 3);
  // 2:[1,2](1:[1], 2:[1,2]) is [1,2,3]; claim [2,1,3]
  bool changed = false;
  for (auto& c : m.compose)
    if (c.outer == "2:[1,2]" && c.inner == std::vector<std::string>{"1:[1]", "2:[1,2]"}) {
      c.result = "3:[2,1,3]";
      changed = true;
    }
  REQUIRE(changed);
  const auto r = validate_multicat(m, *inst);
  CHECK(has_kind(r, "associativity"));
}

TEST_CASE("multicat: action relations are enforced") {
  const auto inst = make_symmetric();
  FinMulticat m;
  m.objects = {"x"};
  m.homs = {{{"x"}, "x", {"id"}}, {{"x", "x"}, "x", {"a", "b", "c"}}};
  m.identities = {{"x", "id"}};
  // a 3-cycle is a bijection but t1 must square to the identity
  m.actions = {{2, "[2,1]", {{"a", "b"}, {"b", "c"}, {"c", "a"}}}};
  const auto r = validate_multicat(m, *inst);
  CHECK(has_kind(r, "relation"));
  m.actions = {{2, "[2,1]", {{"a", "b"}, {"b", "a"}, {"c", "c"}}}};
  CHECK(validate_multicat(m, *inst).valid());
}

TEST_CASE("multicat: action signatures follow pi") {
  const auto inst = make_symmetric();
  FinMulticat m;
  m.objects = {"x", "y"};
  m.homs = {{{"x"}, "x", {"ix"}},
            {{"y"}, "y", {"iy"}},
            {{"x", "y"}, "y", {"p"}},
            {{"y", "x"}, "y", {"q"}}};
  m.identities = {{"x", "ix"}, {"y", "iy"}};
  m.actions = {{2, "[2,1]", {{"p", "q"}, {"q", "p"}}}};
  CHECK(validate_multicat(m, *inst).valid());
  m.homs[3].inputs = {"x", "y"};
  const auto r = validate_multicat(m, *inst);
  CHECK(has_kind(r, "action"));
}

TEST_CASE("multicat: missing generator action is reported") {
  const auto inst = make_symmetric();
  FinMulticat m;
  m.objects = {"x"};
  m.homs = {{{"x"}, "x", {"id"}}, {{"x", "x"}, "x", {"a"}}};
  m.identities = {{"x", "id"}};
  const auto r = validate_multicat(m, *inst);
  CHECK(has_kind(r, "action"));
}

TEST_CASE("multicat: json roundtrip") {
  const auto inst = make_symmetric();
  const auto m = multicat_from_operad(*inst, 2);
  const auto back = multicat_from_json(multicat_to_json(m));
  CHECK(multicat_to_json(back) == multicat_to_json(m));
  CHECK(validate_multicat(back, *inst).valid());
  CHECK_THROWS_AS(multicat_from_json(nlohmann::json::parse(R"({"homs": []})")), InputError);
}

TEST_CASE("multifunctor: identity, collapse and a relabeling") {
  const auto inst = make_symmetric();
  const auto m = multicat_from_operad(*inst, 3);
  const auto t = terminal_multicat(*inst, 3);
  REQUIRE(validate_multicat(t, *inst).valid());

  CHECK(validate_multifunctor(identity_multifunctor(m), m, m, *inst).valid());

  FinMultifunctor collapse;
  collapse.objects["*"] = "*";
  for (const auto& h : m.homs)
    for (const auto& e : h.elements) collapse.elements[e] = "t" + std::to_string(h.inputs.size());
  const auto rc = validate_multifunctor(collapse, m, t, *inst);
  CHECK_MESSAGE(rc.valid(), format_validation(rc));

  auto swap = identity_multifunctor(m);
  std::swap(swap.elements["3:[1,2,3]"], swap.elements["3:[2,1,3]"]);
  const auto rs = validate_multifunctor(swap, m, m, *inst);
  CHECK_FALSE(rs.valid());
  CHECK(has_kind(rs, "equivariance"));

  auto wrong = identity_multifunctor(m);
  wrong.elements["1:[1]"] = "2:[1,2]";
  const auto rw = validate_multifunctor(wrong, m, m, *inst);
  CHECK(has_kind(rw, "signature"));
}

TEST_CASE("multifunctor: operad map trivial -> sym is not equivariant unless the image is fixed") {
  const auto sym = make_symmetric();
  const auto m = multicat_from_operad(*sym, 2);
  const auto t = terminal_multicat(*sym, 2);
  // terminal -> sym picking identities: t2 . t1 = t2 but e . t1 = t1
  FinMultifunctor f;
  f.objects["*"] = "*";
  f.elements = {{"t0", "0:[]"}, {"t1", "1:[1]"}, {"t2", "2:[1,2]"}};
  const auto r = validate_multifunctor(f, t, m, *sym);
  CHECK(has_kind(r, "equivariance"));
}
