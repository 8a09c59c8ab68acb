#include "doctest.h"

#include "liftlat/enumerate.hpp"
#include "liftlat/errors.hpp"
#include "liftlat/lattice.hpp"
#include "liftlat/lattice_io.hpp"
#include "oracles.hpp"

using namespace liftlat;

namespace {

const std::string kFixtures = LIFTLAT_FIXTURES;

FiniteLattice load(const std::string& file) {
  return FiniteLattice::build(load_lattice_file(kFixtures + "/" + file));
}

Element el(const FiniteLattice& L, const char* name) { return *L.find(name); }

Subset set_of(const FiniteLattice& L, std::initializer_list<const char*> names) {
  Subset s = 0;
  for (const char* n : names) s |= bit(el(L, n));
  return s;
}

}  // namespace

TEST_CASE("verify_lattice accepts the six-element fixture and the two-element lattice") {
  CHECK(verify_lattice(load_lattice_file(kFixtures + "/l6.json")).ok());
  CHECK(verify_lattice(load_lattice_file(kFixtures + "/two.json")).ok());
  CHECK(verify_lattice(l6_lattice().spec()).ok());
  const FiniteLattice from_file = load("l6.json");
  CHECK(find_isomorphism(from_file, l6_lattice()).has_value());
}

TEST_CASE("verify_lattice rejects L6 with a*d = d") {
  const LatticeSpec broken = load_lattice_file(kFixtures + "/l6_broken.json");
  const Verdict v = verify_lattice(broken);
  REQUIRE_FALSE(v.ok());
  CHECK((v.has("distributive") || v.has("annihilation")));

  // Independent re-check: some triple breaks a(b v c) = ab v ac when joins
  // are computed by scanning upper bounds.
  bool oracle_found = false;
  const std::size_t n = broken.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        const Element bc = *oracle::join(broken, bit(b) | bit(c));
        const Element rhs = *oracle::join(broken, bit(broken.mul[a][b]) | bit(broken.mul[a][c]));
        if (broken.mul[a][bc] != rhs) oracle_found = true;
      }
  CHECK(oracle_found);
  if (const Violation* w = v.find("distributive")) {
    const Element a = w->witness[0], b = w->witness[1], c = w->witness[2];
    const Element bc = *oracle::join(broken, bit(b) | bit(c));
    CHECK(broken.mul[a][bc] !=
          *oracle::join(broken, bit(broken.mul[a][b]) | bit(broken.mul[a][c])));
  }
  CHECK_THROWS_AS(FiniteLattice::build(broken), AxiomError);
}

TEST_CASE("verify_lattice names order failures with witnesses") {
  LatticeSpec s = two_element_lattice().spec();
  s.leq[1][0] = true;  // 0 <= 1 and 1 <= 0
  const Verdict v = verify_lattice(s);
  REQUIRE(v.has("antisymmetric"));
  CHECK(v.find("antisymmetric")->witness == std::vector<std::uint64_t>{0, 1});

  // Two incomparable maximal elements: no top above both, so no join.
  LatticeSpec t;
  t.names = {"0", "p", "q"};
  t.leq = {{true, true, true}, {false, true, false}, {false, false, true}};
  t.mul = {{0, 0, 0}, {0, 1, 0}, {0, 0, 2}};
  t.bot = 0;
  t.top = 1;
  const Verdict tv = verify_lattice(t);
  CHECK(tv.has("top_greatest"));
}

TEST_CASE("malformed lattice data is a load error, not an axiom failure") {
  CHECK_THROWS_AS(load_lattice_file(kFixtures + "/missing_product.json"), LoadError);
  CHECK_THROWS_AS(load_lattice_file(kFixtures + "/does_not_exist.json"), LoadError);

  LatticeSpec s = two_element_lattice().spec();
  s.mul[0].pop_back();
  CHECK_THROWS_AS(verify_lattice(s), LoadError);

  LatticeSpec u = two_element_lattice().spec();
  u.mul[1][1] = 7;
  CHECK_THROWS_AS(verify_lattice(u), LoadError);

  nlohmann::json doc = nlohmann::json::parse(R"({"elements":["0","1"],
    "order":{"covers":[["0","z"]]},"mul":[],"top":"1","bot":"0"})");
  CHECK_THROWS_AS(parse_lattice(doc), LoadError);

  nlohmann::json conflict = nlohmann::json::parse(R"({"elements":["0","x","1"],
    "order":{"covers":[["0","x"],["x","1"]]},"mul":[["x","x","x"],["x","x","0"]],
    "top":"1","bot":"0"})");
  CHECK_THROWS_AS(parse_lattice(conflict), LoadError);
}

TEST_CASE("explicit products with bot override the auto-fill") {
  nlohmann::json doc = nlohmann::json::parse(R"({"elements":["0","x","1"],
    "order":{"covers":[["0","x"],["x","1"]]},"mul":[["x","x","x"],["x","0","x"]],
    "top":"1","bot":"0"})");
  const Verdict v = verify_lattice(parse_lattice(doc));
  CHECK(v.has("annihilation"));
}

TEST_CASE("join and meet on L6") {
  const FiniteLattice L = load("l6.json");
  const LatticeSpec& s = L.spec();
  CHECK(L.join(set_of(L, {"b", "c"})) == el(L, "d"));
  CHECK(*oracle::join(s, set_of(L, {"b", "c"})) == el(L, "d"));
  CHECK(L.join(Subset{0}) == el(L, "0"));
  CHECK(L.join(set_of(L, {"a"})) == el(L, "a"));

  CHECK(L.meet(set_of(L, {"b", "c"})) == el(L, "a"));
  CHECK(*oracle::meet(s, set_of(L, {"b", "c"})) == el(L, "a"));
  CHECK(L.meet(Subset{0}) == el(L, "1"));
  CHECK(L.meet(set_of(L, {"d", "1"})) == el(L, "d"));
}

TEST_CASE("residual on L6") {
  const FiniteLattice L = load("l6.json");
  CHECK(L.residual(el(L, "c"), el(L, "b")) == el(L, "d"));
  CHECK(oracle::residual(L.spec(), el(L, "c"), el(L, "b")) == el(L, "d"));
  for (Element x = 0; x < L.size(); ++x) {
    CHECK(L.residual(x, L.top()) == x);
    CHECK(L.residual(L.top(), x) == L.top());
  }
}

TEST_CASE("interval members") {
  const FiniteLattice L = load("l6.json");
  const Interval i = L.interval(el(L, "a"), el(L, "d"));
  CHECK(i.members == set_of(L, {"a", "b", "c", "d"}));
  CHECK(L.interval(L.bot(), L.top()).members == L.all());
  CHECK_THROWS_AS(L.interval(el(L, "b"), el(L, "c")), PreconditionError);
}

TEST_CASE("classify_element on L6") {
  const FiniteLattice L = load("l6.json");
  const ElementFlags a = classify_element(L, el(L, "a"));
  CHECK(a.weak_meet_principal);

  const ElementFlags b = classify_element(L, el(L, "b"));
  CHECK_FALSE(b.weak_meet_principal);
  REQUIRE(b.weak_meet_witness.has_value());
  // First failing a in index order is a itself: a ^ b = a, b * (a:b) = 0.
  CHECK(*b.weak_meet_witness == el(L, "a"));
  // a = c breaks it too: c ^ b = a, while b * (c:b) = b * d = 0.
  CHECK(L.meet(el(L, "c"), el(L, "b")) == el(L, "a"));
  CHECK(L.mul(el(L, "b"), L.residual(el(L, "c"), el(L, "b"))) == L.bot());

  CHECK(weak_meet_principal_elements(L) == set_of(L, {"0", "a", "1"}));
  CHECK(is_subset(meet_principal_elements(L), weak_meet_principal_elements(L)));
  CHECK_FALSE(generates(L, weak_meet_principal_elements(L)));

  const ElementFlags top = classify_element(L, L.top());
  CHECK(top.meet_principal);
  CHECK(top.weak_meet_principal);
  CHECK(top.join_principal);
  CHECK(top.weak_join_principal);
  CHECK(top.principal);
  CHECK(top.weak_principal);
  CHECK(top.compact);
  CHECK(classify_element(L, L.bot()).weak_meet_principal);
}

TEST_CASE("weak meet principal agrees with a direct scan on every element of L6") {
  const FiniteLattice L = load("l6.json");
  const LatticeSpec& s = L.spec();
  for (Element x = 0; x < L.size(); ++x) {
    bool expected = true;
    for (Element a = 0; a < L.size(); ++a) {
      const Element lhs = *oracle::meet(s, bit(a) | bit(x));
      const Element rhs = s.mul[x][oracle::residual(s, a, x)];
      if (lhs != rhs) expected = false;
    }
    CHECK(classify_element(L, x).weak_meet_principal == expected);
  }
}

TEST_CASE("is_domain") {
  CHECK_FALSE(is_domain(load("l6.json")));
  CHECK(is_domain(load("two.json")));
  CHECK(is_domain(three_chain(true)));
  CHECK_FALSE(is_domain(three_chain(false)));
}

TEST_CASE("lattice JSON round trip over the n <= 4 corpus") {
  for (const FiniteLattice& L : small_lattice_corpus(4)) {
    const LatticeSpec back = parse_lattice(lattice_to_json(L));
    CHECK(back.names == L.spec().names);
    CHECK(back.leq == L.spec().leq);
    CHECK(back.mul == L.spec().mul);
  }
}

TEST_CASE("lattice-core properties over the n <= 4 corpus") {
  for (const FiniteLattice& L : small_lattice_corpus(4)) {
    const LatticeSpec& s = L.spec();
    const std::size_t n = L.size();
    const Subset all = L.all();
    CHECK(verify_lattice(s).ok());
    for (Subset S = 0; S <= all; ++S) {
      // Join against the brute-force oracle, and full distributivity.
      REQUIRE(L.join(S) == *oracle::join(s, S));
      REQUIRE(L.meet(S) == *oracle::meet(s, S));
      for (Element a = 0; a < n; ++a) {
        Subset products = 0;
        for_each_element(S, [&](Element x) { products |= bit(L.mul(a, x)); });
        REQUIRE(L.mul(a, L.join(S)) == L.join(products));
      }
      for (Subset T = 0; T <= all; ++T)
        REQUIRE(L.join(S | T) == L.join(bit(L.join(S)) | bit(L.join(T))));
    }
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        REQUIRE(L.residual(a, b) == oracle::residual(s, a, b));
        for (Element y = 0; y < n; ++y)
          REQUIRE(L.leq(L.mul(b, y), a) == L.leq(y, L.residual(a, b)));
      }
    const ElementFlags top = classify_element(L, L.top());
    CHECK((top.meet_principal && top.weak_meet_principal && top.join_principal &&
           top.weak_join_principal && top.principal && top.weak_principal && top.compact));
    CHECK(classify_element(L, L.bot()).weak_meet_principal);
  }
}

TEST_CASE("reported lattice violations re-check; forged ones do not") {
  const LatticeSpec broken = load_lattice_file(kFixtures + "/l6_broken.json");
  const Verdict v = verify_lattice(broken);
  REQUIRE_FALSE(v.ok());
  for (const Violation& x : v.violations) CHECK(confirms_violation(broken, x));

  const LatticeSpec good = l6_lattice().spec();
  CHECK_FALSE(confirms_violation(good, {"distributive", {1, 2, 3}, ""}));
  CHECK_FALSE(confirms_violation(good, {"associative", {0, 1}, ""}));
  CHECK_FALSE(confirms_violation(good, {"identity", {9}, ""}));
  CHECK_FALSE(confirms_violation(good, {"no_such_rule", {0}, ""}));

  LatticeSpec s = two_element_lattice().spec();
  s.leq[1][0] = true;
  for (const Violation& x : verify_lattice(s).violations) CHECK(confirms_violation(s, x));
}
