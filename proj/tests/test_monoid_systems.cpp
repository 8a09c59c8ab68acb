#include "doctest.h"

#include <algorithm>

#include "liftlat/closure.hpp"
#include "liftlat/enumerate.hpp"
#include "liftlat/errors.hpp"
#include "liftlat/lifting.hpp"

using namespace liftlat;

namespace {

const std::string kFixtures = LIFTLAT_FIXTURES;

FiniteMonoid load_monoid(const std::string& file) {
  return FiniteMonoid::build(load_monoid_file(kFixtures + "/" + file));
}

Subset lattice_set(const FiniteLattice& L, std::initializer_list<const char*> names) {
  Subset s = 0;
  for (const char* n : names) s |= bit(*L.find(n));
  return s;
}

// Ideal masks rendered as sorted name lists, for order-insensitive compare.
std::vector<std::vector<std::string>> named_ideals(const IdealLattice& I, const FiniteMonoid& h) {
  std::vector<std::vector<std::string>> out;
  for (Subset s : I.ideals) {
    std::vector<std::string> names;
    for_each_element(s, [&](Element e) { names.push_back(h.name(e)); });
    std::sort(names.begin(), names.end());
    out.push_back(names);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("monoid loading and verification") {
  const FiniteMonoid m = load_monoid("monoid3.json");
  CHECK(m.size() == 3);
  CHECK(m.mul(1, 1) == m.zero());
  CHECK(verify_monoid(m.spec()).ok());

  MonoidSpec bad = m.spec();
  bad.mul[1][2] = 0;  // x * 1 != x, and no longer commutative
  const Verdict v = verify_monoid(bad);
  CHECK(v.has("identity"));
  CHECK(v.has("commutative"));
  CHECK_THROWS_AS(FiniteMonoid::build(bad), AxiomError);

  MonoidSpec ragged = m.spec();
  ragged.mul[0].pop_back();
  CHECK_THROWS_AS(verify_monoid(ragged), LoadError);
  CHECK_THROWS_AS(load_monoid_file(kFixtures + "/nope.json"), LoadError);
}

TEST_CASE("ClosureMap rejects malformed tables") {
  const FiniteMonoid m = load_monoid("monoid3.json");
  CHECK_THROWS_AS(ClosureMap(m, std::vector<Subset>(7, 0)), PreconditionError);
  CHECK_THROWS_AS(ClosureMap(m, std::vector<Subset>(8, 0xF)), PreconditionError);
}

TEST_CASE("constant map X -> H") {
  const FiniteMonoid m = load_monoid("monoid3.json");
  const ClosureMap r = constant_closure(m);
  CHECK(verify_weak_ideal_system(r).ok());
  const Verdict ideal = verify_ideal_system(r);
  REQUIRE_FALSE(ideal.ok());
  // c = zero gives zero*H = {0} but (zero*X)_r = H.
  const Violation* w = ideal.find("s4_equality");
  REQUIRE(w != nullptr);
  CHECK(m.scale(w->witness[0], r(w->witness[1])) != r(m.scale(w->witness[0], w->witness[1])));

  const IdealLattice I = build_ideal_lattice(r);
  CHECK(I.ideals.size() == 1);
  CHECK(I.lattice.size() == 1);
  CHECK(I.lattice.bot() == I.lattice.top());
  CHECK(finitary_closure(r) == r);
}

TEST_CASE("X -> XH u X: idempotency decided by exhaustive scan") {
  for (const char* file : {"monoid3.json", "monoid3_idem.json"}) {
    const FiniteMonoid m = load_monoid(file);
    const ClosureMap r = xh_closure(m);
    bool idempotent = true;
    for (Subset x = 0; x < r.domain_size(); ++x)
      if (r(r(x)) != r(x)) idempotent = false;
    CHECK(verify_weak_ideal_system(r).has("s3") == !idempotent);
    CHECK(verify_weak_ideal_system(r).ok() == idempotent);
  }
}

TEST_CASE("each axiom failure is reported with a witness") {
  const FiniteMonoid m = load_monoid("monoid3.json");
  const std::size_t size = std::size_t{1} << m.size();

  // Identity map: extensive, but XH is not inside X for X = {x}.
  std::vector<Subset> id(size);
  for (Subset x = 0; x < size; ++x) id[x] = x;
  const Verdict vid = verify_weak_ideal_system(ClosureMap(m, id));
  CHECK(vid.has("s1"));
  CHECK_FALSE(vid.has("extensive"));
  CHECK_THROWS_AS(verify_ideal_system(ClosureMap(m, id)), PreconditionError);
  CHECK_THROWS_AS(build_ideal_lattice(ClosureMap(m, id)), PreconditionError);

  // Empty image: not extensive.
  const Verdict vempty = verify_weak_ideal_system(ClosureMap(m, std::vector<Subset>(size, 0)));
  CHECK(vempty.has("extensive"));

  // Non-monotone: {x} -> H but {0,x} -> {0,x}.
  std::vector<Subset> nonmono(size);
  for (Subset x = 0; x < size; ++x) nonmono[x] = (x == bit(1)) ? m.all() : (x | m.product(x, m.all()));
  nonmono[bit(1) | bit(m.zero())] = bit(1) | bit(m.zero());
  const Verdict vn = verify_weak_ideal_system(ClosureMap(m, nonmono));
  REQUIRE(vn.has("s2"));
  const Violation* w = vn.find("s2");
  CHECK(is_subset(w->witness[0], w->witness[1]));
  CHECK_FALSE(is_subset(nonmono[w->witness[0]], nonmono[w->witness[1]]));

  // Not idempotent: {x} -> {0,x}, but {0,x} -> H.
  std::vector<Subset> ni(size);
  for (Subset x = 0; x < size; ++x) ni[x] = x | m.product(x, m.all());
  ni[bit(m.zero()) | bit(1)] = m.all();
  ni[bit(m.zero())] = bit(m.zero());
  CHECK(verify_weak_ideal_system(ClosureMap(m, ni)).has("s3"));
}

TEST_CASE("lifted L6 system with H = {0,a,b,c,1}") {
  const FiniteLattice L = l6_lattice();
  const Subset h = lattice_set(L, {"0", "a", "b", "c", "1"});
  const ClosureMap r = lifted_closure(L, h);
  CHECK(verify_weak_ideal_system(r).ok());
  CHECK_FALSE(verify_ideal_system(r).ok());
  const Verdict fin = verify_finitary(r);
  CHECK(fin.ok());
  CHECK_FALSE(fin.note.empty());

  const IdealLattice I = build_ideal_lattice(r);
  const std::vector<std::vector<std::string>> expected = {
      {"0"}, {"0", "a"}, {"0", "a", "b"}, {"0", "a", "c"}, {"0", "a", "b", "c"},
      {"0", "1", "a", "b", "c"}};
  auto want = expected;
  std::sort(want.begin(), want.end());
  CHECK(named_ideals(I, r.carrier()) == want);
  CHECK(find_isomorphism(I.lattice, L).has_value());
  CHECK(I.product_compatible);
  CHECK(I.principal_generates);
}

TEST_CASE("lifted three-chain with x*x = x is an ideal system") {
  const FiniteLattice L = three_chain(true);
  const ClosureMap r = lifted_closure(L, L.all());
  CHECK(verify_weak_ideal_system(r).ok());
  CHECK(verify_ideal_system(r).ok());
}

TEST_CASE("lifted {0,1} has ideals {0} and {0,1}") {
  const FiniteLattice L = two_element_lattice();
  const IdealLattice I = build_ideal_lattice(lifted_closure(L, L.all()));
  REQUIRE(I.ideals.size() == 2);
  CHECK(I.ideals[0] == bit(0));
  CHECK(I.ideals[1] == (bit(0) | bit(1)));
}

TEST_CASE("r-ideal lattice properties over lifts of the n <= 4 corpus") {
  for (const FiniteLattice& L : small_lattice_corpus(4)) {
    for (const WireReport& w : enumerate_wires(L, false)) {
      const ClosureMap r = lifted_closure(L, w.wire);
      REQUIRE(verify_weak_ideal_system(r).ok());
      const FiniteMonoid& h = r.carrier();

      // Every intersection of a family of r-ideals is an r-ideal.
      std::vector<Subset> ideals(r.table());
      std::sort(ideals.begin(), ideals.end());
      ideals.erase(std::unique(ideals.begin(), ideals.end()), ideals.end());
      REQUIRE(ideals.size() < 16);
      for (std::uint32_t family = 0; family < (1U << ideals.size()); ++family) {
        Subset meet = h.all();
        for (std::size_t i = 0; i < ideals.size(); ++i)
          if ((family >> i) & 1U) meet &= ideals[i];
        REQUIRE(std::binary_search(ideals.begin(), ideals.end(), meet));
      }

      CHECK_FALSE(check_product_compatibility(r).has_value());

      const IdealLattice I = build_ideal_lattice(r);
      CHECK(verify_lattice(I.lattice.spec()).ok());
      const Element unit = *I.index_of(r(h.all()));
      const Element zero = *I.index_of(r(bit(h.zero())));
      for (Element x = 0; x < I.lattice.size(); ++x) {
        CHECK(I.lattice.mul(unit, x) == x);
        CHECK(I.lattice.mul(zero, x) == zero);
      }
      CHECK(verify_finitary(r).ok());
    }
  }
}

TEST_CASE("reported closure violations re-check; forged ones do not") {
  const FiniteMonoid m = load_monoid("monoid3.json");
  const std::size_t size = std::size_t{1} << m.size();
  std::vector<Subset> id(size);
  for (Subset x = 0; x < size; ++x) id[x] = x;
  const ClosureMap ident(m, id);
  for (const Violation& x : verify_weak_ideal_system(ident).violations)
    CHECK(confirms_violation(ident, x));

  const ClosureMap r = constant_closure(m);
  const Verdict ideal = verify_ideal_system(r);
  REQUIRE_FALSE(ideal.ok());
  CHECK(confirms_violation(r, ideal.violations.front()));
  CHECK_FALSE(confirms_violation(r, {"s4_equality", {m.one(), 1}, ""}));
  CHECK_FALSE(confirms_violation(r, {"s3", {1}, ""}));
  CHECK_FALSE(confirms_violation(r, {"s1", {size}, ""}));
}
