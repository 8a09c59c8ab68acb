#include "liftlat/closure.hpp"

#include <algorithm>

#include "liftlat/errors.hpp"

namespace liftlat {

ClosureMap::ClosureMap(FiniteMonoid carrier, std::vector<Subset> table)
    : carrier_(std::move(carrier)), table_(std::move(table)) {
  const std::size_t m = carrier_.size();
  if (m > kMaxClosureCarrier)
    throw PreconditionError("closure map carrier exceeds " +
                            std::to_string(kMaxClosureCarrier) + " elements");
  if (table_.size() != (std::size_t{1} << m))
    throw PreconditionError("closure table must have 2^|H| entries");
  for (Subset s : table_)
    if (!is_subset(s, carrier_.all()))
      throw PreconditionError("closure table entry outside the carrier");
}

ClosureMap constant_closure(const FiniteMonoid& h) {
  return ClosureMap(h, std::vector<Subset>(std::size_t{1} << h.size(), h.all()));
}

ClosureMap xh_closure(const FiniteMonoid& h) {
  std::vector<Subset> t(std::size_t{1} << h.size());
  for (Subset x = 0; x < t.size(); ++x) t[x] = h.product(x, h.all()) | x;
  return ClosureMap(h, std::move(t));
}

Verdict verify_weak_ideal_system(const ClosureMap& r) {
  const FiniteMonoid& h = r.carrier();
  const std::size_t m = h.size();
  const Subset all = h.all();
  Verdict v;
  auto fail = [&](const char* rule, std::vector<std::uint64_t> w, std::string d) {
    if (!v.has(rule)) v.violations.push_back({rule, std::move(w), std::move(d)});
  };

  for (Subset x = 0; x < r.domain_size(); ++x) {
    const Subset xr = r(x);
    if (!is_subset(x, xr))
      fail("extensive", {x}, "X=" + h.format(x) + " not inside X_r=" + h.format(xr));
    const Subset xh = h.product(x, all);
    if (!is_subset(xh, xr))
      fail("s1", {x}, "XH=" + h.format(xh) + " not inside X_r=" + h.format(xr));
    for (Element y = 0; y < m; ++y) {
      if (contains(x, y)) continue;
      const Subset yr = r(x | bit(y));
      if (!is_subset(xr, yr))
        fail("s2", {x, x | bit(y)},
             "X=" + h.format(x) + " Y=" + h.format(x | bit(y)) + " but X_r not inside Y_r");
    }
    if (r(xr) != xr) fail("s3", {x}, "(X_r)_r != X_r for X=" + h.format(x));
    for (Element c = 0; c < m; ++c) {
      const Subset lhs = h.scale(c, xr);
      const Subset rhs = r(h.scale(c, x));
      if (!is_subset(lhs, rhs))
        fail("s4", {c, x},
             "c=" + h.name(c) + " X=" + h.format(x) + ": cX_r=" + h.format(lhs) +
                 " not inside (cX)_r=" + h.format(rhs));
    }
  }
  return v;
}

Verdict verify_ideal_system(const ClosureMap& r) {
  if (!verify_weak_ideal_system(r).ok())
    throw PreconditionError("verify_ideal_system: map is not a weak ideal system");
  const FiniteMonoid& h = r.carrier();
  Verdict v;
  for (Subset x = 0; x < r.domain_size() && v.ok(); ++x)
    for (Element c = 0; c < h.size(); ++c) {
      const Subset lhs = h.scale(c, r(x));
      const Subset rhs = r(h.scale(c, x));
      if (lhs != rhs) {
        v.violations.push_back({"s4_equality", {c, x},
                                "c=" + h.name(c) + " X=" + h.format(x) + ": cX_r=" +
                                    h.format(lhs) + " but (cX)_r=" + h.format(rhs)});
        break;
      }
    }
  return v;
}

bool confirms_violation(const ClosureMap& r, const Violation& v) {
  const FiniteMonoid& h = r.carrier();
  const auto& w = v.witness;
  auto set_ok = [&](std::uint64_t x) { return x < r.domain_size(); };
  auto elem_ok = [&](std::uint64_t c) { return c < h.size(); };
  if (w.size() == 1 && set_ok(w[0])) {
    const Subset x = w[0];
    if (v.rule == "extensive") return !is_subset(x, r(x));
    if (v.rule == "s1") return !is_subset(h.product(x, h.all()), r(x));
    if (v.rule == "s3") return r(r(x)) != r(x);
    if (v.rule == "s5") {
      Subset acc = r(0);
      for (Subset z = x; z != 0; z = (z - 1) & x) acc |= r(z);
      return acc != r(x);
    }
  }
  if (w.size() == 2 && v.rule == "s2" && set_ok(w[0]) && set_ok(w[1]))
    return is_subset(w[0], w[1]) && !is_subset(r(w[0]), r(w[1]));
  if (w.size() == 2 && elem_ok(w[0]) && set_ok(w[1])) {
    const Subset lhs = h.scale(w[0], r(w[1]));
    const Subset rhs = r(h.scale(w[0], w[1]));
    if (v.rule == "s4") return !is_subset(lhs, rhs);
    if (v.rule == "s4_equality") return lhs != rhs;
  }
  return false;
}

Verdict verify_finitary(const ClosureMap& r) {
  const FiniteMonoid& h = r.carrier();
  Verdict v;
  v.note = "degenerate on finite carriers: every X is a finite subset of itself";
  for (Subset x = 0; x < r.domain_size(); ++x) {
    Subset acc = r(0);
    // All submasks of x, including x itself.
    for (Subset z = x; z != 0; z = (z - 1) & x) acc |= r(z);
    if (acc != r(x)) {
      v.violations.push_back({"s5", {x}, "X=" + h.format(x) + ": union of Z_r is " +
                                             h.format(acc) + ", X_r is " + h.format(r(x))});
      break;
    }
  }
  return v;
}

std::optional<Violation> check_product_compatibility(const ClosureMap& r) {
  const FiniteMonoid& h = r.carrier();
  for (Subset x = 0; x < r.domain_size(); ++x)
    for (Subset y = x; y < r.domain_size(); ++y) {
      const Subset lhs = r(h.product(x, y));
      const Subset rhs = r(h.product(r(x), r(y)));
      if (lhs != rhs)
        return Violation{"product_compatible", {x, y},
                         "X=" + h.format(x) + " Y=" + h.format(y) + ": (XY)_r=" +
                             h.format(lhs) + " but (X_r Y_r)_r=" + h.format(rhs)};
    }
  return std::nullopt;
}

std::optional<Element> IdealLattice::index_of(Subset ideal) const {
  auto it = std::lower_bound(ideals.begin(), ideals.end(), ideal);
  if (it == ideals.end() || *it != ideal) return std::nullopt;
  return static_cast<Element>(it - ideals.begin());
}

namespace {

std::string ideal_name(const FiniteMonoid& h, Subset s) { return h.format(s); }

}  // namespace

IdealLattice build_ideal_lattice(const ClosureMap& r) {
  if (!verify_weak_ideal_system(r).ok())
    throw PreconditionError("build_ideal_lattice: map is not a weak ideal system");
  const FiniteMonoid& h = r.carrier();

  std::vector<Subset> ideals(r.table());
  std::sort(ideals.begin(), ideals.end());
  ideals.erase(std::unique(ideals.begin(), ideals.end()), ideals.end());
  const std::size_t k = ideals.size();
  if (k > kMaxCarrier)
    throw PreconditionError("ideal lattice has more than 64 elements");

  auto index = [&](Subset s) -> Element {
    auto it = std::lower_bound(ideals.begin(), ideals.end(), s);
    if (it == ideals.end() || *it != s)
      throw OracleViolation("r-ideal lattice: " + h.format(s) + " is not an r-ideal");
    return static_cast<Element>(it - ideals.begin());
  };

  for (Element i = 0; i < k; ++i)
    for (Element j = i + 1; j < k; ++j)
      if (!std::binary_search(ideals.begin(), ideals.end(), ideals[i] & ideals[j]))
        throw OracleViolation("r-ideals not closed under intersection: " +
                              h.format(ideals[i]) + " and " + h.format(ideals[j]));

  LatticeSpec spec;
  spec.leq.assign(k, std::vector<bool>(k, false));
  spec.mul.assign(k, std::vector<Element>(k, 0));
  for (Element i = 0; i < k; ++i) {
    spec.names.push_back(ideal_name(h, ideals[i]));
    for (Element j = 0; j < k; ++j) {
      spec.leq[i][j] = is_subset(ideals[i], ideals[j]);
      spec.mul[i][j] = index(r(h.product(ideals[i], ideals[j])));
    }
  }
  spec.bot = index(r(0));
  spec.top = index(r(h.all()));

  const Verdict lv = verify_lattice(spec);
  if (!lv.ok())
    throw OracleViolation("r-ideal structure is not a multiplicative lattice: " +
                          lv.violations.front().rule + " " + lv.violations.front().detail);

  IdealLattice out{ideals, FiniteLattice::build(spec), false, false};
  for (Element i = 0; i < k; ++i)
    for (Element j = 0; j < k; ++j)
      if (out.lattice.join(i, j) != index(r(ideals[i] | ideals[j])))
        throw OracleViolation("r-ideal join is not (X u Y)_r");

  Subset principal = 0;
  for (Element a = 0; a < h.size(); ++a) principal |= bit(index(r(bit(a))));
  out.principal_generates = generates(out.lattice, principal);
  out.product_compatible = !check_product_compatibility(r).has_value();
  return out;
}

}  // namespace liftlat
