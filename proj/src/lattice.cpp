#include "liftlat/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "liftlat/errors.hpp"

namespace liftlat {
namespace {

std::string describe(const LatticeSpec& s, std::initializer_list<Element> es) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (Element e : es) {
    if (!first) os << ", ";
    os << s.names[e];
    first = false;
  }
  os << ")";
  return os.str();
}

void check_shape(const LatticeSpec& s) {
  const std::size_t n = s.names.size();
  if (n == 0) throw LoadError("lattice has no elements");
  if (n > kMaxCarrier)
    throw LoadError("lattice carrier exceeds " + std::to_string(kMaxCarrier) +
                    " elements");
  std::set<std::string> seen(s.names.begin(), s.names.end());
  if (seen.size() != n) throw LoadError("element names are not distinct");
  if (s.leq.size() != n || s.mul.size() != n)
    throw LoadError("order or multiplication table has wrong row count");
  for (std::size_t i = 0; i < n; ++i) {
    if (s.leq[i].size() != n || s.mul[i].size() != n)
      throw LoadError("order or multiplication table has wrong column count");
    for (Element v : s.mul[i])
      if (v >= n) throw LoadError("multiplication entry out of range");
  }
  if (s.bot >= n || s.top >= n) throw LoadError("bot/top index out of range");
}

// Least upper bound of {a, b} under `leq`, if it exists.
std::optional<Element> lub(const LatticeSpec& s, Element a, Element b) {
  const std::size_t n = s.size();
  for (Element z = 0; z < n; ++z) {
    if (!s.leq[a][z] || !s.leq[b][z]) continue;
    bool least = true;
    for (Element w = 0; w < n && least; ++w)
      if (s.leq[a][w] && s.leq[b][w] && !s.leq[z][w]) least = false;
    if (least) return z;
  }
  return std::nullopt;
}

std::optional<Element> glb(const LatticeSpec& s, Element a, Element b) {
  const std::size_t n = s.size();
  for (Element z = 0; z < n; ++z) {
    if (!s.leq[z][a] || !s.leq[z][b]) continue;
    bool greatest = true;
    for (Element w = 0; w < n && greatest; ++w)
      if (s.leq[w][a] && s.leq[w][b] && !s.leq[w][z]) greatest = false;
    if (greatest) return z;
  }
  return std::nullopt;
}

}  // namespace

Verdict verify_lattice(const LatticeSpec& s) {
  check_shape(s);
  const std::size_t n = s.size();
  Verdict v;
  auto fail = [&](std::string rule, std::vector<std::uint64_t> w,
                  std::string detail) {
    if (!v.has(rule)) v.violations.push_back({std::move(rule), std::move(w),
                                              std::move(detail)});
  };

  for (Element a = 0; a < n; ++a)
    if (!s.leq[a][a]) fail("reflexive", {a}, "not " + s.names[a] + " <= " + s.names[a]);
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (s.leq[a][b] && s.leq[b][a])
        fail("antisymmetric", {a, b}, describe(s, {a, b}) + " mutually below");
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (s.leq[a][b] && s.leq[b][c] && !s.leq[a][c])
          fail("transitive", {a, b, c}, describe(s, {a, b, c}));
  for (Element a = 0; a < n; ++a) {
    if (!s.leq[s.bot][a]) fail("bot_least", {a}, "bot not below " + s.names[a]);
    if (!s.leq[a][s.top]) fail("top_greatest", {a}, s.names[a] + " not below top");
  }
  const bool order_ok = v.ok();

  bool lattice_ok = order_ok;
  if (order_ok) {
    for (Element a = 0; a < n; ++a)
      for (Element b = a + 1; b < n; ++b) {
        if (!lub(s, a, b)) {
          fail("join_exists", {a, b}, "no least upper bound of " + describe(s, {a, b}));
          lattice_ok = false;
        }
        if (!glb(s, a, b)) {
          fail("meet_exists", {a, b}, "no greatest lower bound of " + describe(s, {a, b}));
          lattice_ok = false;
        }
      }
  }

  const auto& m = s.mul;
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (m[a][b] != m[b][a]) fail("commutative", {a, b}, describe(s, {a, b}));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (m[m[a][b]][c] != m[a][m[b][c]])
          fail("associative", {a, b, c}, describe(s, {a, b, c}));
  for (Element a = 0; a < n; ++a) {
    if (m[s.top][a] != a || m[a][s.top] != a)
      fail("identity", {a}, "top*" + s.names[a] + " != " + s.names[a]);
    if (m[a][s.bot] != s.bot || m[s.bot][a] != s.bot)
      fail("annihilation", {a}, s.names[a] + "*bot != bot");
  }

  if (lattice_ok) {
    std::vector<Element> j(n * n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) j[a * n + b] = *lub(s, a, b);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = b + 1; c < n; ++c) {
          const Element lhs = m[a][j[b * n + c]];
          const Element rhs = j[m[a][b] * n + m[a][c]];
          if (lhs != rhs)
            fail("distributive", {a, b, c},
                 describe(s, {a, b, c}) + ": a(b v c) = " + s.names[lhs] +
                     " but ab v ac = " + s.names[rhs]);
        }
  }
  return v;
}

bool confirms_violation(const LatticeSpec& s, const Violation& v) {
  const std::size_t n = s.size();
  const auto& w = v.witness;
  for (std::uint64_t e : w)
    if (e >= n) return false;
  const auto& m = s.mul;
  auto arity = [&](std::size_t k) { return w.size() == k; };
  if (v.rule == "reflexive") return arity(1) && !s.leq[w[0]][w[0]];
  if (v.rule == "antisymmetric")
    return arity(2) && w[0] != w[1] && s.leq[w[0]][w[1]] && s.leq[w[1]][w[0]];
  if (v.rule == "transitive")
    return arity(3) && s.leq[w[0]][w[1]] && s.leq[w[1]][w[2]] && !s.leq[w[0]][w[2]];
  if (v.rule == "bot_least") return arity(1) && !s.leq[s.bot][w[0]];
  if (v.rule == "top_greatest") return arity(1) && !s.leq[w[0]][s.top];
  if (v.rule == "join_exists") return arity(2) && !lub(s, w[0], w[1]);
  if (v.rule == "meet_exists") return arity(2) && !glb(s, w[0], w[1]);
  if (v.rule == "commutative") return arity(2) && m[w[0]][w[1]] != m[w[1]][w[0]];
  if (v.rule == "associative")
    return arity(3) && m[m[w[0]][w[1]]][w[2]] != m[w[0]][m[w[1]][w[2]]];
  if (v.rule == "identity") return arity(1) && (m[s.top][w[0]] != w[0] || m[w[0]][s.top] != w[0]);
  if (v.rule == "annihilation")
    return arity(1) && (m[w[0]][s.bot] != s.bot || m[s.bot][w[0]] != s.bot);
  if (v.rule == "distributive") {
    if (!arity(3)) return false;
    const auto bc = lub(s, w[1], w[2]);
    const auto rhs = lub(s, m[w[0]][w[1]], m[w[0]][w[2]]);
    return bc && rhs && m[w[0]][*bc] != *rhs;
  }
  return false;
}

FiniteLattice FiniteLattice::build(LatticeSpec spec) {
  const Verdict v = verify_lattice(spec);
  if (!v.ok()) {
    std::string msg = "lattice axioms violated:";
    for (const auto& viol : v.violations) msg += " [" + viol.rule + " " + viol.detail + "]";
    throw AxiomError(msg);
  }
  return FiniteLattice(std::move(spec));
}

FiniteLattice::FiniteLattice(LatticeSpec spec) : spec_(std::move(spec)), n_(spec_.size()) {
  mul_.resize(n_ * n_);
  join_.resize(n_ * n_);
  meet_.resize(n_ * n_);
  res_.resize(n_ * n_);
  down_.assign(n_, 0);
  up_.assign(n_, 0);
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) {
      if (spec_.leq[b][a]) down_[a] |= bit(b);
      if (spec_.leq[a][b]) up_[a] |= bit(b);
      mul_[a * n_ + b] = spec_.mul[a][b];
    }
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) {
      // The least element of the common up-set is the one whose up-set
      // equals it; likewise for meets.
      const Subset ups = up_[a] & up_[b];
      const Subset downs = down_[a] & down_[b];
      for_each_element(ups, [&](Element z) {
        if (up_[z] == ups) join_[a * n_ + b] = z;
      });
      for_each_element(downs, [&](Element z) {
        if (down_[z] == downs) meet_[a * n_ + b] = z;
      });
    }
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) {
      Subset ys = 0;
      for (Element y = 0; y < n_; ++y)
        if (leq(mul(b, y), a)) ys |= bit(y);
      res_[a * n_ + b] = join(ys);
    }
}

std::optional<Element> FiniteLattice::find(std::string_view name) const {
  for (Element e = 0; e < n_; ++e)
    if (spec_.names[e] == name) return e;
  return std::nullopt;
}

Element FiniteLattice::join(Subset s) const {
  Element acc = bot();
  for_each_element(s, [&](Element e) { acc = join(acc, e); });
  return acc;
}

Element FiniteLattice::meet(Subset s) const {
  Element acc = top();
  for_each_element(s, [&](Element e) { acc = meet(acc, e); });
  return acc;
}

Interval FiniteLattice::interval(Element lo, Element hi) const {
  if (!leq(lo, hi))
    throw PreconditionError("interval [" + name(lo) + ", " + name(hi) + "] is empty");
  return {lo, hi, up_[lo] & down_[hi]};
}

Subset FiniteLattice::product(Subset a, Subset b) const {
  Subset out = 0;
  for_each_element(a, [&](Element x) {
    for_each_element(b, [&](Element y) { out |= bit(mul(x, y)); });
  });
  return out;
}

std::string FiniteLattice::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for_each_element(s, [&](Element e) {
    if (!first) out += ",";
    out += name(e);
    first = false;
  });
  return out + "}";
}

ElementFlags classify_element(const FiniteLattice& L, Element x) {
  ElementFlags f;
  const std::size_t n = L.size();
  // Meet principal: a ^ xb = x((a:x) ^ b).
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element lhs = L.meet(a, L.mul(x, b));
      const Element rhs = L.mul(x, L.meet(L.residual(a, x), b));
      if (lhs != rhs && !f.meet_witness) f.meet_witness = {a, b};
    }
  for (Element a = 0; a < n && !f.weak_meet_witness; ++a)
    if (L.meet(a, x) != L.mul(x, L.residual(a, x))) f.weak_meet_witness = a;
  // Join principal: a v (b:x) = (ax v b):x.
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element lhs = L.join(a, L.residual(b, x));
      const Element rhs = L.residual(L.join(L.mul(a, x), b), x);
      if (lhs != rhs && !f.join_witness) f.join_witness = {a, b};
    }
  for (Element a = 0; a < n && !f.weak_join_witness; ++a)
    if (L.join(a, L.residual(L.bot(), x)) != L.residual(L.mul(a, x), x))
      f.weak_join_witness = a;

  f.meet_principal = !f.meet_witness;
  f.weak_meet_principal = !f.weak_meet_witness;
  f.join_principal = !f.join_witness;
  f.weak_join_principal = !f.weak_join_witness;
  f.principal = f.meet_principal && f.join_principal;
  f.weak_principal = f.weak_meet_principal && f.weak_join_principal;
  f.compact = true;
  return f;
}

Subset meet_principal_elements(const FiniteLattice& L) {
  Subset s = 0;
  for (Element x = 0; x < L.size(); ++x)
    if (classify_element(L, x).meet_principal) s |= bit(x);
  return s;
}

Subset weak_meet_principal_elements(const FiniteLattice& L) {
  Subset s = 0;
  for (Element x = 0; x < L.size(); ++x)
    if (classify_element(L, x).weak_meet_principal) s |= bit(x);
  return s;
}

Subset principal_elements(const FiniteLattice& L) {
  Subset s = 0;
  for (Element x = 0; x < L.size(); ++x)
    if (classify_element(L, x).principal) s |= bit(x);
  return s;
}

bool is_domain(const FiniteLattice& L) {
  for (Element a = 0; a < L.size(); ++a)
    for (Element b = 0; b < L.size(); ++b)
      if (L.mul(a, b) == L.bot() && a != L.bot() && b != L.bot()) return false;
  return true;
}

bool generates(const FiniteLattice& L, Subset c) {
  for (Element x = 0; x < L.size(); ++x)
    if (L.join(c & L.down(x)) != x) return false;
  return true;
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteLattice& A,
                                                     const FiniteLattice& B) {
  const std::size_t n = A.size();
  if (B.size() != n) return std::nullopt;
  std::vector<Element> phi(n, 0);
  Subset used = 0;

  auto consistent = [&](Element k) {
    // Elements 0..k are assigned; check every relation among them.
    for (Element i = 0; i <= k; ++i) {
      if (A.leq(i, k) != B.leq(phi[i], phi[k])) return false;
      if (A.leq(k, i) != B.leq(phi[k], phi[i])) return false;
      const Element p = A.mul(i, k);
      if (p <= k && B.mul(phi[i], phi[k]) != phi[p]) return false;
    }
    for (Element i = 0; i <= k; ++i)
      for (Element j = 0; j <= k; ++j) {
        const Element p = A.mul(i, j);
        if (p <= k && B.mul(phi[i], phi[j]) != phi[p]) return false;
      }
    return true;
  };

  auto rec = [&](auto&& self, Element k) -> bool {
    if (k == n) return true;
    for (Element c = 0; c < n; ++c) {
      if (contains(used, c)) continue;
      if (cardinality(A.down(k)) != cardinality(B.down(c))) continue;
      if (cardinality(A.up(k)) != cardinality(B.up(c))) continue;
      phi[k] = c;
      used |= bit(c);
      if (consistent(k) && self(self, k + 1)) return true;
      used &= ~bit(c);
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return phi;
}

namespace {

LatticeSpec chain_spec(std::vector<std::string> names) {
  LatticeSpec s;
  const std::size_t n = names.size();
  s.names = std::move(names);
  s.leq.assign(n, std::vector<bool>(n, false));
  for (Element a = 0; a < n; ++a)
    for (Element b = a; b < n; ++b) s.leq[a][b] = true;
  s.mul.assign(n, std::vector<Element>(n, 0));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) s.mul[a][b] = std::min(a, b);
  s.bot = 0;
  s.top = n - 1;
  return s;
}

}  // namespace

FiniteLattice two_element_lattice() { return FiniteLattice::build(chain_spec({"0", "1"})); }

FiniteLattice three_chain(bool idempotent) {
  LatticeSpec s = chain_spec({"0", "x", "1"});
  if (!idempotent) s.mul[1][1] = 0;
  return FiniteLattice::build(std::move(s));
}

FiniteLattice l6_lattice() {
  // 0=0, 1=a, 2=b, 3=c, 4=d, 5=1
  LatticeSpec s;
  s.names = {"0", "a", "b", "c", "d", "1"};
  const std::size_t n = 6;
  s.leq.assign(n, std::vector<bool>(n, false));
  const std::vector<std::pair<Element, Element>> covers = {
      {0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}};
  for (Element a = 0; a < n; ++a) s.leq[a][a] = true;
  for (auto [lo, hi] : covers) s.leq[lo][hi] = true;
  for (Element k = 0; k < n; ++k)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (s.leq[a][k] && s.leq[k][b]) s.leq[a][b] = true;
  s.mul.assign(n, std::vector<Element>(n, 0));
  for (Element a = 0; a < n; ++a) {
    s.mul[5][a] = a;
    s.mul[a][5] = a;
  }
  s.bot = 0;
  s.top = 5;
  return FiniteLattice::build(std::move(s));
}

}  // namespace liftlat
