#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liftlat/subset.hpp"
#include "liftlat/verdict.hpp"

namespace liftlat {

/// Raw, unverified lattice data. `leq` must already be the full relation
/// (the JSON loader closes Hasse covers before building one of these).
struct LatticeSpec {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq;     // leq[a][b] <=> a <= b
  std::vector<std::vector<Element>> mul;  // mul[a][b] = ab
  Element bot = 0;
  Element top = 0;

  std::size_t size() const { return names.size(); }
};

/// Checks every multiplicative-lattice axiom on `spec`: partial order,
/// bounds, existence of binary joins and meets, commutativity,
/// associativity, top as identity, bot as annihilator, and binary join
/// distributivity. Reports one witness per failing rule.
///
/// Throws LoadError if the data is malformed (dimension mismatch,
/// out-of-range index, duplicate names, carrier above kMaxCarrier).
Verdict verify_lattice(const LatticeSpec& spec);

/// Re-checks one violation from verify_lattice against the raw tables.
/// False for unknown rules or witnesses that do not break the rule.
bool confirms_violation(const LatticeSpec& spec, const Violation& v);

struct Interval {
  Element lo;
  Element hi;
  Subset members;
};

/// Flags from classify_element. `compact` is always true on a finite
/// carrier: every join is a finite join.
struct ElementFlags {
  bool meet_principal = false;
  bool weak_meet_principal = false;
  bool join_principal = false;
  bool weak_join_principal = false;
  bool principal = false;
  bool weak_principal = false;
  bool compact = true;

  // First (a, b) pair breaking each identity, in index order. For the
  // weak variants b is fixed (top resp. bot) and only `a` is reported.
  std::optional<std::pair<Element, Element>> meet_witness;
  std::optional<Element> weak_meet_witness;
  std::optional<std::pair<Element, Element>> join_witness;
  std::optional<Element> weak_join_witness;
};

/// A verified finite multiplicative lattice with precomputed binary join,
/// meet and residual tables. Immutable after construction.
class FiniteLattice {
 public:
  /// Verifies `spec` and builds the derived tables. Throws AxiomError
  /// listing the violations if the axioms fail, LoadError if malformed.
  static FiniteLattice build(LatticeSpec spec);

  std::size_t size() const { return n_; }
  Element bot() const { return spec_.bot; }
  Element top() const { return spec_.top; }
  Subset all() const { return full_set(n_); }

  const std::string& name(Element e) const { return spec_.names[e]; }
  const std::vector<std::string>& names() const { return spec_.names; }
  std::optional<Element> find(std::string_view name) const;
  const LatticeSpec& spec() const { return spec_; }

  bool leq(Element a, Element b) const { return contains(down_[b], a); }
  Element mul(Element a, Element b) const { return mul_[a * n_ + b]; }
  Element join(Element a, Element b) const { return join_[a * n_ + b]; }
  Element meet(Element a, Element b) const { return meet_[a * n_ + b]; }

  /// Least upper bound; join of the empty set is bot.
  Element join(Subset s) const;
  /// Greatest lower bound; meet of the empty set is top.
  Element meet(Subset s) const;

  /// (a : b), the join of all y with b*y <= a.
  Element residual(Element a, Element b) const { return res_[a * n_ + b]; }

  /// [bot, x]
  Subset down(Element x) const { return down_[x]; }
  /// [x, top]
  Subset up(Element x) const { return up_[x]; }
  /// {x : lo <= x <= hi}. Throws PreconditionError unless lo <= hi.
  Interval interval(Element lo, Element hi) const;

  /// Elementwise product set {xy : x in a, y in b}.
  Subset product(Subset a, Subset b) const;

  /// "{a,b,c}" using element names.
  std::string format(Subset s) const;

 private:
  explicit FiniteLattice(LatticeSpec spec);

  LatticeSpec spec_;
  std::size_t n_ = 0;
  std::vector<Element> mul_, join_, meet_, res_;
  std::vector<Subset> down_, up_;
};

ElementFlags classify_element(const FiniteLattice& lattice, Element x);

Subset meet_principal_elements(const FiniteLattice& lattice);
Subset weak_meet_principal_elements(const FiniteLattice& lattice);
Subset principal_elements(const FiniteLattice& lattice);

/// True iff ab = 0 forces a = 0 or b = 0.
bool is_domain(const FiniteLattice& lattice);

/// True iff every element is the join of the members of `c` below it.
bool generates(const FiniteLattice& lattice, Subset c);

/// Returns a bijection phi with phi(x) <= phi(y) <=> x <= y and
/// phi(xy) = phi(x)phi(y), if one exists. Brute-force backtracking;
/// intended for carriers of at most a dozen elements.
std::optional<std::vector<Element>> find_isomorphism(const FiniteLattice& a,
                                                     const FiniteLattice& b);

/// Two-element lattice {0,1} with multiplication = meet.
FiniteLattice two_element_lattice();

/// Three-element chain 0 < x < 1 with x*x = x (idempotent) or x*x = 0.
FiniteLattice three_chain(bool idempotent);

/// The six-element lattice 0 < a < b,c < d < 1 with xy = 0 for all
/// x, y in {a, b, c, d}.
FiniteLattice l6_lattice();

}  // namespace liftlat
