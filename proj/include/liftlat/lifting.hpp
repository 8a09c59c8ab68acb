#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liftlat/closure.hpp"
#include "liftlat/lattice.hpp"

namespace liftlat {

/// Largest lattice whose wires for_each_wire will enumerate.
inline constexpr std::size_t kMaxWireSearch = 18;

/// s <= t*a with s, t in H, but no u in H ∩ [0, a] has s = t*u.
struct MWitness {
  Element s;
  Element t;
  Element a;
};

struct WireReport {
  Subset wire = 0;
  bool contains_one = false;
  bool contains_zero = false;
  bool mult_closed = false;
  bool generates = false;
  bool is_wire = false;
  bool is_m_wire = false;
  /// Present iff is_wire and not is_m_wire; first (s, t, a) in
  /// lexicographic index order.
  std::optional<MWitness> m_witness;
};

/// Evaluates the wire conditions on `h` (1, 0 in H; H closed under
/// multiplication; every x is the join of H ∩ [0, x]) and, for wires,
/// condition (M) by exhaustive scan.
WireReport analyze_wire(const FiniteLattice& lattice, Subset h);

/// Re-checks an (M) witness from scratch.
bool confirms_m_witness(const FiniteLattice& lattice, Subset h, const MWitness& w);

/// The monoid (H, restricted multiplication, 1, 0). Monoid element i is
/// the i-th member of H in increasing lattice index.
FiniteMonoid wire_monoid(const FiniteLattice& lattice, Subset h);

/// X -> H ∩ [0, join X] as an explicit closure map over wire_monoid.
ClosureMap lifted_closure(const FiniteLattice& lattice, Subset h);

/// Outcome of checking f : X -> join X and g : y -> H ∩ [0, y] against
/// an ideal lattice. Each failure names the first offending input.
struct IsoCertificate {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks that f and g are mutually inverse, that f is multiplicative and
/// that both preserve order. `members[i]` is the lattice element of monoid
/// element i.
IsoCertificate certify_isomorphism(const FiniteLattice& lattice,
                                   const std::vector<Element>& members,
                                   const IdealLattice& ideals,
                                   std::vector<Element>* iso_f = nullptr,
                                   std::vector<Element>* iso_g = nullptr);

struct LiftResult {
  Subset wire = 0;
  std::vector<Element> members;  // monoid element -> lattice element
  ClosureMap system;
  IdealLattice ideal_lattice;
  std::vector<Element> iso_f;  // ideal index -> lattice element
  std::vector<Element> iso_g;  // lattice element -> ideal index
  bool certified = false;
};

/// Builds the lifted weak ideal system of a wire and certifies
/// I_r(H) ≅ L. Throws PreconditionError if `h` is not a wire and
/// OracleViolation if the system fails (s1)-(s4) or the certificate fails.
LiftResult lift(const FiniteLattice& lattice, Subset h);

/// Visits the wires of `lattice` (subsets containing bot and top, in
/// increasing mask order), or only the M-wires. Stops when `visit`
/// returns false. Throws PreconditionError above kMaxWireSearch elements.
void for_each_wire(const FiniteLattice& lattice, bool m_only,
                   const std::function<bool(const WireReport&)>& visit);

std::vector<WireReport> enumerate_wires(const FiniteLattice& lattice, bool m_only);

/// A check that a theorem says cannot fail, and did.
struct Finding {
  std::string check;
  std::string detail;
};

struct CorollaryReport {
  std::size_t wires = 0;
  std::size_t m_wires = 0;
  std::size_t ideal_systems = 0;
  std::size_t finitary = 0;
  bool all_compact = true;
  std::vector<Finding> findings;
  bool ok() const { return findings.empty(); }
};

/// For every wire H: lift certifies, (ideal system <=> M-wire), and the
/// lift is finitary with every element compact.
CorollaryReport check_corollary_equivalences(const FiniteLattice& lattice);

struct PropositionReport {
  Subset meet_principal = 0;
  Subset weak_meet_principal = 0;
  Subset principal = 0;
  bool domain = false;
  bool has_m_wire = false;
  bool meet_principal_generates = false;
  bool weak_meet_principal_generates = false;
  bool principal_generates = false;
  bool part_i_holds = false;
  /// Part (iii) applies when the lattice is a domain generated by its
  /// principal elements.
  bool part_iii_applies = false;
  /// The principal elements (with bot adjoined) form a submonoid.
  std::optional<bool> principal_submonoid;
  std::optional<bool> principal_wire_is_m_wire;
  std::optional<bool> principal_lift_is_ideal_system;
  /// Whether the full-carrier lift (H = L) is an ideal system.
  bool full_lift_is_ideal_system = false;
  std::vector<Finding> findings;
  bool ok() const { return findings.empty(); }
};

/// (i) H = L lifts; (ii) an M-wire exists => meet principal elements
/// generate; (iii) domain generated by principal elements => principal
/// elements form an M-wire whose lift is an ideal system.
PropositionReport check_liftability_propositions(const FiniteLattice& lattice);

/// X -> union of Z_r over finite Z ⊆ X. Throws PreconditionError unless r
/// is a weak ideal system, OracleViolation if the result differs from r or
/// is not a weak ideal system.
ClosureMap finitary_closure(const ClosureMap& r);

struct FinitaryEmbeddingReport {
  bool equals_original = false;
  bool embedding_isomorphism = false;
  std::size_t ideals = 0;
  std::vector<Finding> findings;
  bool ok() const { return findings.empty(); }
};

/// Lifts H = L, takes its finitary closure r_s, and certifies
/// x -> [0, x] as a lattice isomorphism L -> I_{r_s}(L).
FinitaryEmbeddingReport check_finitary_embedding(const FiniteLattice& lattice);

}  // namespace liftlat
