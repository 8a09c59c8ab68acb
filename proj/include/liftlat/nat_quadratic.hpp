#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace liftlat::nat {

// The divisibility lattice on the naturals: a <= b iff b divides a, so
// 0 is the bottom, 1 the top, join = gcd and meet = lcm.

std::uint64_t nat_join(std::span<const std::uint64_t> s);
std::uint64_t nat_meet(std::span<const std::uint64_t> s);

/// b <= a in the divisibility order, i.e. a divides b.
bool nat_leq(std::uint64_t b, std::uint64_t a);

/// (a : b) = gcd of {y : a | b*y}, computed as a / gcd(a, b). When b = 0
/// every y qualifies and the result is 1 (the top), including a = b = 0.
std::uint64_t nat_residual(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n);

/// Kronecker symbol (a | n).
int kronecker(std::int64_t a, std::uint64_t n);

struct NormWitness {
  std::int64_t a;
  std::int64_t b;
};

/// The order Z[sqrt(d)] for squarefree d < 0 with d ≡ 2, 3 (mod 4), where
/// it is the full ring of integers and the norm a² - d b² is positive
/// definite.
class QuadOrder {
 public:
  /// Throws PreconditionError for any other d.
  explicit QuadOrder(std::int64_t d);

  std::int64_t d() const { return d_; }
  std::uint64_t abs_d() const { return static_cast<std::uint64_t>(-d_); }

  /// a² + |d| b².
  std::uint64_t norm(std::int64_t a, std::int64_t b) const;

  /// A representation n = a² + |d| b² with a, b >= 0 and b minimal.
  std::optional<NormWitness> represent(std::uint64_t n) const;
  bool is_norm(std::uint64_t n) const { return represent(n).has_value(); }

  /// Kronecker symbol (4d | p) = -1. Throws PreconditionError if p is not
  /// prime.
  bool is_inert(std::uint64_t p) const;

 private:
  std::int64_t d_;
};

/// Im(N) ∩ [0, bound], sieved once.
class NormImage {
 public:
  NormImage(const QuadOrder& q, std::uint64_t bound);

  std::uint64_t bound() const { return bound_; }
  bool contains(std::uint64_t n) const { return n <= bound_ && member_[n]; }
  /// Nonzero norms up to the bound, ascending.
  const std::vector<std::uint64_t>& values() const { return values_; }

 private:
  std::uint64_t bound_;
  std::vector<bool> member_;
  std::vector<std::uint64_t> values_;
};

/// divisor | multiple, both norms, quotient not a norm.
struct DivisionCounterexample {
  std::uint64_t divisor;
  std::uint64_t multiple;
  std::uint64_t quotient;

  friend bool operator==(const DivisionCounterexample&, const DivisionCounterexample&) = default;
};

struct DivisionClosureResult {
  std::uint64_t bound = 0;
  std::optional<DivisionCounterexample> counterexample;
  bool closed() const { return !counterexample.has_value(); }
};

/// Whether Im(N) ∩ [1, bound] is closed under division. The reported
/// counterexample is the least by (multiple, divisor). Throws
/// PreconditionError if bound < |d|.
DivisionClosureResult division_closure_check(const QuadOrder& q, std::uint64_t bound);

/// Every counterexample up to `bound` in (multiple, divisor) order, at most
/// `limit` of them.
std::vector<DivisionCounterexample> division_counterexamples(const QuadOrder& q,
                                                             std::uint64_t bound,
                                                             std::size_t limit);

/// Re-checks a counterexample with independent is_norm calls.
bool confirms_counterexample(const QuadOrder& q, const DivisionCounterexample& c);

enum class PrimeStatus { inert, norm, gcd_generated, unresolved };

std::string to_string(PrimeStatus s);

struct PrimeVerdict {
  std::uint64_t p = 0;
  PrimeStatus status = PrimeStatus::unresolved;
  std::optional<NormWitness> norm_witness;
  /// Two norms with gcd p, smallest product first.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> gcd_witness;
};

struct SGenReport {
  std::int64_t d = 0;
  std::uint64_t prime_bound = 0;
  std::uint64_t search_bound = 0;
  std::vector<PrimeVerdict> primes;

  std::size_t count(PrimeStatus s) const;
};

/// Classifies every prime p <= prime_bound as inert, a norm, or the gcd of
/// two norms up to search_bound. Primes left open are reported unresolved.
SGenReport s_wire_check(const QuadOrder& q, std::uint64_t prime_bound,
                        std::uint64_t search_bound);

/// Re-checks a verdict's witness from scratch.
bool confirms_prime_verdict(const QuadOrder& q, const PrimeVerdict& v);

enum class MWireVerdict { not_m_wire, consistent_up_to_bound };

std::string to_string(MWireVerdict v);

struct MWireResult {
  MWireVerdict verdict = MWireVerdict::consistent_up_to_bound;
  std::uint64_t bound = 0;
  std::optional<DivisionCounterexample> counterexample;
};

/// S is an M-wire iff Im(N) is closed under division. A failure inside
/// the bound settles the question; a pass is only bounded evidence.
MWireResult m_wire_verdict(const QuadOrder& q, std::uint64_t bound);

}  // namespace liftlat::nat
