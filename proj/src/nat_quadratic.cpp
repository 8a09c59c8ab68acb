#include "liftlat/nat_quadratic.hpp"

#include <cmath>
#include <numeric>

#include "liftlat/errors.hpp"

namespace liftlat::nat {
namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool squarefree(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

}  // namespace

std::uint64_t nat_join(std::span<const std::uint64_t> s) {
  std::uint64_t g = 0;
  for (std::uint64_t v : s) g = std::gcd(g, v);
  return g;
}

std::uint64_t nat_meet(std::span<const std::uint64_t> s) {
  std::uint64_t l = 1;
  for (std::uint64_t v : s) l = std::lcm(l, v);
  return l;
}

bool nat_leq(std::uint64_t b, std::uint64_t a) {
  if (a == 0) return b == 0;
  return b % a == 0;
}

std::uint64_t nat_residual(std::uint64_t a, std::uint64_t b) {
  if (b == 0) return 1;
  return a / std::gcd(a, b);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

int kronecker(std::int64_t a, std::uint64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  // Factor out twos: (a|2) = 0 for even a, else +1 for a ≡ ±1 (mod 8), -1 otherwise.
  while (n % 2 == 0) {
    n /= 2;
    const std::int64_t r = ((a % 8) + 8) % 8;
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol (a|n) for odd n.
  std::int64_t m = ((a % static_cast<std::int64_t>(n)) + static_cast<std::int64_t>(n)) %
                   static_cast<std::int64_t>(n);
  auto nn = static_cast<std::int64_t>(n);
  while (m != 0) {
    while (m % 2 == 0) {
      m /= 2;
      const std::int64_t r = nn % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(m, nn);
    if (m % 4 == 3 && nn % 4 == 3) result = -result;
    m %= nn;
  }
  return nn == 1 ? result : 0;
}

QuadOrder::QuadOrder(std::int64_t d) : d_(d) {
  if (d >= 0) throw PreconditionError("QuadOrder: d must be negative");
  if (!squarefree(static_cast<std::uint64_t>(-d)))
    throw PreconditionError("QuadOrder: d must be squarefree");
  const std::int64_t r = ((d % 4) + 4) % 4;
  if (r != 2 && r != 3) throw PreconditionError("QuadOrder: d must be 2 or 3 mod 4");
}

std::uint64_t QuadOrder::norm(std::int64_t a, std::int64_t b) const {
  const auto ua = static_cast<std::uint64_t>(a < 0 ? -a : a);
  const auto ub = static_cast<std::uint64_t>(b < 0 ? -b : b);
  return ua * ua + abs_d() * ub * ub;
}

std::optional<NormWitness> QuadOrder::represent(std::uint64_t n) const {
  for (std::uint64_t b = 0; abs_d() * b * b <= n; ++b) {
    const std::uint64_t rest = n - abs_d() * b * b;
    const std::uint64_t a = isqrt(rest);
    if (a * a == rest)
      return NormWitness{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)};
  }
  return std::nullopt;
}

bool QuadOrder::is_inert(std::uint64_t p) const {
  if (!is_prime(p)) throw PreconditionError("is_inert: " + std::to_string(p) + " is not prime");
  return kronecker(4 * d_, p) == -1;
}

NormImage::NormImage(const QuadOrder& q, std::uint64_t bound)
    : bound_(bound), member_(bound + 1, false) {
  for (std::uint64_t b = 0; q.abs_d() * b * b <= bound; ++b)
    for (std::uint64_t a = 0; a * a + q.abs_d() * b * b <= bound; ++a)
      member_[a * a + q.abs_d() * b * b] = true;
  for (std::uint64_t n = 1; n <= bound; ++n)
    if (member_[n]) values_.push_back(n);
}

std::vector<DivisionCounterexample> division_counterexamples(const QuadOrder& q,
                                                             std::uint64_t bound,
                                                             std::size_t limit) {
  if (bound < q.abs_d())
    throw PreconditionError("division_closure_check: bound must be at least |d|");
  const NormImage image(q, bound);
  std::vector<DivisionCounterexample> out;
  // Walk multiples in ascending order, divisors ascending within each.
  for (std::uint64_t m : image.values()) {
    for (std::uint64_t n : image.values()) {
      if (n > m) break;
      if (m % n != 0) continue;
      if (!image.contains(m / n)) {
        out.push_back({n, m, m / n});
        if (out.size() >= limit) return out;
      }
    }
  }
  return out;
}

DivisionClosureResult division_closure_check(const QuadOrder& q, std::uint64_t bound) {
  DivisionClosureResult r;
  r.bound = bound;
  auto found = division_counterexamples(q, bound, 1);
  if (!found.empty()) r.counterexample = found.front();
  return r;
}

bool confirms_counterexample(const QuadOrder& q, const DivisionCounterexample& c) {
  return c.divisor != 0 && c.multiple % c.divisor == 0 && c.multiple / c.divisor == c.quotient &&
         q.is_norm(c.divisor) && q.is_norm(c.multiple) && !q.is_norm(c.quotient);
}

std::string to_string(PrimeStatus s) {
  switch (s) {
    case PrimeStatus::inert: return "inert";
    case PrimeStatus::norm: return "norm";
    case PrimeStatus::gcd_generated: return "gcd_generated";
    case PrimeStatus::unresolved: return "unresolved";
  }
  return "unknown";
}

std::size_t SGenReport::count(PrimeStatus s) const {
  std::size_t c = 0;
  for (const auto& v : primes) c += v.status == s;
  return c;
}

SGenReport s_wire_check(const QuadOrder& q, std::uint64_t prime_bound,
                        std::uint64_t search_bound) {
  if (prime_bound == 0 || search_bound == 0)
    throw PreconditionError("s_wire_check: bounds must be positive");
  // Witness products must fit in 64 bits.
  if (search_bound > (std::uint64_t{1} << 32))
    throw PreconditionError("s_wire_check: search bound above 2^32");
  SGenReport rep{q.d(), prime_bound, search_bound, {}};
  const NormImage image(q, search_bound);
  for (std::uint64_t p = 2; p <= prime_bound; ++p) {
    if (!is_prime(p)) continue;
    PrimeVerdict v;
    v.p = p;
    if (q.is_inert(p)) {
      v.status = PrimeStatus::inert;
    } else if (auto w = q.represent(p)) {
      v.status = PrimeStatus::norm;
      v.norm_witness = w;
    } else {
      std::vector<std::uint64_t> multiples;
      for (std::uint64_t n : image.values())
        if (n % p == 0) multiples.push_back(n);
      // Least product w1*w2 with w1 < w2 and gcd(w1, w2) = p.
      std::optional<std::pair<std::uint64_t, std::uint64_t>> best;
      for (std::size_t i = 0; i < multiples.size(); ++i) {
        const std::uint64_t w1 = multiples[i];
        if (best && w1 * w1 >= best->first * best->second)
          break;
        for (std::size_t j = i + 1; j < multiples.size(); ++j) {
          const std::uint64_t w2 = multiples[j];
          if (best && w1 * w2 >= best->first * best->second)
            break;
          if (std::gcd(w1, w2) == p) {
            best = {w1, w2};
            break;
          }
        }
      }
      if (best) {
        v.status = PrimeStatus::gcd_generated;
        v.gcd_witness = best;
      }
    }
    rep.primes.push_back(v);
  }
  return rep;
}

bool confirms_prime_verdict(const QuadOrder& q, const PrimeVerdict& v) {
  switch (v.status) {
    case PrimeStatus::inert:
      return q.is_inert(v.p);
    case PrimeStatus::norm:
      return v.norm_witness && q.norm(v.norm_witness->a, v.norm_witness->b) == v.p;
    case PrimeStatus::gcd_generated:
      return v.gcd_witness && std::gcd(v.gcd_witness->first, v.gcd_witness->second) == v.p &&
             q.is_norm(v.gcd_witness->first) && q.is_norm(v.gcd_witness->second);
    case PrimeStatus::unresolved:
      return true;
  }
  return false;
}

std::string to_string(MWireVerdict v) {
  return v == MWireVerdict::not_m_wire ? "NOT-M-WIRE" : "CONSISTENT-WITH-M-WIRE-UP-TO-BOUND";
}

MWireResult m_wire_verdict(const QuadOrder& q, std::uint64_t bound) {
  const DivisionClosureResult dc = division_closure_check(q, bound);
  MWireResult r;
  r.bound = bound;
  r.counterexample = dc.counterexample;
  r.verdict = dc.closed() ? MWireVerdict::consistent_up_to_bound : MWireVerdict::not_m_wire;
  return r;
}

}  // namespace liftlat::nat
