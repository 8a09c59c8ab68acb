#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "liftlat/subset.hpp"
#include "liftlat/verdict.hpp"

namespace liftlat {

struct MonoidSpec {
  std::vector<std::string> names;
  std::vector<std::vector<Element>> mul;
  Element one = 0;
  Element zero = 0;

  std::size_t size() const { return names.size(); }
};

/// Checks commutativity, associativity, one as identity and zero as
/// absorbing element. Throws LoadError on malformed data.
Verdict verify_monoid(const MonoidSpec& spec);

/// Finite commutative monoid with identity and zero. Immutable.
class FiniteMonoid {
 public:
  /// Throws AxiomError if verify_monoid fails.
  static FiniteMonoid build(MonoidSpec spec);

  std::size_t size() const { return n_; }
  Element one() const { return spec_.one; }
  Element zero() const { return spec_.zero; }
  Subset all() const { return full_set(n_); }
  const std::string& name(Element e) const { return spec_.names[e]; }
  const std::vector<std::string>& names() const { return spec_.names; }
  const MonoidSpec& spec() const { return spec_; }

  Element mul(Element a, Element b) const { return mul_[a * n_ + b]; }

  /// XY = {xy : x in X, y in Y}, the elementwise product set.
  Subset product(Subset x, Subset y) const;
  /// cX = {cx : x in X}.
  Subset scale(Element c, Subset x) const;

  std::string format(Subset s) const;

 private:
  explicit FiniteMonoid(MonoidSpec spec);

  MonoidSpec spec_;
  std::size_t n_ = 0;
  std::vector<Element> mul_;
};

/// Parses { "elements": [...], "mul": [[x,y,xy],...], "one": name,
/// "zero": name }. Products with one or zero may be omitted and are
/// filled in; a pair given in one order also defines the other.
MonoidSpec parse_monoid(const nlohmann::json& doc);
MonoidSpec load_monoid_file(const std::filesystem::path& path);

}  // namespace liftlat
