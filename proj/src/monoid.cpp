#include "liftlat/monoid.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>

#include "liftlat/errors.hpp"

namespace liftlat {

Verdict verify_monoid(const MonoidSpec& s) {
  const std::size_t n = s.size();
  if (n == 0) throw LoadError("monoid has no elements");
  if (n > kMaxCarrier) throw LoadError("monoid carrier exceeds 64 elements");
  if (std::set<std::string>(s.names.begin(), s.names.end()).size() != n)
    throw LoadError("element names are not distinct");
  if (s.one >= n || s.zero >= n) throw LoadError("one/zero index out of range");
  if (s.mul.size() != n) throw LoadError("multiplication table has wrong row count");
  for (const auto& row : s.mul) {
    if (row.size() != n) throw LoadError("multiplication table has wrong column count");
    for (Element v : row)
      if (v >= n) throw LoadError("multiplication entry out of range");
  }

  Verdict v;
  auto fail = [&](const std::string& rule, std::vector<std::uint64_t> w, std::string d) {
    if (!v.has(rule)) v.violations.push_back({rule, std::move(w), std::move(d)});
  };
  const auto& m = s.mul;
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      if (m[a][b] != m[b][a]) fail("commutative", {a, b}, s.names[a] + "," + s.names[b]);
      for (Element c = 0; c < n; ++c)
        if (m[m[a][b]][c] != m[a][m[b][c]])
          fail("associative", {a, b, c}, s.names[a] + "," + s.names[b] + "," + s.names[c]);
    }
  for (Element a = 0; a < n; ++a) {
    if (m[s.one][a] != a || m[a][s.one] != a) fail("identity", {a}, "one*" + s.names[a]);
    if (m[s.zero][a] != s.zero || m[a][s.zero] != s.zero) fail("zero", {a}, "zero*" + s.names[a]);
  }
  return v;
}

FiniteMonoid FiniteMonoid::build(MonoidSpec spec) {
  const Verdict v = verify_monoid(spec);
  if (!v.ok()) {
    std::string msg = "monoid axioms violated:";
    for (const auto& viol : v.violations) msg += " [" + viol.rule + " " + viol.detail + "]";
    throw AxiomError(msg);
  }
  return FiniteMonoid(std::move(spec));
}

FiniteMonoid::FiniteMonoid(MonoidSpec spec) : spec_(std::move(spec)), n_(spec_.size()) {
  mul_.resize(n_ * n_);
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b) mul_[a * n_ + b] = spec_.mul[a][b];
}

Subset FiniteMonoid::product(Subset x, Subset y) const {
  Subset out = 0;
  for_each_element(x, [&](Element a) {
    for_each_element(y, [&](Element b) { out |= bit(mul(a, b)); });
  });
  return out;
}

Subset FiniteMonoid::scale(Element c, Subset x) const {
  Subset out = 0;
  for_each_element(x, [&](Element a) { out |= bit(mul(c, a)); });
  return out;
}

std::string FiniteMonoid::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for_each_element(s, [&](Element e) {
    if (!first) out += ",";
    out += name(e);
    first = false;
  });
  return out + "}";
}

MonoidSpec parse_monoid(const nlohmann::json& doc) {
  using nlohmann::json;
  try {
    for (const char* key : {"elements", "mul", "one", "zero"})
      if (!doc.contains(key)) throw LoadError(std::string("missing key '") + key + "'");
    MonoidSpec s;
    s.names = doc.at("elements").get<std::vector<std::string>>();
    const std::size_t n = s.names.size();
    if (n == 0) throw LoadError("monoid has no elements");
    if (n > kMaxCarrier) throw LoadError("monoid carrier exceeds 64 elements");
    std::map<std::string, Element> idx;
    for (Element i = 0; i < n; ++i)
      if (!idx.emplace(s.names[i], i).second)
        throw LoadError("duplicate element name '" + s.names[i] + "'");
    auto lookup = [&](const json& name) {
      if (!name.is_string()) throw LoadError("element reference must be a name string");
      auto it = idx.find(name.get<std::string>());
      if (it == idx.end()) throw LoadError("unknown element '" + name.get<std::string>() + "'");
      return it->second;
    };
    s.one = lookup(doc.at("one"));
    s.zero = lookup(doc.at("zero"));

    std::vector<std::vector<std::optional<Element>>> t(n, std::vector<std::optional<Element>>(n));
    for (const json& e : doc.at("mul")) {
      if (!e.is_array() || e.size() != 3) throw LoadError("mul entry must be [x, y, xy]");
      const Element x = lookup(e[0]), y = lookup(e[1]), z = lookup(e[2]);
      for (auto [i, j] : {std::pair{x, y}, std::pair{y, x}}) {
        if (t[i][j] && *t[i][j] != z)
          throw LoadError("conflicting products for (" + s.names[x] + ", " + s.names[y] + ")");
        t[i][j] = z;
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (auto [i, j] : {std::pair{s.one, a}, std::pair{a, s.one}})
        if (!t[i][j]) t[i][j] = a;
      for (auto [i, j] : {std::pair{s.zero, a}, std::pair{a, s.zero}})
        if (!t[i][j]) t[i][j] = s.zero;
    }
    s.mul.assign(n, std::vector<Element>(n, 0));
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        if (!t[a][b]) throw LoadError("missing product for (" + s.names[a] + ", " + s.names[b] + ")");
        s.mul[a][b] = *t[a][b];
      }
    return s;
  } catch (const json::exception& e) {
    throw LoadError(std::string("malformed monoid JSON: ") + e.what());
  }
}

MonoidSpec load_monoid_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
  return parse_monoid(doc);
}

}  // namespace liftlat
