#include "liftlat/lattice_io.hpp"

#include <fstream>
#include <map>

#include "liftlat/errors.hpp"

namespace liftlat {
namespace {

using nlohmann::json;

std::map<std::string, Element> index_names(const std::vector<std::string>& names) {
  std::map<std::string, Element> idx;
  for (Element i = 0; i < names.size(); ++i)
    if (!idx.emplace(names[i], i).second)
      throw LoadError("duplicate element name '" + names[i] + "'");
  return idx;
}

Element lookup(const std::map<std::string, Element>& idx, const json& name) {
  if (!name.is_string()) throw LoadError("element reference must be a name string");
  auto it = idx.find(name.get<std::string>());
  if (it == idx.end()) throw LoadError("unknown element '" + name.get<std::string>() + "'");
  return it->second;
}

}  // namespace

LatticeSpec parse_lattice(const json& doc) {
  try {
    if (!doc.is_object()) throw LoadError("lattice document must be an object");
    for (const char* key : {"elements", "order", "mul", "top", "bot"})
      if (!doc.contains(key)) throw LoadError(std::string("missing key '") + key + "'");

    LatticeSpec s;
    s.names = doc.at("elements").get<std::vector<std::string>>();
    const std::size_t n = s.names.size();
    if (n == 0) throw LoadError("lattice has no elements");
    if (n > kMaxCarrier) throw LoadError("lattice carrier exceeds 64 elements");
    const auto idx = index_names(s.names);
    s.top = lookup(idx, doc.at("top"));
    s.bot = lookup(idx, doc.at("bot"));

    const json& order = doc.at("order");
    if (!order.is_object() || order.size() != 1 ||
        !(order.contains("covers") || order.contains("leq")))
      throw LoadError("'order' must be {\"covers\": [...]} or {\"leq\": [...]}");
    const json& pairs = order.contains("covers") ? order.at("covers") : order.at("leq");
    s.leq.assign(n, std::vector<bool>(n, false));
    for (Element a = 0; a < n; ++a) s.leq[a][a] = true;
    for (const json& p : pairs) {
      if (!p.is_array() || p.size() != 2) throw LoadError("order pair must be [lo, hi]");
      s.leq[lookup(idx, p[0])][lookup(idx, p[1])] = true;
    }
    for (Element k = 0; k < n; ++k)
      for (Element a = 0; a < n; ++a)
        if (s.leq[a][k])
          for (Element b = 0; b < n; ++b)
            if (s.leq[k][b]) s.leq[a][b] = true;

    std::vector<std::vector<std::optional<Element>>> table(
        n, std::vector<std::optional<Element>>(n));
    for (const json& e : doc.at("mul")) {
      if (!e.is_array() || e.size() != 3) throw LoadError("mul entry must be [x, y, xy]");
      const Element x = lookup(idx, e[0]), y = lookup(idx, e[1]), z = lookup(idx, e[2]);
      for (auto [i, j] : {std::pair{x, y}, std::pair{y, x}}) {
        if (table[i][j] && *table[i][j] != z)
          throw LoadError("conflicting products for (" + s.names[x] + ", " + s.names[y] + ")");
        table[i][j] = z;
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (auto [i, j] : {std::pair{s.top, a}, std::pair{a, s.top}})
        if (!table[i][j]) table[i][j] = a;
      for (auto [i, j] : {std::pair{s.bot, a}, std::pair{a, s.bot}})
        if (!table[i][j]) table[i][j] = s.bot;
    }
    s.mul.assign(n, std::vector<Element>(n, 0));
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        if (!table[a][b])
          throw LoadError("missing product for (" + s.names[a] + ", " + s.names[b] + ")");
        s.mul[a][b] = *table[a][b];
      }
    return s;
  } catch (const json::exception& e) {
    throw LoadError(std::string("malformed lattice JSON: ") + e.what());
  }
}

LatticeSpec load_lattice_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
  return parse_lattice(doc);
}

json lattice_to_json(const FiniteLattice& L) {
  json covers = json::array();
  for (Element a = 0; a < L.size(); ++a)
    for (Element b = 0; b < L.size(); ++b) {
      if (a == b || !L.leq(a, b)) continue;
      // a < b is a cover iff nothing sits strictly between.
      if ((L.up(a) & L.down(b)) == (bit(a) | bit(b)))
        covers.push_back({L.name(a), L.name(b)});
    }
  json mul = json::array();
  for (Element a = 0; a < L.size(); ++a)
    for (Element b = a; b < L.size(); ++b)
      mul.push_back({L.name(a), L.name(b), L.name(L.mul(a, b))});
  return {{"elements", L.names()},
          {"order", {{"covers", covers}}},
          {"mul", mul},
          {"top", L.name(L.top())},
          {"bot", L.name(L.bot())}};
}

}  // namespace liftlat
