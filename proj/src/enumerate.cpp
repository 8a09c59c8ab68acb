#include "liftlat/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "liftlat/errors.hpp"

namespace liftlat {
namespace {

using Relation = std::vector<std::vector<bool>>;

std::vector<std::string> element_names(std::size_t n) {
  if (n == 1) return {"0"};
  std::vector<std::string> names{"0"};
  for (std::size_t i = 0; i + 2 < n; ++i) names.push_back(std::string(1, char('a' + i)));
  names.push_back("1");
  return names;
}

std::uint64_t encode(const Relation& leq) {
  std::uint64_t code = 0;
  for (const auto& row : leq)
    for (bool b : row) code = (code << 1) | (b ? 1U : 0U);
  return code;
}

// Permutations of the whole carrier that fix bot (0) and top (n-1).
std::vector<std::vector<Element>> inner_permutations(std::size_t n) {
  std::vector<Element> inner(n - 2);
  std::iota(inner.begin(), inner.end(), Element{1});
  std::vector<std::vector<Element>> perms;
  do {
    std::vector<Element> p(n);
    p[0] = 0;
    p[n - 1] = n - 1;
    for (std::size_t i = 0; i < inner.size(); ++i) p[i + 1] = inner[i];
    perms.push_back(std::move(p));
  } while (std::next_permutation(inner.begin(), inner.end()));
  return perms;
}

Relation permute(const Relation& leq, const std::vector<Element>& p) {
  const std::size_t n = leq.size();
  Relation out(n, std::vector<bool>(n, false));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) out[p[a]][p[b]] = leq[a][b];
  return out;
}

bool has_binary_bounds(const Relation& leq) {
  const std::size_t n = leq.size();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      std::size_t least = 0, greatest = 0;
      for (Element z = 0; z < n; ++z) {
        if (leq[a][z] && leq[b][z]) {
          bool is_least = true;
          for (Element w = 0; w < n; ++w)
            if (leq[a][w] && leq[b][w] && !leq[z][w]) is_least = false;
          least += is_least;
        }
        if (leq[z][a] && leq[z][b]) {
          bool is_greatest = true;
          for (Element w = 0; w < n; ++w)
            if (leq[w][a] && leq[w][b] && !leq[w][z]) is_greatest = false;
          greatest += is_greatest;
        }
      }
      if (least != 1 || greatest != 1) return false;
    }
  return true;
}

// Bounded lattice orders on n >= 2 elements, one per isomorphism class.
std::vector<Relation> lattice_orders(std::size_t n) {
  const std::size_t k = n - 2;
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 0; i < k; ++i)
    for (Element j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  const auto perms = inner_permutations(n);

  std::vector<Relation> out;
  std::set<std::uint64_t> seen;
  // Every finite poset has a linear extension, so relating i < j only for
  // i < j in index order reaches every isomorphism class.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Relation inner(k, std::vector<bool>(k, false));
    for (Element i = 0; i < k; ++i) inner[i][i] = true;
    for (std::size_t t = 0; t < pairs.size(); ++t)
      if ((mask >> t) & 1U) inner[pairs[t].first][pairs[t].second] = true;
    bool transitive = true;
    for (Element a = 0; a < k && transitive; ++a)
      for (Element b = 0; b < k && transitive; ++b)
        for (Element c = 0; c < k && transitive; ++c)
          if (inner[a][b] && inner[b][c] && !inner[a][c]) transitive = false;
    if (!transitive) continue;

    Relation leq(n, std::vector<bool>(n, false));
    for (Element a = 0; a < n; ++a) {
      leq[0][a] = true;
      leq[a][n - 1] = true;
    }
    for (Element a = 0; a < k; ++a)
      for (Element b = 0; b < k; ++b) leq[a + 1][b + 1] = inner[a][b];
    if (!has_binary_bounds(leq)) continue;

    std::uint64_t canonical = encode(leq);
    for (const auto& p : perms) canonical = std::min(canonical, encode(permute(leq, p)));
    if (seen.insert(canonical).second) out.push_back(std::move(leq));
  }
  return out;
}

class TableSearch {
 public:
  TableSearch(std::size_t n, const Relation& leq,
              const std::function<bool(const FiniteLattice&)>& visit, std::size_t limit)
      : n_(n), leq_(leq), visit_(visit), limit_(limit) {
    meet_.assign(n * n, 0);
    join_.assign(n * n, 0);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        for (Element z = 0; z < n; ++z) {
          bool is_meet = leq_[z][a] && leq_[z][b];
          bool is_join = leq_[a][z] && leq_[b][z];
          for (Element w = 0; w < n && (is_meet || is_join); ++w) {
            if (is_meet && leq_[w][a] && leq_[w][b] && !leq_[w][z]) is_meet = false;
            if (is_join && leq_[a][w] && leq_[b][w] && !leq_[z][w]) is_join = false;
          }
          if (is_meet) meet_[a * n + b] = z;
          if (is_join) join_[a * n + b] = z;
        }
      }
    for (Element i = 1; i + 1 < n; ++i)
      for (Element j = i; j + 1 < n; ++j) cells_.emplace_back(i, j);
    for (const auto& p : inner_permutations(n))
      if (permute(leq_, p) == leq_) automorphisms_.push_back(p);
    table_.assign(n * n, kUnknown);
    for (Element a = 0; a < n; ++a) {
      set(n - 1, a, a);
      set(0, a, 0);
    }
  }

  std::size_t run() {
    descend(0);
    return emitted_;
  }
  bool stopped() const { return stopped_; }

 private:
  static constexpr Element kUnknown = ~Element{0};

  Element get(Element a, Element b) const { return table_[a * n_ + b]; }
  void set(Element a, Element b, Element v) {
    table_[a * n_ + b] = v;
    table_[b * n_ + a] = v;
  }

  bool partial_ok(Element i, Element j) const {
    const Element v = get(i, j);
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) {
        const Element w = get(x, y);
        if (w == kUnknown) continue;
        if (leq_[x][i] && leq_[y][j] && !leq_[w][v]) return false;
        if (leq_[i][x] && leq_[j][y] && !leq_[v][w]) return false;
      }
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b) {
        const Element ab = get(a, b);
        for (Element c = 0; c < n_; ++c) {
          const Element bc = get(b, c);
          if (ab != kUnknown && bc != kUnknown) {
            const Element l = get(ab, c), r = get(a, bc);
            if (l != kUnknown && r != kUnknown && l != r) return false;
          }
          const Element lhs = get(a, join_[b * n_ + c]);
          const Element ac = get(a, c);
          if (lhs != kUnknown && ab != kUnknown && ac != kUnknown &&
              lhs != join_[ab * n_ + ac])
            return false;
        }
      }
    return true;
  }

  std::vector<Element> code_of(const std::vector<Element>& p) const {
    // Table entries of the permuted multiplication, read cell by cell.
    std::vector<Element> inv(n_);
    for (Element a = 0; a < n_; ++a) inv[p[a]] = a;
    std::vector<Element> code;
    code.reserve(cells_.size());
    for (auto [i, j] : cells_) code.push_back(p[get(inv[i], inv[j])]);
    return code;
  }

  void emit() {
    const auto identity = code_of(automorphisms_.front());
    for (const auto& p : automorphisms_)
      if (code_of(p) < identity) return;
    LatticeSpec s;
    s.names = element_names(n_);
    s.leq = leq_;
    s.mul.assign(n_, std::vector<Element>(n_, 0));
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b) s.mul[a][b] = get(a, b);
    s.bot = 0;
    s.top = n_ - 1;
    const Verdict v = verify_lattice(s);
    if (!v.ok()) return;  // partial checks are necessary, not sufficient
    ++emitted_;
    if (!visit_(FiniteLattice::build(std::move(s))) || emitted_ >= limit_) stopped_ = true;
  }

  void descend(std::size_t t) {
    if (stopped_) return;
    if (t == cells_.size()) {
      emit();
      return;
    }
    const auto [i, j] = cells_[t];
    const Element m = meet_[i * n_ + j];
    for (Element v = 0; v < n_ && !stopped_; ++v) {
      // ij <= i*1 = i and likewise <= j, so ij <= i ^ j.
      if (!leq_[v][m]) continue;
      set(i, j, v);
      if (partial_ok(i, j)) descend(t + 1);
    }
    set(i, j, kUnknown);
  }

  std::size_t n_;
  const Relation& leq_;
  const std::function<bool(const FiniteLattice&)>& visit_;
  std::size_t limit_;
  std::vector<Element> meet_, join_, table_;
  std::vector<std::pair<Element, Element>> cells_;
  std::vector<std::vector<Element>> automorphisms_;
  std::size_t emitted_ = 0;
  bool stopped_ = false;
};

}  // namespace

std::size_t for_each_small_lattice(std::size_t n, std::size_t limit,
                                   const std::function<bool(const FiniteLattice&)>& visit) {
  if (n == 0 || n > kMaxEnumerated)
    throw PreconditionError("enumerate_small_lattices: n must be in [1, " +
                            std::to_string(kMaxEnumerated) + "]");
  if (limit == 0) return 0;
  if (n == 1) {
    LatticeSpec s;
    s.names = {"0"};
    s.leq = {{true}};
    s.mul = {{0}};
    visit(FiniteLattice::build(std::move(s)));
    return 1;
  }
  std::size_t count = 0;
  for (const Relation& leq : lattice_orders(n)) {
    TableSearch search(n, leq, visit, limit - count);
    count += search.run();
    if (search.stopped()) break;
  }
  return count;
}

std::vector<FiniteLattice> enumerate_small_lattices(std::size_t n, std::size_t limit) {
  std::vector<FiniteLattice> out;
  for_each_small_lattice(n, limit, [&](const FiniteLattice& L) {
    out.push_back(L);
    return true;
  });
  return out;
}

std::vector<FiniteLattice> small_lattice_corpus(std::size_t max_n, std::size_t limit_per_size) {
  std::vector<FiniteLattice> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto part = enumerate_small_lattices(n, limit_per_size);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<FiniteLattice> relabelings(const FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  if (n > kMaxEnumerated)
    throw PreconditionError("relabelings: at most " + std::to_string(kMaxEnumerated) +
                            " elements");
  const LatticeSpec& s = lattice.spec();
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<FiniteLattice> out;
  std::set<std::pair<Relation, std::vector<std::vector<Element>>>> seen;
  do {
    LatticeSpec t;
    t.names.resize(n);
    t.leq = permute(s.leq, p);
    t.mul.assign(n, std::vector<Element>(n, 0));
    for (Element a = 0; a < n; ++a) {
      t.names[p[a]] = s.names[a];
      for (Element b = 0; b < n; ++b) t.mul[p[a]][p[b]] = p[s.mul[a][b]];
    }
    t.bot = p[s.bot];
    t.top = p[s.top];
    // Automorphisms give back an identical table; keep one copy.
    if (seen.insert({t.leq, t.mul}).second) out.push_back(FiniteLattice::build(std::move(t)));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace liftlat
