#include "liftlat/lifting.hpp"

#include "liftlat/errors.hpp"

namespace liftlat {
namespace {

std::optional<MWitness> find_m_witness(const FiniteLattice& L, Subset h) {
  const std::vector<Element> hs = elements_of(h);
  for (Element s : hs)
    for (Element t : hs)
      for (Element a = 0; a < L.size(); ++a) {
        if (!L.leq(s, L.mul(t, a))) continue;
        bool found = false;
        for_each_element(h & L.down(a), [&](Element u) {
          if (L.mul(t, u) == s) found = true;
        });
        if (!found) return MWitness{s, t, a};
      }
  return std::nullopt;
}

bool mult_closed(const FiniteLattice& L, Subset h) {
  return is_subset(L.product(h, h), h);
}

// Maps a monoid-element mask to the lattice-element mask.
Subset to_lattice(const std::vector<Element>& members, Subset x) {
  Subset out = 0;
  for_each_element(x, [&](Element i) { out |= bit(members[i]); });
  return out;
}

Subset to_monoid(const std::vector<Element>& members, Subset y) {
  Subset out = 0;
  for (Element i = 0; i < members.size(); ++i)
    if (contains(y, members[i])) out |= bit(i);
  return out;
}

}  // namespace

WireReport analyze_wire(const FiniteLattice& L, Subset h) {
  if (!is_subset(h, L.all())) throw PreconditionError("analyze_wire: subset outside the carrier");
  WireReport r;
  r.wire = h;
  r.contains_one = contains(h, L.top());
  r.contains_zero = contains(h, L.bot());
  r.mult_closed = mult_closed(L, h);
  r.generates = generates(L, h);
  r.is_wire = r.contains_one && r.contains_zero && r.mult_closed && r.generates;
  if (r.is_wire) {
    r.m_witness = find_m_witness(L, h);
    r.is_m_wire = !r.m_witness.has_value();
  }
  return r;
}

bool confirms_m_witness(const FiniteLattice& L, Subset h, const MWitness& w) {
  if (!contains(h, w.s) || !contains(h, w.t) || w.a >= L.size()) return false;
  if (!L.leq(w.s, L.mul(w.t, w.a))) return false;
  for (Element u = 0; u < L.size(); ++u)
    if (contains(h, u) && L.leq(u, w.a) && L.mul(w.t, u) == w.s) return false;
  return true;
}

FiniteMonoid wire_monoid(const FiniteLattice& L, Subset h) {
  if (!contains(h, L.top()) || !contains(h, L.bot()) || !mult_closed(L, h))
    throw PreconditionError("wire_monoid: " + L.format(h) + " is not a submonoid with zero");
  const std::vector<Element> members = elements_of(h);
  MonoidSpec s;
  const std::size_t m = members.size();
  s.mul.assign(m, std::vector<Element>(m, 0));
  std::vector<Element> pos(L.size(), 0);
  for (Element i = 0; i < m; ++i) pos[members[i]] = i;
  for (Element i = 0; i < m; ++i) {
    s.names.push_back(L.name(members[i]));
    for (Element j = 0; j < m; ++j) s.mul[i][j] = pos[L.mul(members[i], members[j])];
  }
  s.one = pos[L.top()];
  s.zero = pos[L.bot()];
  return FiniteMonoid::build(std::move(s));
}

ClosureMap lifted_closure(const FiniteLattice& L, Subset h) {
  FiniteMonoid monoid = wire_monoid(L, h);
  const std::vector<Element> members = elements_of(h);
  if (members.size() > kMaxClosureCarrier)
    throw PreconditionError("lifted_closure: wire has more than " +
                            std::to_string(kMaxClosureCarrier) + " elements");
  std::vector<Subset> table(std::size_t{1} << members.size());
  for (Subset x = 0; x < table.size(); ++x)
    table[x] = to_monoid(members, h & L.down(L.join(to_lattice(members, x))));
  return ClosureMap(std::move(monoid), std::move(table));
}

IsoCertificate certify_isomorphism(const FiniteLattice& L, const std::vector<Element>& members,
                                   const IdealLattice& I, std::vector<Element>* iso_f,
                                   std::vector<Element>* iso_g) {
  IsoCertificate cert;
  const std::size_t k = I.ideals.size();
  const FiniteLattice& IL = I.lattice;
  Subset h = 0;
  for (Element e : members) h |= bit(e);

  std::vector<Element> f(k);
  for (Element i = 0; i < k; ++i) f[i] = L.join(to_lattice(members, I.ideals[i]));

  std::vector<Element> g(L.size(), 0);
  bool g_total = true;
  for (Element y = 0; y < L.size(); ++y) {
    const Subset ideal = to_monoid(members, h & L.down(y));
    if (auto idx = I.index_of(ideal)) {
      g[y] = *idx;
    } else {
      cert.failures.push_back("g(" + L.name(y) + ") = " + L.format(h & L.down(y)) +
                              " is not an r-ideal");
      g_total = false;
    }
  }
  if (k != L.size())
    cert.failures.push_back("ideal count " + std::to_string(k) + " != lattice size " +
                            std::to_string(L.size()));

  if (g_total) {
    for (Element y = 0; y < L.size(); ++y)
      if (f[g[y]] != y) {
        cert.failures.push_back("f(g(" + L.name(y) + ")) = " + L.name(f[g[y]]));
        break;
      }
    for (Element i = 0; i < k; ++i)
      if (g[f[i]] != i) {
        cert.failures.push_back("g(f(" + IL.name(i) + ")) != itself");
        break;
      }
  }
  for (Element i = 0; i < k && cert.ok(); ++i)
    for (Element j = 0; j < k; ++j) {
      if (f[IL.mul(i, j)] != L.mul(f[i], f[j])) {
        cert.failures.push_back("f not multiplicative at (" + IL.name(i) + ", " + IL.name(j) + ")");
        break;
      }
      if (IL.leq(i, j) != L.leq(f[i], f[j])) {
        cert.failures.push_back("f does not preserve/reflect order at (" + IL.name(i) + ", " +
                                IL.name(j) + ")");
        break;
      }
    }
  if (g_total)
    for (Element x = 0; x < L.size() && cert.ok(); ++x)
      for (Element y = 0; y < L.size(); ++y)
        if (L.leq(x, y) != IL.leq(g[x], g[y])) {
          cert.failures.push_back("g does not preserve/reflect order at (" + L.name(x) + ", " +
                                  L.name(y) + ")");
          break;
        }
  if (iso_f) *iso_f = f;
  if (iso_g) *iso_g = g;
  return cert;
}

LiftResult lift(const FiniteLattice& L, Subset h) {
  const WireReport report = analyze_wire(L, h);
  if (!report.is_wire) throw PreconditionError("lift: " + L.format(h) + " is not a wire");
  ClosureMap system = lifted_closure(L, h);
  const Verdict weak = verify_weak_ideal_system(system);
  if (!weak.ok())
    throw OracleViolation("lifted map of wire " + L.format(h) + " violates " +
                          weak.violations.front().rule + ": " + weak.violations.front().detail);
  IdealLattice ideals = build_ideal_lattice(system);
  std::vector<Element> f, g;
  const std::vector<Element> members = elements_of(h);
  const IsoCertificate cert = certify_isomorphism(L, members, ideals, &f, &g);
  if (!cert.ok())
    throw OracleViolation("lift of wire " + L.format(h) + " is not isomorphic to L: " +
                          cert.failures.front());
  return LiftResult{h, members, std::move(system), std::move(ideals), std::move(f), std::move(g),
                    true};
}

void for_each_wire(const FiniteLattice& L, bool m_only,
                   const std::function<bool(const WireReport&)>& visit) {
  if (L.size() > kMaxWireSearch)
    throw PreconditionError("for_each_wire: lattice exceeds " + std::to_string(kMaxWireSearch) +
                            " elements");
  const Subset fixed = bit(L.bot()) | bit(L.top());
  const std::vector<Element> free = elements_of(L.all() & ~fixed);
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << free.size()); ++pick) {
    Subset h = fixed;
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((pick >> i) & 1U) h |= bit(free[i]);
    // Cheap test first; generation needs a join per element.
    if (!mult_closed(L, h)) continue;
    if (!generates(L, h)) continue;
    const WireReport r = analyze_wire(L, h);
    if (m_only && !r.is_m_wire) continue;
    if (!visit(r)) return;
  }
}

std::vector<WireReport> enumerate_wires(const FiniteLattice& L, bool m_only) {
  std::vector<WireReport> out;
  for_each_wire(L, m_only, [&](const WireReport& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

CorollaryReport check_corollary_equivalences(const FiniteLattice& L) {
  CorollaryReport rep;
  for_each_wire(L, false, [&](const WireReport& w) {
    ++rep.wires;
    if (w.is_m_wire) ++rep.m_wires;
    try {
      const LiftResult res = lift(L, w.wire);
      const bool ideal = verify_ideal_system(res.system).ok();
      if (ideal) ++rep.ideal_systems;
      if (ideal != w.is_m_wire)
        rep.findings.push_back({"ideal_iff_m_wire", "wire " + L.format(w.wire) + ": ideal system = " +
                                                   (ideal ? "yes" : "no") + ", M-wire = " +
                                                   (w.is_m_wire ? "yes" : "no")});
      if (w.m_witness && !confirms_m_witness(L, w.wire, *w.m_witness))
        rep.findings.push_back({"m_witness", "witness for " + L.format(w.wire) + " does not recheck"});
      const Verdict fin = verify_finitary(res.system);
      if (fin.ok()) ++rep.finitary;
      bool compact = true;
      for (Element x = 0; x < L.size(); ++x) compact = compact && classify_element(L, x).compact;
      rep.all_compact = rep.all_compact && compact;
      if (fin.ok() != compact)
        rep.findings.push_back({"finitary_iff_compact", "wire " + L.format(w.wire) +
                                                    ": finitary verdict differs from compactness"});
    } catch (const OracleViolation& e) {
      rep.findings.push_back({"lift_certificate", e.what()});
    }
    return true;
  });
  return rep;
}

PropositionReport check_liftability_propositions(const FiniteLattice& L) {
  PropositionReport rep;
  rep.meet_principal = meet_principal_elements(L);
  rep.weak_meet_principal = weak_meet_principal_elements(L);
  rep.principal = principal_elements(L);
  rep.domain = is_domain(L);
  rep.meet_principal_generates = generates(L, rep.meet_principal);
  rep.weak_meet_principal_generates = generates(L, rep.weak_meet_principal);
  rep.principal_generates = generates(L, rep.principal);

  if (!is_subset(rep.meet_principal, rep.weak_meet_principal))
    rep.findings.push_back({"principal_sets", "a meet principal element is not weak meet principal"});

  // (i) H = L.
  try {
    const LiftResult full = lift(L, L.all());
    rep.part_i_holds = full.certified;
    rep.full_lift_is_ideal_system = verify_ideal_system(full.system).ok();
  } catch (const std::exception& e) {
    rep.findings.push_back({"full_lift", e.what()});
  }

  // (ii) An M-wire exists => meet principal elements generate.
  for_each_wire(L, true, [&](const WireReport&) {
    rep.has_m_wire = true;
    return false;
  });
  if (rep.has_m_wire && !rep.meet_principal_generates)
    rep.findings.push_back({"m_wire_meet_principal", "M-wire exists but meet principal elements " +
                                                  L.format(rep.meet_principal) + " do not generate"});

  // (iii) Domain generated by principal elements.
  rep.part_iii_applies = rep.domain && rep.principal_generates;
  if (rep.part_iii_applies) {
    const Subset h = rep.principal | bit(L.bot());
    rep.principal_submonoid = contains(h, L.top()) && is_subset(L.product(h, h), h);
    if (!*rep.principal_submonoid) {
      rep.findings.push_back({"principal_wire", "principal elements " + L.format(h) +
                                                     " are not a submonoid"});
    } else {
      const WireReport w = analyze_wire(L, h);
      rep.principal_wire_is_m_wire = w.is_m_wire;
      if (!w.is_m_wire) {
        rep.findings.push_back({"principal_wire", "principal wire " + L.format(h) +
                                                       " is not an M-wire"});
      } else {
        try {
          const LiftResult res = lift(L, h);
          rep.principal_lift_is_ideal_system = verify_ideal_system(res.system).ok();
          if (!*rep.principal_lift_is_ideal_system)
            rep.findings.push_back({"principal_wire", "lift of principal wire is not an ideal system"});
        } catch (const std::exception& e) {
          rep.findings.push_back({"principal_wire", e.what()});
        }
      }
    }
  }
  return rep;
}

ClosureMap finitary_closure(const ClosureMap& r) {
  if (!verify_weak_ideal_system(r).ok())
    throw PreconditionError("finitary_closure: map is not a weak ideal system");
  std::vector<Subset> table(r.domain_size());
  for (Subset x = 0; x < table.size(); ++x) {
    Subset acc = r(0);
    for (Subset z = x; z != 0; z = (z - 1) & x) acc |= r(z);
    table[x] = acc;
  }
  ClosureMap rs(r.carrier(), std::move(table));
  if (!(rs == r)) throw OracleViolation("finitary closure differs from r on a finite carrier");
  if (!verify_weak_ideal_system(rs).ok())
    throw OracleViolation("finitary closure is not a weak ideal system");
  return rs;
}

FinitaryEmbeddingReport check_finitary_embedding(const FiniteLattice& L) {
  FinitaryEmbeddingReport rep;
  try {
    const ClosureMap r = lifted_closure(L, L.all());
    const ClosureMap rs = finitary_closure(r);
    rep.equals_original = rs == r;
    const IdealLattice ideals = build_ideal_lattice(rs);
    rep.ideals = ideals.ideals.size();
    // With H = L the map g is exactly x -> [0, x].
    const IsoCertificate cert = certify_isomorphism(L, elements_of(L.all()), ideals);
    rep.embedding_isomorphism = cert.ok();
    for (const auto& f : cert.failures) rep.findings.push_back({"finitary_embedding", f});
  } catch (const std::exception& e) {
    rep.findings.push_back({"finitary_closure", e.what()});
  }
  return rep;
}

}  // namespace liftlat
