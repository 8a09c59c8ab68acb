#include "liftlat/report.hpp"

namespace liftlat {

using nlohmann::json;

json subset_json(const FiniteLattice& L, Subset s) {
  json out = json::array();
  for_each_element(s, [&](Element e) { out.push_back(L.name(e)); });
  return out;
}

json verdict_json(const Verdict& v) {
  json viols = json::array();
  for (const auto& x : v.violations)
    viols.push_back({{"rule", x.rule}, {"witness", x.witness}, {"detail", x.detail}});
  json out = {{"pass", v.ok()}, {"violations", viols}};
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

json flags_json(const ElementFlags& f) {
  return {{"meet_principal", f.meet_principal},
          {"weak_meet_principal", f.weak_meet_principal},
          {"join_principal", f.join_principal},
          {"weak_join_principal", f.weak_join_principal},
          {"principal", f.principal},
          {"weak_principal", f.weak_principal},
          {"compact", f.compact}};
}

json wire_json(const FiniteLattice& L, const WireReport& w) {
  json out = {{"wire", subset_json(L, w.wire)},
              {"contains_one", w.contains_one},
              {"contains_zero", w.contains_zero},
              {"mult_closed", w.mult_closed},
              {"generates", w.generates},
              {"is_wire", w.is_wire},
              {"is_m_wire", w.is_m_wire}};
  if (w.m_witness)
    out["m_witness"] = {{"s", L.name(w.m_witness->s)},
                        {"t", L.name(w.m_witness->t)},
                        {"a", L.name(w.m_witness->a)}};
  else
    out["m_witness"] = nullptr;
  return out;
}

json lift_json(const FiniteLattice& L, const LiftResult& r) {
  json ideals = json::array();
  for (Subset ideal : r.ideal_lattice.ideals) {
    json members = json::array();
    for_each_element(ideal, [&](Element i) { members.push_back(L.name(r.members[i])); });
    ideals.push_back(members);
  }
  json f = json::object();
  for (Element i = 0; i < r.iso_f.size(); ++i)
    f[r.ideal_lattice.lattice.name(i)] = L.name(r.iso_f[i]);
  return {{"wire", subset_json(L, r.wire)},
          {"ideal_count", r.ideal_lattice.ideals.size()},
          {"ideals", ideals},
          {"certified", r.certified},
          {"iso_f", f},
          {"principal_generates", r.ideal_lattice.principal_generates},
          {"product_compatible", r.ideal_lattice.product_compatible}};
}

json findings_json(const std::vector<Finding>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back({{"check", f.check}, {"detail", f.detail}});
  return out;
}

json corollary_json(const CorollaryReport& r) {
  return {{"wires", r.wires},
          {"m_wires", r.m_wires},
          {"ideal_systems", r.ideal_systems},
          {"finitary", r.finitary},
          {"all_compact", r.all_compact},
          {"findings", findings_json(r.findings)}};
}

json proposition_json(const FiniteLattice& L, const PropositionReport& r) {
  auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  return {{"meet_principal", subset_json(L, r.meet_principal)},
          {"weak_meet_principal", subset_json(L, r.weak_meet_principal)},
          {"principal", subset_json(L, r.principal)},
          {"domain", r.domain},
          {"has_m_wire", r.has_m_wire},
          {"meet_principal_generates", r.meet_principal_generates},
          {"weak_meet_principal_generates", r.weak_meet_principal_generates},
          {"principal_generates", r.principal_generates},
          {"part_i_holds", r.part_i_holds},
          {"full_lift_is_ideal_system", r.full_lift_is_ideal_system},
          {"part_iii_applies", r.part_iii_applies},
          {"principal_submonoid", opt(r.principal_submonoid)},
          {"principal_wire_is_m_wire", opt(r.principal_wire_is_m_wire)},
          {"principal_lift_is_ideal_system", opt(r.principal_lift_is_ideal_system)},
          {"findings", findings_json(r.findings)}};
}

json embedding_json(const FinitaryEmbeddingReport& r) {
  return {{"equals_original", r.equals_original},
          {"embedding_isomorphism", r.embedding_isomorphism},
          {"ideals", r.ideals},
          {"findings", findings_json(r.findings)}};
}

namespace nat {

json counterexample_json(const DivisionCounterexample& c) {
  return {{"divisor", c.divisor}, {"multiple", c.multiple}, {"quotient", c.quotient}};
}

json division_json(const DivisionClosureResult& r) {
  return {{"bound", r.bound},
          {"closed", r.closed()},
          {"verdict", r.closed() ? "CLOSED-UP-TO-BOUND" : "COUNTEREXAMPLE"},
          {"counterexample", r.counterexample ? counterexample_json(*r.counterexample) : json()}};
}

json sgen_json(const SGenReport& r) {
  json primes = json::array();
  for (const auto& v : r.primes) {
    json p = {{"p", v.p}, {"status", to_string(v.status)}};
    if (v.norm_witness) p["norm_witness"] = {v.norm_witness->a, v.norm_witness->b};
    if (v.gcd_witness) p["gcd_witness"] = {v.gcd_witness->first, v.gcd_witness->second};
    primes.push_back(p);
  }
  return {{"d", r.d},
          {"prime_bound", r.prime_bound},
          {"search_bound", r.search_bound},
          {"inert", r.count(PrimeStatus::inert)},
          {"norm", r.count(PrimeStatus::norm)},
          {"gcd_generated", r.count(PrimeStatus::gcd_generated)},
          {"unresolved", r.count(PrimeStatus::unresolved)},
          {"primes", primes}};
}

json mwire_json(const MWireResult& r) {
  return {{"verdict", to_string(r.verdict)},
          {"bound", r.bound},
          {"counterexample", r.counterexample ? counterexample_json(*r.counterexample) : json()}};
}

}  // namespace nat
}  // namespace liftlat
