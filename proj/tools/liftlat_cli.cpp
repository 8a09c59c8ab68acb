// liftlat: command-line front end.
//
//   liftlat check-lattice FILE
//   liftlat lift FILE [--wire 0,a,1 | --all-wires | --m-wires-only]
//   liftlat corpus [--max-n K] [--limit M]
//   liftlat quad --d D [--bound B] [--prime-bound P] [--search-bound S]
//                {norms|division-closure|s-wire|verdict}
//
// Every subcommand takes --format json|text. Exit codes: 0 all checks
// passed, 1 a check failed, 2 usage or load error, 3 a result contradicted
// a theorem or a witness did not re-verify. LIFTLAT_THREADS sets the
// worker count for corpus sweeps.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "liftlat/enumerate.hpp"
#include "liftlat/errors.hpp"
#include "liftlat/lattice_io.hpp"
#include "liftlat/lifting.hpp"
#include "liftlat/nat_quadratic.hpp"
#include "liftlat/report.hpp"

using namespace liftlat;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kOracle = 3 };

struct Outcome {
  json results = json::object();
  int code = kPass;
  std::vector<std::string> text;

  void raise(int c) {
    // An oracle violation outranks a check failure, which outranks a pass.
    if (c == kOracle || (c == kCheckFailed && code == kPass)) code = c;
  }
  void say(std::string line) { text.push_back(std::move(line)); }
};

// Raised when a witness fails to re-verify; reported with exit code 3.
struct Unverified : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join_names(const FiniteLattice& L, Subset s) {
  std::string out = "{";
  bool first = true;
  for_each_element(s, [&](Element e) {
    out += (first ? "" : ",") + L.name(e);
    first = false;
  });
  return out + "}";
}

// ---- check-lattice --------------------------------------------------------

Outcome cmd_check_lattice(const std::string& path) {
  Outcome o;
  const LatticeSpec spec = load_lattice_file(path);
  const Verdict v = verify_lattice(spec);
  for (const Violation& x : v.violations)
    if (!confirms_violation(spec, x)) throw Unverified("witness for " + x.rule + " did not re-check");
  o.results["path"] = path;
  o.results["elements"] = spec.names;
  o.results["verdict"] = verdict_json(v);
  if (v.ok()) {
    const FiniteLattice L = FiniteLattice::build(spec);
    o.results["domain"] = is_domain(L);
    o.results["meet_principal"] = subset_json(L, meet_principal_elements(L));
    o.results["weak_meet_principal"] = subset_json(L, weak_meet_principal_elements(L));
    o.results["principal"] = subset_json(L, principal_elements(L));
    o.say(path + ": PASS (" + std::to_string(L.size()) + " elements)");
    o.say("  weak meet principal: " + join_names(L, weak_meet_principal_elements(L)));
    o.say("  principal:           " + join_names(L, principal_elements(L)));
  } else {
    o.raise(kCheckFailed);
    o.say(path + ": FAIL");
    for (const Violation& x : v.violations) o.say("  " + x.rule + ": " + x.detail);
  }
  return o;
}

// ---- lift -----------------------------------------------------------------

// Lifts one wire, re-checks its witnesses, and holds the outcome against
// the M-wire / ideal-system equivalence.
json lift_one(const FiniteLattice& L, const WireReport& w, Outcome& o) {
  json entry = wire_json(L, w);
  if (!w.is_wire) {
    o.raise(kCheckFailed);
    o.say("wire " + join_names(L, w.wire) + ": not a wire");
    return entry;
  }
  if (w.m_witness && !confirms_m_witness(L, w.wire, *w.m_witness))
    throw Unverified("M witness for " + join_names(L, w.wire) + " did not re-check");

  const LiftResult r = lift(L, w.wire);
  const Verdict weak = verify_weak_ideal_system(r.system);
  const Verdict ideal = verify_ideal_system(r.system);
  for (const Violation& x : ideal.violations)
    if (!confirms_violation(r.system, x)) throw Unverified("s4 equality witness did not re-check");

  entry["lift"] = lift_json(L, r);
  entry["weak_ideal_system"] = weak.ok();
  entry["ideal_system"] = ideal.ok();
  if (const Violation* x = ideal.find("s4_equality")) {
    Subset X = 0;
    for_each_element(x->witness[1], [&](Element i) { X |= bit(r.members[i]); });
    entry["ideal_violation"] = {{"c", L.name(r.members[x->witness[0]])},
                                {"X", subset_json(L, X)},
                                {"detail", x->detail}};
  } else {
    entry["ideal_violation"] = nullptr;
  }

  std::string line = "wire " + join_names(L, w.wire) + ": " +
                     std::to_string(r.ideal_lattice.ideals.size()) + " ideals, " +
                     (weak.ok() ? "weak ideal system" : "NOT a weak ideal system") + ", " +
                     (ideal.ok() ? "ideal system" : "not an ideal system") +
                     (r.certified ? ", isomorphism certified" : "");
  o.say(line);
  for (Subset ideal_mask : r.ideal_lattice.ideals) {
    Subset in_l = 0;
    for_each_element(ideal_mask, [&](Element i) { in_l |= bit(r.members[i]); });
    o.say("    " + join_names(L, in_l));
  }
  if (w.m_witness)
    o.say("  (M) fails at s=" + L.name(w.m_witness->s) + " t=" + L.name(w.m_witness->t) +
          " a=" + L.name(w.m_witness->a));

  if (!weak.ok() || !r.certified) o.raise(kOracle);
  if (ideal.ok() != w.is_m_wire) {
    o.raise(kOracle);
    o.say("  ideal system / M-wire mismatch");
    entry["oracle_violation"] = "ideal system status differs from M-wire status";
  }
  return entry;
}

Outcome cmd_lift(const std::string& path, const std::string& wire_arg, bool m_only) {
  Outcome o;
  const LatticeSpec spec = load_lattice_file(path);
  const Verdict v = verify_lattice(spec);
  o.results["path"] = path;
  if (!v.ok()) {
    o.results["lattice"] = verdict_json(v);
    o.raise(kCheckFailed);
    o.say(path + ": not a multiplicative lattice");
    return o;
  }
  const FiniteLattice L = FiniteLattice::build(spec);
  json wires = json::array();
  if (!wire_arg.empty()) {
    Subset h = 0;
    std::stringstream ss(wire_arg);
    for (std::string name; std::getline(ss, name, ',');) {
      const auto e = L.find(name);
      if (!e) throw CLI::ValidationError("--wire", "unknown element '" + name + "'");
      h |= bit(*e);
    }
    wires.push_back(lift_one(L, analyze_wire(L, h), o));
  } else {
    for_each_wire(L, m_only, [&](const WireReport& w) {
      wires.push_back(lift_one(L, w, o));
      return true;
    });
    if (wires.empty()) o.say(m_only ? "no M-wires" : "no wires");
  }
  o.results["mode"] = !wire_arg.empty() ? "wire" : (m_only ? "m-wires-only" : "all-wires");
  o.results["wire_count"] = wires.size();
  o.results["wires"] = wires;
  if (wires.empty() && m_only) o.results["message"] = "no M-wires";
  return o;
}

// ---- corpus ---------------------------------------------------------------

std::size_t thread_count() {
  const char* env = std::getenv("LIFTLAT_THREADS");
  if (env == nullptr || *env == '\0') return std::max(1U, std::thread::hardware_concurrency());
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0 || v > 1024)
    throw CLI::ValidationError("LIFTLAT_THREADS", "expected an integer in [1, 1024]");
  return v;
}

struct Sweep {
  CorollaryReport corollary;
  PropositionReport propositions;
  FinitaryEmbeddingReport embedding;
  std::vector<Finding> errors;
};

Outcome cmd_corpus(std::size_t max_n, std::size_t limit) {
  if (max_n == 0 || max_n > kMaxEnumerated)
    throw CLI::ValidationError("--max-n", "must be in [1, " + std::to_string(kMaxEnumerated) + "]");
  Outcome o;
  const std::vector<FiniteLattice> corpus = small_lattice_corpus(max_n, limit);
  std::vector<Sweep> out(corpus.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < corpus.size();) {
      try {
        out[i].corollary = check_corollary_equivalences(corpus[i]);
        out[i].propositions = check_liftability_propositions(corpus[i]);
        out[i].embedding = check_finitary_embedding(corpus[i]);
      } catch (const std::exception& e) {
        out[i].errors.push_back({"exception", e.what()});
      }
    }
  };
  const std::size_t threads = std::min(thread_count(), std::max<std::size_t>(1, corpus.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  json sizes = json::array();
  json violations = json::array();
  std::size_t total_wires = 0, total_m = 0;
  for (std::size_t n = 1, i = 0; n <= max_n; ++n) {
    std::size_t lattices = 0, wires = 0, m_wires = 0, domains = 0;
    for (; i < corpus.size() && corpus[i].size() == n; ++i) {
      const Sweep& s = out[i];
      ++lattices;
      wires += s.corollary.wires;
      m_wires += s.corollary.m_wires;
      domains += s.propositions.domain;
      std::vector<Finding> all = s.errors;
      for (const auto* part : {&s.corollary.findings, &s.propositions.findings, &s.embedding.findings})
        all.insert(all.end(), part->begin(), part->end());
      for (const Finding& f : all) {
        violations.push_back({{"size", n}, {"index", i}, {"check", f.check}, {"detail", f.detail},
                              {"lattice", lattice_to_json(corpus[i])}});
        o.say("VIOLATION n=" + std::to_string(n) + " #" + std::to_string(i) + " " + f.check +
              ": " + f.detail);
      }
    }
    total_wires += wires;
    total_m += m_wires;
    sizes.push_back({{"n", n}, {"lattices", lattices}, {"wires", wires}, {"m_wires", m_wires},
                     {"domains", domains}});
    o.say("n=" + std::to_string(n) + ": " + std::to_string(lattices) + " lattices, " +
          std::to_string(wires) + " wires, " + std::to_string(m_wires) + " M-wires");
  }
  o.results["max_n"] = max_n;
  o.results["limit"] = limit == kUnlimited ? json(nullptr) : json(limit);
  o.results["threads"] = threads;
  o.results["lattices"] = corpus.size();
  o.results["wires"] = total_wires;
  o.results["m_wires"] = total_m;
  o.results["sizes"] = sizes;
  o.results["violations"] = violations;
  o.results["violation_count"] = violations.size();
  if (!violations.empty()) o.raise(kOracle);
  o.say(std::to_string(corpus.size()) + " lattices, " + std::to_string(violations.size()) +
        " violations");
  return o;
}

// ---- quad -----------------------------------------------------------------

struct QuadArgs {
  std::int64_t d = 0;
  std::uint64_t bound = 10000;
  std::uint64_t prime_bound = 200;
  std::uint64_t search_bound = 100000;
  std::string mode;
};

std::string triple(const nat::DivisionCounterexample& c) {
  return "(" + std::to_string(c.divisor) + ", " + std::to_string(c.multiple) + ", " +
         std::to_string(c.quotient) + ")";
}

Outcome cmd_quad(const QuadArgs& a) {
  Outcome o;
  const nat::QuadOrder q(a.d);
  o.results["d"] = a.d;
  o.results["mode"] = a.mode;
  const std::string ring = "Z[sqrt(" + std::to_string(a.d) + ")]";

  if (a.mode == "norms") {
    const nat::NormImage image(q, a.bound);
    json norms = json::array();
    for (std::uint64_t n : image.values()) {
      const auto w = q.represent(n);
      if (!w || q.norm(w->a, w->b) != n) throw Unverified("norm witness for " + std::to_string(n));
      norms.push_back({{"n", n}, {"a", w->a}, {"b", w->b}});
    }
    o.results["bound"] = a.bound;
    o.results["count"] = norms.size();
    o.results["norms"] = norms;
    std::string head;
    for (std::size_t i = 0; i < std::min<std::size_t>(20, image.values().size()); ++i)
      head += (i ? " " : "") + std::to_string(image.values()[i]);
    o.say(ring + ": " + std::to_string(norms.size()) + " nonzero norms up to " +
          std::to_string(a.bound));
    o.say("  " + head + (image.values().size() > 20 ? " ..." : ""));
  } else if (a.mode == "division-closure") {
    const nat::DivisionClosureResult r = nat::division_closure_check(q, a.bound);
    const auto listed = nat::division_counterexamples(q, a.bound, 10);
    json list = json::array();
    for (const auto& c : listed) {
      if (!nat::confirms_counterexample(q, c)) throw Unverified("counterexample " + triple(c));
      list.push_back(nat::counterexample_json(c));
    }
    o.results["division_closure"] = nat::division_json(r);
    o.results["counterexamples"] = list;
    if (r.closed()) {
      o.say(ring + ": norm image closed under division up to " + std::to_string(a.bound));
    } else {
      o.raise(kCheckFailed);
      o.say(ring + ": least counterexample (divisor, multiple, quotient) = " +
            triple(*r.counterexample));
      std::string rest;
      for (const auto& c : listed) rest += " " + triple(c);
      o.say("  first " + std::to_string(listed.size()) + ":" + rest);
    }
  } else if (a.mode == "s-wire") {
    const nat::SGenReport r = nat::s_wire_check(q, a.prime_bound, a.search_bound);
    for (const auto& v : r.primes)
      if (!nat::confirms_prime_verdict(q, v)) throw Unverified("verdict for p=" + std::to_string(v.p));
    o.results["s_wire"] = nat::sgen_json(r);
    const std::size_t open = r.count(nat::PrimeStatus::unresolved);
    if (open != 0) o.raise(kCheckFailed);
    o.say(ring + ": primes up to " + std::to_string(a.prime_bound) + ": " +
          std::to_string(r.count(nat::PrimeStatus::inert)) + " inert, " +
          std::to_string(r.count(nat::PrimeStatus::norm)) + " norms, " +
          std::to_string(r.count(nat::PrimeStatus::gcd_generated)) + " gcd-generated, " +
          std::to_string(open) + " unresolved");
    for (const auto& v : r.primes)
      if (v.gcd_witness)
        o.say("  " + std::to_string(v.p) + " = gcd(" + std::to_string(v.gcd_witness->first) +
              ", " + std::to_string(v.gcd_witness->second) + ")");
  } else {  // verdict
    const nat::MWireResult r = nat::m_wire_verdict(q, a.bound);
    if (r.counterexample && !nat::confirms_counterexample(q, *r.counterexample))
      throw Unverified("counterexample " + triple(*r.counterexample));
    o.results["m_wire"] = nat::mwire_json(r);
    if (r.verdict == nat::MWireVerdict::not_m_wire) o.raise(kCheckFailed);
    o.say(ring + ": " + nat::to_string(r.verdict) + " (bound " + std::to_string(a.bound) + ")" +
          (r.counterexample ? " counterexample " + triple(*r.counterexample) : ""));
  }
  return o;
}

int emit(const std::string& format, const std::vector<std::string>& argv, const Outcome& o,
         double ms, const std::string& error) {
  if (format == "json") {
    json report = {{"tool", "liftlat"},
                   {"version", kVersion},
                   {"command", argv},
                   {"passed", o.code == kPass},
                   {"exit_code", o.code},
                   {"results", error.empty() ? o.results : json(nullptr)},
                   {"timing_ms", ms}};
    if (!error.empty()) report["error"] = error;
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& line : o.text) std::cout << line << "\n";
    if (!error.empty()) std::cerr << "liftlat: " << error << "\n";
  }
  return o.code;
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::string> args(argv, argv + argc);

  CLI::App app{"Finite multiplicative lattices, wires and their lifted ideal systems"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string path;
  auto* check = app.add_subcommand("check-lattice", "Verify the multiplicative lattice axioms");
  check->add_option("path", path, "Lattice JSON file")->required();

  std::string wire;
  bool all_wires = false, m_only = false;
  auto* lift_cmd = app.add_subcommand("lift", "Lift wires to weak ideal systems");
  lift_cmd->add_option("path", path, "Lattice JSON file")->required();
  auto* w_opt = lift_cmd->add_option("--wire", wire, "Comma-separated element names");
  auto* a_opt = lift_cmd->add_flag("--all-wires", all_wires, "Every wire (default)");
  auto* m_opt = lift_cmd->add_flag("--m-wires-only", m_only, "Only wires satisfying (M)");
  w_opt->excludes(a_opt)->excludes(m_opt);
  a_opt->excludes(m_opt);

  std::size_t max_n = 4, limit = kUnlimited;
  auto* corpus = app.add_subcommand("corpus", "Sweep all small lattices through the theorem checks");
  corpus->add_option("--max-n", max_n, "Largest carrier size")->check(CLI::Range(1, 6));
  corpus->add_option("--limit", limit, "Lattices per size");

  QuadArgs qa;
  auto* quad = app.add_subcommand("quad", "Norm experiments in Z[sqrt d]");
  quad->add_option("--d", qa.d, "Negative squarefree d, 2 or 3 mod 4")->required();
  quad->add_option("--bound", qa.bound, "Norm bound for norms, division-closure, verdict");
  quad->add_option("--prime-bound", qa.prime_bound, "Largest prime for s-wire");
  quad->add_option("--search-bound", qa.search_bound, "Norm bound for gcd witnesses");
  quad->add_option("mode", qa.mode, "norms | division-closure | s-wire | verdict")
      ->required()
      ->check(CLI::IsMember({"norms", "division-closure", "s-wire", "verdict"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  Outcome o;
  std::string error;
  try {
    if (*check) o = cmd_check_lattice(path);
    else if (*lift_cmd) o = cmd_lift(path, wire, m_only);
    else if (*corpus) o = cmd_corpus(max_n, limit);
    else o = cmd_quad(qa);
  } catch (const LoadError& e) {
    o.code = kUsage;
    error = e.what();
  } catch (const PreconditionError& e) {
    o.code = kUsage;
    error = e.what();
  } catch (const CLI::ValidationError& e) {
    o.code = kUsage;
    error = e.what();
  } catch (const OracleViolation& e) {
    o.code = kOracle;
    error = std::string("oracle violation: ") + e.what();
  } catch (const Unverified& e) {
    o.code = kOracle;
    error = std::string("witness failed re-verification: ") + e.what();
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return emit(format, args, o, ms, error);
}
