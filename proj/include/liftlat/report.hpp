#pragma once

#include "json.hpp"
#include "liftlat/closure.hpp"
#include "liftlat/lattice.hpp"
#include "liftlat/lifting.hpp"
#include "liftlat/nat_quadratic.hpp"

namespace liftlat {

// JSON renderings shared by the CLI and the tests. Element references are
// emitted by name, subsets as sorted name arrays.

nlohmann::json subset_json(const FiniteLattice& lattice, Subset s);
nlohmann::json verdict_json(const Verdict& v);
nlohmann::json flags_json(const ElementFlags& f);
nlohmann::json wire_json(const FiniteLattice& lattice, const WireReport& w);
nlohmann::json lift_json(const FiniteLattice& lattice, const LiftResult& r);
nlohmann::json findings_json(const std::vector<Finding>& f);
nlohmann::json corollary_json(const CorollaryReport& r);
nlohmann::json proposition_json(const FiniteLattice& lattice, const PropositionReport& r);
nlohmann::json embedding_json(const FinitaryEmbeddingReport& r);

namespace nat {
nlohmann::json counterexample_json(const DivisionCounterexample& c);
nlohmann::json division_json(const DivisionClosureResult& r);
nlohmann::json sgen_json(const SGenReport& r);
nlohmann::json mwire_json(const MWireResult& r);
}  // namespace nat

}  // namespace liftlat
