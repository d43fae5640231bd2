#pragma once

#include <json.hpp>

#include "cographic/chain.hpp"
#include "cographic/circuits.hpp"
#include "cographic/errors.hpp"
#include "cographic/fan.hpp"
#include "cographic/graph.hpp"
#include "cographic/orientations.hpp"
#include "cographic/ring.hpp"
#include "cographic/semigroup.hpp"
#include "cographic/torus_invariants.hpp"

namespace cographic::report {

using Json = nlohmann::json;

/// {edge-id: coefficient}, zero coefficients omitted.
Json chain_json(const Graph& g, const Chain1& c);
/// {edge-id: "+" | "-"} over the domain.
Json orientation_json(const Graph& g, const Orientation& phi);
/// {"T": [edge-id...], "orientation": {...}}
Json pair_json(const Graph& g, const TotCycPair& p);
/// ["e1+", "e3-"], edges in canonical order.
Json circuit_json(const Graph& g, const OrientedCircuit& gamma);

Json graph_json(const Graph& g);
Json orientations_json(const Graph& g, const Limits& limits);
Json circuits_json(const Graph& g, const Limits& limits);
Json fan_json(const Fan& fan);
/// Per-chamber report; the ideal and multiplicities come from the ring-level
/// computations so nothing is done twice.
Json semigroup_json(const Graph& g, const AffineSemigroup& s, const BinomialIdeal& ideal,
                    const ChamberMultiplicity& multiplicity);
Json ring_json(const Graph& g, const RingReport& report, const RingPresentation& presentation);
Json invariant_check_json(const TruncatedIsoCheck& check, unsigned max_degree);

struct AnalyzeOptions {
    unsigned max_degree = 3;
    unsigned hs_horizon = 0;  ///< 0 selects dim + 6
    Limits limits;
};

/// Everything: graph summary, orientation poset, fan, ring and per-chamber semigroups.
Json analyze(const Graph& g, const AnalyzeOptions& options = {});

}  // namespace cographic::report
