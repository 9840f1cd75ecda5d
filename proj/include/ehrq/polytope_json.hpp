#pragma once

#include "ehrq/lattice.hpp"

#include <json.hpp>

namespace ehrq {

// Accepts either {"family": "simplex"|"cross"|"cube", "dim": d} or
// {"dim": d, "inequalities": [{"coeffs": [...], "rhs": n}, ...]}.
LatticePolytope polytope_from_json(const nlohmann::json& j);

nlohmann::json polytope_to_json(const LatticePolytope& p);

}  // namespace ehrq
