#pragma once

#include "tmne/deformation.hpp"
#include "tmne/solver.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>

namespace tmne {

using Json = nlohmann::ordered_json;

Json poly_json(const UniPoly& p);
Json resolution_json(const GeometricResolution& R);
// decimals < 0 leaves the decimal rendering out.
Json equilibria_json(const TMNEReport& rep, int decimals);
Json evidence_json(const TMNEReport& rep);
Json certificate_json(const MaxCertificate& c);
Json deformation_json(const DeformationTrace& t);

// {"shape", "delta", "P", "W", "count", "equilibria", ["certificate"], "seed"}
Json solve_report(const Game& game, const GeometricResolution& R, const TMNEReport& rep,
                  const std::optional<MaxCertificate>& cert, std::uint64_t seed, int decimals);

}  // namespace tmne
