#pragma once

#include <string>

#include "pmaps/boltzmann.hpp"
#include "pmaps/degree_sequence.hpp"
#include "pmaps/stats.hpp"

namespace pmaps {

// "2kappa:K:n" -> the 2K-angulation degree sequence with n faces.
DegreeSequence parse_degree_preset(const std::string& preset);
// "2kappa:K" -> reference law of the 2K-angulation family.
ReferenceLaw preset_reference_law(const std::string& preset);
// "all-ones" | "quad-critical" (q_2 = 1/12).
WeightSequence parse_weight_preset(const std::string& preset);

}  // namespace pmaps
