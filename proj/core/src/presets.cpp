#include "pmaps/presets.hpp"

#include <stdexcept>

namespace pmaps {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

DegreeSequence parse_degree_preset(const std::string& preset) {
  const auto parts = split(preset, ':');
  if (parts.size() == 3 && parts[0] == "2kappa")
    return DegreeSequence::angulation(std::stoi(parts[1]), std::stoll(parts[2]));
  throw std::invalid_argument("unknown degree preset '" + preset + "' (want 2kappa:K:n)");
}

ReferenceLaw preset_reference_law(const std::string& preset) {
  const auto parts = split(preset, ':');
  if ((parts.size() == 2 || parts.size() == 3) && parts[0] == "2kappa")
    return angulation_law(std::stoi(parts[1]));
  throw std::invalid_argument("unknown reference preset '" + preset + "'");
}

WeightSequence parse_weight_preset(const std::string& preset) {
  if (preset == "all-ones") return WeightSequence::all_ones();
  if (preset == "quad-critical") return WeightSequence::from_table({{2, 1.0 / 12.0}});
  throw std::invalid_argument("unknown weight preset '" + preset + "'");
}

}  // namespace pmaps
