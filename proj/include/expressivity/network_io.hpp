#pragma once

#include <filesystem>
#include <string>

#include "expressivity/network.hpp"

namespace expressivity {

/// JSON document
///   {"input_dim": n0, "widths": [n1, ..., nL],
///    "activation": {"kind": "relu"} |
///                  {"kind": "generic", "breakpoints": [...], "slopes": [...],
///                   "value_at_first_breakpoint": v},
///    "weights": [[[w_11, ...], ...], ...],   // per layer, one row per unit
///    "biases": [[b_1, ...], ...]}
/// Numbers are written with 17 significant digits so a save/load round trip
/// is bit-exact.
std::string network_to_json(const Network& net);
Network network_from_json(const std::string& text);

void save_network(const Network& net, const std::filesystem::path& path);
Network load_network(const std::filesystem::path& path);

}  // namespace expressivity
