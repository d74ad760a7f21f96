#pragma once

#include <string>

#include "hypercert/rational_module.hpp"

namespace hypercert {

/// Stable JSON text for a module (schema "hypercert.module/1", see
/// docs/formats.md). Field elements are written as their integer codes.
std::string serialize_module(const RationalModule& m);

/// Inverse of serialize_module; rebuilds the field from (p, m) and checks
/// that the stored modulus matches.
RationalModule parse_module(const std::string& text);

}  // namespace hypercert
