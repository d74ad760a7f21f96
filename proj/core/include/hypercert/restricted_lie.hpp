#pragma once

#include <cstdint>

#include "hypercert/matrix.hpp"
#include "hypercert/projectivity.hpp"
#include "hypercert/rational_module.hpp"

namespace hypercert {

/// An element of sl2^{(+)r} supported on a single summand.
struct RestrictedSummandElement {
  std::uint32_t r = 2;
  std::uint32_t slot = 0;
  /// 2x2 traceless matrix acting on the natural module with basis (v_+, v_-).
  Matrix value;
};

/// The nilpotent root vector realized by A_{alpha,1}: it sends v_+ to v_-.
Matrix sl2_root_vector(const FieldPtr& field);
bool is_traceless_2x2(const Matrix& x);

/// Action through the projection onto the first summand. In slot 0, the
/// value [[c, 0], [b, -c]] acts as c h + b A_{alpha,1}, h acting on a weight
/// vector of weight w by w mod p. Other slots act by zero. Throws
/// std::out_of_range for a bad slot, std::invalid_argument for a non-traceless
/// value, and IncompatibleError for values outside span{h, A_{alpha,1}} or an
/// h-component on a module without weights.
Matrix first_projection_action(const RationalModule& m, const RestrictedSummandElement& xi);

struct NeverProjectiveResult {
  ProjectivityReport report;
  bool z_p_power_zero = false;  // z^[p] = 0 as a matrix power
  bool z_acts_as_zero = false;
  JordanReport jordan;
};

/// z = (0, e, 0, ..., 0): checks z^[p] = 0 and z.M = 0, then reads the
/// Jordan type of z on M. Throws std::invalid_argument for r < 2 or dim M = 0.
NeverProjectiveResult never_projective_check(const RationalModule& m, std::uint32_t r);

}  // namespace hypercert
