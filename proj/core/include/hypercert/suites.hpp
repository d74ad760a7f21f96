#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypercert/rational_module.hpp"
#include "hypercert/reports.hpp"
#include "hypercert/root_system.hpp"

namespace hypercert {

enum class Target { LemmaSpan, BorelBasis, Counterexample, Section3, AlgebraLaws, All };

std::optional<Target> parse_target(std::string_view name);
std::string to_string(Target t);

/// One (tag, p, r) point of a sweep.
struct SweepCell {
  RootSystemTag tag;
  std::uint32_t p = 2;
  std::uint32_t r = 1;
};

inline constexpr std::size_t kDefaultSizeGuard = 10000;

struct SweepConfig {
  std::vector<SweepCell> cells;
  /// Subset of natural, sym, steinberg, regular, pullback, direct_sums.
  std::vector<std::string> families;
  /// The working field is GF(p^(r * ext_degree)).
  std::uint32_t ext_degree = 1;
  ReportFormat format = ReportFormat::Table;
  std::uint64_t seed = 1;
  bool override_size_guard = false;
};

const std::vector<std::string>& all_families();

/// A1 at (2,1), (2,2), (3,1), (3,2), (5,1); A2 at (2,1), (3,1); all families.
SweepConfig default_config();

/// Builds a sweep from explicit lists. Empty p_values and r_values give the
/// default cells for the requested tags (both tags when `tags` is empty);
/// otherwise cells are the product of the lists for each tag, A1 when no tag
/// is given. Throws ConfigError on invalid input.
SweepConfig make_config(const std::vector<std::string>& tags, const std::vector<std::uint32_t>& p_values,
                        const std::vector<std::uint32_t>& r_values, const std::vector<std::string>& families);

/// Throws ConfigError when the sweep is empty, names are unknown, a value is
/// out of range, or (without the override) the largest object exceeds the
/// size guard.
void validate_config(const SweepConfig& config);

/// Dimension of the largest module or group the sweep will build.
std::size_t largest_object_dim(const SweepConfig& config);

/// Runs the suite(s) for the target. Throws ConfigError for an invalid
/// config; mathematical failures are recorded as failing checks.
Report run_verify(Target target, const SweepConfig& config);

/// Validates a user-supplied module. When it is valid, also reports its
/// verdicts over Dist(U_r) and kU(F_q) (recorded as evidence, not as failures).
Report check_module(const RationalModule& m, std::uint64_t seed = 1);

/// 0 when every check passed, 1 otherwise.
int exit_status(const Report& report);

}  // namespace hypercert
