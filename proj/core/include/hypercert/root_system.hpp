#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hypercert {

enum class RootKind { A1, A2Unipotent };

/// A weight of the maximal torus. A1: the single SL2 torus weight. A2:
/// coordinates in the fundamental-weight basis.
struct Weight {
  std::vector<int> coords;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight scaled(long k) const;
  bool is_zero() const;
  auto operator<=>(const Weight&) const = default;
};

/// The negative roots of the unipotent radical, in the fixed order used by
/// every monomial product: A1 = [alpha]; A2 = [alpha, gamma, beta] with
/// gamma = alpha + beta.
class RootSystemTag {
public:
  static RootSystemTag a1();
  static RootSystemTag a2_unipotent();
  static RootSystemTag from_name(std::string_view name);

  RootKind kind() const { return kind_; }
  std::string name() const;
  std::size_t num_roots() const { return labels_.size(); }
  const std::vector<std::string>& negative_roots() const { return labels_; }
  std::size_t root_index(std::string_view label) const;
  /// Weight of the negative root with the given index.
  const Weight& root_weight(std::size_t index) const { return root_weights_[index]; }
  std::size_t weight_rank() const { return kind_ == RootKind::A1 ? 1 : 2; }
  Weight zero_weight() const { return Weight{std::vector<int>(weight_rank(), 0)}; }

  /// lambda >= mu iff lambda - mu is a nonnegative integer combination of
  /// positive roots.
  bool weight_geq(const Weight& lambda, const Weight& mu) const;
  bool weight_greater(const Weight& lambda, const Weight& mu) const {
    return lambda != mu && weight_geq(lambda, mu);
  }

  friend bool operator==(const RootSystemTag& a, const RootSystemTag& b) { return a.kind_ == b.kind_; }

private:
  RootKind kind_ = RootKind::A1;
  std::vector<std::string> labels_;
  std::vector<Weight> root_weights_;
};

}  // namespace hypercert
