#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypercert/field.hpp"
#include "hypercert/hyperalgebra.hpp"
#include "hypercert/matrix.hpp"
#include "hypercert/rational_module.hpp"

namespace hypercert {

/// An element of U(k) in normal form: x_alpha(a) for A1, or
/// x_alpha(a) x_gamma(c) x_beta(b) for A2 (params ordered a, c, b).
struct GroupElement {
  RootKind kind = RootKind::A1;
  std::vector<FieldElement> params;

  friend bool operator==(const GroupElement& g, const GroupElement& h) {
    return g.kind == h.kind && g.params == h.params;
  }
};

/// Multiplication in normal form. For A2,
///   x_beta(b) x_alpha(a) = x_alpha(a) x_gamma(sign * a b) x_beta(b),
/// where sign is the X_gamma coefficient of X_beta X_alpha in the hyperalgebra.
class UnipotentGroupLaw {
public:
  UnipotentGroupLaw(RootSystemTag tag, int commutator_sign);
  /// Reads the commutator sign from the algebra's structure constants.
  static UnipotentGroupLaw from_algebra(const TruncatedHyperalgebra& a);

  const RootSystemTag& tag() const { return tag_; }
  int commutator_sign() const { return sign_; }

  GroupElement identity(const FieldPtr& field) const;
  GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;

private:
  void require(const GroupElement& g) const;

  RootSystemTag tag_;
  int sign_;
};

/// U(F_q) enumerated inside a field k containing F_q: identity first, then
/// parameters in lexicographic order of subfield position.
class GroupTable {
public:
  GroupTable(UnipotentGroupLaw law, FieldPtr field, std::uint32_t q);

  const UnipotentGroupLaw& law() const { return law_; }
  const RootSystemTag& tag() const { return law_.tag(); }
  const FieldPtr& field() const { return field_; }
  std::uint32_t q() const { return q_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_.at(i); }
  std::size_t identity_index() const { return 0; }

  std::size_t index_of(const GroupElement& g) const;
  std::size_t multiply_index(std::size_t i, std::size_t j) const;
  std::size_t inverse_index(std::size_t i) const;
  /// Order of the element as a group element.
  std::size_t element_order(std::size_t i) const;

private:
  UnipotentGroupLaw law_;
  FieldPtr field_;
  std::uint32_t q_;
  std::vector<elem_t> points_;
  std::vector<std::int64_t> position_;  // code -> index in points_, or -1
  std::vector<GroupElement> elements_;
};

/// U(F_q) for the algebra's root system, with F_q taken inside the algebra's field.
GroupTable enumerate_group(const TruncatedHyperalgebra& a);
/// A1 needs no commutator sign; A2 callers must supply one.
GroupTable enumerate_group(const RootSystemTag& tag, const FieldPtr& field, std::uint32_t q, int commutator_sign = 1);

GroupElement group_multiply(const GroupTable& g, const GroupElement& x, const GroupElement& y);

/// Product of the normal-form factors' actions, in normal-form order. The
/// parameters may lie anywhere in the module's field.
Matrix group_action_matrix(const RationalModule& m, const GroupElement& g);

/// Images of every group element, in table order.
std::vector<Matrix> group_images(const RationalModule& m, const GroupTable& g);

/// Sum over all group elements of their action.
Matrix norm_matrix(const RationalModule& m, const GroupTable& g);

struct HomomorphismReport {
  bool ok = true;
  bool exhaustive = true;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

/// rho(g) rho(h) == rho(gh); exhaustive when |G| <= exhaustive_order.
HomomorphismReport check_group_homomorphism(const RationalModule& m, const GroupTable& g, std::uint64_t seed = 1,
                                            std::size_t exhaustive_order = 81, std::size_t samples = 10000);

struct GroupAxiomReport {
  bool associative = true;
  bool identity_ok = true;
  bool inverses_ok = true;
  bool p_group = true;
  std::size_t exponent = 1;
  bool ok() const { return associative && identity_ok && inverses_ok && p_group; }
};

GroupAxiomReport check_group_axioms(const GroupTable& g);

}  // namespace hypercert
