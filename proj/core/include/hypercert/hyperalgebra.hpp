#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypercert/field.hpp"
#include "hypercert/matrix.hpp"
#include "hypercert/root_system.hpp"

namespace hypercert {

/// One term of a product of ordered Heisenberg monomials
/// X_{alpha,a} X_{gamma,c} X_{beta,b}, with its integer coefficient mod p.
struct HeisenbergTerm {
  std::array<std::uint64_t, 3> exps;
  std::uint32_t coeff;
};

/// Product of two ordered monomials in the untruncated divided-power algebra
/// of the A2 unipotent radical, using
///   X_{beta,n} X_{alpha,m} = sum_k eps^k X_{alpha,m-k} X_{gamma,k} X_{beta,n-k}
/// with X_gamma central. Terms with zero coefficient mod p are dropped.
std::vector<HeisenbergTerm> heisenberg_product(const std::array<std::uint64_t, 3>& u,
                                               const std::array<std::uint64_t, 3>& v,
                                               std::uint32_t p, int eps);

struct SparseTerm {
  std::uint32_t index;
  elem_t coeff;
};
using SparseVec = std::vector<SparseTerm>;

/// Dist(U_r) for the A1 line or the A2 unipotent radical: the span of the
/// ordered monomials prod_j X_{root_j, n_j} with 0 <= n_j < q, together with
/// dense structure constants.
class TruncatedHyperalgebra {
public:
  const RootSystemTag& tag() const { return tag_; }
  const FieldPtr& field() const { return field_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t r() const { return r_; }
  std::uint32_t q() const { return q_; }
  int epsilon() const { return eps_; }
  std::size_t dim() const { return dim_; }
  std::size_t num_roots() const { return tag_.num_roots(); }

  std::vector<std::uint32_t> exponents(std::size_t index) const;
  std::size_t index_of(std::span<const std::uint32_t> exps) const;
  /// Index of the pure power X_{root,n}.
  std::size_t root_power_index(std::size_t root, std::uint32_t n) const;
  std::size_t identity_index() const { return 0; }
  /// The monomial with every exponent q-1.
  std::size_t top_index() const { return dim_ - 1; }
  Weight weight(std::size_t index) const;
  /// X_{root, p^i} for every root and 0 <= i < r; these generate the algebra.
  std::vector<std::size_t> generator_indices() const;

  const SparseVec& product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
  std::vector<elem_t> multiply(std::span<const elem_t> a, std::span<const elem_t> b) const;
  std::vector<elem_t> basis_vector(std::size_t index) const;

private:
  friend TruncatedHyperalgebra line_algebra(std::uint32_t, std::uint32_t, const FieldPtr&);
  friend TruncatedHyperalgebra heisenberg_algebra(std::uint32_t, std::uint32_t, const FieldPtr&, int);

  TruncatedHyperalgebra(RootSystemTag tag, std::uint32_t p, std::uint32_t r, FieldPtr field, int eps);

  RootSystemTag tag_;
  FieldPtr field_;
  std::uint32_t p_, r_, q_;
  int eps_;
  std::size_t dim_;
  std::vector<SparseVec> table_;
};

/// Dist(U_{alpha,r}): basis X_0..X_{q-1} with X_m X_n = C(m+n,n) X_{m+n}.
TruncatedHyperalgebra line_algebra(std::uint32_t p, std::uint32_t r, const FieldPtr& field);

/// Dist(U_r) for the A2 unipotent radical with commutator sign eps. Runs the
/// associativity self-test and throws ConstructionError naming the first
/// failing triple.
TruncatedHyperalgebra heisenberg_algebra(std::uint32_t p, std::uint32_t r, const FieldPtr& field, int eps = 1);

/// Left multiplication operators, one per basis monomial.
std::vector<Matrix> regular_representation(const TruncatedHyperalgebra& a);
std::vector<Matrix> right_regular_representation(const TruncatedHyperalgebra& a);

struct SocleWitness {
  std::vector<elem_t> vector;
  bool verified = false;
};

/// Two-sided annihilator of the augmentation ideal; throws ConstructionError
/// unless it is one-dimensional.
SocleWitness socle(const TruncatedHyperalgebra& a);

struct AssociativityReport {
  bool ok = true;
  bool exhaustive = false;
  std::size_t triples_checked = 0;
  std::optional<std::array<std::size_t, 3>> counterexample;
};

/// Exhaustive over all basis triples when dim <= exhaustive_limit, else
/// `samples` random triples drawn with the given seed.
AssociativityReport check_associativity(const TruncatedHyperalgebra& a, std::uint64_t seed = 1,
                                        std::size_t samples = 10000, std::size_t exhaustive_limit = 64);

struct TruncationReport {
  std::size_t overflowing_pairs = 0;  // pairs whose naive product leaves the index range
  std::size_t violations = 0;         // of those, ones with a nonzero coefficient
};

/// Recomputes every basis product without truncation and checks that all
/// terms outside 0 <= n < q carry a zero coefficient.
TruncationReport check_truncation(const TruncatedHyperalgebra& a);

/// Smallest k with (augmentation ideal)^k = 0.
std::size_t augmentation_nilpotency_index(const TruncatedHyperalgebra& a);

}  // namespace hypercert
