#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypercert/hyperalgebra.hpp"
#include "hypercert/matrix.hpp"
#include "hypercert/rational_module.hpp"
#include "hypercert/unipotent_group.hpp"

namespace hypercert {

enum class AlgebraKind { GroupAlgebra, Hyperalgebra, RestrictedLie };
enum class Verdict { Free, NotProjective };

std::string to_string(AlgebraKind k);
std::string to_string(Verdict v);

/// Ordered key/value evidence; order is insertion order so reports are stable.
using Evidence = std::vector<std::pair<std::string, std::string>>;

struct ProjectivityReport {
  std::string subject;
  AlgebraKind algebra = AlgebraKind::Hyperalgebra;
  Verdict verdict = Verdict::NotProjective;
  std::size_t module_dim = 0;
  std::size_t algebra_dim = 0;
  /// s = dim M / dim algebra when that divides, otherwise 0.
  std::size_t required_rank = 0;
  std::size_t criterion_rank = 0;
  std::string criterion;
  Evidence evidence;

  bool free() const { return verdict == Verdict::Free; }
};

// ---- span lemma ---------------------------------------------------------

struct SpanLemmaReport {
  bool spans_equal = false;
  std::size_t y_span_dim = 0;
  std::size_t x_span_dim = 0;
  /// True when the y-operators are linearly independent, so the change of
  /// basis is unique and was solved for outright.
  bool unique_change_of_basis = false;
  bool vandermonde_ok = false;
  /// Field codes of the F_q points a_j in the order used for rows of V.
  std::vector<elem_t> points;
  std::string witness;

  bool ok() const { return spans_equal && vandermonde_ok; }
};

/// The q-by-q matrix V with V[j][i] = a_j^i (0^0 = 1) over the F_q points.
Matrix vandermonde(const FieldPtr& field, std::uint32_t q);

/// Compares span{y_{root,i}} with span{x_root(a) : a in F_q} inside End(M)
/// and checks x(a_j) = sum_i V[j][i] y_i. When the y_i are independent the
/// coefficients are solved from the data and compared with V; otherwise V is
/// checked to be one of the solutions.
SpanLemmaReport span_equality_lemma(const RationalModule& m, std::size_t root = 0);

// ---- freeness tests -----------------------------------------------------

/// Checks rho(g) rho(X) = rho(gX) for every generator g and monomial X, where
/// rho sends a monomial to the product of the module's root operators.
/// Returns a description of the first mismatch.
std::optional<std::string> algebra_action_mismatch(const RationalModule& m, const TruncatedHyperalgebra& a);

/// Socle-rank criterion over the local Frobenius algebra Dist(U_r).
ProjectivityReport hyperalgebra_free_test(const RationalModule& m, const TruncatedHyperalgebra& a);

/// Norm-rank criterion over the p-group algebra kU(F_q). The evidence also
/// records that U(F_q) is a Sylow p-subgroup of G(F_q), so the verdict
/// transfers to G(F_q).
ProjectivityReport norm_rank_test(const RationalModule& m, const GroupTable& g);

struct JordanReport {
  bool free = false;
  /// (block size, multiplicity), ascending by size.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  /// rank Z^k for k = 0..p.
  std::vector<std::size_t> ranks;
  bool cross_check_ok = false;
};

/// Jordan type of a nilpotent Z with Z^p = 0; free over k[t]/(t^p) iff every
/// block has size p. Throws std::invalid_argument if Z^p != 0.
JordanReport jordan_oracle(const Matrix& z, std::uint32_t p);

// ---- weight bases and certificates -------------------------------------

struct WeightBasisResult {
  bool ok = false;
  std::vector<std::size_t> generators;
  /// Span dimension after each round.
  std::vector<std::size_t> span_dims;
  std::string failure;
};

/// Greedy choice of weight vectors of maximal weight, lowest index first,
/// outside the current Dist(U_r)-span. Throws std::invalid_argument for a
/// module without weight labels.
WeightBasisResult extract_weight_basis(const RationalModule& m, const TruncatedHyperalgebra& a);

/// All monomial images X^n v, in algebra index order.
std::vector<std::vector<elem_t>> monomial_orbit(const RationalModule& m, const TruncatedHyperalgebra& a,
                                                std::span<const elem_t> v);

/// A linear extension of the weight order on M's basis: minimal elements
/// removed first, lowest index first. Returns the distinct weights in order.
std::vector<Weight> ascending_weights(const RationalModule& m);

struct BasisCertificate {
  std::vector<std::size_t> generators;
  std::size_t group_order = 0;
  /// Row j expresses basis vector e_j of M; column i*|G| + g holds the
  /// coefficient of g.m_i.
  Matrix expressions;
  /// Weights in the order they were certified.
  std::vector<Weight> weight_order;
  /// Number of spanning vectors X^n m_i handled at each weight.
  std::vector<std::size_t> vectors_per_weight;
};

/// Converts a Dist(U_r) weight basis into an expression of every basis
/// vector of M over {g.m_i}, by induction along ascending weights. Throws
/// ConstructionError naming the offending vector when a step fails.
BasisCertificate basis_conversion(const RationalModule& m, const TruncatedHyperalgebra& a, const GroupTable& g,
                                  const std::vector<std::size_t>& generators);

struct CertificateCheck {
  bool ok = true;
  std::optional<std::size_t> failing_row;
};

/// Re-evaluates every row of the certificate against the group action.
CertificateCheck evaluate_certificate(const RationalModule& m, const GroupTable& g, const BasisCertificate& cert);

/// rank of {g.m_i} equals dim M. Throws std::invalid_argument unless
/// s * |G| == dim M.
bool direct_group_basis_check(const RationalModule& m, const std::vector<std::size_t>& generators,
                              const GroupTable& g);

}  // namespace hypercert
