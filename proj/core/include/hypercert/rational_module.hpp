#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hypercert/field.hpp"
#include "hypercert/hyperalgebra.hpp"
#include "hypercert/matrix.hpp"
#include "hypercert/root_system.hpp"

namespace hypercert {

/// A finite-dimensional rational U-module: a weight-labelled basis plus the
/// matrices A_{root,n} of every divided power X_{root,n}, n < N(root).
///
/// Only the construction shape is checked here; `validate` runs the algebraic
/// invariants. The operator lists are normalized so that N(root) is one past
/// the last nonzero operator but never below q.
class RationalModule {
public:
  RationalModule(FieldPtr field, RootSystemTag tag, std::uint32_t r, std::vector<Weight> weights,
                 std::vector<std::vector<Matrix>> ops, bool has_weights = true, std::string name = {});

  const FieldPtr& field() const { return field_; }
  const RootSystemTag& tag() const { return tag_; }
  std::uint32_t p() const { return field_->characteristic(); }
  std::uint32_t r() const { return r_; }
  std::uint32_t q() const { return q_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  RationalModule renamed(std::string name) const;

  /// False for modules whose torus weights were deliberately discarded
  /// (pullbacks along non-homogeneous additive polynomials).
  bool has_weights() const { return has_weights_; }
  const std::vector<Weight>& weights() const { return weights_; }

  std::size_t nilpotence_bound(std::size_t root) const { return ops_.at(root).size(); }
  std::span<const Matrix> ops(std::size_t root) const { return ops_.at(root); }
  /// A_{root,n}; the zero matrix for n >= N(root).
  Matrix op(std::size_t root, std::uint64_t n) const;

private:
  FieldPtr field_;
  RootSystemTag tag_;
  std::uint32_t r_, q_;
  std::size_t dim_;
  std::vector<Weight> weights_;
  std::vector<std::vector<Matrix>> ops_;
  bool has_weights_;
  std::string name_;
};

/// f(t) = sum_i c_i t^(p^i): an endomorphism of the additive group.
class AdditivePolynomial {
public:
  /// Keys are actual exponents; every exponent must be a power of p.
  AdditivePolynomial(FieldPtr field, std::map<std::uint64_t, elem_t> terms);

  /// t - t^q.
  static AdditivePolynomial lang_type(const FieldPtr& field, std::uint64_t q);
  static AdditivePolynomial identity(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::map<std::uint64_t, elem_t>& terms() const { return terms_; }
  std::uint64_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  FieldElement evaluate(const FieldElement& a) const;
  /// Dense coefficients of f(t)^k, lowest degree first.
  std::vector<elem_t> power_coefficients(std::uint64_t k) const;

private:
  FieldPtr field_;
  std::map<std::uint64_t, elem_t> terms_;
};

// ---- constructors -------------------------------------------------------

RationalModule trivial_module(const FieldPtr& field, const RootSystemTag& tag, std::uint32_t r);
/// The 2-dimensional SL2 module: weights [+1, -1], A_1 sends v_{+1} to v_{-1}.
RationalModule natural_sl2(const FieldPtr& field, std::uint32_t r);
/// Sym^d of the natural module: basis m_d..m_0, A_n m_j = C(j,n) m_{j-n}.
RationalModule sym_power(const FieldPtr& field, std::uint32_t r, std::uint32_t d);
/// M^[s]: A'_n = A_{n/p^s} when p^s | n, otherwise 0; weights times p^s.
RationalModule frobenius_twist(const RationalModule& m, std::uint32_t s);
/// Divided powers act through A_n(u (x) v) = sum_{i+j=n} A_i u (x) A_j v.
RationalModule tensor(const RationalModule& m, const RationalModule& n);
RationalModule direct_sum(const RationalModule& m, const RationalModule& n);
/// St_r = Sym^{p-1} (x) (Sym^{p-1})^[1] (x) ... (x) (Sym^{p-1})^[r-1].
RationalModule steinberg(const FieldPtr& field, std::uint32_t p, std::uint32_t r);

/// The left regular Dist(U_r)-module. For A2 the space also carries the
/// higher divided powers X_{root,n}, n >= q, of its rational U-structure
/// (the quotient of Dist(U) by the left ideal generated by X_{alpha,n} and
/// X_{beta,n}, n >= q); on Dist(U_r) they act by left multiplication.
/// Throws ConstructionError if the quotient is not free of rank one over
/// Dist(U_r) or if a root line fails the group law.
RationalModule regular_module(const TruncatedHyperalgebra& a);

/// Pullback of an A1 module along f: x'(a) = x(f(a)). Operators are the
/// coefficients of a^n in sum_k f(a)^k A_k (a an indeterminate). Weight
/// labels are discarded.
RationalModule pullback_additive(const RationalModule& m, const AdditivePolynomial& f);

// ---- actions ------------------------------------------------------------

/// x_root(a) = sum_{n < N} a^n A_{root,n}.
Matrix group_element_action(const RationalModule& m, std::size_t root, const FieldElement& a);
/// y_{root,0} = 1; y_{root,i} = sum over i + n(q-1) < N of A_{root, i + n(q-1)}.
Matrix y_operator(const RationalModule& m, std::size_t root, std::uint32_t i);
/// prod_j A_{root_j, e_j} in the fixed root order.
Matrix monomial_operator(const RationalModule& m, std::span<const std::uint32_t> exps);
/// prod_j y_{root_j, e_j} in the fixed root order.
Matrix y_monomial_operator(const RationalModule& m, std::span<const std::uint32_t> exps);

// ---- validation ---------------------------------------------------------

struct InvariantCheck {
  std::string invariant;
  bool passed = true;
  bool vacuous = false;
  bool exhaustive = true;
  std::size_t cases = 0;
  std::string witness;
};

struct ValidationReport {
  std::vector<InvariantCheck> checks;
  bool all_passed() const;
  const InvariantCheck& get(const std::string& invariant) const;
};

struct ValidationOptions {
  std::uint64_t seed = 1;
  /// Group law is checked on all of F_q x F_q when q <= this.
  std::uint32_t exhaustive_group_law_q = 25;
  std::size_t group_law_samples = 2000;
  /// Coherence is checked on all (m, n) pairs when N^2 <= this.
  std::size_t exhaustive_coherence_pairs = 20000;
  std::size_t coherence_samples = 10000;
};

/// Checks identity, weight shift, divided-power coherence and the group law.
ValidationReport validate(const RationalModule& m, const ValidationOptions& opts = {});

}  // namespace hypercert
