#include "hypercert/rational_module.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hypercert/combinatorics.hpp"
#include "hypercert/errors.hpp"

namespace hypercert {

// ---- RationalModule ------------------------------------------------------

RationalModule::RationalModule(FieldPtr field, RootSystemTag tag, std::uint32_t r, std::vector<Weight> weights,
                               std::vector<std::vector<Matrix>> ops, bool has_weights, std::string name)
    : field_(std::move(field)),
      tag_(std::move(tag)),
      r_(r),
      weights_(std::move(weights)),
      ops_(std::move(ops)),
      has_weights_(has_weights),
      name_(std::move(name)) {
  if (!field_) throw std::invalid_argument("module without field");
  if (r_ < 1) throw std::invalid_argument("Frobenius level r must be at least 1");
  q_ = static_cast<std::uint32_t>(int_pow(field_->characteristic(), r_));
  if (!field_->contains_subfield(q_))
    throw IncompatibleError(field_->name() + " does not contain GF(" + std::to_string(q_) + ")");
  dim_ = weights_.size();
  for (const auto& w : weights_)
    if (w.coords.size() != tag_.weight_rank()) throw std::invalid_argument("weight has wrong rank for " + tag_.name());
  if (ops_.size() != tag_.num_roots()) throw std::invalid_argument("need one operator list per negative root");
  for (auto& list : ops_) {
    for (const auto& a : list) {
      if (a.rows() != dim_ || a.cols() != dim_) throw std::invalid_argument("operator has wrong shape");
      if (a.field() != field_ && !(*a.field() == *field_)) throw IncompatibleError("operator over a different field");
    }
    while (list.size() > q_ && list.back().is_zero()) list.pop_back();
    while (list.size() < q_) list.push_back(Matrix::zero(field_, dim_, dim_));
  }
}

RationalModule RationalModule::renamed(std::string name) const {
  RationalModule out = *this;
  out.name_ = std::move(name);
  return out;
}

Matrix RationalModule::op(std::size_t root, std::uint64_t n) const {
  const auto& list = ops_.at(root);
  if (n < list.size()) return list[n];
  return Matrix::zero(field_, dim_, dim_);
}

// ---- AdditivePolynomial --------------------------------------------------

AdditivePolynomial::AdditivePolynomial(FieldPtr field, std::map<std::uint64_t, elem_t> terms)
    : field_(std::move(field)) {
  const std::uint64_t p = field_->characteristic();
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    std::uint64_t x = e;
    while (x > 1 && x % p == 0) x /= p;
    if (e == 0 || x != 1)
      throw std::invalid_argument("non-additive polynomial: exponent " + std::to_string(e) + " is not a power of " +
                                  std::to_string(p));
    terms_[e] = c;
  }
}

AdditivePolynomial AdditivePolynomial::lang_type(const FieldPtr& field, std::uint64_t q) {
  return AdditivePolynomial(field, {{1, field->one()}, {q, field->neg(field->one())}});
}

AdditivePolynomial AdditivePolynomial::identity(const FieldPtr& field) {
  return AdditivePolynomial(field, {{1, field->one()}});
}

FieldElement AdditivePolynomial::evaluate(const FieldElement& a) const {
  if (!(*a.field() == *field_)) throw IncompatibleError("evaluation point over a different field");
  elem_t acc = 0;
  for (const auto& [e, c] : terms_) acc = field_->add(acc, field_->mul(c, field_->pow(a.code(), e)));
  return {field_, acc};
}

std::vector<elem_t> AdditivePolynomial::power_coefficients(std::uint64_t k) const {
  const FieldSpec& f = *field_;
  std::vector<elem_t> acc{f.one()};
  for (std::uint64_t step = 0; step < k; ++step) {
    std::vector<elem_t> next(acc.size() + degree(), 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (!acc[i]) continue;
      for (const auto& [e, c] : terms_) next[i + e] = f.add(next[i + e], f.mul(acc[i], c));
    }
    acc = std::move(next);
  }
  return acc;
}

// ---- constructors ---------------------------------------------------------

RationalModule trivial_module(const FieldPtr& field, const RootSystemTag& tag, std::uint32_t r) {
  std::vector<std::vector<Matrix>> ops(tag.num_roots(), std::vector<Matrix>{Matrix::identity(field, 1)});
  return RationalModule(field, tag, r, {tag.zero_weight()}, std::move(ops), true, "trivial");
}

RationalModule sym_power(const FieldPtr& field, std::uint32_t r, std::uint32_t d) {
  const std::size_t dim = std::size_t{d} + 1;
  const std::uint32_t p = field->characteristic();
  std::vector<Weight> weights;
  for (std::size_t i = 0; i < dim; ++i) {
    const int j = static_cast<int>(d - i);
    weights.push_back(Weight{{2 * j - static_cast<int>(d)}});
  }
  std::vector<Matrix> ops;
  for (std::uint32_t n = 0; n <= d; ++n) {
    Matrix a(field, dim, dim);
    // column of m_j is index d - j; its image lands on m_{j-n}.
    for (std::uint32_t j = n; j <= d; ++j) a(d - j + n, d - j) = binomial_mod(j, n, p);
    ops.push_back(std::move(a));
  }
  return RationalModule(field, RootSystemTag::a1(), r, std::move(weights), {std::move(ops)}, true,
                        "Sym^" + std::to_string(d));
}

RationalModule natural_sl2(const FieldPtr& field, std::uint32_t r) { return sym_power(field, r, 1).renamed("natural"); }

RationalModule frobenius_twist(const RationalModule& m, std::uint32_t s) {
  const std::uint64_t ps = int_pow(m.p(), s);
  std::vector<Weight> weights;
  for (const auto& w : m.weights()) weights.push_back(w.scaled(static_cast<long>(ps)));
  std::vector<std::vector<Matrix>> ops;
  for (std::size_t root = 0; root < m.tag().num_roots(); ++root) {
    const std::size_t n_old = m.nilpotence_bound(root);
    std::vector<Matrix> list;
    for (std::uint64_t n = 0; n < ps * (n_old - 1) + 1; ++n)
      list.push_back(n % ps == 0 ? m.op(root, n / ps) : Matrix::zero(m.field(), m.dim(), m.dim()));
    ops.push_back(std::move(list));
  }
  return RationalModule(m.field(), m.tag(), m.r(), std::move(weights), std::move(ops), m.has_weights(),
                        m.name() + "^[" + std::to_string(s) + "]");
}

namespace {

void require_same_setting(const RationalModule& m, const RationalModule& n) {
  if (!(*m.field() == *n.field())) throw IncompatibleError("modules over different fields");
  if (!(m.tag() == n.tag())) throw IncompatibleError("modules for different root systems");
  if (m.r() != n.r()) throw IncompatibleError("modules at different Frobenius levels");
}

}  // namespace

RationalModule tensor(const RationalModule& m, const RationalModule& n) {
  require_same_setting(m, n);
  std::vector<Weight> weights;
  for (const auto& u : m.weights())
    for (const auto& v : n.weights()) weights.push_back(u + v);
  std::vector<std::vector<Matrix>> ops;
  for (std::size_t root = 0; root < m.tag().num_roots(); ++root) {
    const std::size_t nm = m.nilpotence_bound(root), nn = n.nilpotence_bound(root);
    std::vector<Matrix> list(nm + nn - 1, Matrix::zero(m.field(), m.dim() * n.dim(), m.dim() * n.dim()));
    for (std::size_t i = 0; i < nm; ++i) {
      if (m.ops(root)[i].is_zero()) continue;
      for (std::size_t j = 0; j < nn; ++j) {
        if (n.ops(root)[j].is_zero()) continue;
        list[i + j] += kron(m.ops(root)[i], n.ops(root)[j]);
      }
    }
    ops.push_back(std::move(list));
  }
  return RationalModule(m.field(), m.tag(), m.r(), std::move(weights), std::move(ops),
                        m.has_weights() && n.has_weights(), m.name() + " (x) " + n.name());
}

RationalModule direct_sum(const RationalModule& m, const RationalModule& n) {
  require_same_setting(m, n);
  std::vector<Weight> weights = m.weights();
  weights.insert(weights.end(), n.weights().begin(), n.weights().end());
  std::vector<std::vector<Matrix>> ops;
  for (std::size_t root = 0; root < m.tag().num_roots(); ++root) {
    const std::size_t count = std::max(m.nilpotence_bound(root), n.nilpotence_bound(root));
    std::vector<Matrix> list;
    for (std::size_t k = 0; k < count; ++k) list.push_back(hypercert::direct_sum(m.op(root, k), n.op(root, k)));
    ops.push_back(std::move(list));
  }
  return RationalModule(m.field(), m.tag(), m.r(), std::move(weights), std::move(ops),
                        m.has_weights() && n.has_weights(), m.name() + " + " + n.name());
}

RationalModule steinberg(const FieldPtr& field, std::uint32_t p, std::uint32_t r) {
  if (field->characteristic() != p) throw IncompatibleError("characteristic mismatch for St_r");
  const RationalModule base = sym_power(field, r, p - 1);
  RationalModule st = base;
  for (std::uint32_t i = 1; i < r; ++i) st = tensor(st, frobenius_twist(base, i));
  return st.renamed("St_" + std::to_string(r));
}

namespace {

void check_group_law_or_throw(const RationalModule& m) {
  ValidationOptions opts;
  const auto rep = validate(m, opts);
  for (const auto& c : rep.checks)
    if (c.invariant == "group_law" && !c.passed)
      throw ConstructionError("integrability self-test failed for " + m.name() + ": " + c.witness);
}

// Weight-graded piece of Dist(U) for the A2 unipotent radical: monomials
// X_{alpha,A-c} X_{gamma,c} X_{beta,B-c}, indexed by c.
struct GradedPiece {
  std::vector<std::size_t> candidate_c;       // c values of the Dist(U_r) monomials
  std::vector<std::size_t> candidate_module;  // their module basis indices
  Matrix reduce;                              // maps W_(A,B) coords to candidate coords
};

RationalModule heisenberg_regular_module(const TruncatedHyperalgebra& alg) {
  const FieldPtr& field = alg.field();
  const std::uint32_t q = alg.q(), p = alg.p();
  const int eps = alg.epsilon();
  const std::uint64_t bound = 2 * (std::uint64_t{q} - 1);
  const std::size_t side = bound + 1;

  auto piece_dim = [](std::uint64_t A, std::uint64_t B) { return static_cast<std::size_t>(std::min(A, B) + 1); };

  std::vector<GradedPiece> pieces(side * side);
  for (std::uint64_t A = 0; A <= bound; ++A) {
    for (std::uint64_t B = 0; B <= bound; ++B) {
      const std::size_t wdim = piece_dim(A, B);
      RowSpan relations(field, wdim);
      auto add_relation = [&](const std::vector<HeisenbergTerm>& terms) {
        std::vector<elem_t> v(wdim, 0);
        for (const auto& t : terms) v[t.exps[1]] = field->add(v[t.exps[1]], field->from_int(t.coeff));
        relations.insert(std::move(v));
      };
      // Left ideal generated by X_{alpha,n}, X_{beta,n} with n >= q.
      for (std::uint64_t n = q; n <= A; ++n)
        for (std::uint64_t c = 0; c <= std::min(A - n, B); ++c)
          add_relation(heisenberg_product({A - n - c, c, B - c}, {n, 0, 0}, p, eps));
      for (std::uint64_t n = q; n <= B; ++n)
        for (std::uint64_t c = 0; c <= std::min(A, B - n); ++c)
          add_relation(heisenberg_product({A - c, c, B - n - c}, {0, 0, n}, p, eps));

      GradedPiece& piece = pieces[A * side + B];
      for (std::uint64_t c = 0; c < wdim; ++c) {
        const std::uint64_t a = A - c, b = B - c;
        if (a < q && c < q && b < q) {
          piece.candidate_c.push_back(c);
          const std::uint32_t e[3] = {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(c),
                                      static_cast<std::uint32_t>(b)};
          piece.candidate_module.push_back(alg.index_of(e));
        }
      }
      const std::size_t ncand = piece.candidate_c.size();
      if (relations.rank() + ncand != wdim)
        throw ConstructionError("regular module: graded piece (" + std::to_string(A) + "," + std::to_string(B) +
                                ") has quotient dimension " + std::to_string(wdim - relations.rank()) +
                                ", expected " + std::to_string(ncand));
      // Columns: candidate unit vectors, then relation basis vectors.
      Matrix frame(field, wdim, wdim);
      for (std::size_t k = 0; k < ncand; ++k) frame(piece.candidate_c[k], k) = 1;
      const Matrix rel = relations.basis();
      for (std::size_t k = 0; k < rel.rows(); ++k)
        for (std::size_t i = 0; i < wdim; ++i) frame(i, ncand + k) = rel(k, i);
      auto inv = inverse(frame);
      if (!inv)
        throw ConstructionError("regular module: Dist(U_r) monomials are dependent modulo the relations at weight (" +
                                std::to_string(A) + "," + std::to_string(B) + ")");
      Matrix reduce(field, ncand, wdim);
      for (std::size_t k = 0; k < ncand; ++k)
        for (std::size_t i = 0; i < wdim; ++i) reduce(k, i) = (*inv)(k, i);
      piece.reduce = std::move(reduce);
    }
  }

  const std::size_t dim = alg.dim();
  std::vector<Weight> weights;
  for (std::size_t i = 0; i < dim; ++i) weights.push_back(alg.weight(i));

  // Shift of the (A,B) grading for each root: alpha (1,0), gamma (1,1), beta (0,1).
  const std::uint64_t shift[3][2] = {{1, 0}, {1, 1}, {0, 1}};
  std::vector<std::vector<Matrix>> ops(3);
  for (std::size_t root = 0; root < 3; ++root) {
    for (std::uint64_t n = 0; n <= bound; ++n) {
      Matrix a(field, dim, dim);
      for (std::size_t j = 0; j < dim; ++j) {
        const auto e = alg.exponents(j);
        const std::uint64_t A = e[0] + e[1] + n * shift[root][0], B = e[2] + e[1] + n * shift[root][1];
        if (A > bound || B > bound) continue;
        std::array<std::uint64_t, 3> x{0, 0, 0};
        x[root] = n;
        const std::size_t wdim = piece_dim(A, B);
        std::vector<elem_t> w(wdim, 0);
        for (const auto& t : heisenberg_product(x, {e[0], e[1], e[2]}, p, eps))
          w[t.exps[1]] = field->add(w[t.exps[1]], field->from_int(t.coeff));
        const GradedPiece& piece = pieces[A * side + B];
        const auto coords = piece.reduce.apply(w);
        for (std::size_t k = 0; k < coords.size(); ++k) a(piece.candidate_module[k], j) = coords[k];
      }
      ops[root].push_back(std::move(a));
    }
  }
  return RationalModule(field, alg.tag(), alg.r(), std::move(weights), std::move(ops), true, "regular");
}

}  // namespace

RationalModule regular_module(const TruncatedHyperalgebra& a) {
  RationalModule out = [&] {
    if (a.tag().kind() == RootKind::A2Unipotent) return heisenberg_regular_module(a);
    const auto left = regular_representation(a);
    std::vector<Weight> weights;
    for (std::size_t i = 0; i < a.dim(); ++i) weights.push_back(a.weight(i));
    std::vector<Matrix> list;
    for (std::uint32_t n = 0; n < a.q(); ++n) list.push_back(left[a.root_power_index(0, n)]);
    return RationalModule(a.field(), a.tag(), a.r(), std::move(weights), {std::move(list)}, true, "regular");
  }();
  check_group_law_or_throw(out);
  return out;
}

RationalModule pullback_additive(const RationalModule& m, const AdditivePolynomial& f) {
  if (m.tag().kind() != RootKind::A1) throw IncompatibleError("pullback needs a module for the A1 root subgroup");
  if (!(*f.field() == *m.field())) throw IncompatibleError("additive polynomial over a different field");
  const std::size_t n_old = m.nilpotence_bound(0);
  const std::size_t n_new = (n_old - 1) * static_cast<std::size_t>(f.degree()) + 1;
  std::vector<Matrix> list(n_new, Matrix::zero(m.field(), m.dim(), m.dim()));
  for (std::size_t k = 0; k < n_old; ++k) {
    if (m.ops(0)[k].is_zero()) continue;
    const auto coeffs = f.power_coefficients(k);
    for (std::size_t n = 0; n < coeffs.size(); ++n)
      if (coeffs[n]) list[n].add_scaled(m.ops(0)[k], coeffs[n]);
  }
  std::vector<Weight> weights(m.dim(), m.tag().zero_weight());
  return RationalModule(m.field(), m.tag(), m.r(), std::move(weights), {std::move(list)}, false,
                        "f*(" + m.name() + ")");
}

// ---- actions ---------------------------------------------------------------

Matrix group_element_action(const RationalModule& m, std::size_t root, const FieldElement& a) {
  if (!(*a.field() == *m.field())) throw IncompatibleError("group parameter over a different field");
  const auto list = m.ops(root);
  Matrix acc = list.back();
  for (std::size_t n = list.size() - 1; n-- > 0;) {
    acc = acc.scaled(a.code());
    acc += list[n];
  }
  return acc;
}

Matrix y_operator(const RationalModule& m, std::size_t root, std::uint32_t i) {
  if (i >= m.q()) throw std::out_of_range("y-operator index must lie in [0, q)");
  if (i == 0) return Matrix::identity(m.field(), m.dim());
  Matrix acc = Matrix::zero(m.field(), m.dim(), m.dim());
  const std::size_t bound = m.nilpotence_bound(root);
  for (std::size_t n = i; n < bound; n += m.q() - 1) acc += m.ops(root)[n];
  return acc;
}

Matrix monomial_operator(const RationalModule& m, std::span<const std::uint32_t> exps) {
  if (exps.size() != m.tag().num_roots()) throw std::invalid_argument("monomial has wrong number of exponents");
  Matrix acc = m.op(0, exps[0]);
  for (std::size_t j = 1; j < exps.size(); ++j) acc = acc * m.op(j, exps[j]);
  return acc;
}

Matrix y_monomial_operator(const RationalModule& m, std::span<const std::uint32_t> exps) {
  if (exps.size() != m.tag().num_roots()) throw std::invalid_argument("monomial has wrong number of exponents");
  Matrix acc = y_operator(m, 0, exps[0]);
  for (std::size_t j = 1; j < exps.size(); ++j) acc = acc * y_operator(m, j, exps[j]);
  return acc;
}

// ---- validation ------------------------------------------------------------

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.passed; });
}

const InvariantCheck& ValidationReport::get(const std::string& invariant) const {
  for (const auto& c : checks)
    if (c.invariant == invariant) return c;
  throw std::out_of_range("no invariant named " + invariant);
}

ValidationReport validate(const RationalModule& m, const ValidationOptions& opts) {
  ValidationReport rep;
  const FieldPtr& field = m.field();
  const auto& roots = m.tag().negative_roots();

  {
    InvariantCheck c;
    c.invariant = "identity";
    for (std::size_t root = 0; root < roots.size() && c.passed; ++root) {
      ++c.cases;
      if (!m.ops(root)[0].is_identity()) {
        c.passed = false;
        const Matrix d = m.ops(root)[0] - Matrix::identity(field, m.dim());
        for (std::size_t i = 0; i < m.dim() && c.witness.empty(); ++i)
          for (std::size_t j = 0; j < m.dim(); ++j)
            if (d(i, j)) {
              std::ostringstream os;
              os << "A_{" << roots[root] << ",0} differs from I at (" << i << "," << j << ")";
              c.witness = os.str();
              break;
            }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {
    InvariantCheck c;
    c.invariant = "weight_shift";
    if (!m.has_weights()) {
      c.vacuous = true;
    } else {
      for (std::size_t root = 0; root < roots.size() && c.passed; ++root) {
        for (std::size_t n = 0; n < m.nilpotence_bound(root) && c.passed; ++n) {
          ++c.cases;
          const Matrix& a = m.ops(root)[n];
          const Weight step = m.tag().root_weight(root).scaled(static_cast<long>(n));
          for (std::size_t i = 0; i < m.dim() && c.passed; ++i)
            for (std::size_t j = 0; j < m.dim(); ++j)
              if (a(i, j) && m.weights()[i] != m.weights()[j] + step) {
                c.passed = false;
                std::ostringstream os;
                os << "A_{" << roots[root] << "," << n << "} maps basis " << j << " into basis " << i
                   << " across a forbidden weight gap";
                c.witness = os.str();
                break;
              }
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {
    InvariantCheck c;
    c.invariant = "divided_power_coherence";
    std::mt19937_64 rng(opts.seed);
    for (std::size_t root = 0; root < roots.size() && c.passed; ++root) {
      const std::size_t bound = m.nilpotence_bound(root);
      const auto ops = m.ops(root);
      auto check_pair = [&](std::size_t i, std::size_t j) {
        ++c.cases;
        const Matrix lhs = ops[i] * ops[j];
        const std::uint32_t coeff = divided_coeff(i, j, m.p());
        const bool ok = (i + j < bound) ? lhs == ops[i + j].scaled(field->from_int(coeff)) : lhs.is_zero();
        if (!ok) {
          c.passed = false;
          std::ostringstream os;
          os << "A_{" << roots[root] << "," << i << "} * A_{" << roots[root] << "," << j << "} != C(" << i + j << ","
             << j << ") A_{" << roots[root] << "," << i + j << "}";
          c.witness = os.str();
        }
        return ok;
      };
      if (bound * bound <= opts.exhaustive_coherence_pairs) {
        for (std::size_t i = 0; i < bound && c.passed; ++i)
          for (std::size_t j = 0; j < bound && check_pair(i, j); ++j) {
          }
      } else {
        c.exhaustive = false;
        std::uniform_int_distribution<std::size_t> pick(0, bound - 1);
        for (std::size_t s = 0; s < opts.coherence_samples && check_pair(pick(rng), pick(rng)); ++s) {
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  {
    InvariantCheck c;
    c.invariant = "group_law";
    const auto points = field->subfield_elements(m.q());
    std::mt19937_64 rng(opts.seed + 1);
    for (std::size_t root = 0; root < roots.size() && c.passed; ++root) {
      std::vector<Matrix> x;
      for (auto a : points) x.push_back(group_element_action(m, root, FieldElement(field, a)));
      // Index of a+b among the points; points are the subfield in code order.
      auto index_of = [&](elem_t v) {
        return static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), v) - points.begin());
      };
      auto check_pair = [&](std::size_t i, std::size_t j) {
        ++c.cases;
        const std::size_t k = index_of(field->add(points[i], points[j]));
        if (x[i] * x[j] == x[k]) return true;
        c.passed = false;
        std::ostringstream os;
        os << "x_" << roots[root] << "(a) x_" << roots[root] << "(b) != x_" << roots[root] << "(a+b) for (a,b) = ("
           << points[i] << "," << points[j] << ")";
        c.witness = os.str();
        return false;
      };
      if (m.q() <= opts.exhaustive_group_law_q) {
        for (std::size_t i = 0; i < points.size() && c.passed; ++i)
          for (std::size_t j = 0; j < points.size() && check_pair(i, j); ++j) {
          }
      } else {
        c.exhaustive = false;
        std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
        for (std::size_t s = 0; s < opts.group_law_samples && check_pair(pick(rng), pick(rng)); ++s) {
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace hypercert
