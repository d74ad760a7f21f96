#include "hypercert/projectivity.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hypercert/errors.hpp"

namespace hypercert {

std::string to_string(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::GroupAlgebra: return "group_algebra_U(Fq)";
    case AlgebraKind::Hyperalgebra: return "Dist(U_r)";
    case AlgebraKind::RestrictedLie: return "u(z)";
  }
  return "?";
}

std::string to_string(Verdict v) { return v == Verdict::Free ? "free" : "not projective"; }

namespace {

using Vec = std::vector<elem_t>;

void axpy(const FieldSpec& f, Vec& y, elem_t c, std::span<const elem_t> x) {
  if (c == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] = f.add(y[i], f.mul(c, x[i]));
}

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](elem_t x) { return x == 0; });
}

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.coords.size(); ++i) os << (i ? "," : "") << w.coords[i];
  os << ')';
  return os.str();
}

std::string exps_str(const std::vector<std::uint32_t>& e) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ']';
  return os.str();
}

void require_compatible(const RationalModule& m, const TruncatedHyperalgebra& a) {
  if (!(m.tag() == a.tag())) throw IncompatibleError("module and algebra use different root systems");
  if (!(*m.field() == *a.field())) throw IncompatibleError("module and algebra are over different fields");
  if (m.q() != a.q()) throw IncompatibleError("module and algebra at different Frobenius levels");
}

std::vector<Matrix> monomial_images(const RationalModule& m, const TruncatedHyperalgebra& a) {
  std::vector<Matrix> out;
  out.reserve(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    const auto e = a.exponents(k);
    out.push_back(monomial_operator(m, e));
  }
  return out;
}

Weight monomial_weight(const RootSystemTag& tag, const std::vector<std::uint32_t>& exps) {
  Weight w = tag.zero_weight();
  for (std::size_t j = 0; j < exps.size(); ++j) w = w + tag.root_weight(j).scaled(exps[j]);
  return w;
}

// Rows of a growing echelon basis, each carrying its expression over the
// group-translate columns.
class TrackedSpan {
public:
  TrackedSpan(FieldPtr field, std::size_t expr_len) : field_(std::move(field)), expr_len_(expr_len) {}

  std::size_t size() const { return rows_.size(); }

  // Reduces v in place and returns the expression of (original v - residual).
  Vec reduce(Vec& v) const {
    const FieldSpec& f = *field_;
    Vec acc(expr_len_, 0);
    for (const auto& row : rows_) {
      const elem_t c = v[row.pivot];
      if (c == 0) continue;
      axpy(f, v, f.neg(c), row.vec);
      axpy(f, acc, c, row.expr);
    }
    return acc;
  }

  // Adds v with known expression; false if v is already in the span.
  bool insert(Vec v, Vec expr) {
    const FieldSpec& f = *field_;
    const Vec acc = reduce(v);
    axpy(f, expr, f.neg(f.one()), acc);
    const auto it = std::find_if(v.begin(), v.end(), [](elem_t x) { return x != 0; });
    if (it == v.end()) return false;
    const auto pivot = static_cast<std::size_t>(it - v.begin());
    const elem_t s = f.inv(v[pivot]);
    for (auto& x : v) x = f.mul(x, s);
    for (auto& x : expr) x = f.mul(x, s);
    rows_.push_back({pivot, std::move(v), std::move(expr)});
    return true;
  }

private:
  struct Row {
    std::size_t pivot;
    Vec vec;
    Vec expr;
  };
  FieldPtr field_;
  std::size_t expr_len_;
  std::vector<Row> rows_;
};

}  // namespace

// ---- span lemma ---------------------------------------------------------

Matrix vandermonde(const FieldPtr& field, std::uint32_t q) {
  const auto pts = field->subfield_elements(q);
  Matrix v(field, q, q);
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t i = 0; i < q; ++i) v(j, i) = i == 0 ? field->one() : field->pow(pts[j], i);
  return v;
}

SpanLemmaReport span_equality_lemma(const RationalModule& m, std::size_t root) {
  if (root >= m.tag().num_roots()) throw std::out_of_range("root index out of range");
  SpanLemmaReport rep;
  const std::uint32_t q = m.q();
  rep.points = m.field()->subfield_elements(q);
  std::vector<Matrix> ys, xs;
  for (std::uint32_t i = 0; i < q; ++i) ys.push_back(y_operator(m, root, i));
  for (auto a : rep.points) xs.push_back(group_element_action(m, root, FieldElement(m.field(), a)));
  const Matrix fy = flatten_rows(ys), fx = flatten_rows(xs);
  rep.y_span_dim = rank(fy);
  rep.x_span_dim = rank(fx);
  rep.spans_equal = rowspace_equal(fy, fx);
  const Matrix v = vandermonde(m.field(), q);
  rep.unique_change_of_basis = rep.y_span_dim == q;
  if (rep.unique_change_of_basis) {
    // C fy = fx  <=>  fy^T C^T = fx^T
    const auto ct = solve_many(fy.transpose(), fx.transpose());
    rep.vandermonde_ok = ct && ct->transpose() == v;
    if (!ct) rep.witness = "x-operators are not in the span of the y-operators";
    else if (!rep.vandermonde_ok) rep.witness = "solved change of basis differs from the Vandermonde matrix";
  } else {
    rep.vandermonde_ok = v * fy == fx;
    if (!rep.vandermonde_ok) rep.witness = "x(a_j) != sum_i a_j^i y_i for some a_j";
  }
  if (!rep.spans_equal && rep.witness.empty())
    rep.witness = "rank y-span " + std::to_string(rep.y_span_dim) + ", rank x-span " + std::to_string(rep.x_span_dim);
  return rep;
}

// ---- freeness tests -----------------------------------------------------

std::optional<std::string> algebra_action_mismatch(const RationalModule& m, const TruncatedHyperalgebra& a) {
  require_compatible(m, a);
  const auto mono = monomial_images(m, a);
  for (const std::size_t g : a.generator_indices()) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      Matrix rhs = Matrix::zero(m.field(), m.dim(), m.dim());
      for (const auto& t : a.product(g, k)) rhs.add_scaled(mono[t.index], t.coeff);
      if (!(mono[g] * mono[k] == rhs))
        return "generator " + exps_str(a.exponents(g)) + " times monomial " + exps_str(a.exponents(k)) +
               " does not act as the algebra product";
    }
  }
  return std::nullopt;
}

ProjectivityReport hyperalgebra_free_test(const RationalModule& m, const TruncatedHyperalgebra& a) {
  if (auto bad = algebra_action_mismatch(m, a)) throw IncompatibleError("not a Dist(U_r)-module: " + *bad);
  ProjectivityReport rep;
  rep.subject = m.name();
  rep.algebra = AlgebraKind::Hyperalgebra;
  rep.module_dim = m.dim();
  rep.algebra_dim = a.dim();
  rep.criterion = "rank of the socle element's action equals dim M / dim Dist(U_r)";
  if (m.dim() % a.dim() != 0) {
    rep.evidence.emplace_back("reason", "dim M not divisible by dim Dist(U_r)");
    return rep;
  }
  rep.required_rank = m.dim() / a.dim();
  const SocleWitness soc = socle(a);
  Matrix s = Matrix::zero(m.field(), m.dim(), m.dim());
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (soc.vector[k] != 0) s.add_scaled(monomial_operator(m, a.exponents(k)), soc.vector[k]);
  rep.criterion_rank = rank(s);
  rep.verdict = rep.criterion_rank == rep.required_rank ? Verdict::Free : Verdict::NotProjective;
  rep.evidence.emplace_back("socle_rank", std::to_string(rep.criterion_rank));
  rep.evidence.emplace_back("required_rank", std::to_string(rep.required_rank));
  if (!rep.free()) rep.evidence.emplace_back("rank_gap", std::to_string(rep.required_rank - rep.criterion_rank));
  return rep;
}

ProjectivityReport norm_rank_test(const RationalModule& m, const GroupTable& g) {
  ProjectivityReport rep;
  rep.subject = m.name();
  rep.algebra = AlgebraKind::GroupAlgebra;
  rep.module_dim = m.dim();
  rep.algebra_dim = g.order();
  rep.criterion = "rank of the norm element's action equals dim M / |U(F_q)|";
  const Matrix n = norm_matrix(m, g);
  rep.criterion_rank = rank(n);
  rep.evidence.emplace_back("norm_rank", std::to_string(rep.criterion_rank));
  if (m.dim() % g.order() == 0) {
    rep.required_rank = m.dim() / g.order();
    rep.evidence.emplace_back("required_rank", std::to_string(rep.required_rank));
    if (rep.criterion_rank == rep.required_rank) rep.verdict = Verdict::Free;
  } else {
    rep.evidence.emplace_back("reason", "dim M not divisible by |U(F_q)|");
  }
  if (m.has_weights())
    rep.evidence.emplace_back("sylow", "U(F_q) is a Sylow p-subgroup of G(F_q); the verdict holds over G(F_q)");
  return rep;
}

JordanReport jordan_oracle(const Matrix& z, std::uint32_t p) {
  if (!z.is_square()) throw std::invalid_argument("jordan_oracle needs a square matrix");
  const std::size_t n = z.rows();
  JordanReport rep;
  rep.ranks.push_back(n);
  Matrix pw = Matrix::identity(z.field(), n);
  for (std::uint32_t k = 1; k <= p; ++k) {
    pw = pw * z;
    rep.ranks.push_back(rank(pw));
  }
  if (rep.ranks[p] != 0) throw std::invalid_argument("jordan_oracle: Z^p is not zero");
  rep.ranks.push_back(0);  // rank Z^{p+1}, dropped below
  for (std::size_t k = 1; k <= p; ++k) {
    const std::size_t count = rep.ranks[k - 1] - 2 * rep.ranks[k] + rep.ranks[k + 1];
    if (count) rep.blocks.emplace_back(k, count);
  }
  rep.ranks.pop_back();
  rep.free = std::all_of(rep.blocks.begin(), rep.blocks.end(), [&](const auto& b) { return b.first == p; });
  rep.cross_check_ok = (rep.ranks[p - 1] * p == n) == rep.free;
  return rep;
}

// ---- weight bases and certificates -------------------------------------

std::vector<std::vector<elem_t>> monomial_orbit(const RationalModule& m, const TruncatedHyperalgebra& a,
                                                std::span<const elem_t> v) {
  require_compatible(m, a);
  const std::size_t roots = m.tag().num_roots();
  const std::uint32_t q = m.q();
  // cur[s] = (product of the roots after j) applied to v, s the suffix index.
  std::vector<Vec> cur{Vec(v.begin(), v.end())};
  std::size_t stride = 1;
  for (std::size_t j = roots; j-- > 0;) {
    std::vector<Vec> next(cur.size() * q);
    const auto ops = m.ops(j);
    for (std::uint32_t n = 0; n < q; ++n)
      for (std::size_t s = 0; s < cur.size(); ++s) next[n * stride + s] = n == 0 ? cur[s] : ops[n].apply(cur[s]);
    cur = std::move(next);
    stride *= q;
  }
  return cur;
}

std::vector<Weight> ascending_weights(const RationalModule& m) {
  std::vector<std::pair<Weight, std::size_t>> todo;  // weight, first basis index
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const auto& w = m.weights()[i];
    if (std::none_of(todo.begin(), todo.end(), [&](const auto& t) { return t.first == w; })) todo.emplace_back(w, i);
  }
  std::vector<Weight> order;
  while (!todo.empty()) {
    std::size_t best = todo.size();
    for (std::size_t i = 0; i < todo.size(); ++i) {
      const bool minimal = std::none_of(todo.begin(), todo.end(), [&](const auto& t) {
        return m.tag().weight_greater(todo[i].first, t.first);
      });
      if (minimal && (best == todo.size() || todo[i].second < todo[best].second)) best = i;
    }
    order.push_back(todo[best].first);
    todo.erase(todo.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return order;
}

WeightBasisResult extract_weight_basis(const RationalModule& m, const TruncatedHyperalgebra& a) {
  if (!m.has_weights()) throw std::invalid_argument("extract_weight_basis needs weight labels");
  require_compatible(m, a);
  WeightBasisResult res;
  RowSpan span(m.field(), m.dim());
  const auto& tag = m.tag();
  for (;;) {
    std::vector<std::size_t> outside;
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!span.contains(unit(m.dim(), j))) outside.push_back(j);
    if (outside.empty()) break;
    std::size_t pick = m.dim();
    for (const std::size_t j : outside) {
      const bool maximal = std::none_of(outside.begin(), outside.end(), [&](std::size_t k) {
        return tag.weight_greater(m.weights()[k], m.weights()[j]);
      });
      if (maximal) {
        pick = j;
        break;
      }
    }
    res.generators.push_back(pick);
    for (auto& w : monomial_orbit(m, a, unit(m.dim(), pick))) span.insert(std::move(w));
    if (!res.span_dims.empty() && span.rank() <= res.span_dims.back())
      throw ConstructionError("greedy span did not grow");
    res.span_dims.push_back(span.rank());
  }
  res.ok = res.generators.size() * a.dim() == m.dim();
  if (!res.ok)
    res.failure = "reached span " + std::to_string(span.rank()) + " with " + std::to_string(res.generators.size()) +
                  " generators, but " + std::to_string(res.generators.size()) + " * " + std::to_string(a.dim()) +
                  " != " + std::to_string(m.dim());
  return res;
}

BasisCertificate basis_conversion(const RationalModule& m, const TruncatedHyperalgebra& a, const GroupTable& g,
                                  const std::vector<std::size_t>& generators) {
  if (!m.has_weights()) throw std::invalid_argument("basis_conversion needs weight labels");
  require_compatible(m, a);
  if (!(g.tag() == m.tag()) || g.q() != m.q() || !(*g.field() == *m.field()))
    throw IncompatibleError("group and module do not match");
  if (generators.size() * g.order() != m.dim())
    throw std::invalid_argument("generator count times |U(F_q)| must equal dim M");
  for (const std::size_t i : generators)
    if (i >= m.dim()) throw std::out_of_range("generator index out of range");

  const FieldSpec& f = *m.field();
  const std::size_t roots = m.tag().num_roots();
  const std::uint32_t q = m.q();
  const std::size_t cols = generators.size() * g.order();
  const auto vinv = inverse(vandermonde(m.field(), q));
  if (!vinv) throw ConstructionError("Vandermonde matrix is singular");

  std::vector<std::vector<Matrix>> y(roots);
  for (std::size_t j = 0; j < roots; ++j)
    for (std::uint32_t i = 0; i < q; ++i) y[j].push_back(y_operator(m, j, i));

  struct Item {
    std::size_t gen;
    std::size_t mono;
    Vec vec;
  };
  std::map<Weight, std::vector<Item>> by_weight;
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    auto orbit = monomial_orbit(m, a, unit(m.dim(), generators[gi]));
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      const Weight lam = m.weights()[generators[gi]] + monomial_weight(m.tag(), a.exponents(k));
      by_weight[lam].push_back({gi, k, std::move(orbit[k])});
    }
  }

  BasisCertificate cert;
  cert.generators = generators;
  cert.group_order = g.order();
  TrackedSpan certified(m.field(), cols);
  for (const Weight& lam : ascending_weights(m)) {
    auto it = by_weight.find(lam);
    const std::size_t count = it == by_weight.end() ? 0 : it->second.size();
    cert.weight_order.push_back(lam);
    cert.vectors_per_weight.push_back(count);
    if (!count) continue;
    for (auto& item : it->second) {
      const auto exps = a.exponents(item.mono);
      const std::string who = "X" + exps_str(exps) + ".m_" + std::to_string(item.gen);
      // y^n m_i, and its expression sum_{g} prod_j Vinv[n_j][pos_j(g)] g.m_i
      Vec yv = unit(m.dim(), generators[item.gen]);
      for (std::size_t j = roots; j-- > 0;) yv = y[j][exps[j]].apply(yv);
      Vec expr(cols, 0);
      for (std::size_t gidx = 0; gidx < g.order(); ++gidx) {
        elem_t c = f.one();
        std::size_t rest = gidx;
        for (std::size_t j = roots; j-- > 0 && c != 0;) {
          c = f.mul(c, (*vinv)(exps[j], rest % q));
          rest /= q;
        }
        expr[item.gen * g.order() + gidx] = c;
      }
      Vec d = item.vec;
      axpy(f, d, f.neg(f.one()), yv);
      for (std::size_t j = 0; j < m.dim(); ++j)
        if (d[j] != 0 && !m.tag().weight_greater(lam, m.weights()[j]))
          throw ConstructionError(who + " - y-monomial has a component of weight " + weight_str(m.weights()[j]) +
                                  " not below " + weight_str(lam));
      const Vec acc = certified.reduce(d);
      if (!is_zero_vec(d)) throw ConstructionError(who + ": lower-weight correction is not yet certified");
      axpy(f, expr, f.one(), acc);
      if (!certified.insert(std::move(item.vec), std::move(expr)))
        throw ConstructionError(who + " is linearly dependent on earlier vectors");
    }
    by_weight.erase(it);
  }
  if (!by_weight.empty())
    throw ConstructionError("spanning vector of weight " + weight_str(by_weight.begin()->first) +
                            " which no basis vector carries");
  if (certified.size() != m.dim()) throw ConstructionError("certified vectors do not span M");

  cert.expressions = Matrix::zero(m.field(), m.dim(), cols);
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Vec e = unit(m.dim(), j);
    const Vec acc = certified.reduce(e);
    if (!is_zero_vec(e)) throw ConstructionError("basis vector " + std::to_string(j) + " is not certified");
    std::copy(acc.begin(), acc.end(), cert.expressions.row(j).begin());
  }
  return cert;
}

namespace {

Matrix translates(const RationalModule& m, const GroupTable& g, const std::vector<std::size_t>& generators) {
  const auto images = group_images(m, g);
  Matrix t(m.field(), generators.size() * g.order(), m.dim());
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t k = 0; k < g.order(); ++k)
      for (std::size_t r = 0; r < m.dim(); ++r) t(i * g.order() + k, r) = images[k](r, generators[i]);
  return t;
}

}  // namespace

CertificateCheck evaluate_certificate(const RationalModule& m, const GroupTable& g, const BasisCertificate& cert) {
  CertificateCheck res;
  if (cert.expressions.rows() != m.dim() || cert.expressions.cols() != cert.generators.size() * g.order()) {
    res.ok = false;
    return res;
  }
  if (m.dim() == 0) return res;
  const Matrix prod = cert.expressions * translates(m, g, cert.generators);
  for (std::size_t j = 0; j < m.dim() && res.ok; ++j)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (prod(j, c) != (j == c ? 1u : 0u)) {
        res.ok = false;
        res.failing_row = j;
        break;
      }
  return res;
}

bool direct_group_basis_check(const RationalModule& m, const std::vector<std::size_t>& generators,
                              const GroupTable& g) {
  if (generators.size() * g.order() != m.dim())
    throw std::invalid_argument("generator count times |U(F_q)| must equal dim M");
  for (const std::size_t i : generators)
    if (i >= m.dim()) throw std::out_of_range("generator index out of range");
  return rank(translates(m, g, generators)) == m.dim();
}

}  // namespace hypercert
