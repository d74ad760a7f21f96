#include "hypercert/hyperalgebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hypercert/combinatorics.hpp"
#include "hypercert/errors.hpp"

namespace hypercert {

std::vector<HeisenbergTerm> heisenberg_product(const std::array<std::uint64_t, 3>& u,
                                               const std::array<std::uint64_t, 3>& v,
                                               std::uint32_t p, int eps) {
  const auto [a1, c1, b1] = u;
  const auto [a2, c2, b2] = v;
  std::vector<HeisenbergTerm> out;
  const std::uint64_t kmax = std::min(a2, b1);
  for (std::uint64_t k = 0; k <= kmax; ++k) {
    std::uint64_t c = binomial_mod(a1 + a2 - k, a1, p);
    if (!c) continue;
    c = c * binomial_mod(c1 + k, k, p) % p;
    if (!c) continue;
    c = c * binomial_mod(c1 + k + c2, c2, p) % p;
    if (!c) continue;
    c = c * binomial_mod(b1 - k + b2, b2, p) % p;
    if (!c) continue;
    if (eps < 0 && (k & 1)) c = (p - c) % p;
    out.push_back({{a1 + a2 - k, c1 + k + c2, b1 - k + b2}, static_cast<std::uint32_t>(c)});
  }
  return out;
}

namespace {

struct RawTerm {
  std::vector<std::uint64_t> exps;
  std::uint32_t coeff;
};

std::vector<RawTerm> raw_product(RootKind kind, const std::vector<std::uint32_t>& u,
                                 const std::vector<std::uint32_t>& v, std::uint32_t p, int eps) {
  std::vector<RawTerm> out;
  if (kind == RootKind::A1) {
    const std::uint32_t c = divided_coeff(u[0], v[0], p);
    if (c) out.push_back({{std::uint64_t{u[0]} + v[0]}, c});
    return out;
  }
  for (const auto& t : heisenberg_product({u[0], u[1], u[2]}, {v[0], v[1], v[2]}, p, eps))
    out.push_back({{t.exps[0], t.exps[1], t.exps[2]}, t.coeff});
  return out;
}

void check_char(const FieldPtr& field, std::uint32_t p, std::uint32_t r) {
  if (!field) throw std::invalid_argument("null field");
  if (field->characteristic() != p)
    throw IncompatibleError("characteristic mismatch: field " + field->name() + " vs p = " + std::to_string(p));
  if (r < 1) throw std::invalid_argument("Frobenius level r must be at least 1");
}

}  // namespace

TruncatedHyperalgebra::TruncatedHyperalgebra(RootSystemTag tag, std::uint32_t p, std::uint32_t r, FieldPtr field,
                                             int eps)
    : tag_(std::move(tag)), field_(std::move(field)), p_(p), r_(r), eps_(eps) {
  q_ = static_cast<std::uint32_t>(int_pow(p, r));
  dim_ = static_cast<std::size_t>(int_pow(q_, static_cast<unsigned>(tag_.num_roots())));
  table_.resize(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const auto ui = exponents(i);
    for (std::size_t j = 0; j < dim_; ++j) {
      SparseVec& row = table_[i * dim_ + j];
      for (const auto& t : raw_product(tag_.kind(), ui, exponents(j), p_, eps_)) {
        const bool inside = std::all_of(t.exps.begin(), t.exps.end(), [&](std::uint64_t e) { return e < q_; });
        if (!inside) {
          std::ostringstream os;
          os << "truncation violated: basis product (" << i << ", " << j << ") has a nonzero term outside Dist(U_r)";
          throw ConstructionError(os.str());
        }
        std::vector<std::uint32_t> e(t.exps.begin(), t.exps.end());
        row.push_back({static_cast<std::uint32_t>(index_of(e)), field_->from_int(t.coeff)});
      }
    }
  }
}

std::vector<std::uint32_t> TruncatedHyperalgebra::exponents(std::size_t index) const {
  const std::size_t k = tag_.num_roots();
  std::vector<std::uint32_t> e(k);
  for (std::size_t j = k; j-- > 0;) {
    e[j] = static_cast<std::uint32_t>(index % q_);
    index /= q_;
  }
  return e;
}

std::size_t TruncatedHyperalgebra::index_of(std::span<const std::uint32_t> exps) const {
  if (exps.size() != tag_.num_roots()) throw std::invalid_argument("exponent vector has wrong length");
  std::size_t idx = 0;
  for (auto e : exps) {
    if (e >= q_) throw std::out_of_range("exponent outside Dist(U_r)");
    idx = idx * q_ + e;
  }
  return idx;
}

std::size_t TruncatedHyperalgebra::root_power_index(std::size_t root, std::uint32_t n) const {
  std::vector<std::uint32_t> e(tag_.num_roots(), 0);
  e.at(root) = n;
  return index_of(e);
}

Weight TruncatedHyperalgebra::weight(std::size_t index) const {
  Weight w = tag_.zero_weight();
  const auto e = exponents(index);
  for (std::size_t j = 0; j < e.size(); ++j) w = w + tag_.root_weight(j).scaled(e[j]);
  return w;
}

std::vector<std::size_t> TruncatedHyperalgebra::generator_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t root = 0; root < tag_.num_roots(); ++root) {
    std::uint32_t pw = 1;
    for (std::uint32_t i = 0; i < r_; ++i, pw *= p_) out.push_back(root_power_index(root, pw));
  }
  return out;
}

std::vector<elem_t> TruncatedHyperalgebra::multiply(std::span<const elem_t> a, std::span<const elem_t> b) const {
  if (a.size() != dim_ || b.size() != dim_) throw std::invalid_argument("algebra element has wrong length");
  const FieldSpec& f = *field_;
  std::vector<elem_t> out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!b[j]) continue;
      const elem_t ab = f.mul(a[i], b[j]);
      for (const auto& t : product(i, j)) out[t.index] = f.add(out[t.index], f.mul(ab, t.coeff));
    }
  }
  return out;
}

std::vector<elem_t> TruncatedHyperalgebra::basis_vector(std::size_t index) const {
  std::vector<elem_t> v(dim_, 0);
  v.at(index) = 1;
  return v;
}

TruncatedHyperalgebra line_algebra(std::uint32_t p, std::uint32_t r, const FieldPtr& field) {
  check_char(field, p, r);
  return TruncatedHyperalgebra(RootSystemTag::a1(), p, r, field, 1);
}

TruncatedHyperalgebra heisenberg_algebra(std::uint32_t p, std::uint32_t r, const FieldPtr& field, int eps) {
  check_char(field, p, r);
  if (eps != 1 && eps != -1) throw std::invalid_argument("commutator sign must be +1 or -1");
  TruncatedHyperalgebra alg(RootSystemTag::a2_unipotent(), p, r, field, eps);
  const auto assoc = check_associativity(alg);
  if (!assoc.ok) {
    const auto& t = *assoc.counterexample;
    std::ostringstream os;
    os << "associativity self-test failed on basis triple (" << t[0] << ", " << t[1] << ", " << t[2] << ")";
    throw ConstructionError(os.str());
  }
  return alg;
}

std::vector<Matrix> regular_representation(const TruncatedHyperalgebra& a) {
  const std::size_t d = a.dim();
  std::vector<Matrix> out;
  out.reserve(d);
  for (std::size_t u = 0; u < d; ++u) {
    Matrix m(a.field(), d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : a.product(u, j)) m(t.index, j) = t.coeff;
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> right_regular_representation(const TruncatedHyperalgebra& a) {
  const std::size_t d = a.dim();
  std::vector<Matrix> out;
  out.reserve(d);
  for (std::size_t u = 0; u < d; ++u) {
    Matrix m(a.field(), d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : a.product(j, u)) m(t.index, j) = t.coeff;
    out.push_back(std::move(m));
  }
  return out;
}

SocleWitness socle(const TruncatedHyperalgebra& a) {
  const std::size_t d = a.dim();
  const auto left = regular_representation(a);
  const auto right = right_regular_representation(a);
  // Intersect kernels one operator at a time; columns of `kernel` span the
  // common null space found so far.
  Matrix kernel = Matrix::identity(a.field(), d);
  for (std::size_t u = 1; u < d && kernel.cols() > 0; ++u) {
    const Matrix stacked = vstack(left[u] * kernel, right[u] * kernel);
    kernel = kernel * nullspace(stacked);
  }
  if (kernel.cols() != 1) {
    throw ConstructionError("socle has dimension " + std::to_string(kernel.cols()) + ", expected 1");
  }
  SocleWitness w;
  w.vector.resize(d);
  for (std::size_t i = 0; i < d; ++i) w.vector[i] = kernel(i, 0);
  bool ok = std::any_of(w.vector.begin(), w.vector.end(), [](elem_t x) { return x != 0; });
  for (std::size_t u = 1; u < d && ok; ++u) {
    const auto e = a.basis_vector(u);
    const auto lv = a.multiply(e, w.vector), rv = a.multiply(w.vector, e);
    ok = std::all_of(lv.begin(), lv.end(), [](elem_t x) { return x == 0; }) &&
         std::all_of(rv.begin(), rv.end(), [](elem_t x) { return x == 0; });
  }
  w.verified = ok;
  return w;
}

namespace {

bool associative_on(const TruncatedHyperalgebra& a, std::size_t u, std::size_t v, std::size_t w) {
  const FieldSpec& f = *a.field();
  std::vector<elem_t> left(a.dim(), 0), right(a.dim(), 0);
  for (const auto& t : a.product(u, v))
    for (const auto& s : a.product(t.index, w)) left[s.index] = f.add(left[s.index], f.mul(t.coeff, s.coeff));
  for (const auto& t : a.product(v, w))
    for (const auto& s : a.product(u, t.index)) right[s.index] = f.add(right[s.index], f.mul(t.coeff, s.coeff));
  return left == right;
}

}  // namespace

AssociativityReport check_associativity(const TruncatedHyperalgebra& a, std::uint64_t seed, std::size_t samples,
                                        std::size_t exhaustive_limit) {
  AssociativityReport rep;
  const std::size_t d = a.dim();
  if (d <= exhaustive_limit) {
    rep.exhaustive = true;
    for (std::size_t u = 0; u < d; ++u)
      for (std::size_t v = 0; v < d; ++v)
        for (std::size_t w = 0; w < d; ++w) {
          ++rep.triples_checked;
          if (!associative_on(a, u, v, w)) {
            rep.ok = false;
            rep.counterexample = {u, v, w};
            return rep;
          }
        }
    return rep;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, d - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t u = pick(rng), v = pick(rng), w = pick(rng);
    ++rep.triples_checked;
    if (!associative_on(a, u, v, w)) {
      rep.ok = false;
      rep.counterexample = {u, v, w};
      return rep;
    }
  }
  return rep;
}

TruncationReport check_truncation(const TruncatedHyperalgebra& a) {
  TruncationReport rep;
  const std::uint32_t q = a.q();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto ui = a.exponents(i);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto uj = a.exponents(j);
      if (a.tag().kind() == RootKind::A1) {
        if (ui[0] + uj[0] >= q) {
          ++rep.overflowing_pairs;
          if (divided_coeff(ui[0], uj[0], a.p()) != 0) ++rep.violations;
        }
        continue;
      }
      // Naive exponents of every reordering term; any term landing outside the
      // index box must vanish mod p.
      const std::uint64_t kmax = std::min(uj[0], ui[2]);
      bool overflow = false;
      for (std::uint64_t k = 0; k <= kmax; ++k) {
        const std::uint64_t ea = ui[0] + uj[0] - k, ec = ui[1] + k + uj[1], eb = ui[2] - k + uj[2];
        if (ea >= q || ec >= q || eb >= q) overflow = true;
      }
      if (!overflow) continue;
      ++rep.overflowing_pairs;
      for (const auto& t : heisenberg_product({ui[0], ui[1], ui[2]}, {uj[0], uj[1], uj[2]}, a.p(), a.epsilon()))
        if (t.exps[0] >= q || t.exps[1] >= q || t.exps[2] >= q) ++rep.violations;
    }
  }
  return rep;
}

std::size_t augmentation_nilpotency_index(const TruncatedHyperalgebra& a) {
  const std::size_t d = a.dim();
  std::vector<std::vector<elem_t>> power;  // basis of I^k
  for (std::size_t u = 1; u < d; ++u) power.push_back(a.basis_vector(u));
  std::size_t k = 1;
  while (!power.empty()) {
    RowSpan next(a.field(), d);
    for (const auto& x : power)
      for (std::size_t u = 1; u < d; ++u) next.insert(a.multiply(x, a.basis_vector(u)));
    const Matrix b = next.basis();
    power.clear();
    for (std::size_t i = 0; i < b.rows(); ++i) power.emplace_back(b.row(i).begin(), b.row(i).end());
    ++k;
  }
  return k;
}

}  // namespace hypercert
