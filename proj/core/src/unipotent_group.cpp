#include "hypercert/unipotent_group.hpp"

#include <algorithm>
#include <random>

#include "hypercert/errors.hpp"

namespace hypercert {

UnipotentGroupLaw::UnipotentGroupLaw(RootSystemTag tag, int commutator_sign)
    : tag_(std::move(tag)), sign_(commutator_sign) {
  if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("commutator sign must be +1 or -1");
}

UnipotentGroupLaw UnipotentGroupLaw::from_algebra(const TruncatedHyperalgebra& a) {
  if (a.tag().kind() == RootKind::A1) return UnipotentGroupLaw(a.tag(), 1);
  const std::size_t beta = a.root_power_index(2, 1), alpha = a.root_power_index(0, 1);
  const std::size_t gamma = a.root_power_index(1, 1);
  const FieldSpec& f = *a.field();
  for (const auto& t : a.product(beta, alpha)) {
    if (t.index != gamma) continue;
    if (t.coeff == f.one()) return UnipotentGroupLaw(a.tag(), 1);
    if (t.coeff == f.neg(f.one())) return UnipotentGroupLaw(a.tag(), -1);
  }
  throw ConstructionError("X_beta X_alpha has no +-X_gamma term; cannot derive the group law");
}

void UnipotentGroupLaw::require(const GroupElement& g) const {
  if (g.kind != tag_.kind() || g.params.size() != tag_.num_roots())
    throw IncompatibleError("group element does not belong to U for " + tag_.name());
}

GroupElement UnipotentGroupLaw::identity(const FieldPtr& field) const {
  return GroupElement{tag_.kind(), std::vector<FieldElement>(tag_.num_roots(), FieldElement(field, 0))};
}

GroupElement UnipotentGroupLaw::multiply(const GroupElement& g, const GroupElement& h) const {
  require(g);
  require(h);
  if (tag_.kind() == RootKind::A1) return {RootKind::A1, {g.params[0] + h.params[0]}};
  const auto& [a1, c1, b1] = std::tie(g.params[0], g.params[1], g.params[2]);
  const auto& [a2, c2, b2] = std::tie(h.params[0], h.params[1], h.params[2]);
  FieldElement cross = a2 * b1;
  if (sign_ < 0) cross = -cross;
  return {RootKind::A2Unipotent, {a1 + a2, c1 + c2 + cross, b1 + b2}};
}

GroupElement UnipotentGroupLaw::inverse(const GroupElement& g) const {
  require(g);
  if (tag_.kind() == RootKind::A1) return {RootKind::A1, {-g.params[0]}};
  const auto& a = g.params[0];
  const auto& c = g.params[1];
  const auto& b = g.params[2];
  FieldElement cross = a * b;
  if (sign_ < 0) cross = -cross;
  return {RootKind::A2Unipotent, {-a, cross - c, -b}};
}

GroupTable::GroupTable(UnipotentGroupLaw law, FieldPtr field, std::uint32_t q)
    : law_(std::move(law)), field_(std::move(field)), q_(q) {
  points_ = field_->subfield_elements(q_);
  position_.assign(field_->order(), -1);
  for (std::size_t i = 0; i < points_.size(); ++i) position_[points_[i]] = static_cast<std::int64_t>(i);
  const std::size_t k = law_.tag().num_roots();
  std::size_t total = 1;
  for (std::size_t j = 0; j < k; ++j) total *= q_;
  elements_.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    GroupElement g{law_.tag().kind(), std::vector<FieldElement>(k)};
    std::size_t rest = idx;
    for (std::size_t j = k; j-- > 0;) {
      g.params[j] = FieldElement(field_, points_[rest % q_]);
      rest /= q_;
    }
    elements_.push_back(std::move(g));
  }
}

std::size_t GroupTable::index_of(const GroupElement& g) const {
  if (g.kind != law_.tag().kind() || g.params.size() != law_.tag().num_roots())
    throw IncompatibleError("group element from another root system");
  std::size_t idx = 0;
  for (const auto& x : g.params) {
    if (!(*x.field() == *field_)) throw IncompatibleError("group element over another field");
    const auto pos = position_[x.code()];
    if (pos < 0) throw std::out_of_range("group element is not an F_q point");
    idx = idx * q_ + static_cast<std::size_t>(pos);
  }
  return idx;
}

std::size_t GroupTable::multiply_index(std::size_t i, std::size_t j) const {
  return index_of(law_.multiply(elements_.at(i), elements_.at(j)));
}

std::size_t GroupTable::inverse_index(std::size_t i) const { return index_of(law_.inverse(elements_.at(i))); }

std::size_t GroupTable::element_order(std::size_t i) const {
  std::size_t n = 1, x = i;
  while (x != identity_index()) {
    x = multiply_index(x, i);
    ++n;
  }
  return n;
}

GroupTable enumerate_group(const TruncatedHyperalgebra& a) {
  return GroupTable(UnipotentGroupLaw::from_algebra(a), a.field(), a.q());
}

GroupTable enumerate_group(const RootSystemTag& tag, const FieldPtr& field, std::uint32_t q, int commutator_sign) {
  return GroupTable(UnipotentGroupLaw(tag, commutator_sign), field, q);
}

GroupElement group_multiply(const GroupTable& g, const GroupElement& x, const GroupElement& y) {
  return g.law().multiply(x, y);
}

Matrix group_action_matrix(const RationalModule& m, const GroupElement& g) {
  if (g.kind != m.tag().kind() || g.params.size() != m.tag().num_roots())
    throw IncompatibleError("group element and module use different root systems");
  Matrix acc = group_element_action(m, 0, g.params[0]);
  for (std::size_t j = 1; j < g.params.size(); ++j) acc = acc * group_element_action(m, j, g.params[j]);
  return acc;
}

std::vector<Matrix> group_images(const RationalModule& m, const GroupTable& g) {
  if (!(m.tag() == g.tag())) throw IncompatibleError("group and module use different root systems");
  if (!(*m.field() == *g.field())) throw IncompatibleError("group and module over different fields");
  if (m.q() != g.q()) throw IncompatibleError("group and module at different Frobenius levels");
  // Cache x_root(a) for every root and F_q point.
  const auto points = g.field()->subfield_elements(g.q());
  std::vector<std::vector<Matrix>> factor(m.tag().num_roots());
  std::vector<std::int64_t> pos(g.field()->order(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) pos[points[i]] = static_cast<std::int64_t>(i);
  for (std::size_t root = 0; root < factor.size(); ++root)
    for (auto a : points) factor[root].push_back(group_element_action(m, root, FieldElement(m.field(), a)));
  std::vector<Matrix> out;
  out.reserve(g.order());
  for (const auto& e : g.elements()) {
    Matrix acc = factor[0][pos[e.params[0].code()]];
    for (std::size_t j = 1; j < e.params.size(); ++j) acc = acc * factor[j][pos[e.params[j].code()]];
    out.push_back(std::move(acc));
  }
  return out;
}

Matrix norm_matrix(const RationalModule& m, const GroupTable& g) {
  Matrix acc = Matrix::zero(m.field(), m.dim(), m.dim());
  for (const auto& x : group_images(m, g)) acc += x;
  return acc;
}

HomomorphismReport check_group_homomorphism(const RationalModule& m, const GroupTable& g, std::uint64_t seed,
                                            std::size_t exhaustive_order, std::size_t samples) {
  HomomorphismReport rep;
  const auto images = group_images(m, g);
  auto check = [&](std::size_t i, std::size_t j) {
    ++rep.pairs_checked;
    if (images[i] * images[j] == images[g.multiply_index(i, j)]) return true;
    rep.ok = false;
    rep.counterexample = {i, j};
    return false;
  };
  if (g.order() <= exhaustive_order) {
    for (std::size_t i = 0; i < g.order() && rep.ok; ++i)
      for (std::size_t j = 0; j < g.order() && check(i, j); ++j) {
      }
    return rep;
  }
  rep.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (std::size_t s = 0; s < samples && check(pick(rng), pick(rng)); ++s) {
  }
  return rep;
}

GroupAxiomReport check_group_axioms(const GroupTable& g) {
  GroupAxiomReport rep;
  const std::size_t n = g.order();
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = g.multiply_index(i, j);
  for (std::size_t i = 0; i < n && rep.associative; ++i)
    for (std::size_t j = 0; j < n && rep.associative; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table[table[i * n + j] * n + k] != table[i * n + table[j * n + k]]) {
          rep.associative = false;
          break;
        }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i] != i || table[i * n] != i) rep.identity_ok = false;
    const std::size_t inv = g.inverse_index(i);
    if (table[i * n + inv] != 0 || table[inv * n + i] != 0) rep.inverses_ok = false;
    std::size_t ord = 1, x = i;
    while (x != 0) {
      x = table[x * n + i];
      ++ord;
    }
    std::size_t t = ord;
    while (t % g.field()->characteristic() == 0) t /= g.field()->characteristic();
    if (t != 1) rep.p_group = false;
    rep.exponent = std::max(rep.exponent, ord);
  }
  return rep;
}

}  // namespace hypercert
