#include "hypercert/field.hpp"

#include <algorithm>
#include <sstream>

namespace hypercert {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a nonzero b over GF(p).
Poly poly_rem(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_from_code(std::uint64_t code, std::uint32_t p, std::uint32_t len) {
  Poly out(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return out;
}

}  // namespace

bool is_irreducible(const std::vector<std::uint32_t>& poly_in, std::uint32_t p) {
  Poly poly = poly_in;
  trim(poly);
  if (poly.size() < 2) return false;
  const std::uint32_t deg = static_cast<std::uint32_t>(poly.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly divisor = poly_from_code(low, p, d);
      divisor.push_back(1);
      if (poly_rem(poly, divisor, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < m; ++i) order *= p;
  order_ = static_cast<std::uint32_t>(order);
  if (m_ == 1) return;

  auto slow_mul = [&](elem_t a, elem_t b) {
    Poly pa = poly_from_code(a, p_, m_), pb = poly_from_code(b, p_, m_);
    Poly prod(2 * m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i)
      for (std::uint32_t j = 0; j < m_; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p_);
    Poly rem = poly_rem(prod, modulus_, p_);
    rem.resize(m_, 0);
    return from_coords(rem);
  };

  // Find a primitive element and tabulate discrete logs.
  log_.assign(order_, 0);
  exp_.assign(2 * static_cast<std::size_t>(order_), 0);
  for (elem_t g = 1; g < order_; ++g) {
    std::vector<elem_t> powers;
    powers.reserve(order_ - 1);
    elem_t x = 1;
    do {
      powers.push_back(x);
      x = slow_mul(x, g);
    } while (x != 1 && powers.size() < order_);
    if (powers.size() != order_ - 1) continue;
    for (std::uint32_t k = 0; k < order_ - 1; ++k) {
      exp_[k] = powers[k];
      exp_[k + order_ - 1] = powers[k];
      log_[powers[k]] = k;
    }
    break;
  }

  if (p_ != 2) {
    neg_table_.resize(order_);
    for (elem_t a = 0; a < order_; ++a) {
      auto c = coords(a);
      for (auto& v : c) v = v == 0 ? 0 : p_ - v;
      neg_table_[a] = from_coords(c);
    }
    if (order_ <= 256) {
      add_table_.resize(std::size_t{order_} * order_);
      for (elem_t a = 0; a < order_; ++a)
        for (elem_t b = 0; b < order_; ++b) add_table_[std::size_t{a} * order_ + b] = add_digits(a, b);
    }
  }
}

elem_t FieldSpec::add_digits(elem_t a, elem_t b) const {
  elem_t out = 0, place = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    const std::uint32_t da = a % p_, db = b % p_;
    out += ((da + db) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

elem_t FieldSpec::inv(elem_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  if (m_ == 1) return inv_mod(a, p_);
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : order_ - 1 - l];
}

elem_t FieldSpec::pow(elem_t a, std::uint64_t e) const {
  elem_t result = 1, base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

elem_t FieldSpec::from_int(std::int64_t v) const {
  const std::int64_t p = p_;
  return static_cast<elem_t>(((v % p) + p) % p);
}

std::vector<std::uint32_t> FieldSpec::coords(elem_t a) const {
  return poly_from_code(a, p_, m_);
}

elem_t FieldSpec::from_coords(const std::vector<std::uint32_t>& c) const {
  if (c.size() != m_) throw std::invalid_argument("coordinate vector has wrong length");
  elem_t out = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw std::invalid_argument("coordinate out of range");
    out = out * p_ + c[i];
  }
  return out;
}

std::vector<elem_t> FieldSpec::elements() const {
  std::vector<elem_t> out(order_);
  for (elem_t a = 0; a < order_; ++a) out[a] = a;
  return out;
}

bool FieldSpec::contains_subfield(std::uint64_t sub_order) const {
  std::uint64_t v = 1;
  for (std::uint32_t d = 1; d <= m_; ++d) {
    v *= p_;
    if (v == sub_order) return m_ % d == 0;
  }
  return false;
}

std::vector<elem_t> FieldSpec::subfield_elements(std::uint64_t sub_order) const {
  if (!contains_subfield(sub_order))
    throw std::invalid_argument(name() + " has no subfield of order " + std::to_string(sub_order));
  std::vector<elem_t> out;
  out.reserve(sub_order);
  for (elem_t a = 0; a < order_; ++a)
    if (pow(a, sub_order) == a) out.push_back(a);
  return out;
}

std::string FieldSpec::name() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (m_ > 1) os << "^" << m_;
  os << ")";
  return os.str();
}

FieldPtr build_field(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("extension degree must be at least 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    order *= p;
    if (order > kMaxFieldOrder)
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(m) +
                                  " exceeds the enumeration guard 2^20");
  }
  std::uint64_t lows = order;  // p^m candidate lower-coefficient vectors
  for (std::uint64_t low = 0; low < lows; ++low) {
    Poly cand = poly_from_code(low, p, m);
    cand.push_back(1);
    if (is_irreducible(cand, p)) return FieldPtr(new FieldSpec(p, m, std::move(cand)));
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldElement::FieldElement(FieldPtr field, elem_t code) : field_(std::move(field)), code_(code) {
  if (!field_) throw std::invalid_argument("field element without field");
  if (code_ >= field_->order()) throw std::invalid_argument("field element code out of range");
}

void FieldElement::require_same(const FieldElement& o) const {
  if (field_ != o.field_ && !(*field_ == *o.field_))
    throw std::invalid_argument("field mismatch: " + field_->name() + " vs " + o.field_->name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->div(code_, o.code_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(code_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }

std::vector<FieldElement> enumerate_elements(const FieldPtr& field) {
  std::vector<FieldElement> out;
  out.reserve(field->order());
  for (elem_t a = 0; a < field->order(); ++a) out.emplace_back(field, a);
  return out;
}

}  // namespace hypercert
