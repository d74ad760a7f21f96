#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercert {

/// Raw encoding of a field element: the residue polynomial's coefficients
/// read as base-p digits, lowest degree first (code = sum coords[i] * p^i).
using elem_t = std::uint32_t;

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Largest field order the library will build; every field must be small
/// enough to enumerate.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

/// GF(p^m) realized as GF(p)[t]/(modulus). Immutable once built; all
/// arithmetic works on `elem_t` codes so matrices can store plain integers.
class FieldSpec {
public:
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return m_; }
  std::uint32_t order() const { return order_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  elem_t zero() const { return 0; }
  elem_t one() const { return 1; }

  elem_t add(elem_t a, elem_t b) const {
    if (m_ == 1) {
      const std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[std::size_t{a} * order_ + b];
    return add_digits(a, b);
  }
  elem_t neg(elem_t a) const {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    return neg_table_[a];
  }
  elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }
  elem_t mul(elem_t a, elem_t b) const {
    if (m_ == 1) return static_cast<elem_t>((std::uint64_t{a} * b) % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  elem_t inv(elem_t a) const;
  elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }
  elem_t pow(elem_t a, std::uint64_t e) const;

  /// Image of an integer under Z -> GF(p).
  elem_t from_int(std::int64_t v) const;
  std::vector<std::uint32_t> coords(elem_t a) const;
  elem_t from_coords(const std::vector<std::uint32_t>& c) const;

  /// All elements in code order (0 first).
  std::vector<elem_t> elements() const;
  /// Elements of the unique subfield of the given order, i.e. the fixed
  /// points of x -> x^order, in code order.
  std::vector<elem_t> subfield_elements(std::uint64_t sub_order) const;
  bool contains_subfield(std::uint64_t sub_order) const;

  std::string name() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

private:
  friend FieldPtr build_field(std::uint32_t p, std::uint32_t m);
  FieldSpec(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  elem_t add_digits(elem_t a, elem_t b) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<elem_t> exp_;  // doubled so log sums need no reduction
  std::vector<elem_t> neg_table_;
  std::vector<elem_t> add_table_;
};

/// Builds GF(p^m) with the first monic irreducible modulus in the
/// deterministic search order (coefficient vectors ranked by their base-p
/// value, constant term least significant). For m = 1 the modulus is t.
FieldPtr build_field(std::uint32_t p, std::uint32_t m);

/// Exhaustive trial-division irreducibility test over GF(p).
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Scalar handle used at API boundaries; matrices store raw codes.
class FieldElement {
public:
  FieldElement() = default;
  FieldElement(FieldPtr field, elem_t code);

  const FieldPtr& field() const { return field_; }
  elem_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  std::vector<std::uint32_t> coords() const { return field_->coords(code_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.code_ == b.code_ && (a.field_ == b.field_ || *a.field_ == *b.field_);
  }

private:
  void require_same(const FieldElement& o) const;

  FieldPtr field_;
  elem_t code_ = 0;
};

std::vector<FieldElement> enumerate_elements(const FieldPtr& field);

}  // namespace hypercert
