#include "hypercert/root_system.hpp"

#include <stdexcept>

namespace hypercert {

Weight Weight::operator+(const Weight& o) const {
  if (coords.size() != o.coords.size()) throw std::invalid_argument("weight rank mismatch");
  Weight out = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) out.coords[i] += o.coords[i];
  return out;
}

Weight Weight::operator-(const Weight& o) const { return *this + o.scaled(-1); }

Weight Weight::scaled(long k) const {
  Weight out = *this;
  for (auto& c : out.coords) c = static_cast<int>(c * k);
  return out;
}

bool Weight::is_zero() const {
  for (int c : coords)
    if (c) return false;
  return true;
}

RootSystemTag RootSystemTag::a1() {
  RootSystemTag t;
  t.kind_ = RootKind::A1;
  t.labels_ = {"alpha"};
  t.root_weights_ = {Weight{{-2}}};
  return t;
}

RootSystemTag RootSystemTag::a2_unipotent() {
  RootSystemTag t;
  t.kind_ = RootKind::A2Unipotent;
  t.labels_ = {"alpha", "gamma", "beta"};
  // Simple roots in fundamental-weight coordinates: (2,-1) and (-1,2).
  t.root_weights_ = {Weight{{-2, 1}}, Weight{{-1, -1}}, Weight{{1, -2}}};
  return t;
}

RootSystemTag RootSystemTag::from_name(std::string_view name) {
  if (name == "A1") return a1();
  if (name == "A2" || name == "A2_unipotent") return a2_unipotent();
  throw std::invalid_argument("unknown root system tag '" + std::string(name) + "'");
}

std::string RootSystemTag::name() const { return kind_ == RootKind::A1 ? "A1" : "A2_unipotent"; }

std::size_t RootSystemTag::root_index(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("root '" + std::string(label) + "' not in " + name());
}

bool RootSystemTag::weight_geq(const Weight& lambda, const Weight& mu) const {
  const Weight d = lambda - mu;
  if (kind_ == RootKind::A1) return d.coords[0] >= 0 && d.coords[0] % 2 == 0;
  // d = a*(2,-1) + b*(-1,2)  =>  a = (2 d1 + d2)/3, b = (d1 + 2 d2)/3.
  const int a3 = 2 * d.coords[0] + d.coords[1];
  const int b3 = d.coords[0] + 2 * d.coords[1];
  return a3 >= 0 && b3 >= 0 && a3 % 3 == 0 && b3 % 3 == 0;
}

}  // namespace hypercert
