// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Every check goes through the library directly and,
// where one exists, an independent oracle from tests/support.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hypercert/errors.hpp"
#include "hypercert/projectivity.hpp"
#include "hypercert/restricted_lie.hpp"
#include "oracles.hpp"

using namespace hypercert;

namespace {

struct Cell {
  std::uint32_t p, r;
};

const std::vector<Cell> kA1Cells{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}};
const std::vector<Cell> kA2Cells{{2, 1}, {3, 1}};

std::uint32_t qof(Cell c) {
  std::uint32_t q = 1;
  for (std::uint32_t i = 0; i < c.r; ++i) q *= c.p;
  return q;
}

// Collects failures; the first few are printed under the criterion line.
class Tally {
public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

  // Runs body; an exception counts as a failure.
  void guarded(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, what + ": exception: " + e.what());
    }
  }

private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

// Group element action built from the naive sums of divided powers.
Matrix naive_group_action(const RationalModule& m, const GroupElement& g) {
  Matrix acc = Matrix::identity(m.field(), m.dim());
  for (std::size_t root = 0; root < g.params.size(); ++root)
    acc = acc * oracle::naive_root_action(m, root, g.params[root].code());
  return acc;
}

struct Named {
  std::string name;
  RationalModule module;
};

std::vector<Named> a1_family(const FieldPtr& f, Cell c) {
  const std::uint32_t q = qof(c);
  std::vector<Named> out;
  const auto st = steinberg(f, c.p, c.r);
  out.push_back({"trivial", trivial_module(f, RootSystemTag::a1(), c.r)});
  out.push_back({"natural", natural_sl2(f, c.r)});
  for (std::uint32_t d = 0; d <= 2 * q - 2; ++d) out.push_back({"Sym^" + std::to_string(d), sym_power(f, c.r, d)});
  out.push_back({"St", st});
  out.push_back({"regular", regular_module(line_algebra(c.p, c.r, f))});
  out.push_back({"pullback", pullback_additive(st, AdditivePolynomial::lang_type(f, q))});
  out.push_back({"St+St", direct_sum(st, st)});
  return out;
}

// ---- 1: span lemma ---------------------------------------------------------

Tally lemma_criterion() {
  Tally t;
  for (Cell c : kA1Cells) {
    const FieldPtr f = build_field(c.p, c.r);
    const std::uint32_t q = qof(c);
    const auto st = steinberg(f, c.p, c.r);
    std::vector<Named> mods{{"St", st}};
    for (std::uint32_t d = 0; d <= 2 * q - 2; ++d) {
      mods.push_back({"Sym^" + std::to_string(d), sym_power(f, c.r, d)});
      mods.push_back({"St+Sym^" + std::to_string(d), direct_sum(st, sym_power(f, c.r, d))});
    }
    const Matrix v = vandermonde(f, q);
    const auto pts = f->subfield_elements(q);
    for (const auto& [name, m] : mods) {
      const std::string where = "p" + std::to_string(c.p) + "r" + std::to_string(c.r) + " " + name;
      t.guarded(where, [&] {
        const auto rep = span_equality_lemma(m);
        t.expect(rep.spans_equal, where + ": spans differ");
        t.expect(rep.vandermonde_ok, where + ": change of basis is not Vandermonde: " + rep.witness);
        // Independent check: x(a_j) from the naive sum equals sum_i a_j^i y_i.
        for (std::size_t j = 0; j < pts.size(); ++j) {
          Matrix rhs = Matrix::zero(f, m.dim(), m.dim());
          for (std::uint32_t i = 0; i < q; ++i) rhs.add_scaled(y_operator(m, 0, i), v(j, i));
          t.expect(oracle::naive_root_action(m, 0, pts[j]) == rhs, where + ": x(a) mismatch at point " + std::to_string(j));
        }
        if (name == "St") t.expect(rep.unique_change_of_basis && rep.y_span_dim == q, where + ": y-operators dependent");
      });
    }
  }
  return t;
}

// ---- 2: Borel theorem --------------------------------------------------------

void borel_case(Tally& t, const std::string& where, const RationalModule& m, const TruncatedHyperalgebra& a) {
  t.guarded(where, [&] {
    const auto g = enumerate_group(a);
    const std::size_t s = m.dim() / a.dim();
    const auto wb = extract_weight_basis(m, a);
    t.expect(wb.ok && wb.generators.size() == s && s * a.dim() == m.dim(), where + ": weight basis " + wb.failure);
    if (!wb.ok) return;
    const auto cert = basis_conversion(m, a, g, wb.generators);
    t.expect(evaluate_certificate(m, g, cert).ok, where + ": certificate does not re-evaluate");
    // Oracle re-evaluation with naive group actions.
    std::vector<Matrix> ops;
    for (const auto& e : g.elements()) ops.push_back(naive_group_action(m, e));
    const FieldSpec& f = *m.field();
    bool exact = true;
    for (std::size_t row = 0; row < m.dim() && exact; ++row) {
      std::vector<elem_t> acc(m.dim(), 0);
      for (std::size_t i = 0; i < wb.generators.size(); ++i)
        for (std::size_t h = 0; h < g.order(); ++h) {
          const elem_t coeff = cert.expressions(row, i * g.order() + h);
          if (!coeff) continue;
          for (std::size_t k = 0; k < m.dim(); ++k) acc[k] = f.add(acc[k], f.mul(coeff, ops[h](k, wb.generators[i])));
        }
      for (std::size_t k = 0; k < m.dim(); ++k) exact = exact && acc[k] == (k == row ? 1u : 0u);
    }
    t.expect(exact, where + ": oracle re-evaluation of the certificate failed");
    t.expect(direct_group_basis_check(m, wb.generators, g), where + ": {g.m_i} does not have rank dim M");
  });
}

Tally borel_criterion() {
  Tally t;
  for (Cell c : kA1Cells) {
    const FieldPtr f = build_field(c.p, c.r);
    const auto a = line_algebra(c.p, c.r, f);
    const auto st = steinberg(f, c.p, c.r);
    const auto reg = regular_module(a);
    const std::string key = "A1 p" + std::to_string(c.p) + "r" + std::to_string(c.r);
    borel_case(t, key + " St", st, a);
    borel_case(t, key + " regular", reg, a);
    borel_case(t, key + " St+St", direct_sum(st, st), a);
    borel_case(t, key + " regular+regular", direct_sum(reg, reg), a);
  }
  for (Cell c : kA2Cells) {
    const FieldPtr f = build_field(c.p, c.r);
    const auto a = heisenberg_algebra(c.p, c.r, f);
    const auto reg = regular_module(a);
    const std::string key = "A2 p" + std::to_string(c.p) + "r" + std::to_string(c.r);
    borel_case(t, key + " regular", reg, a);
    borel_case(t, key + " regular+regular", direct_sum(reg, reg), a);
  }
  return t;
}

// ---- 3: counterexample -----------------------------------------------------------

Tally counterexample_criterion() {
  Tally t;
  for (Cell c : std::vector<Cell>{{2, 1}, {3, 1}, {2, 2}}) {
    const std::uint32_t q = qof(c);
    const std::string key = "p" + std::to_string(c.p) + "r" + std::to_string(c.r);
    t.guarded(key, [&] {
      // Degree-2 extension of F_q; F_q is its subfield.
      const FieldPtr k = build_field(c.p, 2 * c.r);
      const auto st = steinberg(k, c.p, c.r);
      const auto lang = AdditivePolynomial::lang_type(k, q);
      const auto pb = pullback_additive(st, lang);
      for (elem_t a : k->subfield_elements(q))
        t.expect(oracle::naive_root_action(pb, 0, a).is_identity(), key + " (a): x(a) is not the identity");
      for (std::uint32_t n = 0; n < q; ++n) t.expect(pb.op(0, n) == st.op(0, n), key + " (b): A'_n differs");
      const auto alg = line_algebra(c.p, c.r, k);
      const auto dist = hyperalgebra_free_test(pb, alg);
      t.expect(dist.free() && dist.required_rank == 1, key + " (c): not free of rank 1 over Dist(U_r)");
      const auto norm = norm_rank_test(pb, enumerate_group(alg));
      t.expect(!norm.free(), key + " (d): projective over kU(F_q)");
      bool nontrivial = false;
      for (elem_t a = 0; a < k->order() && !nontrivial; ++a)
        nontrivial = !oracle::naive_root_action(pb, 0, a).is_identity();
      t.expect(nontrivial, key + " (e): every point of the extension acts trivially");
    });
  }
  return t;
}

// ---- 4: restricted Lie algebra ---------------------------------------------------

Tally section3_criterion() {
  Tally t;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Cell c{p, 2};
    const FieldPtr f = build_field(p, 2);
    for (const auto& [name, m] : a1_family(f, c)) {
      const std::string where = "p" + std::to_string(p) + " " + name;
      t.guarded(where, [&] {
        const auto res = never_projective_check(m, 2);
        t.expect(res.z_acts_as_zero, where + ": z acts nontrivially");
        t.expect(res.z_p_power_zero, where + ": z^[p] != 0");
        t.expect(!res.report.free(), where + ": reported projective");
        const bool trivial_blocks = res.jordan.blocks.size() == 1 && res.jordan.blocks[0].first == 1 &&
                                    res.jordan.blocks[0].second == m.dim();
        t.expect(trivial_blocks, where + ": Jordan blocks are not all of size 1");
      });
    }
  }
  return t;
}

// ---- 5: structure ------------------------------------------------------------------

void algebra_structure(Tally& t, const std::string& where, const TruncatedHyperalgebra& a) {
  t.guarded(where, [&] {
    const auto assoc = check_associativity(a, 1, 10000, 64);
    t.expect(assoc.ok, where + ": associativity");
    t.expect(a.dim() <= 64 ? assoc.exhaustive : assoc.triples_checked >= 10000, where + ": associativity coverage");
    t.expect(check_truncation(a).violations == 0, where + ": truncation");
    t.expect(socle(a).verified, where + ": socle");
  });
}

void module_group_law(Tally& t, const std::string& where, const RationalModule& m, const GroupTable& g,
                      bool must_be_exhaustive) {
  t.guarded(where, [&] {
    const auto hom = check_group_homomorphism(m, g, 1, 81, 10000);
    t.expect(hom.ok, where + ": not a homomorphism");
    if (must_be_exhaustive) t.expect(hom.exhaustive, where + ": homomorphism check was sampled");
  });
}

void field_axioms(Tally& t, const FieldPtr& f) {
  std::mt19937_64 rng(f->order());
  std::uniform_int_distribution<elem_t> pick(0, f->order() - 1);
  bool ok = true;
  for (int i = 0; i < 1000 && ok; ++i) {
    const elem_t a = pick(rng), b = pick(rng), c = pick(rng);
    ok = f->mul(a, b) == oracle::poly_mul(*f, a, b) && f->add(a, b) == oracle::poly_add(*f, a, b) &&
         f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)) &&
         f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)) && f->add(a, f->neg(a)) == 0 &&
         (a == 0 || f->mul(a, f->inv(a)) == 1);
  }
  t.expect(ok, f->name() + ": field axioms");
}

Tally structure_criterion() {
  Tally t;
  for (Cell c : kA1Cells) {
    const FieldPtr f = build_field(c.p, c.r);
    const std::string key = "A1 p" + std::to_string(c.p) + "r" + std::to_string(c.r);
    field_axioms(t, f);
    const auto a = line_algebra(c.p, c.r, f);
    algebra_structure(t, key, a);
    const auto g = enumerate_group(a);
    for (const auto& [name, m] : a1_family(f, c)) module_group_law(t, key + " " + name, m, g, qof(c) <= 25);
  }
  for (Cell c : std::vector<Cell>{{2, 1}, {3, 1}, {2, 2}}) {
    const FieldPtr f = build_field(c.p, c.r);
    const std::string key = "A2 p" + std::to_string(c.p) + "r" + std::to_string(c.r);
    field_axioms(t, f);
    const auto a = heisenberg_algebra(c.p, c.r, f);
    algebra_structure(t, key, a);
    t.guarded(key + " group", [&] { t.expect(check_group_axioms(enumerate_group(a)).ok(), key + ": group axioms"); });
    const auto g = enumerate_group(a);
    const auto reg = regular_module(a);
    module_group_law(t, key + " trivial", trivial_module(f, a.tag(), c.r), g, qof(c) <= 4);
    module_group_law(t, key + " regular", reg, g, qof(c) <= 4);
    module_group_law(t, key + " regular+regular", direct_sum(reg, reg), g, qof(c) <= 4);
  }
  return t;
}

// ---- 6: oracle cross-checks ----------------------------------------------------

Tally oracle_criterion() {
  Tally t;
  auto cross = [&](const std::string& where, const RationalModule& m, const TruncatedHyperalgebra& a) {
    t.guarded(where, [&] {
      const auto g = enumerate_group(a);
      const bool norm = norm_rank_test(m, g).free();
      if (m.has_weights() && m.dim() % g.order() == 0 && m.dim() > 0) {
        const auto wb = extract_weight_basis(m, a);
        if (wb.ok && wb.generators.size() * g.order() == m.dim())
          t.expect(norm == direct_group_basis_check(m, wb.generators, g), where + ": norm vs direct basis");
      }
      if (m.tag().kind() == RootKind::A1 && m.r() == 1) {
        const Matrix z = oracle::naive_root_action(m, 0, 1) - Matrix::identity(m.field(), m.dim());
        t.expect(norm == jordan_oracle(z, m.p()).free, where + ": norm vs Jordan type");
      }
    });
  };
  for (Cell c : kA1Cells) {
    const FieldPtr f = build_field(c.p, c.r);
    const auto a = line_algebra(c.p, c.r, f);
    for (const auto& [name, m] : a1_family(f, c))
      cross("A1 p" + std::to_string(c.p) + "r" + std::to_string(c.r) + " " + name, m, a);
  }
  for (Cell c : kA2Cells) {
    const FieldPtr f = build_field(c.p, c.r);
    const auto a = heisenberg_algebra(c.p, c.r, f);
    const auto reg = regular_module(a);
    const std::string key = "A2 p" + std::to_string(c.p) + "r" + std::to_string(c.r);
    cross(key + " trivial", trivial_module(f, a.tag(), c.r), a);
    cross(key + " regular", reg, a);
    cross(key + " regular+regular", direct_sum(reg, reg), a);
  }
  return t;
}

// ---- 7: negative controls -------------------------------------------------------

Tally negative_criterion() {
  Tally t;
  for (Cell c : kA1Cells) {
    const FieldPtr f = build_field(c.p, c.r);
    const std::string key = "A1 p" + std::to_string(c.p) + "r" + std::to_string(c.r);
    t.guarded(key, [&] {
      const auto a = line_algebra(c.p, c.r, f);
      const auto triv = trivial_module(f, a.tag(), c.r);
      t.expect(!norm_rank_test(triv, enumerate_group(a)).free(), key + ": trivial free over kU(F_q)");
      t.expect(!hyperalgebra_free_test(triv, a).free(), key + ": trivial free over Dist(U_r)");
      t.expect(!extract_weight_basis(triv, a).ok, key + ": trivial has a weight basis");
      t.expect(!never_projective_check(triv, std::max<std::uint32_t>(c.r, 2)).report.free(),
               key + ": trivial projective over u(sl2^r)");
      // Corrupted identity operator.
      const auto st = steinberg(f, c.p, c.r);
      std::vector<Matrix> ops(st.ops(0).begin(), st.ops(0).end());
      ops[0](0, 0) = 0;
      const RationalModule bad(f, st.tag(), c.r, st.weights(), {ops}, true, "corrupted");
      const auto rep = validate(bad);
      t.expect(!rep.all_passed() && !rep.get("identity").passed && !rep.get("identity").witness.empty(),
               key + ": corrupted module accepted");
    });
  }
  for (Cell c : kA2Cells) {
    const FieldPtr f = build_field(c.p, c.r);
    const std::string key = "A2 p" + std::to_string(c.p) + "r" + std::to_string(c.r);
    t.guarded(key, [&] {
      const auto a = heisenberg_algebra(c.p, c.r, f);
      const auto triv = trivial_module(f, a.tag(), c.r);
      t.expect(!norm_rank_test(triv, enumerate_group(a)).free(), key + ": trivial free over kU(F_q)");
      t.expect(!hyperalgebra_free_test(triv, a).free(), key + ": trivial free over Dist(U_r)");
      const auto reg = regular_module(a);
      std::vector<std::vector<Matrix>> ops(3);
      for (std::size_t root = 0; root < 3; ++root) ops[root].assign(reg.ops(root).begin(), reg.ops(root).end());
      ops[0][0](1, 1) = 0;
      const RationalModule bad(f, reg.tag(), c.r, reg.weights(), ops, true, "corrupted");
      const auto rep = validate(bad);
      t.expect(!rep.get("identity").passed && !rep.get("identity").witness.empty(), key + ": corrupted module accepted");
    });
  }
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    const char* description;
    std::function<Tally()> run;
    double time_limit_s;
  };
  const std::vector<Criterion> criteria{
      {"span of y-operators equals span of F_q-points, change of basis is Vandermonde", lemma_criterion, 10.0},
      {"weight bases convert to exact U(F_q) basis certificates", borel_criterion, 30.0},
      {"pullback along t - t^q is Dist(U_r)-free but not kU(F_q)-projective", counterexample_criterion, 0.0},
      {"z = (0, e) acts as zero and no module is projective over u(sl2^2)", section3_criterion, 0.0},
      {"hyperalgebra, group and field structure laws", structure_criterion, 0.0},
      {"projectivity criteria agree with independent oracles", oracle_criterion, 0.0},
      {"negative controls are rejected", negative_criterion, 0.0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Tally t = criteria[i].run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = criteria[i].time_limit_s <= 0 || secs < criteria[i].time_limit_s;
    if (!in_time) t.expect(false, "runtime limit exceeded");
    const bool ok = t.ok();
    failed += ok ? 0 : 1;
    std::printf("criterion %zu: %s %s (%zu checks, %.2fs)\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].description,
                t.checks(), secs);
    for (std::size_t k = 0; k < t.failures().size() && k < 5; ++k) std::printf("    %s\n", t.failures()[k].c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
