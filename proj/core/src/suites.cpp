#include "hypercert/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "hypercert/errors.hpp"
#include "hypercert/field.hpp"
#include "hypercert/hyperalgebra.hpp"
#include "hypercert/projectivity.hpp"
#include "hypercert/rational_module.hpp"
#include "hypercert/restricted_lie.hpp"
#include "hypercert/unipotent_group.hpp"

namespace hypercert {

namespace {

constexpr const char* kLemma = "Lemma: span of y-operators equals span of x(a), a in F_q";
constexpr const char* kBorel = "Theorem: a Dist(U_r)-weight basis generates M over kU(F_q)";
constexpr const char* kOracle = "Agreement of projectivity criteria";
constexpr const char* kCounter = "Example: pullback along t - t^q is Dist(U_r)-free but U(F_q)-trivial";
constexpr const char* kSection3 = "Theorem: no nonzero rational module is projective over u(sl2^r), r >= 2";
constexpr const char* kStructure = "Structure of Dist(U_r), U(F_q) and rational modules";
constexpr const char* kNegative = "Negative controls";

const std::vector<std::pair<std::string, Target>>& target_names() {
  static const std::vector<std::pair<std::string, Target>> names = {
      {"lemma-span", Target::LemmaSpan},     {"borel-basis", Target::BorelBasis}, {"counterexample", Target::Counterexample},
      {"section3", Target::Section3},        {"algebra-laws", Target::AlgebraLaws}, {"all", Target::All}};
  return names;
}

std::uint32_t ipow(std::uint32_t p, std::uint32_t e) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    v *= p;
    if (v > kMaxFieldOrder) return static_cast<std::uint32_t>(kMaxFieldOrder + 1);
  }
  return static_cast<std::uint32_t>(v);
}

std::string cell_key(const SweepCell& c) {
  return (c.tag.kind() == RootKind::A1 ? "A1" : "A2") + std::string("/p") + std::to_string(c.p) + "r" +
         std::to_string(c.r);
}

std::string yes(bool b) { return b ? "true" : "false"; }

bool wants(const SweepConfig& cfg, const std::string& family) {
  return std::find(cfg.families.begin(), cfg.families.end(), family) != cfg.families.end();
}

struct Named {
  std::string name;
  RationalModule module;
};

struct Context {
  SweepCell cell;
  std::string key;
  FieldPtr field;
  std::uint32_t q;
  TruncatedHyperalgebra algebra;
  GroupTable group;
};

TruncatedHyperalgebra build_algebra(const SweepCell& c, const FieldPtr& f) {
  return c.tag.kind() == RootKind::A1 ? line_algebra(c.p, c.r, f) : heisenberg_algebra(c.p, c.r, f);
}

Context make_context(const SweepCell& c, std::uint32_t ext) {
  FieldPtr f = build_field(c.p, c.r * ext);
  TruncatedHyperalgebra a = build_algebra(c, f);
  GroupTable g = enumerate_group(a);
  return Context{c, cell_key(c), f, ipow(c.p, c.r), std::move(a), std::move(g)};
}

enum class Purpose { Lemma, Borel, Section3, Laws };

std::vector<Named> modules_for(const Context& ctx, const SweepConfig& cfg, Purpose purpose) {
  std::vector<Named> out;
  auto add = [&](std::string name, RationalModule m) { out.push_back({name, m.renamed(name)}); };
  const auto& f = ctx.field;
  const std::uint32_t r = ctx.cell.r, q = ctx.q;
  if (ctx.cell.tag.kind() == RootKind::A2Unipotent) {
    if (purpose != Purpose::Borel) add("trivial", trivial_module(f, ctx.cell.tag, r));
    if (wants(cfg, "regular") || wants(cfg, "direct_sums")) {
      const RationalModule reg = regular_module(ctx.algebra);
      if (wants(cfg, "regular")) add("regular", reg);
      if (wants(cfg, "direct_sums")) add("regular+regular", direct_sum(reg, reg));
    }
    return out;
  }
  const bool borel = purpose == Purpose::Borel;
  if (!borel) add("trivial", trivial_module(f, ctx.cell.tag, r));
  if (!borel && wants(cfg, "natural")) add("natural", natural_sl2(f, r));
  if (!borel && wants(cfg, "sym"))
    for (std::uint32_t d = 0; d <= 2 * q - 2; ++d) add("sym" + std::to_string(d), sym_power(f, r, d));
  const RationalModule st = steinberg(f, ctx.cell.p, r);
  if (wants(cfg, "steinberg")) add("steinberg", st);
  std::optional<RationalModule> reg;
  if (wants(cfg, "regular") || (borel && wants(cfg, "direct_sums"))) reg = regular_module(ctx.algebra);
  if (wants(cfg, "regular")) add("regular", *reg);
  if (!borel && wants(cfg, "pullback"))
    add("pullback", pullback_additive(st, AdditivePolynomial::lang_type(f, q)));
  if (wants(cfg, "direct_sums")) {
    if (borel || purpose == Purpose::Section3) add("steinberg+steinberg", direct_sum(st, st));
    if (borel) add("regular+regular", direct_sum(*reg, *reg));
    if (purpose == Purpose::Lemma || purpose == Purpose::Laws)
      for (std::uint32_t d = 0; d <= 2 * q - 2; ++d)
        add("steinberg+sym" + std::to_string(d), direct_sum(st, sym_power(f, r, d)));
  }
  return out;
}

class Recorder {
public:
  explicit Recorder(Report& r) : report_(r) {}

  void add(std::string id, const char* anchor, bool passed, Evidence ev, std::string witness = {}) {
    if (passed) witness.clear();
    else if (witness.empty()) witness = "check failed";
    report_.checks.push_back({std::move(id), anchor, passed, std::move(ev), std::move(witness)});
  }

  // Runs body; an exception becomes a failing check carrying its message.
  void guarded(const std::string& id, const char* anchor, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(id, anchor, false, {}, std::string("exception: ") + e.what());
    }
  }

private:
  Report& report_;
};

std::string blocks_label(const std::vector<std::pair<std::size_t, std::size_t>>& blocks) {
  std::string s;
  for (const auto& [size, count] : blocks) s += (s.empty() ? "" : ",") + std::to_string(count) + "x" + std::to_string(size);
  return s.empty() ? "none" : s;
}

// ---- suites ---------------------------------------------------------------

void lemma_suite(const Context& ctx, const SweepConfig& cfg, Recorder& rec) {
  for (const auto& [name, m] : modules_for(ctx, cfg, Purpose::Lemma)) {
    for (std::size_t root = 0; root < m.tag().num_roots(); ++root) {
      const std::string id = "lemma-span/" + ctx.key + "/" + name + "/" + m.tag().negative_roots()[root];
      rec.guarded(id, kLemma, [&] {
        const SpanLemmaReport r = span_equality_lemma(m, root);
        rec.add(id, kLemma, r.ok(),
                {{"dim", std::to_string(m.dim())},
                 {"y_span_dim", std::to_string(r.y_span_dim)},
                 {"x_span_dim", std::to_string(r.x_span_dim)},
                 {"spans_equal", yes(r.spans_equal)},
                 {"change_of_basis", r.unique_change_of_basis ? "solved, equals Vandermonde"
                                                              : "Vandermonde is a solution (y-operators dependent)"}},
                r.witness);
      });
    }
  }
}

void borel_suite(const Context& ctx, const SweepConfig& cfg, Recorder& rec) {
  const auto& a = ctx.algebra;
  for (const auto& [name, m] : modules_for(ctx, cfg, Purpose::Borel)) {
    const std::string base = "borel-basis/" + ctx.key + "/" + name;
    rec.guarded(base, kBorel, [&] {
      const std::size_t s = m.dim() / a.dim();
      const ValidationReport val = validate(m, {cfg.seed});
      const ProjectivityReport hyp = hyperalgebra_free_test(m, a);
      const WeightBasisResult wb = extract_weight_basis(m, a);
      Evidence ev{{"dim", std::to_string(m.dim())},
                  {"expected_rank", std::to_string(s)},
                  {"valid_module", yes(val.all_passed())},
                  {"dist_verdict", hyp.free() ? "free of rank " + std::to_string(hyp.required_rank) : "not projective"},
                  {"generators", std::to_string(wb.generators.size())}};
      std::string span_dims;
      for (auto d : wb.span_dims) span_dims += (span_dims.empty() ? "" : ",") + std::to_string(d);
      ev.emplace_back("span_dims", span_dims);
      if (!val.all_passed() || !hyp.free() || !wb.ok || wb.generators.size() != s) {
        rec.add(base + "/weight-basis", kBorel, false, ev,
                wb.ok ? "module not free of the expected rank over Dist(U_r)" : wb.failure);
        return;
      }
      rec.add(base + "/weight-basis", kBorel, true, ev);

      const BasisCertificate cert = basis_conversion(m, a, ctx.group, wb.generators);
      const CertificateCheck chk = evaluate_certificate(m, ctx.group, cert);
      rec.add(base + "/certificate", kBorel, chk.ok,
              {{"rows", std::to_string(cert.expressions.rows())},
               {"cols", std::to_string(cert.expressions.cols())},
               {"weights_processed", std::to_string(cert.weight_order.size())},
               {"reevaluates_exactly", yes(chk.ok)}},
              chk.failing_row ? "row " + std::to_string(*chk.failing_row) + " does not re-evaluate" : "");

      const bool direct = direct_group_basis_check(m, wb.generators, ctx.group);
      const ProjectivityReport nr = norm_rank_test(m, ctx.group);
      rec.add(base + "/group-basis", kBorel, direct && nr.free(),
              {{"translate_rank_is_dim", yes(direct)},
               {"norm_rank", std::to_string(nr.criterion_rank)},
               {"group_verdict", nr.free() ? "free of rank " + std::to_string(nr.required_rank) : "not projective"}},
              "translates of the weight basis do not span M, or the norm rank is short");
    });
  }
}

// Criteria cross-checks over every module of the cell, free or not.
void oracle_suite(const Context& ctx, const SweepConfig& cfg, Recorder& rec) {
  const auto& a = ctx.algebra;
  const bool cyclic = ctx.cell.tag.kind() == RootKind::A1 && ctx.cell.r == 1;
  auto mods = modules_for(ctx, cfg, Purpose::Laws);
  for (auto& extra : modules_for(ctx, cfg, Purpose::Borel))
    if (std::none_of(mods.begin(), mods.end(), [&](const Named& n) { return n.name == extra.name; }))
      mods.push_back(std::move(extra));
  for (const auto& [name, m] : mods) {
    const std::string base = "oracles/" + ctx.key + "/" + name;
    rec.guarded(base, kOracle, [&] {
      const ProjectivityReport nr = norm_rank_test(m, ctx.group);
      const ProjectivityReport hyp = hyperalgebra_free_test(m, a);
      std::optional<std::vector<std::size_t>> candidate;
      if (m.has_weights()) {
        const WeightBasisResult wb = extract_weight_basis(m, a);
        if (wb.generators.size() * ctx.group.order() == m.dim()) candidate = wb.generators;
      } else if (m.dim() % ctx.group.order() == 0) {
        candidate.emplace();
        for (std::size_t i = 0; i < m.dim() / ctx.group.order(); ++i) candidate->push_back(i);
      }
      if (candidate) {
        const bool direct = direct_group_basis_check(m, *candidate, ctx.group);
        rec.add(base + "/norm-vs-direct", kOracle, direct == nr.free(),
                {{"norm_verdict", to_string(nr.verdict)}, {"direct_basis", yes(direct)}},
                "norm-rank and direct-basis criteria disagree");
      }
      if (cyclic) {
        const Matrix z = group_element_action(m, 0, FieldElement(m.field(), 1)) - Matrix::identity(m.field(), m.dim());
        const JordanReport jr = jordan_oracle(z, ctx.cell.p);
        rec.add(base + "/norm-vs-jordan", kOracle, jr.free == nr.free() && jr.cross_check_ok,
                {{"norm_verdict", to_string(nr.verdict)},
                 {"jordan_blocks", blocks_label(jr.blocks)},
                 {"jordan_free", yes(jr.free)}},
                "norm-rank and Jordan-type criteria disagree");
      }
      if (m.has_weights() && hyp.free())
        rec.add(base + "/dist-free-implies-group-free", kOracle, nr.free(),
                {{"dist_verdict", to_string(hyp.verdict)}, {"group_verdict", to_string(nr.verdict)}},
                "free over Dist(U_r) with weights but not free over kU(F_q)");
    });
  }
}

void counterexample_suite(const Context& ctx, const SweepConfig& cfg, Recorder& rec) {
  const std::string base = "counterexample/" + ctx.key;
  const auto& f = ctx.field;
  const std::uint32_t q = ctx.q;
  rec.guarded(base, kCounter, [&] {
    const RationalModule st = steinberg(f, ctx.cell.p, ctx.cell.r);
    const RationalModule m = pullback_additive(st, AdditivePolynomial::lang_type(f, q));

    bool trivial = true;
    std::string bad;
    for (auto a : f->subfield_elements(q))
      if (!group_element_action(m, 0, FieldElement(f, a)).is_identity()) {
        trivial = false;
        bad = "x(" + std::to_string(a) + ") is not the identity";
        break;
      }
    rec.add(base + "/a-trivial-on-Fq", kCounter, trivial, {{"points", std::to_string(q)}}, bad);

    bool same = true;
    for (std::uint32_t n = 0; n < q && same; ++n)
      if (!(m.op(0, n) == st.op(0, n))) {
        same = false;
        bad = "A'_" + std::to_string(n) + " differs from A_" + std::to_string(n);
      }
    rec.add(base + "/b-same-low-operators", kCounter, same, {{"operators_compared", std::to_string(q)}}, bad);

    const ProjectivityReport hyp = hyperalgebra_free_test(m, ctx.algebra);
    rec.add(base + "/c-free-over-Dist", kCounter, hyp.free() && hyp.required_rank == 1, to_evidence(hyp),
            "expected free of rank 1 over Dist(U_r)");

    const ProjectivityReport nr = norm_rank_test(m, ctx.group);
    const bool direct = direct_group_basis_check(m, {0}, ctx.group);
    Evidence ev = to_evidence(nr);
    ev.emplace_back("single_generator_spans", yes(direct));
    rec.add(base + "/d-not-projective-over-group", kCounter, !nr.free() && nr.criterion_rank == 0 && !direct, ev,
            "expected norm 0 and no generating translate set");

    const std::uint32_t s = std::max<std::uint32_t>(cfg.ext_degree, 2);
    const FieldPtr big = build_field(ctx.cell.p, ctx.cell.r * s);
    const RationalModule mb = pullback_additive(steinberg(big, ctx.cell.p, ctx.cell.r),
                                                AdditivePolynomial::lang_type(big, q));
    std::optional<elem_t> witness;
    for (auto a : big->elements()) {
      if (big->pow(a, q) == a) continue;
      if (!group_element_action(mb, 0, FieldElement(big, a)).is_identity()) {
        witness = a;
        break;
      }
    }
    rec.add(base + "/e-nontrivial-over-extension", kCounter, witness.has_value(),
            {{"field", big->name()}, {"nontrivial_point", witness ? std::to_string(*witness) : "none"}},
            "every point of the extension field acts trivially");
  });
}

void section3_suite(const SweepCell& cell, const SweepConfig& cfg, Recorder& rec) {
  const Context ctx = make_context(cell, cfg.ext_degree);
  const std::string base = "section3/" + ctx.key;
  rec.guarded(base + "/first-factor", kSection3, [&] {
    const RationalModule nat = natural_sl2(ctx.field, cell.r);
    const Matrix e = sl2_root_vector(ctx.field);
    const bool slot0 = first_projection_action(nat, {cell.r, 0, e}) == nat.op(0, 1);
    const bool slot1 = first_projection_action(nat, {cell.r, 1, e}).is_zero();
    rec.add(base + "/first-factor", kSection3, slot0 && slot1,
            {{"slot0_is_A1", yes(slot0)}, {"slot1_is_zero", yes(slot1)}}, "first-factor convention violated");
  });
  for (const auto& [name, m] : modules_for(ctx, cfg, Purpose::Section3)) {
    const std::string id = base + "/" + name;
    rec.guarded(id, kSection3, [&] {
      const NeverProjectiveResult res = never_projective_check(m, cell.r);
      const bool blocks_ok = res.jordan.blocks.size() == 1 && res.jordan.blocks[0].first == 1 &&
                             res.jordan.blocks[0].second == m.dim();
      Evidence ev = to_evidence(res.report);
      ev.emplace_back("jordan_cross_check", yes(res.jordan.cross_check_ok));
      rec.add(id, kSection3,
              res.z_p_power_zero && res.z_acts_as_zero && !res.report.free() && blocks_ok && res.jordan.cross_check_ok,
              ev, "z acts nontrivially, z^[p] != 0, or the Jordan type is not all 1-blocks");
    });
  }
}

void laws_suite(const Context& ctx, const SweepConfig& cfg, Recorder& rec) {
  const std::string base = "algebra-laws/" + ctx.key;
  const auto& a = ctx.algebra;
  const FieldPtr& f = ctx.field;

  rec.guarded(base + "/field", kStructure, [&] {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<elem_t> pick(0, f->order() - 1);
    std::size_t cases = 0;
    std::string bad;
    for (; cases < 1000 && bad.empty(); ++cases) {
      const elem_t x = pick(rng), y = pick(rng), z = pick(rng);
      if (f->add(f->add(x, y), z) != f->add(x, f->add(y, z))) bad = "addition not associative";
      else if (f->mul(f->mul(x, y), z) != f->mul(x, f->mul(y, z))) bad = "multiplication not associative";
      else if (f->mul(x, f->add(y, z)) != f->add(f->mul(x, y), f->mul(x, z))) bad = "not distributive";
      else if (f->add(x, y) != f->add(y, x) || f->mul(x, y) != f->mul(y, x)) bad = "not commutative";
      else if (f->add(x, f->neg(x)) != 0) bad = "negation fails";
      else if (x != 0 && f->mul(x, f->inv(x)) != 1) bad = "inverse fails";
      if (!bad.empty()) bad += " at (" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
    }
    const bool sub_ok = f->subfield_elements(ctx.q).size() == ctx.q;
    rec.add(base + "/field", kStructure, bad.empty() && sub_ok,
            {{"field", f->name()}, {"random_cases", std::to_string(cases)}, {"subfield_Fq", yes(sub_ok)}}, bad);
  });

  rec.guarded(base + "/associativity", kStructure, [&] {
    const AssociativityReport r = check_associativity(a, cfg.seed, 10000, 64);
    std::string w;
    if (r.counterexample)
      w = "triple (" + std::to_string((*r.counterexample)[0]) + "," + std::to_string((*r.counterexample)[1]) + "," +
          std::to_string((*r.counterexample)[2]) + ")";
    rec.add(base + "/associativity", kStructure, r.ok,
            {{"dim", std::to_string(a.dim())},
             {"mode", r.exhaustive ? "exhaustive" : "random"},
             {"triples", std::to_string(r.triples_checked)}},
            w);
  });

  rec.guarded(base + "/truncation", kStructure, [&] {
    const TruncationReport r = check_truncation(a);
    rec.add(base + "/truncation", kStructure, r.violations == 0,
            {{"overflowing_pairs", std::to_string(r.overflowing_pairs)}, {"violations", std::to_string(r.violations)}},
            std::to_string(r.violations) + " products leave the truncation with nonzero coefficient");
  });

  rec.guarded(base + "/socle", kStructure, [&] {
    const SocleWitness s = socle(a);
    const bool top = std::count_if(s.vector.begin(), s.vector.end(), [](elem_t x) { return x != 0; }) == 1 &&
                     s.vector[a.top_index()] != 0;
    rec.add(base + "/socle", kStructure, s.verified,
            {{"socle_dim", "1"}, {"verified", yes(s.verified)}, {"spanned_by_top_monomial", yes(top)}},
            "socle witness not annihilated by the augmentation ideal");
  });

  rec.guarded(base + "/group", kStructure, [&] {
    const auto& g = ctx.group;
    if (g.order() > 256) {
      rec.add(base + "/group", kStructure, true, {{"order", std::to_string(g.order())}, {"mode", "skipped (large)"}});
      return;
    }
    const GroupAxiomReport r = check_group_axioms(g);
    rec.add(base + "/group", kStructure, r.ok(),
            {{"order", std::to_string(g.order())},
             {"commutator_sign", std::to_string(g.law().commutator_sign())},
             {"exponent", std::to_string(r.exponent)},
             {"p_group", yes(r.p_group)}},
            "group axioms fail");
  });

  for (const auto& [name, m] : modules_for(ctx, cfg, Purpose::Laws)) {
    const std::string id = base + "/module/" + name;
    rec.guarded(id, kStructure, [&] {
      ValidationOptions opts;
      opts.seed = cfg.seed;
      const ValidationReport v = validate(m, opts);
      const HomomorphismReport h = check_group_homomorphism(m, ctx.group, cfg.seed);
      Evidence ev{{"dim", std::to_string(m.dim())}};
      std::string w;
      for (const auto& c : v.checks) {
        ev.emplace_back(c.invariant, c.vacuous ? "vacuous" : c.passed ? (c.exhaustive ? "exhaustive" : "sampled") : "FAILED");
        if (!c.passed && w.empty()) w = c.invariant + ": " + c.witness;
      }
      ev.emplace_back("group_homomorphism", h.ok ? (h.exhaustive ? "exhaustive" : "sampled") : "FAILED");
      if (!h.ok && w.empty() && h.counterexample)
        w = "rho(g)rho(h) != rho(gh) at (" + std::to_string(h.counterexample->first) + "," +
            std::to_string(h.counterexample->second) + ")";
      rec.add(id, kStructure, v.all_passed() && h.ok, ev, w);
    });
  }

  // Negative controls.
  rec.guarded(base + "/negative/trivial", kNegative, [&] {
    const RationalModule t = trivial_module(f, ctx.cell.tag, ctx.cell.r);
    const bool hyp = hyperalgebra_free_test(t, a).free();
    const bool grp = norm_rank_test(t, ctx.group).free();
    const bool basis = extract_weight_basis(t, a).ok;
    Evidence ev{{"dist_free", yes(hyp)}, {"group_free", yes(grp)}, {"weight_basis", yes(basis)}};
    bool jordan = false;
    if (ctx.cell.tag.kind() == RootKind::A1 && ctx.cell.r == 1) {
      jordan = jordan_oracle(Matrix::zero(f, 1, 1), ctx.cell.p).free;
      ev.emplace_back("jordan_free", yes(jordan));
    }
    rec.add(base + "/negative/trivial", kNegative, !hyp && !grp && !basis && !jordan, ev,
            "the trivial module passed a projectivity test");
  });
  rec.guarded(base + "/negative/corrupted", kNegative, [&] {
    const RationalModule good =
        ctx.cell.tag.kind() == RootKind::A1 ? steinberg(f, ctx.cell.p, ctx.cell.r) : regular_module(a);
    std::vector<std::vector<Matrix>> ops;
    for (std::size_t j = 0; j < good.tag().num_roots(); ++j) ops.emplace_back(good.ops(j).begin(), good.ops(j).end());
    ops[0][0] = Matrix::zero(f, good.dim(), good.dim());
    const RationalModule bad(f, good.tag(), good.r(), good.weights(), ops, true, "corrupted");
    const ValidationReport v = validate(bad);
    const auto& id = v.get("identity");
    rec.add(base + "/negative/corrupted", kNegative, !v.all_passed() && !id.passed && !id.witness.empty(),
            {{"identity_check", id.passed ? "passed" : "rejected"}, {"witness", id.witness}},
            "corrupted module accepted by validate");
  });
}

std::string join_cells(const std::vector<SweepCell>& cells) {
  std::string s;
  for (const auto& c : cells) s += (s.empty() ? "" : " ") + cell_key(c);
  return s;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s;
}

// The restricted Lie suite needs r >= 2: each A1 cell is lifted to max(r, 2); the
// requested r is kept so r < 2 requests can check the hypothesis is enforced.
std::vector<std::pair<SweepCell, std::uint32_t>> section3_cells(const SweepConfig& cfg) {
  std::vector<std::pair<SweepCell, std::uint32_t>> out;
  for (const auto& c : cfg.cells) {
    if (c.tag.kind() != RootKind::A1) continue;
    SweepCell lifted = c;
    lifted.r = std::max<std::uint32_t>(c.r, 2);
    out.emplace_back(lifted, c.r);
  }
  return out;
}

Evidence config_evidence(const SweepConfig& cfg) {
  return {{"cells", join_cells(cfg.cells)},
          {"families", join(cfg.families)},
          {"ext_degree", std::to_string(cfg.ext_degree)},
          {"seed", std::to_string(cfg.seed)},
          {"size_guard", cfg.override_size_guard ? "overridden" : std::to_string(kDefaultSizeGuard)}};
}

void run_target(Target t, const SweepConfig& cfg, Recorder& rec) {
  if (t == Target::Section3) {
    std::set<std::pair<std::uint32_t, std::uint32_t>> done;
    for (const auto& [cell, requested] : section3_cells(cfg)) {
      if (requested < 2) {
        const FieldPtr f = build_field(cell.p, cell.r * cfg.ext_degree);
        const std::string id = "section3/A1/p" + std::to_string(cell.p) + "r" + std::to_string(requested) + "/hypothesis";
        bool rejected = false;
        try {
          never_projective_check(natural_sl2(f, cell.r), requested);
        } catch (const std::invalid_argument&) {
          rejected = true;
        }
        rec.add(id, kSection3, rejected,
                {{"requested_r", std::to_string(requested)}, {"runs_at_r", std::to_string(cell.r)}},
                "r < 2 was not rejected");
      }
      if (done.insert({cell.p, cell.r}).second) section3_suite(cell, cfg, rec);
    }
    return;
  }
  for (const auto& cell : cfg.cells) {
    if (t == Target::Counterexample && cell.tag.kind() != RootKind::A1) continue;
    std::optional<Context> ctx;
    rec.guarded(to_string(t) + "/" + cell_key(cell) + "/setup", kStructure,
                [&] { ctx.emplace(make_context(cell, cfg.ext_degree)); });
    if (!ctx) continue;
    switch (t) {
      case Target::LemmaSpan: lemma_suite(*ctx, cfg, rec); break;
      case Target::BorelBasis:
        borel_suite(*ctx, cfg, rec);
        oracle_suite(*ctx, cfg, rec);
        break;
      case Target::Counterexample: counterexample_suite(*ctx, cfg, rec); break;
      case Target::AlgebraLaws: laws_suite(*ctx, cfg, rec); break;
      default: break;
    }
  }
}

std::size_t cell_largest(const SweepCell& c, Target t) {
  const std::size_t q = ipow(c.p, c.r);
  if (c.tag.kind() == RootKind::A2Unipotent) return 2 * q * q * q;
  std::size_t m = 3 * q - 1;  // steinberg + sym(2q-2)
  if (t == Target::Section3 || t == Target::All) {
    const std::size_t q2 = ipow(c.p, std::max<std::uint32_t>(c.r, 2));
    m = std::max(m, 2 * q2 - 1);
  }
  return m;
}

}  // namespace

std::optional<Target> parse_target(std::string_view name) {
  for (const auto& [n, t] : target_names())
    if (n == name) return t;
  return std::nullopt;
}

std::string to_string(Target t) {
  for (const auto& [n, x] : target_names())
    if (x == t) return n;
  return "?";
}

const std::vector<std::string>& all_families() {
  static const std::vector<std::string> f = {"natural", "sym", "steinberg", "regular", "pullback", "direct_sums"};
  return f;
}

SweepConfig default_config() {
  SweepConfig c;
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}})
    c.cells.push_back({RootSystemTag::a1(), p, r});
  for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}})
    c.cells.push_back({RootSystemTag::a2_unipotent(), p, r});
  c.families = all_families();
  return c;
}

SweepConfig make_config(const std::vector<std::string>& tags, const std::vector<std::uint32_t>& p_values,
                        const std::vector<std::uint32_t>& r_values, const std::vector<std::string>& families) {
  std::vector<RootSystemTag> tag_list;
  for (const auto& t : tags) {
    try {
      const RootSystemTag tag = RootSystemTag::from_name(t);
      if (std::none_of(tag_list.begin(), tag_list.end(), [&](const auto& x) { return x == tag; }))
        tag_list.push_back(tag);
    } catch (const std::exception&) {
      throw ConfigError("unknown tag '" + t + "' (expected A1 or A2_unipotent)");
    }
  }
  SweepConfig c = default_config();
  if (p_values.empty() && r_values.empty()) {
    if (!tag_list.empty())
      std::erase_if(c.cells, [&](const SweepCell& cell) {
        return std::none_of(tag_list.begin(), tag_list.end(), [&](const auto& t) { return t == cell.tag; });
      });
  } else {
    if (tag_list.empty()) tag_list.push_back(RootSystemTag::a1());
    const std::vector<std::uint32_t> ps = p_values.empty() ? std::vector<std::uint32_t>{2, 3, 5} : p_values;
    const std::vector<std::uint32_t> rs = r_values.empty() ? std::vector<std::uint32_t>{1} : r_values;
    c.cells.clear();
    for (const auto& t : tag_list)
      for (auto p : ps)
        for (auto r : rs) c.cells.push_back({t, p, r});
  }
  if (!families.empty()) {
    c.families.clear();
    for (const auto& f : families) {
      if (std::find(all_families().begin(), all_families().end(), f) == all_families().end())
        throw ConfigError("unknown module family '" + f + "'");
      if (!wants(c, f)) c.families.push_back(f);
    }
  }
  return c;
}

std::size_t largest_object_dim(const SweepConfig& config) {
  std::size_t m = 0;
  for (const auto& c : config.cells) m = std::max(m, cell_largest(c, Target::All));
  return m;
}

namespace {

void validate_for(const SweepConfig& config, Target t) {
  if (config.cells.empty()) throw ConfigError("empty sweep");
  if (config.ext_degree < 1) throw ConfigError("extension degree must be at least 1");
  for (const auto& f : config.families)
    if (std::find(all_families().begin(), all_families().end(), f) == all_families().end())
      throw ConfigError("unknown module family '" + f + "'");
  std::size_t largest = 0;
  for (const auto& c : config.cells) {
    if (!is_prime(c.p)) throw ConfigError("p = " + std::to_string(c.p) + " is not prime");
    if (c.r < 1) throw ConfigError("r must be at least 1");
    std::uint32_t deg = c.r * config.ext_degree;
    if (c.tag.kind() == RootKind::A1) {
      if (t == Target::Counterexample || t == Target::All) deg = c.r * std::max<std::uint32_t>(config.ext_degree, 2);
      if (t == Target::Section3 || t == Target::All)
        deg = std::max(deg, std::max<std::uint32_t>(c.r, 2) * config.ext_degree);
    }
    if (ipow(c.p, deg) > kMaxFieldOrder)
      throw ConfigError("field GF(" + std::to_string(c.p) + "^" + std::to_string(deg) + ") is too large");
    largest = std::max(largest, cell_largest(c, t));
  }
  if (!config.override_size_guard && largest > kDefaultSizeGuard)
    throw ConfigError("largest object has dimension " + std::to_string(largest) + " > " +
                      std::to_string(kDefaultSizeGuard) + "; pass --override-size-guard to run anyway");
  const bool any_a1 = std::any_of(config.cells.begin(), config.cells.end(),
                                  [](const SweepCell& c) { return c.tag.kind() == RootKind::A1; });
  if ((t == Target::Counterexample || t == Target::Section3) && !any_a1)
    throw ConfigError(to_string(t) + " needs at least one A1 cell");
}

}  // namespace

void validate_config(const SweepConfig& config) { validate_for(config, Target::All); }

Report run_verify(Target target, const SweepConfig& config) {
  validate_for(config, target);
  Report report;
  report.target = to_string(target);
  report.config = config_evidence(config);
  Recorder rec(report);
  if (target == Target::All) {
    // Counterexample and Section3 skip A2 cells on their own.
    for (Target t : {Target::AlgebraLaws, Target::LemmaSpan, Target::BorelBasis, Target::Counterexample,
                     Target::Section3})
      run_target(t, config, rec);
  } else {
    run_target(target, config, rec);
  }
  return report;
}

Report check_module(const RationalModule& m, std::uint64_t seed) {
  Report report;
  report.target = "check-module";
  report.config = {{"module", m.name()},
                   {"tag", m.tag().name()},
                   {"field", m.field()->name()},
                   {"r", std::to_string(m.r())},
                   {"dim", std::to_string(m.dim())}};
  Recorder rec(report);
  const std::string base = "check-module/" + (m.name().empty() ? std::string("module") : m.name());
  ValidationOptions opts;
  opts.seed = seed;
  const ValidationReport v = validate(m, opts);
  for (const auto& c : v.checks)
    rec.add(base + "/" + c.invariant, kStructure, c.passed,
            {{"mode", c.vacuous ? "vacuous" : c.exhaustive ? "exhaustive" : "sampled"}, {"cases", std::to_string(c.cases)}},
            c.witness);
  if (!v.all_passed()) return report;
  rec.guarded(base + "/verdicts", kOracle, [&] {
    const FieldPtr f = m.field();
    const TruncatedHyperalgebra a = m.tag().kind() == RootKind::A1 ? line_algebra(m.p(), m.r(), f)
                                                                   : heisenberg_algebra(m.p(), m.r(), f);
    const GroupTable g = enumerate_group(a);
    const ProjectivityReport hyp = hyperalgebra_free_test(m, a);
    const ProjectivityReport nr = norm_rank_test(m, g);
    rec.add(base + "/verdicts", kOracle, true,
            {{"dist_verdict", hyp.free() ? "free of rank " + std::to_string(hyp.required_rank) : "not projective"},
             {"group_verdict", nr.free() ? "free of rank " + std::to_string(nr.required_rank) : "not projective"}});
  });
  return report;
}

int exit_status(const Report& report) { return report.all_passed() ? 0 : 1; }

}  // namespace hypercert
