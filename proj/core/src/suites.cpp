#include "gravfock/suites.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "gravfock/fock.h"
#include "gravfock/gravlimit.h"
#include "gravfock/kinematics.h"
#include "gravfock/lsz.h"
#include "gravfock/normal_order.h"
#include "gravfock/parser.h"
#include "gravfock/propagator.h"
#include "gravfock/toy_smatrix.h"

namespace gravfock {

namespace kin = kinematics;

namespace {

using cd = std::complex<double>;

constexpr int kRandomInstances = 100;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

struct Ctx {
  const RunConfig& cfg;
  std::string suite;
  std::vector<CaseResult>& out;
  std::mt19937_64 rng;

  std::string name(const std::string& n) const { return suite + "/" + n; }

  void exact(const std::string& n, const OperatorExpr& lhs, const OperatorExpr& rhs, const std::string& detail = {}) {
    const bool ok = lhs == rhs;
    out.push_back({name(n), ok, ok ? (detail.empty() ? "exact term equality" : detail) : "canonical forms differ",
                   to_string(lhs), to_string(rhs), std::nullopt});
  }

  void truth(const std::string& n, bool ok, const std::string& detail, std::string lhs = {}, std::string rhs = {}) {
    out.push_back({name(n), ok, detail, std::move(lhs), std::move(rhs), std::nullopt});
  }

  void numeric(const std::string& n, double residual, const std::string& what) {
    const bool ok = std::isfinite(residual) && residual <= cfg.tolerance;
    out.push_back({name(n), ok, what + ": max residual " + sci(residual), sci(residual), "0", cfg.tolerance});
  }

  /// Runs `f`; an escaping exception fails the case.
  void guarded(const std::string& n, const std::function<void()>& f) {
    try {
      f();
    } catch (const std::exception& e) {
      out.push_back({name(n), false, std::string("unexpected error: ") + e.what(), "", "", std::nullopt});
    }
  }

  /// Passes when `f` throws std::exception.
  void rejects(const std::string& n, const std::function<void()>& f, const std::string& what) {
    try {
      f();
    } catch (const std::exception& e) {
      out.push_back({name(n), true, what + " rejected: " + e.what(), "", "", std::nullopt});
      return;
    }
    out.push_back({name(n), false, what + " was accepted", "", "", std::nullopt});
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  Rational q(int lo, int hi) { return Rational(uniform(lo, hi), uniform(1, 3)); }
  RVec3 vec3() { return {q(-3, 3), q(-3, 3), q(-3, 3)}; }
  /// Timelike, future-pointing: K^0 exceeds the l1 norm of the spatial part.
  RVec4 timelike() {
    RVec3 s = vec3();
    Rational l1 = abs(s[0]) + abs(s[1]) + abs(s[2]);
    return {l1 + q(1, 4), s[0], s[1], s[2]};
  }
};

/// Aggregates a random family into one case.
struct Tally {
  int total{0};
  int failed{0};
  std::string first_lhs, first_rhs, first_detail;

  void record(bool ok, const std::string& lhs = {}, const std::string& rhs = {}, const std::string& detail = {}) {
    ++total;
    if (!ok && failed++ == 0) {
      first_lhs = lhs;
      first_rhs = rhs;
      first_detail = detail;
    }
  }
  void record(const OperatorExpr& lhs, const OperatorExpr& rhs) {
    const bool ok = lhs == rhs;
    record(ok, ok ? std::string() : to_string(lhs), ok ? std::string() : to_string(rhs));
  }
  void emit(Ctx& c, const std::string& n, const std::string& what) const {
    std::string detail = std::to_string(total - failed) + "/" + std::to_string(total) + " " + what;
    if (failed) detail += "; first failure " + first_detail;
    c.truth(n, failed == 0 && total > 0, detail, first_lhs, first_rhs);
  }
};

// ---------------------------------------------------------------------------
// Expected right-hand sides, written out factor by factor.

OperatorExpr N(const ComplexRational& c) { return OperatorExpr::number(c); }
OperatorExpr At(const Atom& a, int p = 1) { return OperatorExpr::atom(a, p); }

OperatorExpr contact_deltas(const MomentumLabel& k, const InnerLabel& big_k, const MomentumLabel& h,
                            const InnerLabel& big_h, int lambda) {
  return At(LambdaAtom{}, lambda) * At(TwoPiAtom{}, 7) * At(delta4(big_k, big_h)) * At(delta3(k, h));
}

OperatorExpr ccr_rhs(const MomentumLabel& k, const InnerLabel& big_k, const MomentumLabel& h, const InnerLabel& big_h) {
  return N(2) * At(OmegaAtom{k, MassTag::Scalar}) * contact_deltas(k, big_k, h, big_h, -4);
}

OperatorExpr car_rhs(const MomentumLabel& k, const Discrete& s, const InnerLabel& big_k, const MomentumLabel& h,
                     const Discrete& t, const InnerLabel& big_h) {
  return At(EnergyOverMassAtom{k}) * At(kronecker(s, t)) * contact_deltas(k, big_k, h, big_h, -4);
}

OperatorExpr gauge_rhs_without_metric(const MomentumLabel& k, const InnerLabel& big_k, const MomentumLabel& h,
                                      const InnerLabel& big_h) {
  return N(2) * At(OmegaAtom{k, MassTag::Gauge}) * contact_deltas(k, big_k, h, big_h, -2);
}

OperatorExpr gauge_rhs(const MomentumLabel& k, const Discrete& g, const InnerLabel& big_k, const Discrete& big_g,
                       const MomentumLabel& h, const Discrete& gp, const InnerLabel& big_h, const Discrete& big_gp) {
  return gauge_rhs_without_metric(k, big_k, h, big_h) * At(metric(g, gp, false)) * At(metric(big_g, big_gp, true));
}

OperatorExpr barred_scalar_rhs(const MomentumLabel& k, const MomentumLabel& h) {
  return N(2) * At(OmegaAtom{k, MassTag::Scalar}) * At(TwoPiAtom{}, 3) * At(delta3(k, h));
}
OperatorExpr barred_dirac_rhs(const MomentumLabel& k, const Discrete& s, const MomentumLabel& h, const Discrete& t) {
  return At(EnergyOverMassAtom{k}) * At(kronecker(s, t)) * At(TwoPiAtom{}, 3) * At(delta3(k, h));
}
OperatorExpr barred_gauge_rhs(const MomentumLabel& k, const Discrete& g, const Discrete& big_g, const MomentumLabel& h,
                   const Discrete& gp, const Discrete& big_gp) {
  return N(2) * At(OmegaAtom{k, MassTag::Gauge}) * At(metric(g, gp, false)) * At(metric(big_g, big_gp, true)) *
         At(LambdaAtom{}, 2) * At(TwoPiAtom{}, 3) * At(delta3(k, h));
}

OperatorExpr Op(const LadderOperator& o) { return OperatorExpr::op(o); }

const MomentumLabel k_ = MomentumLabel::symbol("k");
const MomentumLabel h_ = MomentumLabel::symbol("h");
const InnerLabel K_ = InnerLabel::symbol("K");
const InnerLabel H_ = InnerLabel::symbol("H");
const Discrete s_ = Discrete::symbol("s");
const Discrete t_ = Discrete::symbol("t");
const Discrete g_ = Discrete::symbol("g");
const Discrete gp_ = Discrete::symbol("gp");
const Discrete G_ = Discrete::symbol("G");
const Discrete Gp_ = Discrete::symbol("Gp");

LadderOperator scalar_op(const MomentumLabel& k, const InnerLabel& big_k, bool dag) {
  return LadderOperator::scalar(k, big_k, dag);
}
LadderOperator dirac_op(Species sp, const MomentumLabel& k, const Discrete& s, const InnerLabel& big_k, bool dag) {
  return LadderOperator::dirac(sp, k, s, big_k, dag);
}
LadderOperator gauge_op(const MomentumLabel& k, const Discrete& g, const InnerLabel& big_k, const Discrete& big_g, bool dag) {
  return LadderOperator::gauge(k, g, big_k, big_g, dag);
}

/// Random operator over a small pool of symbolic labels.
LadderOperator random_symbolic_op(Ctx& c, bool bosons_only = false) {
  const int idx = c.uniform(1, 3);
  const MomentumLabel k = MomentumLabel::symbol("k" + std::to_string(idx));
  const InnerLabel big_k = InnerLabel::symbol("K" + std::to_string(idx));
  const bool dag = c.uniform(0, 1) == 1;
  const int kind = bosons_only ? 2 * c.uniform(0, 1) : c.uniform(0, 3);
  switch (kind) {
    case 0: return scalar_op(k, big_k, dag);
    case 1: return dirac_op(Species::DiracParticle, k, Discrete::symbol("s" + std::to_string(c.uniform(1, 2))), big_k, dag);
    case 2:
      return gauge_op(k, Discrete::symbol("g" + std::to_string(c.uniform(1, 2))), big_k,
                      Discrete::symbol("G" + std::to_string(c.uniform(1, 2))), dag);
    default:
      return dirac_op(Species::DiracAntiparticle, k, Discrete::symbol("s" + std::to_string(c.uniform(1, 2))), big_k, dag);
  }
}

OperatorExpr random_word(Ctx& c, int max_len, bool bosons_only = false) {
  std::vector<LadderOperator> w;
  const int n = c.uniform(1, max_len);
  for (int i = 0; i < n; ++i) w.push_back(random_symbolic_op(c, bosons_only));
  return N(ComplexRational(Rational(c.uniform(1, 5)), Rational(c.uniform(-2, 2)))) * OperatorExpr::word(std::move(w));
}

/// Bound-label creator of a random species; gauge polarizations in the given ranges.
struct RandomQuantum {
  LadderOperator op;
  RVec4 big_k;
  MomentumLabel k;
  MassTag tag;
  int weight;  // eta^{gg} eta^{GG} for gauge quanta, 1 otherwise
};

RandomQuantum random_quantum(Ctx& c, int gamma_lo = 0) {
  const MomentumLabel k = MomentumLabel::bound(c.vec3());
  const RVec4 big_k = c.timelike();
  const InnerLabel bk = InnerLabel::bound(big_k);
  switch (c.uniform(0, 3)) {
    case 0: return {scalar_op(k, bk, true), big_k, k, MassTag::Scalar, 1};
    case 1: return {dirac_op(Species::DiracParticle, k, Discrete::bound(c.uniform(1, 2)), bk, true), big_k, k, MassTag::Dirac, 1};
    case 2: return {dirac_op(Species::DiracAntiparticle, k, Discrete::bound(c.uniform(1, 2)), bk, true), big_k, k, MassTag::Dirac, 1};
    default: {
      const int g = c.uniform(gamma_lo, 3);
      const int big_g = c.uniform(1, 3);
      const int w = static_cast<int>(kin::metric(g, g) * kin::metric(big_g, big_g));
      return {gauge_op(k, Discrete::bound(g), bk, Discrete::bound(big_g), true), big_k, k, MassTag::Gauge, w};
    }
  }
}

// ---------------------------------------------------------------------------

void suite_ccr(Ctx& c) {
  const auto a = Op(scalar_op(k_, K_, false));
  const auto ad = Op(scalar_op(k_, K_, true));
  const auto b = Op(scalar_op(h_, H_, false));
  const auto bd = Op(scalar_op(h_, H_, true));
  c.exact("bracket/[a,a']", commutator(a, bd), ccr_rhs(k_, K_, h_, H_));
  c.exact("bracket/[a',a]", commutator(ad, b), -ccr_rhs(h_, H_, k_, K_));
  c.exact("bracket/[a,a]", commutator(a, b), OperatorExpr());
  c.exact("bracket/[a',a']", commutator(ad, bd), OperatorExpr());
  c.exact("bracket/[a,a']_same_labels", commutator(a, ad), ccr_rhs(k_, K_, k_, K_));
  c.exact("bracket/[a,b']", commutator(a, Op(dirac_op(Species::DiracParticle, h_, t_, H_, true))), OperatorExpr());
  c.exact("bracket/[a,d]", commutator(a, Op(dirac_op(Species::DiracAntiparticle, h_, t_, H_, false))), OperatorExpr());
  c.exact("bracket/[a,A']", commutator(a, Op(gauge_op(h_, gp_, H_, Gp_, true))), OperatorExpr());
  c.exact("bracket/[a',A]", commutator(ad, Op(gauge_op(h_, gp_, H_, Gp_, false))), OperatorExpr());

  Tally bound;
  std::vector<RVec3> ks{c.vec3(), c.vec3(), c.vec3()};
  std::vector<RVec4> bigs{c.timelike(), c.timelike()};
  for (int i = 0; i < kRandomInstances; ++i) {
    const auto k = MomentumLabel::bound(ks[static_cast<std::size_t>(c.uniform(0, 2))]);
    const auto h = MomentumLabel::bound(ks[static_cast<std::size_t>(c.uniform(0, 2))]);
    const auto big_k = InnerLabel::bound(bigs[static_cast<std::size_t>(c.uniform(0, 1))]);
    const auto big_h = InnerLabel::bound(bigs[static_cast<std::size_t>(c.uniform(0, 1))]);
    bound.record(commutator(Op(scalar_op(k, big_k, false)), Op(scalar_op(h, big_h, true))), ccr_rhs(k, big_k, h, big_h));
  }
  bound.emit(c, "bracket/random_bound_labels", "bound-label commutators match");

  c.exact("normal_order/a_a'", normal_order(a * bd), Op(scalar_op(h_, H_, true)) * a);
  c.exact("normal_order/a'_a", normal_order(bd * a), bd * a);
  c.exact("vev/a_a'", vev(a * bd), ccr_rhs(k_, K_, h_, H_));
  c.exact("vev/a'_a", vev(bd * a), OperatorExpr());
  c.exact("multiply/scalars", (N(2) * a) * (N(3) * bd), N(6) * OperatorExpr::word({scalar_op(k_, K_, false), scalar_op(h_, H_, true)}));
  c.exact("multiply/zero", a * OperatorExpr(), OperatorExpr());
  c.exact("multiply/distributive", (a + ad) * bd, a * bd + ad * bd);

  {
    Bindings none;
    const auto r = delta_resolve(At(delta3(k_, h_)) * At(OmegaAtom{h_, MassTag::Scalar}), none, {"h"});
    c.exact("delta_resolve/sifting", r.value, At(OmegaAtom{k_, MassTag::Scalar}));
    const RVec4 v = c.timelike();
    Bindings eq;
    eq.inner = {{"K", InnerLabel::bound(v)}, {"H", InnerLabel::bound(v)}};
    c.exact("delta_resolve/delta4_zero_marker", delta_resolve(At(delta4(K_, H_)), eq).value, At(Delta4Zero{}));
    Bindings ne;
    ne.momenta = {{"k", MomentumLabel::bound({Rational(1), Rational(0), Rational(0)})},
                  {"h", MomentumLabel::bound({Rational(2), Rational(0), Rational(0)})}};
    c.exact("delta_resolve/distinct_bound", delta_resolve(At(delta3(k_, h_)), ne).value, OperatorExpr());
    Bindings bad;
    bad.momenta = {{"k", MomentumLabel::bound({Rational(1), Rational(0), Rational(0)})}};
    bad.inner = {{"k", InnerLabel::bound(v)}};
    const auto conflict = delta_resolve(Op(scalar_op(k_, K_, false)), bad);
    c.truth("delta_resolve/inconsistent_bindings_flagged", !conflict.ok(),
            conflict.ok() ? "no issue reported" : conflict.issues.front());
  }

  Tally idem, preserve, jacobi;
  for (int i = 0; i < kRandomInstances; ++i) {
    const OperatorExpr e = random_word(c, 6);
    const OperatorExpr r = reduce_to_normal_form(e);
    idem.record(reduce_to_normal_form(r), r);
    const OperatorExpr x = random_word(c, 2);
    preserve.record(vev(r * x), vev(e * x));
    const auto p = random_word(c, 1, true), q = random_word(c, 1, true), s = random_word(c, 1, true);
    jacobi.record(commutator(p, commutator(q, s)) + commutator(q, commutator(s, p)) + commutator(s, commutator(p, q)),
                  OperatorExpr());
  }
  idem.emit(c, "normal_form/idempotent", "random words reduce idempotently");
  preserve.emit(c, "normal_form/identity_preservation", "vev(reduce(e) x) = vev(e x)");
  jacobi.emit(c, "normal_form/jacobi", "Jacobi identity on bosonic triples");
}

void suite_car(Ctx& c) {
  struct Gen {
    std::string name;
    Species sp;
    bool dag;
  };
  const std::vector<Gen> gens{{"b", Species::DiracParticle, false},
                              {"b'", Species::DiracParticle, true},
                              {"d", Species::DiracAntiparticle, false},
                              {"d'", Species::DiracAntiparticle, true}};
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      const auto lhs = anticommutator(Op(dirac_op(x.sp, k_, s_, K_, x.dag)), Op(dirac_op(y.sp, h_, t_, H_, y.dag)));
      OperatorExpr rhs;
      if (x.sp == y.sp && x.dag != y.dag) {
        rhs = x.dag ? car_rhs(h_, t_, H_, k_, s_, K_) : car_rhs(k_, s_, K_, h_, t_, H_);
      }
      c.exact("bracket/{" + x.name + "," + y.name + "}", lhs, rhs);
    }
  }
  const auto bk = Op(dirac_op(Species::DiracParticle, k_, s_, K_, false));
  const auto bkd = Op(dirac_op(Species::DiracParticle, k_, s_, K_, true));
  c.exact("fermionic/b_b_identical", reduce_to_normal_form(bk * bk), OperatorExpr());
  c.exact("fermionic/b'_b'_identical", reduce_to_normal_form(bkd * bkd), OperatorExpr());
  c.exact("normal_order/b_b'", normal_order(bk * Op(dirac_op(Species::DiracParticle, h_, t_, H_, true))),
          -(Op(dirac_op(Species::DiracParticle, h_, t_, H_, true)) * bk));
  c.exact("bracket/[b,A']", commutator(bk, Op(gauge_op(h_, gp_, H_, Gp_, true))), OperatorExpr());
  c.exact("bracket/[b',a]", commutator(bkd, Op(scalar_op(h_, H_, false))), OperatorExpr());

  Tally bound;
  std::vector<RVec3> ks{c.vec3(), c.vec3()};
  const RVec4 big = c.timelike();
  for (int i = 0; i < kRandomInstances; ++i) {
    const Species sp = c.uniform(0, 1) ? Species::DiracParticle : Species::DiracAntiparticle;
    const auto k = MomentumLabel::bound(ks[static_cast<std::size_t>(c.uniform(0, 1))]);
    const auto h = MomentumLabel::bound(ks[static_cast<std::size_t>(c.uniform(0, 1))]);
    const auto s = Discrete::bound(c.uniform(1, 2));
    const auto t = Discrete::bound(c.uniform(1, 2));
    const auto bi = InnerLabel::bound(big);
    bound.record(anticommutator(Op(dirac_op(sp, k, s, bi, false)), Op(dirac_op(sp, h, t, bi, true))),
                 car_rhs(k, s, bi, h, t, bi));
  }
  bound.emit(c, "bracket/random_bound_labels", "bound-label anticommutators match");
  c.exact("vev/d_d'", vev(Op(dirac_op(Species::DiracAntiparticle, k_, s_, K_, false)) *
                          Op(dirac_op(Species::DiracAntiparticle, h_, t_, H_, true))),
          car_rhs(k_, s_, K_, h_, t_, H_));
}

void suite_gauge(Ctx& c) {
  const auto a = Op(gauge_op(k_, g_, K_, G_, false));
  const auto ad = Op(gauge_op(k_, g_, K_, G_, true));
  const auto b = Op(gauge_op(h_, gp_, H_, Gp_, false));
  const auto bd = Op(gauge_op(h_, gp_, H_, Gp_, true));
  c.exact("bracket/[A,A']", commutator(a, bd), gauge_rhs(k_, g_, K_, G_, h_, gp_, H_, Gp_));
  c.exact("bracket/[A',A]", commutator(ad, b), -gauge_rhs(h_, gp_, H_, Gp_, k_, g_, K_, G_));
  c.exact("bracket/[A,A]", commutator(a, b), OperatorExpr());
  c.exact("bracket/[A',A']", commutator(ad, bd), OperatorExpr());
  c.exact("vev/A_A'", vev(b * ad), gauge_rhs(h_, gp_, H_, Gp_, k_, g_, K_, G_));

  Tally table;
  for (int g = 0; g <= 3; ++g)
    for (int gp = 0; gp <= 3; ++gp)
      for (int big_g = 1; big_g <= 3; ++big_g)
        for (int big_gp = 1; big_gp <= 3; ++big_gp) {
          const double sign = kin::metric(g, gp) * kin::metric(big_g, big_gp);
          const auto lhs = commutator(Op(gauge_op(k_, Discrete::bound(g), K_, Discrete::bound(big_g), false)),
                                      Op(gauge_op(h_, Discrete::bound(gp), H_, Discrete::bound(big_gp), true)));
          const auto rhs = N(static_cast<int>(sign)) * gauge_rhs_without_metric(k_, K_, h_, H_);
          table.record(lhs == rhs, to_string(lhs), to_string(rhs),
                       "g=" + std::to_string(g) + ",g'=" + std::to_string(gp) + ",G=" + std::to_string(big_g) +
                           ",G'=" + std::to_string(big_gp));
        }
  table.emit(c, "bracket/polarization_table", "bound polarization brackets carry eta^{gg'} eta^{GG'}");

  const auto K1 = InnerLabel::bound(c.timelike());
  const auto k1 = MomentumLabel::bound(c.vec3());
  for (int g = 0; g <= 3; ++g) {
    for (int big_g = 1; big_g <= 3; ++big_g) {
      const std::string n = "norm_sign/g=" + std::to_string(g) + ",G=" + std::to_string(big_g);
      c.guarded(n, [&] {
        const auto op = gauge_op(k1, Discrete::bound(g), K1, Discrete::bound(big_g), true);
        const int expected = static_cast<int>(kin::metric(g, g) * kin::metric(big_g, big_g));
        const int sign = norm_sign({op});
        const FockState ket = FockState::from(Op(op));
        const auto norm = inner_product(ket, ket);
        const bool coefficient_sign_ok = norm.size() == 1 && (norm.terms().begin()->second.real() > 0) == (expected > 0);
        const bool physical_positive = (g == 0) || sign == 1;
        c.truth(n, sign == expected && coefficient_sign_ok && physical_positive,
                "norm_sign " + std::to_string(sign) + ", metric product " + std::to_string(expected),
                std::to_string(sign), std::to_string(expected));
      });
    }
  }
  const std::vector<std::pair<std::string, std::vector<LadderOperator>>> matter{
      {"a", {scalar_op(k1, K1, true)}},
      {"b", {dirac_op(Species::DiracParticle, k1, Discrete::bound(1), K1, true)}},
      {"d", {dirac_op(Species::DiracAntiparticle, k1, Discrete::bound(2), K1, true)}},
      {"a_b_d", {scalar_op(k1, K1, true), dirac_op(Species::DiracParticle, k1, Discrete::bound(2), K1, true),
                 dirac_op(Species::DiracAntiparticle, k1, Discrete::bound(1), K1, true)}}};
  for (const auto& [n, word] : matter) {
    const int sign = norm_sign(word);
    c.truth("norm_sign/matter/" + n, sign == 1, "norm_sign " + std::to_string(sign), std::to_string(sign), "1");
  }

  c.rejects("parse/inner_polarization_zero", [] { (void)parse_expression("A'(k,g=0;K,G=0)"); }, "Gamma = 0");

  Tally filter;
  for (int i = 0; i < kRandomInstances; ++i) {
    std::vector<LadderOperator> word;
    const int n = c.uniform(1, 5);
    for (int j = 0; j < n; ++j) {
      const int g = c.uniform(0, 3);
      word.push_back(gauge_op(MomentumLabel::bound(c.vec3()), Discrete::bound(g), InnerLabel::bound(c.timelike()),
                              Discrete::bound(c.uniform(1, 3)), true));
    }
    const FockState s = physical_filter(FockState::from(OperatorExpr::word(word)));
    bool has_zero = false;
    for (const auto& o : word) has_zero = has_zero || o.gamma()->get() == 0;
    bool ok = s.is_zero() == has_zero;
    for (const auto& [t, coeff] : s.expr().terms()) ok = ok && norm_sign(t.factors) == 1;
    filter.record(ok, to_string(s), "", "word of " + std::to_string(n) + " gauge quanta");
  }
  filter.emit(c, "physical_filter/positive_norm", "filtered kets keep only g=1..3 with norm sign +1");
}

void suite_kinematics(Ctx& c) {
  const auto& ga = kin::GammaAlgebra::instance();
  {
    double r = 0.0;
    r = std::max(r, std::abs(kin::minkowski_dot({1, 0, 0, 0}, {1, 0, 0, 0}) - 1.0));
    r = std::max(r, std::abs(kin::minkowski_dot({0, 1, 0, 0}, {0, 1, 0, 0}) + 1.0));
    r = std::max(r, std::abs(kin::minkowski_dot({1, 1, 0, 0}, {1, 1, 0, 0})));
    r = std::max(r, std::abs(kin::on_shell_energy({0, 0, 0}, 1) - 1.0));
    r = std::max(r, std::abs(kin::on_shell_energy({3, 4, 0}, 0) - 5.0));
    r = std::max(r, std::abs(kin::on_shell_energy({1, 2, 2}, 4) - 5.0));
    c.numeric("examples/dot_and_energy", r, "minkowski_dot and on_shell_energy examples");
  }
  c.truth("examples/cone_classes",
          kin::cone_classify({1, 0, 0, 0}) == kin::ConeClass::TimelikePlus &&
              kin::cone_classify({1, 1, 0, 0}) == kin::ConeClass::LightlikePlus &&
              kin::cone_classify({0, 1, 0, 0}) == kin::ConeClass::Spacelike &&
              kin::cone_classify({-1, 0, 0, 0}) == kin::ConeClass::TimelikeMinus &&
              kin::cone_classify({-1, 0, 1, 0}) == kin::ConeClass::LightlikeMinus,
          "classification by K^2 and sign(K^0)");
  c.rejects("errors/massless_at_rest", [] { (void)kin::on_shell_energy({0, 0, 0}, 0); }, "massless quantum at zero momentum");
  c.rejects("errors/spacelike_inner", [] { (void)kin::build_inner_polarizations({0, 1, 0, 0}); }, "spacelike K");
  c.rejects("errors/lightlike_inner", [] { (void)kin::build_inner_polarizations({1, 1, 0, 0}); }, "lightlike K");
  c.rejects("errors/massless_gauge", [] {
    (void)kin::build_spacetime_polarizations(kin::MassShellMomentum({1, 0, 0}, 0), 0);
  }, "mu = 0");
  c.rejects("errors/massless_spinor", [] {
    (void)kin::dirac_spinor(kin::MassShellMomentum({1, 0, 0}, 0), 1, kin::SpinorKind::U);
  }, "m = 0");

  {
    bool exact = true;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        exact = exact && ga.anticommutator(mu, nu) == (2.0 * kin::metric(mu, nu)) * kin::Matrix4cd::Identity();
    c.truth("gamma/clifford", exact, "{gamma^mu, gamma^nu} = 2 eta^{mu nu} entrywise");
  }
  {
    const double mu = 2.5;
    const kin::MassShellMomentum rest({0, 0, 0}, mu);
    const auto eps = kin::build_spacetime_polarizations(rest, mu);
    double r = 0.0;
    const kin::FourVector e0{1, 0, 0, 0};
    for (int i = 0; i < 4; ++i) r = std::max(r, std::abs(eps.eps[0][static_cast<std::size_t>(i)] - e0[static_cast<std::size_t>(i)]));
    for (int g = 1; g <= 3; ++g) {
      const auto& e = eps.eps[static_cast<std::size_t>(g)];
      r = std::max(r, std::abs(e[0]));
      r = std::max(r, std::abs(e[1] * e[1] + e[2] * e[2] + e[3] * e[3] - 1.0));
    }
    r = std::max(r, kin::spacetime_completeness_residual(eps, rest.four_vector(), mu).cwiseAbs().maxCoeff());
    c.numeric("polarization/rest_frame", r, "eps(0) = (1,0,0,0), eps(1..3) spatial unit vectors");
    const kin::MassShellMomentum k53({3, 0, 0}, 4);
    c.numeric("polarization/k_5_3_0_0", kin::spacetime_completeness_residual(kin::build_spacetime_polarizations(k53, 4), k53.four_vector(), 4).cwiseAbs().maxCoeff(),
              "completeness at k=(5,3,0,0), mu=4");
    const kin::FourVector K21{2, 1, 0, 0};
    const auto E = kin::build_inner_polarizations(K21);
    double t = kin::inner_completeness_residual(E, K21).cwiseAbs().maxCoeff();
    for (int G = 1; G <= 3; ++G) t = std::max(t, std::abs(kin::minkowski_dot(K21, E(G))));
    c.numeric("polarization/K_2_1_0_0", t, "inner completeness and K.E = 0 at K=(2,1,0,0)");
  }
  {
    const kin::MassShellMomentum rest({0, 0, 0}, 1.0);
    const auto u1 = kin::dirac_spinor(rest, 1, kin::SpinorKind::U);
    double r = (u1.components - kin::Vector4cd(1, 0, 0, 0)).cwiseAbs().maxCoeff();
    kin::Matrix4cd diag = kin::Matrix4cd::Zero();
    diag(0, 0) = diag(1, 1) = 1.0;
    r = std::max(r, (kin::spin_sum(rest, kin::SpinorKind::U) - diag).cwiseAbs().maxCoeff());
    c.numeric("spinor/rest_frame", r, "u(k,1) = (1,0,0,0), sum u ubar = diag(1,1,0,0)");
  }

  double st = 0.0, inner = 0.0, dirac = 0.0;
  for (int i = 0; i < kRandomInstances; ++i) {
    const double mu = c.real(0.1, 10.0);
    const kin::MassShellMomentum k({c.real(-3, 3), c.real(-3, 3), c.real(-3, 3)}, mu);
    const auto kv = k.four_vector();
    const auto eps = kin::build_spacetime_polarizations(k, mu);
    // Relative to the size of k k / mu^2, the largest term in the relation.
    const double scale = std::max(1.0, kv[0] * kv[0] / (mu * mu));
    double r = kin::spacetime_completeness_residual(eps, kv, mu).cwiseAbs().maxCoeff();
    for (int g = 0; g < 4; ++g) {
      for (int gp = 0; gp < 4; ++gp) {
        r = std::max(r, std::abs(kin::minkowski_dot(eps.eps[static_cast<std::size_t>(g)], eps.eps[static_cast<std::size_t>(gp)]) -
                                 kin::metric(g, gp)));
      }
      if (g > 0) r = std::max(r, std::abs(kin::minkowski_dot(kv, eps.eps[static_cast<std::size_t>(g)])) / std::sqrt(scale));
    }
    st = std::max(st, r / scale);

    kin::FourVector big{0, c.real(-3, 3), c.real(-3, 3), c.real(-3, 3)};
    const double norm = std::sqrt(big[1] * big[1] + big[2] * big[2] + big[3] * big[3]);
    big[0] = (c.uniform(0, 1) ? 1.0 : -1.0) * (norm + c.real(0.1, 3.0));
    const auto E = kin::build_inner_polarizations(big);
    const double big_scale = std::max(1.0, big[0] * big[0] / kin::minkowski_dot(big, big));
    double ri = kin::inner_completeness_residual(E, big).cwiseAbs().maxCoeff();
    for (int G = 1; G <= 3; ++G) {
      ri = std::max(ri, std::abs(kin::minkowski_dot(big, E(G))) / std::sqrt(big_scale));
      for (int Gp = 1; Gp <= 3; ++Gp) ri = std::max(ri, std::abs(kin::minkowski_dot(E(G), E(Gp)) + (G == Gp ? 1.0 : 0.0)));
    }
    inner = std::max(inner, ri / big_scale);

    const double m = c.real(0.1, 10.0);
    const kin::MassShellMomentum p({c.real(-3, 3), c.real(-3, 3), c.real(-3, 3)}, m);
    const auto pv = p.four_vector();
    const kin::Matrix4cd slash = ga.slash(pv);
    const kin::Matrix4cd id = kin::Matrix4cd::Identity();
    const double e_over_m = p.energy() / m;
    double rd = 0.0;
    for (int s = 1; s <= 2; ++s) {
      const auto u = kin::dirac_spinor(p, s, kin::SpinorKind::U);
      const auto v = kin::dirac_spinor(p, s, kin::SpinorKind::V);
      rd = std::max(rd, ((slash - m * id) * u.components).cwiseAbs().maxCoeff() / m);
      rd = std::max(rd, ((slash + m * id) * v.components).cwiseAbs().maxCoeff() / m);
      for (int sp = 1; sp <= 2; ++sp) {
        const auto u2 = kin::dirac_spinor(p, sp, kin::SpinorKind::U);
        const auto v2 = kin::dirac_spinor(p, sp, kin::SpinorKind::V);
        const double delta = s == sp ? 1.0 : 0.0;
        rd = std::max(rd, std::abs((u.bar() * u2.components)(0) - delta));
        rd = std::max(rd, std::abs((v.bar() * v2.components)(0) + delta));
        rd = std::max(rd, std::abs((u.components.adjoint() * u2.components)(0) - e_over_m * delta) / e_over_m);
      }
    }
    rd = std::max(rd, (2.0 * m * kin::spin_sum(p, kin::SpinorKind::U) - (slash + m * id)).cwiseAbs().maxCoeff() / p.energy());
    rd = std::max(rd, (2.0 * m * kin::spin_sum(p, kin::SpinorKind::V) - (slash - m * id)).cwiseAbs().maxCoeff() / p.energy());
    dirac = std::max(dirac, rd);
  }
  c.numeric("random/spacetime_polarizations", st, "100 random k, mu in [0.1,10]: completeness, orthonormality, transversality");
  c.numeric("random/inner_polarizations", inner, "100 random timelike K: completeness, orthonormality, K.E = 0");
  c.numeric("random/dirac_spinors", dirac, "100 random on-shell k: Dirac equation, normalizations, spin sums");
}

void suite_fock(Ctx& c) {
  const auto a = Op(scalar_op(k_, K_, false));
  const auto bd = Op(scalar_op(h_, H_, true));
  c.truth("apply/a_on_vacuum", apply(a, FockState::vacuum()).is_zero(), "a(k;K)|0> = 0");
  c.exact("apply/a_a'_on_vacuum", apply(a * bd, FockState::vacuum()).expr(), ccr_rhs(k_, K_, h_, H_));
  {
    const auto s = apply(Op(dirac_op(Species::DiracParticle, k_, s_, K_, true)), FockState::vacuum());
    c.truth("apply/b'_creates", s.expr().size() == 1 && s.expr().max_length() == 1, to_string(s));
  }
  c.exact("inner/vacuum", inner_product(FockState::vacuum(), FockState::vacuum()), N(1));
  c.exact("inner/one_particle", inner_product(FockState::from(bd), FockState::from(Op(scalar_op(k_, K_, true)))),
          ccr_rhs(h_, H_, k_, K_));
  c.exact("inner/species_orthogonal",
          inner_product(FockState::from(Op(dirac_op(Species::DiracParticle, h_, t_, H_, true))),
                        FockState::from(Op(scalar_op(k_, K_, true)))),
          OperatorExpr());

  const RVec3 kv = c.vec3(), hv = c.vec3();
  const RVec4 Kv = c.timelike(), Hv = c.timelike();
  const auto kb = MomentumLabel::bound(kv), hb = MomentumLabel::bound(hv);
  const auto Kb = InnerLabel::bound(Kv), Hb = InnerLabel::bound(Hv);
  {
    const auto ev = momentum_action(MomentumKind::Inner, FockState::from(Op(scalar_op(kb, Kb, true))));
    c.truth("momentum/P_on_a'", ev.size() == 1 && ev[0].value == FormalFourVector::from(Kv), to_string(ev.at(0).value),
            to_string(ev.at(0).value), to_string(FormalFourVector::from(Kv)));
    const auto s = FockState::from(Op(dirac_op(Species::DiracParticle, kb, Discrete::bound(1), Kb, true)) *
                                   Op(dirac_op(Species::DiracAntiparticle, hb, Discrete::bound(2), Hb, true)));
    const auto ev2 = momentum_action(MomentumKind::Inertial, s);
    const auto expected = FormalFourVector::on_shell(kb, MassTag::Dirac) + FormalFourVector::on_shell(hb, MassTag::Dirac);
    c.truth("momentum/p_on_b'd'", ev2.size() == 1 && ev2[0].value == expected, to_string(ev2.at(0).value),
            to_string(ev2.at(0).value), to_string(expected));
    const auto ev3 = momentum_action(
        MomentumKind::Inertial, FockState::from(Op(gauge_op(kb, Discrete::bound(2), Kb, Discrete::bound(3), true))));
    const auto expected3 = FormalFourVector::on_shell(kb, MassTag::Gauge);
    c.truth("momentum/p_on_A'_g2_G3", ev3.size() == 1 && ev3[0].value == expected3, to_string(ev3.at(0).value),
            to_string(ev3.at(0).value), to_string(expected3));
  }
  c.truth("norm_sign/A'_g1_G1", norm_sign({gauge_op(kb, Discrete::bound(1), Kb, Discrete::bound(1), true)}) == 1, "+1");
  c.truth("norm_sign/A'_g0_G1", norm_sign({gauge_op(kb, Discrete::bound(0), Kb, Discrete::bound(1), true)}) == -1, "-1");
  c.truth("norm_sign/a'", norm_sign({scalar_op(kb, Kb, true)}) == 1, "+1");
  c.truth("physical_filter/g0_dropped",
          physical_filter(FockState::from(Op(gauge_op(kb, Discrete::bound(0), Kb, Discrete::bound(1), true)))).is_zero(),
          "A'(k,g=0;K,G=1)|0> filtered out");
  {
    const auto s = FockState::from(Op(gauge_op(kb, Discrete::bound(3), Kb, Discrete::bound(2), true)));
    c.truth("physical_filter/g3_kept", physical_filter(s) == s, to_string(s));
    const auto m = FockState::from(Op(scalar_op(kb, Kb, true)) * Op(dirac_op(Species::DiracParticle, hb, Discrete::bound(1), Hb, true)));
    c.truth("physical_filter/matter_kept", physical_filter(m) == m, to_string(m));
  }
  c.rejects("support/spacelike_inner", [&] {
    (void)FockState::from(Op(scalar_op(kb, InnerLabel::bound({Rational(0), Rational(1), Rational(0), Rational(0)}), true)));
  }, "spacelike K");

  Tally inner_ev, inertial_ev, additive, conj;
  for (int i = 0; i < kRandomInstances; ++i) {
    const auto make = [&](int n, std::vector<RandomQuantum>& qs) {
      for (int j = 0; j < n; ++j) qs.push_back(random_quantum(c));
    };
    std::vector<RandomQuantum> q1, q2;
    make(c.uniform(1, 3), q1);
    make(c.uniform(1, 3), q2);
    const auto word_of = [](const std::vector<RandomQuantum>& qs) {
      std::vector<LadderOperator> w;
      for (const auto& q : qs) w.push_back(q.op);
      return OperatorExpr::word(std::move(w));
    };
    const FockState s1 = FockState::from(word_of(q1));
    const FockState s2 = FockState::from(word_of(q2));
    std::vector<RandomQuantum> all = q1;
    all.insert(all.end(), q2.begin(), q2.end());
    const FockState s12 = FockState::from(word_of(all));
    if (s1.is_zero() || s2.is_zero() || s12.is_zero()) {
      --i;
      continue;
    }
    FormalFourVector oracle_inner, oracle_inertial;
    for (const auto& q : all) {
      FormalFourVector a1 = FormalFourVector::from(q.big_k);
      FormalFourVector a2 = FormalFourVector::on_shell(q.k, q.tag);
      a1 *= Rational(q.weight);
      a2 *= Rational(q.weight);
      oracle_inner += a1;
      oracle_inertial += a2;
    }
    const auto P12 = momentum_action(MomentumKind::Inner, s12);
    const auto p12 = momentum_action(MomentumKind::Inertial, s12);
    inner_ev.record(P12.size() == 1 && P12[0].value == oracle_inner, to_string(P12.at(0).value), to_string(oracle_inner));
    inertial_ev.record(p12.size() == 1 && p12[0].value == oracle_inertial, to_string(p12.at(0).value), to_string(oracle_inertial));
    const auto P1 = momentum_action(MomentumKind::Inner, s1), P2 = momentum_action(MomentumKind::Inner, s2);
    const auto p1 = momentum_action(MomentumKind::Inertial, s1), p2 = momentum_action(MomentumKind::Inertial, s2);
    additive.record(P1[0].value + P2[0].value == P12[0].value && p1[0].value + p2[0].value == p12[0].value,
                    to_string(P12[0].value), to_string(P1[0].value + P2[0].value));
    const auto ab = inner_product(s1, s2);
    const auto ba = inner_product(s2, s1);
    conj.record(ab, ba.adjoint());
  }
  inner_ev.emit(c, "momentum/random_inner_eigenvalues", "P eigenvalues equal the signed sum of K");
  inertial_ev.emit(c, "momentum/random_inertial_eigenvalues", "p eigenvalues equal the signed sum of (omega_k, k)");
  additive.emit(c, "momentum/additivity", "eigenvalue of a product ket is the sum of its factors' eigenvalues");
  conj.emit(c, "inner/conjugate_symmetry", "<s|t> = conj <t|s>");
}

void suite_gravlimit(Ctx& c) {
  const RegularizationConfig unit = RegularizationConfig::with_ratio(c.cfg.lambda);
  const auto bar_a = [](const MomentumLabel& k, bool d) { return LadderOperator::scalar(k, InnerLabel::on_shell(k, MassTag::Scalar), d); };
  const auto bar_b = [](Species sp, const MomentumLabel& k, const Discrete& s, bool d) {
    return LadderOperator::dirac(sp, k, s, InnerLabel::on_shell(k, MassTag::Dirac), d);
  };
  const auto bar_A = [](const MomentumLabel& k, const Discrete& g, const Discrete& G, bool d) {
    return LadderOperator::gauge(k, g, InnerLabel::on_shell(k, MassTag::Gauge), G, d);
  };
  const auto r_scalar = grav_limit_expr(commutator(Op(bar_a(k_, false)), Op(bar_a(h_, true))), unit);
  const auto r_dirac = grav_limit_expr(anticommutator(Op(bar_b(Species::DiracParticle, k_, s_, false)),
                                                  Op(bar_b(Species::DiracParticle, h_, t_, true))), unit);
  const auto r_antiparticle = grav_limit_expr(anticommutator(Op(bar_b(Species::DiracAntiparticle, k_, s_, false)),
                                                   Op(bar_b(Species::DiracAntiparticle, h_, t_, true))), unit);
  const auto r_gauge = grav_limit_expr(commutator(Op(bar_A(k_, g_, G_, false)), Op(bar_A(h_, gp_, Gp_, true))), unit);
  c.exact("barred/scalar", r_scalar, barred_scalar_rhs(k_, h_));
  c.exact("barred/dirac_particle", r_dirac, barred_dirac_rhs(k_, s_, h_, t_));
  c.exact("barred/dirac_antiparticle", r_antiparticle, barred_dirac_rhs(k_, s_, h_, t_));
  c.exact("barred/gauge", r_gauge, barred_gauge_rhs(k_, g_, G_, h_, gp_, Gp_));

  {
    std::map<InnerLabel, InnerLabel> assoc{{K_, InnerLabel::on_shell(k_, MassTag::Scalar)},
                                           {H_, InnerLabel::on_shell(h_, MassTag::Scalar)}};
    c.exact("contact/scalar", grav_limit_expr(commutator(Op(scalar_op(k_, K_, false)), Op(scalar_op(h_, H_, true))), unit, assoc),
            barred_scalar_rhs(k_, h_), "limit of the unbarred contact term");
    std::map<InnerLabel, InnerLabel> assoc_d{{K_, InnerLabel::on_shell(k_, MassTag::Dirac)},
                                             {H_, InnerLabel::on_shell(h_, MassTag::Dirac)}};
    c.exact("contact/dirac",
            grav_limit_expr(anticommutator(Op(dirac_op(Species::DiracParticle, k_, s_, K_, false)),
                                           Op(dirac_op(Species::DiracParticle, h_, t_, H_, true))), unit, assoc_d),
            barred_dirac_rhs(k_, s_, h_, t_), "limit of the unbarred contact term");
    std::map<InnerLabel, InnerLabel> assoc_g{{K_, InnerLabel::on_shell(k_, MassTag::Gauge)},
                                             {H_, InnerLabel::on_shell(h_, MassTag::Gauge)}};
    c.exact("contact/gauge",
            grav_limit_expr(commutator(Op(gauge_op(k_, g_, K_, G_, false)), Op(gauge_op(h_, gp_, H_, Gp_, true))), unit, assoc_g),
            barred_gauge_rhs(k_, g_, G_, h_, gp_, Gp_), "limit of the unbarred contact term");
  }

  const MomentumLabel kb = MomentumLabel::bound(c.vec3());
  c.exact("barred/scalar_bound_equal", grav_limit_expr(commutator(Op(bar_a(kb, false)), Op(bar_a(kb, true))), unit),
          N(2) * At(OmegaAtom{kb, MassTag::Scalar}) * At(TwoPiAtom{}, 3) * At(Delta3Zero{}));

  {
    const Rational l1 = c.cfg.lambda, l2 = 2 * c.cfg.lambda;
    const auto at = [&](const Rational& l, const OperatorExpr& e) { return evaluate_lambda(e, l); };
    const auto r45b = grav_limit_expr(commutator(Op(bar_a(k_, false)), Op(bar_a(h_, true))), RegularizationConfig::with_ratio(l2));
    c.exact("scaling/scalar_lambda_independent", at(l2, r45b), at(l1, r_scalar));
    c.exact("scaling/dirac_lambda_independent", at(l2, r_dirac), at(l1, r_dirac));
    c.exact("scaling/gauge_lambda_squared", at(l2, r_gauge), N(4) * at(l1, r_gauge));
    c.truth("scaling/lambda_powers",
            lambda_power(r_scalar) == 0 && lambda_power(r_dirac) == 0 && lambda_power(r_gauge) == 2,
            "matter results carry Lambda^0, the gauge result Lambda^2");
    const auto three = RegularizationConfig::with_ratio(c.cfg.lambda, Rational(3));
    c.exact("scaling/ratio_three", grav_limit_expr(commutator(Op(bar_a(k_, false)), Op(bar_a(h_, true))), three),
            N(3) * barred_scalar_rhs(k_, h_), "V_reg / Lambda^4 = 3 multiplies the result by 3");
  }

  c.rejects("errors/unresolved_inner_label", [&] { (void)grav_limit_expr(At(delta4(K_, H_)), unit); },
            "inner label without an associated momentum");

  {
    const auto s = FockState::from(Op(scalar_op(kb, InnerLabel::bound(c.timelike()), true)));
    c.exact("project/example", project_state(s).expr(), Op(bar_a(kb, true)));
    c.truth("project/vacuum", project_state(FockState::vacuum()) == FockState::vacuum(), "|0> is unchanged");
  }
  Tally idem;
  for (int i = 0; i < kRandomInstances; ++i) {
    std::vector<LadderOperator> w;
    const int n = c.uniform(1, 4);
    for (int j = 0; j < n; ++j) w.push_back(random_quantum(c).op);
    const auto s = FockState::from(N(ComplexRational(Rational(c.uniform(1, 4)), Rational(c.uniform(-2, 2)))) * OperatorExpr::word(w));
    const auto once = project_state(s);
    idem.record(project_state(once).expr(), once.expr());
  }
  idem.emit(c, "project/idempotent", "projecting twice equals projecting once");
}

void suite_propagators(Ctx& c) {
  const FieldMasses masses{1.0, 1.0, 1.0};
  for (FieldKind kind : {FieldKind::Scalar, FieldKind::Dirac, FieldKind::Gauge}) {
    const std::string n = std::string("wick/") + to_string(kind);
    c.guarded(n, [&] {
      const auto w = wick_two_point(kind, masses, c.cfg.tolerance);
      c.truth(n + "/structure", w.structural, w.structural ? "prefactor and inner delta match" : w.detail, w.lhs, w.rhs);
      c.truth(n + "/other_orderings", w.other_orderings_vanish, "the three other operator orderings have zero vev");
      c.numeric(n + "/numerator", w.numerator_residual, "spin or polarization sum against the kernel numerator");
    });
  }

  const double eps = c.cfg.i_epsilon;
  {
    const auto v = propagator_eval({FieldKind::Scalar, 1.0, eps}, {2, 0, 0, 0});
    const cd oracle = 1.0 / cd(3.0, eps);
    c.numeric("eval/scalar", std::abs(v.pole - oracle), "1/(k^2 - m^2 + i eps) at k=(2,0,0,0), m=1");
    c.truth("eval/scalar_eps_limit", std::abs(v.pole - 1.0 / 3.0) <= eps, "value approaches 1/3 as eps -> 0");
    const auto d = propagator_eval({FieldKind::Dirac, 1.0, eps}, {2, 0, 0, 0});
    kin::Matrix4cd num = kin::Matrix4cd::Zero();
    num(0, 0) = num(1, 1) = 3.0;
    num(2, 2) = num(3, 3) = -1.0;
    c.numeric("eval/dirac_rest_frame", (d.dirac - num * oracle).cwiseAbs().maxCoeff(), "(2 gamma^0 + 1)/(3 + i eps)");
    const auto g = propagator_eval({FieldKind::Gauge, 1.0, eps}, {2, 0, 0, 0}, kin::FourVector{1, 0, 0, 0});
    kin::Matrix4d proj = kin::Matrix4d::Zero();
    proj(1, 1) = proj(2, 2) = proj(3, 3) = 1.0;
    double r = (g.inner - proj).cwiseAbs().maxCoeff();
    r = std::max(r, (Eigen::RowVector4d(1, 0, 0, 0) * g.inner).cwiseAbs().maxCoeff());
    c.numeric("eval/gauge_projector_at_rest", r, "projector diag(0,1,1,1), K^alpha Pi_{alpha beta} = 0");
  }
  c.rejects("errors/nonpositive_i_epsilon", [] { (void)propagator_eval({FieldKind::Scalar, 1.0, 0.0}, {2, 0, 0, 0}); }, "i eps <= 0");
  c.rejects("errors/lightlike_inner", [] {
    (void)propagator_eval({FieldKind::Gauge, 1.0, 1e-8}, {2, 0, 0, 0}, kin::FourVector{1, 1, 0, 0});
  }, "K^2 = 0");
  c.rejects("errors/gauge_without_inner", [] { (void)propagator_eval({FieldKind::Gauge, 1.0, 1e-8}, {2, 0, 0, 0}); }, "missing K");

  for (FieldKind kind : {FieldKind::Scalar, FieldKind::Dirac, FieldKind::Gauge}) {
    const auto f = kernel_form({kind, 1.0, eps});
    const auto amp = amputate(f);
    c.truth(std::string("pole/") + to_string(kind), f.pole_order == 1 && amp.pole_order == 0,
            "(k^2 - m^2) cancels the pole exactly, leaving " + amp.numerator);
  }

  double transversal = 0.0, numerator = 0.0;
  for (int i = 0; i < kRandomInstances; ++i) {
    kin::FourVector big{0, c.real(-3, 3), c.real(-3, 3), c.real(-3, 3)};
    const double norm = std::sqrt(big[1] * big[1] + big[2] * big[2] + big[3] * big[3]);
    const double k0 = norm + c.real(0.1, 3.0);
    // Both timelike and spacelike K with K^2 != 0.
    big[0] = c.uniform(0, 1) ? k0 : c.real(0.0, norm * 0.9);
    const kin::Matrix4d pi = inner_projector(big);
    const double scale = std::max(1.0, std::abs(norm * norm / kin::minkowski_dot(big, big)));
    Eigen::RowVector4d kup(big[0], big[1], big[2], big[3]);
    transversal = std::max(transversal, (kup * pi).cwiseAbs().maxCoeff() / (scale * std::max(1.0, k0)));

    const double m = c.real(0.1, 10.0);
    const kin::MassShellMomentum p({c.real(-3, 3), c.real(-3, 3), c.real(-3, 3)}, m);
    const kin::Matrix4cd lhs = kin::GammaAlgebra::instance().slash(p.four_vector()) + m * kin::Matrix4cd::Identity();
    numerator = std::max(numerator, (lhs - 2.0 * m * kin::spin_sum(p, kin::SpinorKind::U)).cwiseAbs().maxCoeff() / p.energy());
  }
  c.numeric("random/gauge_transversality", transversal, "100 random K with K^2 != 0: K^alpha Pi_{alpha beta} = 0");
  c.numeric("random/dirac_numerator", numerator, "100 random on-shell k: kslash + m = 2m sum u ubar");
}

Leg leg(bool in, FieldKind kind, const MomentumLabel& p) {
  Leg l;
  l.incoming = in;
  l.kind = kind;
  l.momentum = p;
  return l;
}

GreenFunction free_fields(const Rational& m, const Rational& mu) {
  GreenFunction g;
  g.fields = {{FieldKind::Scalar, m}, {FieldKind::Dirac, m}, {FieldKind::Gauge, mu}};
  return g;
}

void suite_lsz(Ctx& c) {
  const RegularizationConfig reg = c.cfg.regularization();
  const LSZRecipe recipe = c.cfg.recipe();

  Tally two_point;
  for (int i = 0; i < kRandomInstances; ++i) {
    GreenFunction g = free_fields(Rational(c.uniform(1, 4), c.uniform(1, 2)), Rational(c.uniform(1, 4), c.uniform(1, 2)));
    const auto p = MomentumLabel::bound(c.vec3());
    const int kind = c.uniform(0, 3);
    Leg in = leg(true, FieldKind::Scalar, p), out = leg(false, FieldKind::Scalar, p);
    if (kind == 1 || kind == 2) {
      in.kind = out.kind = FieldKind::Dirac;
      in.antiparticle = out.antiparticle = kind == 2;
      in.spin = out.spin = Discrete::bound(c.uniform(1, 2));
    } else if (kind == 3) {
      in.kind = out.kind = FieldKind::Gauge;
      in.polarization = out.polarization = Discrete::bound(c.uniform(1, 3));
      in.inner_polarization = out.inner_polarization = Discrete::bound(c.uniform(1, 3));
    }
    g.legs = {in, out};
    const auto lam = Rational(c.uniform(1, 5), c.uniform(1, 3));
    const auto amp = lsz_reduce(g, recipe, RegularizationConfig::with_ratio(lam));
    two_point.record(amp.normalized_elastic == N(1) && amp.connected_is_zero, to_string(amp.normalized_elastic), "1",
                     std::string(to_string(in.kind)) + " leg at p=" + to_string(p));
  }
  two_point.emit(c, "two_point/unit", "free 2-point reductions equal 1 for random Lambda");

  {
    GreenFunction g = free_fields(Rational(1), Rational(1));
    g.legs = {leg(true, FieldKind::Scalar, MomentumLabel::symbol("k1")), leg(true, FieldKind::Scalar, MomentumLabel::symbol("k2")),
              leg(false, FieldKind::Scalar, MomentumLabel::symbol("h1")), leg(false, FieldKind::Scalar, MomentumLabel::symbol("h2"))};
    const auto amp = lsz_reduce(g, recipe, reg);
    c.exact("four_point/scalar_elastic", amp.elastic, elastic_oracle(g, reg), "matches the Wick-pairing oracle");
    c.truth("four_point/scalar_pairings", amp.pairings.size() == 2, std::to_string(amp.pairings.size()) + " pairings");
    c.truth("four_point/scalar_connected_zero", amp.connected_is_zero && amp.connected == cd(0.0, 0.0), "no vertices");
  }

  Tally oracle;
  for (int i = 0; i < kRandomInstances; ++i) {
    GreenFunction g = free_fields(Rational(1), Rational(2));
    const int n = c.uniform(1, 3);
    std::vector<Leg> ins;
    for (int j = 0; j < n; ++j) {
      const int kind = c.uniform(0, 3);
      Leg l = leg(true, FieldKind::Scalar, MomentumLabel::symbol("k" + std::to_string(j)));
      if (kind == 1 || kind == 2) {
        l.kind = FieldKind::Dirac;
        l.antiparticle = kind == 2;
        l.spin = Discrete::symbol("s" + std::to_string(j));
      } else if (kind == 3) {
        l.kind = FieldKind::Gauge;
        l.polarization = Discrete::symbol("g" + std::to_string(j));
        l.inner_polarization = Discrete::symbol("G" + std::to_string(j));
      }
      ins.push_back(l);
    }
    std::vector<Leg> outs = ins;
    std::shuffle(outs.begin(), outs.end(), c.rng);
    for (std::size_t j = 0; j < outs.size(); ++j) {
      outs[j].incoming = false;
      outs[j].momentum = MomentumLabel::symbol("h" + std::to_string(j));
      if (outs[j].spin) outs[j].spin = Discrete::symbol("t" + std::to_string(j));
      if (outs[j].polarization) outs[j].polarization = Discrete::symbol("gp" + std::to_string(j));
      if (outs[j].inner_polarization) outs[j].inner_polarization = Discrete::symbol("Gp" + std::to_string(j));
    }
    g.legs = ins;
    g.legs.insert(g.legs.end(), outs.begin(), outs.end());
    const auto amp = lsz_reduce(g, recipe, reg);
    const auto expected = elastic_oracle(g, reg);
    oracle.record(amp.elastic == expected && amp.connected_is_zero, to_string(amp.elastic), to_string(expected),
                  std::to_string(g.legs.size()) + " legs");
  }
  oracle.emit(c, "elastic/random_mixed_species", "elastic parts match the brute-force Wick oracle");

  {
    GreenFunction g = free_fields(Rational(1), Rational(1));
    g.legs = {leg(true, FieldKind::Scalar, MomentumLabel::symbol("k1")), leg(false, FieldKind::Scalar, MomentumLabel::symbol("h1")),
              leg(false, FieldKind::Scalar, MomentumLabel::symbol("h2"))};
    g.vertices = {{ComplexRational(0), {0, 1, 2}}, {ComplexRational(0), {0, 1}}};
    const auto amp = lsz_reduce(g, recipe, reg);
    c.truth("connected/zero_vertices", amp.connected_is_zero && amp.connected == cd(0.0, 0.0) && amp.elastic.is_zero(),
            "vanishing vertex factors give a zero connected amplitude");
    g.vertices = {{ComplexRational(Rational(3), Rational(1)), {0, 1, 2}}};
    const auto amp2 = lsz_reduce(g, recipe, reg);
    const double z = recipe.z;
    const cd expected = cd(3.0, 1.0) * std::pow(-1.0 / std::sqrt(z), 3);
    c.numeric("connected/constant_vertex", std::abs(amp2.connected - expected), "vertex factor times (i/sqrt Z) i per leg");
  }
  {
    GreenFunction g = free_fields(Rational(1), Rational(1));
    Leg in = leg(true, FieldKind::Dirac, MomentumLabel::bound({Rational(0), Rational(0), Rational(3, 4)}));
    in.spin = Discrete::bound(1);
    Leg out = in;
    out.incoming = false;
    Leg ain = in, aout = out;
    ain.antiparticle = aout.antiparticle = true;
    g.legs = {in, out, ain, aout};
    const auto amp = lsz_reduce(g, recipe, reg);
    bool kinds = amp.attachments.size() == 4 && amp.attachments[0].kind == "u" && amp.attachments[1].kind == "ubar" &&
                 amp.attachments[2].kind == "vbar" && amp.attachments[3].kind == "v";
    const kin::MassShellMomentum k({0, 0, 0.75}, 1.0);
    const kin::Matrix4cd slash = kin::GammaAlgebra::instance().slash(k.four_vector());
    const double r = ((slash - kin::Matrix4cd::Identity()) * amp.attachments[0].spinor).cwiseAbs().maxCoeff();
    c.truth("attachments/dirac_kinds", kinds, "incoming u, outgoing ubar, incoming antiparticle vbar, outgoing antiparticle v");
    c.numeric("attachments/dirac_on_shell", r, "(kslash - m) u = 0 for the attached spinor");
  }
  {
    GreenFunction g = free_fields(Rational(1), Rational(1));
    Leg bad = leg(true, FieldKind::Scalar, MomentumLabel::bound({Rational(1), Rational(0), Rational(0)}));
    bad.energy = Rational(3, 2);
    g.legs = {bad, leg(false, FieldKind::Scalar, bad.momentum)};
    c.rejects("errors/off_shell_leg", [&] { (void)lsz_reduce(g, recipe, reg); }, "E^2 != p^2 + m^2");
    Leg good = bad;
    good.momentum = MomentumLabel::bound({Rational(3, 4), Rational(0), Rational(0)});
    good.energy = Rational(5, 4);
    GreenFunction ok = free_fields(Rational(1), Rational(1));
    ok.legs = {good, leg(false, FieldKind::Scalar, good.momentum)};
    c.guarded("errors/on_shell_leg_accepted", [&] {
      const auto amp = lsz_reduce(ok, recipe, reg);
      c.truth("errors/on_shell_leg_accepted", amp.normalized_elastic == N(1), "E = 5/4 at p = (3/4,0,0), m = 1");
    });
    GreenFunction nospin = free_fields(Rational(1), Rational(1));
    nospin.legs = {leg(true, FieldKind::Dirac, MomentumLabel::symbol("k")), leg(false, FieldKind::Dirac, MomentumLabel::symbol("h"))};
    c.rejects("errors/dirac_without_spinor", [&] { (void)lsz_reduce(nospin, recipe, reg); }, "Dirac leg without spin");
    GreenFunction g0 = free_fields(Rational(1), Rational(1));
    Leg gl = leg(true, FieldKind::Gauge, MomentumLabel::symbol("k"));
    gl.polarization = Discrete::bound(0);
    gl.inner_polarization = Discrete::bound(1);
    g0.legs = {gl};
    c.rejects("errors/gauge_gamma_zero", [&] { (void)lsz_reduce(g0, recipe, reg); }, "asymptotic gauge leg with gamma = 0");
  }
}

void suite_unitarity(Ctx& c) {
  const double tol = c.cfg.tolerance;
  for (int n : {2, 4, 8}) {
    const auto rep = toy_unitarity_check(ToySMatrix::one_quantum_identity(n), tol);
    c.truth("identity/dim" + std::to_string(n * n), rep.passed, rep.detail);
  }
  for (int n : {2, 4, 8}) {
    const std::string name = "random/dim" + std::to_string(n * n);
    int passed = 0;
    double worst = 0.0;
    for (int i = 0; i < kRandomInstances; ++i) {
      const auto t = random_block_instance(n, c.rng);
      const auto rep = toy_unitarity_check(t, tol);
      passed += rep.passed ? 1 : 0;
      worst = std::max({worst, rep.conclusion_residual, rep.unitarity_residual, rep.commutator_residual});
    }
    c.out.push_back({c.name(name), passed == kRandomInstances,
                     std::to_string(passed) + "/" + std::to_string(kRandomInstances) +
                         " block-diagonal instances satisfy |PS^dag SP - P| <= tol; worst residual " + sci(worst),
                     sci(worst), "0", tol});
  }
  {
    const auto rep = toy_unitarity_check(toy::noncommuting_swap(), tol);
    c.truth("counterexample/noncommuting", !rep.preconditions_hold && !rep.passed, rep.detail);
  }
  {
    const auto rep = vacuum_and_one_particle_checks(toy::graded_identity(), tol);
    c.truth("invariance/identity", rep.passed && !rep.rephased, "vacuum and one-particle states invariant");
    const double alpha = 0.7;
    const auto ph = vacuum_and_one_particle_checks(toy::vacuum_phase(alpha), tol);
    c.out.push_back({c.name("invariance/vacuum_phase"), ph.rephased && ph.passed && std::abs(ph.vacuum_phase - alpha) <= tol,
                     "vacuum phase " + sci(ph.vacuum_phase) + " reported and removed", sci(ph.vacuum_phase), sci(alpha), tol});
    const auto mix = vacuum_and_one_particle_checks(toy::one_two_mixing(0.4), tol);
    std::string listed;
    for (const auto& v : mix.violations) listed += (listed.empty() ? "" : "; ") + v.state + ": " + v.message;
    c.truth("invariance/one_two_mixing_reported", !mix.passed && !mix.violations.empty(), listed);
  }
}

using SuiteFn = void (*)(Ctx&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"ccr", suite_ccr},           {"car", suite_car},     {"gauge", suite_gauge},
      {"kinematics", suite_kinematics}, {"fock", suite_fock}, {"gravlimit", suite_gravlimit},
      {"propagators", suite_propagators}, {"lsz", suite_lsz}, {"unitarity", suite_unitarity}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

Report run_suite(const std::string& name, const RunConfig& cfg) {
  cfg.validate();
  if (!is_suite(name)) throw ConfigError("unknown suite '" + name + "'");
  Report rep;
  rep.suite = name;
  rep.seed = cfg.seed;
  rep.config = cfg.entries();
  for (const auto& [suite, fn] : registry()) {
    if (name != "all" && name != suite) continue;
    Ctx ctx{cfg, suite, rep.cases, std::mt19937_64(cfg.seed ^ fnv1a(suite))};
    try {
      fn(ctx);
    } catch (const std::exception& e) {
      rep.cases.push_back({suite + "/aborted", false, std::string("unexpected error: ") + e.what(), "", "", std::nullopt});
    }
  }
  rep.sort_cases();
  return rep;
}

}  // namespace gravfock
