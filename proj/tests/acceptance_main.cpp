// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the full catalog of coefficient algebras and scaling elements
// at the stated sample counts and enforces the time budgets.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "titsforge/detail/sampling.hpp"
#include "titsforge/identities.hpp"
#include "titsforge/json_io.hpp"
#include "titsforge/scans.hpp"

using namespace titsforge;
using titsforge::detail::sample_element;
using titsforge::detail::sample_tits_element;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& what, double budget_s,
               const std::function<bool(std::string&)>& run) {
    std::string why;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        ok = run(why);
    } catch (const std::exception& e) {
        why = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              t0)
            .count() /
        1000.0;
    if (secs > budget_s) {
        ok = false;
        why += (why.empty() ? "" : "; ") + std::string("over time budget");
    }
    if (!ok) ++g_failures;
    std::printf("%s criterion %d: %s [%.1fs / %.0fs]%s%s\n", ok ? "PASS" : "FAIL", number,
                what.c_str(), secs, budget_s, why.empty() ? "" : " -- ", why.c_str());
    std::fflush(stdout);
}

struct Catalog {
    DescriptorPtr etale_q = AlgebraDescriptor::split_etale(FieldSpec::rationals());
    DescriptorPtr f125 = AlgebraDescriptor::cubic_field(FieldSpec::prime(5));
    DescriptorPtr mat3_q = AlgebraDescriptor::mat3(FieldSpec::rationals());
    DescriptorPtr mat3_f5 = AlgebraDescriptor::mat3(FieldSpec::prime(5));
    DescriptorPtr cyc = AlgebraDescriptor::assoc_cyclic(f125, Scalar::residue(2, 5));

    std::vector<std::pair<std::string, DescriptorPtr>> all() const {
        return {{"Q^3", etale_q},
                {"F125", f125},
                {"Mat3(Q)", mat3_q},
                {"Mat3(F5)", mat3_f5},
                {"(F125/F5,sigma,2)", cyc}};
    }

    static AlgElement vec(const DescriptorPtr& d, std::initializer_list<long> v) {
        std::vector<Scalar> out;
        for (long x : v) out.push_back(Scalar::from_int(d->field(), x));
        return d->element(std::move(out));
    }

    static AlgElement diag(const DescriptorPtr& d, long a, long b, long c) {
        std::vector<Scalar> out(9, Scalar::zero(d->field()));
        out[0] = Scalar::from_int(d->field(), a);
        out[4] = Scalar::from_int(d->field(), b);
        out[8] = Scalar::from_int(d->field(), c);
        return d->element(std::move(out));
    }

    // companion matrix of t^3 - 2: entries C[1][0] = C[2][1] = 1, C[0][2] = 2
    static AlgElement companion(const DescriptorPtr& d) {
        std::vector<Scalar> out(9, Scalar::zero(d->field()));
        out[3] = Scalar::one(d->field());
        out[7] = Scalar::one(d->field());
        out[2] = Scalar::from_int(d->field(), 2);
        return d->element(std::move(out));
    }

    // one scalar mu plus three with 1, mu, mu^2 linearly independent
    std::vector<AlgElement> mus(const DescriptorPtr& A) const {
        std::vector<AlgElement> out = {Scalar::from_int(A->field(), 2) * A->unit()};
        if (A->tag() == AlgebraTag::SplitEtale) {
            out.push_back(vec(A, {1, 2, 4}));
            out.push_back(vec(A, {1, 2, 3}));
            out.push_back(vec(A, {2, 3, 5}));
        } else if (A->tag() == AlgebraTag::CyclicCubicField) {
            out.push_back(vec(A, {0, 1, 0}));  // t
            out.push_back(vec(A, {1, 1, 0}));  // t + 1
            out.push_back(vec(A, {0, 2, 1}));  // t^2 + 2t
        } else if (A->tag() == AlgebraTag::Mat3) {
            out.push_back(diag(A, 1, 2, 3));
            out.push_back(diag(A, 1, 2, 4));
            out.push_back(companion(A));
        } else {
            // e_i z^a sits at coordinate i + 3a
            std::vector<Scalar> z(9, Scalar::zero(A->field())), t(z), tz(z);
            z[3] = Scalar::one(A->field());
            t[1] = Scalar::one(A->field());
            tz[1] = Scalar::one(A->field());
            tz[3] = Scalar::one(A->field());
            out.push_back(A->element(z));
            out.push_back(A->element(t));
            out.push_back(A->element(tz));
        }
        return out;
    }
};

bool all_clean(const VerificationReport& rep, std::string& why, bool demand_samples = false,
               std::int64_t min_samples = 0) {
    for (const auto& r : rep.results) {
        if (r.failures != 0) {
            why += rep.algebra + " " + r.id + " had " + std::to_string(r.failures) +
                   " failures; ";
            return false;
        }
        if (demand_samples && !r.vacuous && r.samples < min_samples) {
            why += rep.algebra + " " + r.id + " evaluated only " + std::to_string(r.samples) +
                   " inputs; ";
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    Catalog cat;
    const std::vector<std::string> j_ids = {"J1", "J2", "J3", "J4", "J5", "J6", "J7"};

    criterion(1, "degree-3 axioms D1-D13 on the five coefficient algebras, 500 samples", 30,
              [&](std::string& why) {
                  bool ok = true;
                  for (const auto& [name, A] : cat.all()) {
                      const auto rep = validate_degree3(A, 500, 1);
                      for (const auto& r : rep.results) {
                          if (r.failures != 0 || r.samples != 500) {
                              why += name + " " + r.id + "; ";
                              ok = false;
                          }
                      }
                  }
                  return ok;
              });

    criterion(2, "J1-J7 on every (A, mu) at 500 samples; variants pass J3 and unitality", 60,
              [&](std::string& why) {
                  bool ok = true;
                  for (const auto& [name, A] : cat.all()) {
                      int scalar_count = 0, indep_count = 0;
                      for (const auto& mu : cat.mus(A)) {
                          auto J = TitsAlgebra::make(A, mu);
                          if (J->mu_in_base_field()) ++scalar_count;
                          if (J->mu_powers_independent()) ++indep_count;
                          const auto rep = run_identity_suite(J, j_ids, 500, 2);
                          if (!all_clean(rep, why)) ok = false;
                      }
                      if (scalar_count != 1 || indep_count != 3) {
                          why += name + ": bad mu catalog; ";
                          ok = false;
                      }
                  }
                  for (const auto& M : {cat.mat3_q, cat.mat3_f5}) {
                      for (Variant v : {Variant::LR, Variant::RL, Variant::RR}) {
                          auto J = TitsAlgebra::make(M, Catalog::diag(M, 1, 2, 3), v);
                          const auto rep = run_identity_suite(J, {"J3"}, 500, 2);
                          if (!all_clean(rep, why)) ok = false;
                          for (std::uint64_t i = 0; i < 500; ++i) {
                              SampleRng rng(2, "acc.unital", i);
                              const TitsElement x = sample_tits_element(J, rng);
                              if (J->unit() * x != x || x * J->unit() != x) {
                                  why += "variant unitality; ";
                                  ok = false;
                                  break;
                              }
                          }
                      }
                  }
                  return ok;
              });

    criterion(3,
              "classical regime mu in F: x x^# = N(x) 1, (x^#)^# = N(x) x, Jordan composition",
              60, [&](std::string& why) {
                  bool ok = true;
                  for (const auto& [name, A] : cat.all()) {
                      auto J =
                          TitsAlgebra::make(A, Scalar::from_int(A->field(), 2) * A->unit());
                      for (std::uint64_t i = 0; i < 500; ++i) {
                          SampleRng rng(3, "acc.classical", i);
                          const TitsElement x = sample_tits_element(J, rng);
                          const TitsElement y = sample_tits_element(J, rng);
                          const TitsElement xs = tits_adjoint(x);
                          const TitsElement emb = J->embed(0, tits_norm(x));
                          const AlgElement nx = tits_norm(x);
                          if (x * xs != emb || xs * x != emb ||
                              tits_adjoint(xs) != scale_by_coeff(nx, x) ||
                              tits_norm(tits_u(x, y)) != nx * nx * tits_norm(y)) {
                              why += name + " sample " + std::to_string(i) + "; ";
                              ok = false;
                              break;
                          }
                      }
                  }
                  return ok;
              });

    criterion(4,
              "iff falsification: (0,1,0) breaks x x^# = N(x) 1; a Mat3 witness breaks the "
              "adjoint identity",
              10, [&](std::string& why) {
                  bool ok = true;
                  auto JM = TitsAlgebra::make(cat.mat3_f5, Catalog::diag(cat.mat3_f5, 1, 2, 3));
                  auto JK = TitsAlgebra::make(cat.f125, Catalog::vec(cat.f125, {0, 1, 0}));
                  for (const auto& J : {JM, JK}) {
                      const auto rep = run_identity_suite(J, {"C5"}, 50, 4);
                      const auto& r = rep.results[0];
                      if (r.id != "C5.falsify" || r.passes < 1 || r.witness.is_null()) {
                          why += "C5 witness missing; ";
                          ok = false;
                      } else if (r.witness !=
                                 tits_element_to_json(J->embed(1, J->coeff()->unit()))) {
                          why += "C5 witness is not (0,1,0); ";
                          ok = false;
                      }
                  }
                  const auto rep8 = run_identity_suite(JM, {"C8"}, 50, 4);
                  const auto& r8 = rep8.results[0];
                  if (r8.id != "C8.falsify" || r8.passes < 1 || r8.failures != 0 ||
                      r8.witness.is_null()) {
                      why += "C8 witness missing; ";
                      ok = false;
                  } else {
                      // the witness has the shape (x0, 1, 0) with x0 mu != mu x0
                      const TitsElement w = tits_element_from_json(r8.witness, JM);
                      if (w.slot(1) != JM->coeff()->unit() || !w.slot(2).is_zero() ||
                          commutes_with_mu(*JM, w.slot(0))) {
                          why += "C8 witness shape wrong; ";
                          ok = false;
                      }
                  }
                  return ok;
              });

    criterion(5,
              "nucleus dimensions: Nuc_l = Nuc_r = Nuc_m = F for J(Mat3(F5)); Nuc_m of "
              "J(F125) inside K",
              60, [&](std::string& why) {
                  auto JM = TitsAlgebra::make(cat.mat3_f5, Catalog::diag(cat.mat3_f5, 1, 2, 3));
                  const GenericAlgebra gm = GenericAlgebra::wrap(JM);
                  bool ok = true;
                  if (compute_nucleus(gm, NucleusSide::Left).dimension() != 1 ||
                      compute_nucleus(gm, NucleusSide::Right).dimension() != 1 ||
                      compute_nucleus(gm, NucleusSide::Middle).dimension() != 1) {
                      why += "Mat3 nucleus dims; ";
                      ok = false;
                  }
                  auto JK = TitsAlgebra::make(cat.f125, Catalog::vec(cat.f125, {0, 1, 0}));
                  const GenericAlgebra gk = GenericAlgebra::wrap(JK);
                  if (!compute_nucleus(gk, NucleusSide::Middle).supported_on(0, 3)) {
                      why += "J(K) middle nucleus leaves the K slot; ";
                      ok = false;
                  }
                  return ok;
              });

    criterion(6,
              "exhaustive anisotropy over 5^9 - 1 elements: none for mu = t, witness for mu = 1",
              300, [&](std::string& why) {
                  ScanOptions ex;
                  ex.mode = ScanMode::Exhaustive;
                  auto Jt = TitsAlgebra::make(cat.f125, Catalog::vec(cat.f125, {0, 1, 0}));
                  const auto rept = anisotropy_scan(Jt, ex);
                  bool ok = true;
                  if (rept.results[0].samples != 1953124 || rept.results[0].failures != 0) {
                      why += "mu = t scan; ";
                      ok = false;
                  }
                  auto J1 = TitsAlgebra::make(cat.f125, cat.f125->unit());
                  const auto rep1 = anisotropy_scan(J1, ex);
                  if (rep1.results[0].failures < 1 || rep1.results[0].witness.is_null()) {
                      why += "mu = 1 witness missing; ";
                      ok = false;
                  }
                  return ok;
              });

    criterion(7, "conditional lemmas C1/C3/C4/C6/C10 on >= 200 inputs; C2/C7 produce witnesses",
              120, [&](std::string& why) {
                  bool ok = true;
                  const std::vector<std::string> ids = {"C1", "C3", "C4", "C6", "C10"};
                  auto JE =
                      TitsAlgebra::make(cat.etale_q, Catalog::vec(cat.etale_q, {1, 2, 4}));
                  auto JM = TitsAlgebra::make(cat.mat3_f5, Catalog::diag(cat.mat3_f5, 1, 2, 3));
                  for (const auto& J : {JE, JM}) {
                      const auto rep = run_identity_suite(J, ids, 500, 7);
                      if (!all_clean(rep, why, true, 200)) ok = false;
                  }
                  // non-satisfiable classes are flagged, not silently passed
                  auto JK = TitsAlgebra::make(cat.f125, Catalog::vec(cat.f125, {0, 1, 0}));
                  const auto repk = run_identity_suite(JK, {"C1"}, 100, 7);
                  if (!repk.results[0].vacuous) {
                      why += "field-case C1 not flagged vacuous; ";
                      ok = false;
                  }
                  for (const auto& J : {JM, JK}) {
                      const auto rep = run_identity_suite(J, {"C2", "C7"}, 300, 7);
                      for (const auto& r : rep.results) {
                          if (!r.id.ends_with(".falsify") || r.passes < 1 ||
                              r.witness.is_null()) {
                              why += r.id + " witness missing; ";
                              ok = false;
                          }
                      }
                  }
                  return ok;
              });

    criterion(8, "cyclic comparison: det(R_x) vs closed form, semilinearity, the map G", 60,
              [&](std::string& why) {
                  bool ok = true;
                  auto D = CyclicAlgebra::make(cat.f125, Catalog::vec(cat.f125, {0, 1, 0}));
                  const auto& K = cat.f125;
                  for (std::uint64_t i = 0; i < 10000; ++i) {
                      SampleRng rng(8, "acc.cyc", i);
                      const CyclicElement x =
                          D->element(sample_element(K, rng), sample_element(K, rng),
                                     sample_element(K, rng));
                      const AlgElement l = sample_element(K, rng);
                      const AlgElement n = cyclic_norm(x); // det/closed agreement inside
                      if (cyclic_norm(scale_left(l, x)) != K->scalar_element(norm(l)) * n) {
                          why += "semilinearity; ";
                          ok = false;
                          break;
                      }
                  }
                  auto Dc = CyclicAlgebra::make(cat.f125, Scalar::residue(2, 5) * K->unit());
                  auto Jc = TitsAlgebra::make(cat.f125, Scalar::residue(2, 5) * K->unit());
                  const auto repc = isometry_scan(Dc, Jc, 1000, 8);
                  if (!all_clean(repc, why)) ok = false;
                  auto Jt = TitsAlgebra::make(cat.f125, Catalog::vec(cat.f125, {0, 1, 0}));
                  const auto rept = isometry_scan(D, Jt, 1000, 8);
                  if (rept.results[1].id != "G.mult.falsify" || rept.results[1].passes < 1) {
                      why += "G non-multiplicativity witness missing; ";
                      ok = false;
                  }
                  const auto rept2 = isometry_scan(D, Jt, 1000, 8);
                  if (rept.to_json().dump() != rept2.to_json().dump()) {
                      why += "norm tally not deterministic; ";
                      ok = false;
                  }
                  return ok;
              });

    criterion(9, "byte-identical reports across reruns and worker counts", 120,
              [&](std::string& why) {
                  bool ok = true;
                  auto JM = TitsAlgebra::make(cat.mat3_f5, Catalog::diag(cat.mat3_f5, 1, 2, 3));
                  const std::vector<std::string> ids = {"J1", "J6", "C2", "C5", "C10"};
                  const auto a = run_identity_suite(JM, ids, 400, 9, 1);
                  const auto b = run_identity_suite(JM, ids, 400, 9, 4);
                  const auto c = run_identity_suite(JM, ids, 400, 9, 1);
                  if (a.to_json().dump() != b.to_json().dump() ||
                      a.to_json().dump() != c.to_json().dump()) {
                      why += "suite bytes differ; ";
                      ok = false;
                  }
                  auto Jt = TitsAlgebra::make(cat.f125, Catalog::vec(cat.f125, {0, 1, 0}));
                  ScanOptions ex;
                  ex.mode = ScanMode::Exhaustive;
                  ex.workers = 1;
                  const auto s1 = anisotropy_scan(Jt, ex);
                  ex.workers = 5;
                  const auto s2 = anisotropy_scan(Jt, ex);
                  if (s1.to_json().dump() != s2.to_json().dump()) {
                      why += "scan bytes differ; ";
                      ok = false;
                  }
                  const auto w1 = weak_jordan_check(Jt, 300, 9, 1);
                  const auto w2 = weak_jordan_check(Jt, 300, 9, 3);
                  if (w1.to_json().dump() != w2.to_json().dump()) {
                      why += "weak-jordan bytes differ; ";
                      ok = false;
                  }
                  return ok;
              });

    if (g_failures == 0) {
        std::printf("all acceptance criteria satisfied\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
