// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria and tolerances are pinned in code; run via ctest
// (test name "acceptance") or directly.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "minherm/certify.hpp"
#include "minherm/companion.hpp"
#include "minherm/construct.hpp"
#include "minherm/corpus.hpp"
#include "minherm/eigen.hpp"
#include "minherm/majorize.hpp"
#include "minherm/oracle.hpp"

using namespace minherm;

namespace {

using clock_type = std::chrono::steady_clock;

int failures = 0;

void report(int number, bool pass, const std::string& label, const std::string& detail) {
  std::printf("%s %2d: %s (%s)\n", pass ? "PASS" : "FAIL", number, label.c_str(), detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

// 1. Reference 4x4: spectrum (2, 2, 1, -2) to 1e-9; verify Minimal with
//    lambda = 2; under one second.
void criterion_1() {
  const auto t0 = clock_type::now();
  const Reference4x4& ref = reference_4x4();
  const SpectralDecomposition dec = eigh(ref.matrix);
  const double expected[4] = {2.0, 2.0, 1.0, -2.0};
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(dec.eigenvalues[k] - expected[k]));

  const CertifyOutcome out = certify_minimal(ref.matrix);
  const double elapsed = seconds_since(t0);
  const bool pass = worst <= 1e-9 && out.verdict == Verdict::Minimal &&
                    std::abs(out.lambda - 2.0) <= 1e-9 && elapsed < 1.0;
  char detail[160];
  std::snprintf(detail, sizeof detail, "spectrum err %.2e, verdict %s, lambda %.12f, %.3fs", worst,
                out.verdict == Verdict::Minimal ? "minimal" : "other", out.lambda, elapsed);
  report(1, pass, "4x4 example: spectrum (2,2,1,-2) and Minimal verdict", detail);
}

// 2. Profile identity (2/9) v1 + (7/9) v2 profiles = (1/4,...) = w profile,
//    componentwise to 1e-12, using the printed eigenvectors.
void criterion_2() {
  const Reference4x4& ref = reference_4x4();
  const RealVector p1 = abs_profile(ref.top_eigenvector_1);
  const RealVector p2 = abs_profile(ref.top_eigenvector_2);
  const RealVector pw = abs_profile(ref.bottom_eigenvector);
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const double mix = (2.0 / 9.0) * p1[i] + (7.0 / 9.0) * p2[i];
    worst = std::max(worst, std::abs(mix - 0.25));
    worst = std::max(worst, std::abs(pw[i] - 0.25));
  }
  char detail[80];
  std::snprintf(detail, sizeof detail, "componentwise err %.2e", worst);
  report(2, worst <= 1e-12, "hull identity (2/9, 7/9) mixing of the top profiles", detail);
}

// 3. No single eigenvector beta v1 + gamma v2 has the flat profile: the grid
//    minimum of the profile mismatch stays above 1e-3; under ten seconds.
void criterion_3() {
  const auto t0 = clock_type::now();
  const Reference4x4& ref = reference_4x4();
  const ComplexVector& v1 = ref.top_eigenvector_1;
  const ComplexVector& v2 = ref.top_eigenvector_2;

  const auto mismatch = [&](double modulus, double phase) {
    const Complex beta = std::polar(modulus, phase);
    const double gamma = std::sqrt(std::max(0.0, 1.0 - modulus * modulus));
    double acc = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      const Complex vi = beta * v1[i] + gamma * v2[i];
      const double diff = std::norm(vi) - 0.25;
      acc += diff * diff;
    }
    return std::sqrt(acc);
  };

  constexpr int kGrid = 200;
  double best = 1e300, best_m = 0.0, best_p = 0.0;
  double m_lo = 0.0, m_hi = 1.0, p_lo = 0.0, p_hi = 2.0 * M_PI;
  for (int level = 0; level < 3; ++level) {
    for (int i = 0; i < kGrid; ++i) {
      const double m = m_lo + (m_hi - m_lo) * i / (kGrid - 1);
      for (int j = 0; j < kGrid; ++j) {
        const double p = p_lo + (p_hi - p_lo) * j / (kGrid - 1);
        const double f = mismatch(m, p);
        if (f < best) {
          best = f;
          best_m = m;
          best_p = p;
        }
      }
    }
    const double m_step = (m_hi - m_lo) / (kGrid - 1);
    const double p_step = (p_hi - p_lo) / (kGrid - 1);
    m_lo = std::max(0.0, best_m - 2.0 * m_step);
    m_hi = std::min(1.0, best_m + 2.0 * m_step);
    p_lo = best_p - 2.0 * p_step;
    p_hi = best_p + 2.0 * p_step;
  }
  const double elapsed = seconds_since(t0);
  char detail[120];
  std::snprintf(detail, sizeof detail, "grid minimum %.6f at |beta|=%.4f, %.2fs", best, best_m, elapsed);
  report(3, best > 1e-3 && elapsed < 10.0, "no single top eigenvector matches the flat profile",
         detail);
}

// 4. Hadamard companion family at integer t, checked at 1e-12.
void criterion_4() {
  const HermitianMatrix p = hadamard_3x3_p();
  bool pass = true;
  double worst = 0.0;
  for (int t = 0; t <= 4; ++t) {
    const CompanionReport rep = is_companion_pair(p, hadamard_3x3_q(t), 1e-12);
    pass = pass && rep.pass;
    worst = std::max({worst, rep.product_residual, rep.diag_residual});
  }
  char detail[80];
  std::snprintf(detail, sizeof detail, "worst residual %.2e", worst);
  report(4, pass, "Hadamard family Q_t companions of P for t in {0..4}", detail);
}

// 5. Invertible P short-circuits to NoCompanion after the rank check.
void criterion_5() {
  const HermitianMatrix identity = HermitianMatrix::symmetrized(ComplexMatrix::identity(3));
  const CompanionSearch search = find_companion(identity);
  const bool pass =
      search.outcome == CompanionSearch::Outcome::NoCompanion && search.iterations == 0;
  char detail[80];
  std::snprintf(detail, sizeof detail, "outcome %d, %d solver iterations",
                static_cast<int>(search.outcome), search.iterations);
  report(5, pass, "find_companion(I3) = NoCompanion structurally", detail);
}

// 6. 200 seeded constructions, n in 3..8: certified Minimal and oracle
//    distance within 1e-5 of lambda; under five minutes total.
void criterion_6() {
  const auto t0 = clock_type::now();
  int minimal = 0, agree = 0;
  double worst = 0.0;
  constexpr int kCount = 200;
  for (int rep = 0; rep < kCount; ++rep) {
    const ConstructionSpec spec = testing::random_construction_spec(Rng::derive_seed(600, rep));
    const BuildResult built = build_minimal(spec);
    if (certify_minimal(built.matrix).verdict == Verdict::Minimal) ++minimal;
    const DistanceResult dist = distance_to_diagonals(built.matrix);
    const double err = std::abs(dist.distance - spec.lambda());
    worst = std::max(worst, err);
    if (err <= 1e-5) ++agree;
  }
  const double elapsed = seconds_since(t0);
  char detail[120];
  std::snprintf(detail, sizeof detail, "%d/%d minimal, %d/%d oracle agree, worst err %.2e, %.1fs",
                minimal, kCount, agree, kCount, worst, elapsed);
  report(6, minimal == kCount && agree == kCount && elapsed < 300.0,
         "round trip: 200 constructions certify and match the oracle", detail);
}

// 7. Subgradient oracle vs brute-force grid on 50 random 2x2 and 3x3.
void criterion_7() {
  double worst = 0.0;
  int ok = 0;
  constexpr int kCount = 50;
  for (int rep = 0; rep < kCount; ++rep) {
    Rng rng(Rng::derive_seed(700, rep));
    const std::size_t n = rep % 2 == 0 ? 2 : 3;
    const HermitianMatrix m = testing::random_hermitian(n, rng);
    const DistanceResult sub = distance_to_diagonals(m);
    const double grid = testing::grid_distance(m);
    const double err = std::abs(sub.distance - grid);
    worst = std::max(worst, err);
    if (err <= 5e-3) ++ok;
  }
  char detail[80];
  std::snprintf(detail, sizeof detail, "%d/%d within 5e-3, worst gap %.2e", ok, kCount, worst);
  report(7, ok == kCount, "subgradient distance matches the grid oracle", detail);
}

// 8. Every matrix certified Minimal has -||M|| in its spectrum at cluster
//    tolerance.
void criterion_8() {
  int certified = 0, centered = 0;
  constexpr int kCount = 100;
  for (int rep = 0; rep < kCount; ++rep) {
    const ConstructionSpec spec = testing::random_construction_spec(Rng::derive_seed(800, rep));
    const BuildResult built = build_minimal(spec);
    const CertifyOutcome out = certify_minimal(built.matrix);
    if (out.verdict != Verdict::Minimal) continue;
    ++certified;
    const SpectralDecomposition dec = eigh(built.matrix);
    const double ctol = default_cluster_tol(dec);
    if (std::abs(dec.eigenvalues.back() + out.lambda) <= ctol) ++centered;
  }
  char detail[80];
  std::snprintf(detail, sizeof detail, "%d certified, %d centered", certified, centered);
  report(8, certified == kCount && centered == certified,
         "centered spectrum necessity on certified matrices", detail);
}

// 9. 500 random majorization instances: zero diagonal to 1e-10 * ||spec||_inf
//    and orthogonality to 1e-10.
void criterion_9() {
  int ok = 0;
  constexpr int kCount = 500;
  double worst_diag = 0.0, worst_orth = 0.0;
  for (int rep = 0; rep < kCount; ++rep) {
    const ConstructionSpec cs = testing::random_construction_spec(Rng::derive_seed(900, rep));
    const MajorizationInstance& inst = cs.instance();
    const UnistochasticResult res = schur_horn_zero_diag(inst);
    const RealVector spec = inst.spectrum();
    const std::size_t n = spec.size();

    double inf_norm = 0.0;
    for (double v : spec) inf_norm = std::max(inf_norm, std::abs(v));
    double diag_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += spec[k] * res.orthogonal(i, k) * res.orthogonal(i, k);
      diag_res = std::max(diag_res, std::abs(acc));
    }
    const RealMatrix gram = res.orthogonal.transpose() * res.orthogonal;
    double orth_res = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        orth_res = std::max(orth_res, std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)));

    worst_diag = std::max(worst_diag, diag_res / std::max(1e-300, inf_norm));
    worst_orth = std::max(worst_orth, orth_res);
    if (diag_res <= 1e-10 * inf_norm && orth_res <= 1e-10) ++ok;
  }
  char detail[100];
  std::snprintf(detail, sizeof detail, "%d/%d, worst diag/scale %.2e, worst orth %.2e", ok, kCount,
                worst_diag, worst_orth);
  report(9, ok == kCount, "zero-diagonal frames for 500 random instances", detail);
}

// 10. Negative controls: diag(1,2,3) not minimal with distance 0; the flip
//     matrix minimal with distance exactly 1 (to 1e-7, grid-confirmed).
void criterion_10() {
  ComplexMatrix d(3);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  d(2, 2) = 3.0;
  const HermitianMatrix diag_m = hermitian_from_entries(d);
  const CertifyOutcome diag_out = certify_minimal(diag_m);
  const DistanceResult diag_dist = distance_to_diagonals(diag_m);

  const HermitianMatrix flip =
      hermitian_from_entries(ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
  const CertifyOutcome flip_out = certify_minimal(flip);
  const DistanceResult flip_dist = distance_to_diagonals(flip);
  const double flip_grid = testing::grid_distance(flip);

  const bool pass = diag_out.verdict == Verdict::NotMinimal && diag_dist.distance <= 1e-7 &&
                    flip_out.verdict == Verdict::Minimal &&
                    std::abs(flip_dist.distance - 1.0) <= 1e-7 && std::abs(flip_grid - 1.0) <= 5e-3;
  char detail[120];
  std::snprintf(detail, sizeof detail, "diag dist %.2e, flip dist err %.2e, flip grid err %.2e",
                diag_dist.distance, std::abs(flip_dist.distance - 1.0), std::abs(flip_grid - 1.0));
  report(10, pass, "negative controls: diag(1,2,3) vs the flip matrix", detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
