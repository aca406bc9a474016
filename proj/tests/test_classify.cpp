// Copyright 2026 The pointint Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "pointint/classify.hpp"

namespace pointint {
namespace {

constexpr double kTol = 1e-10;

TEST(ClassifySelfAdjoint, DeltaWell) {
  const auto p = classify_self_adjoint(make_nonseparated(1.0, 0.0, -2.0, 1.0));
  ASSERT_TRUE(p);
  EXPECT_NEAR(p->theta, 0.0, kTol);
  EXPECT_NEAR(p->a, 1.0, kTol);
  EXPECT_NEAR(p->b, 0.0, kTol);
  EXPECT_NEAR(p->c, -2.0, kTol);
  EXPECT_NEAR(p->d, 1.0, kTol);
}

TEST(ClassifySelfAdjoint, GlobalPhaseRecovered) {
  const Matrix2 m = unit_phase(kPi / 3) * Matrix2{1.0, 0.0, -2.0, 1.0};
  const auto p = classify_self_adjoint(make_nonseparated(m));
  ASSERT_TRUE(p);
  EXPECT_NEAR(p->theta, kPi / 3, kTol);
  EXPECT_NEAR(p->a, 1.0, kTol);
  EXPECT_NEAR(p->c, -2.0, kTol);
  EXPECT_NEAR(p->d, 1.0, kTol);
}

TEST(ClassifySelfAdjoint, WrongDeterminantRejected) {
  const Complex w = unit_phase(kPi / 4);
  EXPECT_FALSE(classify_self_adjoint(make_nonseparated(1.5 * w, w, w, 1.5 * w)));
}

TEST(ClassifySelfAdjoint, MixedPhasesRejected) {
  EXPECT_FALSE(classify_self_adjoint(make_nonseparated(1.0, Complex(0.0, 1.0), 0.0, 1.0)));
}

TEST(ClassifySelfAdjoint, SignFixedByFirstNonzeroEntry) {
  // -[[1, 0], [2, 1]] is e^{i pi} [[1, 0], [2, 1]]
  const auto p = classify_self_adjoint(make_nonseparated(-1.0, 0.0, -2.0, -1.0));
  ASSERT_TRUE(p);
  EXPECT_NEAR(p->theta, kPi, kTol);
  EXPECT_NEAR(p->a, 1.0, kTol);
  EXPECT_NEAR(p->c, 2.0, kTol);

  // zero leading entry: beta leads
  const auto q = classify_self_adjoint(make_nonseparated(0.0, -1.0, 1.0, 0.0));
  ASSERT_TRUE(q);
  EXPECT_NEAR(q->theta, kPi, kTol);
  EXPECT_NEAR(q->b, 1.0, kTol);
  EXPECT_NEAR(q->c, -1.0, kTol);
}

TEST(ClassifySelfAdjoint, RoundTripProperty) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi), coord(-5.0, 5.0);
  int checked = 0;
  while (checked < 1000) {
    const double a = coord(rng), b = coord(rng), c = coord(rng);
    if (std::abs(a) < 0.2)
      continue;
    const double d = (1.0 + b * c) / a;
    if (std::abs(d) > 5.0)
      continue;
    const SAParams in{angle(rng), a, b, c, d};
    const auto out = classify_self_adjoint(make_nonseparated(in.reconstruct()));
    ASSERT_TRUE(out) << "a=" << a << " b=" << b << " c=" << c;
    EXPECT_LT(max_abs_diff(out->reconstruct(), in.reconstruct()), kTol);
    EXPECT_NEAR(out->a * out->d - out->b * out->c, 1.0, kTol);
    EXPECT_GT(out->a, 0.0);
    ++checked;
  }
}

TEST(ClassifyPt, ConstructedExamples) {
  const Complex w = unit_phase(kPi / 4);
  auto p = classify_pt(make_nonseparated(std::sqrt(2.0) * w, 1.0, 1.0, std::sqrt(2.0) * std::conj(w)));
  ASSERT_TRUE(p);
  EXPECT_NEAR(p->theta, 0.0, kTol);
  EXPECT_NEAR(p->phi, kPi / 4, kTol);
  EXPECT_NEAR(p->b, 1.0, kTol);
  EXPECT_NEAR(p->c, 1.0, kTol);

  p = classify_pt(make_nonseparated(Complex(0.0, std::sqrt(2.0)), 1.0, 1.0, Complex(0.0, -std::sqrt(2.0))));
  ASSERT_TRUE(p);
  EXPECT_NEAR(p->theta, 0.0, kTol);
  EXPECT_NEAR(p->phi, kPi / 2, kTol);
  EXPECT_NEAR(p->b, 1.0, kTol);
  EXPECT_NEAR(p->c, 1.0, kTol);
}

TEST(ClassifyPt, RealDeltaIsPt) {
  const auto bc = make_nonseparated(1.0, 0.0, -2.0, 1.0);
  const auto p = classify_pt(bc);
  ASSERT_TRUE(p);
  EXPECT_NEAR(p->theta, 0.0, kTol);
  EXPECT_NEAR(p->phi, 0.0, kTol);
  EXPECT_NEAR(p->b, 0.0, kTol);
  EXPECT_NEAR(p->c, -2.0, kTol);
  EXPECT_TRUE(satisfies_pt_algebraic(bc));
}

TEST(ClassifyPt, AntiDeltaCanonicalForm) {
  const auto p = classify_pt(make_nonseparated(-1.0, 0.0, 5.0, -1.0));
  ASSERT_TRUE(p);
  EXPECT_NEAR(p->theta, 0.0, kTol);
  EXPECT_NEAR(p->phi, kPi, kTol);
  EXPECT_NEAR(p->b, 0.0, kTol);
  EXPECT_NEAR(p->c, 5.0, kTol);
}

TEST(ClassifyPt, NegativeBetaShiftsTheta) {
  // theta = 0.3 with b = -1, c = -0.5 is theta = 0.3 + pi with b = 1, c = 0.5
  const Matrix2 m = PTParams{0.3, 0.7, -1.0, -0.5}.reconstruct();
  const auto p = classify_pt(make_nonseparated(m));
  ASSERT_TRUE(p);
  EXPECT_NEAR(p->theta, 0.3 + kPi, kTol);
  EXPECT_NEAR(p->b, 1.0, kTol);
  EXPECT_NEAR(p->c, 0.5, kTol);
  EXPECT_NEAR(p->phi, 0.7 + kPi, kTol);
  EXPECT_LT(max_abs_diff(p->reconstruct(), m), kTol);
}

TEST(ClassifyPt, DeterminantIsPhaseSquared) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi), bd(0.0, 4.0), u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double theta = angle(rng), b = bd(rng);
    const double c = -1.0 / std::max(b, 0.25) + 5.0 * u(rng);
    const Matrix2 m = PTParams{theta, angle(rng), b, c}.reconstruct();
    EXPECT_LT(std::abs(m.det() - unit_phase(2.0 * theta)), 1e-12);
  }
}

TEST(ClassifyPt, NonPtRejectedByBothTests) {
  const auto bc = make_nonseparated(Complex(1.0, 0.5), 0.3, Complex(0.2, 0.1), 1.0);
  EXPECT_FALSE(classify_pt(bc));
  EXPECT_FALSE(satisfies_pt_algebraic(bc));
}

TEST(ClassifyPt, RoundTripAndAlgebraicAgreement) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi), bd(0.0, 3.0), u(0.0, 1.0),
      entry(-2.0, 2.0);
  int accepted = 0, rejected = 0;
  for (int i = 0; i < 10000; ++i) {
    Matrix2 m;
    const int kind = i % 3;
    if (kind == 0) {
      m = {Complex(entry(rng), entry(rng)), Complex(entry(rng), entry(rng)),
           Complex(entry(rng), entry(rng)), Complex(entry(rng), entry(rng))};
    } else {
      const double b = bd(rng);
      const double c = b > 0.0 ? -1.0 / b + 4.0 * u(rng) : entry(rng);
      const PTParams in{angle(rng), angle(rng), b, c};
      m = in.reconstruct();
      if (kind == 2)
        m.gamma += Complex(1e-6, 0.0) * unit_phase(angle(rng));
    }
    if (std::abs(m.det()) <= tol::kDegenerateDet)
      continue;
    const auto bc = make_nonseparated(m);
    const auto p = classify_pt(bc);
    ASSERT_EQ(p.has_value(), satisfies_pt_algebraic(bc)) << "sample " << i;
    if (p) {
      EXPECT_LT(max_abs_diff(p->reconstruct(), m), kTol);
      EXPECT_GE(p->b, 0.0);
      EXPECT_GE(1.0 + p->b * p->c, -kTol);
      ++accepted;
    } else {
      ++rejected;
    }
    if (kind == 1) {
      EXPECT_TRUE(p) << "constructed sample " << i;
    }
  }
  EXPECT_GT(accepted, 3000);
  EXPECT_GT(rejected, 3000);
}

TEST(PtRealSpectrum, Examples) {
  EXPECT_TRUE(pt_real_spectrum_condition({0.0, 0.0, 0.0, -2.0}));
  EXPECT_TRUE(pt_real_spectrum_condition({0.0, kPi / 2, 1.0, 1.0}));
  EXPECT_FALSE(pt_real_spectrum_condition({0.0, 3 * kPi / 4, 2.0, 2.0}));
}

TEST(PtRealSpectrum, MarginalFlag) {
  // cos phi = 0 with bc sin^2 phi > 0 sits on the boundary of the second branch
  EXPECT_TRUE(pt_real_spectrum_marginal({0.0, kPi / 2, 1.0, 1.0}));
  EXPECT_FALSE(pt_real_spectrum_marginal({0.0, 3 * kPi / 4, 2.0, 2.0}));
  EXPECT_FALSE(pt_real_spectrum_marginal({0.0, 0.0, 0.0, -2.0}));
}

TEST(RealSpectrumCondition, Examples) {
  auto r = classify_real_spectrum_condition(make_nonseparated(1.5, 1.0, 1.0, 1.5));
  EXPECT_EQ(r.verdict, Ternary::yes);
  ASSERT_TRUE(r.params);
  EXPECT_NEAR(r.params->t, 3.0, kTol);
  EXPECT_NEAR(r.params->b, 1.0, kTol);
  EXPECT_NEAR(r.params->c, 1.0, kTol);

  r = classify_real_spectrum_condition(make_nonseparated(1.0, 0.0, -2.0, 1.0));
  EXPECT_EQ(r.verdict, Ternary::yes);

  r = classify_real_spectrum_condition(make_nonseparated(1.0, 1.0, 3.0, 1.0));
  EXPECT_EQ(r.verdict, Ternary::no);
  EXPECT_FALSE(r.marginal);
}

TEST(RealSpectrumCondition, ZeroEntriesCarryNoPhase) {
  // gamma = 0 with tau and beta sharing the phase i
  const Complex i = kI;
  auto r = classify_real_spectrum_condition(make_nonseparated(i, i, 0.0, i));
  EXPECT_EQ(r.verdict, Ternary::yes);
  // tau = 0: k^2 = -1 for the first, k^2 = 1 for the second
  r = classify_real_spectrum_condition(make_nonseparated(1.0, i, -i, -1.0));
  EXPECT_EQ(r.verdict, Ternary::yes);
  r =classify_real_spectrum_condition(make_nonseparated(Complex(2.0, 0.0), i, i, Complex(-2.0, 0.0)));
  EXPECT_EQ(r.verdict, Ternary::no);
  // beta = 0 and tau = 0: gamma alone fixes the phase
  r = classify_real_spectrum_condition(make_nonseparated(1.0, 0.0, i, -1.0));
  EXPECT_EQ(r.verdict, Ternary::yes);
}

TEST(RealSpectrumCondition, PhaseMismatchIsNo) {
  const auto r = classify_real_spectrum_condition(make_nonseparated(1.0, 0.0, kI, 1.0));
  EXPECT_EQ(r.verdict, Ternary::no);
  EXPECT_FALSE(r.params);
}

TEST(RealSpectrumCondition, NeverNotApplicable) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int i = 0; i < 500; ++i) {
    const Matrix2 m{Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng)),
                    Complex(g(rng), g(rng))};
    EXPECT_NE(classify_real_spectrum_condition(make_nonseparated(m)).verdict,
              Ternary::not_applicable);
  }
}

TEST(SpecialTags, Examples) {
  auto tags = special_tags(make_nonseparated(1.0, 0.0, -2.0, 1.0));
  ASSERT_EQ(tags.size(), 1u);
  EXPECT_EQ(tags[0], (SpecialTag{TagKind::delta, -2.0}));

  tags = special_tags(make_nonseparated(-1.0, 0.0, 5.0, -1.0));
  ASSERT_EQ(tags.size(), 1u);
  EXPECT_EQ(tags[0], (SpecialTag{TagKind::anti_delta, 5.0}));

  tags = special_tags(make_separated_sa(kInfiniteStrength, 0.0));
  ASSERT_EQ(tags.size(), 2u);
  EXPECT_EQ(tags[0], (SpecialTag{TagKind::dirichlet, 0.0, HalfLine::right}));
  EXPECT_EQ(tags[1], (SpecialTag{TagKind::neumann, 0.0, HalfLine::left}));

  tags = special_tags(make_nonseparated(Matrix2::identity()));
  ASSERT_EQ(tags.size(), 1u);
  EXPECT_EQ(tags[0].kind, TagKind::free);

  EXPECT_TRUE(special_tags(make_nonseparated(2.0, 0.0, 1.0, 0.5)).empty());
}

TEST(Classify, ReportFlags) {
  const auto r = classify(make_nonseparated(1.0, 0.0, -2.0, 1.0));
  EXPECT_TRUE(r.is_self_adjoint);
  EXPECT_TRUE(r.is_pt);
  ASSERT_TRUE(r.pt_real_spectrum_condition);
  EXPECT_TRUE(*r.pt_real_spectrum_condition);
  EXPECT_EQ(r.has_real_spectrum_by_paper_condition, Ternary::yes);
  EXPECT_FALSE(r.marginal);

  const auto sep = classify(make_separated_sa(1.0, -1.0));
  EXPECT_TRUE(sep.is_self_adjoint);
  EXPECT_EQ(sep.has_real_spectrum_by_paper_condition, Ternary::not_applicable);
}

} // namespace
} // namespace pointint
