// Copyright 2026 The revsurf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "revsurf/profile.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace revsurf {
namespace {

constexpr double kPi = std::numbers::pi;

Profile closed(const std::string& text, double L) {
  return Profile::from_expression(parse_expression(text), L, text);
}

Profile sampled_sine(std::size_t knots) {
  std::vector<double> s(knots), a(knots);
  for (std::size_t i = 0; i < knots; ++i) {
    s[i] = kPi * static_cast<double>(i) / static_cast<double>(knots - 1);
    a[i] = std::sin(s[i]);
  }
  a.back() = 0.0;
  return Profile::from_samples(s, a, "sampled sine");
}

TEST(Profile, RejectsBadLength) {
  EXPECT_THROW(closed("sin(s)", 0.0), std::invalid_argument);
  EXPECT_THROW(closed("sin(s)", -1.0), std::invalid_argument);
}

TEST(Profile, FromSamplesRejectsMalformedInput) {
  EXPECT_THROW(Profile::from_samples({0, 1, 2}, {0, 1, 0}), std::invalid_argument);
  EXPECT_THROW(Profile::from_samples({0, 1, 2, 3}, {0, 1, 0}), std::invalid_argument);
  EXPECT_THROW(Profile::from_samples({0.1, 1, 2, 3}, {0, 1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(Profile::from_samples({0, 1, 1, 3}, {0, 1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(Profile::from_samples({0, 1, 2, 3}, {0, -1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(Profile::from_samples({0, 1, 2, 3}, {0, NAN, 1, 0}), std::invalid_argument);
}

TEST(Profile, SampledSineValidates) {
  const Profile p = sampled_sine(101);
  EXPECT_TRUE(p.is_sampled());
  const ValidationReport r = validate(p, 1e-6);
  EXPECT_TRUE(r.passed());
  EXPECT_LT(r.a_begin_residual, 1e-6);
  EXPECT_LT(r.a_end_residual, 1e-6);
  EXPECT_LT(r.slope_begin_residual, 1e-6);
  EXPECT_LT(r.slope_end_residual, 1e-6);
}

TEST(Validate, SphereInteriorMinimumNearPoles) {
  const ValidationReport r = validate(make_preset("sphere"), 1e-8);
  EXPECT_TRUE(r.passed());
  EXPECT_NEAR(r.interior_min, std::sin(kPi / 2048.0), 1e-12);
}

TEST(Validate, ParabolaFailsSlopeConditions) {
  // a = s (pi - s): a'(0) = pi, a'(pi) = -pi.
  const ValidationReport r = validate(closed("s*(pi-s)", kPi), 1e-8);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.a_begin_ok);
  EXPECT_TRUE(r.a_end_ok);
  EXPECT_FALSE(r.slope_begin_ok);
  EXPECT_FALSE(r.slope_end_ok);
  EXPECT_NEAR(r.slope_begin_residual, kPi - 1.0, 1e-12);
}

TEST(Validate, NegativeInteriorFailsPositivity) {
  const ValidationReport r = validate(closed("sin(s)*(1-2*sin(s)^2)", kPi), 1e-8);
  EXPECT_FALSE(r.positive_ok);
  EXPECT_LT(r.interior_min, 0.0);
}

TEST(Validate, DomainErrorIsReported) {
  const ValidationReport r = validate(closed("ln(s)", 1.0), 1e-8);
  EXPECT_FALSE(r.passed());
  ASSERT_TRUE(r.evaluation_error.has_value());
}

TEST(Validate, BumpPasses) {
  EXPECT_TRUE(validate(make_preset("bump:0.5"), 1e-8).passed());
}

TEST(Area, Sphere) { EXPECT_NEAR(area(make_preset("sphere")), 4.0 * kPi, 1e-8); }

TEST(Area, HalfScaleSphere) {
  EXPECT_NEAR(area(closed("0.5*sin(s/0.5)", kPi / 2.0)), kPi, 1e-8);
}

TEST(Area, BumpAgainstSimpson) {
  const Profile p = make_preset("bump:0.5");
  const double oracle =
      2.0 * kPi * testing::composite_simpson([&](double s) { return p.a(s); }, 0.0, kPi, 4000);
  EXPECT_NEAR(area(p), 2.0 * kPi * 8.0 / 3.0, 1e-8);
  EXPECT_NEAR(area(p), oracle, 1e-8);
}

TEST(Rescale, ToArea) {
  const Profile sphere = make_preset("sphere");
  EXPECT_NEAR(rescale_to_area(sphere, 4.0 * kPi).length(), kPi, 1e-12);

  const Profile big = rescale_to_area(sphere, 16.0 * kPi);
  EXPECT_NEAR(big.length(), 2.0 * kPi, 1e-10);
  EXPECT_NEAR(big.a(kPi), 2.0, 1e-10);
  EXPECT_NEAR(area(big), 16.0 * kPi, 1e-7);

  const Profile bump = rescale_to_area(make_preset("bump:0.5"), 4.0 * kPi);
  EXPECT_NEAR(area(bump), 4.0 * kPi, 1e-8);
  EXPECT_THROW(rescale_to_area(sphere, -1.0), std::invalid_argument);
  EXPECT_THROW(sphere.rescaled(0.0), std::invalid_argument);
}

TEST(Presets, Parsing) {
  EXPECT_EQ(make_preset("sphere").label(), "sphere");
  EXPECT_THROW(make_preset("torus"), std::invalid_argument);
  EXPECT_THROW(make_preset("bump:-1"), std::invalid_argument);
  EXPECT_THROW(make_preset("bump:abc"), std::invalid_argument);
  EXPECT_THROW(make_preset("dumbbell:0"), std::invalid_argument);
  EXPECT_THROW(make_preset("dumbbell:0.34"), std::invalid_argument);
  EXPECT_EQ(list_presets().size(), 3u);
}

TEST(Csv, ReadsProfile) {
  std::ostringstream csv;
  csv << "s,a\r\n";
  for (int i = 0; i <= 64; ++i) {
    const double s = kPi * i / 64.0;
    csv << testing::fmt17(s) << "," << testing::fmt17(i == 64 ? 0.0 : std::sin(s)) << "\r\n";
  }
  std::istringstream in(csv.str());
  const Profile p = read_profile_csv(in, "csv");
  EXPECT_TRUE(p.is_sampled());
  EXPECT_NEAR(p.length(), kPi, 1e-15);
  EXPECT_NEAR(p.a(1.0), std::sin(1.0), 1e-6);
}

TEST(Csv, RejectsBadInput) {
  std::istringstream no_header("0,0\n1,1\n");
  EXPECT_THROW(read_profile_csv(no_header), std::runtime_error);
  std::istringstream three_cols("s,a\n0,0,0\n");
  EXPECT_THROW(read_profile_csv(three_cols), std::runtime_error);
  std::istringstream junk("s,a\n0,x\n");
  EXPECT_THROW(read_profile_csv(junk), std::runtime_error);
}

TEST(ProfileProperty, HomothetyPreservesSlope) {
  testing::ProfileCorpus corpus(11);
  for (const Profile& p : corpus.take(40)) {
    for (double lambda : {0.5, 2.0, 10.0}) {
      const Profile q = p.rescaled(lambda);
      ASSERT_NEAR(q.length(), lambda * p.length(), 1e-12);
      for (int i = 0; i <= 16; ++i) {
        const double s = p.length() * i / 16.0;
        const Jet3 a = p.jet(s);
        const Jet3 b = q.jet(lambda * s);
        EXPECT_NEAR(b.v, lambda * a.v, 1e-12 * lambda);
        EXPECT_NEAR(b.d1, a.d1, 1e-12);
        EXPECT_NEAR(b.d2, a.d2 / lambda, 1e-12);
        EXPECT_NEAR(b.d3, a.d3 / (lambda * lambda), 1e-12);
      }
    }
  }
}

TEST(ProfileProperty, SampledConvergesToClosedForm) {
  testing::ProfileCorpus corpus(12);
  for (const Profile& p : corpus.take(20)) {
    const std::size_t n = 201;
    std::vector<double> s(n), a(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = p.length() * static_cast<double>(i) / static_cast<double>(n - 1);
      a[i] = std::max(p.a(s[i]), 0.0);
    }
    a.back() = 0.0;
    const Profile q = Profile::from_samples(s, a);
    for (int i = 0; i <= 97; ++i) {
      const double x = p.length() * i / 97.0;
      EXPECT_NEAR(q.a(x), p.a(x), 1e-5) << p.label() << " at " << x;
      EXPECT_NEAR(q.a_prime(x), p.a_prime(x), 1e-3) << p.label() << " at " << x;
    }
  }
}

TEST(ProfileProperty, PresetsValidate) {
  for (const char* name : {"sphere", "bump:0.5", "bump:2", "bump:-0.5", "dumbbell:0.1",
                           "dumbbell:0.25", "dumbbell:0.33"}) {
    EXPECT_TRUE(validate(make_preset(name), 1e-8).passed()) << name;
  }
}

}  // namespace
}  // namespace revsurf
