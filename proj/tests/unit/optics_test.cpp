#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/special_functions/erf.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "vlcsim/error.hpp"
#include "vlcsim/optics.hpp"

namespace vlcsim {
namespace {

constexpr double kPi = std::numbers::pi;

// Reference values below were computed with mpmath at 40 digits.
constexpr double kOrder70 = 0.6460587703487338;
constexpr double kOrder30 = 4.818841679306418;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Composite Simpson over [0, pi/2] of intensity * 2 pi sin(theta).
double hemisphere_power(const EmitterProfile& p, int intervals) {
    const double h = (kPi / 2) / intervals;
    auto f = [&](double t) { return radiant_intensity(p, t) * 2.0 * kPi * std::sin(t); };
    double s = f(0.0) + f(kPi / 2);
    for (int i = 1; i < intervals; ++i) s += (i % 2 ? 4.0 : 2.0) * f(std::min(i * h, kPi / 2));
    return s * h / 3.0;
}

TEST(LambertianOrder, SixtyDegreesIsOne) { EXPECT_NEAR(lambertian_order(60.0), 1.0, 1e-15); }

TEST(LambertianOrder, MatchesReferenceValues) {
    EXPECT_NEAR(lambertian_order(70.0), kOrder70, 1e-12 * kOrder70);
    EXPECT_NEAR(lambertian_order(30.0), kOrder30, 1e-12 * kOrder30);
    EXPECT_NEAR(lambertian_order(70.0), 0.6461, 1e-4);
    EXPECT_NEAR(lambertian_order(30.0), 4.8188, 1e-4);
}

TEST(LambertianOrder, NarrowerBeamHasHigherOrder) {
    double prev = lambertian_order(89.0);
    for (double a = 88.0; a > 1.0; a -= 1.0) {
        const double m = lambertian_order(a);
        EXPECT_GT(m, prev) << a;
        prev = m;
    }
}

TEST(LambertianOrder, RejectsOutOfRange) {
    EXPECT_THROW(lambertian_order(0.0), DomainError);
    EXPECT_THROW(lambertian_order(90.0), DomainError);
    EXPECT_THROW(lambertian_order(-5.0), DomainError);
    EXPECT_THROW(lambertian_order(std::nan("")), DomainError);
}

TEST(EmitterProfile, RecomputesOrderAndValidatesPower) {
    const EmitterProfile p(70.0, 0.2);
    EXPECT_NEAR(p.lambertian_order(), -std::log(2.0) / std::log(std::cos(deg_to_rad(70.0))), 1e-12);
    EXPECT_THROW(EmitterProfile(70.0, 0.0), DomainError);
    EXPECT_THROW(EmitterProfile(95.0, 1.0), DomainError);
}

TEST(RadiantIntensity, OnAxisAndGrazing) {
    const EmitterProfile p(60.0, 1.0);
    EXPECT_NEAR(radiant_intensity(p, 0.0), 1.0 / kPi, 1e-15);
    EXPECT_NEAR(radiant_intensity(p, kPi / 2), 0.0, 1e-16);
    EXPECT_THROW(radiant_intensity(p, -0.1), DomainError);
    EXPECT_THROW(radiant_intensity(p, kPi / 2 + 0.01), DomainError);
}

TEST(RadiantIntensity, HalfPowerAtSemiAngle) {
    for (double a : {30.0, 45.0, 60.0, 70.0, 12.5, 85.0}) {
        const EmitterProfile p(a, 0.37);
        const double ratio = radiant_intensity(p, deg_to_rad(a)) / radiant_intensity(p, 0.0);
        EXPECT_NEAR(ratio, 0.5, 1e-12) << a;
    }
}

TEST(RadiantIntensity, HemisphereIntegralEqualsPower) {
    for (double a : {70.0, 60.0, 30.0}) {
        const EmitterProfile p(a, 2.5);
        EXPECT_NEAR(hemisphere_power(p, 200000) / 2.5, 1.0, 1e-6) << a;
    }
}

TEST(LosGain, ReferenceReceiverOnAxis) {
    const EmitterProfile p(60.0, 1.0);
    const ReceiverSpec rx{1e-4, 60.0, 4.5, 0.54};
    EXPECT_NEAR(los_gain(0.0, 0.0, 1.95, p, rx), 3.766980901583322e-5, 1e-12 * 3.77e-5);
}

TEST(LosGain, ZeroOutsideFovAndAtGrazing) {
    const EmitterProfile p(60.0, 1.0);
    const ReceiverSpec rx{1e-4, 60.0, 4.5, 0.54};
    EXPECT_EQ(los_gain(0.2, deg_to_rad(65.0), 2.0, p, rx), 0.0);
    EXPECT_NEAR(los_gain(kPi / 2, 0.1, 2.0, p, rx), 0.0, 1e-20);
    EXPECT_GT(los_gain(0.2, deg_to_rad(60.0), 2.0, p, rx), 0.0);
    EXPECT_THROW(los_gain(0.0, 0.0, 0.0, p, rx), DomainError);
    EXPECT_THROW(los_gain(0.0, 0.0, -1.0, p, rx), DomainError);
}

TEST(LosGain, ContinuousInsideFov) {
    const EmitterProfile p(70.0, 1.0);
    const ReceiverSpec rx{1e-4, 60.0, 4.5, 0.54};
    const double eps = 1e-7;
    for (double psi = 0.0; psi < deg_to_rad(59.0); psi += 0.05) {
        const double a = los_gain(0.3, psi, 2.0, p, rx);
        const double b = los_gain(0.3, psi + eps, 2.0, p, rx);
        EXPECT_NEAR(a, b, 1e-5 * a);
    }
}

TEST(ReflectionFactors, ReferenceValues) {
    const EmitterProfile p(60.0, 1.0);
    EXPECT_NEAR(reflection_source_factor(0.0, 0.0, 1.0, p), 1.0 / kPi, 1e-15);
    EXPECT_NEAR(reflection_source_factor(0.0, kPi / 2, 1.0, p), 0.0, 1e-16);
    const double near = reflection_source_factor(0.3, 0.4, 1.0, p);
    EXPECT_NEAR(reflection_source_factor(0.3, 0.4, 2.0, p), near / 4.0, 1e-15);
    EXPECT_THROW(reflection_source_factor(0.0, 0.0, 0.0, p), DomainError);

    const ReceiverSpec rx{1e-4, 60.0, 4.5, 0.54};
    EXPECT_NEAR(reflection_receiver_factor(0.0, 0.0, 1.0, 0.01, 0.8, rx), 1.1459155902616465e-6,
                1e-12 * 1.15e-6);
    EXPECT_EQ(reflection_receiver_factor(0.0, deg_to_rad(61.0), 1.0, 0.01, 0.8, rx), 0.0);
    EXPECT_EQ(reflection_receiver_factor(0.0, 0.0, 1.0, 0.01, 0.0, rx), 0.0);
    EXPECT_THROW(reflection_receiver_factor(0.0, 0.0, 0.0, 0.01, 0.8, rx), DomainError);
    EXPECT_THROW(reflection_receiver_factor(0.0, 0.0, 1.0, 0.01, 1.2, rx), DomainError);
}

TEST(ReflectionFactors, ProductMatchesClosedFormIntegrand) {
    // (m+1) A cos^m(theta) rho dA cos(alpha) cos(beta) cos(psi) gain / (2 pi^2 d1^2 d2^2)
    const EmitterProfile p(70.0, 1.0);
    const ReceiverSpec rx{1e-4, 60.0, 4.5, 0.54};
    const double th = 0.4, al = 0.7, be = 0.2, ps = 0.5, d1 = 2.3, d2 = 1.7, da = 0.01, rho = 0.8;
    const double m = p.lambertian_order();
    const double expected = (m + 1) * rx.area_m2 * std::pow(std::cos(th), m) * rho * da * std::cos(al) *
                            std::cos(be) * std::cos(ps) * rx.gain / (2 * kPi * kPi * d1 * d1 * d2 * d2);
    const double got = reflection_source_factor(th, al, d1, p) *
                       reflection_receiver_factor(be, ps, d2, da, rho, rx);
    EXPECT_NEAR(got, expected, 1e-13 * expected);
}

TEST(QFunction, KnownValuesAndSymmetry) {
    EXPECT_DOUBLE_EQ(q_function(0.0), 0.5);
    EXPECT_NEAR(q_function(1.0), 0.15865525393145705, 1e-15);
    EXPECT_NEAR(q_function(3.0), 1.3498980316300946e-3, 1e-17);
    for (double x = -6.0; x <= 6.0; x += 0.37) EXPECT_NEAR(q_function(-x), 1.0 - q_function(x), 1e-15);
}

TEST(QFunction, MatchesHighPrecisionOracle) {
    using big = boost::multiprecision::cpp_bin_float_50;
    double worst = 0.0;
    for (int i = 0; i <= 800; ++i) {
        const double x = i * 0.01;
        const big ref = boost::math::erfc(big(x) / boost::multiprecision::sqrt(big(2))) / 2;
        worst = std::max(worst, rel(q_function(x), ref.convert_to<double>()));
    }
    EXPECT_LE(worst, 1e-10);
}

TEST(BerPam, ZeroSnrPlateau) {
    EXPECT_DOUBLE_EQ(ber_pam(2, 0.0), 0.25);
    EXPECT_DOUBLE_EQ(ber_pam(4, 0.0), 0.1875);
    for (int m : {2, 4, 8, 16, 64}) {
        EXPECT_NEAR(ber_pam(m, 0.0), (m - 1.0) / (2.0 * m * std::log2(m)), 1e-15);
    }
}

TEST(BerPam, CrossesThresholdNearSixteenPointSix) {
    // Bisection on the public function; mpmath root is 16.567629992786275.
    double lo = 1.0, hi = 100.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (ber_pam(2, mid) > 1e-3 ? lo : hi) = mid;
    }
    EXPECT_NEAR(lo, 16.567629992786275, 1e-9);
    EXPECT_NEAR(lo, 16.56, 0.02 * 16.56);
    EXPECT_NEAR(ber_pam(2, 16.56), 1e-3, 2e-5);
}

TEST(BerPam, StrictlyDecreasing) {
    for (int m : {2, 4, 8}) {
        double prev = ber_pam(m, 0.0);
        for (double s = 0.25; s < 200.0; s *= 1.3) {
            const double b = ber_pam(m, s);
            EXPECT_LT(b, prev);
            prev = b;
        }
    }
}

TEST(BerPam, RejectsBadInput) {
    EXPECT_THROW(ber_pam(3, 1.0), DomainError);
    EXPECT_THROW(ber_pam(1, 1.0), DomainError);
    EXPECT_THROW(ber_pam(0, 1.0), DomainError);
    EXPECT_THROW(ber_pam(2, -1.0), DomainError);
}

TEST(ShotNoise, ReferenceAndLinearity) {
    const ReceiverSpec rx{1e-4, 60.0, 4.5, 0.54};
    SignalParams sig;
    sig.bandwidth_hz = 1e6;
    sig.background_current_a = 5.1e-3;
    sig.i2_factor = 0.562;
    EXPECT_NEAR(shot_noise_variance(1e-3, sig, rx), 1.09146681014616e-15, 1e-12 * 1.09e-15);

    SignalParams quiet = sig;
    quiet.background_current_a = 0.0;
    EXPECT_EQ(shot_noise_variance(0.0, quiet, rx), 0.0);

    SignalParams wide = sig;
    wide.bandwidth_hz = 2e6;
    EXPECT_NEAR(shot_noise_variance(1e-3, wide, rx), 2.0 * shot_noise_variance(1e-3, sig, rx), 1e-28);

    SignalParams extra = sig;
    extra.extra_noise_variance = 1e-14;
    EXPECT_NEAR(shot_noise_variance(1e-3, extra, rx) - shot_noise_variance(1e-3, sig, rx), 1e-14, 1e-28);
}

TEST(SnrPair, Examples) {
    auto a = snr_pair(1.0, 0.0, 1.0);
    EXPECT_DOUBLE_EQ(a.legitimate, 1.0);
    EXPECT_DOUBLE_EQ(a.rogue, 0.0);
    auto b = snr_pair(2.0, 1.0, 1.0);
    EXPECT_DOUBLE_EQ(b.legitimate, 2.0);
    EXPECT_DOUBLE_EQ(b.rogue, 0.2);
    auto c = snr_pair(1.0, 2.0, 1.0);
    EXPECT_DOUBLE_EQ(c.legitimate, b.rogue);
    EXPECT_DOUBLE_EQ(c.rogue, b.legitimate);
    EXPECT_THROW(snr_pair(1.0, 1.0, 0.0), DomainError);
    EXPECT_THROW(snr_pair(-1.0, 1.0, 1.0), DomainError);
}

TEST(SnrPair, ProductBelowOneProperty) {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> log_u(-12.0, 2.0);
    std::uniform_real_distribution<double> log_ratio(-14.0, 4.0);
    for (int i = 0; i < 20000; ++i) {
        const double sd = std::pow(10.0, log_u(rng));
        const double sr = std::pow(10.0, log_u(rng));
        // Noise relative to the stronger signal; below ~1e-16 the strict
        // inequality is lost to rounding in double precision.
        const double n = std::max(sd * sd, sr * sr) * std::pow(10.0, log_ratio(rng));
        const SnrPair s = snr_pair(sd, sr, n);
        EXPECT_LT(s.legitimate * s.rogue, 1.0);
        EXPECT_LT(std::min(s.legitimate, s.rogue), 1.0);
    }
}

}  // namespace
}  // namespace vlcsim
