#include "vlcsim/optics.hpp"

#include <cmath>
#include <string>

#include "vlcsim/error.hpp"

namespace vlcsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_angle(double a, const char* name) {
    if (!(a >= 0.0 && a <= kHalfPi)) {
        throw DomainError(std::string(name) + " must lie in [0, pi/2], got " + std::to_string(a));
    }
}

}  // namespace

double lambertian_order(double semi_angle_deg) {
    if (!(semi_angle_deg > 0.0 && semi_angle_deg < 90.0)) {
        throw DomainError("semi-angle must lie in (0, 90) degrees, got " +
                          std::to_string(semi_angle_deg));
    }
    return -std::numbers::ln2 / std::log(std::cos(deg_to_rad(semi_angle_deg)));
}

EmitterProfile::EmitterProfile(double semi_angle_deg, double power_per_led_w)
    : semi_angle_deg_(semi_angle_deg),
      order_(vlcsim::lambertian_order(semi_angle_deg)),
      power_w_(power_per_led_w) {
    if (!(power_per_led_w > 0.0)) {
        throw DomainError("LED power must be positive");
    }
}

double radiant_intensity(const EmitterProfile& profile, double theta) {
    require_angle(theta, "theta");
    const double m = profile.lambertian_order();
    return profile.power_per_led() * (m + 1.0) / (2.0 * kPi) * std::pow(std::cos(theta), m);
}

double los_gain(double theta, double psi, double distance, const EmitterProfile& profile,
                const ReceiverSpec& receiver) {
    if (!(distance > 0.0)) throw DomainError("LOS distance must be positive");
    require_angle(theta, "theta");
    require_angle(psi, "psi");
    if (psi > receiver.fov_rad()) return 0.0;
    const double m = profile.lambertian_order();
    return (m + 1.0) * receiver.area_m2 * std::pow(std::cos(theta), m) * std::cos(psi) *
           receiver.gain / (2.0 * kPi * distance * distance);
}

double reflection_source_factor(double theta, double alpha, double d1,
                                const EmitterProfile& profile) {
    if (!(d1 > 0.0)) throw DomainError("source-to-patch distance must be positive");
    require_angle(theta, "theta");
    require_angle(alpha, "alpha");
    const double m = profile.lambertian_order();
    return (m + 1.0) * std::pow(std::cos(theta), m) * std::cos(alpha) / (2.0 * kPi * d1 * d1);
}

double reflection_receiver_factor(double beta, double psi, double d2, double patch_area,
                                  double reflectivity, const ReceiverSpec& receiver) {
    if (!(d2 > 0.0)) throw DomainError("patch-to-receiver distance must be positive");
    if (!(reflectivity >= 0.0 && reflectivity <= 1.0)) {
        throw DomainError("reflectivity must lie in [0, 1]");
    }
    require_angle(beta, "beta");
    require_angle(psi, "psi");
    if (psi > receiver.fov_rad()) return 0.0;
    return reflectivity * patch_area * std::cos(beta) * std::cos(psi) * receiver.area_m2 *
           receiver.gain / (kPi * d2 * d2);
}

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double ber_pam(int pam_order, double snr) {
    if (pam_order < 2 || !is_power_of_two(pam_order)) {
        throw DomainError("PAM order must be a power of two >= 2, got " +
                          std::to_string(pam_order));
    }
    if (!(snr >= 0.0)) throw DomainError("SNR must be non-negative");
    const double m = pam_order;
    const double prefactor = (m - 1.0) / (m * std::log2(m));
    return prefactor * q_function(std::sqrt(snr / (2.0 * (m - 1.0))));
}

double shot_noise_variance(double received_power_w, const SignalParams& params,
                           const ReceiverSpec& receiver) {
    const double q = params.electron_charge;
    const double b = params.bandwidth_hz;
    return 2.0 * q * receiver.responsivity_a_per_w * received_power_w * b +
           2.0 * q * params.background_current_a * params.i2_factor * b +
           params.extra_noise_variance;
}

SnrPair snr_pair(double signal_data, double signal_rogue, double noise_variance) {
    if (!(noise_variance > 0.0)) throw DomainError("noise variance must be positive");
    if (!(signal_data >= 0.0) || !(signal_rogue >= 0.0)) {
        throw DomainError("signal amplitudes must be non-negative");
    }
    const double sd2 = signal_data * signal_data;
    const double sr2 = signal_rogue * signal_rogue;
    return {sd2 / (noise_variance + sr2), sr2 / (noise_variance + sd2)};
}

}  // namespace vlcsim
