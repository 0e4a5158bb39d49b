#pragma once

// Emission, channel-gain, noise, SNR and BER kernels for an intensity-modulated
// optical link. Everything here is a pure function of its arguments; angles are
// radians unless the name says otherwise.

#include <numbers>
#include <utility>

namespace vlcsim {

inline constexpr double kElectronCharge = 1.602176634e-19;  // C

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Lambertian order m for a half-power semi-angle given in degrees.
/// Throws DomainError unless 0 < semi_angle_deg < 90.
double lambertian_order(double semi_angle_deg);

/// Lambertian emission law of one LED.
class EmitterProfile {
public:
    /// Throws DomainError on a semi-angle outside (0, 90) or non-positive power.
    EmitterProfile(double semi_angle_deg, double power_per_led_w);

    double semi_angle_deg() const { return semi_angle_deg_; }
    double lambertian_order() const { return order_; }
    double power_per_led() const { return power_w_; }

    friend bool operator==(const EmitterProfile&, const EmitterProfile&) = default;

private:
    double semi_angle_deg_;
    double order_;
    double power_w_;
};

/// Photodiode front end. `gain` is the combined filter and concentrator gain,
/// taken as flat over the field of view.
struct ReceiverSpec {
    double area_m2 = 1e-4;
    double fov_deg = 60.0;
    double gain = 4.5;
    double responsivity_a_per_w = 0.54;

    double fov_rad() const { return deg_to_rad(fov_deg); }

    friend bool operator==(const ReceiverSpec&, const ReceiverSpec&) = default;
};

/// Modulation and noise parameters of the link.
struct SignalParams {
    int pam_order = 2;
    double modulation_index = 0.5;
    double bandwidth_hz = 1e6;
    double background_current_a = 5.1e-3;
    double i2_factor = 0.562;
    double electron_charge = kElectronCharge;
    /// Lumped thermal + ISI variance (A^2); added to shot noise as-is.
    double extra_noise_variance = 0.0;

    friend bool operator==(const SignalParams&, const SignalParams&) = default;
};

/// Radiant intensity (W/sr) at irradiance angle theta in [0, pi/2].
double radiant_intensity(const EmitterProfile& profile, double theta);

/// Direct-path DC gain. Zero when psi exceeds the receiver FOV.
/// Throws DomainError for distance <= 0 or angles outside [0, pi/2].
double los_gain(double theta, double psi, double distance,
                const EmitterProfile& profile, const ReceiverSpec& receiver);

/// Source half of the first-bounce gain: irradiance on a wall element per watt
/// emitted, (m+1) cos^m(theta) cos(alpha) / (2 pi d1^2).
double reflection_source_factor(double theta, double alpha, double d1,
                                const EmitterProfile& profile);

/// Receiver half of the first-bounce gain for one diffuse wall element:
/// rho dA cos(beta) cos(psi) A gain / (pi d2^2), zero beyond the FOV.
double reflection_receiver_factor(double beta, double psi, double d2,
                                  double patch_area, double reflectivity,
                                  const ReceiverSpec& receiver);

/// Gaussian tail probability Q(x) = erfc(x / sqrt 2) / 2.
double q_function(double x);

/// Gray-coded M-PAM bit error rate,
/// (M-1)/(M log2 M) * Q(sqrt(snr / (2(M-1)))).
/// Throws DomainError unless M is a power of two >= 2 and snr >= 0.
double ber_pam(int pam_order, double snr);

/// Shot-noise variance (A^2) for total received optical power, plus the
/// configured extra variance.
double shot_noise_variance(double received_power_w, const SignalParams& params,
                           const ReceiverSpec& receiver);

struct SnrPair {
    double legitimate;  ///< data over (noise + rogue)
    double rogue;       ///< rogue over (noise + data)
};

/// Signal-to-interference-plus-noise ratios for the legitimate and rogue links.
/// Signals are RMS photocurrents. Throws DomainError for noise_variance <= 0
/// or negative signals.
SnrPair snr_pair(double signal_data, double signal_rogue, double noise_variance);

bool is_power_of_two(int n);

}  // namespace vlcsim
