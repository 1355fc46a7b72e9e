#pragma once

#include <cstdint>

namespace nrtt {

/// Speed of light in vacuum, m/s.
inline constexpr double speed_of_light = 299792458.0;

/// Rounded speed of light (3e8 m/s) used by common link-budget rules of
/// thumb; selects the convention under which one TA code at 30 kHz SCS
/// corresponds to exactly 39.0625 m of one-way range.
inline constexpr double speed_of_light_rounded = 3.0e8;

/// NR basic time unit T_c = 1 / (480 kHz * 4096) seconds.
inline constexpr double basic_time_unit = 1.0 / (480e3 * 4096.0);

/// Timing advance command, as carried in the RAR. Unitless code.
struct ta_code {
    std::uint32_t value = 0;

    friend bool operator==(ta_code, ta_code) = default;
};

/// Rounding applied when a gNB maps a delay estimate onto a TA code.
enum class ta_rounding {
    half_up,  ///< symmetric quantization error (default)
    floor,    ///< never over-advance the UE
};

/// NR timing constants for one numerology.
///
/// All derived quantities are computed from mu so the relations
/// delta_f = 15 kHz * 2^mu and slot = 1 ms / 2^mu hold by construction.
struct nr_timing {
    unsigned mu = 1;                 ///< numerology index, 0..5
    std::uint32_t ta_cap = 3846;     ///< largest accepted TA code

    /// Subcarrier spacing in Hz.
    double subcarrier_spacing() const { return 15e3 * static_cast<double>(1u << mu); }

    /// Slot duration in seconds.
    double slot_duration() const { return 1e-3 / static_cast<double>(1u << mu); }

    /// RTT step of one TA code: 16 * 64 * T_c / 2^mu seconds.
    double ta_step() const { return 16.0 * 64.0 * basic_time_unit / static_cast<double>(1u << mu); }

    void validate() const;
};

/// Coarse RTT in seconds represented by a TA code.
/// Throws std::out_of_range if the code exceeds the configured cap.
double ta_to_rtt(ta_code ta, const nr_timing& timing);

/// One-way range in meters for a round-trip time. Throws std::domain_error
/// for negative input. Pass speed_of_light_rounded for the rounded-c
/// convention.
double rtt_to_range(double rtt_s, double light_speed_mps = speed_of_light);

/// Inverse of ta_to_rtt: quantize a (non-negative) RTT onto a TA code.
/// Throws std::domain_error for negative input, std::out_of_range if the
/// result exceeds the cap.
ta_code quantize_rtt_to_ta(double rtt_s, const nr_timing& timing,
                           ta_rounding rounding = ta_rounding::half_up);

}  // namespace nrtt
