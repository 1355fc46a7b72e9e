#include "nrtt/numerology.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nrtt {

void nr_timing::validate() const
{
    if (mu > 5) {
        throw std::invalid_argument("nr_timing: mu must be in 0..5, got " + std::to_string(mu));
    }
}

double ta_to_rtt(ta_code ta, const nr_timing& timing)
{
    timing.validate();
    if (ta.value > timing.ta_cap) {
        throw std::out_of_range("ta_to_rtt: TA code " + std::to_string(ta.value) +
                                " exceeds cap " + std::to_string(timing.ta_cap));
    }
    return static_cast<double>(ta.value) * timing.ta_step();
}

double rtt_to_range(double rtt_s, double light_speed_mps)
{
    if (rtt_s < 0.0) {
        throw std::domain_error("rtt_to_range: negative RTT");
    }
    return rtt_s * light_speed_mps / 2.0;
}

ta_code quantize_rtt_to_ta(double rtt_s, const nr_timing& timing, ta_rounding rounding)
{
    timing.validate();
    if (rtt_s < 0.0) {
        throw std::domain_error("quantize_rtt_to_ta: negative RTT");
    }
    const double steps = rtt_s / timing.ta_step();
    const double code = (rounding == ta_rounding::half_up) ? std::floor(steps + 0.5) : std::floor(steps);
    if (code > static_cast<double>(timing.ta_cap)) {
        throw std::out_of_range("quantize_rtt_to_ta: RTT beyond TA code range");
    }
    return ta_code{static_cast<std::uint32_t>(code)};
}

}  // namespace nrtt
