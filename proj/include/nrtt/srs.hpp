#pragma once

#include <complex>
#include <vector>

namespace nrtt {

using cd = std::complex<double>;
using cvec = std::vector<cd>;

/// SRS resource layout on the OFDM grid. Defaults follow a 30 kHz SCS
/// carrier with a 1536-point FFT and a comb-2 SRS spanning 37.44 MHz,
/// centered in the grid.
struct srs_config {
    unsigned fft_size = 1536;        ///< K
    unsigned comb_size = 2;          ///< Kc, frequency-domain decimation
    unsigned comb_offset = 0;        ///< comb shift within [0, Kc)
    unsigned first_subcarrier = 144; ///< grid index of the first comb position
    unsigned num_sounded = 624;      ///< occupied subcarriers
    unsigned zc_root = 1;            ///< Zadoff-Chu root, coprime with the base length

    void validate() const;

    /// Base sequence length: largest prime not above num_sounded.
    unsigned zc_length() const;
};

/// Frequency-domain pilot symbols with their occupancy mask.
/// Unit modulus on sounded bins, zero elsewhere.
struct pilot_grid {
    cvec symbols;
    std::vector<bool> mask;
};

/// Least-squares frequency-domain channel estimate. h_hat is zero wherever
/// the mask is false.
struct channel_estimate {
    cvec h_hat;
    std::vector<bool> mask;
    double slot_time = 0.0;  ///< seconds since session start
};

/// Zadoff-Chu sequence x[n] = exp(-j*pi*root*n*(n+1)/length).
/// length must be odd and coprime with root.
cvec generate_zc(unsigned root, unsigned length);

/// Place a sequence of num_sounded symbols onto the comb defined by cfg.
/// seq.size() must equal cfg.num_sounded.
pilot_grid map_to_comb(const cvec& seq, const srs_config& cfg);

/// Pilot grid for cfg: prime-length ZC base sequence, cyclically extended
/// to num_sounded symbols, mapped onto the comb.
pilot_grid make_pilots(const srs_config& cfg);

/// Per-bin least-squares estimate h_hat[k] = conj(s[k]) * y[k] on sounded
/// bins, zero elsewhere. y.size() must match the grid size.
channel_estimate ls_estimate(const cvec& y, const pilot_grid& pilots);

/// Largest prime <= n (n >= 2).
unsigned largest_prime_not_above(unsigned n);

}  // namespace nrtt
