#include "nrtt/srs.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nrtt {

unsigned largest_prime_not_above(unsigned n)
{
    if (n < 2) {
        throw std::invalid_argument("largest_prime_not_above: n must be >= 2");
    }
    for (unsigned p = n;; --p) {
        bool prime = p >= 2;
        for (unsigned d = 2; d * d <= p; ++d) {
            if (p % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) {
            return p;
        }
    }
}

unsigned srs_config::zc_length() const
{
    return largest_prime_not_above(num_sounded);
}

void srs_config::validate() const
{
    if (fft_size == 0 || comb_size == 0 || num_sounded == 0) {
        throw std::invalid_argument("srs_config: fft_size, comb_size and num_sounded must be positive");
    }
    if (comb_offset >= comb_size) {
        throw std::invalid_argument("srs_config: comb_offset must be < comb_size");
    }
    if (first_subcarrier >= fft_size ||
        num_sounded * comb_size > fft_size - first_subcarrier) {
        throw std::invalid_argument("srs_config: comb does not fit the FFT grid");
    }
    if (std::gcd(zc_root, zc_length()) != 1) {
        throw std::invalid_argument("srs_config: zc_root not coprime with base sequence length " +
                                    std::to_string(zc_length()));
    }
}

cvec generate_zc(unsigned root, unsigned length)
{
    if (length == 0 || length % 2 == 0) {
        throw std::invalid_argument("generate_zc: length must be odd");
    }
    if (std::gcd(root, length) != 1) {
        throw std::invalid_argument("generate_zc: root must be coprime with length");
    }
    cvec x(length);
    const double n_d = static_cast<double>(length);
    const unsigned long long m = 2ull * length;  // phase period of exp(-j*pi*k/length) in k
    for (unsigned n = 0; n < length; ++n) {
        // Reduce root*n*(n+1) modulo 2*length before the float conversion to
        // keep full phase precision for long sequences.
        unsigned long long prod = static_cast<unsigned long long>(n) * (n + 1) % m;
        prod = prod * (root % m) % m;
        x[n] = std::polar(1.0, -std::numbers::pi * static_cast<double>(prod) / n_d);
    }
    return x;
}

pilot_grid map_to_comb(const cvec& seq, const srs_config& cfg)
{
    cfg.validate();
    if (seq.size() != cfg.num_sounded) {
        throw std::invalid_argument("map_to_comb: sequence length must equal num_sounded");
    }
    const unsigned last = cfg.first_subcarrier + cfg.comb_offset +
                          (cfg.num_sounded - 1) * cfg.comb_size;
    if (last >= cfg.fft_size) {
        throw std::invalid_argument("map_to_comb: comb overflows the FFT grid");
    }
    pilot_grid grid;
    grid.symbols.assign(cfg.fft_size, cd{0.0, 0.0});
    grid.mask.assign(cfg.fft_size, false);
    for (unsigned i = 0; i < cfg.num_sounded; ++i) {
        const unsigned k = cfg.first_subcarrier + cfg.comb_offset + i * cfg.comb_size;
        grid.symbols[k] = seq[i];
        grid.mask[k] = true;
    }
    return grid;
}

pilot_grid make_pilots(const srs_config& cfg)
{
    cfg.validate();
    const unsigned n_zc = cfg.zc_length();
    const cvec base = generate_zc(cfg.zc_root, n_zc);
    cvec seq(cfg.num_sounded);
    for (unsigned i = 0; i < cfg.num_sounded; ++i) {
        seq[i] = base[i % n_zc];  // cyclic extension
    }
    return map_to_comb(seq, cfg);
}

channel_estimate ls_estimate(const cvec& y, const pilot_grid& pilots)
{
    if (y.size() != pilots.symbols.size()) {
        throw std::invalid_argument("ls_estimate: received vector length mismatch");
    }
    channel_estimate est;
    est.h_hat.assign(y.size(), cd{0.0, 0.0});
    est.mask = pilots.mask;
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (pilots.mask[k]) {
            est.h_hat[k] = std::conj(pilots.symbols[k]) * y[k];
        }
    }
    return est;
}

}  // namespace nrtt
