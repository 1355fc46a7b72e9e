#pragma once

#include <span>

#include "nrtt/srs.hpp"

namespace nrtt {

/// Unnormalized inverse DFT: out[n] = sum_k in[k] * exp(+j*2*pi*k*n/N).
///
/// Backed by a cached FFTW plan per size. Instances own their buffers; one
/// instance must not be shared between threads, but separate instances for
/// the same size are safe to use concurrently.
class inverse_dft {
public:
    explicit inverse_dft(unsigned size);
    ~inverse_dft();

    inverse_dft(const inverse_dft&) = delete;
    inverse_dft& operator=(const inverse_dft&) = delete;

    unsigned size() const { return size_; }

    /// in.size() may be smaller than size(); remaining bins are zero.
    void run(std::span<const cd> in, std::span<cd> out);

private:
    unsigned size_;
    void* plan_;  // fftw_plan
    cd* in_;
    cd* out_;
};

/// Convenience: unnormalized inverse DFT of v, output length = v.size().
cvec inverse_dft_of(const cvec& v);

}  // namespace nrtt
