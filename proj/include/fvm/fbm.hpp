#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace fvm {

/// Self-similarity exponent, valid on (0, 1).
struct HurstIndex {
    double value;

    explicit HurstIndex(double v);
};

/// Autocovariance of unit-variance-per-step fractional Gaussian noise:
/// gamma(lag) = (step^{2H}/2) (|lag+1|^{2H} - 2|lag|^{2H} + |lag-1|^{2H}).
/// gamma(0) = step^{2H}; callers extend symmetrically for negative lags.
double fgn_covariance(HurstIndex h, long lag, double step);

struct FgnSequence {
    std::vector<double> values;
    double step = 1.0;
    HurstIndex hurst;
    std::uint64_t seed = 0;
};

struct FbmPath {
    std::vector<double> times;
    std::vector<double> values; // values[0] = 0 at times[0] = 0
    HurstIndex hurst;
    std::uint64_t seed = 0;
};

/// Exact sampler for a stationary Gaussian sequence with a prescribed
/// autocovariance, by circulant embedding of the covariance into a
/// nonnegative-definite circulant matrix (spectral/FFT synthesis).
/// Construction fails if the embedding has a negative eigenvalue; the
/// eigenvalues are never clamped.
class CirculantSampler {
public:
    /// cov: autocovariance at lags 0..m/2 where m = 2*(cov.size()-1) is the
    /// embedding size (must make m a power of two).
    explicit CirculantSampler(const std::vector<double>& cov);

    /// First n values of one sample, n <= m. Deterministic in seed.
    std::vector<double> sample(std::uint64_t seed, std::size_t n) const;

    double min_eigenvalue() const noexcept { return min_eigenvalue_; }

private:
    std::size_t m_;
    std::vector<double> scale_; // sqrt(lambda_k / m), halved variance on paired bins
    double min_eigenvalue_;
};

/// Circulant eigenvalues of the symmetric extension of cov(0..m/2).
std::vector<double> circulant_eigenvalues(const std::vector<double>& cov);

/// Reusable fGn generator: circulant embedding by default, exact
/// Hosking recursion as fallback when the embedding is not
/// nonnegative-definite. Sampling is const and thread-safe.
class FgnGenerator {
public:
    FgnGenerator(HurstIndex h, std::size_t n, double step);

    FgnSequence sample(std::uint64_t seed) const;

    bool uses_fallback() const noexcept { return fallback_; }

private:
    HurstIndex h_;
    std::size_t n_;
    double step_;
    bool fallback_ = false;
    std::vector<double> cov_unit_; // unit-step covariances, lags 0..n-1 (fallback only)
    std::unique_ptr<CirculantSampler> sampler_;
};

FgnSequence generate_fgn(HurstIndex h, std::size_t n, double step, std::uint64_t seed);

/// Exact O(n^2) Durbin-Levinson (Hosking) generator; any n.
FgnSequence generate_fgn_hosking(HurstIndex h, std::size_t n, double step, std::uint64_t seed);

/// Cumulative sum of generate_fgn, prefixed with 0 at t = 0; length n+1.
FbmPath generate_fbm(HurstIndex h, std::size_t n, double step, std::uint64_t seed);

/// Exact small-n oracle via dense Cholesky factorization of the fGn
/// covariance matrix. n <= 2048.
FbmPath generate_fbm_cholesky(HurstIndex h, std::size_t n, double step, std::uint64_t seed);

/// Windowed differences B_H(t) - B_H(t - window*step); window=1 recovers the
/// fGn increments the path was built from.
std::vector<double> fractional_noise(const FbmPath& path, std::size_t window);

/// Radix-2 in-place FFT, size must be a power of two. sign=-1 forward,
/// sign=+1 inverse (unnormalized).
void fft_pow2(std::vector<std::complex<double>>& a, int sign);

} // namespace fvm
