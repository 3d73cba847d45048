#include "fvm/fbm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fvm/errors.hpp"
#include "fvm/rng.hpp"

namespace fvm {

HurstIndex::HurstIndex(double v) : value(v) {
    if (!(v > 0.0) || !(v < 1.0)) {
        std::ostringstream msg;
        msg << "Hurst index must lie in (0, 1), got " << v;
        throw_domain(msg.str());
    }
}

double fgn_covariance(HurstIndex h, long lag, double step) {
    if (lag < 0) throw_domain("fgn_covariance: lag must be >= 0");
    if (!(step > 0.0)) throw_domain("fgn_covariance: step must be > 0");
    const double two_h = 2.0 * h.value;
    const double l = static_cast<double>(lag);
    const double core = std::pow(l + 1.0, two_h) - 2.0 * std::pow(l, two_h) +
                        std::pow(std::abs(l - 1.0), two_h);
    return 0.5 * std::pow(step, two_h) * core;
}

void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw_numeric("fft_pow2: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = static_cast<double>(sign) * 2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const std::complex<double> u = a[i + j];
                const std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::vector<double> circulant_eigenvalues(const std::vector<double>& cov) {
    if (cov.size() < 2) throw_numeric("circulant_eigenvalues: need covariances at lags 0..m/2, m >= 2");
    const std::size_t m = 2 * (cov.size() - 1);
    if ((m & (m - 1)) != 0) throw_numeric("circulant_eigenvalues: embedding size must be a power of two");
    std::vector<std::complex<double>> row(m);
    for (std::size_t j = 0; j <= m / 2; ++j) row[j] = cov[j];
    for (std::size_t j = 1; j < m / 2; ++j) row[m - j] = cov[j];
    fft_pow2(row, -1);
    std::vector<double> lambda(m);
    for (std::size_t k = 0; k < m; ++k) lambda[k] = row[k].real();
    return lambda;
}

CirculantSampler::CirculantSampler(const std::vector<double>& cov) {
    const std::vector<double> lambda = circulant_eigenvalues(cov);
    m_ = lambda.size();
    min_eigenvalue_ = *std::min_element(lambda.begin(), lambda.end());
    if (min_eigenvalue_ < 0.0) {
        std::ostringstream msg;
        msg << "circulant embedding is not nonnegative definite (min eigenvalue "
            << min_eigenvalue_ << "); refusing to clamp";
        throw_numeric(msg.str());
    }
    scale_.resize(m_);
    const double inv_m = 1.0 / static_cast<double>(m_);
    for (std::size_t k = 0; k < m_; ++k) {
        const bool paired = (k != 0 && k != m_ / 2);
        scale_[k] = std::sqrt(lambda[k] * inv_m * (paired ? 0.5 : 1.0));
    }
}

std::vector<double> CirculantSampler::sample(std::uint64_t seed, std::size_t n) const {
    if (n > m_) throw_numeric("CirculantSampler: requested more samples than the embedding provides");
    Philox rng(seed, 0);
    std::vector<std::complex<double>> spectrum(m_);
    spectrum[0] = scale_[0] * rng.next_normal();
    spectrum[m_ / 2] = scale_[m_ / 2] * rng.next_normal();
    for (std::size_t k = 1; k < m_ / 2; ++k) {
        const double re = rng.next_normal();
        const double im = rng.next_normal();
        spectrum[k] = scale_[k] * std::complex<double>(re, im);
        spectrum[m_ - k] = std::conj(spectrum[k]);
    }
    fft_pow2(spectrum, +1);
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = spectrum[j].real();
    return out;
}

namespace {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

std::vector<double> unit_fgn_covariances(HurstIndex h, std::size_t count) {
    std::vector<double> cov(count);
    for (std::size_t j = 0; j < count; ++j) {
        cov[j] = fgn_covariance(h, static_cast<long>(j), 1.0);
    }
    return cov;
}

// Hosking / Durbin-Levinson conditional sampling on the unit-step covariance.
std::vector<double> hosking_sample(const std::vector<double>& cov, std::size_t n, std::uint64_t seed) {
    Philox rng(seed, 0);
    std::vector<double> x(n);
    const double gamma0 = cov[0];
    x[0] = std::sqrt(gamma0) * rng.next_normal();
    if (n == 1) return x;
    std::vector<double> phi, phi_prev;
    double v = gamma0;
    for (std::size_t i = 1; i < n; ++i) {
        double num = cov[i];
        for (std::size_t j = 1; j < i; ++j) num -= phi_prev[j - 1] * cov[i - j];
        const double phi_ii = num / v;
        phi.assign(i, 0.0);
        for (std::size_t j = 1; j < i; ++j) {
            phi[j - 1] = phi_prev[j - 1] - phi_ii * phi_prev[i - 1 - j];
        }
        phi[i - 1] = phi_ii;
        v *= (1.0 - phi_ii * phi_ii);
        if (!(v > 0.0)) throw_numeric("hosking generator: conditional variance is not positive");
        double mean = 0.0;
        for (std::size_t j = 1; j <= i; ++j) mean += phi[j - 1] * x[i - j];
        x[i] = mean + std::sqrt(v) * rng.next_normal();
        phi_prev = phi;
    }
    return x;
}

// Longest series the O(n^2) fallback will accept before generation is
// declared failed.
constexpr std::size_t kHoskingMax = 1u << 16;

} // namespace

FgnGenerator::FgnGenerator(HurstIndex h, std::size_t n, double step) : h_(h), n_(n), step_(step) {
    if (n == 0) throw_domain("FgnGenerator: n must be >= 1");
    if (!(step > 0.0)) throw_domain("FgnGenerator: step must be > 0");
    const std::size_t m = next_pow2(std::max<std::size_t>(2 * n, 4));
    const std::vector<double> cov = unit_fgn_covariances(h, m / 2 + 1);
    try {
        sampler_ = std::make_unique<CirculantSampler>(cov);
    } catch (const Error&) {
        if (n > kHoskingMax) throw;
        fallback_ = true;
        cov_unit_ = unit_fgn_covariances(h, n);
    }
}

FgnSequence FgnGenerator::sample(std::uint64_t seed) const {
    std::vector<double> values = fallback_ ? hosking_sample(cov_unit_, n_, seed)
                                           : sampler_->sample(seed, n_);
    const double scale = std::pow(step_, h_.value);
    for (double& v : values) v *= scale;
    return FgnSequence{std::move(values), step_, h_, seed};
}

FgnSequence generate_fgn(HurstIndex h, std::size_t n, double step, std::uint64_t seed) {
    return FgnGenerator(h, n, step).sample(seed);
}

FgnSequence generate_fgn_hosking(HurstIndex h, std::size_t n, double step, std::uint64_t seed) {
    if (n == 0) throw_domain("generate_fgn_hosking: n must be >= 1");
    if (!(step > 0.0)) throw_domain("generate_fgn_hosking: step must be > 0");
    std::vector<double> values = hosking_sample(unit_fgn_covariances(h, n), n, seed);
    const double scale = std::pow(step, h.value);
    for (double& v : values) v *= scale;
    return FgnSequence{std::move(values), step, h, seed};
}

namespace {

FbmPath accumulate_path(const FgnSequence& gn) {
    const std::size_t n = gn.values.size();
    FbmPath path{std::vector<double>(n + 1), std::vector<double>(n + 1), gn.hurst, gn.seed};
    path.times[0] = 0.0;
    path.values[0] = 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += gn.values[i];
        path.times[i + 1] = static_cast<double>(i + 1) * gn.step;
        path.values[i + 1] = acc;
    }
    return path;
}

} // namespace

FbmPath generate_fbm(HurstIndex h, std::size_t n, double step, std::uint64_t seed) {
    return accumulate_path(generate_fgn(h, n, step, seed));
}

FbmPath generate_fbm_cholesky(HurstIndex h, std::size_t n, double step, std::uint64_t seed) {
    if (n == 0) throw_domain("generate_fbm_cholesky: n must be >= 1");
    if (n > 2048) throw_domain("generate_fbm_cholesky: n must be <= 2048");
    if (!(step > 0.0)) throw_domain("generate_fbm_cholesky: step must be > 0");

    // dense covariance of the increments, then in-place lower Cholesky
    std::vector<double> cov(n);
    for (std::size_t j = 0; j < n; ++j) cov[j] = fgn_covariance(h, static_cast<long>(j), step);
    std::vector<double> l(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = cov[i - j];
            for (std::size_t k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
            if (i == j) {
                if (!(s > 0.0)) {
                    std::ostringstream msg;
                    msg << "fGn covariance matrix is not numerically positive definite; "
                        << "smallest pivot " << s << " at index " << i;
                    throw_numeric(msg.str());
                }
                l[i * n + j] = std::sqrt(s);
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }

    Philox rng(seed, 0);
    std::vector<double> z(n);
    for (double& v : z) v = rng.next_normal();
    FgnSequence gn{std::vector<double>(n), step, h, seed};
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k <= i; ++k) s += l[i * n + k] * z[k];
        gn.values[i] = s;
    }
    return accumulate_path(gn);
}

std::vector<double> fractional_noise(const FbmPath& path, std::size_t window) {
    const std::size_t len = path.values.size();
    if (window == 0) throw_domain("fractional_noise: window must be >= 1");
    if (window >= len) throw_domain("fractional_noise: window must be smaller than the path length");
    std::vector<double> out(len - window);
    for (std::size_t i = window; i < len; ++i) {
        out[i - window] = path.values[i] - path.values[i - window];
    }
    return out;
}

} // namespace fvm
