#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fvm/fbm.hpp"

namespace fvm {

/// Parameters of the fractional volatility model
///   dS_t = mu S_t dt + sigma_t S_t dB(t)
///   log sigma_t = beta + (k/delta) (B_H(t) - B_H(t - delta))
/// with sigma normalized so that E[sigma(t)] = theta. theta and beta are
/// both stored and must satisfy beta = log(theta) - (1/2)(k/delta)^2 delta^{2H}.
struct FvmParams {
    double mu = 0.0;
    double theta = 1.0;
    double k = 0.0;
    double delta = 1.0;
    HurstIndex hurst{0.5};
    double beta = 0.0;
    double alpha = 0.0; // mean-reversion rate per unit time; 0 disables

    static FvmParams from_theta(double mu, double theta, double k, double delta,
                                HurstIndex hurst, double alpha = 0.0);
    static FvmParams from_beta(double mu, double beta, double k, double delta,
                               HurstIndex hurst, double alpha = 0.0);

    /// Variance of log sigma implied by the noise term: (k/delta)^2 delta^{2H}.
    double log_vol_variance() const;

    void validate() const;
};

struct VolatilityPath {
    std::vector<double> times;
    std::vector<double> sigmas;
    FvmParams params;
    std::uint64_t seed = 0;
};

struct PricePath {
    std::vector<double> times;
    std::vector<double> prices;
    VolatilityPath vol;
    std::uint64_t seed_price = 0;
};

/// Stationary volatility path at resolution delta:
///   sigma(t_i) = theta exp[(k/delta) g_i - (1/2)(k/delta)^2 delta^{2H}]
/// with g the fGn increments of B_H at step delta. n values at t_i = i*delta.
VolatilityPath simulate_volatility(const FvmParams& params, std::size_t n, std::uint64_t seed);

/// Mean-reverting variant (alpha > 0): exponential relaxation of log sigma
/// toward beta at rate alpha plus the fractional-noise term,
///   x_{i+1} = x_i + (beta - x_i)(1 - e^{-alpha delta}) + (k/delta) g_{i+1}.
/// Exact exponential decay when k = 0. log_sigma0 defaults to beta.
VolatilityPath simulate_mean_reverting(const FvmParams& params, std::size_t n, std::uint64_t seed,
                                       std::optional<double> log_sigma0 = std::nullopt);

/// Coupled price path: log-Euler exact-per-step updates with sigma held
/// piecewise constant over each delta-window; requires delta/dt integer.
/// The two noise sources use independent streams.
PricePath simulate_fvm(const FvmParams& params, double s0, std::size_t n, double dt,
                       std::uint64_t seed_vol, std::uint64_t seed_price);

/// Independent risk-neutral paths (mu replaced by r), per-path seeds derived
/// deterministically from the master seed. nu != 0 applies the optional
/// pricing-measure drift shift of -nu*(k/delta) per unit time to log sigma.
std::vector<PricePath> risk_neutral_paths(const FvmParams& params, double s0, double r,
                                          double horizon, std::size_t n_paths, double dt,
                                          std::uint64_t seed, double nu = 0.0);

namespace detail {

/// Ratio a/b when it is an integer within tolerance; throws config error otherwise.
std::size_t exact_ratio(double a, double b, const char* what);

/// Volatility values shared by the simulators and the Monte-Carlo pricer.
std::vector<double> volatility_values(const FvmParams& params, std::size_t n, std::uint64_t seed,
                                      const FgnGenerator& gen, double nu);

} // namespace detail

} // namespace fvm
