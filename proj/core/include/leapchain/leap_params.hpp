#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leapchain/errors.hpp"

namespace leapchain {

// Exact fraction used to carry user-supplied rational probabilities (e.g.
// "12/38") so that drift-sign decisions can be made without rounding.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Parses "a/b" or a decimal literal. Returns the parsed value as a double and,
// when the input was an exact fraction, its Rational form.
struct ParsedProbability {
    double value = 0.0;
    std::optional<Rational> exact;
};
ParsedProbability parse_probability(const std::string& text);

// Step-probability parameterization of a random leap: p[j-1] is the
// probability of a +j step, q[j-1] of a -j step, `hold` of staying put.
// Immutable after construction; all spectral computations use the
// hold-conditioned (lazy-removed) distribution.
class LeapParams {
public:
    // Validates and normalizes raw step probabilities.
    // Throws NotAProbability, NegativeEntry, MonotoneDrift, HoldTooLarge.
    static LeapParams validate(std::vector<double> raw_p, std::vector<double> raw_q,
                               double hold = 0.0);

    // As above, but additionally records the exact rational inputs.
    static LeapParams validate_exact(const std::vector<Rational>& raw_p,
                                     const std::vector<Rational>& raw_q,
                                     Rational hold = Rational{0, 1});

    int k() const { return static_cast<int>(p_.size()); }

    // Lazy-removed step distribution: p()[j-1] + q()[j-1] summed over j is 1.
    const std::vector<double>& p() const { return p_; }
    const std::vector<double>& q() const { return q_; }
    double hold() const { return hold_; }

    // Raw probabilities exactly as supplied (sum to 1 together with hold).
    const std::vector<double>& raw_p() const { return raw_p_; }
    const std::vector<double>& raw_q() const { return raw_q_; }

    bool has_exact() const { return exact_p_.has_value(); }

    // Sign of the drift mu computed in exact integer arithmetic when the
    // inputs were rational. nullopt if inputs were floats or on overflow.
    std::optional<int> exact_mu_sign() const;

private:
    LeapParams() = default;

    std::vector<double> raw_p_, raw_q_;
    std::vector<double> p_, q_; // lazy-removed
    double hold_ = 0.0;
    std::optional<std::vector<Rational>> exact_p_, exact_q_;
    Rational exact_hold_{0, 1};
};

// Maximum step sizes with positive probability and derived quantities.
// r = k_p + k_q - 1 is the order of the difference recurrence.
struct StepProfile {
    int k_p = 0;
    int k_q = 0;
    int r = 0;
    int gcd_support = 0;
};

StepProfile step_profile(const LeapParams& params);

// First and second moments of one unconstrained step (lazy-removed chain).
struct Drift {
    double mu = 0.0;
    double sigma2 = 0.0;
};

Drift drift_moments(const LeapParams& params);

// Mirrored chain (p and q swapped); mu flips sign, sigma2 is unchanged.
LeapParams mirror(const LeapParams& params);

} // namespace leapchain
