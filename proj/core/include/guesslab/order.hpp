#pragma once

#include <cmath>

namespace guesslab {

/// Moment order pair (alpha, rho) with alpha = 1/(1+rho).
/// alpha in (0,1) <=> rho > 0; alpha > 1 <=> rho in (-1,0).
struct OrderParam {
    double alpha;
    double rho;

    static OrderParam from_alpha(double alpha);
    static OrderParam from_rho(double rho);

    double sign_rho() const { return rho > 0 ? 1.0 : -1.0; }
    bool alpha_below_one() const { return alpha < 1.0; }
};

/// Logarithm base for reported entropies/divergences. Everything internal
/// runs in nats; values convert on the way out. The harmonic-sum nuisance
/// term log(1 + ln|X|) keeps the natural log inside regardless of base.
class LogBase {
public:
    static LogBase bits() { return LogBase(std::log(2.0)); }
    static LogBase nats() { return LogBase(1.0); }

    double from_nats(double nats) const { return nats / ln_base_; }
    double to_nats(double v) const { return v * ln_base_; }
    double log(double v) const { return std::log(v) / ln_base_; }
    bool is_bits() const { return ln_base_ != 1.0; }

    bool operator==(const LogBase&) const = default;

private:
    explicit LogBase(double ln_base) : ln_base_(ln_base) {}
    double ln_base_;
};

}  // namespace guesslab
