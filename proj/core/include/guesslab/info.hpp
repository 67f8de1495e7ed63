#pragma once

#include <limits>
#include <vector>

#include "guesslab/order.hpp"
#include "guesslab/pmf.hpp"

namespace guesslab::info {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Divergence result; value is +inf exactly under the support conditions
/// (first-argument support escapes the second for alpha < 1, or the two
/// supports are disjoint).
struct DivergenceValue {
    double value = 0.0;
    bool finite = true;
};

/// Power-normalized conditional P'(x|y) of a joint PMF at a given alpha.
/// Rows whose alpha-power sum vanishes fall back to uniform.
class TiltedConditional {
public:
    TiltedConditional(Alphabet alphabet, std::vector<double> cond, double alpha);

    const Alphabet& alphabet() const { return alphabet_; }
    double alpha() const { return alpha_; }
    double at(std::size_t ix, std::size_t iy) const { return cond_[alphabet_.cell(ix, iy)]; }
    const std::vector<double>& values() const { return cond_; }

    /// One conditional row as a PMF on X (no side information axis).
    JointPmf row(std::size_t iy) const;

private:
    Alphabet alphabet_;
    std::vector<double> cond_;
    double alpha_;
};

TiltedConditional tilt(const JointPmf& p, OrderParam op);

/// ln of the per-row power sum  sum_x P(x,y)^alpha; -inf for all-zero rows.
double log_alpha_row_sum(const JointPmf& p, std::size_t iy, double alpha);

/// ln h(P) where h(P) = sum_y (sum_x P(x,y)^alpha)^(1/alpha).
double log_h(const JointPmf& p, OrderParam op);
double h_value(const JointPmf& p, OrderParam op);

/// Conditional Renyi entropy of order alpha; in [0, log|X|].
double renyi_entropy(const JointPmf& p, OrderParam op, LogBase base = LogBase::bits());

/// ln sum_{x,y} P(x,y) Q'(x|y)^(-rho) under the support conventions:
/// +inf when alpha < 1 and P escapes Supp(Q); -inf when nothing contributes.
double log_cross_sum(const JointPmf& p, const JointPmf& q, OrderParam op);

/// Normalized y-weights w(y) = (sum_x P(x,y)^alpha)^(1/alpha) / h(P),
/// computed in log space.
std::vector<double> y_weights(const JointPmf& p, OrderParam op);

/// The mismatched-guessing divergence; >= 0 with equality iff P = Q.
/// Rejects |alpha - 1| < 1e-6 (ill-conditioned; use conditional_kl for the
/// alpha -> 1 limit).
DivergenceValue l_alpha(const JointPmf& p, const JointPmf& q, OrderParam op,
                        LogBase base = LogBase::bits());

/// Renyi information divergence of order beta between two PMFs without side
/// information.
DivergenceValue renyi_divergence(const JointPmf& r, const JointPmf& s, double beta,
                                 LogBase base = LogBase::bits());

/// f-divergence with f(x) = sign(rho) x^(1+rho); no side information.
/// May be +inf (rho > 0 with a support escape).
double f_divergence(const JointPmf& r, const JointPmf& s, OrderParam op);

/// I(P,Q) = sign(rho)/h(P) * sum P Q'^(-rho); the quantity whose log gives
/// the divergence above. +inf under the alpha < 1 support escape.
double i_value(const JointPmf& p, const JointPmf& q, OrderParam op);

/// Conditional Kullback-Leibler divergence sum_y sum_x P(x,y)
/// log(P(x|y)/Q(x|y)); the alpha -> 1 limit of the divergence family.
double conditional_kl(const JointPmf& p, const JointPmf& q, LogBase base = LogBase::bits());

}  // namespace guesslab::info
