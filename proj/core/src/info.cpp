#include "guesslab/info.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace guesslab::info {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// ln(sum exp(terms)) over finite terms; -inf for an empty/all -inf list.
double log_sum_exp(const std::vector<double>& terms) {
    double peak = kNegInf;
    for (double t : terms) peak = std::max(peak, t);
    if (peak == kNegInf) return kNegInf;
    double acc = 0.0;
    for (double t : terms) {
        if (t != kNegInf) acc += std::exp(t - peak);
    }
    return peak + std::log(acc);
}

void require_no_side_information(const JointPmf& p, const char* who) {
    if (p.ny() != 1) {
        throw std::invalid_argument(std::string(who) + ": expects |Y| = 1");
    }
}

}  // namespace

TiltedConditional::TiltedConditional(Alphabet alphabet, std::vector<double> cond, double alpha)
    : alphabet_(std::move(alphabet)), cond_(std::move(cond)), alpha_(alpha) {
    if (cond_.size() != alphabet_.cells()) {
        throw std::invalid_argument("tilted conditional: size mismatch");
    }
    for (std::size_t iy = 0; iy < alphabet_.ny(); ++iy) {
        double row = 0.0;
        for (std::size_t ix = 0; ix < alphabet_.nx(); ++ix) row += at(ix, iy);
        if (std::abs(row - 1.0) > 1e-12) {
            throw std::invalid_argument("tilted conditional: rows must sum to 1");
        }
    }
}

JointPmf TiltedConditional::row(std::size_t iy) const {
    std::vector<double> mass(alphabet_.nx());
    for (std::size_t ix = 0; ix < alphabet_.nx(); ++ix) mass[ix] = at(ix, iy);
    return JointPmf::normalized(Alphabet(alphabet_.x_symbols()), std::move(mass));
}

TiltedConditional tilt(const JointPmf& p, OrderParam op) {
    const Alphabet& a = p.alphabet();
    std::vector<double> cond(a.cells());
    for (std::size_t iy = 0; iy < a.ny(); ++iy) {
        double log_row = log_alpha_row_sum(p, iy, op.alpha);
        if (log_row == kNegInf) {
            double u = 1.0 / static_cast<double>(a.nx());
            for (std::size_t ix = 0; ix < a.nx(); ++ix) cond[a.cell(ix, iy)] = u;
            continue;
        }
        double row_total = 0.0;
        for (std::size_t ix = 0; ix < a.nx(); ++ix) {
            double m = p.at(ix, iy);
            double v = m > 0.0 ? std::exp(op.alpha * std::log(m) - log_row) : 0.0;
            cond[a.cell(ix, iy)] = v;
            row_total += v;
        }
        double residual = -1.0;
        std::size_t argmax = 0;
        for (std::size_t ix = 0; ix < a.nx(); ++ix) {
            double& v = cond[a.cell(ix, iy)];
            v /= row_total;
            residual += v;
            if (v > cond[a.cell(argmax, iy)]) argmax = ix;
        }
        cond[a.cell(argmax, iy)] -= residual;
    }
    return TiltedConditional(a, std::move(cond), op.alpha);
}

double log_alpha_row_sum(const JointPmf& p, std::size_t iy, double alpha) {
    std::vector<double> terms;
    terms.reserve(p.nx());
    for (std::size_t ix = 0; ix < p.nx(); ++ix) {
        double m = p.at(ix, iy);
        if (m > 0.0) terms.push_back(alpha * std::log(m));
    }
    return log_sum_exp(terms);
}

double log_h(const JointPmf& p, OrderParam op) {
    std::vector<double> terms;
    terms.reserve(p.ny());
    for (std::size_t iy = 0; iy < p.ny(); ++iy) {
        double log_row = log_alpha_row_sum(p, iy, op.alpha);
        if (log_row != kNegInf) terms.push_back(log_row / op.alpha);
    }
    return log_sum_exp(terms);
}

double h_value(const JointPmf& p, OrderParam op) { return std::exp(log_h(p, op)); }

double renyi_entropy(const JointPmf& p, OrderParam op, LogBase base) {
    double nats = op.alpha / (1.0 - op.alpha) * log_h(p, op);
    return base.from_nats(nats);
}

double log_cross_sum(const JointPmf& p, const JointPmf& q, OrderParam op) {
    if (p.alphabet() != q.alphabet()) {
        throw std::invalid_argument("divergence: alphabet mismatch");
    }
    const Alphabet& a = p.alphabet();
    std::vector<double> log_rows(a.ny());
    for (std::size_t iy = 0; iy < a.ny(); ++iy) {
        log_rows[iy] = log_alpha_row_sum(q, iy, op.alpha);
    }
    std::vector<double> terms;
    terms.reserve(a.cells());
    for (std::size_t iy = 0; iy < a.ny(); ++iy) {
        for (std::size_t ix = 0; ix < a.nx(); ++ix) {
            double pm = p.at(ix, iy);
            if (pm == 0.0) continue;
            double qm = q.at(ix, iy);
            if (qm == 0.0) {
                if (op.alpha_below_one()) return kInf;  // support escape
                continue;                               // alpha > 1: cell contributes 0
            }
            double log_qcond = op.alpha * std::log(qm) - log_rows[iy];
            terms.push_back(std::log(pm) - op.rho * log_qcond);
        }
    }
    return log_sum_exp(terms);  // -inf when supports are disjoint
}

std::vector<double> y_weights(const JointPmf& p, OrderParam op) {
    double lh = log_h(p, op);
    std::vector<double> w(p.ny(), 0.0);
    for (std::size_t iy = 0; iy < p.ny(); ++iy) {
        double log_row = log_alpha_row_sum(p, iy, op.alpha);
        if (log_row != kNegInf) w[iy] = std::exp(log_row / op.alpha - lh);
    }
    return w;
}

DivergenceValue l_alpha(const JointPmf& p, const JointPmf& q, OrderParam op, LogBase base) {
    if (std::abs(op.alpha - 1.0) < 1e-6) {
        throw std::domain_error("divergence: |alpha - 1| < 1e-6 is ill-conditioned; "
                                "use conditional_kl for the limit");
    }
    double cross = log_cross_sum(p, q, op);
    if (cross == kInf) return DivergenceValue{kInf, false};
    if (cross == kNegInf) return DivergenceValue{kInf, false};  // disjoint supports
    double nats = (cross - log_h(p, op)) / op.rho;
    if (nats < 0.0 && nats > -1e-12) nats = 0.0;  // clamp round-off at P == Q
    return DivergenceValue{base.from_nats(nats), true};
}

DivergenceValue renyi_divergence(const JointPmf& r, const JointPmf& s, double beta,
                                 LogBase base) {
    require_no_side_information(r, "renyi_divergence");
    require_no_side_information(s, "renyi_divergence");
    if (r.alphabet() != s.alphabet()) {
        throw std::invalid_argument("renyi_divergence: alphabet mismatch");
    }
    if (!(beta > 0.0) || beta == 1.0) {
        throw std::invalid_argument("renyi_divergence: beta must be > 0 and != 1");
    }
    std::vector<double> terms;
    terms.reserve(r.nx());
    for (std::size_t ix = 0; ix < r.nx(); ++ix) {
        double rm = r.at(ix, 0);
        if (rm == 0.0) continue;
        double sm = s.at(ix, 0);
        if (sm == 0.0) {
            if (beta > 1.0) return DivergenceValue{kInf, false};
            continue;
        }
        terms.push_back(beta * std::log(rm) + (1.0 - beta) * std::log(sm));
    }
    double lse = log_sum_exp(terms);
    if (lse == kNegInf) return DivergenceValue{kInf, false};  // disjoint supports
    double nats = lse / (beta - 1.0);
    if (nats < 0.0 && nats > -1e-12) nats = 0.0;
    return DivergenceValue{base.from_nats(nats), true};
}

double f_divergence(const JointPmf& r, const JointPmf& s, OrderParam op) {
    require_no_side_information(r, "f_divergence");
    require_no_side_information(s, "f_divergence");
    if (r.alphabet() != s.alphabet()) {
        throw std::invalid_argument("f_divergence: alphabet mismatch");
    }
    std::vector<double> terms;
    terms.reserve(r.nx());
    for (std::size_t ix = 0; ix < r.nx(); ++ix) {
        double rm = r.at(ix, 0);
        if (rm == 0.0) continue;  // f(0) = 0
        double sm = s.at(ix, 0);
        if (sm == 0.0) {
            if (op.rho > 0.0) return kInf;
            continue;  // -1 < rho < 0: boundary cell contributes 0
        }
        terms.push_back((1.0 + op.rho) * std::log(rm) - op.rho * std::log(sm));
    }
    return op.sign_rho() * std::exp(log_sum_exp(terms));
}

double i_value(const JointPmf& p, const JointPmf& q, OrderParam op) {
    double cross = log_cross_sum(p, q, op);
    if (cross == kInf) return kInf;
    if (cross == kNegInf) return 0.0;  // disjoint supports; maps to an infinite divergence
    return op.sign_rho() * std::exp(cross - log_h(p, op));
}

double conditional_kl(const JointPmf& p, const JointPmf& q, LogBase base) {
    if (p.alphabet() != q.alphabet()) {
        throw std::invalid_argument("conditional_kl: alphabet mismatch");
    }
    double nats = 0.0;
    for (std::size_t iy = 0; iy < p.ny(); ++iy) {
        double pmy = p.y_mass(iy);
        if (pmy == 0.0) continue;
        double qmy = q.y_mass(iy);
        for (std::size_t ix = 0; ix < p.nx(); ++ix) {
            double pm = p.at(ix, iy);
            if (pm == 0.0) continue;
            double qm = q.at(ix, iy);
            if (qm == 0.0 || qmy == 0.0) return kInf;
            nats += pm * (std::log(pm / pmy) - std::log(qm / qmy));
        }
    }
    if (nats < 0.0 && nats > -1e-12) nats = 0.0;
    return base.from_nats(nats);
}

}  // namespace guesslab::info
