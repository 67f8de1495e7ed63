#include "guesslab/pmf.hpp"

#include <cmath>
#include <stdexcept>

namespace guesslab {

namespace {

double kahan_sum(const std::vector<double>& values) {
    double sum = 0.0, carry = 0.0;
    for (double v : values) {
        double y = v - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace

JointPmf::JointPmf(Alphabet alphabet, std::vector<double> mass)
    : alphabet_(std::move(alphabet)), mass_(std::move(mass)) {
    if (mass_.size() != alphabet_.cells()) {
        throw std::invalid_argument("pmf: mass size does not match alphabet");
    }
    for (double v : mass_) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("pmf: mass entries must be finite and >= 0");
        }
    }
    if (std::abs(kahan_sum(mass_) - 1.0) > kMassTolerance) {
        throw std::invalid_argument("pmf: mass must sum to 1 within 1e-12");
    }
}

JointPmf JointPmf::normalized(Alphabet alphabet, std::vector<double> weights) {
    double total = 0.0;
    for (double v : weights) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("pmf: weights must be finite and >= 0");
        }
        total += v;
    }
    if (total <= 0.0) {
        throw std::invalid_argument("pmf: cannot normalize all-zero weights");
    }
    for (double& v : weights) v /= total;
    // the per-cell divisions leave an O(n*eps) residual on large product
    // alphabets; park it on the largest cell so the 1e-12 gate always holds
    double residual = kahan_sum(weights) - 1.0;
    if (residual != 0.0) {
        std::size_t argmax = 0;
        for (std::size_t i = 1; i < weights.size(); ++i) {
            if (weights[i] > weights[argmax]) argmax = i;
        }
        weights[argmax] -= residual;
    }
    return JointPmf(std::move(alphabet), std::move(weights));
}

JointPmf JointPmf::uniform(Alphabet alphabet) {
    std::size_t n = alphabet.cells();
    return normalized(std::move(alphabet), std::vector<double>(n, 1.0));
}

std::vector<std::pair<std::size_t, std::size_t>> JointPmf::support() const {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t iy = 0; iy < ny(); ++iy) {
        for (std::size_t ix = 0; ix < nx(); ++ix) {
            if (at(ix, iy) > 0.0) cells.emplace_back(ix, iy);
        }
    }
    return cells;
}

double JointPmf::y_mass(std::size_t iy) const {
    double total = 0.0;
    for (std::size_t ix = 0; ix < nx(); ++ix) total += at(ix, iy);
    return total;
}

bool JointPmf::support_subset(const JointPmf& p, const JointPmf& q) {
    for (std::size_t i = 0; i < p.mass_.size(); ++i) {
        if (p.mass_[i] > 0.0 && q.mass_[i] == 0.0) return false;
    }
    return true;
}

bool JointPmf::support_intersects(const JointPmf& p, const JointPmf& q) {
    for (std::size_t i = 0; i < p.mass_.size(); ++i) {
        if (p.mass_[i] > 0.0 && q.mass_[i] > 0.0) return true;
    }
    return false;
}

}  // namespace guesslab
