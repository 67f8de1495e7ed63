#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "guesslab/alphabet.hpp"

namespace guesslab {

/// Probability mass function on X x Y. Immutable after construction;
/// the constructor enforces nonnegativity and total mass 1 within 1e-12.
class JointPmf {
public:
    static constexpr double kMassTolerance = 1e-12;

    JointPmf(Alphabet alphabet, std::vector<double> mass);

    /// Explicit renormalization of nonnegative weights (the only place mass
    /// gets rescaled).
    static JointPmf normalized(Alphabet alphabet, std::vector<double> weights);
    static JointPmf uniform(Alphabet alphabet);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<double>& mass() const { return mass_; }
    double at(std::size_t ix, std::size_t iy) const { return mass_[alphabet_.cell(ix, iy)]; }
    double operator()(std::size_t ix, std::size_t iy) const { return at(ix, iy); }

    std::size_t nx() const { return alphabet_.nx(); }
    std::size_t ny() const { return alphabet_.ny(); }

    /// Cells with strictly positive mass, as (ix, iy) pairs.
    std::vector<std::pair<std::size_t, std::size_t>> support() const;

    /// Marginal mass of one y slice.
    double y_mass(std::size_t iy) const;

    /// True when every P-positive cell is Q-positive.
    static bool support_subset(const JointPmf& p, const JointPmf& q);
    /// True when some cell is positive under both.
    static bool support_intersects(const JointPmf& p, const JointPmf& q);

    bool operator==(const JointPmf& other) const = default;

private:
    Alphabet alphabet_;
    std::vector<double> mass_;
};

}  // namespace guesslab
