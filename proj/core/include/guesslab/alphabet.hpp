#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace guesslab {

/// Finite product alphabet X x Y with a fixed total order on each axis.
/// The order doubles as the deterministic tie-breaking rule everywhere a
/// sort has to pick between equal-probability symbols. A singleton Y axis
/// means "no side information".
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> x_symbols,
                      std::vector<std::string> y_symbols = {std::string(kNoSide)});

    /// X = all n-letter strings over `letters`, enumerated lexicographically
    /// (index is the n-digit mixed-radix value of the string).
    static Alphabet product(const std::vector<std::string>& letters, int n);

    std::size_t nx() const { return x_.size(); }
    std::size_t ny() const { return y_.size(); }
    std::size_t cells() const { return x_.size() * y_.size(); }

    const std::string& x_label(std::size_t ix) const { return x_[ix]; }
    const std::string& y_label(std::size_t iy) const { return y_[iy]; }
    const std::vector<std::string>& x_symbols() const { return x_; }
    const std::vector<std::string>& y_symbols() const { return y_; }

    /// Flat cell index, row-major over y then x.
    std::size_t cell(std::size_t ix, std::size_t iy) const { return iy * x_.size() + ix; }

    bool operator==(const Alphabet& other) const = default;

    static constexpr const char* kNoSide = "\xc2\xb7";  // "·"

private:
    std::vector<std::string> x_;
    std::vector<std::string> y_;
};

}  // namespace guesslab
