#include "guesslab/alphabet.hpp"

#include <stdexcept>
#include <unordered_set>

namespace guesslab {

namespace {

void check_axis(const std::vector<std::string>& symbols, const char* axis) {
    if (symbols.empty()) {
        throw std::invalid_argument(std::string("alphabet: empty ") + axis + " axis");
    }
    std::unordered_set<std::string> seen;
    for (const auto& s : symbols) {
        if (!seen.insert(s).second) {
            throw std::invalid_argument(std::string("alphabet: duplicate ") + axis +
                                        " symbol \"" + s + "\"");
        }
    }
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> x_symbols, std::vector<std::string> y_symbols)
    : x_(std::move(x_symbols)), y_(std::move(y_symbols)) {
    check_axis(x_, "x");
    check_axis(y_, "y");
}

Alphabet Alphabet::product(const std::vector<std::string>& letters, int n) {
    if (letters.empty() || n < 1) {
        throw std::invalid_argument("alphabet: product needs letters and n >= 1");
    }
    std::size_t m = letters.size();
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > (std::size_t{1} << 40) / m) {
            throw std::invalid_argument("alphabet: product alphabet too large");
        }
        total *= m;
    }
    std::vector<std::string> strings;
    strings.reserve(total);
    std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::string s;
        for (int pos = 0; pos < n; ++pos) s += letters[digits[pos]];
        strings.push_back(std::move(s));
        for (int pos = n - 1; pos >= 0; --pos) {
            if (++digits[pos] < m) break;
            digits[pos] = 0;
        }
    }
    return Alphabet(std::move(strings));
}

}  // namespace guesslab
