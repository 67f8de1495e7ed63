#include "guesslab/guess_list.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace guesslab {

GuessingList::GuessingList(Alphabet alphabet, std::vector<int> ranks)
    : alphabet_(std::move(alphabet)), ranks_(std::move(ranks)) {
    if (ranks_.size() != alphabet_.cells()) {
        throw std::invalid_argument("guessing list: rank size does not match alphabet");
    }
    const std::size_t nx = alphabet_.nx();
    std::vector<bool> seen(nx);
    for (std::size_t iy = 0; iy < alphabet_.ny(); ++iy) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::size_t ix = 0; ix < nx; ++ix) {
            int r = ranks_[alphabet_.cell(ix, iy)];
            if (r < 1 || static_cast<std::size_t>(r) > nx || seen[r - 1]) {
                throw std::invalid_argument(
                    "guessing list: ranks must be a bijection onto {1..|X|} per y");
            }
            seen[r - 1] = true;
        }
    }
}

std::vector<std::size_t> GuessingList::order(std::size_t iy) const {
    std::vector<std::size_t> symbols(alphabet_.nx());
    for (std::size_t ix = 0; ix < alphabet_.nx(); ++ix) {
        symbols[static_cast<std::size_t>(rank(ix, iy)) - 1] = ix;
    }
    return symbols;
}

GuessingList sort_to_list(const JointPmf& p) {
    const Alphabet& a = p.alphabet();
    std::vector<int> ranks(a.cells());
    std::vector<std::size_t> idx(a.nx());
    for (std::size_t iy = 0; iy < a.ny(); ++iy) {
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t lhs, std::size_t rhs) {
            return p.at(lhs, iy) > p.at(rhs, iy);
        });
        for (std::size_t pos = 0; pos < idx.size(); ++pos) {
            ranks[a.cell(idx[pos], iy)] = static_cast<int>(pos + 1);
        }
    }
    return GuessingList(a, std::move(ranks));
}

bool guess_rank_bound(const GuessingList& g, const JointPmf& q) {
    const Alphabet& a = q.alphabet();
    if (g.alphabet() != a) {
        throw std::invalid_argument("guess_rank_bound: alphabet mismatch");
    }
    for (std::size_t iy = 0; iy < a.ny(); ++iy) {
        for (std::size_t ix = 0; ix < a.nx(); ++ix) {
            int count = 0;
            for (std::size_t ia = 0; ia < a.nx(); ++ia) {
                if (q.at(ia, iy) >= q.at(ix, iy)) ++count;
            }
            if (g.rank(ix, iy) > count) return false;
        }
    }
    return true;
}

}  // namespace guesslab
