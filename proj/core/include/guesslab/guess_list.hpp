#pragma once

#include <cstdint>
#include <vector>

#include "guesslab/alphabet.hpp"
#include "guesslab/pmf.hpp"

namespace guesslab {

/// Guessing order with side information: for each y, rank(.,y) is a
/// bijection from X onto {1..|X|} giving the position of each symbol in
/// the guess sequence.
class GuessingList {
public:
    GuessingList(Alphabet alphabet, std::vector<int> ranks);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<int>& ranks() const { return ranks_; }
    int rank(std::size_t ix, std::size_t iy) const { return ranks_[alphabet_.cell(ix, iy)]; }

    /// Symbols of one y slice in guess order (inverse of rank).
    std::vector<std::size_t> order(std::size_t iy) const;

    bool operator==(const GuessingList& other) const = default;

private:
    Alphabet alphabet_;
    std::vector<int> ranks_;
};

/// Matched guessing order G_P: per y, descending P(.,y) with ties broken
/// by alphabet order (lower index first). Deterministic.
GuessingList sort_to_list(const JointPmf& p);

/// Rank-count inequality G(x,y) <= #{a : Q(a,y) >= Q(x,y)} checked over all
/// cells; a self-test that G really is a sorted list for Q.
bool guess_rank_bound(const GuessingList& g, const JointPmf& q);

}  // namespace guesslab
