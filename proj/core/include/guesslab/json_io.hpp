#pragma once

#include <string>
#include <vector>

#include "guesslab/guess_list.hpp"
#include "guesslab/pmf.hpp"

namespace guesslab::json_io {

/// Schema violations and malformed JSON surface as this; line/column are
/// 1-based and only set for parse errors.
struct ParseError : std::runtime_error {
    ParseError(std::string message, int line = 0, int column = 0)
        : std::runtime_error(std::move(message)), line(line), column(column) {}
    int line;
    int column;
};

// PMF file:    {"x": ["a","b"], "y": ["·"], "mass": [[0.5, 0.5]]}
//              mass is one row per y symbol, one column per x symbol.
// List file:   {"x": [...], "y": [...], "rank": [[...]]} with the same layout.
// Family file: {"members": [<pmf>, ...]} on a shared alphabet.
// Hull file:   {"vertices": [<pmf>, ...]}.
// AVS file:    {"states": [...], "letters": [...], "channel": [[...]],
//               "n": N, "counts": [...]}.

JointPmf parse_pmf(const std::string& text);
GuessingList parse_list(const std::string& text);
std::vector<JointPmf> parse_family(const std::string& text);
std::vector<JointPmf> parse_hull(const std::string& text);

std::string pmf_to_json(const JointPmf& pmf);
std::string list_to_json(const GuessingList& list);

JointPmf load_pmf(const std::string& path);
GuessingList load_list(const std::string& path);
std::vector<JointPmf> load_family(const std::string& path);
std::vector<JointPmf> load_hull(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace guesslab::json_io
