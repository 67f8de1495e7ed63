#include "guesslab/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace guesslab::json_io {

namespace {

using nlohmann::json;

/// Translate a byte offset from nlohmann's parse_error into line/column.
std::pair<int, int> offset_to_line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = offset_to_line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        std::ostringstream msg;
        msg << "malformed JSON at line " << line << ", column " << col << ": " << e.what();
        throw ParseError(msg.str(), line, col);
    }
}

void check_keys(const json& obj, const std::vector<std::string>& allowed, const char* what) {
    if (!obj.is_object()) {
        throw ParseError(std::string(what) + ": expected a JSON object");
    }
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const auto& key : allowed) {
            if (item.key() == key) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            throw ParseError(std::string(what) + ": unknown key \"" + item.key() + "\"");
        }
    }
    for (const auto& key : allowed) {
        if (!obj.contains(key)) {
            throw ParseError(std::string(what) + ": missing key \"" + key + "\"");
        }
    }
}

std::vector<std::string> parse_symbols(const json& arr, const char* what) {
    if (!arr.is_array() || arr.empty()) {
        throw ParseError(std::string(what) + ": must be a nonempty array of strings");
    }
    std::vector<std::string> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_string()) {
            throw ParseError(std::string(what) + ": symbols must be strings");
        }
        out.push_back(v.get<std::string>());
    }
    return out;
}

template <typename T>
std::vector<T> parse_grid(const json& rows, std::size_t ny, std::size_t nx, const char* what) {
    if (!rows.is_array() || rows.size() != ny) {
        throw ParseError(std::string(what) + ": needs one row per y symbol");
    }
    std::vector<T> flat;
    flat.reserve(nx * ny);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != nx) {
            throw ParseError(std::string(what) + ": each row needs one entry per x symbol");
        }
        for (const auto& v : row) {
            if (!v.is_number()) {
                throw ParseError(std::string(what) + ": entries must be numbers");
            }
            flat.push_back(v.get<T>());
        }
    }
    return flat;
}

JointPmf pmf_from_json(const json& obj) {
    check_keys(obj, {"x", "y", "mass"}, "pmf");
    auto x = parse_symbols(obj["x"], "pmf.x");
    auto y = parse_symbols(obj["y"], "pmf.y");
    Alphabet a(std::move(x), std::move(y));
    auto mass = parse_grid<double>(obj["mass"], a.ny(), a.nx(), "pmf.mass");
    try {
        return JointPmf(std::move(a), std::move(mass));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::vector<JointPmf> pmf_array(const json& arr, const char* what) {
    if (!arr.is_array() || arr.empty()) {
        throw ParseError(std::string(what) + ": must be a nonempty array of PMFs");
    }
    std::vector<JointPmf> members;
    members.reserve(arr.size());
    for (const auto& v : arr) members.push_back(pmf_from_json(v));
    for (std::size_t i = 1; i < members.size(); ++i) {
        if (!(members[i].alphabet() == members[0].alphabet())) {
            throw ParseError(std::string(what) + ": members must share one alphabet");
        }
    }
    return members;
}

json pmf_json(const JointPmf& pmf) {
    json obj;
    obj["x"] = pmf.alphabet().x_symbols();
    obj["y"] = pmf.alphabet().y_symbols();
    json rows = json::array();
    for (std::size_t iy = 0; iy < pmf.ny(); ++iy) {
        json row = json::array();
        for (std::size_t ix = 0; ix < pmf.nx(); ++ix) row.push_back(pmf.at(ix, iy));
        rows.push_back(std::move(row));
    }
    obj["mass"] = std::move(rows);
    return obj;
}

}  // namespace

JointPmf parse_pmf(const std::string& text) { return pmf_from_json(parse_text(text)); }

GuessingList parse_list(const std::string& text) {
    json obj = parse_text(text);
    check_keys(obj, {"x", "y", "rank"}, "list");
    auto x = parse_symbols(obj["x"], "list.x");
    auto y = parse_symbols(obj["y"], "list.y");
    Alphabet a(std::move(x), std::move(y));
    auto ranks = parse_grid<int>(obj["rank"], a.ny(), a.nx(), "list.rank");
    try {
        return GuessingList(std::move(a), std::move(ranks));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::vector<JointPmf> parse_family(const std::string& text) {
    json obj = parse_text(text);
    check_keys(obj, {"members"}, "family");
    return pmf_array(obj["members"], "family.members");
}

std::vector<JointPmf> parse_hull(const std::string& text) {
    json obj = parse_text(text);
    check_keys(obj, {"vertices"}, "hull");
    return pmf_array(obj["vertices"], "hull.vertices");
}

std::string pmf_to_json(const JointPmf& pmf) { return pmf_json(pmf).dump(2); }

std::string list_to_json(const GuessingList& list) {
    json obj;
    obj["x"] = list.alphabet().x_symbols();
    obj["y"] = list.alphabet().y_symbols();
    json rows = json::array();
    for (std::size_t iy = 0; iy < list.alphabet().ny(); ++iy) {
        json row = json::array();
        for (std::size_t ix = 0; ix < list.alphabet().nx(); ++ix) {
            row.push_back(list.rank(ix, iy));
        }
        rows.push_back(std::move(row));
    }
    obj["rank"] = std::move(rows);
    return obj.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

JointPmf load_pmf(const std::string& path) { return parse_pmf(read_file(path)); }
GuessingList load_list(const std::string& path) { return parse_list(read_file(path)); }
std::vector<JointPmf> load_family(const std::string& path) {
    return parse_family(read_file(path));
}
std::vector<JointPmf> load_hull(const std::string& path) { return parse_hull(read_file(path)); }

}  // namespace guesslab::json_io
