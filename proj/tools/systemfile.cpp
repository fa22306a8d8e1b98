#include "systemfile.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "certsolve/errors.hpp"
#include "certsolve/polytext.hpp"

namespace certsolve::cli {

namespace {

const std::set<std::string> kLists{"vars", "params", "states"};
const std::set<std::string> kScalars{"precision", "h", "t0", "var", "output"};
const std::set<std::string> kBlocks{"eqs", "dynamics", "matrix", "data", "derivatives"};
const std::vector<std::string> kOrder{"vars", "params", "states", "var", "precision", "h", "t0", "output",
                                      "eqs", "dynamics", "matrix", "derivatives", "data"};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_names(const std::string& s, std::size_t line) {
    std::vector<std::string> out;
    if (trim(s).empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::string name = trim(item);
        if (name.empty()) throw ParseError("empty name in list", line);
        out.push_back(name);
    }
    return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

}  // namespace

std::optional<std::string> SystemFile::scalar(const std::string& key) const {
    auto it = scalars.find(key);
    if (it == scalars.end()) return std::nullopt;
    return it->second;
}

const std::vector<std::string>& SystemFile::block(const std::string& key) const {
    static const std::vector<std::string> empty;
    auto it = blocks.find(key);
    return it == blocks.end() ? empty : it->second;
}

SystemFile parse_system_file(std::string_view text) {
    SystemFile f;
    std::set<std::string> seen;
    std::string current;  // open block section
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            if (current.empty()) throw ParseError("text outside of a section", lineno);
            f.blocks[current].push_back(line);
            f.block_lines[current].push_back(lineno);
            continue;
        }
        const std::string key = trim(line.substr(0, colon));
        const std::string value = trim(line.substr(colon + 1));
        if (!seen.insert(key).second) throw ParseError("duplicate section '" + key + "'", lineno);
        current.clear();
        if (kLists.count(key)) {
            auto names = split_names(value, lineno);
            (key == "vars" ? f.vars : key == "params" ? f.params : f.states) = std::move(names);
        } else if (kScalars.count(key)) {
            if (value.empty()) throw ParseError("section '" + key + "' needs a value", lineno);
            f.scalars[key] = value;
        } else if (kBlocks.count(key)) {
            current = key;
            f.blocks[key];
            if (!value.empty()) {
                f.blocks[key].push_back(value);
                f.block_lines[key].push_back(lineno);
            }
        } else {
            throw ParseError("unknown section '" + key + "'", lineno);
        }
    }
    return f;
}

SystemFile read_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_system_file(ss.str());
}

std::string format_system_file(const SystemFile& f) {
    std::string out;
    for (const auto& key : kOrder) {
        if (key == "vars" || key == "params" || key == "states") {
            const auto& names = key == "vars" ? f.vars : key == "params" ? f.params : f.states;
            if (!names.empty()) out += key + ": " + join(names, ", ") + "\n";
        } else if (auto v = f.scalar(key)) {
            out += key + ": " + *v + "\n";
        } else if (f.blocks.count(key)) {
            out += key + ":\n";
            for (const auto& l : f.block(key)) out += l + "\n";
        }
    }
    return out;
}

std::vector<MultiPoly> block_polys(const SystemFile& f, const std::string& key, const std::vector<std::string>& ring) {
    std::vector<std::string> vars = ring;
    if (vars.empty()) {
        vars = f.vars;
        vars.insert(vars.end(), f.params.begin(), f.params.end());
    }
    std::vector<MultiPoly> out;
    const auto& lines = f.block(key);
    const auto lit = f.block_lines.find(key);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        try {
            out.push_back(parse_poly(lines[i], vars));
        } catch (const ParseError& e) {
            const std::size_t at = lit != f.block_lines.end() && i < lit->second.size() ? lit->second[i] : 0;
            throw ParseError(e.what(), at);
        }
    }
    return out;
}

Rational parse_number(std::string_view text) {
    const MultiPoly p = parse_poly(text, {});
    if (!p.is_constant()) throw ParseError("expected a number, got '" + std::string(text) + "'");
    return p.constant_value();
}

}  // namespace certsolve::cli
