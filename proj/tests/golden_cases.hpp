// Golden CLI cases: <name>.args (one argument per line, empty lines kept),
// <name>.out (exact stdout) and <name>.code (exit code).
#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace golden {

struct Case {
    std::string name;
    std::vector<std::string> args;
    std::string out;
    int code = 0;
};

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline Case load(const std::filesystem::path& dir, const std::string& name) {
    Case c;
    c.name = name;
    std::istringstream args(slurp(dir / (name + ".args")));
    for (std::string line; std::getline(args, line);) c.args.push_back(line);
    c.out = slurp(dir / (name + ".out"));
    c.code = std::stoi(slurp(dir / (name + ".code")));
    return c;
}

inline std::vector<std::string> names(const std::filesystem::path& dir) {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".args") out.push_back(e.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

/// Relative input paths in the cases resolve against the golden directory.
struct ScopedCwd {
    explicit ScopedCwd(const std::filesystem::path& p) : saved(std::filesystem::current_path()) {
        std::filesystem::current_path(p);
    }
    ~ScopedCwd() { std::filesystem::current_path(saved); }
    std::filesystem::path saved;
};

}  // namespace golden
