#pragma once

// Desk-scale caps for verification sweeps plus key=value config parsing.
// Precedence: command-line flags > --config file > MORSETILINGS_CONFIG file
// > built-in defaults.

#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include "complex.hpp"

namespace morsetilings {

struct VerifyCaps {
    int grid_n_max = 10;
    int even_n_max = 5;
    int even_k_max = 3;
    int odd_n_max = 3;
    int odd_k_max = 2;
    int tri_k_max = 5;
    int sweep_m_max = 4;
    int sweep_n_max = 4;
    std::size_t cap_faces = kDefaultFaceCap;
};

struct Config {
    VerifyCaps caps;
    std::optional<std::string> out;
};

namespace detail {
inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}
}  // namespace detail

inline void apply_config_line(Config& cfg, const std::string& key, const std::string& value) {
    auto as_int = [&]() {
        try {
            return std::stoi(value);
        } catch (const std::exception&) {
            throw std::runtime_error("config value for " + key + " is not an integer: " + value);
        }
    };
    if (key == "grid_n_max") cfg.caps.grid_n_max = as_int();
    else if (key == "even_n_max") cfg.caps.even_n_max = as_int();
    else if (key == "even_k_max") cfg.caps.even_k_max = as_int();
    else if (key == "odd_n_max") cfg.caps.odd_n_max = as_int();
    else if (key == "odd_k_max") cfg.caps.odd_k_max = as_int();
    else if (key == "tri_k_max") cfg.caps.tri_k_max = as_int();
    else if (key == "sweep_m_max") cfg.caps.sweep_m_max = as_int();
    else if (key == "sweep_n_max") cfg.caps.sweep_n_max = as_int();
    else if (key == "cap_faces") cfg.caps.cap_faces = static_cast<std::size_t>(std::stoll(value));
    else if (key == "out") cfg.out = value;
    else throw std::runtime_error("unknown config key: " + key);
}

inline void load_config_file(Config& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = detail::trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key=value");
        apply_config_line(cfg, detail::trim(t.substr(0, eq)), detail::trim(t.substr(eq + 1)));
    }
}

// Flags are applied by the caller afterwards, giving them the last word.
inline Config resolve_config(const std::optional<std::string>& flag_path) {
    Config cfg;
    if (flag_path) {
        load_config_file(cfg, *flag_path);
        return cfg;
    }
    if (const char* env = std::getenv("MORSETILINGS_CONFIG"); env && *env)
        load_config_file(cfg, env);
    return cfg;
}

}  // namespace morsetilings
