#include "ptgauss/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ptgauss/errors.hpp"

namespace ptgauss {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::string normalized = s;
    for (auto& c : normalized)
        if (c == ',') c = ' ';
    std::istringstream in(normalized);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool parse_double(const std::string& s, double& out) {
    try {
        size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size() && std::isfinite(out);
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_ll(const std::string& s, long long& out) {
    try {
        size_t pos = 0;
        out = std::stoll(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_u64(const std::string& s, uint64_t& out) {
    try {
        size_t pos = 0;
        out = std::stoull(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

bool parse_bool(const std::string& s, bool& out) {
    if (s == "true" || s == "1" || s == "yes") return out = true, true;
    if (s == "false" || s == "0" || s == "no") return (out = false), true;
    return false;
}

bool parse_double_list(const std::string& s, std::vector<double>& out) {
    // start:step:stop range form, endpoint included up to rounding slack.
    if (s.find(':') != std::string::npos) {
        const auto parts = split_list([&] {
            std::string t = s;
            for (auto& c : t)
                if (c == ':') c = ' ';
            return t;
        }());
        double start = 0.0, step = 0.0, stop = 0.0;
        if (parts.size() != 3 || !parse_double(parts[0], start) || !parse_double(parts[1], step) ||
            !parse_double(parts[2], stop) || !(step > 0.0) || stop < start)
            return false;
        out.clear();
        const auto count = static_cast<long long>(std::floor((stop - start) / step + 1.0e-9)) + 1;
        for (long long i = 0; i < count; ++i) out.push_back(start + step * static_cast<double>(i));
        return true;
    }

    const auto toks = split_list(s);
    if (toks.empty()) return false;
    out.clear();
    for (const auto& tok : toks) {
        double v = 0.0;
        if (!parse_double(tok, v)) return false;
        out.push_back(v);
    }
    return true;
}

} // namespace

std::vector<double> SweepConfig::default_p_grid() {
    std::vector<double> grid;
    grid.reserve(41);
    for (int i = 0; i <= 40; ++i) grid.push_back(0.5 * i);
    return grid;
}

void validate(const SweepConfig& cfg) {
    std::vector<std::string> bad;

    if (!(cfg.sigma_s2 > 0.0)) bad.push_back("sigma_s2");
    if (!(cfg.sigma_n2 > 0.0)) bad.push_back("sigma_n2");

    if (cfg.alphas.empty()) {
        bad.push_back("alphas");
    } else {
        for (const double a : cfg.alphas)
            if (!(a > 0.0) || a > 1.0) {
                bad.push_back("alphas");
                break;
            }
    }

    if (cfg.p_grid.empty()) {
        bad.push_back("p_grid");
    } else {
        bool ok = cfg.p_grid.front() >= 0.0;
        for (size_t i = 1; ok && i < cfg.p_grid.size(); ++i) ok = cfg.p_grid[i] > cfg.p_grid[i - 1];
        if (!ok) bad.push_back("p_grid");
    }

    if (cfg.mc_samples < 1000) bad.push_back("mc_samples");
    if (cfg.quad_nodes < 16) bad.push_back("quad_nodes");
    if (!(cfg.quad_trunc_sigmas >= 8.0)) bad.push_back("quad_trunc_sigmas");
    if (cfg.output_dir.empty()) bad.push_back("output_dir");

    if (!bad.empty()) throw validation_error("invalid configuration", std::move(bad));
}

SweepConfig parse_config_text(const std::string& text) {
    SweepConfig cfg;
    std::vector<std::string> bad;

    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            bad.push_back("line '" + line + "'");
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            bad.push_back("line '" + line + "'");
            continue;
        }

        bool ok = true;
        if (key == "sigma_s2") ok = parse_double(value, cfg.sigma_s2);
        else if (key == "sigma_n2") ok = parse_double(value, cfg.sigma_n2);
        else if (key == "alphas") ok = parse_double_list(value, cfg.alphas);
        else if (key == "p_grid") ok = parse_double_list(value, cfg.p_grid);
        else if (key == "mc_enabled") ok = parse_bool(value, cfg.mc_enabled);
        else if (key == "mc_samples") ok = parse_ll(value, cfg.mc_samples);
        else if (key == "mc_seed") ok = parse_u64(value, cfg.mc_seed);
        else if (key == "quad_nodes") { long long n = 0; ok = parse_ll(value, n); if (ok) cfg.quad_nodes = static_cast<int>(n); }
        else if (key == "quad_trunc_sigmas") ok = parse_double(value, cfg.quad_trunc_sigmas);
        else if (key == "output_dir") cfg.output_dir = value;
        else { bad.push_back(key + " (unknown key)"); continue; }

        if (!ok) bad.push_back(key);
    }

    if (!bad.empty()) throw validation_error("malformed configuration", std::move(bad));
    validate(cfg);
    return cfg;
}

SweepConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot read config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

} // namespace ptgauss
