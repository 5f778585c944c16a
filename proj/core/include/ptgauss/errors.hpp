#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ptgauss {

// Quadrature or series evaluation failed to meet its accuracy contract.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// A numerical check contradicted a closed form it was supposed to confirm.
struct verification_error : std::runtime_error {
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

// Game instance admits no informative equilibrium (zero power budget).
struct degenerate_game_error : std::runtime_error {
    explicit degenerate_game_error(const std::string& what) : std::runtime_error(what) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid run configuration; carries every offending field, not just the first.
struct validation_error : std::runtime_error {
    std::vector<std::string> fields;

    validation_error(const std::string& what, std::vector<std::string> bad_fields)
        : std::runtime_error(what + " [" + join(bad_fields) + "]"), fields(std::move(bad_fields)) {}

  private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out;
        for (const auto& f : v) {
            if (!out.empty()) out += ", ";
            out += f;
        }
        return out;
    }
};

inline void check_alpha(double alpha, const char* who) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::domain_error(std::string(who) + ": alpha must lie in (0, 1], got " + std::to_string(alpha));
}

} // namespace ptgauss
