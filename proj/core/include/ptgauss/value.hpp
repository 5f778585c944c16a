#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace ptgauss {

// Outcome valuation v(s, s_hat). The only closed-form case is squared error,
// (s_hat - s)^2; other shapes may be registered by id for the quadrature and
// Monte Carlo paths, which assume polynomial growth.
class ValueFunction {
  public:
    enum class Kind { squared_error, custom };

    static ValueFunction squared_error() { return ValueFunction(Kind::squared_error, "squared_error", {}); }

    static ValueFunction custom(std::string id, std::function<double(double, double)> fn) {
        if (!fn) throw std::invalid_argument("ValueFunction::custom: callable required");
        return ValueFunction(Kind::custom, std::move(id), std::move(fn));
    }

    double operator()(double s, double s_hat) const {
        if (kind_ == Kind::squared_error) {
            const double d = s_hat - s;
            return d * d;
        }
        return fn_(s, s_hat);
    }

    Kind kind() const { return kind_; }
    const std::string& id() const { return id_; }

  private:
    ValueFunction(Kind kind, std::string id, std::function<double(double, double)> fn)
        : kind_(kind), id_(std::move(id)), fn_(std::move(fn)) {}

    Kind kind_;
    std::string id_;
    std::function<double(double, double)> fn_;
};

} // namespace ptgauss
