#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <tuple>

#include "simwaring/errors.hpp"

namespace simwaring {

/// An exactly comparable point coordinate: zero, or 2^s * exp(2*pi*i*k/m) with
/// k/m in lowest terms. Distinctness is decided symbolically, never by
/// floating comparison.
class SymbolicRoot {
public:
    static SymbolicRoot zero() { return SymbolicRoot(); }

    static SymbolicRoot one() { return root_of_unity(0, 1, 0); }

    /// 2^radius_exp * e^(2*pi*i*index/order).
    static SymbolicRoot root_of_unity(int radius_exp, int order, int index) {
        if (radius_exp < 0) throw std::invalid_argument("radius exponent must be >= 0");
        if (order < 1) throw std::invalid_argument("order must be positive");
        if (index < 0 || index >= order) throw std::invalid_argument("index must be in [0, order)");
        SymbolicRoot r;
        r.is_zero_ = false;
        r.radius_exp_ = radius_exp;
        const int g = std::gcd(index, order);
        r.order_ = index == 0 ? 1 : order / g;
        r.index_ = index == 0 ? 0 : index / g;
        return r;
    }

    bool is_zero() const { return is_zero_; }
    int radius_exp() const { return radius_exp_; }
    int order() const { return order_; }
    int index() const { return index_; }

    std::complex<double> value() const {
        if (is_zero_) return {0.0, 0.0};
        const double radius = std::ldexp(1.0, radius_exp_);
        // Quarter turns evaluate exactly.
        if (order_ == 1) return {radius, 0.0};
        if (order_ == 2) return {-radius, 0.0};
        if (order_ == 4) return index_ == 1 ? std::complex<double>{0.0, radius}
                                            : std::complex<double>{0.0, -radius};
        const double angle = 2.0 * std::numbers::pi * index_ / order_;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    friend bool operator==(const SymbolicRoot& a, const SymbolicRoot& b) {
        return a.key() == b.key();
    }
    friend bool operator!=(const SymbolicRoot& a, const SymbolicRoot& b) { return !(a == b); }
    friend bool operator<(const SymbolicRoot& a, const SymbolicRoot& b) {
        return a.key() < b.key();
    }

private:
    SymbolicRoot() = default;

    std::tuple<int, int, int, int> key() const {
        return {is_zero_ ? 0 : 1, radius_exp_, order_, index_};
    }

    bool is_zero_ = true;
    int radius_exp_ = 0;
    int order_ = 1;
    int index_ = 0;
};

} // namespace simwaring
