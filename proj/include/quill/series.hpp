// Truncated series in 1/X: coefficients of X^0, X^-1, ..., X^-(N-1).
// All arithmetic is exact modulo X^-N.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "quill/numbers.hpp"

namespace quill {

template <class T>
struct Series {
    std::size_t order = 0;  // N
    std::vector<T> c;       // size == order, zero-padded

    Series() = default;
    explicit Series(std::size_t n) : order(n), c(n) {}
    Series(std::size_t n, std::vector<T> coeffs) : order(n), c(std::move(coeffs)) {
        if (c.size() > order) throw std::domain_error("Series: too many coefficients");
        c.resize(order);
    }

    static Series constant(std::size_t n, T v) {
        Series s(n);
        if (n == 0) throw std::domain_error("Series: zero order");
        s.c[0] = std::move(v);
        return s;
    }

    const T& coeff(std::size_t i) const { return c.at(i); }

    bool is_zero_series() const {
        for (const auto& x : c)
            if (!is_zero(x)) return false;
        return true;
    }

    Series operator+(const Series& o) const {
        Series r(std::min(order, o.order));
        for (std::size_t i = 0; i < r.order; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }

    Series operator-(const Series& o) const {
        Series r(std::min(order, o.order));
        for (std::size_t i = 0; i < r.order; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }

    Series operator*(const Series& o) const {
        Series r(std::min(order, o.order));
        for (std::size_t i = 0; i < r.order && i < c.size(); ++i) {
            if (is_zero(c[i])) continue;
            for (std::size_t j = 0; i + j < r.order && j < o.c.size(); ++j)
                r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
        }
        return r;
    }

    // Shift by X^-k (multiply by 1/X^k), dropping what falls past the order.
    Series shifted(std::size_t k) const {
        Series r(order);
        for (std::size_t i = 0; i + k < order; ++i) r.c[i + k] = c[i];
        return r;
    }

    Series pow(unsigned long e) const {
        Series r = constant(order, unit_like(c.at(0)));
        Series base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

private:
    // a multiplicative identity in the same ring as the sample value
    static T unit_like(const T& sample) {
        if constexpr (requires { T(1); })
            return T(1);
        else
            return sample.one_like();
    }

public:
    // Inverse of a series with unit leading coefficient 1; needs no division.
    Series invert_monic_unit() const {
        if (order == 0 || !is_one(c[0]))
            throw std::domain_error("Series: inversion requires constant term 1");
        Series r(order);
        r.c[0] = unit_like(c[0]);
        for (std::size_t n = 1; n < order; ++n) {
            T acc{};
            for (std::size_t j = 1; j <= n && j < c.size(); ++j) acc = acc + c[j] * r.c[n - j];
            r.c[n] = T{} - acc;
        }
        return r;
    }

    // Substitute this series (constant term must vanish) into a power series
    // with the given outer coefficients, using Horner in the inner variable.
    template <class Outer>
    Series compose_outer(const std::vector<Outer>& outer) const {
        if (order == 0) throw std::domain_error("Series: zero order");
        if (!is_zero(c[0]))
            throw std::domain_error("Series: composition needs zero constant term");
        Series r(order);
        std::size_t terms = std::min<std::size_t>(outer.size(), order);
        for (std::size_t k = terms; k-- > 0;) {
            r = r * (*this);
            r.c[0] = r.c[0] + T(outer[k]);
        }
        return r;
    }
};

using RatSeries = Series<Rat>;

// Substitution of `inner` (ord_infty >= 1) into sum outer[k] U^k.
RatSeries series_sqrt_like_compose(const std::vector<Rat>& outer, const RatSeries& inner);

}  // namespace quill
