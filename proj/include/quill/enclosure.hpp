// Outward-rounded interval arithmetic over MPFR. RealEnclosure is a closed
// interval [lo, hi]; ComplexEnclosure is an axis-aligned box. Every operation
// only widens: the true value of an expression stays inside the result.
#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "quill/numbers.hpp"
#include "quill/poly.hpp"

namespace quill {

// Minimal RAII wrapper for a single mpfr number.
class Mpf {
public:
    explicit Mpf(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Mpf(const Mpf& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Mpf(Mpf&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Mpf& operator=(Mpf o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Mpf() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

class RealEnclosure {
public:
    // exact zero at the given precision
    explicit RealEnclosure(mpfr_prec_t prec = 64) : lo_(prec), hi_(prec) {}

    static RealEnclosure from_int(const Int& a, mpfr_prec_t prec);
    static RealEnclosure from_rat(const Rat& a, mpfr_prec_t prec);
    static RealEnclosure from_double(double a, mpfr_prec_t prec);
    static RealEnclosure from_endpoints(const Mpf& lo, const Mpf& hi);
    // [a - eps, a + eps] around a double, eps exact-double
    static RealEnclosure from_double_pm(double a, double eps, mpfr_prec_t prec);

    mpfr_srcptr lo() const { return lo_.get(); }
    mpfr_srcptr hi() const { return hi_.get(); }
    double lo_d() const;  // rounded down
    double hi_d() const;  // rounded up
    double mid_d() const { return (lo_d() + hi_d()) / 2; }
    mpfr_prec_t prec() const { return lo_.prec(); }

    bool contains_zero() const;
    bool is_point() const;
    bool strictly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
    bool strictly_negative() const { return mpfr_sgn(hi_.get()) < 0; }
    double width_d() const;  // hi - lo rounded up

    RealEnclosure operator+(const RealEnclosure& o) const;
    RealEnclosure operator-(const RealEnclosure& o) const;
    RealEnclosure operator-() const;
    RealEnclosure operator*(const RealEnclosure& o) const;
    RealEnclosure operator/(const RealEnclosure& o) const;  // 0 not in o

    RealEnclosure abs() const;
    RealEnclosure sqrt() const;  // lo >= 0 required
    RealEnclosure log() const;   // lo > 0 required
    RealEnclosure exp() const;
    RealEnclosure pow_ui(unsigned long e) const;
    RealEnclosure max_with(const RealEnclosure& o) const;
    RealEnclosure min_with(const RealEnclosure& o) const;
    RealEnclosure max_with_zero() const;

    // true when every point of *this is < (resp. >) every point of o
    bool certainly_lt(const RealEnclosure& o) const;
    bool certainly_gt(const RealEnclosure& o) const { return o.certainly_lt(*this); }
    bool intersects(const RealEnclosure& o) const;
    bool contains(const RealEnclosure& o) const;  // o subset of *this

    RealEnclosure hull(const RealEnclosure& o) const;

    std::string to_string(std::size_t digits = 20) const;

private:
    Mpf lo_, hi_;
    void check() const;
};

RealEnclosure log_enclosure_of_int(const Int& n, mpfr_prec_t prec);  // n >= 1

class ComplexEnclosure {
public:
    explicit ComplexEnclosure(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
    ComplexEnclosure(RealEnclosure re, RealEnclosure im)
        : re_(std::move(re)), im_(std::move(im)) {}

    static ComplexEnclosure real_point(const Rat& a, mpfr_prec_t prec) {
        return {RealEnclosure::from_rat(a, prec), RealEnclosure(prec)};
    }

    const RealEnclosure& re() const { return re_; }
    const RealEnclosure& im() const { return im_; }

    ComplexEnclosure operator+(const ComplexEnclosure& o) const {
        return {re_ + o.re_, im_ + o.im_};
    }
    ComplexEnclosure operator-(const ComplexEnclosure& o) const {
        return {re_ - o.re_, im_ - o.im_};
    }
    ComplexEnclosure operator*(const ComplexEnclosure& o) const {
        return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
    }
    ComplexEnclosure conj() const { return {re_, -im_}; }

    RealEnclosure abs() const;
    // |re|, |im| first: the naive re*re lower bound goes negative when the
    // interval straddles 0
    RealEnclosure abs_sq() const {
        RealEnclosure a = re_.abs(), b = im_.abs();
        return a * a + b * b;
    }
    ComplexEnclosure pow_ui(unsigned long e) const;

    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    bool disjoint_from(const ComplexEnclosure& o) const {
        return !re_.intersects(o.re_) || !im_.intersects(o.im_);
    }
    bool is_certainly_real() const { return im_.is_point() && mpfr_zero_p(im_.lo()) != 0; }

    double radius_d() const;  // half-diagonal, rounded up
    double center_re_d() const { return re_.mid_d(); }
    double center_im_d() const { return im_.mid_d(); }

private:
    RealEnclosure re_, im_;
};

// Horner evaluation of an integer/rational polynomial on enclosures.
RealEnclosure eval_enclosure(const IntPoly& p, const RealEnclosure& x);
ComplexEnclosure eval_enclosure(const IntPoly& p, const ComplexEnclosure& x);
ComplexEnclosure eval_enclosure(const RatPoly& p, const ComplexEnclosure& x);

}  // namespace quill
