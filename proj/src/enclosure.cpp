#include "quill/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace quill {

namespace {

mpfr_prec_t join_prec(const RealEnclosure& a, const RealEnclosure& b) {
    return std::max(a.prec(), b.prec());
}

}  // namespace

void RealEnclosure::check() const {
    if (mpfr_nan_p(lo_.get()) || mpfr_nan_p(hi_.get()) || mpfr_cmp(lo_.get(), hi_.get()) > 0)
        throw std::domain_error("RealEnclosure: invalid interval");
}

RealEnclosure RealEnclosure::from_int(const Int& a, mpfr_prec_t prec) {
    RealEnclosure r(prec);
    mpfr_set_z(r.lo_.get(), a.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_.get(), a.get_mpz_t(), MPFR_RNDU);
    return r;
}

RealEnclosure RealEnclosure::from_rat(const Rat& a, mpfr_prec_t prec) {
    RealEnclosure r(prec);
    mpfr_set_q(r.lo_.get(), a.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), a.get_mpq_t(), MPFR_RNDU);
    return r;
}

RealEnclosure RealEnclosure::from_double(double a, mpfr_prec_t prec) {
    RealEnclosure r(prec);
    mpfr_set_d(r.lo_.get(), a, MPFR_RNDD);
    mpfr_set_d(r.hi_.get(), a, MPFR_RNDU);
    return r;
}

RealEnclosure RealEnclosure::from_endpoints(const Mpf& lo, const Mpf& hi) {
    RealEnclosure r(std::max(lo.prec(), hi.prec()));
    mpfr_set(r.lo_.get(), lo.get(), MPFR_RNDD);
    mpfr_set(r.hi_.get(), hi.get(), MPFR_RNDU);
    r.check();
    return r;
}

RealEnclosure RealEnclosure::from_double_pm(double a, double eps, mpfr_prec_t prec) {
    RealEnclosure r(prec);
    mpfr_set_d(r.lo_.get(), a, MPFR_RNDD);
    mpfr_sub_d(r.lo_.get(), r.lo_.get(), eps, MPFR_RNDD);
    mpfr_set_d(r.hi_.get(), a, MPFR_RNDU);
    mpfr_add_d(r.hi_.get(), r.hi_.get(), eps, MPFR_RNDU);
    r.check();
    return r;
}

double RealEnclosure::lo_d() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
double RealEnclosure::hi_d() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }

bool RealEnclosure::contains_zero() const {
    return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool RealEnclosure::is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()) != 0; }

double RealEnclosure::width_d() const {
    Mpf w(prec());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return mpfr_get_d(w.get(), MPFR_RNDU);
}

RealEnclosure RealEnclosure::operator+(const RealEnclosure& o) const {
    RealEnclosure r(join_prec(*this, o));
    mpfr_add(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    return r;
}

RealEnclosure RealEnclosure::operator-(const RealEnclosure& o) const {
    RealEnclosure r(join_prec(*this, o));
    mpfr_sub(r.lo_.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
    return r;
}

RealEnclosure RealEnclosure::operator-() const {
    RealEnclosure r(prec());
    mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    return r;
}

RealEnclosure RealEnclosure::operator*(const RealEnclosure& o) const {
    RealEnclosure r(join_prec(*this, o));
    // min/max over the four endpoint products, each rounded both ways
    Mpf t(r.prec());
    bool first = true;
    const mpfr_srcptr as[2] = {lo_.get(), hi_.get()};
    const mpfr_srcptr bs[2] = {o.lo_.get(), o.hi_.get()};
    for (auto a : as)
        for (auto b : bs) {
            mpfr_mul(t.get(), a, b, MPFR_RNDD);
            if (first || mpfr_cmp(t.get(), r.lo_.get()) < 0) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
            mpfr_mul(t.get(), a, b, MPFR_RNDU);
            if (first || mpfr_cmp(t.get(), r.hi_.get()) > 0) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    return r;
}

RealEnclosure RealEnclosure::operator/(const RealEnclosure& o) const {
    if (o.contains_zero()) throw std::domain_error("RealEnclosure: division by interval containing 0");
    RealEnclosure r(join_prec(*this, o));
    Mpf t(r.prec());
    bool first = true;
    const mpfr_srcptr as[2] = {lo_.get(), hi_.get()};
    const mpfr_srcptr bs[2] = {o.lo_.get(), o.hi_.get()};
    for (auto a : as)
        for (auto b : bs) {
            mpfr_div(t.get(), a, b, MPFR_RNDD);
            if (first || mpfr_cmp(t.get(), r.lo_.get()) < 0) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
            mpfr_div(t.get(), a, b, MPFR_RNDU);
            if (first || mpfr_cmp(t.get(), r.hi_.get()) > 0) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    return r;
}

RealEnclosure RealEnclosure::abs() const {
    if (mpfr_sgn(lo_.get()) >= 0) return *this;
    if (mpfr_sgn(hi_.get()) <= 0) return -*this;
    RealEnclosure r(prec());  // lo = 0
    mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
    if (mpfr_cmp(hi_.get(), r.hi_.get()) > 0) mpfr_set(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

RealEnclosure RealEnclosure::sqrt() const {
    if (mpfr_sgn(lo_.get()) < 0) throw std::domain_error("RealEnclosure: sqrt of negative interval");
    RealEnclosure r(prec());
    mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

RealEnclosure RealEnclosure::log() const {
    if (mpfr_sgn(lo_.get()) <= 0) throw std::domain_error("RealEnclosure: log needs lo > 0");
    RealEnclosure r(prec());
    mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

RealEnclosure RealEnclosure::exp() const {
    RealEnclosure r(prec());
    mpfr_exp(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_exp(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

RealEnclosure RealEnclosure::pow_ui(unsigned long e) const {
    if (e == 0) {
        RealEnclosure r(prec());
        mpfr_set_ui(r.lo_.get(), 1, MPFR_RNDD);
        mpfr_set_ui(r.hi_.get(), 1, MPFR_RNDU);
        return r;
    }
    RealEnclosure r = *this;
    RealEnclosure base = *this;
    e -= 1;
    while (e > 0) {  // simple square-and-multiply; interval mul handles signs
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

RealEnclosure RealEnclosure::max_with(const RealEnclosure& o) const {
    RealEnclosure r(join_prec(*this, o));
    mpfr_max(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_max(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    return r;
}

RealEnclosure RealEnclosure::min_with(const RealEnclosure& o) const {
    RealEnclosure r(join_prec(*this, o));
    mpfr_min(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_min(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    return r;
}

RealEnclosure RealEnclosure::max_with_zero() const {
    RealEnclosure zero(prec());
    return max_with(zero);
}

bool RealEnclosure::certainly_lt(const RealEnclosure& o) const {
    return mpfr_cmp(hi_.get(), o.lo_.get()) < 0;
}

bool RealEnclosure::intersects(const RealEnclosure& o) const {
    return mpfr_cmp(lo_.get(), o.hi_.get()) <= 0 && mpfr_cmp(o.lo_.get(), hi_.get()) <= 0;
}

bool RealEnclosure::contains(const RealEnclosure& o) const {
    return mpfr_cmp(lo_.get(), o.lo_.get()) <= 0 && mpfr_cmp(o.hi_.get(), hi_.get()) <= 0;
}

RealEnclosure RealEnclosure::hull(const RealEnclosure& o) const {
    RealEnclosure r(join_prec(*this, o));
    mpfr_min(r.lo_.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
    mpfr_max(r.hi_.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
    return r;
}

std::string RealEnclosure::to_string(std::size_t digits) const {
    auto fmt = [&](mpfr_srcptr v, mpfr_rnd_t rnd) {
        char buf[256];
        std::string f = "%." + std::to_string(digits) + "R*g";
        mpfr_snprintf(buf, sizeof buf, f.c_str(), rnd, v);
        return std::string(buf);
    };
    return "[" + fmt(lo_.get(), MPFR_RNDD) + ", " + fmt(hi_.get(), MPFR_RNDU) + "]";
}

RealEnclosure log_enclosure_of_int(const Int& n, mpfr_prec_t prec) {
    if (sgn(n) <= 0) throw std::domain_error("log_enclosure_of_int: n must be positive");
    return RealEnclosure::from_int(n, prec).log();
}

RealEnclosure ComplexEnclosure::abs() const { return abs_sq().sqrt(); }

ComplexEnclosure ComplexEnclosure::pow_ui(unsigned long e) const {
    mpfr_prec_t p = re_.prec();
    if (e == 0) return {RealEnclosure::from_int(Int(1), p), RealEnclosure(p)};
    ComplexEnclosure r = *this, base = *this;
    e -= 1;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

double ComplexEnclosure::radius_d() const {
    double a = re_.width_d() / 2, b = im_.width_d() / 2;
    return std::sqrt(a * a + b * b) * (1 + 1e-15) + 1e-300;
}

RealEnclosure eval_enclosure(const IntPoly& p, const RealEnclosure& x) {
    RealEnclosure acc(x.prec());
    for (long i = p.degree(); i >= 0; --i)
        acc = acc * x + RealEnclosure::from_int(p.coeff(static_cast<std::size_t>(i)), x.prec());
    return acc;
}

ComplexEnclosure eval_enclosure(const IntPoly& p, const ComplexEnclosure& x) {
    mpfr_prec_t pr = x.re().prec();
    ComplexEnclosure acc(pr);
    for (long i = p.degree(); i >= 0; --i) {
        ComplexEnclosure coef(RealEnclosure::from_int(p.coeff(static_cast<std::size_t>(i)), pr),
                              RealEnclosure(pr));
        acc = acc * x + coef;
    }
    return acc;
}

ComplexEnclosure eval_enclosure(const RatPoly& p, const ComplexEnclosure& x) {
    mpfr_prec_t pr = x.re().prec();
    ComplexEnclosure acc(pr);
    for (long i = p.degree(); i >= 0; --i) {
        ComplexEnclosure coef(RealEnclosure::from_rat(p.coeff(static_cast<std::size_t>(i)), pr),
                              RealEnclosure(pr));
        acc = acc * x + coef;
    }
    return acc;
}

}  // namespace quill
