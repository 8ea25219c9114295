#include "quill/poly.hpp"

#include <sstream>

namespace quill {

Int content(const IntPoly& a) {
    Int g = 0;
    for (const auto& x : a.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntPoly primitive_part(const IntPoly& a) {
    if (a.is_zero()) return a;
    Int g = content(a);
    if (sgn(a.lead()) < 0) g = -g;
    IntPoly r = a;
    for (auto& x : r.c) x = exact_div(x, g);
    return r;
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    IntPoly q, r = a;
    long db = b.degree();
    q.c.assign(static_cast<std::size_t>(a.degree() - db) + 1, Int(0));
    while (r.degree() >= db) {
        if (!divides(b.lead(), r.lead())) return std::nullopt;
        Int f = exact_div(r.lead(), b.lead());
        std::size_t k = static_cast<std::size_t>(r.degree() - db);
        q.c[k] = f;
        for (long i = 0; i <= db; ++i)
            r.c[k + static_cast<std::size_t>(i)] -= f * b.c[static_cast<std::size_t>(i)];
        r.trim();
    }
    if (!r.is_zero()) return std::nullopt;
    q.trim();
    return q;
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("divrem: zero divisor");
    RatPoly q, r = a;
    long db = b.degree();
    if (r.degree() >= db) q.c.assign(static_cast<std::size_t>(r.degree() - db) + 1, Rat(0));
    while (r.degree() >= db) {
        Rat f = r.lead() / b.lead();
        std::size_t k = static_cast<std::size_t>(r.degree() - db);
        q.c[k] = f;
        for (long i = 0; i <= db; ++i)
            r.c[k + static_cast<std::size_t>(i)] -= f * b.c[static_cast<std::size_t>(i)];
        r.trim();
    }
    q.trim();
    return {q, r};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly u = a, v = b;
    while (!v.is_zero()) {
        RatPoly r = divrem(u, v).second;
        u = v;
        v = r;
    }
    if (!u.is_zero()) {
        Rat inv = 1 / u.lead();
        for (auto& x : u.c) x *= inv;
    }
    return u;
}

IntPoly gcd_primitive(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    RatPoly g = gcd(to_rat(a), to_rat(b));
    // clear denominators
    Int den = 1;
    for (const auto& x : g.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Int> v;
    v.reserve(g.c.size());
    for (const auto& x : g.c) {
        Rat s = x * Rat(den);
        s.canonicalize();
        v.emplace_back(s.get_num());
    }
    return primitive_part(IntPoly(std::move(v)));
}

namespace {

// Pseudo remainder with the exact multiplier lc(b)^(deg a - deg b + 1);
// reduction steps skipped through cancellation are compensated afterwards.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    long db = b.degree();
    const Int& lb = b.lead();
    long steps = 0, want = a.degree() - db + 1;
    while (r.degree() >= db) {
        Int lr = r.lead();
        std::size_t k = static_cast<std::size_t>(r.degree() - db);
        // r = lb*r - lr * X^k * b
        for (auto& x : r.c) x *= lb;
        for (long i = 0; i <= db; ++i)
            r.c[k + static_cast<std::size_t>(i)] -= lr * b.c[static_cast<std::size_t>(i)];
        r.trim();
        ++steps;
    }
    if (steps < want) {
        Int fix = pow_int(lb, static_cast<unsigned long>(want - steps));
        for (auto& x : r.c) x *= fix;
    }
    return r;
}

}  // namespace

// Subresultant PRS resultant; Cohen, "A Course in Computational Algebraic
// Number Theory", Algorithm 3.3.7.
Int resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("resultant: both arguments zero");
    if (a.is_zero() || b.is_zero()) return 0;
    if (a.degree() == 0) return pow_int(a.c[0], static_cast<unsigned long>(b.degree()));
    if (b.degree() == 0) return pow_int(b.c[0], static_cast<unsigned long>(a.degree()));

    IntPoly A = a, B = b;
    Int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        std::swap(A, B);
    }
    // signed contents: input = c * pp with pp having positive lead
    Int ca = sgn(A.lead()) < 0 ? Int(-content(A)) : content(A);
    Int cb = sgn(B.lead()) < 0 ? Int(-content(B)) : content(B);
    A = primitive_part(A);
    B = primitive_part(B);
    Int t = pow_int(ca, static_cast<unsigned long>(B.degree())) *
            pow_int(cb, static_cast<unsigned long>(A.degree()));

    Int g = 1, h = 1;
    while (true) {
        long dA = A.degree(), dB = B.degree();
        long delta = dA - dB;
        if ((dA & 1) && (dB & 1)) s = -s;
        IntPoly R = pseudo_rem(A, B);
        A = B;
        if (R.is_zero()) return 0;
        Int divisor = g * pow_int(h, static_cast<unsigned long>(delta));
        for (auto& x : R.c) x = exact_div(x, divisor);
        B = R;
        g = A.lead();
        if (delta > 0) {
            Int gpow = pow_int(g, static_cast<unsigned long>(delta));
            h = (delta == 1) ? g : exact_div(gpow, pow_int(h, static_cast<unsigned long>(delta - 1)));
        }
        if (B.degree() == 0) {
            long dAf = A.degree();  // >= 1: degree-0 B would have returned earlier
            Int num = pow_int(B.c[0], static_cast<unsigned long>(dAf));
            Int hfinal = (dAf == 1)
                             ? num
                             : exact_div(num, pow_int(h, static_cast<unsigned long>(dAf - 1)));
            return s * t * hfinal;
        }
    }
}

Int discriminant(const IntPoly& a) {
    if (a.degree() < 1) throw std::domain_error("discriminant: degree < 1");
    Int res = resultant(a, a.derivative());
    long d = a.degree();
    Int r = exact_div(res, a.lead());
    if (((d * (d - 1)) / 2) % 2 == 1) r = -r;
    return r;
}

std::vector<RatPoly> sturm_chain(const IntPoly& squarefree) {
    std::vector<RatPoly> chain;
    chain.push_back(to_rat(squarefree));
    chain.push_back(to_rat(squarefree.derivative()));
    while (!chain.back().is_zero()) {
        const RatPoly& p0 = chain[chain.size() - 2];
        const RatPoly& p1 = chain.back();
        RatPoly r = -divrem(p0, p1).second;
        // rescale by a positive factor (sign variations are unaffected):
        // clear denominators, then divide out the integer content
        if (!r.is_zero()) {
            Int den(1);
            for (const auto& q : r.c) den = lcm(den, q.get_den());
            Int num(0);
            for (const auto& q : r.c) num = gcd(num, Int(q.get_num() * exact_div(den, q.get_den())));
            Rat scale(den, num);
            scale.canonicalize();
            for (auto& q : r.c) q *= scale;
        }
        chain.push_back(r);
    }
    chain.pop_back();
    return chain;
}

int sturm_variations(const std::vector<RatPoly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

namespace {

int sign_at_infinity(const RatPoly& p, bool positive) {
    if (p.is_zero()) return 0;
    int s = sgn(p.lead());
    if (!positive && (p.degree() & 1)) s = -s;
    return s;
}

int sturm_variations_inf(const std::vector<RatPoly>& chain, bool positive) {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_at_infinity(p, positive);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

IntPoly squarefree_reduce(const IntPoly& a) {
    if (a.is_zero()) throw std::domain_error("sturm: zero polynomial undefined");
    if (a.degree() == 0) return a;
    IntPoly g = gcd_primitive(a, a.derivative());
    if (g.degree() <= 0) return primitive_part(a);
    auto q = divide_exact(primitive_part(a), g);
    if (!q) throw std::logic_error("squarefree_reduce: gcd does not divide");
    return *q;
}

}  // namespace

int sturm_real_root_count(const IntPoly& a) {
    IntPoly s = squarefree_reduce(a);
    if (s.degree() <= 0) return 0;
    auto chain = sturm_chain(s);
    return sturm_variations_inf(chain, false) - sturm_variations_inf(chain, true);
}

int sturm_real_root_count(const IntPoly& a, const Rat& lo, const Rat& hi) {
    if (lo > hi) return 0;
    IntPoly s = squarefree_reduce(a);
    if (s.degree() <= 0) return 0;
    auto chain = sturm_chain(s);
    return sturm_variations(chain, lo) - sturm_variations(chain, hi);
}

std::string to_string(const IntPoly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        const Int& x = a.c[i];
        if (is_zero(x)) continue;
        if (!first) os << (sgn(x) > 0 ? " + " : " - ");
        else if (sgn(x) < 0) os << "-";
        Int ax = abs(x);
        if (i == 0 || ax != 1) os << ax.get_str();
        if (i > 0) {
            if (ax != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace quill
