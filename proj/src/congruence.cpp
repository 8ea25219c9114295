#include "quill/congruence.hpp"

#include <stdexcept>

#include "quill/modp.hpp"

namespace quill {

namespace {

std::string describe_ring(const RingPtr& ring) {
    if (ring->is_integers()) return "Z";
    return "Z[c], c root of " + to_string(ring->minpoly());
}

RingElement ring_neg(const RingElement& a) { return RingElement() - a; }

// coordinatewise exact division by a positive integer
RingElement ring_div_exact(const RingElement& a, const Int& m) {
    if (!a.is_attached()) return a;
    std::vector<Int> co;
    co.reserve(a.coords().size());
    for (const auto& v : a.coords()) {
        if (!divides(m, v)) throw std::logic_error("congruence: exact division failed");
        co.push_back(exact_div(v, m));
    }
    return RingElement(a.ring(), std::move(co));
}

bool ring_divisible(const RingElement& a, const Int& m) {
    for (const auto& v : a.coords())
        if (!divides(m, v)) return false;
    return true;
}

RingElement ring_pow(RingElement base, unsigned long e, const RingElement& one) {
    RingElement r = one;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

// a^e with every product reduced mod m
RingElement ring_pow_mod(RingElement a, Int e, const Int& m) {
    RingElement r = a.one_like().reduced_mod(m);
    a = a.reduced_mod(m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * a).reduced_mod(m);
        e >>= 1;
        if (e > 0) a = (a * a).reduced_mod(m);
    }
    return r;
}

using Mat = std::vector<std::vector<RingElement>>;

Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size();
    Mat r(n, std::vector<RingElement>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RingElement s;
            for (std::size_t t = 0; t < n; ++t) s = s + a[i][t] * b[t][j];
            r[i][j] = s;
        }
    return r;
}

}  // namespace

std::vector<Int> elementary_symmetric(const std::vector<Int>& t) {
    std::vector<Int> e(t.size() + 1, Int(0));
    e[0] = 1;
    std::size_t used = 0;
    for (const auto& x : t) {
        ++used;
        for (std::size_t j = used; j >= 1; --j) e[j] = e[j] + e[j - 1] * x;
    }
    return e;
}

std::vector<RingElement> elementary_symmetric(const std::vector<RingElement>& t) {
    if (t.empty()) throw std::domain_error("elementary_symmetric: empty tuple");
    std::vector<RingElement> e(t.size() + 1);
    e[0] = t[0].one_like();
    std::size_t used = 0;
    for (const auto& x : t) {
        ++used;
        for (std::size_t j = used; j >= 1; --j) e[j] = e[j] + e[j - 1] * x;
    }
    return e;
}

PsiPoly psi_poly(long p, long j, long D) {
    if (!is_prime(Int(p))) throw std::domain_error("psi_poly: p must be prime");
    if (j < 0 || j > D || D < 1 || D > 8)
        throw std::domain_error("psi_poly: need 0 <= j <= D <= 8");
    return PsiPoly{p, j, D};
}

Int PsiPoly::eval(const std::vector<Int>& t) const {
    if (static_cast<long>(t.size()) != D) throw std::domain_error("PsiPoly: wrong tuple size");
    auto e = elementary_symmetric(t);
    std::vector<Int> tp;
    tp.reserve(t.size());
    for (const auto& x : t) tp.push_back(pow_int(x, static_cast<unsigned long>(p)));
    Int diff = pow_int(e[static_cast<std::size_t>(j)], static_cast<unsigned long>(p)) -
               elementary_symmetric(tp)[static_cast<std::size_t>(j)];
    if (!divides(Int(p), diff)) throw std::logic_error("PsiPoly: division by p inexact");
    return exact_div(diff, Int(p));
}

RingElement PsiPoly::eval(const std::vector<RingElement>& t) const {
    if (static_cast<long>(t.size()) != D) throw std::domain_error("PsiPoly: wrong tuple size");
    auto e = elementary_symmetric(t);
    RingElement one = t[0].one_like();
    std::vector<RingElement> tp;
    tp.reserve(t.size());
    for (const auto& x : t) tp.push_back(ring_pow(x, static_cast<unsigned long>(p), one));
    RingElement diff = ring_pow(e[static_cast<std::size_t>(j)], static_cast<unsigned long>(p), one) -
                       elementary_symmetric(tp)[static_cast<std::size_t>(j)];
    return ring_div_exact(diff, Int(p));
}

CongruenceWitness verify_powersum_congruence(long p, long k, long D, long samples,
                                             std::uint64_t seed) {
    if (k < 1 || samples < 1)
        throw std::domain_error("verify_powersum_congruence: need k >= 1, samples >= 1");
    CongruenceWitness w;
    w.statement = "powersum";
    w.p = p;
    w.k = k;
    w.ring_desc = "Z";
    Int p2 = Int(p) * Int(p);
    unsigned long pk = pow_int(Int(p), static_cast<unsigned long>(k)).get_ui();
    unsigned long pk1 = pow_int(Int(p), static_cast<unsigned long>(k - 1)).get_ui();
    Rng rng(seed);
    for (long s = 0; s < samples; ++s) {
        std::vector<Int> t;
        for (long i = 0; i < D; ++i) t.emplace_back(rng.range(-20, 20));
        auto e = elementary_symmetric(t);
        std::vector<Int> tpk;
        for (const auto& x : t) tpk.push_back(pow_int(x, pk));
        auto epk = elementary_symmetric(tpk);
        for (long j = 0; j <= D; ++j) {
            auto ju = static_cast<std::size_t>(j);
            Int psi = psi_poly(p, j, D).eval(t);
            Int lhs = pow_int(e[ju], pk);
            Int rhs = epk[ju] + Int(p) * pow_int(psi, pk1);
            if (!is_zero(mod_floor(lhs - rhs, p2))) {
                w.status = CongruenceStatus::Failed;
                w.witness = "j=" + std::to_string(j) + " tuple";
                for (const auto& x : t) w.witness += " " + x.get_str();
                return w;
            }
        }
    }
    w.status = CongruenceStatus::Verified;
    w.verified_for_order = true;
    return w;
}

RingPoly pushforward(const RingPoly& A, const UnicriticalMap& f, long k) {
    if (A.degree() < 1 || !is_one(A.lead()))
        throw std::domain_error("pushforward: A must be monic of positive degree");
    if (k < 0) throw std::domain_error("pushforward: k must be >= 0");
    if (k == 0) return A;
    auto D = static_cast<std::size_t>(A.degree());
    RingElement one = f.c.one_like();

    // g = f^{(k)}(T) reduced mod A
    RingPoly g = divrem_monic(RingPoly({RingElement(), one}), A).second;
    for (long step = 0; step < k; ++step) {
        RingPoly acc = RingPoly::constant(one);
        for (long e = 0; e < f.p; ++e) acc = divrem_monic(acc * g, A).second;
        g = acc + RingPoly::constant(f.c);
    }

    // multiplication-by-g matrix on R[T]/(A) in the power basis
    Mat M(D, std::vector<RingElement>(D));
    RingPoly h = g;
    for (std::size_t col = 0; col < D; ++col) {
        for (std::size_t row = 0; row < D; ++row) M[row][col] = h.coeff(row);
        if (col + 1 < D) h = divrem_monic(h * RingPoly({RingElement(), one}), A).second;
    }

    // characteristic polynomial by Faddeev--LeVerrier; divisions are exact
    // because the ring is torsion-free
    std::vector<RingElement> coeffs(D + 1);
    coeffs[D] = one;
    Mat N = M;
    for (std::size_t m = 1; m <= D; ++m) {
        RingElement tr;
        for (std::size_t i = 0; i < D; ++i) tr = tr + N[i][i];
        RingElement cm = ring_neg(ring_div_exact(tr, Int(static_cast<long>(m))));
        coeffs[D - m] = cm;
        if (m < D) {
            for (std::size_t i = 0; i < D; ++i) N[i][i] = N[i][i] + cm;
            N = mat_mul(M, N);
        }
    }
    return RingPoly(std::move(coeffs));
}

PushforwardPair make_pushforward_pair(const RingPoly& A, const UnicriticalMap& f, long k,
                                      long l) {
    PushforwardPair pr;
    pr.A = A;
    pr.k = k;
    pr.l = l;
    pr.Ak = pushforward(A, f, k);
    pr.Al = pushforward(A, f, l);
    return pr;
}

CongruenceWitness verify_AkAl_mod_p2(const PushforwardPair& pair, const UnicriticalMap& f) {
    if (pair.k < 1 || pair.k > pair.l)
        throw std::domain_error("verify_AkAl_mod_p2: need 1 <= k <= l");
    RingElement zero = RingElement::from_int(f.ring(), 0);
    if (!(iterate(f, zero, static_cast<unsigned long>(pair.k - 1)) ==
          iterate(f, zero, static_cast<unsigned long>(pair.l - 1))))
        throw std::domain_error(
            "verify_AkAl_mod_p2: orbit precondition f^(k-1)(0) = f^(l-1)(0) fails");

    CongruenceWitness w;
    w.statement = "AkAl_mod_p2";
    w.p = f.p;
    w.k = pair.k;
    w.l = pair.l;
    w.delta = congruence_delta(pair.k);
    w.ring_desc = describe_ring(f.ring());
    Int p2 = Int(f.p) * Int(f.p);
    RingPoly diff = pair.Ak - pair.Al;
    for (long i = 0; i <= diff.degree(); ++i)
        if (!ring_divisible(diff.coeff(static_cast<std::size_t>(i)), p2)) {
            w.status = CongruenceStatus::Failed;
            w.witness = "coefficient index " + std::to_string(i);
            return w;
        }
    w.status = CongruenceStatus::Verified;
    w.verified_for_order = true;
    return w;
}

long congruence_delta(long k) { return k == 1 ? 0 : 1; }

CongruenceWitness frobenius_hypothesis_check(RingPtr ring, long p, long k, long l) {
    if (k < 1 || k >= l) throw std::domain_error("frobenius_hypothesis_check: need 1 <= k < l");
    if (!is_prime(Int(p))) throw std::domain_error("frobenius_hypothesis_check: p must be prime");
    CongruenceWitness w;
    w.statement = "frobenius_hypothesis";
    w.p = p;
    w.k = k;
    w.l = l;
    w.delta = congruence_delta(k);
    w.ring_desc = describe_ring(ring);

    // a = a^p mod p for integers, so all exponent pairs agree
    if (ring->is_integers()) {
        w.status = CongruenceStatus::Verified;
        w.verified_for_order = true;
        return w;
    }

    Int P(p);
    bool p_maximal = is_p_maximal_heuristic(*ring, P) == PMaximal::Yes;
    if (p_maximal) {
        // R/pR is a product of F_{p^f}; Frobenius^u = Frobenius^v exactly
        // when every residue degree f divides v - u = l - k
        bool ok = true;
        for (int fdeg : ddf_degrees(ring->minpoly(), P))
            if ((l - k) % fdeg != 0) ok = false;
        if (ok) {
            w.status = CongruenceStatus::Verified;
            w.verified_for_order = true;
            return w;
        }
        // fall through to find a concrete counterexample
    }

    Int eu = pow_int(Int(p), static_cast<unsigned long>(k - w.delta - 1));
    Int ev = pow_int(Int(p), static_cast<unsigned long>(l - w.delta - 1));
    for (const auto& a : enumerate_residues_mod_p(ring, P))
        if (!(ring_pow_mod(a, eu, P) == ring_pow_mod(a, ev, P))) {
            w.status = CongruenceStatus::Failed;
            w.witness = a.to_string();
            return w;
        }
    w.verified_for_order = true;
    if (!p_maximal && divides(P, discriminant(ring->minpoly()))) {
        w.status = CongruenceStatus::InconclusiveForMaximalOrder;
        w.witness = "congruence verified for Z[c]; maximal-order status inconclusive";
    } else {
        w.status = CongruenceStatus::Verified;
    }
    return w;
}

}  // namespace quill
