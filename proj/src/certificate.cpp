#include "quill/certificate.hpp"

#include <stdexcept>

namespace quill {

namespace {

RingElement ring_div_exact(const RingElement& a, const Int& m, const char* err) {
    if (!a.is_attached()) return a;
    std::vector<Int> co;
    co.reserve(a.coords().size());
    for (const auto& v : a.coords()) {
        if (!divides(m, v)) throw std::domain_error(err);
        co.push_back(exact_div(v, m));
    }
    return RingElement(a.ring(), std::move(co));
}

RingElement det_recursive(const std::vector<std::vector<RingElement>>& m,
                          std::vector<std::size_t> cols, std::size_t row) {
    if (cols.size() == 1) return m[row][cols[0]];
    RingElement acc;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != i) rest.push_back(cols[j]);
        RingElement term = m[row][cols[i]] * det_recursive(m, std::move(rest), row + 1);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

PhiCoefficients phi_coefficients(long p, std::size_t N) {
    if (!is_prime(Int(p))) throw std::domain_error("phi_coefficients: p must be prime");
    if (N < 1) throw std::domain_error("phi_coefficients: N must be >= 1");
    PhiCoefficients out;
    out.p = p;
    out.N = N;
    Rat invp(1, p);
    invp.canonicalize();
    Int p2k(1), p2 = Int(p) * Int(p);
    for (std::size_t k = 0; k < N; ++k) {
        Rat ck = rat_binomial(invp, static_cast<unsigned long>(k));
        Rat sk = ck * Rat(p2k);
        sk.canonicalize();
        if (sk.get_den() != 1)
            throw std::logic_error("phi_coefficients: p^{2k}-scaled binomial not integral");
        out.c.push_back(ck);
        out.scaled.push_back(sk.get_num());
        p2k *= p2;
    }
    return out;
}

RingSeries poly_tail_series(const RingPoly& P, std::size_t N) {
    if (P.degree() < 0) return RingSeries(N);
    auto d = static_cast<std::size_t>(P.degree());
    RingSeries s(N);
    for (std::size_t j = 0; j < N && j <= d; ++j) s.c[j] = P.coeff(d - j);
    return s;
}

Certificate build_certificate(const UnicriticalMap& f, const RingPoly& A, long k, long l,
                              std::size_t N) {
    if (A.degree() < 1 || !is_one(A.lead()))
        throw std::domain_error("build_certificate: A must be monic of positive degree");
    if (k < 1 || k > l) throw std::domain_error("build_certificate: need 1 <= k <= l");
    RingElement zero = RingElement::from_int(f.ring(), 0);
    if (!(iterate(f, zero, static_cast<unsigned long>(k - 1)) ==
          iterate(f, zero, static_cast<unsigned long>(l - 1))))
        throw std::domain_error(
            "build_certificate: orbit precondition f^(k-1)(0) = f^(l-1)(0) fails");

    auto p = static_cast<unsigned long>(f.p);
    auto D = static_cast<std::size_t>(A.degree());
    if (N == 0) N = 2 * p * D + 8;

    Certificate cert;
    cert.f = f;
    cert.A = A;
    cert.k = k;
    cert.l = l;
    cert.N = N;
    cert.Ak = pushforward(A, f, k);
    cert.Al = pushforward(A, f, l);

    // A_k A_l^{p-1} - A_k^p = p^2 B (Lemma-level identity; inexact division
    // here would falsify the implementation, not the inputs)
    RingPoly num = cert.Ak * cert.Al.pow(p - 1) - cert.Ak.pow(p);
    Int p2 = Int(f.p) * Int(f.p);
    std::vector<RingElement> bco;
    bco.reserve(num.c.size());
    for (const auto& v : num.c)
        bco.push_back(ring_div_exact(v, p2, "build_certificate: p^2 division inexact"));
    cert.B = RingPoly(std::move(bco));
    if (cert.B.degree() > static_cast<long>(p * D) - 1)
        throw std::logic_error("build_certificate: deg B exceeds deg A_k^p - 1");

    // phi = sum_k binom(1/p,k) (p^2 B / A_k^p)^k with the p^{2k} absorbed
    // into integer outer coefficients, so everything stays in the ring
    RingSeries sAk = poly_tail_series(cert.Ak, N);
    RingSeries sAkpInv = sAk.pow(p).invert_monic_unit();
    RingSeries V(N);
    if (cert.B.degree() >= 0) {
        std::size_t shift = p * D - static_cast<std::size_t>(cert.B.degree());
        V = (poly_tail_series(cert.B, N) * sAkpInv).shifted(shift);
    }
    auto zk = phi_coefficients(f.p, N).scaled;
    std::vector<RingElement> outer;
    outer.reserve(zk.size());
    for (const auto& z : zk) outer.push_back(RingElement::from_int(f.ring(), z));
    cert.phi = V.compose_outer(outer);
    cert.integral = true;

    RingSeries rhs = (poly_tail_series(cert.Al, N) * sAk.invert_monic_unit()).pow(p - 1);
    cert.power_identity = cert.phi.pow(p).c == rhs.c;
    if (!cert.power_identity)
        throw std::logic_error("build_certificate: p-th power audit failed");
    return cert;
}

RationalityProbe hankel_rationality_probe(const RingSeries& phi, long max_type) {
    if (max_type < 0 || max_type > 6)
        throw std::domain_error("hankel_rationality_probe: supported types are 0..6");
    auto s = static_cast<std::size_t>(max_type);
    if (phi.order < 2 * s + 2) throw std::domain_error("hankel_rationality_probe: window too short");

    RationalityProbe probe;
    probe.max_type = max_type;
    // Hankel matrices on the strictly proper tail phi_1, phi_2, ...
    for (std::size_t t = 1; t + 2 * s < phi.order; ++t) {
        std::vector<std::vector<RingElement>> m(s + 1, std::vector<RingElement>(s + 1));
        for (std::size_t i = 0; i <= s; ++i)
            for (std::size_t j = 0; j <= s; ++j) m[i][j] = phi.c[t + i + j];
        std::vector<std::size_t> cols(s + 1);
        for (std::size_t i = 0; i <= s; ++i) cols[i] = i;
        if (!is_zero(det_recursive(m, cols, 0))) {
            probe.outcome = ProbeOutcome::NotRational;
            probe.witness_offset = static_cast<long>(t);
            return probe;
        }
    }
    probe.outcome = ProbeOutcome::ConsistentWithRational;
    return probe;
}

}  // namespace quill
