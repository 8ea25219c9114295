#include "quill/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace quill {

namespace {

RealEnclosure re_int(long v, mpfr_prec_t prec) { return RealEnclosure::from_int(Int(v), prec); }

Rat inv_pow(long p, long e) {
    Rat r(Int(1), pow_int(Int(p), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
}

}  // namespace

RealEnclosure dubinin_bound(const Hedgehog& h, mpfr_prec_t prec) {
    if (h.quills.empty()) return RealEnclosure(prec);  // cap {0} = 0
    RealEnclosure longest(prec);
    for (const auto& z : h.quills) {
        RealEnclosure a = z.abs();
        if (!a.strictly_positive())
            throw std::invalid_argument("dubinin_bound: quill endpoint not certified nonzero");
        longest = longest.max_with(a);
    }
    RealEnclosure log4 = re_int(4, prec).log();
    RealEnclosure q = re_int(static_cast<long>(h.quills.size()), prec);
    return (-(log4 / q)).exp() * longest;
}

namespace {

// Double-precision search state shared by both Fekete modes: midpoints of
// the pairwise log-distances.
struct FeketeSearch {
    int m = 0, n = 0;
    std::vector<double> ld;  // m x m, log |z_i - z_j|; -inf style sentinel on i
    double at(int i, int j) const { return ld[static_cast<std::size_t>(i) * m + j]; }

    double log_product(const std::vector<int>& s) const {
        double v = 0;
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b) v += at(s[a], s[b]);
        return v;
    }
};

std::vector<int> leja_subset(const FeketeSearch& fs) {
    int bi = 0, bj = 1;
    double bd = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < fs.m; ++i)
        for (int j = i + 1; j < fs.m; ++j)
            if (fs.at(i, j) > bd) { bd = fs.at(i, j); bi = i; bj = j; }
    std::vector<int> s = {bi, bj};
    std::vector<char> used(static_cast<std::size_t>(fs.m), 0);
    used[static_cast<std::size_t>(bi)] = used[static_cast<std::size_t>(bj)] = 1;
    while (static_cast<int>(s.size()) < fs.n) {
        int bk = -1;
        double bv = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < fs.m; ++k) {
            if (used[static_cast<std::size_t>(k)]) continue;
            double v = 0;
            for (int c : s) v += fs.at(k, c);
            if (v > bv) { bv = v; bk = k; }
        }
        s.push_back(bk);
        used[static_cast<std::size_t>(bk)] = 1;
    }
    std::sort(s.begin(), s.end());
    return s;
}

// One-point exchanges until no swap improves the product.
void improve_subset(const FeketeSearch& fs, std::vector<int>& s) {
    bool improved = true;
    while (improved) {
        improved = false;
        double cur = fs.log_product(s);
        for (std::size_t o = 0; o < s.size() && !improved; ++o) {
            for (int k = 0; k < fs.m && !improved; ++k) {
                if (std::find(s.begin(), s.end(), k) != s.end()) continue;
                std::vector<int> t = s;
                t[o] = k;
                if (fs.log_product(t) > cur + 1e-12) {
                    s = t;
                    std::sort(s.begin(), s.end());
                    improved = true;
                }
            }
        }
    }
}

// Exact maximization.  Candidates are taken in index order; a node choosing
// r more points from the suffix [t, m) is pruned against
//   cross(chosen, future) + (1/2) sum over future of its top (r-1)
// suffix distances, the classical max-diversity bound.
struct ExactSearch {
    const FeketeSearch& fs;
    long long budget, nodes = 0;
    int n, m;
    std::vector<double> tops;  // (i, t) -> prefix sums of top n-1 suffix distances
    std::vector<int> sel, best_set;
    double best;
    std::vector<double> w;  // scratch

    ExactSearch(const FeketeSearch& f, long long b, std::vector<int> incumbent)
        : fs(f), budget(b), n(f.n), m(f.m), sel(static_cast<std::size_t>(f.n), 0) {
        best_set = std::move(incumbent);
        best = fs.log_product(best_set);
        precompute_tops();
        recurse(0, 0, 0.0);
    }

    double top_sum(int i, int t, int k) const {
        return tops[(static_cast<std::size_t>(i) * m + t) * n + k];
    }

    void precompute_tops() {
        tops.assign(static_cast<std::size_t>(m) * m * n, 0.0);
        std::vector<double> top;  // descending, size <= n-1
        for (int i = 0; i < m; ++i) {
            top.clear();
            for (int t = m - 1; t >= 0; --t) {
                if (t != i) {
                    double v = fs.at(i, t);
                    auto pos = std::lower_bound(top.begin(), top.end(), v, std::greater<>());
                    top.insert(pos, v);
                    if (static_cast<int>(top.size()) > n - 1) top.pop_back();
                }
                double acc = 0;
                std::size_t base = (static_cast<std::size_t>(i) * m + t) * n;
                for (int k = 1; k < n; ++k) {
                    if (k - 1 < static_cast<int>(top.size())) acc += top[static_cast<std::size_t>(k - 1)];
                    tops[base + static_cast<std::size_t>(k)] = acc;
                }
            }
        }
    }

    void recurse(int depth, int t, double cur) {
        int r = n - depth;
        if (r == 0) {
            if (cur > best) {
                best = cur;
                best_set.assign(sel.begin(), sel.end());
            }
            return;
        }
        if (m - t < r) return;
        if (++nodes > budget) throw std::runtime_error("fekete_dn: exact-mode node budget exceeded");

        w.clear();
        for (int i = t; i < m; ++i) {
            double cross = 0;
            for (int d = 0; d < depth; ++d) cross += fs.at(i, sel[static_cast<std::size_t>(d)]);
            w.push_back(cross + 0.5 * top_sum(i, t, r - 1));
        }
        std::nth_element(w.begin(), w.begin() + (r - 1), w.end(), std::greater<>());
        double ub = cur;
        for (int j = 0; j < r; ++j) ub += w[static_cast<std::size_t>(j)];
        if (ub <= best + 1e-12) return;

        for (int i = t; i <= m - r; ++i) {
            double add = 0;
            for (int d = 0; d < depth; ++d) add += fs.at(i, sel[static_cast<std::size_t>(d)]);
            sel[static_cast<std::size_t>(depth)] = i;
            recurse(depth + 1, i + 1, cur + add);
        }
    }
};

}  // namespace

RealEnclosure fekete_dn(const std::vector<ComplexEnclosure>& grid, int n, FeketeMode mode,
                        mpfr_prec_t prec, long long node_budget) {
    const int m = static_cast<int>(grid.size());
    if (n < 2) throw std::invalid_argument("fekete_dn: n >= 2 required");
    if (m < n) throw std::invalid_argument("fekete_dn: grid smaller than n");
    if (mode == FeketeMode::Exact && (n > 14 || m > 256))
        throw std::invalid_argument("fekete_dn: exact budget is n <= 14 and |grid| <= 256");

    FeketeSearch fs;
    fs.m = m;
    fs.n = n;
    fs.ld.assign(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            RealEnclosure d = (grid[static_cast<std::size_t>(i)] - grid[static_cast<std::size_t>(j)]).abs();
            if (!d.strictly_positive())
                throw std::invalid_argument("fekete_dn: grid points must be pairwise distinct");
            double v = std::log(d.mid_d());
            fs.ld[static_cast<std::size_t>(i) * m + j] = v;
            fs.ld[static_cast<std::size_t>(j) * m + i] = v;
        }

    std::vector<int> incumbent = leja_subset(fs);
    std::vector<int> witness;
    if (mode == FeketeMode::Greedy) {
        witness = incumbent;
    } else {
        improve_subset(fs, incumbent);
        ExactSearch search(fs, node_budget, incumbent);
        witness = search.best_set;
    }

    // certified value of the witness subset: (prod |z_i - z_j|)^{2/(n(n-1))}
    RealEnclosure log_prod(prec);
    for (std::size_t a = 0; a < witness.size(); ++a)
        for (std::size_t b = a + 1; b < witness.size(); ++b) {
            RealEnclosure d = (grid[static_cast<std::size_t>(witness[a])] -
                               grid[static_cast<std::size_t>(witness[b])])
                                  .abs();
            log_prod = log_prod + d.log();
        }
    long pairs = static_cast<long>(n) * (n - 1) / 2;
    return (log_prod / re_int(pairs, prec)).exp();
}

QuillCheck quill_hypothesis_check(const UnicriticalMap& f, long orbit_budget, mpfr_prec_t prec) {
    QuillCheck out;
    out.margin = RealEnclosure(prec);

    CriticalOrbitReport rep = classify_critical_orbit(f, orbit_budget);
    if (rep.kind == OrbitKind::WanderingOrUndetected) {
        out.reason = rep.proof == "escaped" ? "post-critical orbit unbounded"
                                            : "critical orbit classification exhausted its budget";
        return out;
    }

    TruncatedPCO pco = truncated_pco(f, rep.preper + rep.per);
    std::vector<RingElement> nonzero;
    for (const auto& pt : pco.points)
        if (!is_zero(pt)) nonzero.push_back(pt);

    RealEnclosure log4 = re_int(4, prec).log();
    auto gens = embeddings(*f.ring(), prec);
    bool have_witness = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        long q = static_cast<long>(nonzero.size());
        if (gens[i].is_real) {
            // one quill per certified sign of the real post-critical points
            bool pos = false, neg = false, undecided = false;
            for (const auto& pt : nonzero) {
                RealEnclosure re = embed(pt, gens[i].box).re();
                if (re.strictly_positive())
                    pos = true;
                else if (re.strictly_negative())
                    neg = true;
                else
                    undecided = true;
            }
            if (!undecided) q = (pos ? 1 : 0) + (neg ? 1 : 0);
        }
        CfBound cf = cf_upper_bound(f, embed(f.c, gens[i].box), true);
        RealEnclosure log_cf = cf.upper.log();
        RealEnclosure margin = log4 - re_int(q, prec) * log_cf;
        out.q_sigma.push_back(q);
        out.log_cf.push_back(log_cf);
        if (margin.strictly_positive() &&
            (!have_witness || mpfr_cmp(margin.lo(), out.margin.lo()) > 0)) {
            have_witness = true;
            out.satisfied = true;
            out.sigma0 = i;
            out.q = q;
            out.margin = margin;
        }
    }
    if (!out.satisfied) out.reason = "no embedding certifies q log C(f) < log 4";
    return out;
}

namespace {

// One summand p^{-(l+n)} (log 4/(q + 2 D p^{-n}) - log C) of the pre-final
// bound, outward rounded.
RealEnclosure prefinal_term(long p, long l, long D, long q, long n, const RealEnclosure& log_cf,
                            mpfr_prec_t prec) {
    RealEnclosure log4 = re_int(4, prec).log();
    RealEnclosure denom =
        re_int(q, prec) + re_int(2 * D, prec) * RealEnclosure::from_rat(inv_pow(p, n), prec);
    RealEnclosure scale = RealEnclosure::from_rat(inv_pow(p, l + n), prec);
    return scale * (log4 / denom - log_cf);
}

}  // namespace

RealEnclosure prefinal_rhs(const BoundParameters& params) {
    const std::size_t g = params.q_sigma.size();
    if (g == 0 || params.n_sigma.size() != g || params.log_cf.size() != g)
        throw std::invalid_argument("prefinal_rhs: per-embedding vectors must have equal size");
    if (params.p < 2 || params.D < 1 || params.k < 1 || params.l <= params.k)
        throw std::invalid_argument("prefinal_rhs: need p >= 2, D >= 1, 1 <= k < l");
    RealEnclosure total(params.prec);
    for (std::size_t i = 0; i < g; ++i) {
        if (params.n_sigma[i] < 1 || params.q_sigma[i] < 0)
            throw std::invalid_argument("prefinal_rhs: need n_sigma >= 1 and q_sigma >= 0");
        total = total + prefinal_term(params.p, params.l, params.D, params.q_sigma[i],
                                      params.n_sigma[i], params.log_cf[i], params.prec);
    }
    return total / re_int(static_cast<long>(g), params.prec);
}

KappaTable effective_kappa(const UnicriticalMap& f, long k, long l, long d_max,
                           mpfr_prec_t prec) {
    if (k < 1 || l <= k) throw std::invalid_argument("effective_kappa: need 1 <= k < l");
    KappaTable table;
    QuillCheck qc = quill_hypothesis_check(f, 64, prec);
    if (!qc.satisfied) {
        table.reason = qc.reason;
        return table;
    }

    const long p = f.p;
    const std::size_t g = qc.q_sigma.size();
    const long q0 = qc.q_sigma[qc.sigma0];
    bool all_rows = true;
    for (long D = 1; D <= d_max; ++D) {
        KappaRow row;
        row.D = D;

        // witnessing embedding: the paper preset p^n >= 3D, raised only while
        // its term fails to certify positive
        long n0 = 1;
        while (pow_int(Int(p), static_cast<unsigned long>(n0)) < Int(3 * D)) ++n0;
        for (; n0 < 200; ++n0) {
            RealEnclosure core =
                re_int(4, prec).log() /
                    (re_int(q0, prec) +
                     re_int(2 * D, prec) * RealEnclosure::from_rat(inv_pow(p, n0), prec)) -
                qc.log_cf[qc.sigma0];
            if (core.strictly_positive()) break;
        }
        row.n_sigma = n0;

        // remaining embeddings drift outward until the total is certified
        for (long extra = 0; extra <= 64 && !row.established; ++extra) {
            RealEnclosure total(prec);
            for (std::size_t i = 0; i < g; ++i) {
                long n = (i == qc.sigma0) ? n0 : n0 + extra;
                total = total +
                        prefinal_term(p, l, D, qc.q_sigma[i], n, qc.log_cf[i], prec);
            }
            row.rhs = total / re_int(static_cast<long>(g), prec);
            row.established = row.rhs.strictly_positive();
        }
        all_rows = all_rows && row.established;
        table.rows.push_back(row);
    }
    table.established = all_rows && !table.rows.empty();
    return table;
}

std::string kappa_table_csv(const KappaTable& table) {
    std::string out = "D,n_sigma,rhs_lo,rhs_hi,established\n";
    char buf[128];
    for (const auto& row : table.rows) {
        std::snprintf(buf, sizeof(buf), "%ld,%ld,%.17g,%.17g,%d\n", row.D, row.n_sigma,
                      row.rhs.lo_d(), row.rhs.hi_d(), row.established ? 1 : 0);
        out += buf;
    }
    return out;
}

RealEnclosure wandering_lower_constant(mpfr_prec_t prec) {
    RealEnclosure log4 = re_int(4, prec).log();
    RealEnclosure eleven_tenths = RealEnclosure::from_rat(Rat(11, 10), prec);
    RealEnclosure sqrt5p1 = re_int(5, prec).sqrt() + re_int(1, prec);
    return (log4 * eleven_tenths - sqrt5p1.log()) / re_int(48, prec);
}

}  // namespace quill
