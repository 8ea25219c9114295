#include "quill/jsonio.hpp"

#include <mpfr.h>

namespace quill {

namespace {

std::string endpoint_string(mpfr_srcptr v, mpfr_rnd_t rnd, std::size_t digits) {
    char buf[256];
    std::string fmt = "%." + std::to_string(digits) + "R*g";
    mpfr_snprintf(buf, sizeof buf, fmt.c_str(), rnd, v);
    return buf;
}

std::string status_string(CongruenceStatus s) {
    switch (s) {
        case CongruenceStatus::Verified: return "Verified";
        case CongruenceStatus::Failed: return "Failed";
        default: return "InconclusiveForMaximalOrder";
    }
}

}  // namespace

Json enclosure_json(const RealEnclosure& v, std::size_t digits) {
    return Json{{"lo", endpoint_string(v.lo(), MPFR_RNDD, digits)},
                {"hi", endpoint_string(v.hi(), MPFR_RNDU, digits)}};
}

Json complex_json(const ComplexEnclosure& z, std::size_t digits) {
    return Json{{"re", enclosure_json(z.re(), digits)}, {"im", enclosure_json(z.im(), digits)}};
}

Json poly_json(const IntPoly& a) {
    Json coeffs = Json::array();
    for (const auto& c : a.c) coeffs.push_back(c.get_str());
    return coeffs;
}

Json ring_poly_json(const RingPoly& a) {
    Json coeffs = Json::array();
    for (const auto& c : a.c) coeffs.push_back(c.to_string());
    return coeffs;
}

Json orbit_report_json(const CriticalOrbitReport& rep) {
    Json out;
    switch (rep.kind) {
        case OrbitKind::Periodic: out["kind"] = "periodic"; break;
        case OrbitKind::Preperiodic: out["kind"] = "preperiodic"; break;
        default: out["kind"] = "wandering_or_undetected"; break;
    }
    out["preper"] = rep.preper;
    out["per"] = rep.per;
    out["proof"] = rep.proof;
    Json orbit = Json::array();
    for (const auto& pt : rep.orbit) orbit.push_back(pt.to_string());
    out["orbit"] = orbit;
    Json pairs = Json::array();
    for (const auto& [k, l] : rep.admissible_pairs) pairs.push_back(Json::array({k, l}));
    out["admissible_pairs"] = pairs;
    return out;
}

Json height_report_json(const HeightReport& rep) {
    Json out;
    Json lambdas = Json::array();
    for (const auto& lam : rep.lambda_arch) lambdas.push_back(enclosure_json(lam));
    out["lambda_arch"] = lambdas;
    out["nonarch_leading"] = rep.nonarch_leading.get_str();
    Json terms = Json::array();
    for (const auto& t : rep.nonarch_terms)
        terms.push_back(Json{{"prime", t.prime.get_str()}, {"exponent", t.exponent}});
    out["nonarch_terms"] = terms;
    out["nonarch_total"] = enclosure_json(rep.nonarch_total);
    out["lambda_max"] = enclosure_json(rep.lambda_max);
    out["hhat"] = enclosure_json(rep.hhat);
    out["preperiodic_exact"] = rep.preperiodic_exact;
    return out;
}

Json quill_check_json(const QuillCheck& qc) {
    Json out;
    out["satisfied"] = qc.satisfied;
    if (!qc.satisfied) out["reason"] = qc.reason;
    if (qc.satisfied) {
        out["sigma0"] = qc.sigma0;
        out["q"] = qc.q;
        out["margin"] = enclosure_json(qc.margin);
    }
    out["q_sigma"] = qc.q_sigma;
    Json logs = Json::array();
    for (const auto& v : qc.log_cf) logs.push_back(enclosure_json(v));
    out["log_cf_upper"] = logs;
    return out;
}

Json kappa_table_json(const KappaTable& table) {
    Json out;
    out["established"] = table.established;
    if (!table.reason.empty()) out["reason"] = table.reason;
    Json rows = Json::array();
    for (const auto& row : table.rows)
        rows.push_back(Json{{"D", row.D},
                            {"n_sigma", row.n_sigma},
                            {"rhs", enclosure_json(row.rhs)},
                            {"established", row.established}});
    out["rows"] = rows;
    return out;
}

Json certificate_json(const Certificate& cert, const RationalityProbe& probe) {
    Json out;
    out["p"] = cert.f.p;
    out["k"] = cert.k;
    out["l"] = cert.l;
    out["N"] = cert.N;
    out["A"] = ring_poly_json(cert.A);
    out["A_k"] = ring_poly_json(cert.Ak);
    out["A_l"] = ring_poly_json(cert.Al);
    out["B"] = ring_poly_json(cert.B);
    Json phi = Json::array();
    for (const auto& c : cert.phi.c) phi.push_back(c.to_string());
    out["phi"] = phi;
    out["integral"] = cert.integral;
    out["power_identity"] = cert.power_identity;
    out["probe"] = Json{{"outcome", probe.outcome == ProbeOutcome::NotRational
                                        ? "NotRational"
                                        : "ConsistentWithRational"},
                        {"max_type", probe.max_type},
                        {"witness_offset", probe.witness_offset}};
    return out;
}

Json congruence_witness_json(const CongruenceWitness& w) {
    Json out;
    out["statement"] = w.statement;
    out["status"] = status_string(w.status);
    out["p"] = w.p;
    out["k"] = w.k;
    out["l"] = w.l;
    out["delta"] = w.delta;
    out["ring"] = w.ring_desc;
    out["verified_for_order"] = w.verified_for_order;
    if (!w.witness.empty()) out["witness"] = w.witness;
    return out;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::string out = "preper,per,degree,factor,bound_rhs,bound_ok\n";
    for (const auto& row : rows) {
        out += std::to_string(row.preper) + "," + std::to_string(row.per) + "," +
               std::to_string(row.factor.degree()) + "," + to_string(row.factor) + "," +
               row.bound_rhs.get_str() + "," + (row.bound_ok ? "1" : "0") + "\n";
    }
    return out;
}

}  // namespace quill
