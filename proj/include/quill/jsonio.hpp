// JSON and CSV serialization of reports.  Every emitter is deterministic:
// fixed field order, fixed digit counts, no locale or pointer dependence,
// so a fixed (input, seed, precision) yields byte-identical bytes.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "quill/capacity.hpp"
#include "quill/certificate.hpp"
#include "quill/congruence.hpp"
#include "quill/dynamics.hpp"
#include "quill/heights.hpp"

namespace quill {

using Json = nlohmann::ordered_json;

// {"lo": "...", "hi": "..."} with directed-rounded decimal endpoints
Json enclosure_json(const RealEnclosure& v, std::size_t digits = 20);
Json complex_json(const ComplexEnclosure& z, std::size_t digits = 20);

// coefficient array, lowest degree first, decimal strings
Json poly_json(const IntPoly& a);
Json ring_poly_json(const RingPoly& a);

Json orbit_report_json(const CriticalOrbitReport& rep);
Json height_report_json(const HeightReport& rep);
Json quill_check_json(const QuillCheck& qc);
Json kappa_table_json(const KappaTable& table);
Json certificate_json(const Certificate& cert, const RationalityProbe& probe);
Json congruence_witness_json(const CongruenceWitness& w);

// "preper,per,degree,factor,bound_rhs,bound_ok" rows under a header
std::string census_csv(const std::vector<CensusRow>& rows);

}  // namespace quill
