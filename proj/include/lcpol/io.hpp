// JSON / TSV / text renderings of tables, complexes and reports.

#ifndef LCPOL_IO_HPP
#define LCPOL_IO_HPP

#include <string>

#include "json.hpp"
#include "lcpol/core.hpp"
#include "lcpol/simplicial.hpp"
#include "lcpol/takayama.hpp"
#include "lcpol/verifier.hpp"

namespace lcpol {

/// { "vars": [...], "field": "q"|"gf:p",
///   "entries": [ { "degree": [...], "i": i, "dim": d }, ... ] }
nlohmann::ordered_json table_to_json(const LCTable& table);
/// Header "degree\ti\tdim", degree written as comma-separated integers.
std::string table_to_tsv(const LCTable& table);
std::string table_to_text(const LCTable& table);

nlohmann::ordered_json ideal_to_json(const MonomialIdeal& ideal);

nlohmann::ordered_json complex_to_json(const SimplicialComplex& complex,
                               const std::vector<std::string>& vertex_names);

/// { "ideal": "...", "field": "...", "checks": [...], "pass": bool }
nlohmann::ordered_json report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace lcpol

#endif  // LCPOL_IO_HPP
