#ifndef QTLIFT_IO_HPP
#define QTLIFT_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "qtlift/axioms.hpp"
#include "qtlift/cohochschild.hpp"
#include "qtlift/liebialg.hpp"
#include "qtlift/polynomial.hpp"

namespace qtlift {

/// Input document:
///   {"dim": d, "basis": ["h", ...], "bracket": [[i, j, k, num, den], ...], "r": [[i, j, num, den], ...]}
/// Indices are 1-based. num and den are integers or integer strings. A bracket entry
/// given in one orientation only is completed by antisymmetry. Throws InputError.
LieBialgebra parse_input(std::string_view text);
LieBialgebra parse_input_json(const nlohmann::json& doc);

/// Canonical document: bracket entries with i < j, nonzero r entries, coefficients as strings.
nlohmann::json serialize_input(const LieBialgebra& lb);

/// [{"exponents": [...], "coeff": "p/q"}, ...] in increasing monomial order.
nlohmann::json element_to_json(const TruncatedElement& f);
TruncatedElement element_from_json(const nlohmann::json& j, int dim, int legs, int cap);

nlohmann::json report_to_json(const AxiomReport& rep);
nlohmann::json report_to_json(const ValidationReport& rep);
nlohmann::json report_to_json(const CocycleResiduals& rep);

} // namespace qtlift

#endif
