#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "sympcalc/exchange.hpp"
#include "sympcalc/fourier.hpp"
#include "sympcalc/liealg.hpp"
#include "sympcalc/partitions.hpp"
#include "sympcalc/stabilizer.hpp"

namespace sympcalc {

// Keys are kept sorted, so dumps of equal values are byte-identical.
using Json = nlohmann::json;

// Throws ParseError.
Json parse_document(std::string_view text);
std::string dump(const Json& j, bool pretty = false);

Json to_json(const Rational& q);  // "num/den", also for integers
Rational rational_from_json(const Json& j);  // "a/b", "a" or an integer

Json to_json(const SymplecticPartition& p);
SymplecticPartition partition_from_json(const Json& j);

Json to_json(const SquareClassAssignment& a);  // values aligned with even parts
SquareClassAssignment classes_from_json(const Json& j, const SymplecticPartition& p);

// {"stages": [{"partition": [...], "square_classes": [...]}, ...]}
Json to_json(const CompositePartition& c);
CompositePartition composite_from_json(const Json& j);

// {"rows": r, "cols": c, "entries": [[...], ...]} with row-major "a/b" entries.
Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

Json to_json(const RootLabel& r);
RootLabel root_from_json(const Json& j);

Json to_json(const Cocharacter& d);

Json to_json(const DiagonalQuadraticForm& f);
DiagonalQuadraticForm form_from_json(const Json& j);

Json to_json(const IsotropyDecision& d);
Json to_json(const StabilizerShape& s);
Json to_json(const CharacterFunctional& f);

// {"C": {"roots": [...], "matrices": [...]}, "psi": {"partition": [...],
// "square_classes": [...]}, "Xt": {...}, "Yt": {...}}; "matrices" is
// optional on input and omitted on output when empty.
Json to_json(const ExchangeQuadruple& q);
ExchangeQuadruple quadruple_from_json(const Json& j);

Json to_json(const QuadrupleReport& r);

}  // namespace sympcalc
