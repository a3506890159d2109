#pragma once

#include <string>

#include "hecke/algebra.hpp"
#include "hecke/cyclo.hpp"
#include "hecke/laurent.hpp"
#include "hecke/matrix.hpp"
#include "hecke/specht.hpp"
#include "hecke/unitarity.hpp"
#include "json.hpp"

namespace hecke {

using Json = nlohmann::ordered_json;

/// Version tag written into every top-level document.
inline constexpr int kSchemaVersion = 1;

/// {"<exp>": "<coeff>", ...} with decimal strings, ascending exponents.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// {"m": conductor, "coords": ["a/b", ...]} in the power basis.
Json to_json(const CycloNum& x);
CycloNum cyclo_from_json(const Json& j);

Json to_json(const Matrix<LaurentPoly>& m);
Json to_json(const Matrix<CycloNum>& m);
Matrix<LaurentPoly> laurent_matrix_from_json(const Json& j);
Matrix<CycloNum> cyclo_matrix_from_json(const Json& j);

template <class R>
Json to_json(const HeckeAlgebra<R>& alg, const HeckeElement<R>& x);

Json to_json(const SpechtData& sd, bool with_action = false);
Json to_json(const HermitianGram& hg);
Json to_json(const JantzenReport& rep);
Json to_json(const Signature& s);
Json to_json(const UnitarityVerdict& v);
Json to_json(const LocusDescription& l);
Json to_json(const ScanReport& rep);
Json to_json(const TheoremSummary& sum);

/// One row per tested point: lambda,c,status,n_plus,n_minus,n_zero,predicted,computed.
std::string scan_csv_header();
std::string to_csv_rows(const ScanReport& rep);

}  // namespace hecke
