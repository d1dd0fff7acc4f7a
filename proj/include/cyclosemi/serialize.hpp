#pragma once

// JSON encodings shared by the CLI and the Python bindings. Integers are
// always written as decimal strings so that consumers limited to 64-bit (or
// double) numbers never truncate a coefficient. Field order is fixed.

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclosemi/census.hpp"
#include "cyclosemi/cyclotomic.hpp"
#include "cyclosemi/family.hpp"
#include "cyclosemi/polynomial.hpp"
#include "cyclosemi/rootloc.hpp"
#include "cyclosemi/semigroup.hpp"

namespace cyclosemi {

using Json = nlohmann::ordered_json;

/// Constant term first, one decimal string per coefficient.
Json poly_to_json(const IntPoly& p);
/// Inverse of poly_to_json. Throws std::invalid_argument on anything other
/// than an array of decimal integer strings.
IntPoly poly_from_json(const Json& j);

Json integers_to_json(const std::vector<Element>& values);

/// {generators, minimal_generators, embedding_dimension, frobenius, genus,
///  gaps, polynomial, symmetric}
Json analysis_record(const NumericalSemigroup& s);

/// {cyclotomic, factors: [{index, multiplicity}], remainder}
Json cyclotomic_report_json(const CyclotomicReport& r);

Json roots_to_json(const std::vector<std::complex<double>>& roots);
Json certificate_to_json(const CertificateReport& r);
Json unit_circle_roots_to_json(const UnitCircleRoots& r);
Json band_report_to_json(const BandReport& r);

Json census_row_to_json(const CensusRow& row);

}  // namespace cyclosemi
