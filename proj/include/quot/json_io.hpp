#pragma once

#include <json.hpp>

#include "quot/adhm.hpp"
#include "quot/enumerate.hpp"
#include "quot/framed_rep.hpp"
#include "quot/tangent.hpp"

namespace quot {

using Json = nlohmann::json;

// All entry values serialize as exact strings ("num/den" or "int" over Q,
// decimal residues over F_p); field tags serialize as "Q" or "Fp:<p>".

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Field& field, const Json& j);

/// {"rows":R,"cols":C,"field":...,"entries":[...]} row-major.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"m":...,"n":...,"r":...,"field":...,"A":[Matrix...],"V":[[...]...]}.
Json rep_to_json(const FramedRep& rep);
FramedRep rep_from_json(const Json& j);

/// {"n":...,"r":...,"field":...,"B1":Matrix,"B2":Matrix,"i":Matrix,"j":Matrix}.
Json adhm_to_json(const AdhmDatum& d);
AdhmDatum adhm_from_json(const Json& j);

Json tangent_report_to_json(const TangentReport& report);

Json count_result_to_json(const CountResult& result);

} // namespace quot
