// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "json.hpp"

#include "sumrank/block_codes.hpp"
#include "sumrank/encoder.hpp"
#include "sumrank/matrix.hpp"
#include "sumrank/metrics.hpp"
#include "sumrank/report.hpp"

namespace sumrank {

using Json = nlohmann::json;

/// Parse failures in user input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"field": descriptor, "rows": r, "cols": c, "data": [[...], ...]}
Json to_json(const Matrix& m);
/// `field` is used when the JSON omits one. Entries may be integer codes
/// or strings "0", "1", "a^e".
Matrix matrix_from_json(const Json& j, FieldPtr field = nullptr);

/// {"field", "partition": [n_i], "dims": [k_i], "parity": matrix}
Json to_json(const SystematicBlockCode& code);
SystematicBlockCode code_from_json(const Json& j, FieldPtr field = nullptr);

/// {"field", "n", "k", "m", "systematic", "coeffs": [matrix, ...]}
Json to_json(const PolyEncoder& enc);
PolyEncoder encoder_from_json(const Json& j, FieldPtr field = nullptr);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j, FieldPtr field = nullptr);

/// Verdict, method, counters, note, elapsed, witness and levels.
Json to_json(const VerificationReport& r);
/// Inverse of to_json(VerificationReport); elapsed time is restored too.
VerificationReport report_from_json(const Json& j, FieldPtr field = nullptr);

Json to_json(const DistanceResult& d);

}  // namespace sumrank
