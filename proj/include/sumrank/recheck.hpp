// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "sumrank/block_codes.hpp"
#include "sumrank/encoder.hpp"
#include "sumrank/matrix.hpp"
#include "sumrank/report.hpp"

namespace sumrank {

/// The object a witness was produced for. Block-code witnesses need `code`
/// or `matrix` (P for mds and systematic checks, G for transform checks);
/// convolutional witnesses need `encoder`.
struct RecheckInput {
  std::optional<Matrix> matrix;
  std::optional<SystematicBlockCode> code;
  std::optional<PolyEncoder> encoder;
};

struct RecheckResult {
  bool confirmed = false;
  std::string detail;
};

/// Rebuilds the witnessed matrix from the input and the recorded
/// transforms, validates the transforms, and re-evaluates the vanishing
/// minor (or the distance-witness weight).
RecheckResult recheck(const Witness& witness, const RecheckInput& input);

}  // namespace sumrank
