// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sumrank/conv_codes.hpp"
#include "sumrank/metrics.hpp"

namespace sumrank {

/// One published [n, k, m] row of binary m-MSR parameters.
struct Table1Row {
  std::size_t n, k, m;
  /// Extension degree M of the published field F_{2^M}.
  int degree;
  /// Pinned primitive polynomial, digits high to low. The construction's
  /// verdict depends on this choice; see table1_search.
  std::string poly;
  std::uint64_t published_minors;
  /// Published "#A x #B" tuple count.
  std::string published_matrices;

  std::string label() const;
  FieldParams params() const;
};

const std::vector<Table1Row>& table1_rows();
/// Row lookup by "[n,k,m]" or "nkm"; nullptr when absent.
const Table1Row* find_table1_row(const std::string& key);

struct Table1Options {
  CheckOptions check{.mode = CheckMode::filter};
  /// Column-distance oracle for j = 0..min(m, oracle_max_j).
  std::size_t oracle_max_j = 1;
  std::uint64_t oracle_budget = std::uint64_t{1} << 22;
};

struct Table1Outcome {
  Table1Row row;
  std::string field;
  VerificationReport report;
  std::uint64_t a_tuples = 0, b_tuples = 0;
  /// Grid-respecting structurally non-zero minors of P_m^c: all sizes,
  /// and size >= 2 only.
  std::uint64_t minors_all = 0, minors_size2 = 0;
  std::vector<DistanceResult> column_distances;
  /// Whether the feasible oracle distances match the verdict.
  bool oracle_agrees = true;

  std::string matrices() const;
};

Table1Outcome run_table1_row(const Table1Row& row, const FieldParams& params,
                             const Table1Options& options = {});

/// First primitive polynomial of degree row.degree, in numeric order,
/// whose construction passes check_mMSR at j = m. `progress` sees each
/// candidate's report. Stops after `limit` candidates.
std::optional<FieldParams> table1_search(
    const Table1Row& row, const CheckOptions& options, std::size_t limit = SIZE_MAX,
    const std::function<void(const FieldParams&, const VerificationReport&)>& progress = {});

}  // namespace sumrank
