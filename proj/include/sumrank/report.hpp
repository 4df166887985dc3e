// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumrank/matrix.hpp"

namespace sumrank {

enum class Verdict { yes, no, infeasible };

const char* to_string(Verdict v);

/// Evidence for a negative verdict, complete enough to be re-checked
/// without re-running the search.
struct Witness {
  /// Check that produced it, e.g. "mrd-systematic", "mmsr", "distance".
  std::string kind;
  /// Transforms in play (B, A, C, U, ...), as full matrices.
  std::vector<std::pair<std::string, Matrix>> transforms;
  /// Matrix whose selected minor vanished.
  std::optional<Matrix> subject;
  std::optional<RowColSelection> selection;
  /// Message for distance witnesses.
  std::vector<Elem> message;
  std::uint64_t weight = 0;
  /// Time index j for convolutional witnesses.
  std::optional<std::size_t> level;
  /// Column profile (rho_0, ..., rho_j) for column-distance oracle witnesses.
  std::vector<std::size_t> profile;

  const Matrix* transform(const std::string& name) const;
};

struct VerificationReport {
  Verdict verdict = Verdict::yes;
  std::optional<Witness> witness;
  std::uint64_t checked_count = 0;
  std::chrono::nanoseconds elapsed{0};
  /// How the verdict was reached ("exact", "filter", ...).
  std::string method;
  /// Why a check was infeasible, or any disagreement worth surfacing.
  std::string note;
  std::map<std::string, std::uint64_t> counters;
  /// Per-level sub-reports for convolutional checks.
  std::vector<VerificationReport> levels;

  bool holds() const { return verdict == Verdict::yes; }
};

VerificationReport infeasible_report(std::string note);

/// Scoped elapsed-time recorder.
class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& r)
      : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() { report_.elapsed = std::chrono::steady_clock::now() - start_; }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace sumrank
