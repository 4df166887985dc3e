// SPDX-License-Identifier: Apache-2.0
#include "sumrank/report.hpp"

namespace sumrank {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "true";
    case Verdict::no:
      return "false";
    case Verdict::infeasible:
      return "infeasible";
  }
  return "?";
}

const Matrix* Witness::transform(const std::string& name) const {
  for (const auto& [n, m] : transforms)
    if (n == name) return &m;
  return nullptr;
}

VerificationReport infeasible_report(std::string note) {
  VerificationReport r;
  r.verdict = Verdict::infeasible;
  r.note = std::move(note);
  return r;
}

}  // namespace sumrank
