// SPDX-License-Identifier: Apache-2.0
#include "sumrank/block_codes.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sumrank/superregular.hpp"

namespace sumrank {

std::size_t SystematicBlockCode::k() const {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

void SystematicBlockCode::validate() const {
  if (dims.size() != partition.blocks())
    throw std::invalid_argument("dims has " + std::to_string(dims.size()) +
                                " entries for a partition of " +
                                std::to_string(partition.blocks()) + " blocks");
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i] > partition.parts()[i])
      throw std::invalid_argument("block " + std::to_string(i) + " has k_i > n_i");
  if (!parity.field()) throw std::invalid_argument("parity matrix has no field");
  if (parity.rows() != k() || parity.cols() != n() - k())
    throw std::invalid_argument("parity must be " + std::to_string(k()) + "x" +
                                std::to_string(n() - k()));
}

TransformLayout SystematicBlockCode::layout() const {
  TransformLayout l;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    l.row_blocks.push_back(dims[i]);
    l.col_blocks.push_back(partition.parts()[i] - dims[i]);
  }
  return l;
}

Matrix assemble_generator(const SystematicBlockCode& code) {
  code.validate();
  const std::size_t k = code.k();
  Matrix g(code.parity.field(), k, code.n());
  std::size_t row = 0, pcol = 0, col = 0;
  for (std::size_t i = 0; i < code.dims.size(); ++i) {
    const std::size_t ki = code.dims[i], ri = code.partition.parts()[i] - ki;
    for (std::size_t d = 0; d < ki; ++d) g(row + d, col + d) = 1;
    col += ki;
    g.set_block(0, col, code.parity.block(0, pcol, k, ri));
    col += ri;
    pcol += ri;
    row += ki;
  }
  return g;
}

std::optional<Matrix> systematic_parity(const Matrix& g) {
  const std::size_t k = g.rows();
  if (k == 0 || k > g.cols()) return std::nullopt;
  const Matrix s = g.block(0, 0, k, k);
  if (det(s) == 0) return std::nullopt;
  return inverse(s) * g.block(0, k, k, g.cols() - k);
}

VerificationReport check_mds(const Matrix& p, std::uint64_t selection_budget) {
  VerificationReport r = is_full_superregular(p, selection_budget);
  if (r.witness) r.witness->kind = "mds";
  return r;
}

namespace {

/// Full-size minors of G T over every T from `transforms`.
VerificationReport full_size_minors_over(const Matrix& g, const BlockUpperTriangularEnum& transforms,
                                         const CheckOptions& options, const std::string& kind,
                                         const std::string& name) {
  VerificationReport report;
  ReportTimer timer(report);
  report.method = "exact";
  report.counters["transforms"] = transforms.count();
  if (g.rows() == 0 || g.rows() > g.cols())
    throw std::invalid_argument("generator must be k x n with 0 < k <= n");
  if (transforms.count() > options.budget) {
    report.verdict = Verdict::infeasible;
    report.note = std::to_string(transforms.count()) + " transforms over budget " +
                  std::to_string(options.budget);
    return report;
  }
  const SelectionList sel(g.rows(), g.cols(), nullptr, g.rows(), options.selection_budget);
  if (!sel.feasible()) {
    report.verdict = Verdict::infeasible;
    report.note = "selection count over budget";
    return report;
  }
  std::mutex mu;
  std::uint64_t witness_index = transforms.count();
  Witness witness;
  const auto low = lowest_failure(transforms.count(), options.workers, [&](std::uint64_t i) {
    const Matrix t = transforms.at(i);
    const Matrix gt = g * t;
    const auto f = sel.find_failure(gt, SelectionList::Test::nonzero);
    if (!f) return false;
    std::lock_guard lock(mu);
    if (i < witness_index) {
      witness_index = i;
      witness = Witness{};
      witness.kind = kind;
      witness.transforms = {{name, t}};
      witness.subject = gt;
      witness.selection = sel.at(*f);
    }
    return true;
  });
  report.checked_count = low < transforms.count() ? low + 1 : transforms.count();
  if (low < transforms.count()) {
    report.verdict = Verdict::no;
    report.witness = std::move(witness);
  }
  return report;
}

}  // namespace

VerificationReport check_mrd_transforms(const Matrix& g, const CheckOptions& options) {
  const BlockUpperTriangularEnum us({g.cols()}, g.field()->base_field());
  return full_size_minors_over(g, us, options, "mrd-transforms", "U");
}

VerificationReport check_msrd_transforms(const Matrix& g, const LengthPartition& partition,
                                         const CheckOptions& options) {
  if (partition.total() != g.cols())
    throw std::invalid_argument("partition does not match code length");
  const BlockUpperTriangularEnum as(partition.parts(), g.field()->base_field());
  return full_size_minors_over(g, as, options, "msrd-transforms", "A");
}

VerificationReport check_mrd_systematic(const Matrix& p, const CheckOptions& options) {
  TransformLayout layout{{p.rows()}, {p.cols()}};
  return check_transformed(p, layout, nullptr, options, "mrd-systematic");
}

VerificationReport check_msrd_systematic(const SystematicBlockCode& code,
                                         const CheckOptions& options) {
  code.validate();
  return check_transformed(code.parity, code.layout(), nullptr, options, "msrd-systematic");
}

Matrix construct_gabidulin(std::size_t n, std::size_t k, const FieldParams& params) {
  if (static_cast<std::size_t>(params.degree) < n)
    throw std::invalid_argument("Gabidulin codes need M >= n");
  if (k == 0 || k > n) throw std::invalid_argument("Gabidulin codes need 0 < k <= n");
  const FieldPtr f = Field::make(params);
  Matrix g(f, k, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Elem point = f->pow(f->alpha(), j);
    for (std::size_t i = 0; i < k; ++i) g(i, j) = f->frobenius(point, i);
  }
  return g;
}

}  // namespace sumrank
