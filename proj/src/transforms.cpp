// SPDX-License-Identifier: Apache-2.0
#include "sumrank/transforms.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace sumrank {

const char* to_string(CheckMode m) { return m == CheckMode::exact ? "exact" : "filter"; }

std::size_t TransformLayout::rows() const {
  return std::accumulate(row_blocks.begin(), row_blocks.end(), std::size_t{0});
}

std::size_t TransformLayout::cols() const {
  return std::accumulate(col_blocks.begin(), col_blocks.end(), std::size_t{0});
}

std::size_t TransformLayout::c_entries() const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < std::min(row_blocks.size(), col_blocks.size()); ++i)
    e += row_blocks[i] * col_blocks[i];
  return e;
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = sat_mul(r, b);
  return r;
}

struct CEntry {
  std::size_t r, c;
};

std::vector<CEntry> c_positions(const TransformLayout& layout) {
  std::vector<CEntry> out;
  std::size_t r0 = 0, c0 = 0;
  const std::size_t blocks = std::min(layout.row_blocks.size(), layout.col_blocks.size());
  for (std::size_t b = 0; b < blocks; ++b) {
    for (std::size_t r = 0; r < layout.row_blocks[b]; ++r)
      for (std::size_t c = 0; c < layout.col_blocks[b]; ++c) out.push_back({r0 + r, c0 + c});
    r0 += layout.row_blocks[b];
    c0 += layout.col_blocks[b];
  }
  return out;
}

}  // namespace

BlockUpperTriangularEnum::BlockUpperTriangularEnum(const std::vector<std::size_t>& sizes,
                                                   FieldPtr base)
    : base_(std::move(base)) {
  for (std::size_t s : sizes) {
    parts_.emplace_back(s, base_);
    count_ = sat_mul(count_, parts_.back().count());
  }
}

Matrix BlockUpperTriangularEnum::at(std::uint64_t index) const {
  std::vector<Matrix> blocks(parts_.size());
  for (std::size_t i = parts_.size(); i-- > 0;) {
    blocks[i] = parts_[i].at(index % parts_[i].count());
    index /= parts_[i].count();
  }
  return block_diag(base_, blocks);
}

Matrix c_matrix_at(const FieldPtr& base, const TransformLayout& layout, std::uint64_t index) {
  Matrix c(base, layout.rows(), layout.cols());
  const auto q = static_cast<std::uint64_t>(base->q());
  for (const auto& e : c_positions(layout)) {
    c(e.r, e.c) = static_cast<Elem>(index % q);
    index /= q;
  }
  return c;
}

std::uint64_t lowest_failure(std::uint64_t count, unsigned workers,
                             const std::function<bool(std::uint64_t)>& fn) {
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(count, 1)));
  std::atomic<std::uint64_t> low{count};
  auto run = [&](unsigned id) {
    for (std::uint64_t i = id; i < count; i += workers) {
      if (i >= low.load(std::memory_order_acquire)) break;
      if (!fn(i)) continue;
      std::uint64_t cur = low.load();
      while (i < cur && !low.compare_exchange_weak(cur, i)) {
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(run, id);
    for (auto& t : pool) t.join();
  }
  return low.load();
}

VerificationReport check_transformed(const Matrix& x, const TransformLayout& layout,
                                     const BlockGrid* grid, const CheckOptions& options,
                                     const std::string& kind) {
  VerificationReport report;
  ReportTimer timer(report);
  report.method = to_string(options.mode);
  if (layout.rows() != x.rows() || layout.cols() != x.cols())
    throw std::invalid_argument("transform layout does not match matrix shape");
  if (layout.row_blocks.size() != layout.col_blocks.size())
    throw std::invalid_argument("transform layout needs as many row blocks as column blocks");
  if (grid) grid->validate(x.rows(), x.cols());

  const FieldPtr ext = x.field();
  const FieldPtr base = ext->base_field();
  const BlockUpperTriangularEnum bs(layout.row_blocks, base);
  const BlockUpperTriangularEnum as(layout.col_blocks, base);
  const std::uint64_t tuples = sat_mul(bs.count(), as.count());
  const auto positions = c_positions(layout);
  const auto q = static_cast<std::uint64_t>(base->q());
  const std::uint64_t c_space = sat_pow(q, positions.size());

  report.counters["b_tuples"] = bs.count();
  report.counters["a_tuples"] = as.count();
  report.counters["c_space"] = c_space;

  const bool exact_mode = options.mode == CheckMode::exact;
  if (exact_mode && sat_mul(tuples, c_space) > options.budget) {
    report.verdict = Verdict::infeasible;
    report.note = "exact enumeration needs " + std::to_string(bs.count()) + " x " +
                  std::to_string(as.count()) + " tuples x " + std::to_string(c_space) +
                  " C choices, over budget " + std::to_string(options.budget);
    return report;
  }
  if (!exact_mode && tuples > options.budget) {
    report.verdict = Verdict::infeasible;
    report.note = "transform tuple count over budget " + std::to_string(options.budget);
    return report;
  }

  const SelectionList selections(x.rows(), x.cols(), grid, 1, options.selection_budget);
  if (!selections.feasible()) {
    report.verdict = Verdict::infeasible;
    report.note = "selection count over budget " + std::to_string(options.selection_budget);
    return report;
  }

  std::atomic<std::uint64_t> filter_pass{0}, filter_fail{0}, sampled{0}, exact{0},
      disagreements{0}, visited{0};
  std::atomic<bool> undecided{false};
  std::mutex witness_mu;
  std::uint64_t witness_index = kSaturated;
  Witness witness;

  auto tuple_fails = [&](std::uint64_t t) -> bool {
    visited.fetch_add(1, std::memory_order_relaxed);
    const Matrix b = bs.at(t / as.count());
    const Matrix a = as.at(t % as.count());
    const Matrix y = b * x * a;
    Matrix z = y;
    std::vector<Elem> digits(positions.size(), 0);

    auto set_c = [&] {
      for (std::size_t i = 0; i < positions.size(); ++i) {
        const auto& p = positions[i];
        z(p.r, p.c) = ext->add(y(p.r, p.c), digits[i]);
      }
    };
    auto record = [&](std::size_t sel) {
      Matrix c(base, layout.rows(), layout.cols());
      for (std::size_t i = 0; i < positions.size(); ++i)
        c(positions[i].r, positions[i].c) = digits[i];
      std::lock_guard lock(witness_mu);
      if (t >= witness_index) return;
      witness_index = t;
      witness = Witness{};
      witness.kind = kind;
      witness.transforms = {{"B", b}, {"A", a}, {"C", c}};
      witness.subject = z;
      witness.selection = selections.at(sel);
    };
    auto exhaust = [&]() -> bool {
      for (std::uint64_t ci = 0; ci < c_space; ++ci) {
        std::uint64_t v = ci;
        for (auto& d : digits) {
          d = static_cast<Elem>(v % q);
          v /= q;
        }
        set_c();
        exact.fetch_add(1, std::memory_order_relaxed);
        if (auto f = selections.find_failure(z, SelectionList::Test::nonzero)) {
          record(*f);
          return true;
        }
      }
      return false;
    };

    if (exact_mode) return exhaust();

    if (selections.find_failure(y, SelectionList::Test::outside_base_field)) {
      filter_fail.fetch_add(1, std::memory_order_relaxed);
      if (c_space > options.budget) {
        undecided.store(true);
        return false;
      }
      return exhaust();
    }
    filter_pass.fetch_add(1, std::memory_order_relaxed);
    std::mt19937_64 rng(options.seed ^ (t * 0x9E3779B97F4A7C15ULL));
    std::uniform_int_distribution<std::uint64_t> digit(0, q - 1);
    for (std::uint32_t s = 0; s < options.samples; ++s) {
      for (auto& d : digits) d = static_cast<Elem>(digit(rng));
      set_c();
      sampled.fetch_add(1, std::memory_order_relaxed);
      if (auto f = selections.find_failure(z, SelectionList::Test::nonzero)) {
        disagreements.fetch_add(1);
        record(*f);
        return true;
      }
    }
    if (c_space <= options.exact_limit && exhaust()) {
      disagreements.fetch_add(1);
      return true;
    }
    return false;
  };

  const std::uint64_t low = lowest_failure(tuples, options.workers, tuple_fails);

  report.checked_count = visited.load();
  report.counters["tuples_visited"] = visited.load();
  report.counters["exact"] = exact.load();
  if (!exact_mode) {
    report.counters["filter_pass"] = filter_pass.load();
    report.counters["filter_fail"] = filter_fail.load();
    report.counters["sampled"] = sampled.load();
    report.counters["filter_disagreements"] = disagreements.load();
    if (disagreements.load() > 0)
      report.note = "screen passed on a tuple that has a vanishing minor";
  }
  if (low < tuples) {
    report.verdict = Verdict::no;
    report.witness = std::move(witness);
  } else if (undecided.load()) {
    report.verdict = Verdict::infeasible;
    report.note = "screen failed on a tuple whose C space " + std::to_string(c_space) +
                  " is over budget " + std::to_string(options.budget);
  } else {
    report.verdict = Verdict::yes;
  }
  return report;
}

}  // namespace sumrank
