// SPDX-License-Identifier: Apache-2.0
#include "sumrank/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

namespace sumrank {

LengthPartition::LengthPartition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition needs at least one part");
  for (std::size_t p : parts_) {
    if (p == 0) throw std::invalid_argument("partition parts must be positive");
    total_ += p;
  }
}

LengthPartition LengthPartition::single(std::size_t n) { return LengthPartition({n}); }

LengthPartition LengthPartition::hamming(std::size_t n) {
  return LengthPartition(std::vector<std::size_t>(n, 1));
}

bool LengthPartition::equal_parts() const {
  return std::all_of(parts_.begin(), parts_.end(), [&](std::size_t p) { return p == parts_[0]; });
}

Matrix expand(const FieldPtr& field, std::span<const Elem> v) {
  const auto degree = static_cast<std::size_t>(field->degree());
  Matrix out(field->base_field(), degree, v.size());
  for (std::size_t c = 0; c < v.size(); ++c) {
    const auto d = field->digits(v[c]);
    for (std::size_t r = 0; r < degree; ++r) out(r, c) = static_cast<Elem>(d[r]);
  }
  return out;
}

namespace {

std::size_t binary_rank(std::span<const Elem> v) {
  Elem basis[32] = {};
  std::size_t r = 0;
  for (Elem x : v) {
    for (int b = 31; b >= 0 && x != 0; --b) {
      if (((x >> b) & 1U) == 0) continue;
      if (basis[b] == 0) {
        basis[b] = x;
        ++r;
        break;
      }
      x ^= basis[b];
    }
  }
  return r;
}

std::size_t digit_rank(const Field& field, std::span<const Elem> v) {
  const int q = field.q();
  const auto rows = static_cast<std::size_t>(field.degree());
  const std::size_t cols = v.size();
  std::vector<int> a(rows * cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const auto d = field.digits(v[c]);
    for (std::size_t r = 0; r < rows; ++r) a[r * cols + c] = d[r];
  }
  auto inv_mod = [q](int x) {
    int r = 1;
    for (int e = q - 2, b = x; e > 0; e >>= 1, b = b * b % q)
      if (e & 1) r = r * b % q;
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != rank)
      for (std::size_t x = 0; x < cols; ++x) std::swap(a[p * cols + x], a[rank * cols + x]);
    const int iv = inv_mod(a[rank * cols + c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const int f = a[r * cols + c] * iv % q;
      if (f == 0) continue;
      for (std::size_t x = c; x < cols; ++x)
        a[r * cols + x] = ((a[r * cols + x] - f * a[rank * cols + x]) % q + q) % q;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t base_rank(const Field& field, std::span<const Elem> v) {
  if (field.q() == 2) return binary_rank(v);
  return digit_rank(field, v);
}

std::size_t hamming_weight(std::span<const Elem> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

SumRankProfile sum_rank_weight(const Field& field, std::span<const Elem> v,
                               const LengthPartition& partition) {
  if (partition.total() != v.size())
    throw std::invalid_argument("partition length " + std::to_string(partition.total()) +
                                " does not match vector length " + std::to_string(v.size()));
  SumRankProfile p;
  std::size_t off = 0;
  for (std::size_t part : partition.parts()) {
    const std::size_t r = base_rank(field, v.subspan(off, part));
    p.per_block_ranks.push_back(r);
    p.total += r;
    off += part;
  }
  return p;
}

std::size_t sum_rank_distance(const Field& field, std::span<const Elem> u,
                              std::span<const Elem> w, const LengthPartition& partition) {
  if (u.size() != w.size()) throw std::invalid_argument("length mismatch");
  std::vector<Elem> d(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) d[i] = field.sub(u[i], w[i]);
  return sum_rank_weight(field, d, partition).total;
}

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t checked_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > kSaturated / base) return kSaturated;
    r *= base;
  }
  return r;
}

/// Normalized nonzero vectors of F^k: the first nonzero coordinate is 1.
/// Indexed by lead position, then the remaining coordinates in base Q.
struct NormalizedVectors {
  std::size_t k;
  std::uint64_t order;
  std::vector<std::uint64_t> block;  // block[p] = order^(k-1-p)
  std::uint64_t count = 0;

  NormalizedVectors(std::size_t k_, std::uint64_t order_) : k(k_), order(order_) {
    for (std::size_t p = 0; p < k; ++p) {
      const std::uint64_t b = checked_pow(order, k - 1 - p);
      block.push_back(b);
      count = (b == kSaturated || count > kSaturated - b) ? kSaturated : count + b;
    }
  }

  void at(std::uint64_t index, std::vector<Elem>& u) const {
    std::fill(u.begin(), u.end(), 0);
    std::size_t p = 0;
    while (index >= block[p]) index -= block[p++];
    u[p] = 1;
    for (std::size_t c = k; c-- > p + 1;) {
      u[c] = static_cast<Elem>(index % order);
      index /= order;
    }
  }
};

unsigned worker_count(unsigned workers, std::uint64_t tasks) {
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(tasks, 1)));
}

}  // namespace

DistanceResult min_sum_rank_distance(const Matrix& generator, const LengthPartition& partition,
                                     std::uint64_t budget, unsigned workers) {
  const Field& f = *generator.field();
  const std::size_t k = generator.rows();
  DistanceResult res;
  if (partition.total() != generator.cols())
    throw std::invalid_argument("partition does not match code length");
  if (k == 0) throw std::invalid_argument("generator has no rows");
  const NormalizedVectors msgs(k, f.order());
  if (msgs.count > budget) {
    res.feasible = false;
    res.note = "normalized message count exceeds budget " + std::to_string(budget);
    return res;
  }

  const unsigned w = worker_count(workers, msgs.count);
  struct Best {
    std::size_t weight = std::numeric_limits<std::size_t>::max();
    std::vector<Elem> message;
  };
  std::vector<Best> best(w);
  auto run = [&](unsigned id) {
    const std::uint64_t lo = msgs.count * id / w, hi = msgs.count * (id + 1) / w;
    std::vector<Elem> u(k);
    for (std::uint64_t i = lo; i < hi; ++i) {
      msgs.at(i, u);
      const auto v = row_times(u, generator);
      const std::size_t wt = sum_rank_weight(f, v, partition).total;
      if (wt < best[id].weight) best[id] = {wt, u};
    }
  };
  if (w == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < w; ++id) pool.emplace_back(run, id);
    for (auto& t : pool) t.join();
  }
  const Best* pick = &best[0];
  for (const auto& b : best)
    if (b.weight < pick->weight) pick = &b;
  res.distance = pick->weight;
  res.message = pick->message;
  res.enumerated = msgs.count;
  return res;
}

DistanceResult column_sum_rank_distance(const PolyEncoder& encoder, std::size_t j,
                                        std::uint64_t budget, unsigned workers) {
  const Field& f = *encoder.field();
  const std::size_t n = encoder.n(), k = encoder.k();
  std::vector<Matrix> g;
  for (std::size_t t = 0; t <= j; ++t) g.push_back(encoder.coefficient(t));

  DistanceResult res;
  const NormalizedVectors heads(k, f.order());
  if (heads.count > budget) {
    res.feasible = false;
    res.note = "normalized first-block count exceeds budget " + std::to_string(budget);
    return res;
  }

  // Weight of the truncated codeword of u = (e_1, 0, ..., 0) seeds the search.
  std::vector<Elem> seed_msg((j + 1) * k, 0);
  seed_msg[0] = 1;
  std::size_t seed_weight = 0;
  for (std::size_t t = 0; t <= j; ++t) seed_weight += base_rank(f, g[t].row(0));

  std::atomic<std::uint64_t> evaluated{0};
  std::atomic<bool> aborted{false};

  struct Search {
    std::size_t weight;
    std::vector<Elem> message;
  };

  const unsigned w = worker_count(workers, heads.count);
  std::vector<Search> found(w, Search{seed_weight, seed_msg});

  auto run = [&](unsigned id) {
    Search& best = found[id];
    std::vector<Elem> u((j + 1) * k, 0);
    std::vector<std::vector<Elem>> partial(k + 1, std::vector<Elem>(n));
    std::vector<Elem> head(k);

    // Adds u_t * G_0 coordinate by coordinate; calls leaf(v_t) per choice.
    std::function<void(std::size_t, std::size_t, std::size_t)> descend;

    auto evaluate = [&](std::size_t t, std::size_t running, const std::vector<Elem>& v) {
      if (evaluated.fetch_add(1, std::memory_order_relaxed) >= budget) {
        aborted.store(true, std::memory_order_relaxed);
        return;
      }
      const std::size_t total = running + base_rank(f, v);
      if (total >= best.weight) return;
      if (t == j) {
        best.weight = total;
        best.message = u;
        return;
      }
      descend(t + 1, total, 0);
    };

    // Enumerates every u_t in F^k (t >= 1) on top of s_t = sum_{i>=1} u_{t-i} G_i.
    std::vector<std::vector<std::vector<Elem>>> levels(j + 1, partial);
    descend = [&](std::size_t t, std::size_t running, std::size_t) {
      if (aborted.load(std::memory_order_relaxed)) return;
      auto& acc = levels[t];
      std::fill(acc[0].begin(), acc[0].end(), 0);
      for (std::size_t i = 1; i <= t; ++i)
        for (std::size_t c = 0; c < k; ++c) {
          const Elem x = u[(t - i) * k + c];
          if (x == 0) continue;
          const auto grow = g[i].row(c);
          for (std::size_t col = 0; col < n; ++col)
            acc[0][col] = f.add(acc[0][col], f.mul(x, grow[col]));
        }
      std::function<void(std::size_t)> coord = [&](std::size_t c) {
        if (aborted.load(std::memory_order_relaxed)) return;
        if (c == k) {
          evaluate(t, running, acc[k]);
          return;
        }
        const auto grow = g[0].row(c);
        for (Elem x = 0; x < f.order(); ++x) {
          u[t * k + c] = x;
          for (std::size_t col = 0; col < n; ++col)
            acc[c + 1][col] = f.add(acc[c][col], f.mul(x, grow[col]));
          coord(c + 1);
          if (aborted.load(std::memory_order_relaxed)) break;
        }
        u[t * k + c] = 0;
      };
      coord(0);
    };

    const std::uint64_t lo = heads.count * id / w, hi = heads.count * (id + 1) / w;
    for (std::uint64_t i = lo; i < hi && !aborted.load(std::memory_order_relaxed); ++i) {
      heads.at(i, head);
      std::fill(u.begin(), u.end(), 0);
      std::copy(head.begin(), head.end(), u.begin());
      std::vector<Elem> v0 = row_times(head, g[0]);
      evaluate(0, 0, v0);
    }
  };

  if (w == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < w; ++id) pool.emplace_back(run, id);
    for (auto& t : pool) t.join();
  }

  res.enumerated = std::min<std::uint64_t>(evaluated.load(), budget);
  if (aborted.load()) {
    res.feasible = false;
    res.note = "column distance search exceeded budget " + std::to_string(budget);
    return res;
  }
  const Search* pick = &found[0];
  for (const auto& s : found)
    if (s.weight < pick->weight) pick = &s;
  res.distance = pick->weight;
  res.message = pick->message;
  return res;
}

SingletonBounds singleton_bounds(std::size_t n, std::size_t k, std::size_t degree,
                                 const LengthPartition& partition) {
  if (k > n) throw std::invalid_argument("k exceeds n");
  SingletonBounds b;
  const double redundancy = static_cast<double>(n - k);
  b.refined_rank = std::min(1.0, static_cast<double>(degree) / static_cast<double>(n)) * redundancy + 1;
  if (partition.equal_parts()) b.refined_sum_rank = refined_sum_rank_bound(n, k, degree, partition);
  b.classical = n - k + 1;
  return b;
}

double refined_sum_rank_bound(std::size_t n, std::size_t k, std::size_t degree,
                              const LengthPartition& partition) {
  if (!partition.equal_parts()) throw std::invalid_argument("refined bound needs equal parts");
  if (k > n) throw std::invalid_argument("k exceeds n");
  const double ratio =
      static_cast<double>(partition.blocks() * degree) / static_cast<double>(n);
  return std::min(1.0, ratio) * static_cast<double>(n - k) + 1;
}

std::size_t column_distance_bound(std::size_t n, std::size_t k, std::size_t j) {
  return (j + 1) * (n - k) + 1;
}

std::size_t free_distance_bound(std::size_t n, std::size_t k, std::size_t m) {
  return (n - k) * (m + 1) + 1;
}

}  // namespace sumrank
