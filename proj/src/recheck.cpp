// SPDX-License-Identifier: Apache-2.0
#include "sumrank/recheck.hpp"

#include <numeric>
#include <stdexcept>

#include "sumrank/conv_codes.hpp"
#include "sumrank/metrics.hpp"
#include "sumrank/superregular.hpp"

namespace sumrank {
namespace {

struct Failure {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

const Matrix& transform(const Witness& w, const char* name) {
  const Matrix* m = w.transform(name);
  require(m != nullptr, std::string("witness lacks transform ") + name);
  return *m;
}

bool over_base(const Matrix& m) { return m.field() && m.field()->degree() == 1; }

/// Zero outside the diagonal blocks; with `triangular`, each block is
/// nonsingular upper triangular.
void check_block_diag(const Matrix& m, const std::vector<std::size_t>& rsizes,
                      const std::vector<std::size_t>& csizes, bool triangular, const char* name) {
  const std::string n(name);
  require(over_base(m), n + " is not over the base field");
  const std::size_t rows = std::accumulate(rsizes.begin(), rsizes.end(), std::size_t{0});
  const std::size_t cols = std::accumulate(csizes.begin(), csizes.end(), std::size_t{0});
  require(m.rows() == rows && m.cols() == cols, n + " has the wrong shape");
  std::vector<std::size_t> rb, cb;
  for (std::size_t b = 0; b < rsizes.size(); ++b) rb.insert(rb.end(), rsizes[b], b);
  for (std::size_t b = 0; b < csizes.size(); ++b) cb.insert(cb.end(), csizes[b], b);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rb[r] != cb[c]) require(m(r, c) == 0, n + " is nonzero outside its diagonal blocks");
  if (triangular) {
    require(m.is_upper_triangular(), n + " is not upper triangular");
    for (std::size_t i = 0; i < rows; ++i) require(m(i, i) != 0, n + " is singular");
  }
}

RecheckResult vanishing_minor(const Matrix& subject, const Witness& w) {
  require(w.selection.has_value(), "witness lacks a selection");
  if (w.subject) require(*w.subject == subject, "recorded subject differs from the rebuilt matrix");
  Elem v;
  try {
    v = minor(subject, *w.selection);
  } catch (const std::out_of_range& e) {
    throw Failure{std::string("bad selection: ") + e.what()};
  }
  require(v == 0, "selected minor is nonzero");
  return {true, "selected " + std::to_string(w.selection->size()) + "x" +
                    std::to_string(w.selection->size()) + " minor is zero"};
}

const Matrix& parity_of(const RecheckInput& in) {
  if (in.code) return in.code->parity;
  require(in.matrix.has_value(), "no parity matrix given");
  return *in.matrix;
}

/// [I | P] for a code, otherwise the given matrix.
Matrix single_block_generator(const RecheckInput& in) {
  if (in.code) return hstack(Matrix::identity(in.code->parity.field(), in.code->k()), in.code->parity);
  require(in.matrix.has_value(), "no generator matrix given");
  return *in.matrix;
}

Matrix generator_of(const RecheckInput& in) {
  if (in.code) return assemble_generator(*in.code);
  require(in.matrix.has_value(), "no generator matrix given");
  return *in.matrix;
}

const PolyEncoder& encoder_of(const RecheckInput& in) {
  require(in.encoder.has_value(), "no encoder given");
  return *in.encoder;
}

RecheckResult transformed(const Witness& w, const Matrix& x, const TransformLayout& layout,
                          const BlockGrid* grid) {
  const Matrix& b = transform(w, "B");
  const Matrix& a = transform(w, "A");
  const Matrix& c = transform(w, "C");
  check_block_diag(b, layout.row_blocks, layout.row_blocks, true, "B");
  check_block_diag(a, layout.col_blocks, layout.col_blocks, true, "A");
  check_block_diag(c, layout.row_blocks, layout.col_blocks, false, "C");
  if (grid) {
    require(w.selection.has_value(), "witness lacks a selection");
    for (std::size_t i = 0; i < w.selection->size(); ++i)
      require(grid->allows(w.selection->rows[i], w.selection->cols[i]),
              "selection diagonal leaves the allowed blocks");
  }
  return vanishing_minor(b * x * a + c, w);
}

RecheckResult run(const Witness& w, const RecheckInput& in) {
  const std::string& kind = w.kind;
  if (kind == "mds" || kind == "minor") return vanishing_minor(parity_of(in), w);

  if (kind == "mrd-transforms" || kind == "msrd-transforms") {
    const bool mrd = kind == "mrd-transforms";
    const Matrix g = mrd ? single_block_generator(in) : generator_of(in);
    const Matrix& t = transform(w, mrd ? "U" : "A");
    std::vector<std::size_t> sizes{g.cols()};
    if (!mrd && in.code) sizes = in.code->partition.parts();
    if (kind == "msrd-transforms" && !in.code) {
      require(over_base(t) && t.rows() == g.cols() && t.is_upper_triangular(),
              "A is not upper triangular over the base field");
    } else {
      check_block_diag(t, sizes, sizes, true, kind == "mrd-transforms" ? "U" : "A");
    }
    require(w.selection && w.selection->size() == g.rows(), "selection is not full size");
    return vanishing_minor(g * t, w);
  }

  if (kind == "mrd-systematic" || kind == "msrd-systematic") {
    const Matrix& p = parity_of(in);
    TransformLayout layout{{p.rows()}, {p.cols()}};
    if (kind == "msrd-systematic" && in.code) layout = in.code->layout();
    return transformed(w, p, layout, nullptr);
  }

  if (kind == "mmsr") {
    const PolyEncoder& enc = encoder_of(in);
    require(enc.is_systematic(), "encoder is not systematic");
    require(w.level.has_value(), "witness lacks a level");
    const BlockGrid grid = tj_grid(enc, *w.level);
    return transformed(w, sliding_parity(enc, *w.level), tj_layout(enc, *w.level), &grid);
  }

  if (kind == "mmsr-oracle") {
    const PolyEncoder& enc = encoder_of(in);
    require(w.level.has_value(), "witness lacks a level");
    const std::size_t j = *w.level, n = enc.n(), k = enc.k();
    require(w.profile.size() == j + 1, "profile length differs from level + 1");
    std::size_t sum = 0;
    for (std::size_t t = 0; t <= j; ++t) {
      require(w.profile[t] <= n, "profile entry exceeds n");
      sum += w.profile[t];
      require(sum <= k * (t + 1), "profile prefix sum too large");
    }
    require(sum == k * (j + 1), "profile total differs from k(j+1)");
    const Matrix& astar = transform(w, "Astar");
    check_block_diag(astar, std::vector<std::size_t>(j + 1, n), w.profile, false, "Astar");
    std::size_t col = 0;
    for (std::size_t t = 0; t <= j; ++t) {
      require(rank(astar.block(t * n, col, n, w.profile[t])) == w.profile[t],
              "Astar block " + std::to_string(t) + " is not full rank");
      col += w.profile[t];
    }
    const Matrix product = sliding_generator(enc, j) * astar;
    if (w.subject) require(*w.subject == product, "recorded subject differs from the rebuilt matrix");
    require(det(product) == 0, "product is nonsingular");
    return {true, "G_j^c A* is singular"};
  }

  if (kind == "distance" || kind == "hamming-distance" || kind == "rank-distance") {
    const Matrix g = kind == "distance" ? generator_of(in) : single_block_generator(in);
    LengthPartition part = in.code ? in.code->partition : LengthPartition::single(g.cols());
    if (kind == "hamming-distance") part = LengthPartition::hamming(g.cols());
    if (kind == "rank-distance") part = LengthPartition::single(g.cols());
    require(w.message.size() == g.rows(), "message length differs from k");
    require(hamming_weight(w.message) > 0, "message is zero");
    const auto v = row_times(w.message, g);
    const std::size_t wt = sum_rank_weight(*g.field(), v, part).total;
    require(wt == w.weight, "codeword weight " + std::to_string(wt) + " differs from " +
                                std::to_string(w.weight));
    return {true, "codeword weight " + std::to_string(wt)};
  }

  if (kind == "column-distance") {
    const PolyEncoder& enc = encoder_of(in);
    require(w.level.has_value(), "witness lacks a level");
    const std::size_t j = *w.level, k = enc.k(), n = enc.n();
    require(w.message.size() == k * (j + 1), "message length differs from k(j+1)");
    bool head = false;
    for (std::size_t c = 0; c < k; ++c) head = head || w.message[c] != 0;
    require(head, "message has u_0 = 0");
    const auto v = row_times(w.message, sliding_generator(enc, j));
    const std::size_t wt =
        sum_rank_weight(*enc.field(), v, LengthPartition(std::vector<std::size_t>(j + 1, n))).total;
    require(wt == w.weight, "truncated weight " + std::to_string(wt) + " differs from " +
                                std::to_string(w.weight));
    return {true, "truncated codeword weight " + std::to_string(wt)};
  }

  throw Failure{"unknown witness kind '" + kind + "'"};
}

}  // namespace

RecheckResult recheck(const Witness& witness, const RecheckInput& input) {
  try {
    return run(witness, input);
  } catch (const Failure& f) {
    return {false, f.why};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

}  // namespace sumrank
