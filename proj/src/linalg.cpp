#include "sphsep/linalg.hpp"

namespace sphsep {

Index exact_rank(MatrixXr m) {
  const Index rows = m.rows(), cols = m.cols();
  Index rank = 0;
  Index pivot_row = 0;
  for (Index col = 0; col < cols && pivot_row < rows; ++col) {
    Index sel = -1;
    for (Index r = pivot_row; r < rows; ++r) {
      if (m(r, col) != 0) { sel = r; break; }
    }
    if (sel < 0) continue;
    m.row(sel).swap(m.row(pivot_row));
    for (Index r = pivot_row + 1; r < rows; ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(pivot_row, col);
      for (Index c = col; c < cols; ++c) m(r, c) -= factor * m(pivot_row, c);
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

Index exact_rank(const std::vector<VectorXr>& vectors) {
  if (vectors.empty()) return 0;
  const Index n = vectors.front().size();
  MatrixXr m(n, static_cast<Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != n) throw DimensionMismatch();
    m.col(static_cast<Index>(j)) = vectors[j];
  }
  return exact_rank(std::move(m));
}

}  // namespace sphsep
