#pragma once

#include "sphsep/rational.hpp"
#include "sphsep/types.hpp"

#include <vector>

namespace sphsep {

// Exact inner product; throws on dimension mismatch.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar dot(const Eigen::MatrixBase<DerivedA>& a,
                              const Eigen::MatrixBase<DerivedB>& b) {
  if (a.size() != b.size()) throw DimensionMismatch();
  return a.dot(b);
}

template <typename Derived>
typename Derived::Scalar l1_norm(const Eigen::MatrixBase<Derived>& v) {
  using S = typename Derived::Scalar;
  S acc(0);
  for (Index i = 0; i < v.size(); ++i) acc += (v[i] < S(0)) ? S(-v[i]) : S(v[i]);
  return acc;
}

template <typename Derived>
bool is_zero_vector(const Eigen::MatrixBase<Derived>& v) {
  using S = typename Derived::Scalar;
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != S(0)) return false;
  return true;
}

inline double euclidean_norm(const VectorXr& v) { return to_double(v).norm(); }

// Unit vector in the direction of v (float mode); throws on the zero vector.
inline VectorXd normalize_unit(const VectorXd& v) {
  const double n = v.norm();
  if (n == 0.0) throw ValidationError("cannot normalize the zero vector");
  return v / n;
}

inline VectorXd normalize_unit(const VectorXr& v) {
  if (is_zero_vector(v)) throw ValidationError("cannot normalize the zero vector");
  return normalize_unit(to_double(v));
}

// Exact rank by Gaussian elimination over the rationals.
Index exact_rank(MatrixXr m);

// Rank of a list of vectors (columns); the empty list has rank 0.
Index exact_rank(const std::vector<VectorXr>& vectors);

}  // namespace sphsep
