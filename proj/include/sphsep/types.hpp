#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>

namespace sphsep {

// Exact scalars: arbitrary-precision rationals, always canonical (lowest
// terms, positive denominator). Float scalars are plain binary64 and are
// used for margins, normalization and rendering only.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using BigInt =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorXr = Vec<Rational>;
using MatrixXr = Mat<Rational>;
using Eigen::MatrixXd;
using Eigen::VectorXd;

/** Thrown when operands disagree on dimension. */
class DimensionMismatch : public std::invalid_argument {
 public:
  explicit DimensionMismatch(const std::string& what = "dimension mismatch")
      : std::invalid_argument(what) {}
};

/** Thrown when an input fails structural validation (bad file, zero ray, n < 2, ...). */
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace sphsep
