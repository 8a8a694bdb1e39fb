#include "sphsep/rational.hpp"

#include <cctype>

namespace sphsep {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text))
      throw ValidationError("bad rational literal: '" + text + "'");
    return Rational(BigInt(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    throw ValidationError("bad rational literal: '" + text + "'");
  BigInt q(den);
  if (q == 0) throw ValidationError("zero denominator in '" + text + "'");
  // Division canonicalizes (lowest terms, positive denominator).
  return Rational(BigInt(num)) / Rational(q);
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

VectorXd to_double(const VectorXr& v) {
  VectorXd out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

MatrixXd to_double(const MatrixXr& m) {
  MatrixXd out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = to_double(m(i, j));
  return out;
}

VectorXr lift_to_rational(const VectorXd& v) {
  VectorXr out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = rational_from_double(v[i]);
  return out;
}

}  // namespace sphsep
