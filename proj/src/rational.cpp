#include "corebound/rational.hpp"

#include <cctype>

#include "corebound/error.hpp"

namespace corebound {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::InvalidRational, "not an exact rational: '" + std::string(text) + "'");
  }
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) {
    throw Error(ErrorCode::InvalidRational, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(p, q);
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& value) { return value.str(); }

std::string format_vector(const RationalVector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += format_rational(v[i]);
  }
  out += ')';
  return out;
}

RationalVector make_vector(std::initializer_list<long> coords) {
  RationalVector v(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (long c : coords) v[i++] = Rational(c);
  return v;
}

}  // namespace corebound
