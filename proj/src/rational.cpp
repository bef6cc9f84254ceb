#include "cliff/rational.hpp"

#include "cliff/error.hpp"

#include <cctype>

namespace cliff {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0)
    fail(ErrorCode::InvalidArgument, "zero denominator");
  value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  value_.canonicalize();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool is_integer_token(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = trim(text);
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = trim(body.substr(0, slash));
    den = trim(body.substr(slash + 1));
  }
  if (!is_integer_token(num, true) || !is_integer_token(den, false))
    throw ParseError(0, "malformed rational '" + std::string(text) + "'");

  std::string n(num);
  if (n.front() == '+')
    n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0)
    throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
  mpq_class q(zn, zd);
  return Rational(q);
}

std::string Rational::to_string() const {
  if (is_integer())
    return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::optional<Rational> Rational::exact_sqrt() const {
  if (sign() < 0)
    return std::nullopt;
  const mpz_class &n = value_.get_num();
  const mpz_class &d = value_.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn = sqrt(n);
  mpz_class rd = sqrt(d);
  return Rational(mpq_class(rn, rd));
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    fail(ErrorCode::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

const char *to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::Parse: return "ParseError";
  case ErrorCode::SignatureMismatch: return "SignatureMismatch";
  case ErrorCode::DimensionCap: return "DimensionCapExceeded";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::NotInvertible: return "NotInvertible";
  case ErrorCode::NotAVector: return "NotAVector";
  case ErrorCode::NotStable: return "NotStable";
  case ErrorCode::NotInGroup: return "NotInGroup";
  case ErrorCode::DegenerateForm: return "DegenerateForm";
  case ErrorCode::NotAnIsometry: return "NotAnIsometry";
  case ErrorCode::IsotropicVector: return "IsotropicVector";
  case ErrorCode::ZeroVector: return "ZeroVector";
  case ErrorCode::NotIdempotent: return "NotIdempotent";
  case ErrorCode::NotSimple: return "NotSimple";
  case ErrorCode::NoSolution: return "NoSolution";
  case ErrorCode::SearchFailed: return "SearchFailed";
  case ErrorCode::UnexpectedDimension: return "UnexpectedDimension";
  case ErrorCode::Internal: return "InternalError";
  }
  return "Unknown";
}

} // namespace cliff
