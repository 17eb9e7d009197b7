#include "mirlat/rational.hpp"

#include <cctype>
#include <limits>

#include "mirlat/error.hpp"

namespace mirlat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::ArityMismatch: return "arity mismatch";
    case ErrorKind::InvalidDescriptor: return "invalid descriptor";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::NonIntegral: return "non-integral";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Consistency: return "consistency";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+'))
    ++i;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  return std::string(s);
}

} // namespace

Rational frac(std::int64_t p, std::int64_t q) {
  if (q == 0)
    fail(ErrorKind::InvalidArgument, "zero denominator");
  Rational r{mpz_class(p), mpz_class(q)};
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
    fail(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
  mpz_class p(strip_plus(num)), q(strip_plus(den));
  if (q == 0)
    fail(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_half_integer(const Rational& q) {
  return q.get_den() == 1 || q.get_den() == 2;
}

std::int64_t to_int64(const Rational& q, std::string_view what) {
  if (!is_integer(q))
    fail(ErrorKind::NonIntegral, std::string(what) + " = " + to_string(q) + " is not an integer");
  if (!q.get_num().fits_slong_p())
    fail(ErrorKind::Overflow, std::string(what) + " does not fit in 64 bits");
  return q.get_num().get_si();
}

Rational dot(const RationalVec& a, const RationalVec& b) {
  if (a.size() != b.size())
    fail(ErrorKind::ArityMismatch, "dot: sizes " + std::to_string(a.size()) + " and " +
                                       std::to_string(b.size()));
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    fail(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

} // namespace mirlat
