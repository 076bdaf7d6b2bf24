#include "immdec/rational.hpp"

#include <cctype>

#include "immdec/errors.hpp"

namespace immdec {

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer(text))
      throw input_error("malformed rational '" + text + "' (expected p or p/q)");
  } else {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den))
      throw input_error("malformed rational '" + text + "' (expected p or p/q)");
    if (mpz_class(den) == 0)
      throw input_error("zero denominator in rational '" + text + "'");
  }
  Rational r(text);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

bool is_zero_vec(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

QVec zero_vec(int n) { return QVec(static_cast<std::size_t>(n), Rational(0)); }

std::vector<std::string> vec_to_strings(const QVec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(rational_to_string(x));
  return out;
}

QVec vec_from_strings(const std::vector<std::string>& v) {
  QVec out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

}  // namespace immdec
