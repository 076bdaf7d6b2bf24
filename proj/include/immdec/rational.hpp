#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace immdec {

// All arithmetic is exact. mpq_class values are kept canonical (lowest
// terms, positive denominator); every constructor below canonicalizes.
using Rational = mpq_class;
using QVec = std::vector<Rational>;

// Accepts "p" or "p/q" with optional leading '-', base 10, no whitespace.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& r);

bool is_zero_vec(const QVec& v);
QVec zero_vec(int n);

std::vector<std::string> vec_to_strings(const QVec& v);
QVec vec_from_strings(const std::vector<std::string>& v);

}  // namespace immdec
