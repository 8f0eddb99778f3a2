#pragma once

#include <gmpxx.h>

#include <string>

namespace liechar {

using Integer = mpz_class;
using Rational = mpq_class;

// Always "num/den", also for integers.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

}  // namespace liechar
