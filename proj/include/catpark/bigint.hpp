#pragma once

#include <gmpxx.h>

#include <string>

namespace catpark {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace catpark
