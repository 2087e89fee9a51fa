#pragma once

#include <gmpxx.h>

namespace boolcube {

// Exact nonnegative integer for counts and mask serial numbers.
using BigCount = mpz_class;

}  // namespace boolcube
