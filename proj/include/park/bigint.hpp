#pragma once

#include <gmpxx.h>

namespace park {

// Exact counts can exceed 64 bits quickly ((n+1)^(n-1), Catalan numbers),
// so all counting formulas are evaluated in arbitrary precision.
using bigint = mpz_class;

inline bigint binomial(unsigned long n, unsigned long k) {
    bigint r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline bigint ipow(unsigned long base, unsigned long exp) {
    bigint r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

} // namespace park
