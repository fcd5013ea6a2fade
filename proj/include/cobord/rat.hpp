#pragma once

#include <gmpxx.h>
#include <string>

#include "cobord/error.hpp"

namespace cobord {

// Exact rational scalar. All coefficient arithmetic in the engine is exact;
// there is no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rat& r)
{
    return r.get_den() == 1;
}

inline bool rat_is_unit(const Rat& r)
{
    return r == 1 || r == -1;
}

// "num/den" in lowest terms, "num" when den == 1.
inline std::string rat_to_string(const Rat& r)
{
    if (rat_is_integer(r))
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_strings(const std::string& num, const std::string& den)
{
    if (num.empty() || den.empty())
        throw error("empty rational literal");
    Rat r{mpz_class(num), mpz_class(den)};
    require(r.get_den() != 0, "zero denominator");
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned e)
{
    Rat acc = 1, b = base;
    while (e) {
        if (e & 1u)
            acc *= b;
        e >>= 1u;
        if (e)
            b *= b;
    }
    return acc;
}

// Binomial coefficient C(x, k) for arbitrary integer x >= or < 0 and k >= 0.
inline Rat rat_binomial(long x, unsigned k)
{
    Rat acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= rat(x - static_cast<long>(i));
        acc /= rat(static_cast<long>(i) + 1);
    }
    return acc;
}

} // namespace cobord
