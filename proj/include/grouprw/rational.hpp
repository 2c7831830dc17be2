#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "grouprw/errors.hpp"

namespace grouprw {

using Rat = mpq_class;

// "num/den" (or just "num") with decimal bigint parts; the cache/file format.
inline Rat rat_from_string(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rat(mpz_class(std::string(s)), 1);
        }
        mpz_class num{std::string(s.substr(0, slash))};
        mpz_class den{std::string(s.substr(slash + 1))};
        if (den == 0) throw ValidationError("rational with zero denominator");
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ValidationError("bad rational literal: " + std::string(s));
    }
}

inline std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline double rat_to_double(const Rat& q) { return q.get_d(); }

inline Rat rat_pow_ui(const Rat& q, unsigned long e) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q.get_mpq_t()), e);
    r.canonicalize();
    return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace grouprw
