#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace mg {

// All coefficient arithmetic is exact over Q. There is no floating-point
// fallback anywhere in the library.
using Rat = mpq_class;

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
    if (!is_integer(r)) throw error("rational is not an integer: " + r.get_str());
    if (!r.get_num().fits_slong_p()) throw error("integer out of range: " + r.get_str());
    return r.get_num().get_si();
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace mg
