#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace opkit {

/// Exact rational scalar. All arithmetic in the library is over Q.
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

/// Parses "p" or "p/q"; q must be nonzero.
Rat rat_parse(const std::string& s);

using Vec = std::vector<Rat>;

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& a);

}  // namespace opkit
