#ifndef CYTOWER_RATIONAL_HPP
#define CYTOWER_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace cytower {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
        return 1 / rat_pow(base, -e);
    }
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

/// Exact k-th root of an integer, if one exists.
inline bool int_root(const Int& a, unsigned long k, Int& out) {
    if (k == 0) throw std::invalid_argument("int_root: k = 0");
    if (a < 0 && k % 2 == 0) return false;
    Int r;
    int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
    if (!exact) return false;
    out = r;
    return true;
}

/// Exact k-th root of a rational, if one exists.
inline bool rat_root(const Rat& a, unsigned long k, Rat& out) {
    Int num, den;
    if (!int_root(a.get_num(), k, num)) return false;
    if (!int_root(a.get_den(), k, den)) return false;
    out = Rat(num, den);
    out.canonicalize();
    return true;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Fractional part {a} in [0, 1).
inline Rat frac_part(const Rat& a) {
    Int f = floor_div(a.get_num(), a.get_den());
    return a - Rat(f);
}

/// Serialize as "num" or "num/den"; the format used in all JSON output.
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline std::string join_tuple(const std::vector<long>& t, char sep = ',') {
    std::string s;
    for (size_t k = 0; k < t.size(); ++k) {
        if (k) s += sep;
        s += std::to_string(t[k]);
    }
    return s;
}

inline std::vector<long> parse_tuple(const std::string& s, char sep = ',') {
    std::vector<long> t;
    if (s.empty()) return t;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(sep, pos);
        if (next == std::string::npos) next = s.size();
        t.push_back(std::stol(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return t;
}

}  // namespace cytower

#endif
