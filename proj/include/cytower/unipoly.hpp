#ifndef CYTOWER_UNIPOLY_HPP
#define CYTOWER_UNIPOLY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "cytower/rational.hpp"

namespace cytower {

/// Dense univariate polynomial over the rationals, coefficients low to high.
/// The zero polynomial has an empty coefficient vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
    static UniPoly constant(const Rat& a) { return UniPoly({a}); }
    /// x - c
    static UniPoly linear_root(const Rat& c) { return UniPoly({-c, Rat(1)}); }
    static UniPoly monomial(size_t deg, const Rat& a = Rat(1)) {
        std::vector<Rat> c(deg + 1);
        c[deg] = a;
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    const Rat& operator[](size_t k) const {
        static const Rat zero;
        return k < c_.size() ? c_[k] : zero;
    }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& lead() const {
        if (c_.empty()) throw std::domain_error("lead of zero polynomial");
        return c_.back();
    }

    bool operator==(const UniPoly&) const = default;

    UniPoly operator-() const {
        std::vector<Rat> r(c_);
        for (auto& a : r) a = -a;
        return UniPoly(std::move(r));
    }
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < r.size(); ++k) r[k] = a[k] + b[k];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const Rat& s, const UniPoly& b) {
        std::vector<Rat> r(b.c_);
        for (auto& a : r) a *= s;
        return UniPoly(std::move(r));
    }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        std::vector<Rat> rem(c_);
        long dd = d.degree();
        if (degree() < dd) return {UniPoly(), *this};
        std::vector<Rat> q(static_cast<size_t>(degree() - dd) + 1);
        for (long k = degree(); k >= dd; --k) {
            Rat f = rem[static_cast<size_t>(k)] / d.lead();
            if (f == 0) continue;
            q[static_cast<size_t>(k - dd)] = f;
            for (long j = 0; j <= dd; ++j) rem[static_cast<size_t>(k - dd + j)] -= f * d[static_cast<size_t>(j)];
        }
        return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
    }

    /// Exact division; throws if the remainder is nonzero.
    UniPoly divexact(const UniPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::domain_error("divexact: nonzero remainder");
        return q;
    }

    bool divisible_by(const UniPoly& d) const { return divmod(d).second.is_zero(); }

    Rat eval(const Rat& x) const {
        Rat r;
        for (size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
        return r;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rat> r(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = Rat(static_cast<long>(k)) * c_[k];
        return UniPoly(std::move(r));
    }

    UniPoly monic() const {
        if (is_zero()) return {};
        return Rat(1) / lead() * *this;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero() || p.degree() == 0) return p.monic();
    return p.divexact(gcd(p, p.derivative())).monic();
}

/// Largest k with place^k dividing p (p nonzero).
inline long valuation(const UniPoly& p, const UniPoly& place) {
    if (p.is_zero()) throw std::domain_error("valuation of zero polynomial");
    if (place.degree() < 1) throw std::invalid_argument("valuation: constant place");
    long v = 0;
    UniPoly q = p;
    while (true) {
        auto [quot, rem] = q.divmod(place);
        if (!rem.is_zero()) return v;
        q = std::move(quot);
        ++v;
    }
}

}  // namespace cytower

#endif
