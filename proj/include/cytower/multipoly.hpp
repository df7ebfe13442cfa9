#ifndef CYTOWER_MULTIPOLY_HPP
#define CYTOWER_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cytower/rational.hpp"
#include "cytower/unipoly.hpp"

namespace cytower {

using Expo = std::vector<long>;

/// Sparse multivariate polynomial over the rationals.  Terms are kept in a
/// lexicographically ordered map; zero coefficients are never stored.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(long nvars) : nvars_(nvars) {}

    long nvars() const { return nvars_; }
    const std::map<Expo, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    static MultiPoly constant(long nvars, const Rat& a) {
        MultiPoly p(nvars);
        p.add_term(Expo(static_cast<size_t>(nvars), 0), a);
        return p;
    }
    static MultiPoly monomial(long nvars, const Expo& e, const Rat& a = Rat(1)) {
        MultiPoly p(nvars);
        p.add_term(e, a);
        return p;
    }

    void add_term(const Expo& e, const Rat& a) {
        if (static_cast<long>(e.size()) != nvars_)
            throw std::invalid_argument("MultiPoly: exponent length mismatch");
        if (a == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, a);
        } else {
            it->second += a;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rat coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    bool operator==(const MultiPoly&) const = default;

    MultiPoly operator-() const {
        MultiPoly r(nvars_);
        for (const auto& [e, a] : terms_) r.terms_.emplace(e, -a);
        return r;
    }
    friend MultiPoly operator+(const MultiPoly& x, const MultiPoly& y) {
        check_vars(x, y);
        MultiPoly r = x;
        for (const auto& [e, a] : y.terms_) r.add_term(e, a);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& x, const MultiPoly& y) { return x + (-y); }
    friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
        check_vars(x, y);
        MultiPoly r(x.nvars_);
        for (const auto& [e1, a1] : x.terms_)
            for (const auto& [e2, a2] : y.terms_) {
                Expo e(e1);
                for (size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
                r.add_term(e, a1 * a2);
            }
        return r;
    }
    friend MultiPoly operator*(const Rat& s, const MultiPoly& y) {
        MultiPoly r(y.nvars_);
        if (s == 0) return r;
        for (const auto& [e, a] : y.terms_) r.terms_.emplace(e, s * a);
        return r;
    }

    long degree_in(long var) const {
        long d = -1;
        for (const auto& [e, a] : terms_) d = std::max(d, e[static_cast<size_t>(var)]);
        return d;
    }

    /// Substitute variable `var` by the polynomial `q` (same variable set).
    MultiPoly substitute(long var, const MultiPoly& q) const {
        // Horner in var: collect coefficients of var^k, then fold.
        long dmax = degree_in(var);
        if (dmax < 1) return *this;  // variable absent
        std::vector<MultiPoly> byDeg(static_cast<size_t>(dmax) + 1, MultiPoly(nvars_));
        for (const auto& [e, a] : terms_) {
            Expo r = e;
            long k = r[static_cast<size_t>(var)];
            r[static_cast<size_t>(var)] = 0;
            byDeg[static_cast<size_t>(k)].add_term(r, a);
        }
        MultiPoly acc(nvars_);
        for (size_t k = byDeg.size(); k-- > 0;) acc = acc * q + byDeg[k];
        return acc;
    }

    /// Substitute a rational value for `var`.
    MultiPoly substitute_value(long var, const Rat& c) const {
        MultiPoly r(nvars_);
        for (const auto& [e, a] : terms_) {
            Expo x = e;
            long k = x[static_cast<size_t>(var)];
            x[static_cast<size_t>(var)] = 0;
            r.add_term(x, a * rat_pow(c, k));
        }
        return r;
    }

    /// Weighted degree shared by all terms, or nullopt when not
    /// quasi-homogeneous (zero polynomial reports degree 0).
    std::optional<Int> quasi_degree(const std::vector<Int>& weights) const {
        if (static_cast<long>(weights.size()) != nvars_)
            throw std::invalid_argument("quasi_degree: weight length mismatch");
        std::optional<Int> deg;
        for (const auto& [e, a] : terms_) {
            Int d = 0;
            for (size_t k = 0; k < e.size(); ++k) d += e[k] * weights[k];
            if (!deg) deg = d;
            else if (*deg != d) return std::nullopt;
        }
        return deg ? deg : std::optional<Int>(Int(0));
    }

    /// Extract the coefficient of var^k as a polynomial in the remaining
    /// variables (exponent of `var` set to zero).
    MultiPoly coeff_of(long var, long k) const {
        MultiPoly r(nvars_);
        for (const auto& [e, a] : terms_) {
            if (e[static_cast<size_t>(var)] != k) continue;
            Expo x = e;
            x[static_cast<size_t>(var)] = 0;
            r.add_term(x, a);
        }
        return r;
    }

    /// Reinterpret with a different variable count (new variables at the
    /// end, dropped variables must be unused).
    MultiPoly resized(long nvars) const {
        MultiPoly r(nvars);
        for (const auto& [e, a] : terms_) {
            Expo x(static_cast<size_t>(nvars), 0);
            for (size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                if (static_cast<long>(k) >= nvars)
                    throw std::invalid_argument("resized: dropped variable in use");
                x[k] = e[k];
            }
            r.add_term(x, a);
        }
        return r;
    }

    /// One term per line: "num/den : e_0 e_1 ... e_k".
    std::string to_text() const {
        std::ostringstream os;
        for (const auto& [e, a] : terms_) {
            os << rat_to_string(a) << " :";
            for (long x : e) os << ' ' << x;
            os << '\n';
        }
        return os.str();
    }

    static MultiPoly from_text(const std::string& text) {
        MultiPoly p;
        bool first = true;
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            auto colon = line.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("bad term line: " + line);
            std::string cs = line.substr(0, colon);
            cs.erase(cs.find_last_not_of(" \t") + 1);
            cs.erase(0, cs.find_first_not_of(" \t"));
            Rat a = rat_from_string(cs);
            Expo e;
            std::istringstream es(line.substr(colon + 1));
            long x;
            while (es >> x) e.push_back(x);
            if (first) {
                p = MultiPoly(static_cast<long>(e.size()));
                first = false;
            }
            p.add_term(e, a);
        }
        if (first) throw std::invalid_argument("empty polynomial text");
        return p;
    }

private:
    static void check_vars(const MultiPoly& x, const MultiPoly& y) {
        if (x.nvars_ != y.nvars_)
            throw std::invalid_argument("MultiPoly: variable count mismatch");
    }
    long nvars_ = 0;
    std::map<Expo, Rat> terms_;
};

}  // namespace cytower

#endif
