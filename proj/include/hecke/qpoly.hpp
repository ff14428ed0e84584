#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

// Overflow is an error, never a silent wraparound.
inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("qpoly: coefficient overflow");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("qpoly: coefficient overflow");
    return r;
}

// Laurent polynomial in v with integer coefficients, stored densely between
// its lowest and highest nonzero exponent.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int64_t c) { // NOLINT: constants convert implicitly
        if (c != 0) c_.push_back(c);
    }

    static LaurentPoly monomial(int64_t coef, int exp) {
        LaurentPoly p;
        if (coef != 0) {
            p.lo_ = exp;
            p.c_.push_back(coef);
        }
        return p;
    }
    static LaurentPoly v(int exp = 1) { return monomial(1, exp); }

    bool is_zero() const { return c_.empty(); }
    int min_deg() const { return lo_; }
    int max_deg() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    int64_t coeff(int exp) const {
        if (c_.empty() || exp < lo_ || exp > max_deg()) return 0;
        return c_[exp - lo_];
    }

    // Visit (exponent, coefficient) pairs with nonzero coefficient.
    template <class F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) f(lo_ + static_cast<int>(k), c_[k]);
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return axpy(1, 0, o); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return axpy(-1, 0, o); }

    // this += coef * v^shift * o
    LaurentPoly& axpy(int64_t coef, int shift, const LaurentPoly& o) {
        if (o.is_zero() || coef == 0) return *this;
        int olo = o.lo_ + shift;
        int ohi = o.max_deg() + shift;
        if (is_zero()) {
            lo_ = olo;
            c_.assign(o.c_.size(), 0);
        } else {
            int nlo = std::min(lo_, olo), nhi = std::max(max_deg(), ohi);
            if (nlo < lo_ || nhi > max_deg()) {
                std::vector<int64_t> n(nhi - nlo + 1, 0);
                for (size_t k = 0; k < c_.size(); ++k) n[lo_ - nlo + k] = c_[k];
                c_.swap(n);
                lo_ = nlo;
            }
        }
        for (size_t k = 0; k < o.c_.size(); ++k) {
            auto& slot = c_[olo - lo_ + k];
            slot = checked_add(slot, checked_mul(coef, o.c_[k]));
        }
        trim();
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.lo_ = a.lo_ + b.lo_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = checked_add(r.c_[i + j], checked_mul(a.c_[i], b.c_[j]));
        }
        r.trim();
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.lo_ == b.lo_ && a.c_ == b.c_;
    }

    // v -> v^-1
    LaurentPoly bar() const {
        LaurentPoly r;
        if (is_zero()) return r;
        r.lo_ = -max_deg();
        r.c_.assign(c_.rbegin(), c_.rend());
        return r;
    }

    int64_t eval_one() const {
        int64_t s = 0;
        for (auto x : c_) s = checked_add(s, x);
        return s;
    }

    bool nonnegative() const {
        for (auto x : c_)
            if (x < 0) return false;
        return true;
    }

    // all exponents >= 1 and all coefficients >= 0
    bool in_vN() const { return is_zero() || (lo_ >= 1 && nonnegative()); }

    // c_0 + sum_{k>0} c_{-k} (v^k + v^-k)
    LaurentPoly symmetric_part_at_or_below_zero() const {
        LaurentPoly r(coeff(0));
        for (int k = 1; k <= -lo_; ++k) {
            int64_t c = coeff(-k);
            if (c == 0) continue;
            r += monomial(c, k);
            r += monomial(c, -k);
        }
        return r;
    }

    bool is_monomial(int64_t coef, int exp) const {
        return c_.size() == 1 && lo_ == exp && c_[0] == coef;
    }

    // Exact division; throws if the remainder is nonzero.
    LaurentPoly divexact(const LaurentPoly& d) const {
        if (d.is_zero()) throw std::domain_error("qpoly: division by zero");
        if (is_zero()) return {};
        LaurentPoly rem = *this, q;
        int64_t lead = d.c_.back();
        while (!rem.is_zero()) {
            int shift = rem.max_deg() - d.max_deg();
            int64_t top = rem.c_.back();
            if (shift < rem.lo_ - d.lo_ || top % lead != 0)
                throw std::domain_error("qpoly: inexact division");
            int64_t t = top / lead;
            q += monomial(t, shift);
            rem.axpy(-t, shift, d);
        }
        return q;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t k = 0; k < c_.size(); ++k) {
            int64_t c = c_[k];
            if (c == 0) continue;
            int e = lo_ + static_cast<int>(k);
            if (c < 0)
                s += '-';
            else if (!s.empty())
                s += '+';
            int64_t a = c < 0 ? -c : c;
            if (e == 0) {
                s += std::to_string(a);
                continue;
            }
            if (a != 1) s += std::to_string(a);
            s += 'v';
            if (e != 1) s += '^' + std::to_string(e);
        }
        return s;
    }

    static LaurentPoly parse(std::string_view text) {
        std::string t;
        for (char ch : text)
            if (ch != ' ' && ch != '*') t += ch;
        if (t.empty()) throw std::invalid_argument("qpoly: empty polynomial text");
        LaurentPoly r;
        size_t i = 0;
        auto digits = [&](size_t& j) {
            size_t st = j;
            while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
            return t.substr(st, j - st);
        };
        while (i < t.size()) {
            int sign = 1;
            if (t[i] == '+' || t[i] == '-') {
                if (t[i] == '-') sign = -1;
                ++i;
            } else if (i != 0) {
                throw std::invalid_argument("qpoly: malformed polynomial '" + std::string(text) + "'");
            }
            std::string num = digits(i);
            int64_t coef = num.empty() ? 1 : std::stoll(num);
            int exp = 0;
            if (i < t.size() && t[i] == 'v') {
                ++i;
                exp = 1;
                if (i < t.size() && t[i] == '^') {
                    ++i;
                    int es = 1;
                    if (i < t.size() && (t[i] == '-' || t[i] == '+')) {
                        if (t[i] == '-') es = -1;
                        ++i;
                    }
                    std::string en = digits(i);
                    if (en.empty()) throw std::invalid_argument("qpoly: missing exponent in '" + std::string(text) + "'");
                    exp = es * std::stoi(en);
                }
            } else if (num.empty()) {
                throw std::invalid_argument("qpoly: malformed polynomial '" + std::string(text) + "'");
            }
            r += monomial(sign * coef, exp);
        }
        return r;
    }

private:
    void trim() {
        size_t a = 0;
        while (a < c_.size() && c_[a] == 0) ++a;
        if (a == c_.size()) {
            c_.clear();
            lo_ = 0;
            return;
        }
        size_t b = c_.size();
        while (c_[b - 1] == 0) --b;
        if (a > 0 || b < c_.size()) {
            c_ = std::vector<int64_t>(c_.begin() + a, c_.begin() + b);
            lo_ += static_cast<int>(a);
        }
    }

    int lo_ = 0;
    std::vector<int64_t> c_;
};

// [k] = v^{1-k} + v^{3-k} + ... + v^{k-1}
inline LaurentPoly quantum_int(int k) {
    LaurentPoly r;
    for (int j = 0; j < k; ++j) r += LaurentPoly::v(2 * j - k + 1);
    return r;
}

inline LaurentPoly quantum_factorial(int k) {
    LaurentPoly r(1);
    for (int j = 2; j <= k; ++j) r = r * quantum_int(j);
    return r;
}

} // namespace hecke
