#pragma once

#include <map>
#include <string>
#include <boost/multiprecision/cpp_int.hpp>

namespace qgr {

using Int = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in t^{1/2}.  Exponents are stored doubled, so
// the key 2k represents t^k and the key 1 represents t^{1/2}; this keeps all
// exponent arithmetic integral.  Zero coefficients are never stored.
class LaurentHalf {
public:
    using Map = std::map<long, Int>;

    LaurentHalf() = default;
    explicit LaurentHalf(Int c) {
        if (c != 0) coeffs_[0] = std::move(c);
    }
    LaurentHalf(long twice_exp, Int c) {
        if (c != 0) coeffs_[twice_exp] = std::move(c);
    }

    static LaurentHalf zero() { return LaurentHalf(); }
    static LaurentHalf one() { return LaurentHalf(Int(1)); }
    // t^{k/2} given the doubled exponent k
    static LaurentHalf t_half_pow(long twice_exp) { return LaurentHalf(twice_exp, Int(1)); }
    // t^k
    static LaurentHalf t_pow(long k) { return LaurentHalf(2 * k, Int(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const {
        return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
               coeffs_.begin()->second == 1;
    }

    const Map& coeffs() const { return coeffs_; }

    Int coeff(long twice_exp) const {
        auto it = coeffs_.find(twice_exp);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    void set(long twice_exp, Int c) {
        if (c == 0)
            coeffs_.erase(twice_exp);
        else
            coeffs_[twice_exp] = std::move(c);
    }

    void add_term(long twice_exp, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(twice_exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    LaurentHalf& operator+=(const LaurentHalf& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    LaurentHalf& operator-=(const LaurentHalf& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }

    friend LaurentHalf operator+(LaurentHalf a, const LaurentHalf& b) { return a += b; }
    friend LaurentHalf operator-(LaurentHalf a, const LaurentHalf& b) { return a -= b; }

    friend LaurentHalf operator-(const LaurentHalf& a) {
        LaurentHalf r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = -c;
        return r;
    }

    friend LaurentHalf operator*(const LaurentHalf& a, const LaurentHalf& b) {
        LaurentHalf r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentHalf& operator*=(const LaurentHalf& o) { return *this = *this * o; }

    friend bool operator==(const LaurentHalf& a, const LaurentHalf& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentHalf& a, const LaurentHalf& b) { return !(a == b); }
    // map ordering, used for deterministic containers
    friend bool operator<(const LaurentHalf& a, const LaurentHalf& b) {
        return a.coeffs_ < b.coeffs_;
    }

    // t^{1/2} -> t^{-1/2}
    LaurentHalf bar() const {
        LaurentHalf r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
        return r;
    }

    bool is_bar_invariant() const { return *this == bar(); }

    // substitute t^{1/2} = 1
    Int eval_at_one() const {
        Int s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    // true when every exponent is a whole power of t (all doubled exponents even)
    bool integral_powers() const {
        for (const auto& [e, c] : coeffs_)
            if (e % 2 != 0) return false;
        return true;
    }

    // membership in t*N[t]: positive coefficients, integral exponents >= 1
    bool in_t_nonneg_t() const {
        for (const auto& [e, c] : coeffs_)
            if (e < 2 || e % 2 != 0 || c < 0) return false;
        return true;
    }

    // membership in N[t^{1/2}, t^{-1/2}]
    bool nonneg_coeffs() const {
        for (const auto& [e, c] : coeffs_)
            if (c < 0) return false;
        return true;
    }

    bool is_monomial() const { return coeffs_.size() == 1; }

    // "0", "1", "t", "t^-1 + 2*t^(1/2)" style; exponents printed halved
    std::string str() const;

private:
    Map coeffs_;
};

}  // namespace qgr
