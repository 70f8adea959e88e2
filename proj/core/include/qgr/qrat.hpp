#pragma once

#include <string>
#include <vector>

#include "qgr/laurent.hpp"

namespace qgr {

// Dense integer-coefficient polynomial in one formal variable.  The variable
// is nameless here; QRat instances are tagged by context (q for series
// coefficients, s = t^{1/2} for shuffle coordinates).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(Int c) {
        if (c != 0) c_.push_back(std::move(c));
    }
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly(Int(1)); }
    // c * x^k
    static IntPoly monomial(Int c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& lead() const { return c_.back(); }
    Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }

    Int content() const;           // gcd of coefficients, >= 0
    IntPoly primitive_part() const;
    int low_order() const;         // index of first nonzero coefficient, -1 for zero

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator-(const IntPoly& a);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    IntPoly mul_scalar(const Int& k) const;
    // exact division by a scalar that divides the content
    IntPoly div_scalar_exact(const Int& k) const;
    // exact polynomial division; caller guarantees divisibility over Q
    IntPoly div_exact(const IntPoly& d) const;
    IntPoly shifted(std::size_t k) const;  // * x^k

    // primitive gcd, positive leading coefficient; gcd(0,f) = primitive(f)
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    Int eval(const Int& x) const;
    // reverse coefficients: x^deg * p(1/x)
    IntPoly reversed() const;

    std::string str(const std::string& var) const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;  // c_[k] is the coefficient of x^k
};

// Rational function over Q in one variable, held as a quotient of two
// integer polynomials.  Normal form: denominator nonzero with positive
// leading coefficient, num/den polynomial-coprime, and the pair of contents
// coprime, so the representation is unique.
class QRat {
public:
    QRat() : num_(), den_(IntPoly::one()) {}
    QRat(Int n) : num_(IntPoly(std::move(n))), den_(IntPoly::one()) {}
    QRat(Int n, Int d);
    QRat(IntPoly n, IntPoly d);

    static QRat zero() { return QRat(); }
    static QRat one() { return QRat(Int(1)); }
    static QRat variable() { return QRat(IntPoly::monomial(Int(1), 1), IntPoly::one()); }
    // x^k with k possibly negative
    static QRat var_pow(long k);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    QRat& operator+=(const QRat& o);
    QRat& operator-=(const QRat& o);
    QRat& operator*=(const QRat& o);
    QRat& operator/=(const QRat& o);
    friend QRat operator+(QRat a, const QRat& b) { return a += b; }
    friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
    friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
    friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
    friend QRat operator-(const QRat& a);

    friend bool operator==(const QRat& a, const QRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

    QRat inverse() const;

    // substitution x -> 1/x (used for the bar involution on coordinates)
    QRat bar() const;

    // valuation of the rational function at x = 0 (ord num - ord den);
    // 0 for the zero function by convention with `is_zero` checked first
    long valuation_at_zero() const;

    // value at x = 0; requires valuation >= 0
    QRat eval_zero() const;

    // If *this is a Laurent polynomial in x = t^{1/2} (denominator a pure
    // power of x up to sign), return it as a LaurentHalf; throws otherwise.
    LaurentHalf to_laurent_half() const;
    static QRat from_laurent_half(const LaurentHalf& p);

    std::string str(const std::string& var) const;

private:
    void normalize();
    IntPoly num_, den_;
};

}  // namespace qgr
