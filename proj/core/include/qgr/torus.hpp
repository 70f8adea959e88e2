#pragma once

#include <map>

#include "qgr/cartan.hpp"
#include "qgr/laurent.hpp"

namespace qgr {

// Element of the quantum torus Y_t in canonical form: a finite
// Z[t^{1/2},t^{-1/2}]-combination of commutative monomials.  The product of
// two commutative monomials is
//     u(m) u(m') = t^{-N(m,m')/2} u(m m'),
// with N extended bilinearly from the node pairing; everything else
// (bar involution, evaluation) is diagonal in this basis.
class QTElement {
public:
    using Map = std::map<IMonomial, LaurentHalf>;

    QTElement() = default;

    static QTElement zero() { return QTElement(); }
    static QTElement scalar(const LaurentHalf& c) {
        QTElement e;
        if (!c.is_zero()) e.t_[IMonomial()] = c;
        return e;
    }
    static QTElement one() { return scalar(LaurentHalf::one()); }
    // the commutative monomial u(m)
    static QTElement underline(const IMonomial& m) {
        QTElement e;
        e.t_[m] = LaurentHalf::one();
        return e;
    }

    bool is_zero() const { return t_.empty(); }
    const Map& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }

    LaurentHalf coeff(const IMonomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? LaurentHalf::zero() : it->second;
    }

    void add_term(const IMonomial& m, const LaurentHalf& c) {
        if (c.is_zero()) return;
        auto [it, ins] = t_.try_emplace(m, c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    QTElement& operator+=(const QTElement& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    QTElement& operator-=(const QTElement& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend QTElement operator+(QTElement a, const QTElement& b) { return a += b; }
    friend QTElement operator-(QTElement a, const QTElement& b) { return a -= b; }
    friend QTElement operator-(const QTElement& a) {
        QTElement r;
        for (const auto& [m, c] : a.t_) r.t_[m] = -c;
        return r;
    }
    QTElement scaled(const LaurentHalf& c) const {
        QTElement r;
        if (c.is_zero()) return r;
        for (const auto& [m, k] : t_) r.t_[m] = k * c;
        return r;
    }

    friend bool operator==(const QTElement& a, const QTElement& b) { return a.t_ == b.t_; }
    friend bool operator!=(const QTElement& a, const QTElement& b) { return !(a == b); }

    std::string str() const;

private:
    Map t_;
};

// N extended bilinearly to monomials
long n_form_monomials(const CartanDatum& d, const IMonomial& a, const IMonomial& b);

// noncommutative product in the commutative-monomial basis
QTElement qt_mul(const CartanDatum& d, const QTElement& x, const QTElement& y);

// bar involution: t^{1/2} -> t^{-1/2} coefficientwise (commutative monomials
// are the fixed points)
QTElement qt_bar(const QTElement& x);

// evaluation at t = 1
std::map<IMonomial, Int> ev_t1(const QTElement& x);

}  // namespace qgr
