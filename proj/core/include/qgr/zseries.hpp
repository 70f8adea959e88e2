#pragma once

#include <optional>
#include <vector>

#include "qgr/qrat.hpp"

namespace qgr {

// Truncated formal power series in z with rational-function-in-q
// coefficients.  Arithmetic is exact modulo z^order.
class ZSeries {
public:
    ZSeries() : order_(1), c_(1) {}
    explicit ZSeries(int order) : order_(order), c_(static_cast<std::size_t>(order)) {}
    ZSeries(int order, std::vector<QRat> coeffs);

    static ZSeries constant(QRat v, int order) {
        ZSeries s(order);
        s.c_[0] = std::move(v);
        return s;
    }
    static ZSeries one(int order) { return constant(QRat::one(), order); }
    // z^k, k >= 0
    static ZSeries z_pow(int k, int order);
    // exp(a*z) truncated, a an integer
    static ZSeries exp_az(long a, int order);

    int order() const { return order_; }
    const std::vector<QRat>& coeffs() const { return c_; }
    const QRat& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    void set_coeff(int k, QRat v) { c_[static_cast<std::size_t>(k)] = std::move(v); }

    std::optional<long> known_valuation() const { return known_valuation_; }
    void set_known_valuation(long v) { known_valuation_ = v; }

    bool window_zero() const;                  // all stored coefficients vanish
    std::optional<int> valuation() const;      // first nonzero index, nullopt if window_zero
    bool is_unit() const { return !c_.empty() && !c_[0].is_zero(); }

    ZSeries truncated(int order) const;

    ZSeries& operator+=(const ZSeries& o);
    ZSeries& operator-=(const ZSeries& o);
    friend ZSeries operator+(ZSeries a, const ZSeries& b) { return a += b; }
    friend ZSeries operator-(ZSeries a, const ZSeries& b) { return a -= b; }
    friend ZSeries operator-(const ZSeries& a);
    friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
    ZSeries& operator*=(const ZSeries& o) { return *this = *this * o; }
    ZSeries mul_scalar(const QRat& k) const;

    // inverse of a unit (constant coefficient nonzero)
    ZSeries unit_inverse() const;

    friend bool operator==(const ZSeries& a, const ZSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

    std::string str() const;

private:
    int order_;
    std::vector<QRat> c_;
    std::optional<long> known_valuation_;
};

// Laurent extension of ZSeries used inside lattice eliminations.  The value
// is known to equal sum num_k/den z^{lo+k} modulo z^{hi}; a single
// denominator is shared by the whole window, so coefficient arithmetic is
// integer-polynomial work and rational normalization happens once per
// operation (and only when the degrees pass a threshold).
class ZLaurent {
public:
    ZLaurent() : lo_(0), den_(IntPoly::one()), num_(1) {}
    ZLaurent(long lo, std::vector<QRat> coeffs);
    ZLaurent(long lo, IntPoly den, std::vector<IntPoly> nums)
        : lo_(lo), den_(std::move(den)), num_(std::move(nums)) {
        normalize_window();
    }
    explicit ZLaurent(const ZSeries& s);

    static ZLaurent zero_window(long lo, long hi) {
        return ZLaurent(lo, IntPoly::one(),
                        std::vector<IntPoly>(static_cast<std::size_t>(hi - lo)));
    }

    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(num_.size()); }
    QRat coeff(long e) const {
        if (e < lo_ || e >= hi()) return QRat::zero();
        return QRat(num_[static_cast<std::size_t>(e - lo_)], den_);
    }

    bool window_zero() const;
    std::optional<long> valuation() const;

    ZLaurent shifted(long k) const {
        ZLaurent r = *this;
        r.lo_ += k;
        return r;
    }

    friend ZLaurent operator+(const ZLaurent& a, const ZLaurent& b);
    friend ZLaurent operator-(const ZLaurent& a, const ZLaurent& b);
    friend ZLaurent operator-(const ZLaurent& a);
    friend ZLaurent operator*(const ZLaurent& a, const ZLaurent& b);
    ZLaurent mul_scalar(const QRat& k) const;

    // inverse; requires a certified nonzero leading coefficient in-window
    ZLaurent inverse() const;

    // restrict the window from above
    ZLaurent clipped(long hi_new) const;

    // exact check that the value is congruent to another on the overlap
    bool congruent(const ZLaurent& o) const;

    // value as a ZSeries of the given order; requires lo >= 0 and hi >= order
    ZSeries to_series(int order) const;

    // divide out common polynomial content between denominator and all
    // numerators; cheap no-op when degrees are small
    void reduce(bool force = false);

    std::string str() const;

private:
    void normalize_window();  // strip leading in-window zeros to tighten lo
    long lo_;
    IntPoly den_;
    std::vector<IntPoly> num_;
};

}  // namespace qgr
