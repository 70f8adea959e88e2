#pragma once

#include <optional>

#include "qgr/lattice.hpp"
#include "qgr/mixed.hpp"
#include "qgr/qt_characters.hpp"

namespace qgr {

// Polynomial in u over the field of rational functions in q.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(QRat c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    explicit UPoly(std::vector<QRat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly variable() { return UPoly(std::vector<QRat>{QRat::zero(), QRat::one()}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<QRat>& coeffs() const { return c_; }

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly mul_scalar(const QRat& k) const;
    UPoly monic() const;
    static UPoly gcd(UPoly a, UPoly b);
    UPoly div_exact(const UPoly& d) const;

    // substitute a series for u
    ZLaurent eval(const ZLaurent& u) const;

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<QRat> c_;
};

// Rational function in u over Q(q), kept with a monic denominator.
class QURat {
public:
    QURat() : num_(), den_(UPoly(QRat::one())) {}
    QURat(UPoly n, UPoly d);
    static QURat of(QRat c) { return QURat(UPoly(std::move(c)), UPoly(QRat::one())); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend QURat operator+(const QURat& a, const QURat& b);
    friend QURat operator-(const QURat& a, const QURat& b);
    friend QURat operator*(const QURat& a, const QURat& b);
    friend QURat operator/(const QURat& a, const QURat& b);
    friend bool operator==(const QURat& a, const QURat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    ZLaurent eval(const ZLaurent& u) const;

private:
    UPoly num_, den_;
};

using QURatMat = std::vector<std::vector<QURat>>;

struct FiltrationReport {
    std::vector<long> eps;
    std::map<long, long> graded_dims;  // n -> dim Gr_n, zeros omitted
    LaurentHalf poincare;
    int precision_used = 0;
};

// Module-level engine for type A1: explicit renormalized R-matrices between
// deformed fundamental modules and the Jantzen filtration of mixed tensor
// products, computed by lattice elimination over k(q)[[z]].
class LatticeEngine {
public:
    explicit LatticeEngine(int max_d = 6);

    // the 4x4 intertwiner between L(Y_{1,a}) (x) L(Y_{1,b}), rational in (q,u)
    static QURatMat t_matrix(int a, int b);

    // renormalized R-matrix between deformed modules S_j, S_j2 as truncated
    // series; every entry has valuation >= 0 and some entry has valuation 0
    LMat renorm_r(long j, long j2, int order) const;

    // composed intertwiner along adjacent swaps; throws NotComparable
    LMat composed_r(const std::vector<long>& from, const std::vector<long>& to,
                    int order) const;

    long beta_val(const std::vector<long>& to, const std::vector<long>& from) const;
    long alpha_val(const std::vector<long>& to, const std::vector<long>& from) const;

    FiltrationReport jantzen_filtration(const std::vector<long>& eps,
                                        bool verify_closed_form = true) const;

    // compare the lattice Poincare polynomial with the torus-side class
    std::pair<bool, std::string> poincare_bridge(const std::vector<long>& eps,
                                                 CharTable& a1_table) const;

    // containment checks for the specialized R-matrix against both
    // filtrations, over every level in the active window
    bool check_specialized_r_props(const std::vector<long>& eps,
                                   const std::vector<long>& eps2) const;

    // graded-dimension mirror between standard and costandard filtrations
    bool check_kdual(const IMonomial& d) const;

    int default_order(std::size_t d) const;

    // test seam: multiply every renormalized R-matrix by a fixed unit
    void set_unit_twist(std::optional<ZSeries> u) { unit_twist_ = std::move(u); }

private:
    struct FiltData {
        LMat common_f;                // common basis of (L_s, L_c)
        std::vector<long> divisors;   // c_i
        std::vector<long> window_n;   // consecutive levels covering the jumps
        std::vector<std::vector<long>> rel_divs;  // e_i(n) of (O^D, Sigma_n)
        std::vector<long> dims;                   // dim F_n over the window
        LMat g_basis_0;               // not used yet; reserved
    };
    FiltrationReport filtration_at_order(const std::vector<long>& eps, int order,
                                         bool verify_closed_form) const;
    std::vector<long> filtration_dims(const std::vector<long>& eps, int order,
                                      long n_lo, long n_hi,
                                      std::vector<std::vector<QRat>>* f0_bases,
                                      bool verify_closed_form) const;

    int max_d_;
    AlphaTable alpha_;
    CartanDatum a1_;
    std::optional<ZSeries> unit_twist_;
};

}  // namespace qgr
