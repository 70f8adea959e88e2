#include "qgr/qrat.hpp"

#include <sstream>

#include "qgr/errors.hpp"

namespace qgr {

IntPoly IntPoly::monomial(Int c, std::size_t k) {
    if (c == 0) return IntPoly();
    std::vector<Int> v(k + 1);
    v[k] = std::move(c);
    return IntPoly(std::move(v));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& c : c_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g < 0 ? Int(-g) : g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    return g == 1 ? *this : div_scalar_exact(g);
}

int IntPoly::low_order() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<int>(k);
    return -1;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

IntPoly operator-(const IntPoly& a) {
    std::vector<Int> v(a.c_.size());
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] = -a.c_[k];
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            v[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::mul_scalar(const Int& k) const {
    if (k == 0) return IntPoly();
    std::vector<Int> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * k;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::div_scalar_exact(const Int& k) const {
    std::vector<Int> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        Int q = c_[i] / k;
        if (q * k != c_[i]) throw Error("Internal", "non-exact scalar division");
        v[i] = std::move(q);
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::div_exact(const IntPoly& d) const {
    // exact division with integer quotient (Gauss: a primitive divisor of an
    // integer polynomial divides it over Z)
    if (d.is_zero()) throw Error("Internal", "division by zero polynomial");
    if (is_zero()) return IntPoly();
    IntPoly rem = *this;
    const int dd = d.degree();
    int qd = rem.degree() - dd;
    if (qd < 0) throw Error("Internal", "non-exact polynomial division");
    std::vector<Int> q(qd + 1);
    const Int& dl = d.lead();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int k = rem.degree() - dd;
        Int coef = rem.lead() / dl;
        if (coef * dl != rem.lead()) throw Error("Internal", "non-exact polynomial division");
        q[static_cast<std::size_t>(k)] = coef;
        rem -= d.mul_scalar(coef).shifted(static_cast<std::size_t>(k));
    }
    if (!rem.is_zero()) throw Error("Internal", "non-exact polynomial division");
    return IntPoly(std::move(q));
}

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Int> v(c_.size() + k);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
    return IntPoly(std::move(v));
}

namespace {

constexpr long kSmallPrime = 1000003;

long mod_small(const Int& x) {
    Int r = x % kSmallPrime;
    long v = static_cast<long>(r);
    return v < 0 ? v + kSmallPrime : v;
}

long inv_mod(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return t < 0 ? t + p : t;
}

// degree of gcd modulo a fixed prime; an upper bound certificate only when
// the leading coefficients do not vanish mod p
int gcd_degree_mod_p(const IntPoly& a, const IntPoly& b) {
    std::vector<long> u(a.coeffs().size()), v(b.coeffs().size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = mod_small(a.coeffs()[i]);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_small(b.coeffs()[i]);
    if (u.empty() || u.back() == 0 || v.empty() || v.back() == 0) return -2;  // unusable
    auto deg = [](const std::vector<long>& p) {
        int d = static_cast<int>(p.size()) - 1;
        while (d >= 0 && p[d] == 0) --d;
        return d;
    };
    while (true) {
        int dv = deg(v);
        if (dv < 0) return deg(u);
        long lead = v[dv];
        long linv = inv_mod(lead, kSmallPrime);
        int du = deg(u);
        while (du >= dv) {
            long c = (u[du] * linv) % kSmallPrime;
            if (c != 0) {
                for (int k = 0; k <= dv; ++k) {
                    u[du - dv + k] = (u[du - dv + k] - c * v[k]) % kSmallPrime;
                    if (u[du - dv + k] < 0) u[du - dv + k] += kSmallPrime;
                }
            }
            int ndu = du - 1;
            while (ndu >= 0 && u[ndu] == 0) --ndu;
            du = ndu;
        }
        u.resize(du + 1);
        std::swap(u, v);
    }
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.lead() < 0 ? (-b).primitive_part() : b.primitive_part();
    if (b.is_zero()) return a.lead() < 0 ? (-a).primitive_part() : a.primitive_part();
    // cheap modular certificate: coprime in Z/p => coprime over Q
    if (a.degree() > 0 && b.degree() > 0) {
        int d = gcd_degree_mod_p(a, b);
        if (d == 0) return IntPoly::one();
    } else {
        return IntPoly::one();  // a nonzero constant is involved
    }
    // primitive PRS
    IntPoly u = a.primitive_part(), v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        // pseudo-remainder of u by v
        IntPoly r = u;
        const Int& vl = v.lead();
        while (!r.is_zero() && r.degree() >= v.degree()) {
            int k = r.degree() - v.degree();
            Int c = r.lead();
            r = r.mul_scalar(vl) - v.mul_scalar(c).shifted(k);
        }
        u = std::move(v);
        v = r.primitive_part();
    }
    if (u.lead() < 0) u = -u;
    return u;
}

Int IntPoly::eval(const Int& x) const {
    Int r = 0;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

IntPoly IntPoly::reversed() const {
    std::vector<Int> v(c_.rbegin(), c_.rend());
    return IntPoly(std::move(v));
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0) continue;
        Int c = c_[k];
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (k == 0 || c != 1) os << c.str();
        if (k > 0) {
            if (c != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

QRat::QRat(Int n, Int d) : num_(IntPoly(std::move(n))), den_(IntPoly(std::move(d))) {
    normalize();
}

QRat::QRat(IntPoly n, IntPoly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

QRat QRat::var_pow(long k) {
    if (k >= 0)
        return QRat(IntPoly::monomial(Int(1), static_cast<std::size_t>(k)), IntPoly::one());
    return QRat(IntPoly::one(), IntPoly::monomial(Int(1), static_cast<std::size_t>(-k)));
}

void QRat::normalize() {
    if (den_.is_zero()) throw Error("Internal", "zero denominator");
    if (num_.is_zero()) {
        den_ = IntPoly::one();
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    Int cn = num_.content(), cd = den_.content();
    Int cg = boost::multiprecision::gcd(cn, cd);
    if (cg > 1) {
        num_ = num_.div_scalar_exact(cg);
        den_ = den_.div_scalar_exact(cg);
    }
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QRat& QRat::operator+=(const QRat& o) {
    IntPoly n = num_ * o.den_ + o.num_ * den_;
    IntPoly d = den_ * o.den_;
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
}

QRat& QRat::operator-=(const QRat& o) {
    IntPoly n = num_ * o.den_ - o.num_ * den_;
    IntPoly d = den_ * o.den_;
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
}

QRat& QRat::operator*=(const QRat& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

QRat& QRat::operator/=(const QRat& o) {
    if (o.is_zero()) throw Error("Internal", "division by zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

QRat operator-(const QRat& a) {
    QRat r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
}

QRat QRat::inverse() const {
    if (is_zero()) throw Error("Internal", "inverse of zero");
    return QRat(den_, num_);
}

QRat QRat::bar() const {
    // f(1/x) = (x^-dn * rev(num)) / (x^-dd * rev(den))
    int dn = num_.degree(), dd = den_.degree();
    if (is_zero()) return *this;
    IntPoly rn = num_.reversed(), rd = den_.reversed();
    // multiply through by x^max to stay polynomial
    if (dn >= dd)
        return QRat(rn, rd.shifted(static_cast<std::size_t>(dn - dd)));
    return QRat(rn.shifted(static_cast<std::size_t>(dd - dn)), rd);
}

long QRat::valuation_at_zero() const {
    if (is_zero()) return 0;
    return num_.low_order() - den_.low_order();
}

QRat QRat::eval_zero() const {
    if (is_zero()) return QRat::zero();
    long v = valuation_at_zero();
    if (v < 0) throw Error("Internal", "pole at zero");
    if (v > 0) return QRat::zero();
    int ln = num_.low_order(), ld = den_.low_order();
    return QRat(num_.coeff(static_cast<std::size_t>(ln)),
                den_.coeff(static_cast<std::size_t>(ld)));
}

LaurentHalf QRat::to_laurent_half() const {
    if (is_zero()) return LaurentHalf::zero();
    // denominator must be c * x^k
    int lo = den_.low_order();
    if (lo != den_.degree())
        throw Error("Internal", "not a Laurent polynomial: " + str("s"));
    Int dc = den_.coeff(static_cast<std::size_t>(lo));
    LaurentHalf out;
    for (std::size_t k = 0; k < num_.coeffs().size(); ++k) {
        const Int& c = num_.coeffs()[k];
        if (c == 0) continue;
        Int q = c / dc;
        if (q * dc != c) throw Error("Internal", "non-integral Laurent coefficient");
        out.add_term(static_cast<long>(k) - lo, q);
    }
    return out;
}

QRat QRat::from_laurent_half(const LaurentHalf& p) {
    if (p.is_zero()) return QRat::zero();
    long minexp = p.coeffs().begin()->first;
    long shift = minexp < 0 ? -minexp : 0;
    std::vector<Int> num(static_cast<std::size_t>(p.coeffs().rbegin()->first + shift) + 1);
    for (const auto& [e, c] : p.coeffs()) num[static_cast<std::size_t>(e + shift)] = c;
    return QRat(IntPoly(std::move(num)), IntPoly::monomial(Int(1), static_cast<std::size_t>(shift)));
}

std::string QRat::str(const std::string& var) const {
    if (den_.degree() == 0 && den_.lead() == 1) return num_.str(var);
    std::string n = num_.str(var), d = den_.str(var);
    if (num_.degree() > 0 && num_.coeffs().size() > 1) n = "(" + n + ")";
    if (den_.degree() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace qgr
