#include "qgr/torus.hpp"

#include <sstream>

namespace qgr {

long n_form_monomials(const CartanDatum& d, const IMonomial& a, const IMonomial& b) {
    long acc = 0;
    for (const auto& [ka, va] : a.exps())
        for (const auto& [kb, vb] : b.exps()) {
            if (va == 0 || vb == 0) continue;
            long nf = d.n_form(ka.first, ka.second, kb.first, kb.second);
            acc += static_cast<long>(va) * vb * nf;
        }
    return acc;
}

QTElement qt_mul(const CartanDatum& d, const QTElement& x, const QTElement& y) {
    QTElement r;
    for (const auto& [ma, ca] : x.terms()) {
        for (const auto& [mb, cb] : y.terms()) {
            long n = n_form_monomials(d, ma, mb);
            // u(m) u(m') = t^{-N/2} u(m m'); -N/2 in doubled-exponent units is -N
            r.add_term(ma * mb, ca * cb * LaurentHalf::t_half_pow(-n));
        }
    }
    return r;
}

QTElement qt_bar(const QTElement& x) {
    QTElement r;
    for (const auto& [m, c] : x.terms()) r.add_term(m, c.bar());
    return r;
}

std::map<IMonomial, Int> ev_t1(const QTElement& x) {
    std::map<IMonomial, Int> r;
    for (const auto& [m, c] : x.terms()) {
        Int v = c.eval_at_one();
        if (v != 0) r[m] = v;
    }
    return r;
}

std::string QTElement::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << m.str();
    }
    return os.str();
}

}  // namespace qgr
