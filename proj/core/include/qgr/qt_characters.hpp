#pragma once

#include <memory>
#include <mutex>

#include "qgr/torus.hpp"

namespace qgr {

// Table of (q,t)-characters over a fixed Cartan datum.
//
// F_t of a fundamental variable is built by a top-down completion: starting
// from the highest monomial, every discovered monomial is reconciled against
// the node-local expansions forced from above, and each node direction in
// which the monomial is dominant contributes the node-local simple character
// of its content (an sl2 computation, transported back along A-monomials).
// E_t is the twisted ordered product of fundamentals, and L_t follows from
// the bar-involution triangularity (Kazhdan-Lusztig style recursion).
//
// Caches fill idempotently behind a mutex; computed entries never change.
class CharTable {
public:
    explicit CharTable(CartanDatum datum, std::size_t monomial_cap = 20000);

    const CartanDatum& datum() const { return datum_; }
    std::size_t monomial_cap() const { return cap_; }

    // unique element of the quantum Grothendieck ring with single dominant
    // monomial Y_{i,p}
    QTElement ft_fundamental(int i, int p);

    // (q,t)-character of the standard module attached to a dominant monomial
    QTElement et_standard(const IMonomial& m);

    // canonical basis element: bar-invariant, unitriangular over the E_t
    QTElement lt_canonical(const IMonomial& m);

    // E_t(m) = sum_{m'} P_{m,m'}(t) L_t(m')
    std::map<IMonomial, LaurentHalf> p_polynomials(const IMonomial& m);

    // expansion of an arbitrary ring element in the canonical L_t basis
    std::map<IMonomial, LaurentHalf> lt_expand(const QTElement& x);

    // dimension of the simple module (simply-laced data)
    Int dim_simple(const IMonomial& m);

    // independent membership validator for the node-i subring
    bool in_k_it(const QTElement& x, int i) const;
    bool in_kt(const QTElement& x) const;

    // node-local expansion of a node-dominant monomial: the transported sl2
    // simple character of its node content (public for tests)
    QTElement node_expansion(const IMonomial& m, int j) const;

    // processing-order tie-break direction (used by determinism tests)
    void set_reverse_tiebreak(bool v) { reverse_tiebreak_ = v; }

private:
    QTElement ft_uncached(int i, int p) const;
    QTElement et_uncached(const IMonomial& m);
    QTElement lt_uncached(const IMonomial& m);
    bool proc_less(const IMonomial& a, const IMonomial& b) const;

    // shared sl2 table backing the node-local expansions
    static CharTable& sl2_table();

    CartanDatum datum_;
    std::size_t cap_;
    bool reverse_tiebreak_ = false;

    mutable std::mutex mu_;
    std::map<std::pair<int, int>, QTElement> ft_cache_;
    std::map<IMonomial, QTElement> et_cache_, lt_cache_;
};

}  // namespace qgr
