#pragma once

#include <optional>

#include "qgr/qt_characters.hpp"

namespace qgr {

// Sequence of PBW indices (images of the embedding e), with its Cartan datum.
class SeqEps {
public:
    SeqEps(const CartanDatum& d, std::vector<long> entries);

    const std::vector<long>& entries() const { return e_; }
    std::size_t size() const { return e_.size(); }
    const CartanDatum& datum() const { return *d_; }

    // the (i,p) pairs behind the entries
    const std::vector<std::pair<int, int>>& nodes() const { return nodes_; }

    bool is_standard() const;    // entries weakly decreasing
    bool is_costandard() const;  // entries weakly increasing

    SeqEps reversed() const;
    SeqEps sorted_standard() const;
    SeqEps sorted_costandard() const;
    SeqEps concat(const SeqEps& o) const;

    // the dominant monomial prod Y_{i_k, p_k}
    IMonomial product_monomial() const;

    std::string str() const;

private:
    const CartanDatum* d_;
    std::vector<long> e_;
    std::vector<std::pair<int, int>> nodes_;
};

// multi-index over J, realized as a dominant monomial's multiset of indices
SeqEps standard_sequence(const CartanDatum& d, const IMonomial& m);
SeqEps costandard_sequence(const CartanDatum& d, const IMonomial& m);

// Table of the round-trip pole orders alpha(j,j').  Built in for type A1;
// user-supplied for anything else.
class AlphaTable {
public:
    static AlphaTable a1();
    static AlphaTable from_pairs(const std::vector<std::tuple<long, long, int>>& entries);

    int alpha(long j, long j2) const;

private:
    bool a1_rule_ = false;
    std::map<std::pair<long, long>, int> t_;
};

enum class SeqOrder { Less, Equivalent, Greater, Incomparable };

// decision of the preorder generated by neutral and positive adjacent swaps
SeqOrder eps_preorder(const SeqEps& a, const SeqEps& b, const AlphaTable& table);

// all sequences reachable upward from `a` (including itself)
std::vector<std::vector<long>> eps_up_set(const SeqEps& a, const AlphaTable& table);

// gamma(d, d') = -N(m_d, m_{d'})/2, returned doubled so it stays integral
long gamma_doubled(const CartanDatum& d, const IMonomial& da, const IMonomial& db);

// mixed (q,t)-character: twisted ordered product of fundamentals
QTElement et_mixed(CharTable& table, const SeqEps& eps);

// Decategorified Jantzen class: expansion in the canonical basis, keyed by
// dominant monomials.
struct JClass {
    std::map<IMonomial, LaurentHalf> expansion;

    friend bool operator==(const JClass& a, const JClass& b) {
        return a.expansion == b.expansion;
    }
    JClass scaled(const LaurentHalf& c) const;
    JClass& operator+=(const JClass& o);
    bool is_zero() const { return expansion.empty(); }
    std::string str() const;
};

JClass jantzen_class(CharTable& table, const SeqEps& eps);

// m_n: gamma-twisted class of the concatenated standard sequences
JClass m_n(CharTable& table, const std::vector<IMonomial>& entries);

// expansion of a class in the standard basis { [M(d)]_t }
std::map<IMonomial, LaurentHalf> to_standard_basis(CharTable& table, const JClass& x);

// the * product on classes, bilinear over the standard basis
JClass star(CharTable& table, const JClass& x, const JClass& y);

// strong-associativity check on one tuple: m_n(x_1..x_n) versus
// m_k(..) * m_{n-k}(..) for every split; returns failure descriptions
std::vector<std::string> check_associativity(CharTable& table,
                                             const std::vector<IMonomial>& entries);

// bar(E_t(eps)) == E_t(eps reversed)
bool check_duality(CharTable& table, const SeqEps& eps);

}  // namespace qgr
