#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgr/laurent.hpp"
#include "qgr/qrat.hpp"

namespace qgr {

// Symmetric Cartan datum for the quantized enveloping algebra side.
class SymCartan {
public:
    static SymCartan from_type(const std::string& type);  // "A2","A3","D4"
    explicit SymCartan(std::vector<std::vector<int>> cartan);

    int rank() const { return n_; }
    int form(int i, int j) const { return c_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }

    using Root = std::vector<int>;  // coordinates over the simple roots
    Root simple(int i) const;
    Root reflect(int i, const Root& r) const;   // s_i
    long pair(const Root& a, const Root& b) const;  // (a, b)
    bool is_positive(const Root& r) const;
    static int height(const Root& r);

private:
    int n_;
    std::vector<std::vector<int>> c_;
};

// Reduced word with its roots, plus quiver-adaptedness data.
class QuiverData {
public:
    // Orientation inferred: the word is marked adapted when some orientation
    // of the Dynkin diagram makes every letter a successive source.
    QuiverData(SymCartan cartan, std::vector<int> word);

    const SymCartan& cartan() const { return g_; }
    const std::vector<int>& word() const { return word_; }
    std::size_t length() const { return word_.size(); }
    const SymCartan::Root& root(std::size_t j) const { return roots_[j - 1]; }  // 1-based
    bool adapted() const { return adapted_; }

    long root_pair(std::size_t j, std::size_t k) const {
        return g_.pair(roots_[j - 1], roots_[k - 1]);
    }

private:
    SymCartan g_;
    std::vector<int> word_;
    std::vector<SymCartan::Root> roots_;
    bool adapted_;
};

// Weight-graded element of the positive half in shuffle coordinates: the
// map word -> pairing value <x, e_word>, with values in Q(s), s = t^{1/2}.
class UqElement {
public:
    using Word = std::vector<int>;
    using Map = std::map<Word, QRat>;

    UqElement() = default;
    explicit UqElement(SymCartan::Root weight) : beta_(std::move(weight)) {}

    static UqElement unit(const SymCartan& g);
    // the Chevalley generator e_i
    static UqElement generator(const SymCartan& g, int i);

    const SymCartan::Root& weight() const { return beta_; }
    const Map& coords() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    QRat coord(const Word& w) const {
        auto it = c_.find(w);
        return it == c_.end() ? QRat::zero() : it->second;
    }
    void set_coord(const Word& w, QRat v) {
        if (v.is_zero())
            c_.erase(w);
        else
            c_[w] = std::move(v);
    }

    UqElement& operator+=(const UqElement& o);
    UqElement& operator-=(const UqElement& o);
    friend UqElement operator+(UqElement a, const UqElement& b) { return a += b; }
    friend UqElement operator-(UqElement a, const UqElement& b) { return a -= b; }
    UqElement scaled(const QRat& k) const;

    friend bool operator==(const UqElement& a, const UqElement& b) {
        return a.beta_ == b.beta_ && a.c_ == b.c_;
    }

    std::string str() const;

private:
    SymCartan::Root beta_;
    Map c_;
};

// pairing against a word monomial (the representation is the pairing)
QRat uq_pairing_word(const UqElement& x, const UqElement::Word& w);

// product, via the twisted splitting rule on coordinates
UqElement uq_mul(const SymCartan& g, const UqElement& x, const UqElement& y);

// dual bar involution: coordinate-wise t -> t^{-1}
UqElement iota_prime(const UqElement& x);

// renormalized bar: t^{-(beta,beta)/2} iota'
UqElement bar_renorm(const SymCartan& g, const UqElement& x);

// all words of a given weight, lexicographically sorted
std::vector<UqElement::Word> words_of_weight(const SymCartan& g, const SymCartan::Root& beta);

// pairing of two elements through the word Gram matrix
QRat uq_pairing(const SymCartan& g, const UqElement& x, const UqElement& y);

// Dual root vectors E*_{i,j} for j = 1..length: iota'-fixed, integral after
// clearing the canonical (1-t^2) powers, positive leading word coefficient.
std::vector<UqElement> dual_root_vectors(const QuiverData& qd);

using MultiIndex = std::vector<int>;  // d over J = {1..length}

// renormalized dual PBW element
UqElement dual_pbw(const QuiverData& qd, const MultiIndex& d,
                   const std::vector<UqElement>& roots);

// all multi-indices of a given weight, bi-lex ascending (left-lex refinement)
std::vector<MultiIndex> multiindices_of_weight(const QuiverData& qd,
                                               const SymCartan::Root& beta);

// dual canonical basis of a weight space, keyed by multi-index
std::map<MultiIndex, UqElement> dual_canonical(const QuiverData& qd,
                                               const SymCartan::Root& beta,
                                               std::size_t word_cap = 5040);

// expansion of the mixed product E~*_i(eps) in the dual canonical basis;
// eps entries are 1-based positions in J
std::map<MultiIndex, LaurentHalf> mixed_dual(const QuiverData& qd,
                                             const std::vector<int>& eps);

// weight of a multi-index
SymCartan::Root weight_of(const QuiverData& qd, const MultiIndex& d);

// doubled gamma_i(delta_a, delta_b)
long gamma_word_doubled(const QuiverData& qd, int a, int b);

}  // namespace qgr
