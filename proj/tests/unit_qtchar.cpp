#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgr/errors.hpp"
#include "qgr/qt_characters.hpp"

using namespace qgr;

TEST_CASE("sl2 fundamental character") {
    CharTable t(CartanDatum::from_type("A1"));
    QTElement f = t.ft_fundamental(1, 0);
    QTElement expect = QTElement::underline(IMonomial::parse("Y(1,0)"));
    expect.add_term(IMonomial::parse("Y(1,2)^-1"), LaurentHalf::one());
    CHECK(f == expect);
    CHECK(t.in_kt(f));
    CHECK(qt_bar(f) == f);
}

TEST_CASE("A2 fundamental has three monomials with coefficient one") {
    CharTable t(CartanDatum::from_type("A2"));
    QTElement f = t.ft_fundamental(1, 0);
    CHECK(f.size() == 3);
    for (const auto& [m, c] : f.terms()) CHECK(c == LaurentHalf::one());
    CHECK(f.coeff(IMonomial::parse("Y(1,0)")) == LaurentHalf::one());
    CHECK(f.coeff(IMonomial::parse("Y(1,2)^-1Y(2,1)")) == LaurentHalf::one());
    CHECK(f.coeff(IMonomial::parse("Y(2,3)^-1")) == LaurentHalf::one());
    CHECK(t.in_kt(f));
    CHECK(qt_bar(f) == f);
}

TEST_CASE("fundamental characters have the right dimension at t = 1") {
    auto dim_at_one = [](const QTElement& x) {
        Int s = 0;
        for (const auto& [m, v] : ev_t1(x)) s += v;
        return s;
    };
    CharTable a3(CartanDatum::from_type("A3"));
    CHECK(dim_at_one(a3.ft_fundamental(1, 0)) == 4);
    CHECK(dim_at_one(a3.ft_fundamental(2, 1)) == 6);
    CHECK(dim_at_one(a3.ft_fundamental(3, 0)) == 4);

    CharTable d4(CartanDatum::from_type("D4"));
    CHECK(dim_at_one(d4.ft_fundamental(1, 0)) == 8);
    CHECK(dim_at_one(d4.ft_fundamental(3, 0)) == 8);
    CHECK(dim_at_one(d4.ft_fundamental(4, 0)) == 8);
    // the node at the branch point carries the adjoint plus a trivial piece
    CHECK(dim_at_one(d4.ft_fundamental(2, 1)) == 29);

    CharTable b2(CartanDatum::from_type("B2"));
    CHECK(dim_at_one(b2.ft_fundamental(1, 0)) == 5);
    CHECK(dim_at_one(b2.ft_fundamental(2, 1)) == 4);
}

TEST_CASE("every computed fundamental is bar invariant and validates") {
    for (const char* type : {"A2", "A3", "D4", "B2"}) {
        CharTable t(CartanDatum::from_type(type));
        QTElement f = t.ft_fundamental(1, t.datum().parity(1));
        CHECK(qt_bar(f) == f);
        CHECK(t.in_kt(f));
        int dominants = 0;
        for (const auto& [m, c] : f.terms())
            if (m.dominant()) ++dominants;
        CHECK(dominants == 1);
    }
}

TEST_CASE("the four-term standard character of the sl2 Kirillov-Reshetikhin pair") {
    CharTable t(CartanDatum::from_type("A1"));
    IMonomial m = IMonomial::parse("Y(1,0)Y(1,2)");
    QTElement e = t.et_standard(m);
    QTElement expect = QTElement::underline(m);
    expect.add_term(IMonomial::parse("Y(1,0)Y(1,4)^-1"), LaurentHalf::one());
    expect.add_term(IMonomial::parse("Y(1,2)^-1Y(1,4)^-1"), LaurentHalf::one());
    expect.add_term(IMonomial(), LaurentHalf::t_pow(1));
    CHECK(e == expect);

    // L_t(m) = E_t(m) - t
    QTElement l = t.lt_canonical(m);
    QTElement diff = e - l;
    CHECK(diff == QTElement::scalar(LaurentHalf::t_pow(1)));
    CHECK(qt_bar(l) == l);

    auto p = t.p_polynomials(m);
    CHECK(p.size() == 2);
    CHECK(p.at(m) == LaurentHalf::one());
    CHECK(p.at(IMonomial()) == LaurentHalf::t_pow(1));
}

TEST_CASE("E_t of a fundamental equals F_t, and L_t of a fundamental equals F_t") {
    CharTable t(CartanDatum::from_type("A2"));
    IMonomial y = IMonomial::parse("Y(1,0)");
    CHECK(t.et_standard(y) == t.ft_fundamental(1, 0));
    CHECK(t.lt_canonical(y) == t.ft_fundamental(1, 0));
}

TEST_CASE("non-interacting sl2 pair gives a simple tensor") {
    CharTable t(CartanDatum::from_type("A1"));
    IMonomial m = IMonomial::parse("Y(1,0)Y(1,4)");
    CHECK(t.lt_canonical(m) == t.et_standard(m));
    auto p = t.p_polynomials(m);
    CHECK(p.size() == 1);
}

TEST_CASE("dimensions of sl2 simples") {
    CharTable t(CartanDatum::from_type("A1"));
    CHECK(t.dim_simple(IMonomial::parse("Y(1,0)")) == 2);
    CHECK(t.dim_simple(IMonomial::parse("Y(1,0)Y(1,2)")) == 3);
    CHECK(t.dim_simple(IMonomial::parse("Y(1,0)Y(1,2)Y(1,4)")) == 4);
    CHECK(t.dim_simple(IMonomial::parse("Y(1,0)Y(1,4)")) == 4);
    // two equal strings tensor to a simple
    CHECK(t.dim_simple(IMonomial::parse("Y(1,0)^2Y(1,2)^2")) == 9);
    CHECK(t.dim_simple(IMonomial::parse("Y(1,0)Y(1,2)^2")) == 6);
}

TEST_CASE("standard character dimension is the product of fundamental dimensions") {
    CharTable t(CartanDatum::from_type("A2"));
    IMonomial m = IMonomial::parse("Y(1,0)Y(2,1)");
    Int s = 0;
    bool nonneg = true;
    for (const auto& [mm, v] : ev_t1(t.et_standard(m))) {
        s += v;
        nonneg = nonneg && v > 0;
    }
    CHECK(s == 9);
    CHECK(nonneg);
}

TEST_CASE("unitriangularity of the canonical basis change") {
    CharTable t(CartanDatum::from_type("A2"));
    IMonomial m = IMonomial::parse("Y(1,0)Y(1,2)");
    auto p = t.p_polynomials(m);
    CHECK(p.at(m) == LaurentHalf::one());
    for (const auto& [mm, c] : p) {
        if (mm == m) continue;
        CHECK(nakajima_leq(t.datum(), mm, m));
        CHECK(c.in_t_nonneg_t());
    }
}

TEST_CASE("positivity of the KL-type polynomials on small products") {
    for (const char* type : {"A1", "A2"}) {
        CharTable t(CartanDatum::from_type(type));
        const CartanDatum& d = t.datum();
        std::vector<IMonomial> doms;
        for (int i = 1; i <= d.rank(); ++i)
            for (int p = d.parity(i); p <= d.parity(i) + 4; p += 2)
                for (int i2 = i; i2 <= d.rank(); ++i2)
                    for (int p2 = d.parity(i2); p2 <= d.parity(i2) + 4; p2 += 2) {
                        IMonomial m;
                        m.mul_var(i, p, 1);
                        m.mul_var(i2, p2, 1);
                        doms.push_back(m);
                    }
        for (const auto& m : doms) {
            auto p = t.p_polynomials(m);
            for (const auto& [mm, c] : p) {
                if (mm == m) continue;
                CHECK(c.in_t_nonneg_t());
            }
        }
    }
}

TEST_CASE("completion is independent of the processing tie-break") {
    CharTable fwd(CartanDatum::from_type("D4"));
    CharTable rev(CartanDatum::from_type("D4"));
    rev.set_reverse_tiebreak(true);
    CHECK(fwd.ft_fundamental(2, 1) == rev.ft_fundamental(2, 1));
    CHECK(fwd.ft_fundamental(1, 0) == rev.ft_fundamental(1, 0));
}

TEST_CASE("errors surface on invalid inputs") {
    CharTable t(CartanDatum::from_type("A1"));
    CHECK_THROWS_AS(t.ft_fundamental(1, 1), NotInLattice);
    CHECK_THROWS_AS(t.lt_canonical(IMonomial::parse("Y(1,0)^-1")), ValidationFailure);
    CharTable tiny(CartanDatum::from_type("D4"), 5);
    CHECK_THROWS_AS(tiny.ft_fundamental(2, 1), NonTermination);
}
