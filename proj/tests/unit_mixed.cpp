#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgr/errors.hpp"
#include "qgr/mixed.hpp"

using namespace qgr;

namespace {

CartanDatum a1() { return CartanDatum::from_type("A1"); }

JClass cls(CharTable& t, std::initializer_list<long> seq) {
    return jantzen_class(t, SeqEps(t.datum(), std::vector<long>(seq)));
}

// shorthand for "coefficient c t^k on the simple with monomial s"
void expect_term(const JClass& c, const std::string& mono, long tpow_doubled, long coeff = 1) {
    IMonomial m = IMonomial::parse(mono);
    REQUIRE(c.expansion.count(m));
    CHECK(c.expansion.at(m) == LaurentHalf(tpow_doubled, Int(coeff)));
}

}  // namespace

TEST_CASE("alpha table for sl2") {
    AlphaTable t = AlphaTable::a1();
    CHECK(t.alpha(3, 1) == 1);
    CHECK(t.alpha(5, 1) == 0);
    CHECK(t.alpha(3, 3) == 0);
    CHECK(t.alpha(1, 3) == 1);
}

TEST_CASE("sequence preorder for sl2") {
    CartanDatum d = a1();
    AlphaTable t = AlphaTable::a1();
    // eps_s <= eps <= eps_c for every eps of length <= 4 (exhaustive)
    std::vector<long> pool{1, 3, 5, 7};
    std::function<void(std::vector<long>&, std::size_t)> rec = [&](std::vector<long>& cur,
                                                                   std::size_t k) {
        if (k == 4) return;
        for (long j : pool) {
            cur.push_back(j);
            SeqEps e(d, cur);
            SeqOrder lo = eps_preorder(e.sorted_standard(), e, t);
            CHECK((lo == SeqOrder::Less || lo == SeqOrder::Equivalent));
            SeqOrder hi = eps_preorder(e, e.sorted_costandard(), t);
            CHECK((hi == SeqOrder::Less || hi == SeqOrder::Equivalent));
            rec(cur, k + 1);
            cur.pop_back();
        }
    };
    std::vector<long> cur;
    rec(cur, 0);

    // (3,5,1) ~ (3,1,5) since alpha(5,1) = 0
    CHECK(eps_preorder(SeqEps(d, {3, 5, 1}), SeqEps(d, {3, 1, 5}), t) == SeqOrder::Equivalent);
    // (5,3,1) strictly below (3,5,1)
    CHECK(eps_preorder(SeqEps(d, {5, 3, 1}), SeqEps(d, {3, 5, 1}), t) == SeqOrder::Less);
    CHECK(eps_preorder(SeqEps(d, {3, 5, 1}), SeqEps(d, {5, 3, 1}), t) == SeqOrder::Greater);
}

TEST_CASE("gamma values for sl2") {
    CartanDatum d = a1();
    IMonomial m3 = IMonomial::parse("Y(1,2)"), m1 = IMonomial::parse("Y(1,0)"),
              m5 = IMonomial::parse("Y(1,4)");
    CHECK(gamma_doubled(d, m3, m3) == 0);
    CHECK(gamma_doubled(d, m3, m1) == -2);  // gamma = -1
    CHECK(gamma_doubled(d, m5, m1) == 2);   // gamma = +1
}

TEST_CASE("mixed characters against the standard route") {
    CharTable t(a1());
    // single entry
    CHECK(et_mixed(t, SeqEps(t.datum(), {3})) == t.ft_fundamental(1, 2));
    // the four-term element: t F(Y2) F(Y0)
    QTElement e = et_mixed(t, SeqEps(t.datum(), {3, 1}));
    CHECK(e == t.et_standard(IMonomial::parse("Y(1,0)Y(1,2)")));

    CharTable t2(CartanDatum::from_type("A2"));
    for (std::initializer_list<long> s :
         {std::initializer_list<long>{5, 1}, {8, 4}, {9, 5, 1}}) {
        SeqEps eps(t2.datum(), std::vector<long>(s));
        CHECK(et_mixed(t2, eps.sorted_standard()) ==
              t2.et_standard(eps.product_monomial()));
    }
}

TEST_CASE("worked classes with three factors, equal pair") {
    CharTable t(a1());
    // [M(3,3,1)] = [L] + t^2 [S_3];  [M(3,1,3)] = [L] + [S_3];
    // [M(1,3,3)] = [L] + t^{-2} [S_3]
    JClass s = cls(t, {3, 3, 1});
    CHECK(s.expansion.size() == 2);
    expect_term(s, "Y(1,0)Y(1,2)^2", 0);
    expect_term(s, "Y(1,2)", 4);

    JClass mid = cls(t, {3, 1, 3});
    expect_term(mid, "Y(1,0)Y(1,2)^2", 0);
    expect_term(mid, "Y(1,2)", 0);

    JClass c = cls(t, {1, 3, 3});
    expect_term(c, "Y(1,0)Y(1,2)^2", 0);
    expect_term(c, "Y(1,2)", -4);

    // m_3 values
    IMonomial s3 = IMonomial::parse("Y(1,2)"), s1 = IMonomial::parse("Y(1,0)");
    JClass m331 = m_n(t, {s3, s3, s1});
    expect_term(m331, "Y(1,0)Y(1,2)^2", -4);
    expect_term(m331, "Y(1,2)", 0);
    JClass m313 = m_n(t, {s3, s1, s3});
    expect_term(m313, "Y(1,0)Y(1,2)^2", 0);
    expect_term(m313, "Y(1,2)", 0);
    JClass m133 = m_n(t, {s1, s3, s3});
    expect_term(m133, "Y(1,0)Y(1,2)^2", 4);
    expect_term(m133, "Y(1,2)", 0);
}

TEST_CASE("worked classes with three distinct factors") {
    CharTable t(a1());
    const char* L = "Y(1,0)Y(1,2)Y(1,4)";
    JClass s = cls(t, {5, 3, 1});
    CHECK(s.expansion.size() == 3);
    expect_term(s, L, 0);
    expect_term(s, "Y(1,0)", 2);
    expect_term(s, "Y(1,4)", 2);

    JClass e1 = cls(t, {3, 5, 1});
    expect_term(e1, L, 0);
    expect_term(e1, "Y(1,0)", -2);
    expect_term(e1, "Y(1,4)", 2);
    CHECK(cls(t, {3, 1, 5}) == e1);  // equivalent sequences give equal classes

    JClass e2 = cls(t, {5, 1, 3});
    expect_term(e2, L, 0);
    expect_term(e2, "Y(1,0)", 2);
    expect_term(e2, "Y(1,4)", -2);
    CHECK(cls(t, {1, 5, 3}) == e2);

    JClass c = cls(t, {1, 3, 5});
    expect_term(c, L, 0);
    expect_term(c, "Y(1,0)", -2);
    expect_term(c, "Y(1,4)", -2);

    IMonomial s5 = IMonomial::parse("Y(1,4)"), s3 = IMonomial::parse("Y(1,2)"),
              s1 = IMonomial::parse("Y(1,0)");
    JClass m531 = m_n(t, {s5, s3, s1});
    expect_term(m531, L, -2);
    expect_term(m531, "Y(1,0)", 0);
    expect_term(m531, "Y(1,4)", 0);
    JClass m135 = m_n(t, {s1, s3, s5});
    expect_term(m135, L, 2);
    expect_term(m135, "Y(1,0)", 0);
    expect_term(m135, "Y(1,4)", 0);
    // t^2-proportional pairs
    CHECK(m_n(t, {s3, s5, s1}) == m_n(t, {s3, s1, s5}).scaled(LaurentHalf::t_pow(2)));
    CHECK(m_n(t, {s5, s1, s3}) == m_n(t, {s1, s5, s3}).scaled(LaurentHalf::t_pow(2)));
    JClass m351 = m_n(t, {s3, s5, s1});
    expect_term(m351, L, 2);
    expect_term(m351, "Y(1,0)", 0);
    expect_term(m351, "Y(1,4)", 4);
}

TEST_CASE("worked classes with two repeated pairs") {
    CharTable t(a1());
    const char* L = "Y(1,0)^2Y(1,2)^2";
    const char* K = "Y(1,0)Y(1,2)";
    auto lh = [](std::initializer_list<std::pair<long, long>> terms) {
        LaurentHalf p;
        for (auto [e, c] : terms) p.add_term(e, Int(c));
        return p;
    };
    JClass s = cls(t, {3, 3, 1, 1});
    CHECK(s.expansion.size() == 3);
    CHECK(s.expansion.at(IMonomial::parse(L)) == LaurentHalf::one());
    CHECK(s.expansion.at(IMonomial::parse(K)) == lh({{6, 1}, {2, 1}}));   // t^3 + t
    CHECK(s.expansion.at(IMonomial()) == LaurentHalf::t_pow(2 * 2));      // t^4

    JClass e1 = cls(t, {3, 1, 3, 1});
    CHECK(e1.expansion.at(IMonomial::parse(K)) == lh({{2, 2}}));  // 2t
    CHECK(e1.expansion.at(IMonomial()) == LaurentHalf::t_pow(2));

    JClass e2 = cls(t, {3, 1, 1, 3});
    CHECK(e2.expansion.at(IMonomial::parse(K)) == lh({{2, 1}, {-2, 1}}));
    CHECK(e2.expansion.at(IMonomial()) == LaurentHalf::one());
    CHECK(cls(t, {1, 3, 3, 1}) == e2);

    JClass e4 = cls(t, {1, 3, 1, 3});
    CHECK(e4.expansion.at(IMonomial::parse(K)) == lh({{-2, 2}}));
    CHECK(e4.expansion.at(IMonomial()) == LaurentHalf::t_pow(-2));

    JClass c = cls(t, {1, 1, 3, 3});
    CHECK(c.expansion.at(IMonomial::parse(K)) == lh({{-6, 1}, {-2, 1}}));
    CHECK(c.expansion.at(IMonomial()) == LaurentHalf::t_pow(-4));

    // the product identities
    IMonomial s3 = IMonomial::parse("Y(1,2)"), s1 = IMonomial::parse("Y(1,0)");
    IMonomial s3s3 = IMonomial::parse("Y(1,2)^2"), s1s1 = IMonomial::parse("Y(1,0)^2");
    JClass p1 = m_n(t, {s3s3, s1s1});
    CHECK(p1.expansion.at(IMonomial::parse(L)) == LaurentHalf::t_pow(-4));
    CHECK(p1.expansion.at(IMonomial::parse(K)) == lh({{-2, 1}, {-6, 1}}));
    CHECK(p1.expansion.at(IMonomial()) == LaurentHalf::one());
    JClass p2 = m_n(t, {s1s1, s3s3});
    CHECK(p2.expansion.at(IMonomial::parse(L)) == LaurentHalf::t_pow(4));
    CHECK(p2.expansion.at(IMonomial::parse(K)) == lh({{6, 1}, {2, 1}}));
    CHECK(p2.expansion.at(IMonomial()) == LaurentHalf::one());
    JClass p3 = m_n(t, {s3, s1, s3, s1});
    CHECK(p3.expansion.at(IMonomial::parse(L)) == LaurentHalf::t_pow(-2));
    CHECK(p3.expansion.at(IMonomial::parse(K)) == lh({{-2, 2}}));
    CHECK(p3.expansion.at(IMonomial()) == LaurentHalf::one());
    JClass p4 = m_n(t, {s3, s1s1, s3});
    CHECK(p4.expansion.at(IMonomial::parse(L)) == LaurentHalf::one());
    CHECK(p4.expansion.at(IMonomial::parse(K)) == lh({{2, 1}, {-2, 1}}));
    CHECK(p4.expansion.at(IMonomial()) == LaurentHalf::one());
    CHECK(m_n(t, {s1, s3s3, s1}) == p4);
    JClass p5 = m_n(t, {s1, s3, s1, s3});
    CHECK(p5.expansion.at(IMonomial::parse(L)) == LaurentHalf::t_pow(2));
    CHECK(p5.expansion.at(IMonomial::parse(K)) == lh({{2, 2}}));
    CHECK(p5.expansion.at(IMonomial()) == LaurentHalf::one());
}

TEST_CASE("normality and the costandard mirror") {
    CharTable t(a1());
    std::mt19937 rng(8);
    std::vector<long> pool{1, 3, 5, 7};
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<long> seq;
        for (int k = 0; k < 3; ++k) seq.push_back(pool[rng() % pool.size()]);
        SeqEps eps(t.datum(), seq);
        JClass s = jantzen_class(t, eps.sorted_standard());
        // leading simple coefficient is exactly one
        IMonomial lead = eps.product_monomial();
        CHECK(s.expansion.at(lead) == LaurentHalf::one());
        // costandard class is the bar of the standard class
        JClass c = jantzen_class(t, eps.sorted_costandard());
        JClass barred;
        for (const auto& [m, coeff] : s.expansion) barred.expansion[m] = coeff.bar();
        CHECK(c == barred);
        // evaluation at t = 1 only depends on the multiset
        std::shuffle(seq.begin(), seq.end(), rng);
        JClass any = jantzen_class(t, SeqEps(t.datum(), seq));
        for (const auto& [m, coeff] : s.expansion)
            CHECK(coeff.eval_at_one() == any.expansion.at(m).eval_at_one());
    }
}

TEST_CASE("rank two classes of adjacent fundamentals") {
    // [M(eps_s)] = [L] + t[K] and [M(eps_c)] = [L] + t^{-1}[K] with
    // K the product of the neighbors at the middle parameter
    CharTable t2(CartanDatum::from_type("A2"));
    {
        long hi = embed_e(t2.datum(), 1, 2), lo = embed_e(t2.datum(), 1, 0);
        JClass s = jantzen_class(t2, SeqEps(t2.datum(), {hi, lo}));
        CHECK(s.expansion.size() == 2);
        expect_term(s, "Y(1,0)Y(1,2)", 0);
        expect_term(s, "Y(2,1)", 2);
        JClass c = jantzen_class(t2, SeqEps(t2.datum(), {lo, hi}));
        expect_term(c, "Y(2,1)", -2);
        // the twist exponent of the star product: alpha = -1 + (c~(1)+c~(3))/2
        auto ct = t2.datum().qcartan_inverse(1, 1, 3);
        long alpha2 = -2 + (ct[0] + ct[2]);  // doubled
        CHECK(alpha2 == -1);                 // alpha = -1/2 for this datum
        IMonomial shi = IMonomial::parse("Y(1,2)"), slo = IMonomial::parse("Y(1,0)");
        CHECK(gamma_doubled(t2.datum(), shi, slo) == alpha2);
        JClass prod = m_n(t2, {shi, slo});
        CHECK(prod.expansion.at(IMonomial::parse("Y(1,0)Y(1,2)")) ==
              LaurentHalf(alpha2, Int(1)));
        CHECK(prod.expansion.at(IMonomial::parse("Y(2,1)")) == LaurentHalf(alpha2 + 2, Int(1)));
    }
    CharTable t3(CartanDatum::from_type("A3"));
    {
        long hi = embed_e(t3.datum(), 2, 3), lo = embed_e(t3.datum(), 2, 1);
        JClass s = jantzen_class(t3, SeqEps(t3.datum(), {hi, lo}));
        CHECK(s.expansion.size() == 2);
        expect_term(s, "Y(2,1)Y(2,3)", 0);
        expect_term(s, "Y(1,2)Y(3,2)", 2);
        auto ct = t3.datum().qcartan_inverse(2, 2, 3);
        long alpha2 = -2 + (ct[0] + ct[2]);
        IMonomial shi = IMonomial::parse("Y(2,3)"), slo = IMonomial::parse("Y(2,1)");
        CHECK(gamma_doubled(t3.datum(), shi, slo) == alpha2);
        JClass prod = m_n(t3, {shi, slo});
        CHECK(prod.expansion.at(IMonomial::parse("Y(2,1)Y(2,3)")) ==
              LaurentHalf(alpha2, Int(1)));
        CHECK(prod.expansion.at(IMonomial::parse("Y(1,2)Y(3,2)")) ==
              LaurentHalf(alpha2 + 2, Int(1)));
    }
}

TEST_CASE("associativity checks on the worked triples and random samples") {
    CharTable t(a1());
    IMonomial s3 = IMonomial::parse("Y(1,2)"), s1 = IMonomial::parse("Y(1,0)"),
              s5 = IMonomial::parse("Y(1,4)");
    CHECK(check_associativity(t, {s3, s3, s1}).empty());
    CHECK(check_associativity(t, {s5, s3, s1}).empty());
    CHECK(check_associativity(t, {s3, s1, s5}).empty());

    std::mt19937 rng(424242);
    std::vector<IMonomial> pool{s1, s3, s5, IMonomial::parse("Y(1,6)")};
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<IMonomial> tuple;
        for (int k = 0; k < 4; ++k) tuple.push_back(pool[rng() % pool.size()]);
        CHECK(check_associativity(t, tuple).empty());
    }
    CharTable t2(CartanDatum::from_type("A2"));
    std::vector<IMonomial> pool2{IMonomial::parse("Y(1,0)"), IMonomial::parse("Y(2,1)"),
                                 IMonomial::parse("Y(1,2)"), IMonomial::parse("Y(2,3)")};
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<IMonomial> tuple;
        for (int k = 0; k < 3; ++k) tuple.push_back(pool2[rng() % pool2.size()]);
        CHECK(check_associativity(t2, tuple).empty());
    }
}

TEST_CASE("duality of mixed characters") {
    CharTable t(a1());
    CHECK(check_duality(t, SeqEps(t.datum(), {3, 1, 3})));  // palindromic
    CHECK(check_duality(t, SeqEps(t.datum(), {3, 1})));
    CHECK(check_duality(t, SeqEps(t.datum(), {5, 3, 1})));
    CharTable t2(CartanDatum::from_type("A2"));
    CHECK(check_duality(t2, SeqEps(t2.datum(), {5, 4, 1})));
    // classes [L] + t and [L] + t^{-1} behind the duality pair
    JClass s = cls(t, {3, 1}), c = cls(t, {1, 3});
    CHECK(s.expansion.at(IMonomial()) == LaurentHalf::t_pow(1));
    CHECK(c.expansion.at(IMonomial()) == LaurentHalf::t_pow(-1));
}

TEST_CASE("equivalent sequences give identical classes") {
    CharTable t(a1());
    AlphaTable at = AlphaTable::a1();
    std::vector<long> base{7, 5, 3, 1};
    for (const auto& up : eps_up_set(SeqEps(t.datum(), {3, 1, 5}), at)) {
        if (eps_preorder(SeqEps(t.datum(), {3, 1, 5}), SeqEps(t.datum(), up), at) ==
            SeqOrder::Equivalent)
            CHECK(cls(t, {3, 1, 5}) == jantzen_class(t, SeqEps(t.datum(), up)));
    }
}
