#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgr/errors.hpp"
#include "qgr/json_io.hpp"
#include "qgr/lattice_jantzen.hpp"

using namespace qgr;

namespace {

std::map<long, long> dims(const FiltrationReport& r) { return r.graded_dims; }

}  // namespace

TEST_CASE("intertwiner matrix basics") {
    QURatMat t = LatticeEngine::t_matrix(0, 2);
    // highest weight word maps through with entry 1
    CHECK(t[0][0] == QURat::of(QRat(Int(1))));
    CHECK(t[3][3] == QURat::of(QRat(Int(1))));
    CHECK(t[0][1].is_zero());
    CHECK(t[1][0].is_zero());
    CHECK(t[1][2] == t[2][1]);
}

TEST_CASE("diagonalized form of the intertwiner") {
    // in the twisted bases the matrix is diag(1, 1, delta(u), 1) with
    // delta(u) = (q^{b-a} - u q^{-2}) / (u - q^{b-a-2}); equivalently the
    // middle 2x2 block has determinant delta(u) and trace 1 + delta(u)
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 2}, {2, 0}, {0, 0}, {0, 4}}) {
        QURatMat t = LatticeEngine::t_matrix(a, b);
        UPoly u = UPoly::variable();
        QRat qm2 = QRat::var_pow(-2), qba = QRat::var_pow(b - a);
        QURat delta(UPoly(qba) - u.mul_scalar(qm2), u - UPoly(QRat::var_pow(b - a - 2)));
        QURat det = t[1][1] * t[2][2] - t[1][2] * t[2][1];
        CHECK(det == delta);
        QURat trace = t[1][1] + t[2][2];
        CHECK(trace == QURat::of(QRat(Int(1))) + delta);
    }
}

TEST_CASE("renormalized R-matrices specialize with the expected ranks") {
    LatticeEngine eng;
    const int ord = 12;
    // |j - j2| != 2: invertible at z = 0
    {
        LMat r = eng.renorm_r(5, 1, ord);
        std::vector<std::vector<QRat>> m(4, std::vector<QRat>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m[i][j] = r.at(i, j).coeff(0);
        // nonzero determinant of the middle block
        QRat det = m[1][1] * m[2][2] - m[1][2] * m[2][1];
        CHECK(!det.is_zero());
    }
    // j2 = j + 2: rank one at z = 0 (kernel of dimension 3)
    {
        LMat r = eng.renorm_r(1, 3, ord);
        QRat det = r.at(1, 1).coeff(0) * r.at(2, 2).coeff(0) -
                   r.at(1, 2).coeff(0) * r.at(2, 1).coeff(0);
        CHECK(det.is_zero());
        CHECK(r.at(0, 0).coeff(0).is_zero());  // highest-weight entry killed
        bool middle_nonzero = !r.at(1, 1).coeff(0).is_zero() ||
                              !r.at(1, 2).coeff(0).is_zero() ||
                              !r.at(2, 2).coeff(0).is_zero();
        CHECK(middle_nonzero);
    }
    // j2 = j - 2: rank three at z = 0 (kernel of dimension 1)
    {
        LMat r = eng.renorm_r(3, 1, ord);
        CHECK(r.at(0, 0).coeff(0) == QRat(Int(1)));
        QRat det = r.at(1, 1).coeff(0) * r.at(2, 2).coeff(0) -
                   r.at(1, 2).coeff(0) * r.at(2, 1).coeff(0);
        CHECK(det.is_zero());
    }
}

TEST_CASE("round trip of the adjacent pair is (u-1) times the identity") {
    LatticeEngine eng;
    const int ord = 12;
    LMat a = eng.renorm_r(3, 1, ord);
    LMat b = eng.renorm_r(1, 3, ord);
    LMat p = a * b;
    // p must equal (u - 1) id with u = exp(-2z) up to a unit: a scalar matrix
    // of valuation exactly 1
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            CHECK(p.at(i, j).window_zero());
        }
    for (int i = 0; i < 4; ++i) {
        auto v = p.at(i, i).valuation();
        REQUIRE(v.has_value());
        CHECK(*v == 1);
        CHECK(p.at(i, i).congruent(p.at(0, 0)));
    }
}

TEST_CASE("composed intertwiners: identity, path independence, round trips") {
    LatticeEngine eng;
    const int ord = 16;
    std::vector<long> id_seq{5, 3, 1};
    LMat ident = eng.composed_r(id_seq, id_seq, ord);
    CHECK(ident.congruent(LMat::identity(8, ord)));

    // two reduction paths (5,3,1) -> (1,3,5) agree up to a unit scalar:
    // verified through the scalar round trip
    CHECK(eng.alpha_val({1, 3, 5}, {5, 3, 1}) == 2);
    CHECK(eng.alpha_val({3, 1}, {1, 3}) == 1);
    // additivity along a chain
    CHECK(eng.alpha_val({3, 5, 1}, {5, 3, 1}) == 1);
    CHECK(eng.alpha_val({1, 3, 5}, {3, 5, 1}) == 1);

    CHECK_THROWS_AS(eng.composed_r({3, 1}, {3, 3}, ord), NotComparable);
}

TEST_CASE("beta values vanish upward and match alpha downward") {
    LatticeEngine eng;
    // upward: beta = 0
    CHECK(eng.beta_val({1, 3}, {3, 1}) == 0);
    CHECK(eng.beta_val({1, 3, 5}, {5, 3, 1}) == 0);
    // downward: alpha = beta
    CHECK(eng.beta_val({3, 1}, {1, 3}) == 1);
    CHECK(eng.beta_val({5, 3, 1}, {1, 3, 5}) == 2);
    // superadditivity along a chain (here equality)
    long b1 = eng.beta_val({3, 5, 1}, {1, 3, 5});
    long b2 = eng.beta_val({5, 3, 1}, {3, 5, 1});
    CHECK(b1 + b2 <= eng.beta_val({5, 3, 1}, {1, 3, 5}));
}

TEST_CASE("filtration of the standard and costandard pair") {
    LatticeEngine eng;
    FiltrationReport s = eng.jantzen_filtration({3, 1});
    CHECK(dims(s) == std::map<long, long>({{0, 3}, {1, 1}}));
    FiltrationReport c = eng.jantzen_filtration({1, 3});
    CHECK(dims(c) == std::map<long, long>({{-1, 1}, {0, 3}}));
}

TEST_CASE("filtrations for the worked three-factor families") {
    LatticeEngine eng;
    CHECK(dims(eng.jantzen_filtration({3, 3, 1})) ==
          std::map<long, long>({{0, 6}, {2, 2}}));
    CHECK(dims(eng.jantzen_filtration({3, 1, 3})) == std::map<long, long>({{0, 8}}));
    CHECK(dims(eng.jantzen_filtration({1, 3, 3})) ==
          std::map<long, long>({{-2, 2}, {0, 6}}));

    CHECK(dims(eng.jantzen_filtration({5, 3, 1})) ==
          std::map<long, long>({{0, 4}, {1, 4}}));
    CHECK(dims(eng.jantzen_filtration({3, 5, 1})) ==
          std::map<long, long>({{-1, 2}, {0, 4}, {1, 2}}));
    CHECK(dims(eng.jantzen_filtration({1, 3, 5})) ==
          std::map<long, long>({{-1, 4}, {0, 4}}));
}

TEST_CASE("filtration for the two-pair family") {
    LatticeEngine eng;
    CHECK(dims(eng.jantzen_filtration({3, 3, 1, 1})) ==
          std::map<long, long>({{0, 9}, {1, 3}, {3, 3}, {4, 1}}));
    CHECK(dims(eng.jantzen_filtration({1, 1, 3, 3})) ==
          std::map<long, long>({{-4, 1}, {-3, 3}, {-1, 3}, {0, 9}}));
    CHECK(dims(eng.jantzen_filtration({3, 1, 3, 1})) ==
          std::map<long, long>({{0, 9}, {1, 6}, {2, 1}}));
}

TEST_CASE("unit rescaling of the R-matrices does not change graded dimensions") {
    LatticeEngine eng;
    FiltrationReport base = eng.jantzen_filtration({3, 3, 1}, false);
    LatticeEngine twisted;
    ZSeries u = ZSeries::one(40);
    u.set_coeff(1, QRat(Int(3)));
    u.set_coeff(2, QRat(Int(-1), Int(2)));
    twisted.set_unit_twist(u);
    FiltrationReport tw = twisted.jantzen_filtration({3, 3, 1}, false);
    CHECK(dims(base) == dims(tw));
}

TEST_CASE("poincare bridge on small sequences") {
    LatticeEngine eng;
    CharTable t(CartanDatum::from_type("A1"));
    for (std::vector<long> eps :
         {std::vector<long>{3, 1}, {1, 3}, {5, 3, 1}, {3, 1, 5}, {3, 3, 1, 1}}) {
        auto [ok, diff] = eng.poincare_bridge(eps, t);
        CHECK_MESSAGE(ok, diff);
    }
}

TEST_CASE("specialized R-matrix containments") {
    LatticeEngine eng;
    // tautology
    CHECK(eng.check_specialized_r_props({3, 1}, {3, 1}));
    // (3,1) -> (1,3): r(F_1) = r(S) = 0 is inside F_1 = 0
    CHECK(eng.check_specialized_r_props({3, 1}, {1, 3}));
    CHECK(eng.check_specialized_r_props({1, 3}, {3, 1}));
    // all comparable pairs with two or three factors from {1,3}
    std::vector<std::vector<long>> seqs{{3, 1}, {1, 3}, {3, 3, 1}, {3, 1, 3}, {1, 3, 3}};
    AlphaTable at = AlphaTable::a1();
    CartanDatum d = CartanDatum::from_type("A1");
    for (const auto& a : seqs)
        for (const auto& b : seqs) {
            if (a.size() != b.size()) continue;
            std::vector<long> sa = a, sb = b;
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            if (sa != sb) continue;
            if (eps_preorder(SeqEps(d, a), SeqEps(d, b), at) == SeqOrder::Incomparable)
                continue;
            CHECK(eng.check_specialized_r_props(a, b));
        }
}

TEST_CASE("duality of graded dimensions between standard and costandard") {
    LatticeEngine eng;
    CHECK(eng.check_kdual(IMonomial::parse("Y(1,0)Y(1,4)")));  // all mass at zero
    CHECK(eng.check_kdual(IMonomial::parse("Y(1,0)Y(1,2)")));
    CHECK(eng.check_kdual(IMonomial::parse("Y(1,0)^2Y(1,2)^2")));
    CHECK(eng.check_kdual(IMonomial::parse("Y(1,0)Y(1,2)Y(1,4)")));
}

TEST_CASE("filtration report serialization") {
    LatticeEngine eng;
    FiltrationReport r = eng.jantzen_filtration({3, 1}, false);
    json j = filtration_to_json(r);
    CHECK(j["graded_dims"]["0"] == 3);
    CHECK(j["graded_dims"]["1"] == 1);
    CHECK(j["precision_used"] >= 10);
}
