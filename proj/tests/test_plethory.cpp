#include <doctest.h>

#include <random>

#include "ivpoly/biring.hpp"
#include "ivpoly/plethory.hpp"
#include "ivpoly/poly_text.hpp"

using namespace ivpoly;

namespace {

BPoly random_int_bpoly(std::mt19937_64& rng, unsigned maxdeg, long bound) {
    std::uniform_int_distribution<unsigned> degd(0, maxdeg);
    std::uniform_int_distribution<long> num(-bound, bound);
    unsigned d = degd(rng);
    std::vector<Rat> c(d + 1);
    for (auto& x : c) x = Rat(num(rng));
    return BPoly(std::move(c));
}

}  // namespace

TEST_CASE("relation_check on pinned cases") {
    SUBCASE("f = C(X,2), g = h = X") {
        CheckReport rep = relation_check(BPoly::basis(2), BPoly::x(), BPoly::x(), Rat(5));
        CHECK(rep.ok());
        // the coaddition route and plain composition both give C(2X,2)
        CHECK(compose(BPoly::basis(2), BPoly::x() + BPoly::x()) ==
              parse_bpoly("2*C(X,2) + X^2"));
    }
    SUBCASE("composition with a constant evaluates") {
        CHECK(compose(BPoly::basis(2), BPoly::constant(Rat(5))) == BPoly::constant(Rat(10)));
    }
    SUBCASE("unit is neutral") {
        CheckReport rep = relation_check(BPoly::x(), BPoly::x(), BPoly::x(), Rat(1));
        CHECK(rep.ok());
    }
    SUBCASE("non-integral input rejected") {
        BPoly half(std::vector<Rat>{Rat(1, 2)});
        CHECK_THROWS_AS(relation_check(half, BPoly::x(), BPoly::x(), Rat(0)),
                        std::invalid_argument);
    }
}

TEST_CASE("relations and associativity on seeded random triples") {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<long> cd(-4, 4);
    for (int t = 0; t < 100; ++t) {
        BPoly f = random_int_bpoly(rng, 4, 3), g = random_int_bpoly(rng, 4, 3),
              h = random_int_bpoly(rng, 4, 3);
        CheckReport rep = relation_check(f, g, h, Rat(cd(rng)));
        CHECK(rep.ok());
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("idempotence witness") {
    CheckReport rep = idempotence_witness(6);
    CHECK(rep.ok());
    CHECK(compose(BPoly::x(), BPoly::basis(4)) == BPoly::basis(4));
}

TEST_CASE("plethystic units") {
    auto units = plethystic_units(5, 2);
    CHECK(units.size() == 10);  // a = +-1, b in [-2, 2]
    for (const BPoly& u : units) {
        BPoly v = invert_unit(u);
        CHECK(compose(u, v) == BPoly::x());
        CHECK(compose(v, u) == BPoly::x());
    }
    CHECK(compose(parse_bpoly("X+1"), parse_bpoly("X-1")) == BPoly::x());
    CHECK(compose(parse_bpoly("-X"), parse_bpoly("-X")) == BPoly::x());
    CHECK_THROWS_AS(invert_unit(BPoly::basis(2)), std::domain_error);
    CHECK_THROWS_AS(invert_unit(parse_bpoly("2*X")), std::domain_error);
}

TEST_CASE("tensor decomposition") {
    std::vector<BPoly> bin_basis;
    for (unsigned n = 0; n <= 3; ++n) bin_basis.push_back(BPoly::basis(n));

    SUBCASE("coaddition of C(X,3) over the binomial basis") {
        TensorDecomposition d = decompose_tensor(coadd(BPoly::basis(3)), bin_basis, 3);
        REQUIRE(d.decomposed);
        CHECK(d.coords.size() == 4);
        for (const auto& [i, j, c] : d.coords) {
            CHECK(i + j == 3);
            CHECK(c == 1);
        }
        CHECK(recompose(d, bin_basis) == coadd(BPoly::basis(3)));
    }
    SUBCASE("coaddition of C(X,2) is outside the span of monomial products") {
        std::vector<BPoly> monos = {parse_bpoly("1"), parse_bpoly("X"), parse_bpoly("X^2")};
        TensorDecomposition d = decompose_tensor(coadd(BPoly::basis(2)), monos, 2);
        CHECK_FALSE(d.decomposed);
        CHECK(d.certificate == "no decomposition with factor degree <= 2");
    }
    SUBCASE("constants") {
        TBPoly one = TBPoly::tensor(BPoly::one(), BPoly::one());
        TensorDecomposition d = decompose_tensor(one, bin_basis, 3);
        REQUIRE(d.decomposed);
        REQUIRE(d.coords.size() == 1);
        CHECK(std::get<0>(d.coords[0]) == 0);
        CHECK(std::get<1>(d.coords[0]) == 0);
        CHECK(std::get<2>(d.coords[0]) == 1);
    }
    SUBCASE("every returned decomposition reconstructs exactly") {
        std::mt19937_64 rng(7);
        for (int t = 0; t < 25; ++t) {
            BPoly f = random_int_bpoly(rng, 3, 3);
            TensorDecomposition d = decompose_tensor(coadd(f), bin_basis, 3);
            REQUIRE(d.decomposed);
            CHECK(recompose(d, bin_basis) == coadd(f));
        }
    }
}

TEST_CASE("weak compositeness") {
    CHECK(weakly_composite_check(RingFamily::integers(), 5).ok());
    CHECK(weakly_composite_check(RingFamily::overring(1), 5).ok());  // Z[X]
}
