#include <doctest.h>

#include <random>

#include "ivpoly/lattice.hpp"

using namespace ivpoly;

namespace {

IntMat mat(std::size_t r, std::size_t c, std::vector<long> entries) {
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = entries[i * c + j];
    return m;
}

std::vector<Rat> rv(std::vector<Rat> v) { return v; }

}  // namespace

TEST_CASE("hnf canonical form") {
    SUBCASE("already canonical") {
        IntMat m = mat(2, 2, {2, 0, 0, 3});
        CHECK(hnf(m).h == m);
    }
    SUBCASE("permutation") {
        CHECK(hnf(mat(2, 2, {0, 1, 1, 0})).h == IntMat::identity(2));
    }
    SUBCASE("reduction with |det| preserved") {
        HnfResult r = hnf(mat(2, 2, {2, 4, 1, 3}));
        CHECK(r.h == mat(2, 2, {1, 1, 0, 2}));
        CHECK(abs(r.h.det()) == 2);
        CHECK(abs(r.u.det()) == 1);
    }
    SUBCASE("transform reproduces h and is unimodular; idempotence") {
        std::mt19937_64 rng(3);
        std::uniform_int_distribution<long> d(-9, 9);
        for (int t = 0; t < 100; ++t) {
            IntMat m(4, 4);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = d(rng);
            HnfResult r = hnf(m);
            CHECK(r.u * m == r.h);
            Int ud = r.u.det();
            CHECK((ud == 1 || ud == -1));
            CHECK(abs(r.h.det()) == abs(m.det()));
            CHECK(hnf(r.h).h == r.h);
        }
    }
}

TEST_CASE("solve_left membership coordinates") {
    IntMat b = mat(2, 2, {1, 3, 0, 2});
    auto c = solve_left(b, {Int(1), Int(1)});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 1);
    CHECK((*c)[1] == -1);
    CHECK_FALSE(solve_left(mat(2, 2, {2, 0, 0, 2}), {Int(1), Int(1)}).has_value());
}

TEST_CASE("lattice membership and comparison") {
    IntLattice two_z2(2, mat(2, 2, {2, 0, 0, 2}));
    auto c = two_z2.member(rv({Rat(2), Rat(2)}));
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 1);
    CHECK((*c)[1] == 1);
    CHECK_FALSE(two_z2.member(rv({Rat(1), Rat(1)})).has_value());

    LatticeCompare cmp = compare(two_z2, IntLattice::standard(2));
    CHECK(cmp.order == LatticeOrder::FirstInsideSecond);
    CHECK(cmp.index == 4);
    CHECK(compare(IntLattice::standard(2), IntLattice::standard(2)).order == LatticeOrder::Equal);

    CHECK_THROWS_AS(IntLattice(2, mat(1, 2, {1, 0})), std::invalid_argument);
}

TEST_CASE("congruence kernel") {
    // x + y = 0 mod 2 inside Z^2
    IntMat k = congruence_kernel(2, {{Int(1), Int(1)}}, {Int(2)});
    IntLattice l(2, k);
    CHECK(l.member(rv({Rat(1), Rat(1)})).has_value());
    CHECK(l.member(rv({Rat(2), Rat(0)})).has_value());
    CHECK_FALSE(l.member(rv({Rat(1), Rat(0)})).has_value());
    CHECK(compare(l, IntLattice::standard(2)).index == 2);
}

TEST_CASE("lattice_from_congruences") {
    SUBCASE("half-integer second coordinate constraint") {
        IntLattice l = lattice_from_congruences(2, {rv({Rat(0), Rat(1, 2)})});
        // brute-force oracle over (1/2)Z^2 residues mod Z^2: only (0,0) and
        // (1/2,0) satisfy the constraint
        IntLattice expect(2, mat(2, 2, {1, 0, 0, 2}), 2);
        CHECK(l == expect);
        CHECK(l.member(rv({Rat(1, 2), Rat(0)})).has_value());
        CHECK(l.member(rv({Rat(0), Rat(1)})).has_value());
        CHECK_FALSE(l.member(rv({Rat(0), Rat(1, 2)})).has_value());
    }
    SUBCASE("no constraints") {
        CHECK(lattice_from_congruences(1, {}) == IntLattice::standard(1));
    }
    SUBCASE("one-dimensional third") {
        CHECK(lattice_from_congruences(1, {rv({Rat(1, 3)})}) == IntLattice::standard(1));
    }
    SUBCASE("always between Z^d and (1/D)Z^d") {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<long> num(-3, 3);
        std::uniform_int_distribution<long> den(1, 6);
        for (int t = 0; t < 50; ++t) {
            std::vector<std::vector<Rat>> rows(2, std::vector<Rat>(3));
            Int D = 1;
            for (auto& row : rows)
                for (auto& q : row) {
                    q = Rat(num(rng), den(rng));
                    q.canonicalize();
                    D = lcm_int(D, q.get_den());
                }
            IntLattice l = lattice_from_congruences(3, rows);
            CHECK(l.contains(IntLattice::standard(3)));
            IntLattice fine(3, IntMat::identity(3), D);
            CHECK(fine.contains(l));
        }
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(lattice_from_congruences(2, {rv({Rat(1)})}), std::invalid_argument);
    }
}

TEST_CASE("brute-force agreement in small ambient") {
    // Oracle: enumerate candidates a = x/D over one period of the solution
    // set, keep those satisfying every constraint, and span them together
    // with Z^2.
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> num(-2, 2);
    std::uniform_int_distribution<long> den(1, 3);
    for (int t = 0; t < 25; ++t) {
        std::vector<std::vector<Rat>> cons(2, std::vector<Rat>(2));
        Int D = 1;
        for (auto& row : cons)
            for (auto& q : row) {
                q = Rat(num(rng), den(rng));
                q.canonicalize();
                D = lcm_int(D, q.get_den());
            }
        IntLattice l = lattice_from_congruences(2, cons);
        // <c, x/D> is periodic in x modulo B = lcm of the denominators of
        // the scaled rows c/D.
        Int B = 1;
        for (const auto& row : cons)
            for (const Rat& q : row) {
                Rat s = q / Rat(D);
                s.canonicalize();
                B = lcm_int(B, s.get_den());
            }
        long bound = static_cast<long>(B.get_ui());
        std::vector<std::vector<Int>> gens = {{D, Int(0)}, {Int(0), D}};
        for (long i = 0; i < bound; ++i)
            for (long j = 0; j < bound; ++j) {
                Rat a = Rat(i) / Rat(D), b = Rat(j) / Rat(D);
                a.canonicalize();
                b.canonicalize();
                bool sat = true;
                for (const auto& row : cons)
                    if (!is_integer(row[0] * a + row[1] * b)) sat = false;
                if (sat) gens.push_back({Int(i), Int(j)});
            }
        IntMat g(gens.size(), 2);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            g.at(i, 0) = gens[i][0];
            g.at(i, 1) = gens[i][1];
        }
        CHECK(l == IntLattice(2, g, D));
    }
}

TEST_CASE("member agrees with coefficient enumeration in dimension 3") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> entry(-3, 3);
    for (int t = 0; t < 20; ++t) {
        IntMat b(3, 3);
        do {
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) b.at(i, j) = entry(rng);
        } while (b.det() == 0);
        IntLattice l(3, b, 2);
        // Enumerate small coefficient vectors; everything they span must be
        // a member, and member coordinates must reproduce the vector.
        for (long c0 = -2; c0 <= 2; ++c0)
            for (long c1 = -2; c1 <= 2; ++c1)
                for (long c2 = -2; c2 <= 2; ++c2) {
                    std::vector<Rat> v(3, Rat(0));
                    for (std::size_t j = 0; j < 3; ++j) {
                        v[j] = (Rat(c0) * Rat(b.at(0, j)) + Rat(c1) * Rat(b.at(1, j)) +
                                Rat(c2) * Rat(b.at(2, j))) /
                               Rat(2);
                        v[j].canonicalize();
                    }
                    auto coords = l.member(v);
                    REQUIRE(coords.has_value());
                    std::vector<Rat> back(3, Rat(0));
                    for (std::size_t i = 0; i < 3; ++i)
                        for (std::size_t j = 0; j < 3; ++j) {
                            back[j] += Rat((*coords)[i]) * Rat(l.basis().at(i, j)) / Rat(2);
                            back[j].canonicalize();
                        }
                    CHECK(back == v);
                }
        // And points off the lattice are rejected: perturb one coordinate by
        // a fraction finer than the scale.
        std::vector<Rat> off = {Rat(1, 5), Rat(0), Rat(0)};
        CHECK_FALSE(l.member(off).has_value());
    }
}

TEST_CASE("matrix json round trip") {
    IntMat m = mat(2, 3, {1, -2, 3, 4, 5, -6});
    CHECK(IntMat::from_json(m.to_json()) == m);
}
