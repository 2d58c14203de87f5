#include "splitlevi/cyclotomic.hpp"
#include "splitlevi/matrix.hpp"
#include "splitlevi/polynomial.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace splitlevi;

namespace {

QMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
    int i = 0;
    for (auto& r : rows) {
        int j = 0;
        for (long v : r) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

// Random products of permutation and sign-flip matrices: finite order,
// integral, enough variety for the projector identities.
QMatrix random_finite_order(std::mt19937& rng, int dim) {
    QMatrix m = QMatrix::identity(dim);
    std::uniform_int_distribution<int> pick(0, dim - 1), coin(0, 1);
    for (int step = 0; step < 6; ++step) {
        int i = pick(rng), j = pick(rng);
        QMatrix f = QMatrix::identity(dim);
        if (i != j && coin(rng)) {
            f(i, i) = 0;
            f(j, j) = 0;
            f(i, j) = 1;
            f(j, i) = 1;
        } else {
            f(i, i) = -1;
        }
        m = m * f;
    }
    return m;
}

}  // namespace

TEST_CASE("rref basics") {
    auto id = QMatrix::identity(3);
    auto r = rref(id);
    CHECK(r.reduced == id);
    CHECK(r.pivots == std::vector<int>{0, 1, 2});
    CHECK(r.rank == 3);

    QMatrix z(2, 2);
    auto rz = rref(z);
    CHECK(rz.reduced == z);
    CHECK(rz.pivots.empty());
    CHECK(rz.rank == 0);

    auto m = mat({{1, 2}, {2, 4}});
    auto rm = rref(m);
    CHECK(rm.rank == 1);
    CHECK(rm.reduced == mat({{1, 2}, {0, 0}}));
}

TEST_CASE("kernel and column space") {
    auto m = mat({{1, 2}, {2, 4}});
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(m.apply(ker[0]) == std::vector<Rational>{0, 0});
    CHECK(in_column_space(m, {Rational(2), Rational(4)}));
    CHECK_FALSE(in_column_space(m, {Rational(1), Rational(0)}));
}

TEST_CASE("fixed projector examples") {
    CHECK(fixed_projector(QMatrix::identity(1), 1) == QMatrix::identity(1));

    auto swap2 = mat({{0, 1}, {1, 0}});
    auto theta = fixed_projector(swap2, 2);
    QMatrix expect(2, 2, Rational(1, 2));
    CHECK(theta == expect);

    auto cyc3 = mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    auto t3 = fixed_projector(cyc3, 3);
    CHECK(t3 == QMatrix(3, 3, Rational(1, 3)));

    CHECK_THROWS(fixed_projector(cyc3, 2));
}

TEST_CASE("eigen projector examples") {
    auto id2 = QMatrix::identity(2);
    CHECK(eigen_projector(id2, 1, 0) == to_cyclotomic(id2, 1));

    auto swap2 = mat({{0, 1}, {1, 0}});
    auto t = eigen_projector(swap2, 2, 1);
    QMatrix expect = mat({{1, -1}, {-1, 1}}) * Rational(1, 2);
    CHECK(t == to_cyclotomic(expect, 2));

    // Coxeter element of A2 acting on the root plane in the basis of
    // simple roots: s1*s2.
    auto cox = mat({{-1, -1}, {1, 0}});
    auto tz = eigen_projector(cox, 3, 1);
    CHECK(tz * tz == tz);
    Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
    auto gc = to_cyclotomic(cox, 3);
    CHECK(gc * tz == tz * z3);
    CHECK(tz * gc == tz * z3);
}

TEST_CASE("char poly and cyclotomic factorization") {
    auto id2 = QMatrix::identity(2);
    Poly p = char_poly(id2);
    CHECK(p == Poly({Rational(1), Rational(-2), Rational(1)}));  // (q-1)^2
    CHECK(cyclotomic_factor(p).factors == std::map<unsigned long, unsigned>{{1, 2}});

    auto swap2 = mat({{0, 1}, {1, 0}});
    CHECK(char_poly(swap2) == Poly({Rational(-1), Rational(0), Rational(1)}));
    CHECK(cyclotomic_factor(char_poly(swap2)).factors ==
          std::map<unsigned long, unsigned>{{1, 1}, {2, 1}});

    auto cox = mat({{-1, -1}, {1, 0}});
    CHECK(char_poly(cox) == Poly({Rational(1), Rational(1), Rational(1)}));  // q^2+q+1
    CHECK(cyclotomic_factor(char_poly(cox)).factors == std::map<unsigned long, unsigned>{{3, 1}});

    // (q-1)^5 (q+1)^3
    Poly big = Poly::constant(1);
    for (int i = 0; i < 5; ++i) big = big * cyclotomic_poly(1);
    for (int i = 0; i < 3; ++i) big = big * cyclotomic_poly(2);
    auto f = cyclotomic_factor(big);
    CHECK(f.factors == std::map<unsigned long, unsigned>{{1, 5}, {2, 3}});
    CHECK(f.reconstruct() == big);

    CHECK_THROWS(cyclotomic_factor(Poly({Rational(2), Rational(0), Rational(1)})));
}

TEST_CASE("cyclotomic arithmetic") {
    for (unsigned long n : {1ul, 2ul, 3ul, 4ul, 5ul, 6ul, 12ul}) {
        auto z = Cyclotomic::root_of_unity(n, 1);
        Cyclotomic p(Rational(1), n);
        for (unsigned long k = 0; k < n; ++k) {
            if (k > 0) CHECK(p != Cyclotomic(Rational(1), n));
            p *= z;
        }
        CHECK(p == Cyclotomic(Rational(1), n));
        CHECK(p.is_rational());
        if (n > 2) {
            auto a = z + Cyclotomic(Rational(2), n);
            CHECK(a * a.inverse() == Cyclotomic(Rational(1), n));
        }
    }
}

TEST_CASE("projector identities on random finite-order matrices") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        int dim = 2 + static_cast<int>(trial % 3);
        QMatrix g = random_finite_order(rng, dim);
        unsigned long n = matrix_order(g);
        auto theta = fixed_projector(g, n);
        CHECK(theta * theta == theta);
        CHECK(g * theta == theta);
        CHECK(theta * g == theta);

        auto gc = to_cyclotomic(g, n);
        CycMatrix sum(dim, dim);
        for (unsigned long k = 0; k < n; ++k) {
            auto tz = eigen_projector(g, n, static_cast<long>(k));
            CHECK(tz * tz == tz);
            Cyclotomic z = Cyclotomic::root_of_unity(n, static_cast<long>(k));
            CHECK(gc * tz == tz * z);
            sum = sum + tz;
        }
        CHECK(sum == to_cyclotomic(QMatrix::identity(dim), n));

        // char poly multiplicities match eigenspace ranks
        auto fac = cyclotomic_factor(char_poly(g));
        for (auto [d, mult] : fac.factors) {
            REQUIRE(n % d == 0);
            auto tz = eigen_projector(g, n, static_cast<long>(n / d));
            CHECK(rank(tz) == static_cast<int>(mult));
        }
    }
}
