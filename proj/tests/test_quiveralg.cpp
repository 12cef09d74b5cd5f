#include <doctest.h>

#include "ordcert/algebra.hpp"
#include "ordcert/errors.hpp"

using namespace ordcert;

TEST_CASE("cyclic Nakayama algebra dimensions") {
    for (int r = 1; r <= 6; ++r) {
        auto a = PathAlgebra::cyclic_nakayama(r, 10007);
        CHECK(a->dim() == r * r);
        CHECK(a->is_associative());
        CHECK(a->identity_law_holds());
        CHECK(a->is_cyclic_nakayama());
    }
}

TEST_CASE("multiplication kills length-r paths") {
    auto a = PathAlgebra::cyclic_nakayama(2, 10007);
    int e1 = a->idempotent(0);
    int m12 = a->arrow_element(0);
    int m21 = a->arrow_element(1);
    CHECK(a->mul_basis(e1, m12) == m12);
    CHECK(a->mul_basis(m12, m21) == -1);  // the cycle mu_{[1,1]} is zero
    CHECK(a->mul_basis(m12, m12) == -1);  // targets do not match
    // r = 1: the loop itself dies, dim 1
    auto k = PathAlgebra::cyclic_nakayama(1, 10007);
    CHECK(k->dim() == 1);
}

TEST_CASE("general monomial quotients") {
    // A_2 quiver: two vertices, one arrow; path algebra has dimension 3
    Quiver q;
    q.vertices = 2;
    q.arrows = {{0, 1}};
    auto a = PathAlgebra::monomial_quotient(q, {}, 10007, 10);
    CHECK(a->dim() == 3);
    CHECK(a->is_associative());
    CHECK(!a->is_cyclic_nakayama());
    // loop quiver with loop^2 = 0: dimension 2
    Quiver l;
    l.vertices = 1;
    l.arrows = {{0, 0}};
    auto dual = PathAlgebra::monomial_quotient(l, {Path{0, {0, 0}}}, 10007, 10);
    CHECK(dual->dim() == 2);
    // unbounded quotient is rejected
    CHECK_THROWS(PathAlgebra::monomial_quotient(l, {}, 10007, 50));
}

TEST_CASE("rotation automorphism") {
    auto a = PathAlgebra::cyclic_nakayama(3, 10007);
    AlgebraMap sigma = rotation_automorphism(a);
    auto ver = sigma.verify();
    CHECK(ver.ok);
    REQUIRE(ver.inverse);
    // sigma(e_3) = e_1
    Mat e3(1, a->dim(), 10007);
    e3.at(0, a->idempotent(2)) = 1;
    Mat img = sigma.apply(e3);
    CHECK(img.at(0, a->idempotent(0)) == 1);
    // sigma^r = id, sigma^k != id for 0 < k < r
    CHECK(sigma.power(3).matrix == Mat::identity(a->dim(), 10007));
    CHECK(sigma.power(1).matrix != Mat::identity(a->dim(), 10007));
    CHECK(sigma.power(2).matrix != Mat::identity(a->dim(), 10007));
    // r = 1: identity morphism
    auto k = PathAlgebra::cyclic_nakayama(1, 10007);
    CHECK(rotation_automorphism(k).matrix == Mat::identity(1, 10007));
    // non-cyclic algebras are rejected
    Quiver q;
    q.vertices = 2;
    q.arrows = {{0, 1}};
    auto l = PathAlgebra::monomial_quotient(q, {}, 10007, 10);
    CHECK_THROWS_AS(rotation_automorphism(l), NotCyclicNakayama);
}

TEST_CASE("verify_isomorphism examples") {
    auto a = PathAlgebra::cyclic_nakayama(3, 10007);
    AlgebraMap ident{a, a, Mat::identity(a->dim(), 10007)};
    CHECK(ident.verify().ok);
    auto b = PathAlgebra::cyclic_nakayama(2, 10007);
    AlgebraMap zero{b, b, Mat::zero(4, 4, 10007)};
    auto ver = zero.verify();
    CHECK(!ver.ok);
    CHECK(ver.failure == "not unital");
    // a unital but non-multiplicative map reports a failing pair
    Mat bad = Mat::identity(a->dim(), 10007);
    bad.at(a->arrow_element(0), a->arrow_element(0)) = 0;
    bad.at(a->arrow_element(0), a->arrow_element(1)) = 1;
    AlgebraMap badmap{a, a, bad};
    auto bv = badmap.verify();
    CHECK(!bv.ok);
    CHECK(bv.failing_pair.has_value());
}

TEST_CASE("radical dimension via trace form") {
    auto a = PathAlgebra::cyclic_nakayama(3, 10007);
    CHECK(radical_dimension(*a) == 9 - 3);  // paths of positive length
    auto k = PathAlgebra::cyclic_nakayama(1, 10007);
    CHECK(radical_dimension(*k) == 0);
}

TEST_CASE("radical nilpotency degree: rad^r = 0, rad^{r-1} != 0") {
    for (int r = 2; r <= 6; ++r) {
        auto a = PathAlgebra::cyclic_nakayama(r, 10007);
        // product of r - 1 consecutive arrows survives, one more kills it
        int acc = a->arrow_element(0);
        for (int k = 1; k < r - 1; ++k) {
            acc = a->mul_basis(acc, a->arrow_element(k));
            REQUIRE(acc >= 0);
        }
        CHECK(a->path_length(acc) == r - 1);
        CHECK(a->mul_basis(acc, a->arrow_element(r - 1)) == -1);
    }
}
