#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <map>
#include <set>
#include <vector>

#include "maxcurves/stabilizer.hpp"
#include "maxcurves/util.hpp"

using namespace maxcurves;

namespace {

// order oracle: iterated composition, nothing clever
std::uint64_t naive_order(const HermitianStabilizer& H, const StabilizerElement& s) {
    StabilizerElement t = s;
    std::uint64_t k = 1;
    while (!t.is_identity()) {
        t = H.compose(t, s);
        ++k;
        REQUIRE(k <= H.order());
    }
    return k;
}

bool satisfies_membership(const HermitianStabilizer& H, const StabilizerElement& s) {
    return s.c.pow(H.Q()) + s.c == s.b.pow(H.Q() + 1);
}

// breadth-first closure of unitary matrices modulo scalars
using MatKey = std::array<std::uint64_t, 9>;

MatKey canonical_key(const Field& F, const Mat3& M) {
    int ref = -1;
    for (int i = 0; i < 9 && ref < 0; ++i)
        if (!M.e[i].is_zero()) ref = i;
    Elem lam = M.e[ref].inv();
    MatKey k{};
    for (int i = 0; i < 9; ++i) k[i] = F.index(lam * M.e[i]);
    return k;
}

std::vector<Mat3> projective_closure(const HermitianStabilizer& H, std::vector<Mat3> gens,
                                     std::size_t cap) {
    const Field& F = H.field();
    std::set<MatKey> seen;
    std::vector<Mat3> out;
    std::vector<Mat3> queue{mat_identity(F)};
    seen.insert(canonical_key(F, queue[0]));
    out.push_back(queue[0]);
    while (!queue.empty()) {
        Mat3 cur = queue.back();
        queue.pop_back();
        for (const Mat3& g : gens) {
            Mat3 nxt = mat_mul(cur, g);
            if (seen.insert(canonical_key(F, nxt)).second) {
                REQUIRE(out.size() < cap);
                out.push_back(nxt);
                queue.push_back(nxt);
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("compose: diagonal squares, identity law, shear cancellation") {
    HermitianStabilizer H(2);
    const Field& F = H.field();
    Elem w = F.gen();  // multiplicative order 3 in F_4

    StabilizerElement diag = H.make(w, F.zero(), F.zero());
    CHECK(H.compose(diag, diag) == H.make(w * w, F.zero(), F.zero()));

    StabilizerElement id = H.identity();
    H.for_each([&](const StabilizerElement& s) {
        CHECK(H.compose(s, id) == s);
        CHECK(H.compose(id, s) == s);
    });

    // [1,w,c1] o [1,w,c2] has y-part y: the b components cancel in char 2,
    // and the c component is c1 + c2 + w^Q w = c1 + c2 + 1
    auto fiber = H.trace_fiber(w.pow(3));
    REQUIRE(fiber.size() == 2);
    StabilizerElement s1 = H.make(F.one(), w, fiber[0]);
    StabilizerElement s2 = H.make(F.one(), w, fiber[1]);
    StabilizerElement prod = H.compose(s1, s2);
    CHECK(prod.b.is_zero());
    CHECK(prod.c == fiber[0] + fiber[1] + F.one());
    CHECK(satisfies_membership(H, prod));
}

TEST_CASE("closure under composition, exhaustive for Q=2") {
    HermitianStabilizer H(2);
    auto all = H.enumerate();
    REQUIRE(all.size() == 24);
    for (const auto& s1 : all)
        for (const auto& s2 : all) {
            StabilizerElement prod = H.compose(s1, s2);
            CHECK(satisfies_membership(H, prod));
            CHECK(!prod.a.is_zero());
        }
}

TEST_CASE("closure and associativity on strided triples for Q=3,4") {
    for (std::uint64_t Q : {3, 4}) {
        CAPTURE(Q);
        HermitianStabilizer H(Q);
        auto all = H.enumerate();
        REQUIRE(all.size() == H.order());
        for (std::size_t i = 0; i < all.size(); i += 17)
            for (std::size_t j = 3; j < all.size(); j += 41) {
                const auto& s1 = all[i];
                const auto& s2 = all[j];
                CHECK(satisfies_membership(H, H.compose(s1, s2)));
                const auto& s3 = all[(i * j + 7) % all.size()];
                CHECK(H.compose(H.compose(s1, s2), s3) == H.compose(s1, H.compose(s2, s3)));
            }
    }
}

TEST_CASE("inverse law") {
    for (std::uint64_t Q : {2, 3}) {
        HermitianStabilizer H(Q);
        H.for_each([&](const StabilizerElement& s) {
            CHECK(H.compose(s, H.inverse(s)).is_identity());
            CHECK(H.compose(H.inverse(s), s).is_identity());
        });
    }
}

TEST_CASE("element orders: examples and oracle agreement") {
    HermitianStabilizer H2(2);
    const Field& F2 = H2.field();
    CHECK(H2.element_order(H2.identity()) == 1);

    // translation [1,0,c], c != 0, has order 2 in characteristic 2
    auto kernel = H2.trace_fiber(F2.zero());
    REQUIRE(kernel.size() == 2);
    for (const Elem& c : kernel)
        if (!c.is_zero()) CHECK(H2.element_order(H2.make(F2.one(), F2.zero(), c)) == 2);

    CHECK(H2.element_order(H2.make(F2.gen(), F2.zero(), F2.zero())) == 3);

    for (std::uint64_t Q : {2, 3}) {
        HermitianStabilizer H(Q);
        H.for_each([&](const StabilizerElement& s) {
            std::uint64_t ord = H.element_order(s);
            CHECK(ord == naive_order(H, s));
            CHECK(H.order() % ord == 0);
        });
    }
}

TEST_CASE("enumeration yields exactly Q^3(Q^2-1) distinct elements") {
    std::map<std::uint64_t, std::uint64_t> expected{{2, 24}, {3, 216}, {4, 960}};
    for (auto [Q, n] : expected) {
        HermitianStabilizer H(Q);
        const Field& F = H.field();
        std::set<std::array<std::uint64_t, 3>> seen;
        H.for_each([&](const StabilizerElement& s) {
            seen.insert({F.index(s.a), F.index(s.b), F.index(s.c)});
        });
        CHECK(seen.size() == n);
    }
    HermitianStabilizer big(4);
    CHECK_THROWS_AS(big.enumerate(100), BudgetExceededError);
}

TEST_CASE("artin formula: the five cases") {
    HermitianStabilizer H(2);
    const Field& F = H.field();
    Elem w = F.gen();

    ArtinValue torus = H.artin_formula(H.make(w, F.zero(), F.zero()));
    CHECK(torus.value == 3);  // Q+1
    CHECK(torus.case_tag == ArtinCase::Torus);

    for (const Elem& c : H.trace_fiber(F.zero()))
        if (!c.is_zero()) {
            ArtinValue t = H.artin_formula(H.make(F.one(), F.zero(), c));
            CHECK(t.value == 4);  // Q+2
            CHECK(t.case_tag == ArtinCase::Translation);
        }

    auto fiber = H.trace_fiber(w.pow(3));
    ArtinValue shear = H.artin_formula(H.make(F.one(), w, fiber[0]));
    CHECK(shear.value == 2);
    CHECK(shear.case_tag == ArtinCase::Shear);

    CHECK_THROWS_AS(H.artin_formula(H.identity()), InvalidArgumentError);

    // mixed order: [w, b, c] with nontrivial wild part has order 6 here
    bool found_mixed = false;
    H.for_each([&](const StabilizerElement& s) {
        if (!s.a.is_one() && H.element_order(s) % 2 == 0) {
            ArtinValue v = H.artin_formula(s);
            CHECK(v.value == 1);
            CHECK(v.case_tag == ArtinCase::MixedOrder);
            found_mixed = true;
        }
    });
    CHECK(found_mixed);
}

TEST_CASE("fixed-point oracle: torus fixes the y=0 line, generic fixes the origin") {
    HermitianStabilizer H2(2);
    const Field& F2 = H2.field();
    // [w,0,0] fixes infinity plus the 2 affine points with y = 0
    CHECK(H2.artin_fixed_point_count(H2.make(F2.gen(), F2.zero(), F2.zero())) == 3);

    // Q=3: diagonal of multiplicative order 8 (divides Q^2-1, not Q+1) fixes
    // only the origin and infinity
    HermitianStabilizer H3(3);
    const Field& F3 = H3.field();
    bool found = false;
    for (const Elem& a : H3.base_elements()) {
        if (a.is_zero()) continue;
        StabilizerElement s = H3.make(a, F3.zero(), F3.zero());
        if (H3.element_order(s) == 8) {
            CHECK(H3.artin_fixed_point_count(s) == 2);
            found = true;
        }
    }
    CHECK(found);

    // misuse: wild elements are rejected
    for (const Elem& c : H2.trace_fiber(F2.zero()))
        if (!c.is_zero())
            CHECK_THROWS_AS(H2.artin_fixed_point_count(H2.make(F2.one(), F2.zero(), c)),
                            InvalidArgumentError);
}

TEST_CASE("wild valuation oracle") {
    HermitianStabilizer H(2);
    const Field& F = H.field();
    Elem w = F.gen();
    auto fiber = H.trace_fiber(w.pow(3));
    CHECK(H.artin_wild_valuation(H.make(F.one(), w, fiber[0])) == 2);
    for (const Elem& c : H.trace_fiber(F.zero()))
        if (!c.is_zero()) {
            CHECK(H.artin_wild_valuation(H.make(F.one(), F.zero(), c)) == 4);  // Q+2
        }
    CHECK_THROWS_AS(H.artin_wild_valuation(H.make(w, F.zero(), F.zero())),
                    InvalidArgumentError);
    CHECK_THROWS_AS(H.artin_wild_valuation(H.identity()), InvalidArgumentError);
}

TEST_CASE("formula agrees with the matching oracle on every element, Q=2,3") {
    for (std::uint64_t Q : {2, 3}) {
        CAPTURE(Q);
        HermitianStabilizer H(Q);
        std::set<std::uint64_t> values;
        H.for_each([&](const StabilizerElement& s) {
            if (s.is_identity()) return;
            std::uint64_t i = H.artin_formula(s).value;
            values.insert(i);
            std::uint64_t oracle =
                s.a.is_one() ? H.artin_wild_valuation(s) : H.artin_fixed_point_count(s);
            CHECK(i == oracle);
        });
        // spectrum inside the stabilizer: 0 never occurs, 3 only as Q+1
        for (std::uint64_t v : values) {
            bool ok = v == 1 || v == 2 || v == Q + 1 || v == Q + 2;
            CHECK(ok);
        }
    }
}

TEST_CASE("census matches the subgroup-chain structure") {
    // counts per value derived from the group structure: Q-1 translations,
    // Q^3-Q shears, Q^3 torus-conjugates, Q(Q^3-Q^2) mixed-order elements,
    // (Q^2-Q-2)Q^3 tame-generic elements
    for (std::uint64_t Q : {2, 3}) {
        CAPTURE(Q);
        HermitianStabilizer H(Q);
        auto census = H.artin_census();
        std::map<std::uint64_t, std::uint64_t> expected;
        expected[1] = Q * (Q * Q * Q - Q * Q);
        expected[2] = (Q * Q * Q - Q) + (Q * Q - Q - 2) * Q * Q * Q;
        expected[Q + 1] += Q * Q * Q;
        expected[Q + 2] += Q - 1;
        CHECK(census == expected);

        // weighted sum: the quotient by the full stabilizer is rational, so
        // sum i(s) = (2g-2 of the curve) + 2|H|
        std::uint64_t weighted = 0, total = 0;
        for (auto [v, n] : census) {
            weighted += v * n;
            total += n;
        }
        CHECK(total == H.order() - 1);
        CHECK(weighted == (Q - 2) * (Q + 1) + 2 * H.order());
    }
}

TEST_CASE("census worker partitioning is deterministic") {
    HermitianStabilizer H(3);
    auto one = H.artin_census(1);
    CHECK(one == H.artin_census(2));
    CHECK(one == H.artin_census(5));
}

TEST_CASE("conjugation leaves the artin value unchanged") {
    HermitianStabilizer H(3);
    auto all = H.enumerate();
    for (std::size_t i = 1; i < all.size(); i += 23) {
        for (std::size_t j = 5; j < all.size(); j += 67) {
            const auto& s = all[i];
            if (s.is_identity()) continue;
            const auto& t = all[j];
            StabilizerElement conj = H.compose(H.compose(t, s), H.inverse(t));
            CHECK(H.artin_formula(conj).value == H.artin_formula(s).value);
        }
    }
}

TEST_CASE("stabilizer matrices preserve the form and round-trip") {
    HermitianStabilizer H(2);
    H.for_each([&](const StabilizerElement& s) {
        Mat3 m = to_matrix(H, s);
        CHECK(preserves_hermitian_form(H, m));
        auto back = stabilizer_from_matrix(H, m);
        REQUIRE(back.has_value());
        CHECK(*back == s);
    });
    CHECK(preserves_hermitian_form(H, swap_infinity(H.field())));

    // a matrix that scales one isotropic coordinate only is not unitary
    Mat3 bad = mat_identity(H.field());
    bad.at(0, 0) = H.field().gen();
    CHECK(!preserves_hermitian_form(H, bad));
    CHECK_THROWS_AS(classify_general(H, bad), InvalidArgumentError);
    CHECK_THROWS_AS(classify_general(H, mat_identity(H.field())), InvalidArgumentError);
}

TEST_CASE("classify_general agrees with the formula on embedded stabilizer elements") {
    for (std::uint64_t Q : {2, 3}) {
        CAPTURE(Q);
        HermitianStabilizer H(Q, 3);
        H.for_each([&](const StabilizerElement& s) {
            if (s.is_identity()) return;
            GeneralArtin g = classify_general(H, to_matrix(H, s));
            CHECK(g.fixed_degree == 1);
            CHECK(g.artin.value == H.artin_formula(s).value);
        });
    }
}

TEST_CASE("classify_general is invariant under conjugation by the swap symmetry") {
    HermitianStabilizer H(2, 3);
    Mat3 W = swap_infinity(H.field());
    H.for_each([&](const StabilizerElement& s) {
        if (s.is_identity()) return;
        Mat3 conj = mat_mul(mat_mul(W, to_matrix(H, s)), mat_inverse(W));
        CHECK(classify_general(H, conj).artin.value == H.artin_formula(s).value);
    });
}

TEST_CASE("full projective unitary group census for Q=2") {
    HermitianStabilizer H(2, 3);
    std::vector<Mat3> gens;
    H.for_each([&](const StabilizerElement& s) { gens.push_back(to_matrix(H, s)); });
    gens.push_back(swap_infinity(H.field()));
    auto group = projective_closure(H, gens, 1000);
    REQUIRE(group.size() == 216);  // (Q^3+1) Q^3 (Q^2-1)

    // Global value multiset, derived by orbit counting from the stabilizer
    // census (each class counted through the points it fixes) plus the sum
    // rule degR = 2|G| + (2g-2) for the rational quotient:
    //   mixed 72, shear 54, translation 9, torus 24, degree-three 48, free 8
    std::map<std::uint64_t, std::uint64_t> census;
    Mat3 id = mat_identity(H.field());
    for (const Mat3& m : group) {
        if (mat_proportional(m, id)) continue;
        ++census[classify_general(H, m).artin.value];
    }
    std::map<std::uint64_t, std::uint64_t> expected{{0, 8}, {1, 72}, {2, 54}, {3, 72}, {4, 9}};
    CHECK(census == expected);
}

TEST_CASE("order-7 elements of PGU(3,3) fix a degree-three orbit") {
    HermitianStabilizer H(3, 3);
    const Field& F = H.field();
    // two elements generating the stabilizer, plus the swap
    Elem prim = F.zero();
    for (const Elem& a : H.base_elements()) {
        if (a.is_zero()) continue;
        StabilizerElement d = H.make(a, F.zero(), F.zero());
        if (H.element_order(d) == 8) {
            prim = a;
            break;
        }
    }
    REQUIRE(!prim.is_zero());
    Elem b0 = F.zero();
    for (const Elem& b : H.base_elements())
        if (!b.is_zero()) {
            b0 = b;
            break;
        }
    Mat3 g1 = to_matrix(H, H.make(prim, F.zero(), F.zero()));
    Mat3 g2 = to_matrix(H, H.make(F.one(), b0, H.trace_fiber(b0.pow(4))[0]));
    auto group = projective_closure(H, {g1, g2, swap_infinity(F)}, 7000);
    REQUIRE(group.size() == 6048);

    bool found7 = false;
    std::map<std::uint64_t, std::uint64_t> census;
    for (const Mat3& m : group) {
        if (mat_proportional(m, mat_identity(F))) continue;
        GeneralArtin g = classify_general(H, m);
        ++census[g.artin.value];
        if (!found7 && projective_order(H, m, 200) == 7) {
            // 7 = Q^2 - Q + 1; such elements fix exactly one orbit of
            // degree three over F_{3^6}
            CHECK(g.artin.value == 3);
            CHECK(g.artin.case_tag == ArtinCase::DegreeThree);
            CHECK(g.fixed_degree == 3);
            found7 = true;
        }
    }
    CHECK(found7);
    // orbit counting from the stabilizer census plus the rational-quotient
    // sum rule, as for Q=2
    std::map<std::uint64_t, std::uint64_t> expected{{0, 378}, {1, 1512}, {2, 2184},
                                                    {3, 1728}, {4, 189},  {5, 56}};
    CHECK(census == expected);
}
