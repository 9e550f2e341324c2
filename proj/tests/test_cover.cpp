#include <catch2/catch_amalgamated.hpp>

#include "equimult/cover.hpp"
#include "equimult/oracle.hpp"

#include "helpers.hpp"

using namespace equimult;
using namespace eqt;

static const names_t XY = {"x", "y"};
static const names_t XYZ = {"x", "y", "z"};

TEST_CASE("noether normalization finds finite projections") {
    std::mt19937_64 rng(17);

    // cusp: already finite over k[y] with fiber x.
    auto sk = noether_normalization(qi({"x^2 - y^3"}, XY), false, rng);
    REQUIRE(sk.dim == 1);
    REQUIRE(sk.base_vars.size() == 1);
    REQUIRE(sk.fiber_vars.size() == 1);
    REQUIRE(finite_over_base(sk.transformed, sk.fiber_vars));

    // union of the axes needs a change of coordinates.
    auto sk2 = noether_normalization(qi({"x*y"}, XY), false, rng);
    REQUIRE(sk2.dim == 1);
    REQUIRE(finite_over_base(sk2.transformed, sk2.fiber_vars));

    // monomial curve: finite over k[x].
    auto sk3 = noether_normalization(qi({"y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"}, XYZ), false, rng);
    REQUIRE(sk3.dim == 1);
    REQUIRE(finite_over_base(sk3.transformed, sk3.fiber_vars));

    REQUIRE_THROWS_AS(noether_normalization(qi({"1"}, XY), false, rng), contract_error);
}

TEST_CASE("minimal polynomials of the monomial curve fibers") {
    std::mt19937_64 rng(17);
    auto cov = build_cover_with_base(qi({"y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"}, XYZ), {0}, rng);
    REQUIRE(cov.base_vars == std::vector<unsigned>{0});
    REQUIRE(cov.fiber_vars == (std::vector<unsigned>{1, 2}));
    REQUIRE(cov.min_polys.size() == 2);
    // y: Z^3 - x^4; z: Z^3 - x^5.
    REQUIRE(cov.min_polys[0].degree == 3);
    REQUIRE(cov.min_polys[0].f == qp("y^3 - x^4", XYZ));
    REQUIRE(cov.min_polys[1].degree == 3);
    REQUIRE(cov.min_polys[1].f == qp("z^3 - x^5", XYZ));
    REQUIRE(cov.D == 9);
    REQUIRE(cov.rank == 3);
}

TEST_CASE("minimal polynomial of a simple radical extension") {
    names_t Vy = {"V", "y"};
    std::mt19937_64 rng(17);
    auto cov = build_cover_with_base(mkI<qq>({"V^2 - y"}, Vy, Q()), {1}, rng);
    REQUIRE(cov.min_polys.size() == 1);
    REQUIRE(cov.min_polys[0].degree == 2);
    REQUIRE(cov.min_polys[0].f == qp("V^2 - y", Vy));
    REQUIRE(cov.rank == 2);
    REQUIRE(cov.D == 2);
}

TEST_CASE("minimal polynomial of a general fiber element") {
    names_t Vy = {"V", "y"};
    auto I = mkI<qq>({"V^2 - y"}, Vy, Q());
    // theta = V^2 has minimal polynomial Z - y.
    auto c1 = minimal_polynomial_of_element(I, {1}, qp("V^2", Vy));
    REQUIRE(c1.size() == 2);  // degree 1
    REQUIRE(c1[0] == -qp("y", Vy));
    // theta = y V: (yV)^2 = y^3, so Z^2 - y^3.
    auto c2 = minimal_polynomial_of_element(I, {1}, qp("y*V", Vy));
    REQUIRE(c2.size() == 3);
    REQUIRE(c2[0] == -qp("y^3", Vy));
    REQUIRE(c2[1].is_zero());
}

TEST_CASE("generic rank with specialization cross-checks") {
    std::mt19937_64 rng(17);
    names_t yV = {"y", "V"};
    auto I1 = mkI<qq>({"V^2 - y"}, yV, Q());
    REQUIRE(generic_rank(I1, {0}, {1}, rng) == 2);

    names_t y12V12 = {"y1", "y2", "V1", "V2"};
    auto I2 = mkI<qq>({"V1^2 - y1", "V2^3 - y2"}, y12V12, Q());
    REQUIRE(generic_rank(I2, {0, 1}, {2, 3}, rng) == 6);
}

TEST_CASE("ci approximation of the monomial curve has rank 9") {
    std::mt19937_64 rng(17);
    auto cov = build_cover_with_base(qi({"y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"}, XYZ), {0}, rng);
    auto ci = ci_approximation(cov);
    REQUIRE(ci.D == 9);
    REQUIRE(ci.ci_ideal.gens().size() == 2);
    // freeness: generic rank of the CI equals D exactly
    std::mt19937_64 rng2(18);
    REQUIRE(generic_rank(ci.ci_ideal, cov.base_vars, cov.fiber_vars, rng2) == 9);
}

TEST_CASE("a dropped relation separates B from its CI approximation") {
    // B = S[V,W]/(V^2 - y^2, W - V) sits inside B' = S[V,W]/(V^2 - y^2, W^2 - y^2).
    names_t yVW = {"y", "V", "W"};
    std::mt19937_64 rng(17);
    auto cov = build_cover_with_base(mkI<qq>({"V^2 - y^2", "W - V"}, yVW, Q()), {0}, rng);
    REQUIRE(cov.min_polys.size() == 2);
    REQUIRE(cov.min_polys[0].degree == 2);  // V^2 - y^2
    REQUIRE(cov.min_polys[1].degree == 2);  // W^2 - y^2
    REQUIRE(cov.D == 4);
    REQUIRE(cov.rank == 2);  // rank of B is smaller than D

    auto ci = ci_approximation(cov);
    REQUIRE(ci.D == 4);
    std::mt19937_64 rng2(18);
    REQUIRE(generic_rank(ci.ci_ideal, cov.base_vars, cov.fiber_vars, rng2) == 4);
}

TEST_CASE("theorem-16 locus ideals") {
    // V^2 - y w: the multiplicity-2 locus is the origin of (V, y, w).
    names_t Vyw = {"V", "y", "w"};
    std::mt19937_64 rng(17);
    auto cov = build_cover_with_base(mkI<qq>({"V^2 - y*w"}, Vyw, Q()), {1, 2}, rng);
    auto ci = ci_approximation(cov);
    auto L = theorem16_locus(ci);
    REQUIRE(ideal_dimension(L) == 0);

    // per-factor strata: <V1^2 - y1^2, V2^2 - y2^2>.
    names_t v1y1v2y2 = {"y1", "y2", "V1", "V2"};
    auto cov2 = build_cover_with_base(
        mkI<qq>({"V1^2 - y1^2", "V2^2 - y2^2"}, v1y1v2y2, Q()), {0, 1}, rng);
    auto ci2 = ci_approximation(cov2);
    auto L2 = theorem16_locus(ci2);
    // zero set over GF(3): V(V1, y1) ∩ V(V2, y2) = origin
    std::vector<poly<fp>> g3;
    for (const auto& g : L2.gens()) g3.push_back(reduce_mod_p(g, 3));
    auto pts = enumerate_points(ideal<fp>(4, GF(3), g3));
    REQUIRE(pts.points.size() == 1);
    for (const auto& c : pts.points[0]) REQUIRE(c.is_zero());
}

TEST_CASE("locus equality F_n(B) = F_D(B') = stratum zero set over GF(q)") {
    std::mt19937_64 rng(17);

    // B = B' = <V^2 - y w> over GF(5): trivial equality.
    names_t Vyw = {"V", "y", "w"};
    auto cov1 = build_cover_with_base(mkI<fp>({"V^2 - y*w"}, Vyw, GF(5)), {1, 2}, rng);
    auto ci1 = ci_approximation(cov1);
    auto r1 = verify_locus_equality(cov1, ci1);
    REQUIRE(r1.pass);
    REQUIRE(r1.top_B.size() == 1);  // just the origin

    // monomial curve vs its CI over GF(7): all three sets are the origin.
    auto cov2 = build_cover_with_base(
        mkI<fp>({"y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"}, XYZ, GF(7)), {0}, rng);
    auto ci2 = ci_approximation(cov2);
    REQUIRE(cov2.rank == 3);
    REQUIRE(ci2.D == 9);
    auto r2 = verify_locus_equality(cov2, ci2);
    REQUIRE(r2.pass);
    REQUIRE(r2.top_B.size() == 1);

    // the two-fiber pair over GF(5).
    names_t yVW = {"y", "V", "W"};
    auto cov3 = build_cover_with_base(mkI<fp>({"V^2 - y^2", "W - V"}, yVW, GF(5)), {0}, rng);
    auto ci3 = ci_approximation(cov3);
    auto r3 = verify_locus_equality(cov3, ci3);
    REQUIRE(r3.pass);
}

TEST_CASE("multiplicity bound and top-stratum injectivity over GF(q)") {
    std::mt19937_64 rng(17);
    auto cov = build_cover_with_base(
        mkI<fp>({"y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"}, XYZ, GF(7)), {0}, rng);
    auto t = enumerate_points(cov.relation);
    std::vector<std::vector<fp>> top;
    for (const auto& p : t.points) {
        auto m = mult_oracle(cov.relation, p).multiplicity;
        REQUIRE(m <= cov.rank);  // Prop 4.2 1i
        if (m == cov.rank) top.push_back(p);
    }
    // Prop 4.2 1ii: base projection injective on the top stratum.
    std::vector<std::vector<fp>> images;
    for (const auto& p : top) {
        std::vector<fp> img;
        for (unsigned b : cov.base_vars) img.push_back(p[b]);
        REQUIRE(std::find(images.begin(), images.end(), img) == images.end());
        images.push_back(img);
    }
}

TEST_CASE("dimension drop check (Lemma 5.7 shape)") {
    std::mt19937_64 rng(17);
    names_t y12V = {"y1", "y2", "V"};

    auto cov = build_cover_with_base(mkI<fp>({"V^2 - y1*y2"}, y12V, GF(7)), {0, 1}, rng);
    auto ci = ci_approximation(cov);

    // g_b = y1^2 - y2^3 is monic of degree 2 in y1; hypothesis (a) holds and
    // the top strata match.
    auto gb = P<fp>("y1^2 - y2^3", y12V, GF(7));
    auto r = dimension_drop_check(cov, ci, gb);
    REQUIRE(r.hypothesis_a_holds);
    REQUIRE(r.b == 2);
    REQUIRE(r.sets_equal);
    REQUIRE(r.pass);

    // degenerate: g_b of order 1 everywhere has empty F_2(H_b).
    auto bad = P<fp>("y1^2 - y2", y12V, GF(7));
    auto r2 = dimension_drop_check(cov, ci, bad);
    REQUIRE(!r2.hypothesis_a_holds);
    REQUIRE(!r2.pass);

    // non-reduced g_b = y1^2: F_2 = V(y1), hypothesis holds, check runs.
    auto sq = P<fp>("y1^2", y12V, GF(7));
    auto r3 = dimension_drop_check(cov, ci, sq);
    REQUIRE(r3.hypothesis_a_holds);

    // g_b with a fiber variable is a contract violation.
    REQUIRE_THROWS_AS(dimension_drop_check(cov, ci, P<fp>("V^2 - y1", y12V, GF(7))),
                      contract_error);
}
