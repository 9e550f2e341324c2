#include <catch2/catch_amalgamated.hpp>

#include "equimult/local_invariants.hpp"
#include "equimult/oracle.hpp"
#include "equimult/strata.hpp"

#include "helpers.hpp"

using namespace equimult;
using namespace eqt;

static const names_t XY = {"x", "y"};
static const names_t XYZ = {"x", "y", "z"};

TEST_CASE("hypersurface stratum ideals") {
    // cusp, e = 2: zero set is the origin over Q.
    auto f = qp("x^2 - y^3", XY);
    auto S = hypersurface_stratum_ideal(f, 2);
    // gens: f, 2x, -3y^2 up to order
    REQUIRE(S.gens().size() == 3);
    REQUIRE(ideal_dimension(S) == 0);

    // cusp cylinder in 3 vars: zero set is the z-axis.
    auto f3 = qp("x^2 - y^3", XYZ);
    auto S3 = hypersurface_stratum_ideal(f3, 2);
    auto p5 = reduce_mod_p(S3.gens()[0], 5);
    // check over GF(5): zero set = V(x, y)
    std::vector<poly<fp>> gens5;
    for (const auto& g : S3.gens()) gens5.push_back(reduce_mod_p(g, 5));
    ideal<fp> S5(3, GF(5), gens5);
    auto pts = enumerate_points(S5);
    REQUIRE(pts.points.size() == 5);
    for (const auto& p : pts.points) {
        REQUIRE(p[0].is_zero());
        REQUIRE(p[1].is_zero());
    }

    // GF(2) umbrella relative: only the Hasse derivative in z survives.
    auto g = P<fp>("x^2 + y^2*z", XYZ, GF(2));
    auto Sg = hypersurface_stratum_ideal(g, 2);
    ideal<fp> Sg2(3, GF(2), Sg.gens());
    auto pts2 = enumerate_points(Sg2);
    for (const auto& p : pts2.points) {
        REQUIRE(p[0].is_zero());
        REQUIRE(p[1].is_zero());
    }
    REQUIRE(pts2.points.size() == 2);
    // the point (0,0,a) really has order 2
    REQUIRE(order_at_point(g, {fp(2, 0), fp(2, 0), fp(2, 1)}) == 2);
}

TEST_CASE("stratum zero sets characterize order exactly (exhaustive over GF(5))") {
    std::vector<std::string> hyps = {"x^2 - y^3", "x^2 - y^2*z", "x^2*y", "x^3 - y*z^2"};
    for (const auto& hs : hyps) {
        auto f = P<fp>(hs, XYZ, GF(5));
        for (unsigned e = 1; e <= 3; ++e) {
            auto S = hypersurface_stratum_ideal(f, e);
            std::vector<fp> pt(3, fp(5, 0));
            for (unsigned a = 0; a < 5; ++a)
                for (unsigned b = 0; b < 5; ++b)
                    for (unsigned c = 0; c < 5; ++c) {
                        pt[0] = fp(5, a);
                        pt[1] = fp(5, b);
                        pt[2] = fp(5, c);
                        bool on_stratum = true;
                        for (const auto& gg : S.gens())
                            if (!gg.evaluate(pt).is_zero()) {
                                on_stratum = false;
                                break;
                            }
                        bool order_ge = !f.evaluate(pt).is_zero() ? false
                                                                  : order_at_point(f, pt) >= e;
                        if (!f.evaluate(pt).is_zero()) order_ge = false;
                        REQUIRE(on_stratum == order_ge);
                    }
        }
    }
}

TEST_CASE("max multiplicity locus of a hypersurface") {
    auto [e1, L1] = max_multiplicity_locus_hypersurface(qp("x^2 - y^3", XY));
    REQUIRE(e1 == 2);
    REQUIRE(ideal_dimension(L1) == 0);

    auto [e2, L2] = max_multiplicity_locus_hypersurface(qp("x", XY));
    REQUIRE(e2 == 1);

    auto [e3, L3] = max_multiplicity_locus_hypersurface(qp("x^2 - y^2*z", XYZ));
    REQUIRE(e3 == 2);
    // locus = z-axis: dimension 1 and contains (0,0,*)
    REQUIRE(ideal_dimension(L3) == 1);

    REQUIRE_THROWS_AS(max_multiplicity_locus_hypersurface(qp("3", XY)), contract_error);
}

TEST_CASE("cone stratum: basic subspaces") {
    std::mt19937_64 rng(5);

    auto c1 = cone_stratum(qi({"x^2"}, XYZ), rng);
    REQUIRE(c1.stratum.dim() == 2);
    REQUIRE(c1.tau == 1);
    REQUIRE(c1.max_mult == 2);

    auto c2 = cone_stratum(qi({"x^2 - y^2"}, XYZ), rng);
    REQUIRE(c2.tau == 2);
    REQUIRE(c2.stratum.dim() == 1);
    REQUIRE(c2.max_mult == 2);
    // stratum is the z-axis
    REQUIRE(c2.stratum.contains_point({qq(0L), qq(0L), qq(5L)}));

    // non-homogeneous input is rejected
    REQUIRE_THROWS_AS(cone_stratum(qi({"x^2 - y^3"}, XY), rng), contract_error);
}

TEST_CASE("cone stratum over small prime fields") {
    std::mt19937_64 rng(5);

    // (x + y)^2 over GF(2): tau = 1, stratum = V(x + y).
    auto c = cone_stratum(mkI<fp>({"x^2 + y^2"}, XYZ, GF(2)), rng);
    REQUIRE(c.tau == 1);
    REQUIRE(c.max_mult == 2);
    REQUIRE(c.stratum.contains_point({fp(2, 1), fp(2, 1), fp(2, 0)}));
    REQUIRE(c.stratum.contains_point({fp(2, 0), fp(2, 0), fp(2, 1)}));

    // x^3 + y^3 + z^3 = (x + y + z)^3 over GF(3): tau = 1.
    auto c3 = cone_stratum(mkI<fp>({"x^3 + y^3 + z^3"}, XYZ, GF(3)), rng);
    REQUIRE(c3.tau == 1);
    REQUIRE(c3.max_mult == 3);
    REQUIRE(c3.stratum.contains_point({fp(3, 1), fp(3, 1), fp(3, 1)}));
}

TEST_CASE("cone stratum of the monomial-curve cone is the thickened axis") {
    // in-cone of the (3,4,5) curve: <y^2 - xz, yz, z^2>; the algebra is free
    // of rank 3 over k[x], so the whole x-axis is multiplicity 3.
    std::mt19937_64 rng(5);
    auto J = qi({"y^2 - x*z", "y*z", "z^2"}, XYZ);
    auto c = cone_stratum(J, rng);
    REQUIRE(c.max_mult == 3);
    REQUIRE(c.tau == 2);
    REQUIRE(c.stratum.contains_point({qq(1L), qq(0L), qq(0L)}));

    // oracle cross-check over GF(7): the multiplicity-3 points are exactly
    // the stratum's rational points.
    auto J7 = mkI<fp>({"y^2 - x*z", "y*z", "z^2"}, XYZ, GF(7));
    auto t = stratify_points(J7);
    std::uint64_t maxm = 0;
    for (auto m : t.mults) maxm = std::max(maxm, m);
    REQUIRE(maxm == 3);
    std::mt19937_64 rng7(5);
    auto c7 = cone_stratum(J7, rng7);
    for (std::size_t i = 0; i < t.points.size(); ++i) {
        bool in_stratum = c7.stratum.contains_point(t.points[i]);
        REQUIRE(in_stratum == (t.mults[i] == maxm));
    }
}

TEST_CASE("cone stratum points carry the top multiplicity (sampled invariant)") {
    std::mt19937_64 rng(5);
    std::vector<std::vector<std::string>> cones = {{"x^2"}, {"x^2 - y^2"}, {"x^2", "y^2"}};
    for (const auto& gens : cones) {
        auto J5 = mkI<fp>(gens, XYZ, GF(5));
        auto c = cone_stratum(J5, rng);
        auto t = stratify_points(J5);
        for (std::size_t i = 0; i < t.points.size(); ++i)
            if (c.stratum.contains_point(t.points[i])) REQUIRE(t.mults[i] == c.max_mult);
    }
}

TEST_CASE("translation invariance subspaces") {
    // <x^2>: translations along y and z fix it.
    auto W1 = translation_invariance_subspace(qi({"x^2"}, XYZ), false);
    REQUIRE(W1.dim() == 2);
    REQUIRE(W1.contains_point({qq(0L), qq(1L), qq(2L)}));
    REQUIRE(!W1.contains_point({qq(1L), qq(0L), qq(0L)}));

    // <x^2 - y^2>: only z-translations fix both lines.
    auto W2 = translation_invariance_subspace(qi({"x^2 - y^2"}, XYZ), false);
    REQUIRE(W2.dim() == 1);
    REQUIRE(W2.contains_point({qq(0L), qq(0L), qq(3L)}));

    // GF(2) umbrella <x^2 + y^2 z>: the oracle says no nonzero translation
    // fixes sqrt(J); the subspace is {0}.
    auto J = mkI<fp>({"x^2 + y^2*z"}, XYZ, GF(2));
    auto W3 = translation_invariance_subspace(J, false);
    // independent brute-force oracle over GF(2)^3
    std::vector<std::vector<fp>> invariant;
    for (unsigned a = 0; a < 2; ++a)
        for (unsigned b = 0; b < 2; ++b)
            for (unsigned c = 0; c < 2; ++c) {
                std::vector<fp> v = {fp(2, a), fp(2, b), fp(2, c)};
                bool ok = true;
                for (const auto& g : J.gens())
                    if (!radical_membership(g.translated(v), J)) {
                        ok = false;
                        break;
                    }
                if (ok) invariant.push_back(v);
            }
    REQUIRE(invariant.size() == 1);  // only the zero vector
    REQUIRE(W3.dim() == 0);
}

TEST_CASE("translation invariance of the thickened-axis cone needs the radical filter") {
    // sqrt-filtered input: the reduced cone <y, z> is invariant along x.
    auto Wred = translation_invariance_subspace(qi({"y", "z"}, XYZ), false);
    REQUIRE(Wred.dim() == 1);
    REQUIRE(Wred.contains_point({qq(1L), qq(0L), qq(0L)}));
}

TEST_CASE("cone stratum agrees with translation invariance on the corpus") {
    std::mt19937_64 rng(5);
    // (cone gens, sqrt-filtered gens for the invariance route)
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> rows = {
        {{"x^2"}, {"x"}},
        {{"x^2 - y^2"}, {"x^2 - y^2"}},
        {{"x^2", "y^2"}, {"x", "y"}},
        {{"x^2 - y*z"}, {"x^2 - y*z"}},
        {{"y^2 - x*z", "y*z", "z^2"}, {"y", "z"}},
    };
    for (const auto& [cone_gens, red_gens] : rows) {
        auto c = cone_stratum(qi(cone_gens, XYZ), rng);
        auto W = translation_invariance_subspace(qi(red_gens, XYZ), false);
        REQUIRE(c.stratum == W);
    }
}

TEST_CASE("factorization check") {
    std::mt19937_64 rng(5);

    auto J1 = qi({"x^2"}, XYZ);
    auto c1 = cone_stratum(J1, rng);
    REQUIRE(factorization_check(J1, c1.stratum));

    auto J2 = qi({"x^2 - y^2"}, XYZ);
    REQUIRE(factorization_check(J2, cone_stratum(J2, rng).stratum));

    // <x^2 - yz> with S = {0} is vacuously true ...
    auto J3 = qi({"x^2 - y*z"}, XYZ);
    subspace<qq> origin_only = subspace<qq>::from_cutting_forms(
        3, Q(), {{qq(1L), qq(0L), qq(0L)}, {qq(0L), qq(1L), qq(0L)}, {qq(0L), qq(0L), qq(1L)}});
    REQUIRE(factorization_check(J3, origin_only));
    // ... but V(x, y) (the z-axis) does not act on it.
    subspace<qq> z_axis = subspace<qq>::from_cutting_forms(
        3, Q(), {{qq(1L), qq(0L), qq(0L)}, {qq(0L), qq(1L), qq(0L)}});
    REQUIRE(!factorization_check(J3, z_axis));
}

TEST_CASE("factorization passes for every corpus cone with its computed stratum") {
    std::mt19937_64 rng(5);
    std::vector<std::vector<std::string>> cones = {
        {"x^2"}, {"x^2 - y^2"}, {"x^2", "y^2"}, {"x^2 - y*z"}, {"y^2 - x*z", "y*z", "z^2"}};
    for (const auto& gens : cones) {
        auto J = qi(gens, XYZ);
        auto c = cone_stratum(J, rng);
        REQUIRE(factorization_check(J, c.stratum));
    }
}

TEST_CASE("subspace sum closure: S1 and S2 acting imply S1 + S2 acting") {
    names_t XYZW = {"x", "y", "z", "w"};
    auto J = qi({"x^2"}, XYZW);
    subspace<qq> Sy = subspace<qq>::from_spanning_points(
        4, Q(), {{qq(0L), qq(1L), qq(0L), qq(0L)}});
    subspace<qq> Sz = subspace<qq>::from_spanning_points(
        4, Q(), {{qq(0L), qq(0L), qq(1L), qq(0L)}});
    REQUIRE(factorization_check(J, Sy));
    REQUIRE(factorization_check(J, Sz));
    REQUIRE(factorization_check(J, Sy + Sz));
}

TEST_CASE("pointwise stratum comparison reports containments") {
    // B' = <V^2 - y^2, W^2 - y^2> contains B = <V^2 - y^2, W - V>; top strata
    // coincide at the origin.
    names_t yVW = {"y", "V", "W"};
    auto Bp = mkI<fp>({"V^2 - y^2", "W^2 - y^2"}, yVW, GF(5));
    auto B = mkI<fp>({"V^2 - y^2", "W - V"}, yVW, GF(5));
    auto r = pointwise_stratum_compare(Bp, B);
    REQUIRE(!r.same_support);     // B' has the extra sheets W = -V
    REQUIRE(r.max1_subset_max2);  // F_4(B') = {0} = F_2(B)
    REQUIRE(r.max2_subset_max1);
}

TEST_CASE("HS prefixes are constant along the computed stratum (sampled)") {
    // Thm-6.7-style pointwise check: stratum points share the origin's
    // Hilbert-Samuel prefix on the reduced cone.
    auto J = mkI<fp>({"x^2 - y^2"}, XYZ, GF(5));
    std::mt19937_64 rng(5);
    auto c = cone_stratum(J, rng);
    auto origin_prefix = hs_oracle_prefix(J, {fp(5, 0), fp(5, 0), fp(5, 0)}, 5);
    for (unsigned t = 0; t < 5; ++t) {
        std::vector<fp> p = {fp(5, 0), fp(5, 0), fp(5, t)};
        REQUIRE(c.stratum.contains_point(p));
        REQUIRE(hs_oracle_prefix(J, p, 5) == origin_prefix);
    }
}
