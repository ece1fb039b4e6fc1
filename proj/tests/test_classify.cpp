#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parhol/classify.hpp"

#include <algorithm>

using namespace parhol;

namespace {

IsotropyDescriptor K(std::vector<DynkinType> f, int center) {
    return {std::move(f), center};
}

}  // namespace

TEST_CASE("quotient compatibility of isotropy types") {
    CHECK(quotient_compatible(K({{Family::D, 5}}, 1), K({{Family::D, 5}}, 1)));
    CHECK(quotient_compatible(K({{Family::A, 4}}, 1), K({{Family::A, 4}}, 1)));
    CHECK_FALSE(
        quotient_compatible(K({{Family::E, 6}}, 1), K({{Family::A, 5}}, 1)));
    // Killing an ideal is allowed, inventing one is not.
    CHECK(quotient_compatible(K({{Family::A, 1}}, 1),
                              K({{Family::A, 1}, {Family::A, 1}}, 2)));
    CHECK_FALSE(quotient_compatible(K({{Family::A, 1}, {Family::A, 1}}, 1),
                                    K({{Family::A, 1}}, 1)));
    CHECK_FALSE(quotient_compatible(K({}, 2), K({}, 1)));
    // Multiset, not set: two A1 factors need two on the other side.
    CHECK(quotient_compatible(K({{Family::A, 1}, {Family::A, 1}}, 1),
                              K({{Family::A, 1}, {Family::A, 1}}, 1)));
}

TEST_CASE("dimension-and-type matching against the catalog") {
    SUBCASE("no 28-dimensional space at all") {
        MatchResult r = slice_match(K({{Family::E, 6}}, 1), 28);
        CHECK(r.candidates.empty());
    }
    SUBCASE("unique 10-dimensional quadric") {
        MatchResult r = slice_match(K({{Family::D, 5}}, 1), 10);
        REQUIRE(r.candidates.size() == 1);
        CHECK(r.candidates[0] == make_quadric(10));
    }
    SUBCASE("unique 5-dimensional projective space") {
        MatchResult r = slice_match(K({{Family::A, 4}}, 1), 5);
        REQUIRE(r.candidates.size() == 1);
        CHECK(r.candidates[0] == make_cp(5));
    }
    SUBCASE("enlarging bounds only adds candidates") {
        Bounds small{8, 4, 6, 6};
        for (const auto& [k, c] :
             {std::pair{K({{Family::A, 4}}, 1), Integer(10)},
              std::pair{K({{Family::A, 1}, {Family::A, 2}}, 1), Integer(3)},
              std::pair{K({{Family::A, 2}}, 1), Integer(6)}}) {
            auto few = slice_match(k, c, small).candidates;
            auto more = slice_match(k, c).candidates;
            for (const auto& d : few)
                CHECK(std::count(more.begin(), more.end(), d) == 1);
        }
    }
}

TEST_CASE("group dimensions of isotropy descriptors") {
    CHECK(group_dim(K({{Family::A, 2}}, 1)) == 9);    // u(3)
    CHECK(group_dim(K({{Family::A, 4}}, 1)) == 25);   // u(5)
    CHECK(group_dim(K({{Family::D, 5}}, 1)) == 46);
    CHECK(group_dim(K({{Family::E, 6}}, 1)) == 79);
    CHECK(group_dim(K({{Family::B, 3}, {Family::C, 2}}, 2)) == 33);
    CHECK(group_dim(K({}, 1)) == 1);
}

TEST_CASE("submanifold descriptions") {
    Submanifold v = Submanifold::veronese(3);
    CHECK(v.codim() == 6);  // C(5,2) - 1 - 3
    CHECK(v.isotropy_group() == K({{Family::A, 2}}, 1));

    Submanifold s = Submanifold::segre(3, 5);
    CHECK(s.codim() == 8);
    CHECK(s.isotropy_group() == K({{Family::A, 1}, {Family::A, 3}}, 2));

    Submanifold f = Submanifold::first(make_eiii());
    CHECK(f.codim() == 10);
}

TEST_CASE("normal holonomy of the orbit rows") {
    CHECK(normal_holonomy(Submanifold::first(make_eiii())) ==
          make_quadric(10));
    CHECK(normal_holonomy(Submanifold::first(make_diii(5))) == make_cp(5));
    for (int n = 2; n <= 8; ++n)
        CHECK(normal_holonomy(Submanifold::veronese(n)) == make_ci(n));
    CHECK(normal_holonomy(Submanifold::veronese(1)) == make_cp(1));
    for (int n = 3; n <= 10; ++n)
        CHECK(normal_holonomy(Submanifold::first(make_quadric(n))) ==
              make_cp(1));
    CHECK(normal_holonomy(Submanifold::segre(2, 4)) == make_aiii(1, 3));
    CHECK(normal_holonomy(Submanifold::segre(5, 6)) == make_aiii(4, 5));
    CHECK(normal_holonomy(Submanifold::first(make_aiii(2, 6))) ==
          make_diii(6));
}

TEST_CASE("matching failures surface the full evidence") {
    SUBCASE("rank too high for a parallel first embedding") {
        CHECK_THROWS_AS(normal_holonomy(Submanifold::first(make_ci(3))),
                        std::invalid_argument);
    }
    SUBCASE("codimension zero") {
        CHECK_THROWS_AS(normal_holonomy(Submanifold::first(make_cp(3))),
                        std::invalid_argument);
    }
    SUBCASE("two candidates of equal dimension and compatible type") {
        // Gr_2(C^5): codim 3 matches both CP^3 and the 3-dim quadric.
        Submanifold m = Submanifold::first(make_aiii(2, 3));
        try {
            normal_holonomy(m);
            FAIL("expected a classification error");
        } catch (const ClassificationError& e) {
            CHECK(e.result.candidates.size() == 2);
            CHECK(e.result.required_dim == 3);
        }
    }
    SUBCASE("an effective-dimension certificate settles the tie") {
        Submanifold m = Submanifold::first(make_aiii(2, 3));
        CHECK(normal_holonomy(m, {}, 9) == make_cp(3));   // dim U(4)/ker = 9
        CHECK(normal_holonomy(m, {}, 4) == make_ci(2));   // dim U(2) = 4
        Submanifold p7 = Submanifold::first(make_aiii(2, 5));
        CHECK(normal_holonomy(p7, {}, 25) == make_diii(5));
        CHECK(normal_holonomy(p7, {}, 28) == make_aiii(2, 5));
    }
}

TEST_CASE("rank >= 3 exclusion scan comes back empty") {
    auto scan = exclusion_scan();
    CHECK(scan.size() == 30);
    bool saw_evii = false;
    for (const auto& [d, r] : scan) {
        CHECK(d.rank() >= 3);
        CHECK_MESSAGE(r.candidates.empty(), d.str());
        if (d == make_evii()) {
            saw_evii = true;
            CHECK(r.required_dim == 28);
        }
    }
    CHECK(saw_evii);
}

TEST_CASE("stored orbit rows") {
    CHECK(orbit_submanifold(make_evii()).str() == "EIII");
    CHECK(orbit_submanifold(make_quadric(3)).str() == "Veronese(CP^1)");
    CHECK(orbit_submanifold(make_quadric(4)).codim() == 1);
    CHECK(stored_normal_holonomy(make_evii()) == make_quadric(10));
    CHECK(stored_normal_holonomy(make_ci(5)) == make_ci(4));
    CHECK(stored_normal_holonomy(make_diii(6)) == make_quadric(6));
    CHECK(stored_normal_holonomy(make_diii(5)) == make_cp(3));
    CHECK(stored_normal_holonomy(make_aiii(3, 7)) == make_aiii(2, 6));
    CHECK_THROWS_AS(orbit_submanifold(make_cp(4)), std::invalid_argument);
}

TEST_CASE("orbit dimension counts close for every table row") {
    std::vector<HSSDescriptor> ambients = {make_evii(), make_eiii()};
    for (int n = 2; n <= 8; ++n) ambients.push_back(make_ci(n));
    for (int n = 3; n <= 12; ++n) ambients.push_back(make_quadric(n));
    for (int n = 5; n <= 12; ++n) ambients.push_back(make_diii(n));
    for (int a = 2; a <= 6; ++a)
        for (int b = a; a + b <= 12; ++b) ambients.push_back(make_aiii(a, b));
    for (const auto& d : ambients) {
        OrbitConsistency oc = orbit_consistency(d);
        CHECK_MESSAGE(oc.ok, d.str());
    }
    OrbitConsistency evii = orbit_consistency(make_evii());
    CHECK(evii.ambient_proj_dim_minus_orbit == 10);  // 27 - 1 - 16
}
