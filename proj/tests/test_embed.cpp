#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parhol/embed.hpp"

using namespace parhol;

TEST_CASE("projective dimensions of first embeddings") {
    CHECK(embedding_dim(make_cp(1), 1) == 1);   // identity embedding
    CHECK(embedding_dim(make_eiii(), 1) == 26);
    CHECK(embedding_dim(make_diii(5), 1) == 15);
    CHECK(embedding_dim(make_evii(), 1) == 55);
    CHECK(embedding_dim(make_aiii(2, 2), 1) == 5);  // Gr_2(C^4) in P^5
    CHECK_THROWS_AS(embedding_dim(make_cp(2), 0), std::invalid_argument);
}

TEST_CASE("projective space embeds by complete degree-d systems") {
    // Oracle: the d-th embedding of CP^n spans the degree-d monomials,
    // C(n+d, d) of them.
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 5; ++d)
            CHECK(embedding_dim(make_cp(n), d) == binomial(n + d, d) - 1);
    // Degree 2 in closed form: n(n+3)/2.
    for (int n = 1; n <= 8; ++n)
        CHECK(embedding_dim(make_cp(n), 2) == Integer(n) * (n + 3) / 2);
}

TEST_CASE("first-embedding codimensions of the headline spaces") {
    CHECK(first_codim(make_evii()) == 28);
    CHECK(first_codim(make_eiii()) == 10);
    CHECK(first_codim(make_ci(3)) == 7);    // 20 - 6 - 1 - 6
    CHECK(first_codim(make_diii(6)) == 16);  // 32 - 15 - 1
    CHECK(first_codim(make_aiii(2, 3)) == 3);
    CHECK(first_codim(make_aiii(2, 2)) == 1);
    for (int n = 3; n <= 12; ++n) CHECK(first_codim(make_quadric(n)) == 1);
}

TEST_CASE("Weyl-formula codimension matches the closed forms everywhere") {
    for (const auto& d : enumerate())
        CHECK_MESSAGE(first_codim(d) == closed_form_codim(d), d.str());
}

TEST_CASE("alias presentations agree on the closed forms") {
    CHECK(closed_form_codim(make_ci(2)) == closed_form_codim(make_quadric(3)));
    CHECK(closed_form_codim(make_aiii(2, 2)) ==
          closed_form_codim(make_quadric(4)));
}

TEST_CASE("embedding dimension grows strictly with degree") {
    for (const auto& d : {make_cp(3), make_aiii(2, 3), make_ci(3),
                          make_quadric(5), make_diii(5)})
        for (int deg = 1; deg < 4; ++deg)
            CHECK(embedding_dim(d, deg) < embedding_dim(d, deg + 1));
}

TEST_CASE("codimension inequalities for higher embeddings") {
    SUBCASE("odd quadric surface, degree 2") {
        IneqReport r = check_inequalities(make_quadric(3), 2);
        // Oracle: Sym^2 C^5 gives 14 sections, one quadratic relation.
        CHECK(r.n_deg == 13);
        CHECK(r.codim == 10);
        CHECK(r.star);           // 10 > 6
        CHECK(r.para0_weak);     // 10 >= 10
        CHECK(r.para0_equality);
    }
    SUBCASE("plane, degree 3") {
        IneqReport r = check_inequalities(make_cp(2), 3);
        CHECK(r.n_deg == 9);  // C(5,2) - 1
        CHECK(r.codim == 7);
        CHECK(r.star);
    }
    SUBCASE("degree-2 exceptional") {
        IneqReport r = check_inequalities(make_eiii(), 2);
        CHECK(r.n_deg == 350);
        CHECK(r.star);  // 334 > 136
        CHECK_FALSE(r.para0_weak);  // 334 < 351
    }
    SUBCASE("degree-2 Grassmannian falls below the composite-span bound") {
        IneqReport r = check_inequalities(make_aiii(2, 3), 2);
        CHECK(r.n_deg == 49);  // Sym^2 Lambda^2 C^5 minus one 5-dim piece
        CHECK(r.codim == 43);
        CHECK(r.star);
        CHECK_FALSE(r.para0_weak);  // 43 < 45
    }
    CHECK_THROWS_AS(check_inequalities(make_cp(2), 1), std::invalid_argument);
}

TEST_CASE("embedding report carries the raw integers") {
    EmbeddingReport r = embedding_report(make_eiii(), 1);
    CHECK(r.n_deg == 26);
    CHECK(r.codim == 10);
    CHECK(r.deg == 1);
}

TEST_CASE("binomials") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(40, 20) == Integer("137846528820"));
}
