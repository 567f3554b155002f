#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace tst;

TEST_CASE("ring and euclidean operations") {
    auto F5 = F(5);
    CHECK(gcd_poly(P(F5, "x^2-1"), P(F5, "x-1")) == P(F5, "x+4"));
    auto [q, r] = divmod(P(F5, "x^3"), P(F5, "x^2"));
    CHECK(q == P(F5, "x"));
    CHECK(r.is_zero());
    auto F2 = F(2);
    CHECK(gcd_poly(P(F2, "x^2+x+1"), P(F2, "x^2+1")) == Poly::one(F2));
    CHECK_THROWS_AS(divmod(P(F5, "x"), Poly::zero(F5)), error);
    CHECK_THROWS_AS(P(F5, "x") + P(F2, "x"), error);

    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        auto Fq = t % 2 ? F5 : F(3, 2);
        Poly a = random_poly(Fq, 1 + rng.below(8), rng);
        Poly b = random_poly(Fq, 1 + rng.below(6), rng);
        auto [qq, rr] = divmod(a, b);
        CHECK(qq * b + rr == a);
        CHECK(rr.degree() < b.degree());
        Poly g = gcd_poly(a, b);
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
    }
}

TEST_CASE("derivative") {
    auto F3 = F(3);
    CHECK(derivative(P(F3, "x^3")).is_zero());
    CHECK(derivative(P(F3, "x^3+x")) == Poly::one(F3));
    CHECK(derivative(P(F3, "2")).is_zero());
}

TEST_CASE("compose and iterate") {
    auto F3 = F(3);
    Poly f = P(F3, "x^3+2*x+1");
    CHECK(compose(f, Poly::x(F3)) == f);
    CHECK(compose(P(F3, "x^2"), P(F3, "x^2+1")) == P(F3, "x^4+2*x^2+1"));
    CHECK(compose(P(F3, "x+1"), P(F3, "x^2")) == P(F3, "x^2+1"));
    CHECK(iterate_poly(P(F3, "x^2"), 0) == Poly::x(F3));
    CHECK(iterate_poly(P(F3, "x^2+1"), 2) == P(F3, "x^4+2*x^2+2"));
    CHECK(iterate_poly(P(F3, "x^2"), 3) == P(F3, "x^8"));
    CHECK_THROWS_AS(iterate_poly(P(F3, "x^2"), 20), error);  // past the default cap
}

TEST_CASE("factor anchors") {
    auto F3 = F(3);
    Factorization a = factor(P(F3, "x^2+1"));
    CHECK(a.factors.size() == 1);
    CHECK(a.factors[0].first == P(F3, "x^2+1"));
    CHECK(a.factors[0].second == 1);

    Factorization b = factor(P(F3, "x^4+1"));
    REQUIRE(b.factors.size() == 2);
    CHECK(b.factors[0].first == P(F3, "x^2+x+2"));
    CHECK(b.factors[1].first == P(F3, "x^2+2*x+2"));

    auto F2 = F(2);
    Factorization c = factor(P(F2, "x^2+1"));
    REQUIRE(c.factors.size() == 1);
    CHECK(c.factors[0].first == P(F2, "x+1"));
    CHECK(c.factors[0].second == 2);

    CHECK_THROWS_AS(factor(Poly::one(F2)), error);
}

TEST_CASE("factor reconstructs random inputs") {
    // the invariant itself is enforced inside factor(); run the sweep and
    // spot-check canonical shape
    std::vector<FieldPtr> fields{F(2), F(3), F(2, 2), F(5), F(7), F(3, 2)};
    Rng rng(2024);
    for (int t = 0; t < 1000; ++t) {
        const FieldPtr& Fq = fields[t % fields.size()];
        Poly a = random_poly(Fq, 1 + rng.below(40), rng);
        Factorization fz = factor(a, rng.next());
        CHECK(fz.leading == a.leading());
        for (size_t i = 0; i < fz.factors.size(); ++i) {
            CHECK(fz.factors[i].first.is_monic());
            if (i) CHECK(poly_cmp(fz.factors[i - 1].first, fz.factors[i].first) < 0);
        }
    }
}

TEST_CASE("factor output is seed independent") {
    std::vector<FieldPtr> fields{F(3), F(2, 2), F(5)};
    Rng rng(99);
    for (int t = 0; t < 60; ++t) {
        const FieldPtr& Fq = fields[t % fields.size()];
        Poly a = random_poly(Fq, 2 + rng.below(24), rng);
        CHECK(factorization_to_string(factor(a, 1)) == factorization_to_string(factor(a, 2)));
    }
}

TEST_CASE("squarefree part") {
    auto F2 = F(2);
    CHECK(squarefree_part(P(F2, "x^2+1")) == P(F2, "x+1"));
    CHECK(squarefree_part(compose(P(F2, "x^2"), P(F2, "x^2+x+1"))) == P(F2, "x^2+x+1"));
    auto F3 = F(3);
    CHECK(squarefree_part(P(F3, "x^4+1")) == P(F3, "x^4+1"));
    // radical equals the product of the distinct factors
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
        auto Fq = t % 2 ? F3 : F2;
        Poly a = random_poly(Fq, 2 + rng.below(14), rng);
        Poly rad = squarefree_part(a);
        Poly prod = Poly::one(Fq);
        for (const auto& [h, e] : factor(a).factors) prod = prod * h;
        CHECK(rad == prod);
    }
}

TEST_CASE("irreducibility") {
    auto F2 = F(2);
    CHECK(is_irreducible(P(F2, "x^2+x+1")));
    CHECK_FALSE(is_irreducible(P(F2, "x^2+1")));
    // Frobenius preserves irreducibility over F_4
    auto F4 = F(2, 2);
    Rng rng(41);
    for (int t = 0; t < 40; ++t) {
        Poly f = random_irreducible(F4, 1 + rng.below(4), rng);
        CHECK(is_irreducible(frobenius_poly(f, 1)));
    }
    // consistency with factor()
    for (int t = 0; t < 100; ++t) {
        Poly a = random_poly(F4, 1 + rng.below(8), rng);
        Factorization fz = factor(a);
        bool irr = fz.factors.size() == 1 && fz.factors[0].second == 1;
        CHECK(is_irreducible(a) == irr);
    }
}

TEST_CASE("poly_order") {
    auto F3 = F(3);
    CHECK(poly_order(P(F3, "x+1")) == 2);
    CHECK(poly_order(P(F3, "x+2")) == 1);  // x - 1
    auto F2 = F(2);
    CHECK(poly_order(P(F2, "x^2+x+1")) == 3);
    CHECK_THROWS_AS(poly_order(P(F2, "x^2+x")), error);
    CHECK_THROWS_AS(poly_order(Poly::one(F2)), error);

    // against the incremental oracle, and against the lcm-of-root-orders route
    std::vector<FieldPtr> fields{F(2), F(3), F(5)};
    Rng rng(53);
    for (int t = 0; t < 120; ++t) {
        const FieldPtr& Fq = fields[t % fields.size()];
        Poly a = random_poly(Fq, 1 + rng.below(8), rng);
        if (a.constant_term().is_zero()) continue;
        u64 ord = poly_order(a);
        CHECK(ord == oracle_order_incremental(a, 200000));
        u64 lcm_route = 1, numax = 1;
        for (const auto& [h, e] : factor(a).factors) {
            auto [ext, emb] = extend(Fq, (u32)h.degree());
            FieldElem root = roots_in_field(embed_poly(h, emb)).front();
            lcm_route = lcm_u64_checked(lcm_route, mult_order(root));
            numax = std::max(numax, e);
        }
        if (numax > 1) lcm_route *= pow_u64_checked(Fq->p, ceil_log(Fq->p, numax));
        CHECK(ord == lcm_route);
    }
}

TEST_CASE("int_order") {
    CHECK(int_order(3, 4) == 2);
    CHECK(int_order(3, 16) == 4);
    CHECK(int_order(12, 1) == 1);
    CHECK_THROWS_AS(int_order(6, 4), error);
}

TEST_CASE("frobenius_poly") {
    auto F5 = F(5);
    Poly f = P(F5, "2*x^3+x+4");
    CHECK(frobenius_poly(f, 3) == f);
    auto F4 = F(2, 2);
    Poly g = Poly::x(F4) + Poly::monomial(F4, 0, gen_elem(F4));
    Poly gf = frobenius_poly(g, 1);
    CHECK(gf == Poly::x(F4) + Poly::monomial(F4, 0, gen_elem(F4) * gen_elem(F4)));
    CHECK(frobenius_poly(gf, -1) == g);
}

TEST_CASE("coprime compositions stay coprime") {
    // gcd(F1 o G, F2 o G) = 1 for coprime F1, F2
    std::vector<FieldPtr> fields{F(2), F(3), F(2, 2)};
    Rng rng(67);
    int done = 0;
    while (done < 60) {
        const FieldPtr& Fq = fields[done % fields.size()];
        Poly f1 = random_poly(Fq, 1 + rng.below(6), rng);
        Poly f2 = random_poly(Fq, 1 + rng.below(6), rng);
        if (gcd_poly(f1, f2).degree() != 0) continue;
        Poly g = random_poly(Fq, 1 + rng.below(3), rng);
        CHECK(gcd_poly(compose(f1, g), compose(f2, g)).degree() == 0);
        ++done;
    }
}

TEST_CASE("pth root") {
    // cubing is the Frobenius on F_9[x], so the p-th root recovers the input
    auto F9 = F(3, 2);
    Rng rng(71);
    for (int t = 0; t < 40; ++t) {
        Poly a = random_poly(F9, 1 + rng.below(6), rng);
        CHECK(pth_root_poly(a * a * a) == a);
    }
}
