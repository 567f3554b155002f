#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "iterfact/verify.hpp"

using namespace tst;

namespace {

std::string report_digest(const CheckReport& rep) {
    std::ostringstream out;
    out << rep.name << '|' << rep.inputs << '|' << rep.skipped << '|' << rep.skip_reason;
    for (const auto& [k, v] : rep.witness) out << '|' << k << '=' << v;
    for (const auto& a : rep.assertions)
        out << '|' << a.description << ';' << a.bound << ';' << a.observed << ';' << a.pass;
    return out.str();
}

}  // namespace

TEST_CASE("multiplicity bounds checker") {
    auto F3 = F(3);
    CheckReport a = check_multiplicity_bounds(P(F3, "x^2+1"), P(F3, "x^2"), 3);
    CHECK(a.pass());

    // h = 1, d = 2: the lower bound is 2^n and it bites
    auto F2 = F(2);
    CheckReport b = check_multiplicity_bounds(P(F2, "x+1"), P(F2, "x^4+x^2+1"), 2);
    CHECK(b.pass());
    CHECK(b.witness.at("h") == "1");
    IterProfile deep = profile_direct(P(F2, "x+1"), P(F2, "x^4+x^2+1"), 2);
    CHECK(deep.min_mult >= 4);

    CHECK_THROWS_AS(check_multiplicity_bounds(P(F2, "x^2"), P(F2, "x^4"), 2), error);
    // a critical component must also be rejected: f = (x-1)(x-2), g = 3(x-1)^2+1
    auto F5 = F(5);
    Poly f = P(F5, "x+4") * P(F5, "x+3");
    CHECK_THROWS_AS(check_multiplicity_bounds(f, P(F5, "3*x^2+4*x+4"), 2), error);
}

TEST_CASE("delta witness") {
    auto F3 = F(3);
    auto [w, rep] = delta_constant_witness(P(F3, "x+1"), P(F3, "x^2"), 6);
    CHECK(rep.pass());
    CHECK(w.i <= 3);
    CHECK(w.i == w.j + w.M);
    CHECK(w.constant == Rational(1, (i64)pow_u64_checked(2, w.i)));

    auto [w2, rep2] = delta_constant_witness(P(F3, "x^2+x+2"), P(F3, "x^2+1"), 4);
    CHECK(rep2.pass());

    // p-critical pair is rejected
    auto F2 = F(2);
    CHECK_THROWS_AS(delta_constant_witness(P(F2, "x^3+x+1"), P(F2, "x^2+1"), 2), error);
}

TEST_CASE("max degree growth checker") {
    auto F3 = F(3);
    CheckReport rep = check_max_degree_growth(P(F3, "x+1"), P(F3, "x^2"), 5);
    CHECK(rep.pass());
    CheckReport rep2 = check_max_degree_growth(P(F3, "x^2+x+2"), P(F3, "x^2+1"), 3);
    CHECK(rep2.pass());
}

TEST_CASE("min degree equivalences checker") {
    auto F7 = F(7);
    CheckReport a = check_min_degree_equivalences(P(F7, "x+5"), P(F7, "x^2"), 5);
    CHECK(a.pass());
    CHECK(a.witness.at("periodic_root") == "true");

    auto F3 = F(3);
    CheckReport b = check_min_degree_equivalences(P(F3, "x+1"), P(F3, "x^2"), 5);
    CHECK(b.pass());
    CHECK(b.witness.at("periodic_root") == "false");
    CHECK(b.witness.at("strictly_increased_in_window") == "true");

    CheckReport c = check_min_degree_equivalences(Poly::x(F3), P(F3, "x^2"), 4);
    CHECK(c.pass());
    CHECK(c.witness.at("periodic_root") == "true");
}

TEST_CASE("remark dichotomy checker") {
    auto F3 = F(3);
    CheckReport rep = check_remark_dichotomy(P(F3, "x+1"), P(F3, "x^2"), 5);
    CHECK(rep.pass());
    CHECK_FALSE(rep.skipped);
}

TEST_CASE("closed form checker") {
    auto F3 = F(3);
    CheckReport mono =
        check_closed_forms(ClosedFormKind::monomial, P(F3, "x+1"), 2, Poly::one(F3), 3);
    CHECK(mono.pass());

    auto F2 = F(2);
    CheckReport lin =
        check_closed_forms(ClosedFormKind::linearized, P(F2, "x^2+x+1"), 0, P(F2, "x+1"), 1);
    CHECK(lin.pass());
    // the n = 0 row compares both sides against the plain profile of f
    CHECK(lin.assertions.front().pass);
}

TEST_CASE("reports are reproducible") {
    auto F3 = F(3);
    CheckReport a1 = check_multiplicity_bounds(P(F3, "x^2+1"), P(F3, "x^2"), 3, 20000, 1);
    CheckReport a2 = check_multiplicity_bounds(P(F3, "x^2+1"), P(F3, "x^2"), 3, 20000, 2);
    CHECK(report_digest(a1) == report_digest(a2));

    auto [w1, r1] = delta_constant_witness(P(F3, "x+1"), P(F3, "x^2"), 4, 16, 20000, 1);
    auto [w2, r2] = delta_constant_witness(P(F3, "x+1"), P(F3, "x^2"), 4, 16, 20000, 2);
    CHECK(report_digest(r1) == report_digest(r2));
}
