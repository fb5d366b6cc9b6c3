#include <doctest.h>

#include <algorithm>
#include <set>

#include "kerind/ring.hpp"

using namespace kerind;

TEST_CASE("ring construction and sizes") {
    CHECK(Ring::parse("Z/12").size() == 12);
    CHECK(Ring::parse("(Z/4)[x]/(x^2+x+1)").size() == 16);
    CHECK(Ring::parse("Z/2 x Z/2").size() == 4);
    CHECK(Ring::parse("F4").size() == 4);
    CHECK(Ring::parse("F9").size() == 9);
    CHECK(Ring::parse("F8").size() == 8);
    CHECK(Ring::zero_ring().size() == 1);
    CHECK(Ring::zero_ring().is_zero_ring());

    CHECK_THROWS_AS(Ring::parse("Z/1"), std::invalid_argument);
    CHECK_THROWS_AS(Ring::parse("(Z/4)[x]/(2x^2+1)"), std::invalid_argument);  // not monic
    CHECK_THROWS_AS(Ring::parse("Z/100000"), std::invalid_argument);           // bound
    CHECK_THROWS_AS(Ring::parse("F6"), std::invalid_argument);  // not a prime power
}

TEST_CASE("unit groups") {
    Ring z12 = Ring::parse("Z/12");
    std::vector<Elem> u = z12.units();
    std::vector<Elem> expect;
    for (Elem e = 0; e < 12; ++e) {
        Elem v = Elem((std::uint64_t(e) * 1) % 12);
        for (Elem w = 0; w < 12; ++w)
            if ((std::uint64_t(e) * w) % 12 == 1) {
                expect.push_back(v);
                break;
            }
    }
    CHECK(u == expect);
    CHECK(u.size() == 4);  // {1, 5, 7, 11}

    CHECK(Ring::parse("F4").units().size() == 3);
    CHECK(Ring::parse("F9").units().size() == 8);

    Ring dual = Ring::parse("(Z/3)[x]/(x^2)");
    CHECK(dual.units().size() == 6);  // a + bx with a != 0

    // inverse tables really invert
    for (Elem e : dual.units()) CHECK(dual.mul(e, *dual.inverse(e)) == dual.one());
}

TEST_CASE("nilradical") {
    Ring z12 = Ring::parse("Z/12");
    std::vector<Elem> nil = z12.nilradical().elements();
    CHECK(nil.size() == 2);  // {0, 6}
    CHECK(std::binary_search(nil.begin(), nil.end(), z12.of_int(6)));

    CHECK(Ring::parse("F9").nilradical().elements().size() == 1);

    Ring dual = Ring::parse("(Z/3)[x]/(x^2)");
    CHECK(dual.nilradical().elements().size() == 3);  // the ideal (x)
}

TEST_CASE("maximal ideals") {
    Ring z12 = Ring::parse("Z/12");
    const auto& ms = z12.maximal_ideals();
    REQUIRE(ms.size() == 2);
    std::multiset<std::uint64_t> residues{ms[0].residue_size, ms[1].residue_size};
    CHECK(residues == std::multiset<std::uint64_t>{2, 3});

    Ring f9 = Ring::parse("F9");
    REQUIRE(f9.maximal_ideals().size() == 1);
    CHECK(f9.maximal_ideals()[0].ideal.is_zero_ideal());

    Ring split = Ring::parse("(Z/2)[x]/(x^2+x)");  // isomorphic to F2 x F2
    CHECK(split.maximal_ideals().size() == 2);

    CHECK_THROWS_AS(Ring::zero_ring().maximal_ideals(), std::domain_error);
}

TEST_CASE("maximal ideal structure properties") {
    for (const char* desc : {"Z/12", "(Z/3)[x]/(x^2)", "F4", "Z/2 x Z/2", "(Z/2)[x]/(x^2+x)",
                             "Z/3 x (Z/3)[x]/(x^2)", "(Z/4)[x]/(x^2+x+1)"}) {
        CAPTURE(desc);
        Ring s = Ring::parse(desc);
        // units and nonunits partition; every nonunit lies in some maximal ideal
        const auto& units = s.units();
        const auto& ms = s.maximal_ideals();
        for (Elem e = 0; e < s.size(); ++e) {
            const bool is_u = std::binary_search(units.begin(), units.end(), e);
            bool in_max = false;
            for (const auto& m : ms) in_max = in_max || m.ideal.contains(e);
            CHECK(is_u != in_max);
        }
        // nilradical = intersection of maximal ideals
        Ideal inter = ms[0].ideal;
        for (std::size_t i = 1; i < ms.size(); ++i) inter = Ideal::intersect(inter, ms[i].ideal);
        CHECK(inter == s.nilradical());
    }
}

TEST_CASE("quotients") {
    Ring dual = Ring::parse("(Z/3)[x]/(x^2)");
    QuotientRing q = dual.quotient(dual.nilradical());
    CHECK(q.ring.size() == 3);

    // quotient by the zero ideal is the ring itself
    QuotientRing qz = dual.quotient(Ideal(dual, {}));
    CHECK(qz.ring.size() == dual.size());

    Ring z12 = Ring::parse("Z/12");
    QuotientRing q3 = z12.quotient(Ideal(z12, {z12.of_int(3)}));
    CHECK(q3.ring.size() == 3);

    // quotient by the unit ideal is the zero ring
    QuotientRing q0 = z12.quotient(Ideal(z12, {z12.one()}));
    CHECK(q0.ring.is_zero_ring());

    // projection followed by the section is the identity on labels
    for (Elem e = 0; e < q3.ring.size(); ++e) CHECK(q3.proj[q3.section[e]] == e);
    // and the section picks the least representative
    for (Elem e = 0; e < z12.size(); ++e) CHECK(q3.section[q3.proj[e]] <= e);
}

TEST_CASE("element coordinates round-trip") {
    Ring s = Ring::parse("Z/4 x (Z/3)[x]/(x^2)");
    CHECK(s.size() == 36);
    CHECK(s.additive_moduli() == std::vector<long>{4, 3, 3});
    for (Elem e = 0; e < s.size(); ++e) {
        CHECK(s.coords_elem(s.elem_coords(e)) == e);
        CHECK(s.from_coeffs(s.coeffs(e)) == e);
    }
    // coordinates express addition componentwise
    for (Elem a = 0; a < s.size(); ++a)
        for (Elem b = 0; b < s.size(); ++b) {
            auto ca = s.elem_coords(a), cb = s.elem_coords(b);
            std::vector<long> sum(ca.size());
            for (std::size_t i = 0; i < ca.size(); ++i) sum[i] = ca[i] + cb[i];
            CHECK(s.coords_elem(sum) == s.add(a, b));
        }
}

TEST_CASE("element printing") {
    Ring dual = Ring::parse("(Z/3)[x]/(x^2)");
    CHECK(dual.elem_str(dual.zero()) == "0");
    CHECK(dual.elem_str(dual.one()) == "1");
    Ring pair = Ring::parse("Z/2 x Z/2");
    CHECK(pair.elem_str(pair.one()) == "(1, 1)");
}

TEST_CASE("ideal closure") {
    Ring z12 = Ring::parse("Z/12");
    Ideal i(z12, {z12.of_int(8)});  // gcd(8,12) = 4 generates (4)
    CHECK(i.elements().size() == 3);
    CHECK(i.contains(z12.of_int(4)));
    CHECK_FALSE(i.is_unit_ideal());
    Ideal u(z12, {z12.of_int(5)});
    CHECK(u.is_unit_ideal());
    CHECK(u.elements().size() == 12);
}
