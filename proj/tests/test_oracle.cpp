#include <doctest.h>

#include <algorithm>
#include <vector>

#include "pbundle/errors.hpp"
#include "pbundle/group_descriptor.hpp"
#include "pbundle/oracle.hpp"

using namespace pbundle;

namespace {

Int asCount(const OracleValue& v) { return std::get<Int>(v); }

CwComplex2 reversedInput(CwComplex2 m) {
    std::reverse(m.vertices.begin(), m.vertices.end());
    std::reverse(m.edges.begin(), m.edges.end());
    std::reverse(m.faces.begin(), m.faces.end());
    return m;
}

std::vector<CwComplex2> builderGrid() {
    std::vector<CwComplex2> out;
    for (long g = 0; g <= 4; ++g) out.push_back(buildOrientableSurface(g));
    for (long k = 1; k <= 4; ++k) out.push_back(buildNonOrientableSurface(k));
    for (long n = 0; n <= 4; ++n) out.push_back(buildWedgeOfCircles(n));
    return out;
}

} // namespace

TEST_SUITE("oracle") {
    TEST_CASE("homomorphism counting matches cohomology orders") {
        auto rep = h1HomCounting(buildOrientableSurface(1), cyclic(3));
        CHECK(rep.applicable);
        CHECK(rep.agreement);
        CHECK(asCount(rep.engine_value) == 9);
        CHECK(asCount(rep.oracle_value) == 9);
        CHECK(rep.subject == "H^1(Sigma_1; Z/3) order");

        rep = h1HomCounting(buildNonOrientableSurface(1), cyclic(2));
        CHECK(rep.agreement);
        CHECK(asCount(rep.oracle_value) == 2);

        rep = h1HomCounting(buildSphere(), cyclic(6));
        CHECK(rep.agreement);
        CHECK(asCount(rep.oracle_value) == 1);

        rep = h1HomCounting(buildOrientableSurface(2), cyclic(6));
        CHECK(rep.agreement);
        CHECK(asCount(rep.engine_value) == 1296);

        rep = h1HomCounting(buildWedgeOfCircles(3), cyclic(4));
        CHECK(rep.agreement);
        CHECK(asCount(rep.oracle_value) == 64);

        rep = h1HomCounting(buildNonOrientableSurface(2), canonicalize({Int(2), Int(4)}, 2));
        CHECK(rep.agreement);
    }

    TEST_CASE("homomorphism counting is spanning-tree independent") {
        CwComplex2 m;
        m.name = "T_2v";
        m.vertices = {"v", "w"};
        m.edges = {{"a1", "v", "w"}, {"a2", "w", "v"}, {"b", "v", "v"}};
        m.faces = {{"f", {{"a1", 1}, {"a2", 1}, {"b", 1}, {"a2", -1}, {"a1", -1}, {"b", -1}}}};
        m.basepoint = "v";

        auto forward = h1HomCounting(m, cyclic(3));
        CHECK(forward.agreement);
        CHECK(asCount(forward.oracle_value) == 9);

        auto backward = h1HomCounting(reversedInput(m), cyclic(3));
        CHECK(backward.agreement);
        CHECK(asCount(backward.oracle_value) == asCount(forward.oracle_value));
    }

    TEST_CASE("homomorphism counting guards") {
        CHECK_THROWS_AS(h1HomCounting(buildOrientableSurface(1), kZ), DomainError);
        CHECK_THROWS_AS(h1HomCounting(buildWedgeOfCircles(9), cyclic(8)),
                        EnumerationLimitError);
    }

    TEST_CASE("uct and direct cochain paths agree on the standard models") {
        auto reports = uctVsDirect(buildOrientableSurface(1), kZ);
        REQUIRE(reports.size() == 4);
        for (const auto& rep : reports) {
            CHECK(rep.applicable);
            CHECK(rep.agreement);
        }
        CHECK(std::get<FgAbelianGroup>(reports[1].engine_value) == freeAbelian(2));
        CHECK(std::get<FgAbelianGroup>(reports[2].engine_value) == kZ);
        CHECK(std::get<FgAbelianGroup>(reports[3].engine_value).trivial());
        CHECK(reports[0].subject == "H^0(Sigma_1; Z)");

        reports = uctVsDirect(buildNonOrientableSurface(2), kZ);
        CHECK(std::get<FgAbelianGroup>(reports[2].engine_value) == cyclic(2));
        for (const auto& rep : reports) CHECK(rep.agreement);

        reports = uctVsDirect(buildWedgeOfCircles(2), cyclic(4));
        CHECK(std::get<FgAbelianGroup>(reports[1].engine_value) ==
              canonicalize({Int(4), Int(4)}, 2));
        CHECK(std::get<FgAbelianGroup>(reports[2].engine_value).trivial());
        for (const auto& rep : reports) CHECK(rep.agreement);
    }

    TEST_CASE("class counts match closed forms when a route exists") {
        auto rep = finiteClassEnumeration(buildOrientableSurface(2), parseGroupSpec("SO(3)"));
        CHECK(rep.applicable);
        CHECK(rep.agreement);
        CHECK(asCount(rep.engine_value) == 2);
        CHECK(asCount(rep.oracle_value) == 2);

        rep = finiteClassEnumeration(buildSphere(), parseGroupSpec("SU(2)"));
        CHECK(rep.applicable);
        CHECK(rep.agreement);
        CHECK(asCount(rep.engine_value) == 1);

        rep = finiteClassEnumeration(buildNonOrientableSurface(3), parseGroupSpec("U(1)"));
        CHECK(rep.applicable);
        CHECK(rep.agreement);
        CHECK(asCount(rep.oracle_value) == 2);

        rep = finiteClassEnumeration(buildSphere(), parseGroupSpec("Z/5"));
        CHECK(rep.applicable);
        CHECK(rep.agreement);
        CHECK(asCount(rep.engine_value) == 1);

        rep = finiteClassEnumeration(buildNonOrientableSurface(1), parseGroupSpec("T^2"));
        CHECK(rep.applicable);
        CHECK(rep.agreement);
        CHECK(asCount(rep.engine_value) == 4);
    }

    TEST_CASE("class counting skips when no independent route exists") {
        // discrete group over a positive-genus surface: quotient side only
        auto rep = finiteClassEnumeration(buildOrientableSurface(2), parseGroupSpec("Z/6"));
        CHECK_FALSE(rep.applicable);

        // wedges are not closed surfaces
        rep = finiteClassEnumeration(buildWedgeOfCircles(2), parseGroupSpec("SO(3)"));
        CHECK_FALSE(rep.applicable);

        // infinite classified group
        rep = finiteClassEnumeration(buildOrientableSurface(1), parseGroupSpec("U(1)"));
        CHECK_FALSE(rep.applicable);
    }

    TEST_CASE("oracle grid: builders times catalog") {
        const std::vector<CwComplex2> spaces = builderGrid();
        const std::vector<const char*> names = {"U(1)", "SU(2)", "SU(3)", "SO(3)", "SO(5)",
                                                "Sp(1)", "Z/2", "Z/3", "Z/6", "T^2"};
        for (const auto& m : spaces) {
            for (const char* name : names) {
                auto g = parseGroupSpec(name);

                auto hom = h1HomCounting(m, g.pi0);
                CHECK_MESSAGE(hom.agreement, hom.subject);

                for (const auto& rep : uctVsDirect(m, g.pi1))
                    CHECK_MESSAGE(rep.agreement, rep.subject);
                for (const auto& rep : uctVsDirect(m, g.pi0))
                    CHECK_MESSAGE(rep.agreement, rep.subject);

                auto classes = finiteClassEnumeration(m, g);
                if (classes.applicable) CHECK_MESSAGE(classes.agreement, classes.subject);
            }
        }
    }

    TEST_CASE("oracle value rendering") {
        CHECK(renderOracleValue(OracleValue{}) == "n/a");
        CHECK(renderOracleValue(OracleValue{Int(42)}) == "42");
        CHECK(renderOracleValue(OracleValue{cyclic(2)}, true) == "Z/2");
    }
}
