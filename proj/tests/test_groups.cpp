#include <doctest.h>

#include "pbundle/errors.hpp"
#include "pbundle/group_descriptor.hpp"
#include "pbundle/json_io.hpp"

using namespace pbundle;

TEST_SUITE("groups") {
    TEST_CASE("catalog atoms resolve") {
        auto u1 = parseGroupSpec("U(1)");
        CHECK(u1.pi0.trivial());
        CHECK(u1.pi1 == kZ);
        CHECK(u1.satisfiesHypotheses());
        CHECK(u1.provenance == Provenance::Catalog);

        CHECK(parseGroupSpec("U(3)").pi1 == kZ);
        CHECK(parseGroupSpec("SU(2)").pi1.trivial());
        CHECK(parseGroupSpec("SU(4)").pi0.trivial());
        CHECK(parseGroupSpec("Sp(1)").pi1.trivial());
        CHECK(parseGroupSpec("Sp(2)").pi1.trivial());
        CHECK(parseGroupSpec("SO(3)").pi1 == cyclic(2));
        CHECK(parseGroupSpec("SO(5)").pi1 == cyclic(2));
        CHECK(parseGroupSpec("SO(6)").pi1 == cyclic(2));
        CHECK(parseGroupSpec("T^2").pi1 == freeAbelian(2));
        CHECK(parseGroupSpec("T^1").pi1 == kZ);

        auto z6 = parseGroupSpec("Z/6");
        CHECK(z6.pi0 == cyclic(6));
        CHECK(z6.pi1.trivial());
        CHECK(z6.pi0_discrete);

        CHECK(parseGroupSpec("Z").pi0 == kZ);
        CHECK(parseGroupSpec("Z/1").pi0.trivial());
        CHECK(parseGroupSpec("0").pi0.trivial());
        CHECK(parseGroupSpec("0").pi1.trivial());
        CHECK(parseGroupSpec("  U(1)  ").name == "U(1)");
    }

    TEST_CASE("rejected names") {
        CHECK_THROWS_AS(parseGroupSpec("SU(1)"), ParseError);
        CHECK_THROWS_AS(parseGroupSpec("U(0)"), ParseError);
        CHECK_THROWS_AS(parseGroupSpec("Sp(0)"), ParseError);
        CHECK_THROWS_AS(parseGroupSpec("SO(1)"), ParseError);
        CHECK_THROWS_AS(parseGroupSpec("SO(2)"), ParseError);
        CHECK_THROWS_AS(parseGroupSpec("SO(4)"), ParseError);
        CHECK_THROWS_AS(parseGroupSpec("O(3)"), ParseError);
        CHECK_THROWS_AS(parseGroupSpec("T^0"), ParseError);
        CHECK_THROWS_AS(parseGroupSpec("Z/0"), ParseError);
        CHECK_THROWS_AS(parseGroupSpec(""), ParseError);
        CHECK_THROWS_AS(parseGroupSpec("  "), ParseError);
        CHECK_THROWS_AS(parseGroupSpec("E8"), ParseError);
        CHECK_THROWS_AS(parseGroupSpec("U(2) x"), ParseError);
        CHECK_THROWS_AS(parseGroupSpec("x U(2)"), ParseError);
        CHECK_THROWS_AS(parseGroupSpec("Z/-3"), ParseError);
    }

    TEST_CASE("SO(4) rejection names the workaround") {
        try {
            parseGroupSpec("SO(4)");
            FAIL("SO(4) accepted");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("explicit") != std::string::npos);
        }
    }

    TEST_CASE("products") {
        auto g = parseGroupSpec("U(1) x SO(3)");
        CHECK(g.pi0.trivial());
        CHECK(g.pi1 == directSum(kZ, cyclic(2)));
        CHECK(g.provenance == Provenance::Product);
        CHECK(g.name == "U(1) x SO(3)");

        CHECK(parseGroupSpec("Z/2 x Z/3").pi0 == cyclic(6));
        CHECK(parseGroupSpec("Z/2 x Z/2").pi0 == canonicalize({Int(2), Int(2)}, 2));
        CHECK(parseGroupSpec("U(1)xSO(3)").pi1 == parseGroupSpec("U(1) x SO(3)").pi1);
        CHECK(parseGroupSpec("U(2) x SU(3) x T^2").pi1 == freeAbelian(3));

        auto ab = productDescriptor(parseGroupSpec("U(1)"), parseGroupSpec("Z/4"));
        auto ba = productDescriptor(parseGroupSpec("Z/4"), parseGroupSpec("U(1)"));
        CHECK(ab.pi0 == ba.pi0);
        CHECK(ab.pi1 == ba.pi1);
        CHECK(ab.satisfiesHypotheses());
    }

    TEST_CASE("explicit descriptors") {
        auto g = parseGroupSpec(
            R"({"pi0": {"free_rank": 0, "factors": [2]}, "pi1": {"free_rank": 0, "factors": [2]}})");
        CHECK(g.pi0 == cyclic(2));
        CHECK(g.pi1 == cyclic(2));
        CHECK(g.satisfiesHypotheses());
        CHECK(g.provenance == Provenance::Explicit);

        auto h = parseGroupSpec(
            R"({"pi0": {"free_rank": 0, "factors": []}, "pi1": {"free_rank": 0, "factors": []},
                "trivial_action": false, "name": "twisted"})");
        CHECK_FALSE(h.trivial_action);
        CHECK_FALSE(h.satisfiesHypotheses());
        CHECK(h.name == "twisted");

        auto na = parseGroupSpec(
            R"({"pi0": {"free_rank": 0, "factors": [6]}, "pi1": {"free_rank": 0, "factors": []},
                "pi0_abelian": false})");
        CHECK_FALSE(na.pi0_abelian);

        // non-canonical factor lists are canonicalized on entry
        auto c = parseGroupSpec(
            R"({"pi0": {"free_rank": 0, "factors": [2, 3]}, "pi1": {"free_rank": 0, "factors": []}})");
        CHECK(c.pi0 == cyclic(6));

        CHECK_THROWS_AS(parseGroupSpec(R"({"pi0": {"free_rank": 0, "factors": []}})"), ParseError);
        CHECK_THROWS_AS(parseGroupSpec(R"({"pi0": 3, "pi1": 4})"), ParseError);
        CHECK_THROWS_AS(
            parseGroupSpec(
                R"({"pi0": {"free_rank": 0, "factors": []}, "pi1": {"free_rank": 0, "factors": []}, "volume": 7})"),
            ParseError);
        CHECK_THROWS_AS(parseGroupSpec("{not json"), ParseError);
        CHECK_THROWS_AS(
            parseGroupSpec(
                R"({"pi0": {"free_rank": -1, "factors": []}, "pi1": {"free_rank": 0, "factors": []}})"),
            ParseError);
        CHECK_THROWS_AS(
            parseGroupSpec(
                R"({"pi0": {"free_rank": 0, "factors": [0]}, "pi1": {"free_rank": 0, "factors": []}})"),
            ParseError);
    }

    TEST_CASE("covering quotient") {
        auto g = coveringQuotient(cyclic(2));
        CHECK(g.pi0.trivial());
        CHECK(g.pi1 == cyclic(2));
        CHECK(g.satisfiesHypotheses());
        CHECK(g.provenance == Provenance::CoveringQuotient);
        CHECK_THROWS_AS(coveringQuotient(kZ), DomainError);
    }

    TEST_CASE("catalog table") {
        auto entries = catalogEntries();
        CHECK(entries.size() >= 8);
        bool sawU = false;
        for (const auto& e : entries)
            if (e.family == "U(n)") {
                sawU = true;
                CHECK(e.pi1 == "Z");
            }
        CHECK(sawU);
    }

    TEST_CASE("parse round-trips catalog names") {
        for (const char* name : {"U(1)", "U(7)", "SU(2)", "SO(3)", "SO(5)", "Sp(3)", "T^2",
                                 "Z/2", "Z/60", "Z", "0"})
            CHECK(parseGroupSpec(name).name == name);
    }

    TEST_CASE("group json round-trip") {
        FgAbelianGroup g = canonicalize({Int(2), Int(4)}, 3);
        CHECK(groupFromJson(groupToJson(g)) == g);
        CHECK(groupFromJson(groupToJson(kZ)) == kZ);
        CHECK(groupFromJson(groupToJson(FgAbelianGroup{})) == FgAbelianGroup{});
    }
}
