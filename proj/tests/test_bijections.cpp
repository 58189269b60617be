#include <set>

#include "doctest.h"
#include "luka/bijections.hpp"
#include "oracles.hpp"

using namespace luka;

namespace {
std::vector<int> dyck_steps(const std::string& s) {
    std::vector<int> out;
    for (char c : s) out.push_back(c == 'U' ? 1 : -1);
    return out;
}
std::vector<int> motzkin_steps(const std::string& s) {
    std::vector<int> out;
    for (char c : s) out.push_back(c == 'U' ? 1 : c == 'H' ? 0 : -1);
    return out;
}
}  // namespace

TEST_CASE("rise decomposition") {
    auto rises = rise_decompose(validate_dyck(dyck_steps("UUDD")));
    REQUIRE(rises.size() == 1);
    CHECK(rises[0] == Rise{0, 2, 2});
    rises = rise_decompose(validate_dyck(dyck_steps("UDUD")));
    REQUIRE(rises.size() == 2);
    CHECK(rises[0].length == 1);
    CHECK(rises[1].length == 1);
    rises = rise_decompose(validate_dyck(dyck_steps("UUDUDD")));
    REQUIRE(rises.size() == 2);
    CHECK(rises[0] == Rise{0, 2, 2});
    CHECK(rises[1] == Rise{3, 1, 4});
}

TEST_CASE("luka -> rise-restricted Dyck") {
    CHECK(luka_to_rise_dyck(LukaPath{{1, -1}}).str() == "UUDD");
    CHECK(luka_to_rise_dyck(LukaPath{{0}}).str() == "UD");
    CHECK(luka_to_rise_dyck(LukaPath{{2, -1, -1}}).str() == "UUUDDD");
}

TEST_CASE("rise-restricted Dyck -> luka") {
    CHECK(rise_dyck_to_luka(validate_dyck(dyck_steps("UUDD")), ModelParams::finite(1, 1)) ==
          LukaPath{{1, -1}});
    CHECK(rise_dyck_to_luka(validate_dyck(dyck_steps("UDUD")), ModelParams::unbounded(0)) ==
          LukaPath{{0, 0}});
    CHECK_THROWS_AS(
        rise_dyck_to_luka(validate_dyck(dyck_steps("UUDD")), ModelParams::finite(0, 0)),
        RiseRestrictionViolated);
}

TEST_CASE("right-visible down steps") {
    LukaPath p = validate(ModelParams::unbounded(1), {2, -1, -1});
    CHECK(right_visible(p, 0) == std::vector<int>{1, 2});
    LukaPath q = validate(ModelParams::finite(1, 1), {1, -1, 1, -1});
    CHECK(right_visible(q, 2) == std::vector<int>{3});
    LukaPath r = validate(ModelParams::unbounded(1), {2, 1, -1, -1, -1});
    CHECK(right_visible(r, 0) == std::vector<int>{3, 4});
    CHECK(right_visible(r, 1) == std::vector<int>{2});
    CHECK_THROWS_AS(right_visible(p, 1), NotAJumpStep);
}

TEST_CASE("Motzkin map, small cases") {
    const ModelParams p = ModelParams::unbounded(1);
    // n = 1: [1,-1] in L_2 maps through Gamma-minus to H
    CHECK(motzkin_map(p, LukaPath{{1, -1}}, 1).str() == "H");
    // n = 2: [1,-1] in L_2 maps through Gamma-o to UD, [2,-1,-1] to HH
    CHECK(motzkin_map(p, LukaPath{{1, -1}}, 2).str() == "UD");
    CHECK(motzkin_map(p, LukaPath{{2, -1, -1}}, 2).str() == "HH");
    std::set<std::string> images;
    for (const auto& l : enumerate(p, 2)) images.insert(motzkin_map(p, l, 2).str());
    for (const auto& l : enumerate(p, 3)) images.insert(motzkin_map(p, l, 2).str());
    CHECK(images == std::set<std::string>{"UD", "HH"});
    CHECK_THROWS_AS(motzkin_map(ModelParams::finite(1, 2), LukaPath{{1, -1}}, 2), WrongModel);
}

TEST_CASE("Motzkin inverse, small cases") {
    CHECK(motzkin_inverse(validate_motzkin(motzkin_steps("H"))) == LukaPath{{1, -1}});
    CHECK(motzkin_inverse(validate_motzkin(motzkin_steps("UD"))) == LukaPath{{1, -1}});
    CHECK(motzkin_inverse(validate_motzkin(motzkin_steps("HH"))) == LukaPath{{2, -1, -1}});
    // disambiguation by target length: UD has no surface horizontals -> L_n
    CHECK(motzkin_inverse(validate_motzkin(motzkin_steps("UD"))).length() == 2);
    CHECK(motzkin_inverse(validate_motzkin(motzkin_steps("H"))).length() == 2);  // L_{n+1}, n = 1
}

TEST_CASE("area bijection, small cases") {
    const ModelParams p = ModelParams::unbounded(0);
    CHECK(area_luka_to_dyck(p, LukaPath{{0, 0}}).str() == "UDUD");
    CHECK(area_luka_to_dyck(p, LukaPath{{1, -1}}).str() == "UUDD");
    CHECK(area_luka_to_dyck(p, LukaPath{{0}}).str() == "UD");
    CHECK(area_dyck_to_luka(validate_dyck(dyck_steps("UD"))) == LukaPath{{0}});
    CHECK(area_dyck_to_luka(validate_dyck(dyck_steps("UUDD"))) == LukaPath{{1, -1}});
    CHECK(area_dyck_to_luka(validate_dyck(dyck_steps("UDUD"))) == LukaPath{{0, 0}});
    CHECK_THROWS_AS(area_luka_to_dyck(ModelParams::unbounded(1), LukaPath{{1, -1}}),
                    WrongModel);
}

TEST_CASE("exhaustive verification reports") {
    auto rise = verify_bijection(BijectionKind::rise, ModelParams::finite(1, 2), 8);
    CHECK(rise.pass);
    CHECK(rise.source_count == rise.target_count);

    auto motzkin = verify_bijection(BijectionKind::motzkin, ModelParams::unbounded(1), 6);
    CHECK(motzkin.pass);
    CHECK(motzkin.target_count == 51);  // M_6

    auto area = verify_bijection(BijectionKind::area, ModelParams::unbounded(0), 8);
    CHECK(area.pass);
    CHECK(mpz_class(static_cast<long>(area.target_count)) == oracle::catalan(8));
}

TEST_CASE("Motzkin cardinality law |L_n| + |L_{n+1}| = M_n") {
    const ModelParams p = ModelParams::unbounded(1);
    for (int n = 0; n <= 8; ++n) {
        const long total = static_cast<long>(count_paths(p, n) + count_paths(p, n + 1));
        CHECK(mpz_class(total) == oracle::motzkin(n));
    }
}

TEST_CASE("no horizontal steps in (1,inf) paths") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& l : enumerate(ModelParams::unbounded(1), n))
            for (int s : l.steps) CHECK(s != 0);
}

TEST_CASE("area generating identity against Dyck enumeration") {
    // sum over (0,inf) paths of a^c q^m z^n equals the Dyck sum under the
    // area law m_dyck = 2 m + n, coefficient-wise in (a, q)
    for (int n = 0; n <= 8; ++n) {
        MultiPoly luka_side = partition_polynomial(ModelParams::unbounded(0), n, true);
        MultiPoly dyck_side;
        for (const auto& d : enumerate_dyck(2 * n)) {
            const long long m = area_of(d.steps);
            REQUIRE((m - n) % 2 == 0);
            Exponents e{};
            e[static_cast<int>(Var::a)] = contacts_of(d.steps);
            e[static_cast<int>(Var::q)] = static_cast<int>((m - n) / 2);
            dyck_side += MultiPoly::monomial(1, e);
        }
        CHECK(luka_side == dyck_side);
    }
}

TEST_CASE("rise bijection across the parameter sweep, n <= 6") {
    for (const ModelParams p :
         {ModelParams::finite(0, 1), ModelParams::finite(1, 1), ModelParams::finite(1, 2),
          ModelParams::finite(0, 2), ModelParams::finite(2, 4), ModelParams::unbounded(0),
          ModelParams::unbounded(1)}) {
        for (int n = 0; n <= 6; ++n) {
            auto rep = verify_bijection(BijectionKind::rise, p, n);
            CHECK(rep.pass);
        }
    }
}
