#include <stdexcept>

#include <doctest.h>

#include "gamelab/countdown.hpp"

using namespace gamelab;

namespace {

struct SmallGame {
    SocnRGame game;
    std::size_t p0 = 0;
};

SmallGame single_move(Owner owner, std::vector<std::int64_t> deltas, bool loop_to_start = false)
{
    SmallGame g;
    g.p0 = g.game.add_state("p0", owner);
    auto win = g.game.add_state("p_win", Owner::Eve);
    for (auto z : deltas) {
        g.game.add_rule(g.p0, z, loop_to_start ? g.p0 : win);
    }
    g.game.target = win;
    return g;
}

std::vector<StateSet> levels(const CountdownGame& cg, std::size_t count)
{
    LevelStream stream(cg);
    std::vector<StateSet> out;
    for (std::size_t j = 0; j < count; ++j) {
        out.push_back(stream.next());
    }
    return out;
}

}  // namespace

TEST_CASE("countdown games reject non-decreasing rules")
{
    SocnRGame g;
    auto p = g.add_state("p", Owner::Eve);
    g.add_rule(p, 0, p);
    CHECK_THROWS_WITH_AS(CountdownGame{g}, "rule delta must be negative", std::invalid_argument);
}

TEST_CASE("level sets")
{
    SUBCASE("level zero is the target alone")
    {
        const auto g = single_move(Owner::Adam, {-1, -2});
        const CountdownGame cg(g.game);
        CHECK(levels(cg, 1)[0] == StateSet{false, true});
    }
    SUBCASE("one Eve move of two")
    {
        const auto g = single_move(Owner::Eve, {-2});
        const auto w = levels(CountdownGame(g.game), 4);
        CHECK(w[1] == StateSet{false, false});
        CHECK(w[2] == StateSet{true, false});
        CHECK(w[3] == StateSet{false, false});
    }
    SUBCASE("Adam picks the short move")
    {
        const auto g = single_move(Owner::Adam, {-1, -2});
        const auto w = levels(CountdownGame(g.game), 3);
        CHECK(w[1][g.p0]);
        CHECK_FALSE(w[2][g.p0]);
    }
}

TEST_CASE("solve_cg")
{
    const auto g = single_move(Owner::Eve, {-2});
    const CountdownGame cg(g.game);
    CHECK(solve_cg(cg, g.p0, 2));
    CHECK_FALSE(solve_cg(cg, g.p0, 3));
    CHECK_FALSE(solve_cg(cg, g.p0, 1));
    CHECK(solve_cg(cg, 1, 0));
}

TEST_CASE("solve_cg with huge counters uses only a window")
{
    SocnRGame game;
    auto p0 = game.add_state("p0", Owner::Eve);
    auto win = game.add_state("win", Owner::Eve);
    game.add_rule(p0, -3, p0);
    game.add_rule(p0, -2, win);
    game.target = win;
    const CountdownGame cg(game);
    // p0(n) wins iff n = 2 + 3k.
    CHECK(solve_cg(cg, p0, 2 + 3 * 100000));
    CHECK_FALSE(solve_cg(cg, p0, 3 * 100000));
}

TEST_CASE("solve_ecg")
{
    for (auto mode : {CycleMode::HashSet, CycleMode::Brent}) {
        CAPTURE(static_cast<int>(mode));
        SUBCASE("reachable")
        {
            const auto g = single_move(Owner::Eve, {-2});
            const EcgResult r = solve_ecg(CountdownGame(g.game), g.p0, std::nullopt, mode);
            CHECK(r.kind == EcgResult::Kind::Yes);
            CHECK(r.level == 2);
        }
        SUBCASE("target unreachable")
        {
            const auto g = single_move(Owner::Eve, {-2}, true);
            const EcgResult r = solve_ecg(CountdownGame(g.game), g.p0, std::nullopt, mode);
            REQUIRE(r.kind == EcgResult::Kind::No);
            REQUIRE(r.repeat);
            CHECK(r.repeat->first < r.repeat->second);
            CHECK(r.repeat->second <= 3);
        }
    }
    SUBCASE("cap reached first")
    {
        SocnRGame game;
        auto p0 = game.add_state("p0", Owner::Eve);
        auto win = game.add_state("win", Owner::Eve);
        game.add_rule(p0, -1000, win);
        game.target = win;
        const EcgResult r = solve_ecg(CountdownGame(game), p0, 10);
        CHECK(r.kind == EcgResult::Kind::Inconclusive);
    }
}
