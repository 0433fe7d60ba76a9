#include <doctest.h>

#include "gamelab/countdown.hpp"
#include "gamelab/rgame.hpp"

using namespace gamelab;

TEST_CASE("attractor ranks")
{
    RGame g;
    SUBCASE("lone target")
    {
        auto t = g.add_vertex("t", Owner::Eve, true);
        CHECK(winning_area(g).rank[t] == 0U);
    }
    SUBCASE("one Eve step")
    {
        auto s = g.add_vertex("s", Owner::Eve);
        auto t = g.add_vertex("t", Owner::Eve, true);
        g.add_edge(s, t);
        CHECK(winning_area(g).rank[s] == 1U);
    }
    SUBCASE("Adam escapes to a dead vertex")
    {
        auto s = g.add_vertex("s", Owner::Adam);
        auto t = g.add_vertex("t", Owner::Eve, true);
        auto dead = g.add_vertex("dead", Owner::Eve);
        g.add_edge(s, t);
        g.add_edge(s, dead);
        const WinningArea w = winning_area(g);
        CHECK_FALSE(w.winning(s));
        CHECK_FALSE(w.winning(dead));
    }
    SUBCASE("Adam rank is one above the worst successor")
    {
        auto s = g.add_vertex("s", Owner::Adam);
        auto u = g.add_vertex("u", Owner::Eve);
        auto t = g.add_vertex("t", Owner::Eve, true);
        g.add_edge(s, t);
        g.add_edge(s, u);
        g.add_edge(u, t);
        CHECK(winning_area(g).rank[s] == 2U);
    }
    SUBCASE("Adam deadlock is not winning")
    {
        auto s = g.add_vertex("s", Owner::Adam);
        CHECK_FALSE(winning_area(g).winning(s));
    }
    SUBCASE("Eve cycle without exit")
    {
        auto s = g.add_vertex("s", Owner::Eve);
        g.add_vertex("t", Owner::Eve, true);
        g.add_edge(s, s);
        CHECK_FALSE(winning_area(g).winning(s));
    }
}

TEST_CASE("expanding a counter game into a finite region")
{
    SocnRGame game;
    auto q = game.add_state("q", Owner::Eve);
    auto win = game.add_state("p_win", Owner::Eve);
    game.add_rule(q, -5, win);
    game.target = win;

    const RGame g = expand_region(game, 6);
    CHECK(g.num_vertices() == 2 * 7);
    const auto& from5 = g.successors(config_vertex(q, 5, 6));
    CHECK(from5 == std::vector<VertexId>{config_vertex(win, 0, 6)});
    CHECK(g.successors(config_vertex(q, 3, 6)).empty());
    CHECK(g.is_target(config_vertex(win, 0, 6)));
    CHECK_FALSE(g.is_target(config_vertex(win, 1, 6)));
    CHECK(g.name(config_vertex(q, 5, 6)) == "q(5)");
}

TEST_CASE("Adam stalls where the region cuts off his moves")
{
    SocnRGame game;
    auto a = game.add_state("a", Owner::Adam);
    auto win = game.add_state("win", Owner::Eve);
    game.add_rule(a, 3, a);
    game.add_rule(a, -1, win);
    game.target = win;
    const RGame g = expand_region(game, 4);
    // a(1) could climb to a(4) and keep climbing outside the region.
    const WinningArea w = winning_area(g);
    CHECK_FALSE(w.winning(config_vertex(a, 1, 4)));
    CHECK_FALSE(w.winning(config_vertex(a, 2, 4)));
}

TEST_CASE("countdown expansion decides the start configuration exactly")
{
    SocnRGame game;
    auto p0 = game.add_state("p0", Owner::Adam);
    auto mid = game.add_state("mid", Owner::Eve);
    auto win = game.add_state("win", Owner::Eve);
    game.add_rule(p0, -1, mid);
    game.add_rule(p0, -2, mid);
    game.add_rule(mid, -1, win);
    game.add_rule(mid, -2, win);
    game.add_rule(mid, -3, mid);
    game.target = win;
    const CountdownGame cg(game);
    for (std::uint64_t n0 = 0; n0 <= 20; ++n0) {
        const WinningArea w = winning_area(expand_region(game, n0));
        CHECK(w.winning(config_vertex(p0, n0, n0)) == solve_cg(cg, p0, n0));
    }
}
