// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits with status 1 when any criterion fails. Runs from tests/fixtures so
// the CLI transcripts resolve their inputs.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

#include "gamelab/ocn_sim.hpp"
#include "gamelab/reductions.hpp"
#include "gamelab/render.hpp"
#include "golden_cases.hpp"
#include "nets.hpp"
#include "random_models.hpp"

using namespace gamelab;

namespace {

struct Outcome {
    bool pass = true;
    int failures = 0;
    std::ostringstream detail;
    std::ostringstream overflow;

    // Records the first few failures and turns the outcome red.
    std::ostream& fail()
    {
        pass = false;
        if (++failures > 5) {
            overflow.str("");
            return overflow;
        }
        if (failures > 1) {
            detail << "; ";
        }
        return detail;
    }
};

// ---------------------------------------------------------------------------
// Sequence descriptions and their countdown games

void reduced_game_agrees_with_sequence(Outcome& out)
{
    models::Rng rng(1);
    int checked = 0;
    for (int i = 0; i < 100 && out.pass; ++i) {
        const SeqDescription d = models::seqdesc(rng);
        const SeqCountdown r = seqdesc_to_countdown(d);
        const auto s = eval_prefix(d, 51);
        for (Symbol b = 0; b < d.alphabet_size(); ++b) {
            const std::size_t sb = r.symbol_state[b];
            if (solve_cg(r.game, sb, 0) || solve_cg(r.game, sb, 1)) {
                out.fail() << "description " << i << ": s_" << d.symbol_name(b) << " wins below 2";
            }
            for (std::uint64_t k = 0; k <= 50; ++k) {
                ++checked;
                if (solve_cg(r.game, sb, k + 2) != (s[k] == b)) {
                    out.fail() << "description " << i << ": s_" << d.symbol_name(b) << "(" << k + 2
                               << ") disagrees with position " << k;
                    break;
                }
            }
        }
    }
    if (out.pass) {
        out.detail << checked << " queries over 100 descriptions";
    }
}

// The blank state wins on the initial run of blanks and nowhere else in
// [0, m]; beyond it the blank state follows the sequence like the others.
void reduced_game_facts(Outcome& out)
{
    models::Rng rng(2);
    for (int i = 0; i < 20; ++i) {
        const SeqDescription d = models::seqdesc(rng);
        const SeqCountdown r = seqdesc_to_countdown(d);
        const std::uint64_t m = d.m();
        const std::uint64_t top = 4 * m + 12;
        const WinningArea w = winning_area(expand_region(r.game.game(), top));
        auto wins = [&](std::size_t q, std::uint64_t k) { return w.winning(config_vertex(q, k, top)); };
        const auto s = eval_prefix(d, top);
        for (std::uint64_t k = 0; k <= top; ++k) {
            if (wins(r.win, k) != (k == 0)) {
                out.fail() << "game " << i << ": p_win at " << k;
            }
            if (wins(r.bad, k)) {
                out.fail() << "game " << i << ": p_bad wins at " << k;
            }
            if (wins(r.p1, k) != (k >= 1)) {
                out.fail() << "game " << i << ": p1 at " << k;
            }
            if (wins(r.p2, k) != (k >= 2 && k <= m + 1)) {
                out.fail() << "game " << i << ": p2 at " << k;
            }
        }
        if (!wins(r.symbol_state[d.hash()], 2)) {
            out.fail() << "game " << i << ": s_#(2) loses";
        }
        const std::size_t blank = r.symbol_state[d.blank()];
        for (std::uint64_t k = 0; k + 2 <= top; ++k) {
            const bool expected = k <= m ? (k >= 1) : s[k] == d.blank();
            if (wins(blank, k + 2) != expected) {
                out.fail() << "game " << i << ": blank state at " << k + 2;
            }
        }
    }
    if (out.pass) {
        out.detail << "20 games; blank state checked as an iff on [0,m] and against the sequence beyond";
    }
}

// ---------------------------------------------------------------------------
// Reachability games and the mimicking LTS

void mimicking_lts_equivalence(Outcome& out)
{
    models::Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const RGame g = models::rgame(rng);
        const WinningArea w = winning_area(g);
        const MimickingLts m = rgame_to_mimicking_lts(g);
        const Relation sim = max_simulation(m.lts);
        const Relation bisim = max_bisimulation(m.lts);
        Relation witness(m.lts.num_states());
        for (StateId s = 0; s < m.lts.num_states(); ++s) {
            witness.insert(s, s);
        }
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            const StateId s = m.original[v];
            const StateId c = m.copy[v];
            if (w.winning(v) == sim.contains(s, c)) {
                out.fail() << "game " << i << ": simulation disagrees at " << g.name(v);
            }
            if (w.winning(v) == bisim.contains(s, c)) {
                out.fail() << "game " << i << ": bisimulation disagrees at " << g.name(v);
            }
            if (w.winning(v)) {
                continue;
            }
            witness.insert(s, c);
            if (g.owner(v) == Owner::Adam && !g.successors(v).empty()) {
                for (VertexId u : g.successors(v)) {
                    if (!w.winning(u)) {
                        witness.insert(m.choice_state.at(v), m.pair_state.at({v, u}));
                    }
                }
            }
        }
        if (!is_bisimulation(m.lts, witness)) {
            out.fail() << "game " << i << ": witness relation is not a bisimulation";
        }
    }
    if (out.pass) {
        out.detail << "200 games";
    }
}

// ---------------------------------------------------------------------------
// Countdown games

void countdown_window_solver(Outcome& out)
{
    models::Rng rng(4);
    int no_answers = 0;
    int yes_answers = 0;
    for (int i = 0; i < 100; ++i) {
        const CountdownGame game = models::countdown(rng);
        const std::uint64_t top = 60;
        const WinningArea w = winning_area(expand_region(game.game(), top));
        for (std::size_t q = 0; q < game.num_states(); ++q) {
            for (std::uint64_t n = 0; n <= top; ++n) {
                if (solve_cg(game, q, n) != w.winning(config_vertex(q, n, top))) {
                    out.fail() << "game " << i << ": solve_cg at " << game.game().states[q] << "(" << n << ")";
                }
            }
        }
        const std::uint64_t M = game.max_decrement();
        for (std::size_t q = 0; q < game.num_states(); ++q) {
            const EcgResult e = solve_ecg(game, q);
            if (e.kind == EcgResult::Kind::Inconclusive) {
                out.fail() << "game " << i << ": inconclusive existential query";
                continue;
            }
            const std::uint64_t reach = e.kind == EcgResult::Kind::Yes ? e.level : e.repeat->second;
            const WinningArea big = winning_area(expand_region(game.game(), reach));
            auto level = [&](std::uint64_t j) {
                StateSet s(game.num_states());
                for (std::size_t x = 0; x < game.num_states(); ++x) {
                    s[x] = big.winning(config_vertex(x, j, reach));
                }
                return s;
            };
            std::optional<std::uint64_t> first;
            for (std::uint64_t j = 0; j <= reach && !first; ++j) {
                if (big.winning(config_vertex(q, j, reach))) {
                    first = j;
                }
            }
            if (e.kind == EcgResult::Kind::Yes) {
                ++yes_answers;
                if (first != e.level) {
                    out.fail() << "game " << i << ": existential answer level " << e.level;
                }
                continue;
            }
            ++no_answers;
            const auto [j1, j2] = *e.repeat;
            bool same = j1 < j2 && j1 + 1 >= M;
            for (std::uint64_t back = 0; back < M && same; ++back) {
                same = level(j1 - back) == level(j2 - back);
            }
            if (!same) {
                out.fail() << "game " << i << ": windows at " << j1 << " and " << j2 << " differ";
            }
            if (first) {
                out.fail() << "game " << i << ": No answer but the state wins at " << *first;
            }
        }
    }
    if (out.pass) {
        out.detail << "100 games; " << yes_answers << " Yes and " << no_answers << " witnessed No answers";
    }
}

// ---------------------------------------------------------------------------
// Socn reachability games and their mimicking nets

// Configurations of the mimicking game, written out from the definition.
struct Abstract {
    enum Kind { Original, Copy, Choice, Pair } kind;
    std::size_t q;
    std::size_t r;  // Pair only
    std::int64_t k;

    auto key() const { return std::tie(kind, q, r, k); }
    bool operator<(const Abstract& o) const { return key() < o.key(); }
    bool operator==(const Abstract& o) const { return key() == o.key(); }
};

using Step = std::pair<std::string, Abstract>;

std::set<Step> expected_steps(const SocnRGame& g, const Abstract& c)
{
    std::set<Step> out;
    auto rules_of = [&](std::size_t q) {
        std::vector<CounterRule> rs;
        for (const auto& r : g.rules) {
            if (r.from == q && c.k + r.delta >= 0) {
                rs.push_back(r);
            }
        }
        return rs;
    };
    auto act = [&](const CounterRule& r) { return edge_action(g.states[r.from], g.states[r.to]); };
    switch (c.kind) {
    case Abstract::Original:
    case Abstract::Copy: {
        if (c.kind == Abstract::Original && c.q == g.target) {
            out.insert({"a_win", c});
        }
        const auto rs = rules_of(c.q);
        if (g.owners[c.q] == Owner::Eve) {
            for (const auto& r : rs) {
                out.insert({act(r), Abstract{c.kind, r.to, 0, c.k + r.delta}});
            }
            break;
        }
        if (!rs.empty() && c.kind == Abstract::Original) {
            out.insert({"a_c", Abstract{Abstract::Choice, c.q, 0, c.k}});
        }
        for (const auto& r : rs) {
            out.insert({"a_c", Abstract{Abstract::Pair, c.q, r.to, c.k}});
        }
        break;
    }
    case Abstract::Choice:
        for (const auto& r : rules_of(c.q)) {
            out.insert({act(r), Abstract{Abstract::Original, r.to, 0, c.k + r.delta}});
        }
        break;
    case Abstract::Pair:
        for (const auto& r : rules_of(c.q)) {
            const auto kind = r.to == c.r ? Abstract::Copy : Abstract::Original;
            out.insert({act(r), Abstract{kind, r.to, 0, c.k + r.delta}});
        }
        break;
    }
    return out;
}

// Eve's winning area with ranks in the game whose targets are target(k) for
// every k, truncated at `top`. Moves leaving the region are dropped and an
// Adam vertex losing one is made losing, so winning here is winning there.
WinningArea truncated_win(const SocnRGame& g, std::uint64_t top)
{
    RGame r;
    for (std::size_t q = 0; q < g.num_states(); ++q) {
        for (std::uint64_t k = 0; k <= top; ++k) {
            r.add_vertex(g.states[q] + "(" + std::to_string(k) + ")", g.owners[q], q == g.target);
        }
    }
    for (std::size_t q = 0; q < g.num_states(); ++q) {
        for (std::uint64_t k = 0; k <= top; ++k) {
            bool escapes = false;
            for (const auto& rule : g.rules) {
                const std::int64_t k2 = static_cast<std::int64_t>(k) + rule.delta;
                if (rule.from == q && k2 >= static_cast<std::int64_t>(top + 1)) {
                    escapes = true;
                }
            }
            if (escapes && g.owners[q] == Owner::Adam) {
                continue;
            }
            for (const auto& rule : g.rules) {
                const std::int64_t k2 = static_cast<std::int64_t>(k) + rule.delta;
                if (rule.from == q && k2 >= 0 && k2 <= static_cast<std::int64_t>(top)) {
                    r.add_edge(config_vertex(q, k, top), config_vertex(rule.to, static_cast<std::uint64_t>(k2), top));
                }
            }
        }
    }
    return winning_area(r);
}

void mimicking_net_consistency(Outcome& out)
{
    models::Rng rng(5);
    const std::int64_t bound = 30;
    std::size_t cells = 0;
    std::size_t refutations = 0;
    for (int i = 0; i < 50; ++i) {
        const SocnRGame input = models::socn_rgame(rng, 5, -4, 4, 10);
        const MimickingNet mn = socnrgame_to_socn(input);
        const SocnRGame& g = mn.game;
        const Socn& net = mn.net;

        std::vector<std::function<Abstract(std::int64_t)>> meaning(net.num_states());
        for (std::size_t q = 0; q < g.num_states(); ++q) {
            meaning[mn.original[q]] = [q](std::int64_t c) { return Abstract{Abstract::Original, q, 0, c}; };
            meaning[mn.copy[q]] = [q](std::int64_t c) { return Abstract{Abstract::Copy, q, 0, c}; };
        }
        for (const auto& [q, s] : mn.choice_state) {
            const std::int64_t shift = mn.choice_shift.at(q);
            meaning[s] = [q, shift](std::int64_t c) { return Abstract{Abstract::Choice, q, 0, c + shift}; };
        }
        for (const auto& [qr, s] : mn.pair_state) {
            std::int64_t z = 0;
            for (const auto& rule : g.rules) {
                if (rule.from == qr.first && rule.to == qr.second) {
                    z = rule.delta;
                }
            }
            const std::int64_t down = std::min<std::int64_t>(z, 0);
            meaning[s] = [qr, down](std::int64_t c) {
                return Abstract{Abstract::Pair, qr.first, qr.second, c - down};
            };
        }
        bool complete = true;
        for (std::size_t s = 0; s < net.num_states(); ++s) {
            complete = complete && static_cast<bool>(meaning[s]);
        }
        if (!complete) {
            out.fail() << "game " << i << ": net state without a counterpart";
            continue;
        }

        // Net configurations map onto the definition's configurations.
        for (std::size_t s = 0; s < net.num_states(); ++s) {
            for (std::int64_t c = 0; c <= bound; ++c) {
                ++cells;
                const Abstract here = meaning[s](c);
                std::set<Step> actual;
                for (ActionId a = 0; a < net.num_actions(); ++a) {
                    for (const Config& to : successors(net, {s, static_cast<std::uint64_t>(c)}, a)) {
                        actual.insert({net.actions[a], meaning[to.first](static_cast<std::int64_t>(to.second))});
                    }
                }
                if (actual != expected_steps(g, here)) {
                    out.fail() << "game " << i << ": transitions differ at " << net.states[s] << "(" << c << ")";
                    break;
                }
            }
        }

        const std::uint64_t top = static_cast<std::uint64_t>(bound) + 4 * 15;
        const WinningArea w = truncated_win(g, top);
        for (std::size_t q = 0; q < g.num_states(); ++q) {
            for (std::uint64_t k = 0; k <= static_cast<std::uint64_t>(bound); ++k) {
                const auto r = w.rank[config_vertex(q, k, top)];
                if (!r || *r > 15) {
                    continue;
                }
                ++refutations;
                const SearchOutcome found =
                    config_attacker_search(net, {mn.original[q], k}, {mn.copy[q], k}, 2 * *r + 2);
                if (!found.attacker_wins()) {
                    out.fail() << "game " << i << ": " << g.states[q] << "(" << k << ") with rank " << *r
                               << " not refuted";
                }
            }
        }
    }
    if (out.pass) {
        out.detail << "50 games, " << cells << " net configurations compared, " << refutations
                   << " winning configurations refuted";
    }
}

// ---------------------------------------------------------------------------
// Planes of one-counter nets

void drain_belt(Outcome& out)
{
    const Socn net = testnets::drain();
    const std::size_t p = *net.find_state("p");
    const std::size_t q = *net.find_state("q");
    const PlaneColoring c = color_planes(net, 40, 20);
    for (std::uint64_t m = 0; m < c.width(); ++m) {
        for (std::uint64_t n = 0; n < c.view(); ++n) {
            if (c.black(p, q, m, n) != (n >= 2 * m)) {
                out.fail() << "cell (" << m << "," << n << ")";
                return;
            }
        }
    }
    const auto f = frontier(c, p, q);
    for (std::uint64_t n = 0; n < f.size(); ++n) {
        if (f[n] != static_cast<std::int64_t>(n / 2)) {
            out.fail() << "frontier at level " << n << " is " << f[n];
        }
    }
    const BeltFit fit = classify_and_fit(f);
    if (fit.kind != BeltClass::Slanted || fit.unstable || fit.slope != Rational(1, 2)) {
        out.fail() << "fit " << belt_class_name(fit.kind) << " slope " << fit.slope;
    }
    const auto period = detect_belt_period(c, p, q, fit);
    if (period != std::pair<std::uint64_t, std::uint64_t>{1, 2}) {
        out.fail() << "period not (1,2)";
    }
    const BeltCertificate cert = build_certificate(net, c);
    if (!verify_certificate(net, cert).ok() || !certifies(cert, p, 3, q, 6)) {
        out.fail() << "certificate does not verify or misses p(3) against q(6)";
    }
    const SimDecision yes = decide_sim(net, p, 3, q, 6, 40);
    if (yes.kind != SimDecision::Kind::Yes) {
        out.fail() << "p(3) against q(6) is not Yes";
    }
    const SimDecision no = decide_sim(net, p, 3, q, 5, 40);
    if (no.kind != SimDecision::Kind::No) {
        out.fail() << "p(3) against q(5) is not No";
    } else if (no.rank != 3) {
        out.fail() << "p(3) against q(5) is No(" << no.rank << "), expected No(3)";
    }
    if (out.pass) {
        out.detail << "frontier n/2, slope 1/2, period (1,2), certificate valid, Yes and No(3)";
    }
}

// Compares every exact cell with a memoized game search over the net.
bool coloring_matches_search(const Socn& net, unsigned K, std::uint64_t view, std::string& why)
{
    const PlaneColoring c = color_planes(net, K, view);
    if (!monotone(c)) {
        why = "coloring not monotone";
        return false;
    }
    auto step = [&net](const Config& x, ActionId a) { return successors(net, x, a); };
    AttackerSearch<Config, Config> search(net.num_actions(), step, step);
    for (std::size_t p = 0; p < net.num_states(); ++p) {
        for (std::size_t q = 0; q < net.num_states(); ++q) {
            for (std::uint64_t m = 0; m < c.width(); ++m) {
                for (std::uint64_t n = 0; n < c.view(); ++n) {
                    if (c.rank(p, q, m, n) != search.search({p, m}, {q, n}, K).attacker_rank) {
                        why = "rank mismatch at plane (" + net.states[p] + "," + net.states[q] + ") cell (" +
                              std::to_string(m) + "," + std::to_string(n) + ")";
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

std::string describe(const Socn& net)
{
    std::ostringstream s;
    for (const auto& r : net.rules) {
        s << net.states[r.from] << "-" << net.actions[r.action] << "," << r.delta << "->" << net.states[r.to] << " ";
    }
    return s.str();
}

// All nets over at most two states and actions {a, b} with up to four
// unary rules, then a fixed sample of three-state nets at the full size.
void monotonicity_and_ranks(Outcome& out)
{
    std::size_t exhaustive = 0;
    for (std::size_t states = 1; states <= 2 && out.pass; ++states) {
        std::vector<SocnRule> universe;
        for (std::size_t from = 0; from < states; ++from) {
            for (ActionId a = 0; a < 2; ++a) {
                for (std::int64_t z = -1; z <= 1; ++z) {
                    for (std::size_t to = 0; to < states; ++to) {
                        universe.push_back({from, a, z, to});
                    }
                }
            }
        }
        std::vector<std::size_t> pick;
        std::function<void(std::size_t)> grow = [&](std::size_t next) {
            if (!out.pass) {
                return;
            }
            Socn net;
            for (std::size_t s = 0; s < states; ++s) {
                net.add_state("q" + std::to_string(s));
            }
            net.add_action("a");
            net.add_action("b");
            for (std::size_t i : pick) {
                const auto& r = universe[i];
                net.add_rule(r.from, r.action, r.delta, r.to);
            }
            ++exhaustive;
            std::string why;
            if (!coloring_matches_search(net, 12, 6, why)) {
                out.fail() << why << " in net " << describe(net);
                return;
            }
            if (pick.size() == 4) {
                return;
            }
            for (std::size_t i = next; i < universe.size(); ++i) {
                pick.push_back(i);
                grow(i + 1);
                pick.pop_back();
            }
        };
        grow(0);
    }
    models::Rng rng(7);
    const int sampled = 150;
    for (int i = 0; i < sampled && out.pass; ++i) {
        const Socn net = models::unary_net(rng, 3, 4, 3);
        std::string why;
        if (!coloring_matches_search(net, 24, 12, why)) {
            out.fail() << why << " in net " << describe(net);
        }
    }
    if (out.pass) {
        out.detail << exhaustive << " nets with at most two states at R=6, K=12; " << sampled
                   << " sampled three-state nets at R=12, K=24";
    }
}

void vector_travel(Outcome& out)
{
    models::Rng rng(8);
    std::size_t traced = 0;
    std::size_t left_view = 0;
    for (int i = 0; i < 30; ++i) {
        const Socn net = models::unary_net(rng);
        const PlaneColoring c = color_planes(net, 32, 16);
        const auto W = static_cast<std::int64_t>(c.width());
        const auto R = static_cast<std::int64_t>(c.view());
        for (std::size_t p = 0; p < net.num_states(); ++p) {
            for (std::size_t q = 0; q < net.num_states(); ++q) {
                for (std::int64_t m = 0; m < W; ++m) {
                    for (std::int64_t n = 0; n < R; ++n) {
                        if (!c.black(p, q, m, n)) {
                            continue;
                        }
                        for (std::int64_t dm = -1; dm <= 1; ++dm) {
                            for (std::int64_t dn = -1; dn <= 1; ++dn) {
                                const std::int64_t m2 = m + dm;
                                const std::int64_t n2 = n + dn;
                                if (m2 < 0 || n2 < 0 || m2 >= W || n2 >= R || c.black(p, q, m2, n2)) {
                                    continue;
                                }
                                const BwVector v0{p, q, static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(n),
                                                  static_cast<std::uint64_t>(m2), static_cast<std::uint64_t>(n2)};
                                const Travel t = trace_vector_travel(net, c, v0);
                                ++traced;
                                if (t.status == Travel::Status::LeftView) {
                                    ++left_view;
                                    continue;
                                }
                                bool ok = t.status == Travel::Status::Reached;
                                for (std::size_t k = 1; k < t.ranks.size() && ok; ++k) {
                                    ok = t.ranks[k] < t.ranks[k - 1];
                                }
                                for (const BwVector& v : t.steps) {
                                    ok = ok && c.black(v.p, v.q, v.m1, v.n1) && !c.black(v.p, v.q, v.m2, v.n2);
                                }
                                const BwVector& last = t.steps.empty() ? v0 : t.steps.back();
                                ok = ok && (last.m1 == 0 || last.n2 == 0);
                                if (!ok) {
                                    out.fail() << "net " << i << " plane (" << net.states[p] << "," << net.states[q]
                                               << ") vector (" << m << "," << n << ")->(" << m2 << "," << n2
                                               << "): " << t.message;
                                    return;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    if (left_view * 20 > traced) {
        out.fail() << left_view << " of " << traced << " travels left the exact view";
    }
    if (out.pass) {
        out.detail << traced << " vectors traced, " << left_view << " left the exact view";
    }
}

// ---------------------------------------------------------------------------
// Doubly exponential periods

void counter_machine_periods(Outcome& out)
{
    {
        const TmEncoding enc = doubleexp_period_instance(1);
        const SeqDescription& d = enc.description;
        const PeriodResult r = find_period(d, 1 << 20);
        if (!r.found || r.period % d.m() != 0 || r.period / d.m() < 4) {
            out.fail() << "n=1 period " << r.period << " with rows of " << d.m();
        } else {
            const auto s = eval_prefix(d, 3 * r.period + 1);
            for (std::uint64_t i = 0; i < s.size(); ++i) {
                if ((s[i] == d.hash()) != (i % r.period == 0)) {
                    out.fail() << "n=1 hash placement at " << i;
                    break;
                }
            }
            out.detail << "n=1: d=" << r.period << " quotient " << r.period / d.m() << "; ";
        }
    }
    {
        const TmEncoding enc = doubleexp_period_instance(2);
        const SeqDescription& d = enc.description;
        const PeriodResult r = find_period(d, 1 << 22);
        if (!r.found || r.period % d.m() != 0 || r.period / d.m() < 16) {
            out.fail() << "n=2 period " << r.period << " with rows of " << d.m();
        } else {
            out.detail << "n=2: d=" << r.period << " quotient " << r.period / d.m();
        }
    }
}

// ---------------------------------------------------------------------------
// Determinism

void determinism(Outcome& out)
{
    std::size_t cases = 0;
    for (const golden::Case& c : golden::kCases) {
        const std::string first = golden::transcript(c, "a");
        const std::string second = golden::transcript(c, "b");
        const std::string pinned = golden::slurp(golden::fs::path(GOLDEN_DIR) / (std::string(c.name) + ".txt"));
        if (first != second || first != pinned) {
            out.fail() << "transcript " << c.name;
        }
        ++cases;
    }
    const Socn net = testnets::drain();
    const PlaneColoring col = color_planes(net, 24, 12);
    std::size_t renders = 0;
    for (ImageFormat format : {ImageFormat::Pgm, ImageFormat::Svg}) {
        const RenderSpec spec{format, 3, format == ImageFormat::Svg, format == ImageFormat::Svg};
        for (std::size_t p = 0; p < net.num_states(); ++p) {
            for (std::size_t q = 0; q < net.num_states(); ++q) {
                ++renders;
                if (render_plane(col, p, q, spec) != render_plane(color_planes(net, 24, 12), p, q, spec)) {
                    out.fail() << "render of plane " << p << "," << q;
                }
            }
        }
        std::string dumps[2];
        for (int run = 0; run < 2; ++run) {
            const auto dir = golden::fs::temp_directory_path() / ("gamelab-acceptance-" + std::to_string(run));
            golden::fs::remove_all(dir);
            for (const auto& name : render_all(net.states, color_planes(net, 24, 12), dir.string(), spec)) {
                dumps[run] += name + "\n" + golden::slurp(dir / name);
            }
            golden::fs::remove_all(dir);
        }
        if (dumps[0] != dumps[1]) {
            out.fail() << "render_all output differs";
        }
    }
    if (out.pass) {
        out.detail << cases << " CLI transcripts and " << renders << " renders plus two directory renders repeated";
    }
}

}  // namespace

int main()
{
    const std::vector<std::pair<int, std::function<void(Outcome&)>>> criteria = {
        {1, reduced_game_agrees_with_sequence},
        {2, reduced_game_facts},
        {3, mimicking_lts_equivalence},
        {4, countdown_window_solver},
        {5, mimicking_net_consistency},
        {6, drain_belt},
        {7, monotonicity_and_ranks},
        {8, vector_travel},
        {9, counter_machine_periods},
        {10, determinism},
    };
    int failed = 0;
    for (const auto& [number, check] : criteria) {
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            check(out);
        } catch (const std::exception& e) {
            out.fail() << "exception: " << e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        failed += out.pass ? 0 : 1;
        std::cout << "criterion " << number << ": " << (out.pass ? "PASS" : "FAIL") << " (" << out.detail.str()
                  << ") [" << ms << " ms]" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
