#include "gamelab/reductions.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gamelab {

SeqCountdown seqdesc_to_countdown(const SeqDescription& d)
{
    const std::size_t n = d.alphabet_size();
    const auto m = static_cast<std::int64_t>(d.m());
    SocnRGame g;
    const std::size_t win = g.add_state("p_win", Owner::Eve);
    const std::size_t bad = g.add_state("p_bad", Owner::Eve);
    const std::size_t p1 = g.add_state("p1", Owner::Eve);
    const std::size_t p2 = g.add_state("p2", Owner::Adam);
    std::vector<std::size_t> s(n);
    for (std::size_t b = 0; b < n; ++b) {
        s[b] = g.add_state("s[" + d.symbol_name(static_cast<Symbol>(b)) + "]", Owner::Eve);
    }
    g.target = win;

    g.add_rule(p1, -1, p1);
    g.add_rule(p1, -1, win);
    g.add_rule(p2, -1, p1);
    g.add_rule(p2, -(m + 2), bad);
    g.add_rule(s[d.blank()], -1, p2);
    g.add_rule(s[d.hash()], -2, win);
    for (Symbol a = 0; a < n; ++a) {
        for (Symbol b = 0; b < n; ++b) {
            for (Symbol c = 0; c < n; ++c) {
                const std::size_t t = g.add_state("t[" + d.symbol_name(a) + "," + d.symbol_name(b) +
                                                      "," + d.symbol_name(c) + "]",
                                                  Owner::Adam);
                g.add_rule(s[d.apply(a, b, c)], -(m - 2), t);
                g.add_rule(t, -3, s[a]);
                g.add_rule(t, -2, s[b]);
                g.add_rule(t, -1, s[c]);
            }
        }
    }
    return SeqCountdown{CountdownGame(std::move(g)), std::move(s), win, bad, p1, p2};
}

PumpedGame ecg_to_socnrg(const CountdownGame& game, std::size_t p0)
{
    SocnRGame g = game.game();
    if (p0 >= g.num_states()) {
        throw std::invalid_argument("start state out of range");
    }
    std::string name = g.states[p0] + "'";
    while (g.find(name)) {
        name += "'";
    }
    const std::size_t start = g.add_state(name, Owner::Eve);
    g.add_rule(start, 1, start);
    g.add_rule(start, 0, p0);
    return PumpedGame{std::move(g), start};
}

std::string edge_action(const std::string& from, const std::string& to)
{
    return "a[" + from + "->" + to + "]";
}

MimickingLts rgame_to_mimicking_lts(const RGame& game)
{
    const std::size_t n = game.num_vertices();
    MimickingLts out;
    out.commit = out.lts.add_action("a_c");
    out.win = out.lts.add_action("a_win");
    for (VertexId v = 0; v < n; ++v) {
        out.original.push_back(out.lts.add_state(game.name(v)));
    }
    for (VertexId v = 0; v < n; ++v) {
        out.copy.push_back(out.lts.add_state(game.name(v) + "'"));
    }
    auto& lts = out.lts;
    for (VertexId v = 0; v < n; ++v) {
        const auto& succ = game.successors(v);
        if (game.is_target(v)) {
            lts.add_transition(out.original[v], out.win, out.original[v]);
        }
        if (game.owner(v) == Owner::Eve) {
            for (VertexId w : succ) {
                const ActionId a = lts.add_action(edge_action(game.name(v), game.name(w)));
                lts.add_transition(out.original[v], a, out.original[w]);
                lts.add_transition(out.copy[v], a, out.copy[w]);
            }
            continue;
        }
        if (succ.empty()) {
            continue;
        }
        const StateId choice = lts.add_state("<" + game.name(v) + ",X>");
        out.choice_state[v] = choice;
        lts.add_transition(out.original[v], out.commit, choice);
        for (VertexId w : succ) {
            const StateId pair = lts.add_state("<" + game.name(v) + "," + game.name(w) + ">");
            out.pair_state[{v, w}] = pair;
            lts.add_transition(out.original[v], out.commit, pair);
            lts.add_transition(out.copy[v], out.commit, pair);
        }
        for (VertexId w : succ) {
            const ActionId a = lts.add_action(edge_action(game.name(v), game.name(w)));
            lts.add_transition(choice, a, out.original[w]);
            const StateId pair = out.pair_state[{v, w}];
            lts.add_transition(pair, a, out.copy[w]);
            for (VertexId u : succ) {
                if (u != w) {
                    lts.add_transition(out.pair_state[{v, u}], a, out.original[w]);
                }
            }
        }
    }
    return out;
}

SocnRGame separate_parallel_rules(const SocnRGame& game)
{
    game.validate();
    SocnRGame out;
    out.states = game.states;
    out.owners = game.owners;
    out.target = game.target;
    std::set<std::pair<std::size_t, std::size_t>> used;
    std::set<std::tuple<std::size_t, std::int64_t, std::size_t>> seen;
    for (const auto& r : game.rules) {
        if (!seen.emplace(r.from, r.delta, r.to).second) {
            continue;
        }
        if (used.emplace(r.from, r.to).second) {
            out.add_rule(r.from, r.delta, r.to);
            continue;
        }
        std::string name = game.states[r.from] + "~" + game.states[r.to];
        for (unsigned k = 1; out.find(name); ++k) {
            name = game.states[r.from] + "~" + game.states[r.to] + "~" + std::to_string(k);
        }
        const std::size_t mid = out.add_state(name, game.owners[r.from]);
        out.add_rule(r.from, r.delta, mid);
        out.add_rule(mid, 0, r.to);
        used.emplace(r.from, mid);
        used.emplace(mid, r.to);
    }
    return out;
}

MimickingNet socnrgame_to_socn(const SocnRGame& input)
{
    MimickingNet out;
    out.game = separate_parallel_rules(input);
    const SocnRGame& g = out.game;
    Socn& net = out.net;
    const ActionId commit = net.add_action("a_c");
    const ActionId win = net.add_action("a_win");
    for (std::size_t q = 0; q < g.num_states(); ++q) {
        out.original.push_back(net.add_state(g.states[q]));
    }
    for (std::size_t q = 0; q < g.num_states(); ++q) {
        out.copy.push_back(net.add_state(g.states[q] + "'"));
    }
    for (std::size_t q = 0; q < g.num_states(); ++q) {
        std::vector<CounterRule> rules;
        for (const auto& r : g.rules) {
            if (r.from == q) {
                rules.push_back(r);
            }
        }
        if (g.owners[q] == Owner::Eve) {
            for (const auto& r : rules) {
                const ActionId a = net.add_action(edge_action(g.states[q], g.states[r.to]));
                net.add_rule(out.original[q], a, r.delta, out.original[r.to]);
                net.add_rule(out.copy[q], a, r.delta, out.copy[r.to]);
            }
            continue;
        }
        if (rules.empty()) {
            continue;
        }
        // q(k) may commit only when some rule is enabled at k, i.e. k >= shift.
        std::int64_t shift = std::numeric_limits<std::int64_t>::max();
        for (const auto& r : rules) {
            shift = std::min<std::int64_t>(shift, std::max<std::int64_t>(-r.delta, 0));
        }
        const std::size_t choice = net.add_state("<" + g.states[q] + ",X>");
        out.choice_state[q] = choice;
        out.choice_shift[q] = shift;
        net.add_rule(out.original[q], commit, -shift, choice);
        std::vector<std::size_t> pair;
        for (const auto& r : rules) {
            pair.push_back(net.add_state("<" + g.states[q] + "," + g.states[r.to] + ">"));
            out.pair_state[{q, r.to}] = pair.back();
        }
        for (std::size_t i = 0; i < rules.size(); ++i) {
            const auto& r = rules[i];
            const std::int64_t down = std::min<std::int64_t>(r.delta, 0);
            const std::int64_t up = std::max<std::int64_t>(r.delta, 0);
            const ActionId a = net.add_action(edge_action(g.states[q], g.states[r.to]));
            net.add_rule(out.original[q], commit, down, pair[i]);
            net.add_rule(out.copy[q], commit, down, pair[i]);
            net.add_rule(choice, a, r.delta + shift, out.original[r.to]);
            net.add_rule(pair[i], a, up, out.copy[r.to]);
            for (std::size_t j = 0; j < rules.size(); ++j) {
                if (j != i) {
                    const ActionId b = net.add_action(edge_action(g.states[q], g.states[rules[j].to]));
                    net.add_rule(pair[i], b, rules[j].delta - down, out.original[rules[j].to]);
                }
            }
        }
    }
    net.add_rule(out.original[g.target], win, 0, out.original[g.target]);
    return out;
}

}  // namespace gamelab
