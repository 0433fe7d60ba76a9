// Seeded generators for the property and acceptance tests. Every generator
// takes the engine by reference, so a fixed seed gives a fixed model list.
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gamelab/countdown.hpp"
#include "gamelab/lts.hpp"
#include "gamelab/rgame.hpp"
#include "gamelab/seqdesc.hpp"
#include "gamelab/socn.hpp"

namespace models {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p)
{
    return std::bernoulli_distribution(p)(rng);
}

inline gamelab::Owner owner(Rng& rng)
{
    return coin(rng, 0.5) ? gamelab::Owner::Eve : gamelab::Owner::Adam;
}

inline gamelab::Lts lts(Rng& rng, int max_states = 7, int max_actions = 2)
{
    gamelab::Lts out;
    const auto n = uniform(rng, 1, max_states);
    const auto k = uniform(rng, 1, max_actions);
    for (std::int64_t s = 0; s < n; ++s) {
        out.add_state("s" + std::to_string(s));
    }
    for (std::int64_t a = 0; a < k; ++a) {
        out.add_action(std::string(1, static_cast<char>('a' + a)));
    }
    const double density = 0.1 + 0.3 * std::uniform_real_distribution<double>()(rng);
    for (std::int64_t s = 0; s < n; ++s) {
        for (std::int64_t a = 0; a < k; ++a) {
            for (std::int64_t t = 0; t < n; ++t) {
                if (coin(rng, density)) {
                    out.add_transition(s, a, t);
                }
            }
        }
    }
    return out;
}

inline gamelab::RGame rgame(Rng& rng, int max_vertices = 8)
{
    gamelab::RGame g;
    const auto n = uniform(rng, 1, max_vertices);
    for (std::int64_t v = 0; v < n; ++v) {
        g.add_vertex("v" + std::to_string(v), owner(rng), coin(rng, 0.2));
    }
    for (std::int64_t v = 0; v < n; ++v) {
        for (std::int64_t w = 0; w < n; ++w) {
            if (coin(rng, 0.25)) {
                g.add_edge(v, w);
            }
        }
    }
    return g;
}

/// Socn-r-game with counter changes in [lo, hi].
inline gamelab::SocnRGame socn_rgame(Rng& rng, int max_states, std::int64_t lo, std::int64_t hi,
                                     int max_rules)
{
    gamelab::SocnRGame g;
    const auto n = uniform(rng, 1, max_states);
    for (std::int64_t q = 0; q < n; ++q) {
        g.add_state("q" + std::to_string(q), owner(rng));
    }
    g.target = static_cast<std::size_t>(uniform(rng, 0, n - 1));
    const auto rules = uniform(rng, 0, max_rules);
    for (std::int64_t i = 0; i < rules; ++i) {
        g.add_rule(uniform(rng, 0, n - 1), uniform(rng, lo, hi), uniform(rng, 0, n - 1));
    }
    return g;
}

inline gamelab::CountdownGame countdown(Rng& rng, int max_states = 6, std::int64_t max_decrement = 5)
{
    const auto M = uniform(rng, 1, max_decrement);
    return gamelab::CountdownGame(socn_rgame(rng, max_states, -M, -1, 3 * max_states));
}

/// Alphabet "#", "_", then up to two more letters; every triple gets an
/// entry drawn uniformly from the alphabet.
inline gamelab::SeqDescription seqdesc(Rng& rng, int max_symbols = 4, std::uint64_t min_m = 3,
                                       std::uint64_t max_m = 6)
{
    const auto size = uniform(rng, 2, max_symbols);
    std::vector<std::string> alphabet{"#", "_", "A", "B", "C", "D"};
    alphabet.resize(static_cast<std::size_t>(size));
    const auto m = static_cast<std::uint64_t>(uniform(rng, static_cast<std::int64_t>(min_m),
                                                      static_cast<std::int64_t>(max_m)));
    const auto fallback = static_cast<gamelab::Symbol>(uniform(rng, 0, size - 1));
    std::map<gamelab::Triple, gamelab::Symbol> rules;
    for (gamelab::Symbol a = 0; a < size; ++a) {
        for (gamelab::Symbol b = 0; b < size; ++b) {
            for (gamelab::Symbol c = 0; c < size; ++c) {
                if (coin(rng, 0.6)) {
                    rules[{a, b, c}] = static_cast<gamelab::Symbol>(uniform(rng, 0, size - 1));
                }
            }
        }
    }
    return gamelab::SeqDescription(std::move(alphabet), 0, 1, m, fallback, std::move(rules));
}

inline gamelab::Socn unary_net(Rng& rng, int max_states = 3, int max_rules = 4, int max_actions = 2)
{
    gamelab::Socn net;
    const auto n = uniform(rng, 1, max_states);
    const auto k = uniform(rng, 1, max_actions);
    for (std::int64_t q = 0; q < n; ++q) {
        net.add_state("q" + std::to_string(q));
    }
    for (std::int64_t a = 0; a < k; ++a) {
        net.add_action(std::string(1, static_cast<char>('a' + a)));
    }
    const auto rules = uniform(rng, 1, max_rules);
    for (std::int64_t i = 0; i < rules; ++i) {
        net.add_rule(uniform(rng, 0, n - 1), uniform(rng, 0, k - 1), uniform(rng, -1, 1), uniform(rng, 0, n - 1));
    }
    return net;
}

}  // namespace models
