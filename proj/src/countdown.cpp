#include "gamelab/countdown.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace gamelab {

CountdownGame::CountdownGame(SocnRGame game) : game_(std::move(game))
{
    game_.validate();
    by_state_.resize(game_.num_states());
    for (const auto& rule : game_.rules) {
        if (rule.delta >= 0) {
            throw std::invalid_argument("rule delta must be negative");
        }
        const auto magnitude = static_cast<std::uint64_t>(-rule.delta);
        max_decrement_ = std::max(max_decrement_, magnitude);
        auto& list = by_state_[rule.from];
        const std::pair<std::uint64_t, std::size_t> entry{magnitude, rule.to};
        if (std::find(list.begin(), list.end(), entry) == list.end()) {
            list.push_back(entry);
        }
    }
}

namespace {

std::size_t window_width(const CountdownGame& game)
{
    return static_cast<std::size_t>(std::max<std::uint64_t>(game.max_decrement(), 1));
}

// W(j) for j >= 1 from the window W(j-w..j-1), w = window.size() >= min(M, j).
StateSet compute_level(const CountdownGame& game, const std::deque<StateSet>& window, std::uint64_t j)
{
    const std::size_t n = game.num_states();
    StateSet level(n, false);
    const std::size_t w = window.size();
    for (std::size_t q = 0; q < n; ++q) {
        const bool eve = game.game().owners[q] == Owner::Eve;
        bool any_enabled = false;
        bool all_good = true;
        bool some_good = false;
        for (const auto& [magnitude, to] : game.rules_from(q)) {
            if (magnitude > j) {
                continue;  // counter would go negative
            }
            any_enabled = true;
            const bool good = window[w - magnitude][to];
            some_good = some_good || good;
            all_good = all_good && good;
        }
        level[q] = eve ? some_good : (any_enabled && all_good);
    }
    return level;
}

std::vector<bool> flatten(const std::deque<StateSet>& window)
{
    std::vector<bool> key;
    for (const auto& level : window) {
        key.insert(key.end(), level.begin(), level.end());
    }
    return key;
}

}  // namespace

LevelStream::LevelStream(const CountdownGame& game) : game_(&game) {}

const StateSet& LevelStream::next()
{
    StateSet level;
    if (level_ == 0) {
        level.assign(game_->num_states(), false);
        level[game_->game().target] = true;
    } else {
        level = compute_level(*game_, window_, level_);
    }
    window_.push_back(std::move(level));
    if (window_.size() > window_width(*game_)) {
        window_.pop_front();
    }
    ++level_;
    return window_.back();
}

bool LevelStream::window_full() const
{
    return window_.size() == window_width(*game_);
}

bool solve_cg(const CountdownGame& game, std::size_t p0, std::uint64_t n0)
{
    if (p0 >= game.num_states()) {
        throw std::out_of_range("state out of range");
    }
    LevelStream stream(game);
    for (;;) {
        const StateSet& level = stream.next();
        if (stream.level() == n0) {
            return level[p0];
        }
    }
}

namespace {

EcgResult ecg_hashset(const CountdownGame& game, std::size_t p0, std::optional<std::uint64_t> cap)
{
    LevelStream stream(game);
    std::unordered_map<std::vector<bool>, std::uint64_t> seen;
    for (;;) {
        const StateSet& level = stream.next();
        const std::uint64_t j = stream.level();
        if (level[p0]) {
            return {EcgResult::Kind::Yes, j, std::nullopt};
        }
        if (stream.window_full()) {
            auto [it, inserted] = seen.emplace(flatten(stream.window()), j);
            if (!inserted) {
                return {EcgResult::Kind::No, j, std::make_pair(it->second, j)};
            }
        }
        if (cap && j >= *cap) {
            return {EcgResult::Kind::Inconclusive, j, std::nullopt};
        }
    }
}

// Brent's cycle finding over the sequence of full windows; O(M) windows in memory.
EcgResult ecg_brent(const CountdownGame& game, std::size_t p0, std::optional<std::uint64_t> cap)
{
    LevelStream stream(game);
    for (;;) {
        const StateSet& level = stream.next();
        if (level[p0]) {
            return {EcgResult::Kind::Yes, stream.level(), std::nullopt};
        }
        if (stream.window_full()) {
            break;
        }
        if (cap && stream.level() >= *cap) {
            return {EcgResult::Kind::Inconclusive, stream.level(), std::nullopt};
        }
    }
    const std::uint64_t start = stream.level();
    const std::deque<StateSet> origin = stream.window();
    auto advance = [&](std::deque<StateSet>& window, std::uint64_t j) {
        window.push_back(compute_level(game, window, j + 1));
        window.pop_front();
    };

    std::deque<StateSet> tortoise = origin;
    std::deque<StateSet> hare = origin;
    std::uint64_t hare_index = 0;
    std::uint64_t power = 1;
    std::uint64_t lambda = 1;
    advance(hare, start + hare_index);
    ++hare_index;
    for (;;) {
        if (hare.back()[p0]) {
            return {EcgResult::Kind::Yes, start + hare_index, std::nullopt};
        }
        if (tortoise == hare) {
            break;
        }
        if (cap && start + hare_index >= *cap) {
            return {EcgResult::Kind::Inconclusive, start + hare_index, std::nullopt};
        }
        if (power == lambda) {
            tortoise = hare;
            power *= 2;
            lambda = 0;
        }
        advance(hare, start + hare_index);
        ++hare_index;
        ++lambda;
    }

    tortoise = origin;
    hare = origin;
    for (std::uint64_t i = 0; i < lambda; ++i) {
        advance(hare, start + i);
    }
    std::uint64_t mu = 0;
    while (tortoise != hare) {
        advance(tortoise, start + mu);
        advance(hare, start + mu + lambda);
        ++mu;
    }
    return {EcgResult::Kind::No, start + hare_index, std::make_pair(start + mu, start + mu + lambda)};
}

}  // namespace

EcgResult solve_ecg(const CountdownGame& game, std::size_t p0, std::optional<std::uint64_t> cap,
                    CycleMode mode)
{
    if (p0 >= game.num_states()) {
        throw std::out_of_range("state out of range");
    }
    return mode == CycleMode::HashSet ? ecg_hashset(game, p0, cap) : ecg_brent(game, p0, cap);
}

}  // namespace gamelab
