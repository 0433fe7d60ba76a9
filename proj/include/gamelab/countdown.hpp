#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "gamelab/rgame.hpp"

namespace gamelab {

/// Membership bitmap over control states.
using StateSet = std::vector<bool>;

/// Socn-r-game whose rules all strictly decrease the counter.
class CountdownGame {
public:
    /// Throws std::invalid_argument("rule delta must be negative") and the
    /// SocnRGame validation errors.
    explicit CountdownGame(SocnRGame game);

    const SocnRGame& game() const { return game_; }
    std::size_t num_states() const { return game_.num_states(); }
    /// Largest decrement magnitude; 0 for a game without rules.
    std::uint64_t max_decrement() const { return max_decrement_; }
    /// Rules leaving q, as (magnitude, successor) pairs.
    const std::vector<std::pair<std::uint64_t, std::size_t>>& rules_from(std::size_t q) const
    {
        return by_state_.at(q);
    }

private:
    SocnRGame game_;
    std::uint64_t max_decrement_ = 0;
    std::vector<std::vector<std::pair<std::uint64_t, std::size_t>>> by_state_;
};

/// Streams the level sets W(0), W(1), ... where W(j) = {q | q(j) is winning},
/// remembering only the last max_decrement() levels.
class LevelStream {
public:
    explicit LevelStream(const CountdownGame& game);

    /// Computes the next level and returns it; the first call yields W(0).
    const StateSet& next();
    /// Index of the level returned by the last next(); requires one call.
    std::uint64_t level() const { return level_ - 1; }
    /// Window W(j-w+1..j), oldest first, ending at the current level.
    const std::deque<StateSet>& window() const { return window_; }
    /// True once the window holds max_decrement() genuine levels, from
    /// which point the stream is a function of the window alone.
    bool window_full() const;

private:
    const CountdownGame* game_;
    std::uint64_t level_ = 0;  // index of the level next() computes
    std::deque<StateSet> window_;
};

/// Is p0(n0) winning for Eve?
bool solve_cg(const CountdownGame& game, std::size_t p0, std::uint64_t n0);

enum class CycleMode { HashSet, Brent };

struct EcgResult {
    enum class Kind { Yes, No, Inconclusive };

    Kind kind = Kind::Inconclusive;
    /// Yes: least winning counter value. Inconclusive: last level inspected.
    std::uint64_t level = 0;
    /// No: levels j1 < j2 whose M-level windows ending there coincide.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> repeat;
};

/// Does p0(n) win for some n? The answer is No once the window of the last
/// M levels repeats without p0 ever occurring. `cap` bounds the number of
/// levels generated.
EcgResult solve_ecg(const CountdownGame& game, std::size_t p0,
                    std::optional<std::uint64_t> cap = std::nullopt,
                    CycleMode mode = CycleMode::HashSet);

}  // namespace gamelab
