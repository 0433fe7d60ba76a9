#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gamelab {

using StateId = std::size_t;
using ActionId = std::size_t;

/// Finite labelled transition system. Successor lists are kept per
/// (state, action) in insertion order; duplicates are dropped.
class Lts {
public:
    StateId add_state(std::string name);
    /// Returns the existing id when the label is already known.
    ActionId add_action(const std::string& name);
    void add_transition(StateId from, ActionId action, StateId to);

    std::size_t num_states() const { return state_names_.size(); }
    std::size_t num_actions() const { return action_names_.size(); }
    std::size_t num_transitions() const;

    const std::vector<StateId>& successors(StateId s, ActionId a) const;
    bool enables(StateId s, ActionId a) const { return !successors(s, a).empty(); }

    const std::string& state_name(StateId s) const { return state_names_.at(s); }
    const std::string& action_name(ActionId a) const { return action_names_.at(a); }
    std::optional<StateId> find_state(const std::string& name) const;
    std::optional<ActionId> find_action(const std::string& name) const;

private:
    std::vector<std::string> state_names_;
    std::vector<std::string> action_names_;
    std::unordered_map<std::string, StateId> state_index_;
    std::unordered_map<std::string, ActionId> action_index_;
    // succ_[s][a]; rows grow lazily when actions are added later.
    std::vector<std::vector<std::vector<StateId>>> succ_;
};

/// Second system's states are re-indexed after the first's; actions are
/// unified by name. State names of the second system get `suffix` appended.
Lts disjoint_union(const Lts& first, const Lts& second, const std::string& suffix = "'");

/// Set of ordered state pairs stored as one bitset row per left state.
class Relation {
public:
    Relation() = default;
    explicit Relation(std::size_t num_states, bool full = false);

    std::size_t num_states() const { return n_; }
    bool contains(StateId s, StateId t) const;
    void insert(StateId s, StateId t);
    void erase(StateId s, StateId t);
    std::size_t size() const;
    std::vector<std::pair<StateId, StateId>> pairs() const;

    bool operator==(const Relation& other) const = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Rank of a pair: finite natural r >= 1, or infinite (pair is in the
/// maximal simulation).
struct RankResult {
    std::optional<unsigned> rank;

    static RankResult infinite() { return {}; }
    static RankResult finite(unsigned r) { return {r}; }
    bool is_infinite() const { return !rank.has_value(); }
    bool operator==(const RankResult&) const = default;
};

/// Stratified simulation table: entry (s,t) holds the least r with
/// s not in ≾_r t, or 0 when the pair survives every level.
class SimRankTable {
public:
    explicit SimRankTable(const Lts& lts);

    std::size_t num_states() const { return n_; }
    /// Number of refinement rounds until stabilization.
    unsigned rounds() const { return rounds_; }
    RankResult rank(StateId s, StateId t) const;
    /// ≾_r as a relation (r = 0 gives the full relation).
    Relation level(unsigned r) const;
    Relation limit() const;

private:
    std::size_t n_;
    unsigned rounds_ = 0;
    std::vector<unsigned> ranks_;
};

Relation max_simulation(const Lts& lts);
Relation max_bisimulation(const Lts& lts);
RankResult sim_rank(const Lts& lts, StateId s, StateId t);

/// One-step closure checks.
bool is_simulation(const Lts& lts, const Relation& rel);
bool is_bisimulation(const Lts& lts, const Relation& rel);

/// Outcome of a bounded simulation game search.
struct SearchOutcome {
    std::optional<unsigned> attacker_rank;  // set iff Attacker wins within the budget

    bool attacker_wins() const { return attacker_rank.has_value(); }
};

/// Memoized min-max search of the simulation game over lazily generated
/// systems. `L` and `R` must be totally ordered. The cache persists across
/// queries, so one searcher can answer many pairs of the same systems.
template <class L, class R>
class AttackerSearch {
public:
    using LeftOracle = std::function<std::vector<L>(const L&, ActionId)>;
    using RightOracle = std::function<std::vector<R>(const R&, ActionId)>;

    AttackerSearch(std::size_t num_actions, LeftOracle left, RightOracle right)
        : num_actions_(num_actions), left_(std::move(left)), right_(std::move(right)) {}

    /// Exact rank when it does not exceed `budget`.
    SearchOutcome search(const L& s, const R& t, unsigned budget) {
        for (unsigned r = 1; r <= budget; ++r) {
            if (wins_within({s, t}, r)) {
                return {r};
            }
        }
        return {};
    }

    std::size_t cache_size() const { return cache_.size(); }

private:
    // Bounds on the rank: the pair is in ≾_survives and refuted within
    // refuted_within rounds (0 = not yet refuted).
    struct Entry {
        unsigned refuted_within = 0;
        unsigned survives = 0;
    };

    bool wins_within(const std::pair<L, R>& pair, unsigned r) {
        Entry& cached = cache_[pair];
        if (cached.refuted_within != 0 && cached.refuted_within <= r) {
            return true;
        }
        if (cached.survives >= r) {
            return false;
        }
        bool wins = false;
        for (ActionId a = 0; a < num_actions_ && !wins; ++a) {
            const std::vector<L> moves = left_(pair.first, a);
            if (moves.empty()) {
                continue;
            }
            const std::vector<R> answers = right_(pair.second, a);
            if (answers.empty()) {
                wins = true;
                break;
            }
            if (r == 1) {
                continue;
            }
            for (const L& next : moves) {
                bool all_refuted = true;
                for (const R& reply : answers) {
                    if (!wins_within({next, reply}, r - 1)) {
                        all_refuted = false;
                        break;
                    }
                }
                if (all_refuted) {
                    wins = true;
                    break;
                }
            }
        }
        if (wins) {
            if (cached.refuted_within == 0 || r < cached.refuted_within) {
                cached.refuted_within = r;
            }
        } else {
            cached.survives = std::max(cached.survives, r);
        }
        return wins;
    }

    std::size_t num_actions_;
    LeftOracle left_;
    RightOracle right_;
    std::map<std::pair<L, R>, Entry> cache_;
};

/// Bounded search between two states of finite systems (possibly the same).
SearchOutcome bounded_attacker_search(const Lts& left, const Lts& right, StateId s, StateId t,
                                      unsigned budget);

}  // namespace gamelab
