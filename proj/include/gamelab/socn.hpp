#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gamelab/lts.hpp"

namespace gamelab {

struct SocnRule {
    std::size_t from;
    ActionId action;
    std::int64_t delta;
    std::size_t to;

    bool operator==(const SocnRule&) const = default;
};

/// Labelled one-counter net with integer counter changes. Unary nets have
/// every |delta| <= 1.
struct Socn {
    std::vector<std::string> states;
    std::vector<std::string> actions;
    std::vector<SocnRule> rules;

    std::size_t num_states() const { return states.size(); }
    std::size_t num_actions() const { return actions.size(); }
    std::optional<std::size_t> find_state(const std::string& name) const;
    std::optional<ActionId> find_action(const std::string& name) const;
    /// Throws std::invalid_argument on a duplicate name.
    std::size_t add_state(std::string name);
    /// Returns the existing id for a known name.
    ActionId add_action(const std::string& name);
    /// Duplicate rules are ignored.
    void add_rule(std::size_t from, ActionId action, std::int64_t delta, std::size_t to);
    bool is_unary() const;
    std::uint64_t max_abs_delta() const;
    /// Throws std::invalid_argument on dangling indices.
    void validate() const;
};

/// Configuration q(k).
using Config = std::pair<std::size_t, std::uint64_t>;

/// a-successors of a configuration; a rule fires when the counter stays
/// nonnegative.
std::vector<Config> successors(const Socn& net, const Config& c, ActionId a);

/// Associated LTS restricted to counters 0..bound; transitions leaving the
/// region are dropped. State q(k) has id q*(bound+1)+k.
Lts to_lts(const Socn& net, std::uint64_t bound);

/// Simulation game between two configurations of the same net, searched to
/// the given number of rounds.
SearchOutcome config_attacker_search(const Socn& net, const Config& left, const Config& right,
                                     unsigned budget);

}  // namespace gamelab
