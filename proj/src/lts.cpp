#include "gamelab/lts.hpp"

#include <bit>
#include <stdexcept>

namespace gamelab {

namespace {

const std::vector<StateId> kNoSuccessors;

}  // namespace

StateId Lts::add_state(std::string name)
{
    const StateId id = state_names_.size();
    if (!state_index_.emplace(name, id).second) {
        throw std::invalid_argument("duplicate state name: " + name);
    }
    state_names_.push_back(std::move(name));
    succ_.emplace_back(action_names_.size());
    return id;
}

ActionId Lts::add_action(const std::string& name)
{
    if (auto it = action_index_.find(name); it != action_index_.end()) {
        return it->second;
    }
    const ActionId id = action_names_.size();
    action_index_.emplace(name, id);
    action_names_.push_back(name);
    return id;
}

void Lts::add_transition(StateId from, ActionId action, StateId to)
{
    if (from >= num_states() || to >= num_states()) {
        throw std::out_of_range("transition endpoint is not a state");
    }
    if (action >= num_actions()) {
        throw std::out_of_range("unknown action id");
    }
    auto& row = succ_[from];
    if (row.size() <= action) {
        row.resize(num_actions());
    }
    auto& list = row[action];
    for (StateId t : list) {
        if (t == to) {
            return;
        }
    }
    list.push_back(to);
}

std::size_t Lts::num_transitions() const
{
    std::size_t total = 0;
    for (const auto& row : succ_) {
        for (const auto& list : row) {
            total += list.size();
        }
    }
    return total;
}

const std::vector<StateId>& Lts::successors(StateId s, ActionId a) const
{
    const auto& row = succ_.at(s);
    if (a >= row.size()) {
        return kNoSuccessors;
    }
    return row[a];
}

std::optional<StateId> Lts::find_state(const std::string& name) const
{
    if (auto it = state_index_.find(name); it != state_index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::optional<ActionId> Lts::find_action(const std::string& name) const
{
    if (auto it = action_index_.find(name); it != action_index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

Lts disjoint_union(const Lts& first, const Lts& second, const std::string& suffix)
{
    Lts out;
    for (ActionId a = 0; a < first.num_actions(); ++a) {
        out.add_action(first.action_name(a));
    }
    for (ActionId a = 0; a < second.num_actions(); ++a) {
        out.add_action(second.action_name(a));
    }
    for (StateId s = 0; s < first.num_states(); ++s) {
        out.add_state(first.state_name(s));
    }
    const std::size_t offset = first.num_states();
    for (StateId s = 0; s < second.num_states(); ++s) {
        out.add_state(second.state_name(s) + suffix);
    }
    for (StateId s = 0; s < first.num_states(); ++s) {
        for (ActionId a = 0; a < first.num_actions(); ++a) {
            for (StateId t : first.successors(s, a)) {
                out.add_transition(s, a, t);
            }
        }
    }
    for (StateId s = 0; s < second.num_states(); ++s) {
        for (ActionId a = 0; a < second.num_actions(); ++a) {
            const ActionId unified = *out.find_action(second.action_name(a));
            for (StateId t : second.successors(s, a)) {
                out.add_transition(offset + s, unified, offset + t);
            }
        }
    }
    return out;
}

Relation::Relation(std::size_t num_states, bool full)
    : n_(num_states), words_((num_states + 63) / 64), bits_(n_ * words_, 0)
{
    if (full) {
        for (StateId s = 0; s < n_; ++s) {
            for (StateId t = 0; t < n_; ++t) {
                insert(s, t);
            }
        }
    }
}

bool Relation::contains(StateId s, StateId t) const
{
    if (s >= n_ || t >= n_) {
        return false;
    }
    return (bits_[s * words_ + t / 64] >> (t % 64)) & 1U;
}

void Relation::insert(StateId s, StateId t)
{
    if (s >= n_ || t >= n_) {
        throw std::out_of_range("relation pair out of range");
    }
    bits_[s * words_ + t / 64] |= std::uint64_t{1} << (t % 64);
}

void Relation::erase(StateId s, StateId t)
{
    if (s >= n_ || t >= n_) {
        return;
    }
    bits_[s * words_ + t / 64] &= ~(std::uint64_t{1} << (t % 64));
}

std::size_t Relation::size() const
{
    std::size_t total = 0;
    for (std::uint64_t w : bits_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::vector<std::pair<StateId, StateId>> Relation::pairs() const
{
    std::vector<std::pair<StateId, StateId>> out;
    for (StateId s = 0; s < n_; ++s) {
        for (StateId t = 0; t < n_; ++t) {
            if (contains(s, t)) {
                out.emplace_back(s, t);
            }
        }
    }
    return out;
}

namespace {

// Does t answer every move of s into pairs accepted by `alive`?
template <class Alive>
bool matches_all_moves(const Lts& lts, StateId s, StateId t, Alive&& alive)
{
    for (ActionId a = 0; a < lts.num_actions(); ++a) {
        const auto& answers = lts.successors(t, a);
        for (StateId s2 : lts.successors(s, a)) {
            bool answered = false;
            for (StateId t2 : answers) {
                if (alive(s2, t2)) {
                    answered = true;
                    break;
                }
            }
            if (!answered) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

SimRankTable::SimRankTable(const Lts& lts) : n_(lts.num_states()), ranks_(n_ * n_, 0)
{
    // Kleene iteration: round r removes the pairs of ≾_{r-1} that fail one step.
    for (unsigned r = 1;; ++r) {
        std::vector<std::size_t> refuted;
        for (StateId s = 0; s < n_; ++s) {
            for (StateId t = 0; t < n_; ++t) {
                if (ranks_[s * n_ + t] != 0) {
                    continue;
                }
                const bool ok = matches_all_moves(lts, s, t, [&](StateId x, StateId y) {
                    return ranks_[x * n_ + y] == 0;
                });
                if (!ok) {
                    refuted.push_back(s * n_ + t);
                }
            }
        }
        if (refuted.empty()) {
            rounds_ = r - 1;
            break;
        }
        for (std::size_t idx : refuted) {
            ranks_[idx] = r;
        }
    }
}

RankResult SimRankTable::rank(StateId s, StateId t) const
{
    const unsigned r = ranks_.at(s * n_ + t);
    return r == 0 ? RankResult::infinite() : RankResult::finite(r);
}

Relation SimRankTable::level(unsigned r) const
{
    Relation rel(n_);
    for (StateId s = 0; s < n_; ++s) {
        for (StateId t = 0; t < n_; ++t) {
            const unsigned k = ranks_[s * n_ + t];
            if (k == 0 || k > r) {
                rel.insert(s, t);
            }
        }
    }
    return rel;
}

Relation SimRankTable::limit() const
{
    return level(rounds_ + 1);
}

Relation max_simulation(const Lts& lts)
{
    return SimRankTable(lts).limit();
}

Relation max_bisimulation(const Lts& lts)
{
    const std::size_t n = lts.num_states();
    Relation rel(n, true);
    bool changed = true;
    while (changed) {
        changed = false;
        Relation next = rel;
        for (StateId s = 0; s < n; ++s) {
            for (StateId t = 0; t < n; ++t) {
                if (!rel.contains(s, t)) {
                    continue;
                }
                auto alive = [&](StateId x, StateId y) { return rel.contains(x, y); };
                auto alive_rev = [&](StateId y, StateId x) { return rel.contains(x, y); };
                if (!matches_all_moves(lts, s, t, alive) || !matches_all_moves(lts, t, s, alive_rev)) {
                    next.erase(s, t);
                    changed = true;
                }
            }
        }
        rel = std::move(next);
    }
    return rel;
}

RankResult sim_rank(const Lts& lts, StateId s, StateId t)
{
    return SimRankTable(lts).rank(s, t);
}

bool is_simulation(const Lts& lts, const Relation& rel)
{
    for (const auto& [s, t] : rel.pairs()) {
        if (!matches_all_moves(lts, s, t, [&](StateId x, StateId y) { return rel.contains(x, y); })) {
            return false;
        }
    }
    return true;
}

bool is_bisimulation(const Lts& lts, const Relation& rel)
{
    for (const auto& [s, t] : rel.pairs()) {
        if (!matches_all_moves(lts, s, t, [&](StateId x, StateId y) { return rel.contains(x, y); })) {
            return false;
        }
        if (!matches_all_moves(lts, t, s, [&](StateId y, StateId x) { return rel.contains(x, y); })) {
            return false;
        }
    }
    return true;
}

SearchOutcome bounded_attacker_search(const Lts& left, const Lts& right, StateId s, StateId t,
                                      unsigned budget)
{
    // Unify actions by name; actions unknown to one side have no moves there.
    std::vector<std::string> names;
    for (ActionId a = 0; a < left.num_actions(); ++a) {
        names.push_back(left.action_name(a));
    }
    for (ActionId a = 0; a < right.num_actions(); ++a) {
        if (!left.find_action(right.action_name(a))) {
            names.push_back(right.action_name(a));
        }
    }
    std::vector<std::optional<ActionId>> in_left, in_right;
    for (const auto& name : names) {
        in_left.push_back(left.find_action(name));
        in_right.push_back(right.find_action(name));
    }
    AttackerSearch<StateId, StateId> search(
        names.size(),
        [&](const StateId& x, ActionId a) {
            return in_left[a] ? left.successors(x, *in_left[a]) : std::vector<StateId>{};
        },
        [&](const StateId& y, ActionId a) {
            return in_right[a] ? right.successors(y, *in_right[a]) : std::vector<StateId>{};
        });
    return search.search(s, t, budget);
}

}  // namespace gamelab
