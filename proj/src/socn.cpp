#include "gamelab/socn.hpp"

#include <stdexcept>

namespace gamelab {

std::optional<std::size_t> Socn::find_state(const std::string& name) const
{
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<ActionId> Socn::find_action(const std::string& name) const
{
    for (std::size_t i = 0; i < actions.size(); ++i) {
        if (actions[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t Socn::add_state(std::string name)
{
    if (find_state(name)) {
        throw std::invalid_argument("duplicate state name: " + name);
    }
    states.push_back(std::move(name));
    return states.size() - 1;
}

ActionId Socn::add_action(const std::string& name)
{
    if (auto a = find_action(name)) {
        return *a;
    }
    actions.push_back(name);
    return actions.size() - 1;
}

void Socn::add_rule(std::size_t from, ActionId action, std::int64_t delta, std::size_t to)
{
    const SocnRule rule{from, action, delta, to};
    for (const auto& r : rules) {
        if (r == rule) {
            return;
        }
    }
    rules.push_back(rule);
}

bool Socn::is_unary() const
{
    return max_abs_delta() <= 1;
}

std::uint64_t Socn::max_abs_delta() const
{
    std::uint64_t best = 0;
    for (const auto& r : rules) {
        const auto mag = static_cast<std::uint64_t>(r.delta < 0 ? -r.delta : r.delta);
        best = std::max(best, mag);
    }
    return best;
}

void Socn::validate() const
{
    for (const auto& r : rules) {
        if (r.from >= states.size() || r.to >= states.size()) {
            throw std::invalid_argument("rule endpoint out of range");
        }
        if (r.action >= actions.size()) {
            throw std::invalid_argument("rule action out of range");
        }
    }
}

std::vector<Config> successors(const Socn& net, const Config& c, ActionId a)
{
    std::vector<Config> out;
    for (const auto& r : net.rules) {
        if (r.from != c.first || r.action != a) {
            continue;
        }
        if (r.delta < 0 && c.second < static_cast<std::uint64_t>(-r.delta)) {
            continue;
        }
        const Config next{r.to, static_cast<std::uint64_t>(static_cast<std::int64_t>(c.second) + r.delta)};
        bool dup = false;
        for (const auto& x : out) {
            dup = dup || x == next;
        }
        if (!dup) {
            out.push_back(next);
        }
    }
    return out;
}

Lts to_lts(const Socn& net, std::uint64_t bound)
{
    net.validate();
    Lts lts;
    for (const auto& a : net.actions) {
        lts.add_action(a);
    }
    for (std::size_t q = 0; q < net.num_states(); ++q) {
        for (std::uint64_t k = 0; k <= bound; ++k) {
            lts.add_state(net.states[q] + "(" + std::to_string(k) + ")");
        }
    }
    for (std::size_t q = 0; q < net.num_states(); ++q) {
        for (std::uint64_t k = 0; k <= bound; ++k) {
            for (ActionId a = 0; a < net.num_actions(); ++a) {
                for (const auto& [to, j] : successors(net, {q, k}, a)) {
                    if (j <= bound) {
                        lts.add_transition(q * (bound + 1) + k, a, to * (bound + 1) + j);
                    }
                }
            }
        }
    }
    return lts;
}

SearchOutcome config_attacker_search(const Socn& net, const Config& left, const Config& right,
                                     unsigned budget)
{
    auto oracle = [&net](const Config& c, ActionId a) { return successors(net, c, a); };
    AttackerSearch<Config, Config> search(net.num_actions(), oracle, oracle);
    return search.search(left, right, budget);
}

}  // namespace gamelab
