#include "gamelab/rgame.hpp"

#include <stdexcept>

namespace gamelab {

VertexId RGame::add_vertex(std::string name, Owner owner, bool target)
{
    const VertexId id = names_.size();
    if (!index_.emplace(name, id).second) {
        throw std::invalid_argument("duplicate vertex name: " + name);
    }
    names_.push_back(std::move(name));
    owners_.push_back(owner);
    targets_.push_back(target);
    edges_.emplace_back();
    return id;
}

void RGame::add_edge(VertexId from, VertexId to)
{
    if (from >= num_vertices() || to >= num_vertices()) {
        throw std::out_of_range("edge endpoint is not a vertex");
    }
    auto& list = edges_[from];
    for (VertexId v : list) {
        if (v == to) {
            return;
        }
    }
    list.push_back(to);
}

void RGame::set_target(VertexId v, bool target)
{
    targets_.at(v) = target;
}

std::optional<VertexId> RGame::find(const std::string& name) const
{
    if (auto it = index_.find(name); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

WinningArea winning_area(const RGame& game)
{
    const std::size_t n = game.num_vertices();
    std::vector<std::vector<VertexId>> preds(n);
    std::vector<std::size_t> pending(n);
    for (VertexId v = 0; v < n; ++v) {
        pending[v] = game.successors(v).size();
        for (VertexId w : game.successors(v)) {
            preds[w].push_back(v);
        }
    }

    WinningArea area;
    area.rank.assign(n, std::nullopt);
    std::vector<VertexId> frontier;
    for (VertexId v = 0; v < n; ++v) {
        if (game.is_target(v)) {
            area.rank[v] = 0;
            frontier.push_back(v);
        }
    }
    // Level-synchronous sweep: everything ranked in round r has rank r.
    for (unsigned r = 1; !frontier.empty(); ++r) {
        std::vector<VertexId> next;
        for (VertexId w : frontier) {
            for (VertexId v : preds[w]) {
                if (area.rank[v]) {
                    continue;
                }
                if (game.owner(v) == Owner::Eve) {
                    area.rank[v] = r;
                    next.push_back(v);
                } else if (--pending[v] == 0) {
                    area.rank[v] = r;
                    next.push_back(v);
                }
            }
        }
        frontier = std::move(next);
    }
    return area;
}

std::optional<std::size_t> SocnRGame::find(const std::string& name) const
{
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t SocnRGame::add_state(std::string name, Owner owner)
{
    if (find(name)) {
        throw std::invalid_argument("duplicate state name: " + name);
    }
    states.push_back(std::move(name));
    owners.push_back(owner);
    return states.size() - 1;
}

void SocnRGame::add_rule(std::size_t from, std::int64_t delta, std::size_t to)
{
    rules.push_back({from, delta, to});
}

void SocnRGame::validate() const
{
    if (owners.size() != states.size()) {
        throw std::invalid_argument("owner list does not match state list");
    }
    if (target >= states.size()) {
        throw std::invalid_argument("target state out of range");
    }
    for (const auto& rule : rules) {
        if (rule.from >= states.size() || rule.to >= states.size()) {
            throw std::invalid_argument("rule endpoint out of range");
        }
    }
}

RGame expand_region(const SocnRGame& game, std::uint64_t bound)
{
    game.validate();
    RGame out;
    for (std::size_t q = 0; q < game.num_states(); ++q) {
        for (std::uint64_t k = 0; k <= bound; ++k) {
            out.add_vertex(game.states[q] + "(" + std::to_string(k) + ")", game.owners[q],
                           q == game.target && k == 0);
        }
    }
    for (std::size_t q = 0; q < game.num_states(); ++q) {
        for (std::uint64_t k = 0; k <= bound; ++k) {
            const VertexId v = config_vertex(q, k, bound);
            for (const auto& rule : game.rules) {
                if (rule.from != q) {
                    continue;
                }
                const auto next = static_cast<std::int64_t>(k) + rule.delta;
                if (next < 0) {
                    continue;
                }
                if (static_cast<std::uint64_t>(next) > bound) {
                    if (game.owners[q] == Owner::Adam) {
                        out.add_edge(v, v);
                    }
                    continue;
                }
                out.add_edge(v, config_vertex(rule.to, static_cast<std::uint64_t>(next), bound));
            }
        }
    }
    return out;
}

}  // namespace gamelab
