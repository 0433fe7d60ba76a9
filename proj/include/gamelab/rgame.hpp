#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gamelab {

enum class Owner { Eve, Adam };

using VertexId = std::size_t;

/// Finite reachability game. Edges are deduplicated per source vertex.
class RGame {
public:
    VertexId add_vertex(std::string name, Owner owner, bool target = false);
    void add_edge(VertexId from, VertexId to);
    void set_target(VertexId v, bool target = true);

    std::size_t num_vertices() const { return names_.size(); }
    const std::string& name(VertexId v) const { return names_.at(v); }
    Owner owner(VertexId v) const { return owners_.at(v); }
    bool is_target(VertexId v) const { return targets_.at(v); }
    const std::vector<VertexId>& successors(VertexId v) const { return edges_.at(v); }
    std::optional<VertexId> find(const std::string& name) const;

private:
    std::vector<std::string> names_;
    std::vector<Owner> owners_;
    std::vector<bool> targets_;
    std::vector<std::vector<VertexId>> edges_;
    std::unordered_map<std::string, VertexId> index_;
};

/// Eve's winning area with exact attractor ranks.
struct WinningArea {
    std::vector<std::optional<unsigned>> rank;  // nullopt = not winning

    bool winning(VertexId v) const { return rank.at(v).has_value(); }
};

/// Backward induction: targets get rank 0; an Eve vertex gets one more than
/// its best successor; an Adam vertex with at least one successor gets one
/// more than its worst successor once all successors are ranked.
WinningArea winning_area(const RGame& game);

struct CounterRule {
    std::size_t from;
    std::int64_t delta;
    std::size_t to;

    bool operator==(const CounterRule&) const = default;
};

/// Succinct one-counter net reachability game; the target configuration is
/// target(0).
struct SocnRGame {
    std::vector<std::string> states;
    std::vector<Owner> owners;
    std::vector<CounterRule> rules;
    std::size_t target = 0;

    std::size_t num_states() const { return states.size(); }
    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t add_state(std::string name, Owner owner);
    void add_rule(std::size_t from, std::int64_t delta, std::size_t to);
    /// Throws std::invalid_argument on dangling indices.
    void validate() const;
};

/// Vertex of q(k) in an expansion with counter bound `bound`.
inline VertexId config_vertex(std::size_t state, std::uint64_t counter, std::uint64_t bound)
{
    return state * (bound + 1) + counter;
}

/// Finite truncation to counters 0..bound. Edges leaving the region upward
/// are dropped; an Adam vertex that loses such an edge gets a self-loop
/// instead, so Adam can always stall there. Winning vertices of the
/// expansion are therefore winning in the infinite game; non-winning is
/// exact only when no rule increases the counter.
RGame expand_region(const SocnRGame& game, std::uint64_t bound);

}  // namespace gamelab
