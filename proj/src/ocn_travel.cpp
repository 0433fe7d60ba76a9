#include "gamelab/ocn_sim.hpp"

namespace gamelab {

namespace {

constexpr unsigned kBlackRank = ~0U;

unsigned rank_or_black(const PlaneColoring& c, std::size_t p, std::size_t q, std::uint64_t m,
                       std::uint64_t n)
{
    const auto r = c.rank(p, q, m, n);
    return r ? *r : kBlackRank;
}

bool in_view(const PlaneColoring& c, const BwVector& v)
{
    return v.m1 < c.width() && v.m2 < c.width() && v.n1 < c.view() && v.n2 < c.view();
}

std::optional<std::uint64_t> shifted(std::uint64_t x, std::int64_t d)
{
    const std::int64_t y = static_cast<std::int64_t>(x) + d;
    if (y < 0) {
        return std::nullopt;
    }
    return static_cast<std::uint64_t>(y);
}

}  // namespace

Travel trace_vector_travel(const Socn& net, const PlaneColoring& c, const BwVector& v0)
{
    Travel out;
    if (!net.is_unary()) {
        out.message = "vector travel needs a unary net";
        return out;
    }
    if (v0.p >= c.num_states() || v0.q >= c.num_states() || !in_view(c, v0)) {
        out.message = "vector outside the exact view";
        return out;
    }
    if (!c.black(v0.p, v0.q, v0.m1, v0.n1) || c.black(v0.p, v0.q, v0.m2, v0.n2)) {
        out.message = "vector must start black and end white";
        return out;
    }

    const bool horizontal = v0.n1 == v0.n2;
    const bool vertical = v0.m1 == v0.m2;
    auto terminal = [&](const BwVector& v) {
        if (horizontal) {
            return v.m1 == 0;
        }
        if (vertical) {
            return v.n2 == 0;
        }
        return v.m1 == 0 || v.n2 == 0;
    };

    BwVector v = v0;
    unsigned r = *c.rank(v.p, v.q, v.m2, v.n2);
    out.ranks.push_back(r);
    for (;;) {
        if (terminal(v)) {
            out.status = Travel::Status::Reached;
            if (r == 1) {
                // Name an action the attacker has at the end and the defender lacks.
                for (const auto& att : net.rules) {
                    if (att.from != v.p || !shifted(v.m2, att.delta)) {
                        continue;
                    }
                    bool answer = false;
                    for (const auto& def : net.rules) {
                        answer = answer || (def.from == v.q && def.action == att.action &&
                                            shifted(v.n2, def.delta));
                    }
                    if (!answer) {
                        out.mismatch_action = net.actions[att.action];
                        break;
                    }
                }
            }
            return out;
        }
        if (r == 1) {
            out.status = Travel::Status::Breach;
            out.message = "rank-1 end away from the axes";
            return out;
        }

        // An attacker rule winning at the end is also playable at the start;
        // a defender answer that keeps the start above the new end rank is
        // also playable at the end.
        std::optional<BwVector> next;
        unsigned next_rank = 0;
        for (const auto& att : net.rules) {
            if (att.from != v.p) {
                continue;
            }
            const auto m1 = shifted(v.m1, att.delta);
            const auto m2 = shifted(v.m2, att.delta);
            if (!m1 || !m2 || *m2 >= c.cols() || *m1 >= c.cols()) {
                continue;
            }
            bool all_lower = true;
            for (const auto& def : net.rules) {
                if (def.from != v.q || def.action != att.action) {
                    continue;
                }
                const auto n2 = shifted(v.n2, def.delta);
                if (!n2) {
                    continue;
                }
                if (*n2 >= c.rows() || rank_or_black(c, att.to, def.to, *m2, *n2) >= r) {
                    all_lower = false;
                    break;
                }
            }
            if (!all_lower) {
                continue;
            }
            for (const auto& def : net.rules) {
                if (def.from != v.q || def.action != att.action) {
                    continue;
                }
                const auto n1 = shifted(v.n1, def.delta);
                const auto n2 = shifted(v.n2, def.delta);
                if (!n1 || !n2 || *n1 >= c.rows() || *n2 >= c.rows()) {
                    continue;
                }
                if (c.black(att.to, def.to, *m1, *n1)) {
                    next = BwVector{att.to, def.to, *m1, *n1, *m2, *n2};
                    next_rank = *c.rank(att.to, def.to, *m2, *n2);
                    break;
                }
            }
            if (next) {
                break;
            }
        }
        if (!next) {
            out.status = Travel::Status::Breach;
            out.message = "no neighbour vector with a smaller rank";
            return out;
        }
        v = *next;
        r = next_rank;
        out.steps.push_back(v);
        out.ranks.push_back(r);
        if (!in_view(c, v)) {
            out.status = Travel::Status::LeftView;
            out.message = "travel left the exact view";
            return out;
        }
    }
}

}  // namespace gamelab
