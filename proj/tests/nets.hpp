#pragma once

#include "gamelab/socn.hpp"

namespace testnets {

// p −a,−1→ p1 −b,0→ p against q −a,−1→ q1 −b,−1→ q. The defender pays two
// per round where the attacker pays one, so p(m) ≾ q(n) iff n ≥ 2m.
inline gamelab::Socn drain()
{
    gamelab::Socn net;
    auto p = net.add_state("p");
    auto p1 = net.add_state("p1");
    auto q = net.add_state("q");
    auto q1 = net.add_state("q1");
    auto a = net.add_action("a");
    auto b = net.add_action("b");
    net.add_rule(p, a, -1, p1);
    net.add_rule(p1, b, 0, p);
    net.add_rule(q, a, -1, q1);
    net.add_rule(q1, b, -1, q);
    return net;
}

// p −a,0→ p against q −a,−1→ q.
inline gamelab::Socn loop_vs_countdown()
{
    gamelab::Socn net;
    auto p = net.add_state("p");
    auto q = net.add_state("q");
    auto a = net.add_action("a");
    net.add_rule(p, a, 0, p);
    net.add_rule(q, a, -1, q);
    return net;
}

}  // namespace testnets
