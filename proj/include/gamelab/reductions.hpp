#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gamelab/countdown.hpp"
#include "gamelab/lts.hpp"
#include "gamelab/rgame.hpp"
#include "gamelab/seqdesc.hpp"
#include "gamelab/socn.hpp"

namespace gamelab {

/// Countdown game whose configuration s[b](k+2) is winning exactly when the
/// described sequence has b at position k.
struct SeqCountdown {
    CountdownGame game;
    std::vector<std::size_t> symbol_state;  // symbol -> s[b]
    std::size_t win, bad, p1, p2;
};

SeqCountdown seqdesc_to_countdown(const SeqDescription& d);

/// The countdown game plus a fresh Eve state that pumps the counter and then
/// enters the original start state. The question becomes start(0).
struct PumpedGame {
    SocnRGame game;
    std::size_t start;
};

PumpedGame ecg_to_socnrg(const CountdownGame& game, std::size_t p0);

/// LTS in which Defender can mimic Adam: vertex s is simulated by its copy
/// s' exactly when Eve does not win from s.
struct MimickingLts {
    Lts lts;
    std::vector<StateId> original;  // vertex -> s
    std::vector<StateId> copy;      // vertex -> s'
    std::map<VertexId, StateId> choice_state;                         // Adam s -> <s,X>
    std::map<std::pair<VertexId, VertexId>, StateId> pair_state;     // Adam edge -> <s,t>
    ActionId commit;  // a_c
    ActionId win;     // a_win
};

MimickingLts rgame_to_mimicking_lts(const RGame& game);

/// Action name used for the move along an edge.
std::string edge_action(const std::string& from, const std::string& to);

/// Makes every ordered state pair carry at most one rule by routing extra
/// rules through fresh intermediate states owned like their source.
SocnRGame separate_parallel_rules(const SocnRGame& game);

/// Net whose configurations mimic the game's configurations. Nets cannot
/// test for zero, so p_win carries a_win at every counter value: the net
/// mimics the game whose targets are p_win(k) for all k.
struct MimickingNet {
    Socn net;
    SocnRGame game;  // the game after separate_parallel_rules
    std::vector<std::size_t> original;  // game state -> q
    std::vector<std::size_t> copy;      // game state -> q'
    /// Adam state q -> <q,X>. Configuration <q(k),X> of the mimicking game
    /// is <q,X>(k - choice_shift[q]), where choice_shift[q] is the least
    /// counter value enabling one of q's rules.
    std::map<std::size_t, std::size_t> choice_state;
    std::map<std::size_t, std::int64_t> choice_shift;
    /// Adam rule q -> r -> <q,r>, holding counter k + min(z, 0).
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_state;
};

MimickingNet socnrgame_to_socn(const SocnRGame& game);

}  // namespace gamelab
