#include "gamelab/ocn_sim.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace gamelab {

std::uint64_t net_fingerprint(const Socn& net)
{
    std::ostringstream text;
    text << "states";
    for (const auto& s : net.states) {
        text << '\n' << s;
    }
    text << "\nactions";
    for (const auto& a : net.actions) {
        text << '\n' << a;
    }
    text << "\nrules";
    for (const auto& r : net.rules) {
        text << '\n' << r.from << ' ' << r.action << ' ' << r.delta << ' ' << r.to;
    }
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : text.str()) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::int64_t certified_frontier(const PlaneCertificate& plane, std::uint64_t n)
{
    const std::uint64_t H = plane.prefix.size();
    if (n < H) {
        return plane.prefix[n];
    }
    const std::uint64_t k = (n - H) / plane.period_y + 1;
    const std::int64_t base = plane.prefix[n - k * plane.period_y];
    if (base == kUnbounded || base < 0) {
        return base;
    }
    return base + static_cast<std::int64_t>(k * plane.period_x);
}

namespace {

const PlaneCertificate* find_plane(const BeltCertificate& cert, std::size_t p, std::size_t q)
{
    for (const auto& plane : cert.planes) {
        if (plane.p == p && plane.q == q) {
            return &plane;
        }
    }
    return nullptr;
}

std::int64_t floor_of(const Rational& x)
{
    std::int64_t f = x.numerator() / x.denominator();
    if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) {
        --f;
    }
    return f;
}

std::int64_t ceil_of(const Rational& x)
{
    return -floor_of(-x);
}

// Linear envelope of a plane's periodic tail.
struct Tail {
    const PlaneCertificate* plane = nullptr;
    Rational slope{0};
    bool has_finite = false;
    Rational lo{0}, hi{0};
};

constexpr std::uint64_t kMaxCheckedLevels = 2'000'000;

}  // namespace

bool certifies(const BeltCertificate& cert, std::size_t p, std::uint64_t m, std::size_t q,
               std::uint64_t n)
{
    const PlaneCertificate* plane = find_plane(cert, p, q);
    if (!plane) {
        return false;
    }
    const std::int64_t f = certified_frontier(*plane, n);
    return f == kUnbounded || (f >= 0 && static_cast<std::int64_t>(m) <= f);
}

VerifyResult verify_certificate(const Socn& net, const BeltCertificate& cert)
{
    VerifyResult res;
    net.validate();
    const std::size_t nq = net.num_states();
    if (cert.net_hash != net_fingerprint(net)) {
        res.message = "certificate was built for a different net";
        return res;
    }

    std::vector<Tail> tails(nq * nq);
    std::uint64_t max_prefix = 0;
    std::uint64_t period_lcm = 1;
    for (const auto& pc : cert.planes) {
        if (pc.p >= nq || pc.q >= nq) {
            res.message = "plane refers to an unknown state";
            return res;
        }
        Tail& t = tails[pc.p * nq + pc.q];
        if (t.plane) {
            res.message = "plane listed twice";
            return res;
        }
        t.plane = &pc;
        const std::uint64_t H = pc.prefix.size();
        if (pc.period_y < 1) {
            res.message = "period must have a positive vertical component";
            return res;
        }
        if (H < pc.period_y) {
            res.message = "prefix shorter than one period";
            return res;
        }
        for (std::int64_t v : pc.prefix) {
            if (v < -1) {
                res.message = "frontier value below -1";
                return res;
            }
        }
        // Differences repeat with the period, so one period past the prefix
        // settles monotonicity for good.
        for (std::uint64_t n = 1; n < H + pc.period_y; ++n) {
            if (certified_frontier(pc, n) < certified_frontier(pc, n - 1)) {
                res.message = "frontier is not nondecreasing";
                return res;
            }
        }
        for (std::uint64_t n = H - pc.period_y; n < H; ++n) {
            if (pc.period_x > 0 && pc.prefix[n] == -1) {
                res.message = "empty level in a growing tail";
                return res;
            }
        }
        t.slope = Rational(static_cast<std::int64_t>(pc.period_x), static_cast<std::int64_t>(pc.period_y));
        for (std::uint64_t n = H - pc.period_y; n < H; ++n) {
            if (pc.prefix[n] == kUnbounded) {
                continue;
            }
            const Rational c = Rational(pc.prefix[n]) - t.slope * static_cast<std::int64_t>(n);
            if (!t.has_finite || c < t.lo) {
                t.lo = c;
            }
            if (!t.has_finite || c > t.hi) {
                t.hi = c;
            }
            t.has_finite = true;
        }
        max_prefix = std::max(max_prefix, H);
        period_lcm = std::lcm(period_lcm, pc.period_y);
        if (period_lcm > kMaxCheckedLevels) {
            res.message = "periods too large to check";
            return res;
        }
    }

    const auto dmax = static_cast<std::int64_t>(net.max_abs_delta());
    std::int64_t settled = static_cast<std::int64_t>(max_prefix) + dmax;
    // Past these levels every comparison between planes of different
    // slopes has a fixed outcome and every frontier cell enables all moves.
    for (const Tail& t : tails) {
        if (t.plane && t.has_finite && t.slope > 0) {
            settled = std::max(settled, ceil_of((Rational(dmax) - t.lo) / t.slope));
        }
    }
    for (const auto& att : net.rules) {
        for (const auto& def : net.rules) {
            if (def.action != att.action) {
                continue;
            }
            const Tail& a = tails[att.from * nq + def.from];
            const Tail& b = tails[att.to * nq + def.to];
            if (!a.plane || !b.plane || !a.has_finite || !b.has_finite || a.slope == b.slope) {
                continue;
            }
            const Rational z(att.delta);
            const Rational zd(def.delta);
            if (b.slope > a.slope) {
                settled = std::max(settled, ceil_of((z - b.slope * zd - b.lo + a.hi) / (b.slope - a.slope)));
            } else {
                settled = std::max(settled,
                                   floor_of((b.slope * zd + b.hi - a.lo - z) / (a.slope - b.slope)) + 1);
            }
        }
    }
    const std::uint64_t last = static_cast<std::uint64_t>(std::max<std::int64_t>(settled, 0)) + period_lcm;
    if (last > kMaxCheckedLevels) {
        res.message = "check bound too large";
        return res;
    }

    auto level_of = [&](std::size_t p, std::size_t q, std::int64_t n) -> std::int64_t {
        const Tail& t = tails[p * nq + q];
        return t.plane ? certified_frontier(*t.plane, static_cast<std::uint64_t>(n)) : -1;
    };
    for (const auto& pc : cert.planes) {
        for (std::uint64_t n = 0; n <= last; ++n) {
            const std::int64_t col = certified_frontier(pc, n);
            if (col < 0) {
                continue;
            }
            for (std::size_t i = 0; i < net.rules.size(); ++i) {
                const auto& att = net.rules[i];
                if (att.from != pc.p) {
                    continue;
                }
                const bool whole_row = col == kUnbounded;
                if (!whole_row && col + att.delta < 0) {
                    continue;
                }
                bool answered = false;
                for (const auto& def : net.rules) {
                    if (def.from != pc.q || def.action != att.action) {
                        continue;
                    }
                    const std::int64_t n2 = static_cast<std::int64_t>(n) + def.delta;
                    if (n2 < 0) {
                        continue;
                    }
                    const std::int64_t f2 = level_of(att.to, def.to, n2);
                    if (whole_row ? f2 == kUnbounded : (f2 == kUnbounded || col + att.delta <= f2)) {
                        answered = true;
                        break;
                    }
                }
                if (!answered) {
                    res.kind = VerifyResult::Kind::Invalid;
                    res.message = "attacker move without a certified response";
                    res.counterexample = Counterexample{pc.p, pc.q, n, col, i};
                    return res;
                }
            }
        }
    }
    res.kind = VerifyResult::Kind::Valid;
    res.message = "certified set is a simulation";
    return res;
}

BeltCertificate build_certificate(const Socn& net, const PlaneColoring& coloring,
                                  std::vector<std::pair<std::size_t, std::size_t>>* dropped)
{
    BeltCertificate cert;
    cert.net_hash = net_fingerprint(net);
    std::vector<std::pair<std::size_t, std::size_t>> lost;
    for (std::size_t p = 0; p < coloring.num_states(); ++p) {
        for (std::size_t q = 0; q < coloring.num_states(); ++q) {
            auto f = frontier(coloring, p, q);
            const BeltFit fit = classify_and_fit(f);
            const auto period = detect_belt_period(coloring, p, q, fit);
            if (!period) {
                lost.emplace_back(p, q);
                continue;
            }
            cert.planes.push_back(PlaneCertificate{p, q, std::move(f), period->first, period->second});
        }
    }
    for (;;) {
        const VerifyResult v = verify_certificate(net, cert);
        if (v.ok()) {
            break;
        }
        if (!v.counterexample) {
            for (const auto& pc : cert.planes) {
                lost.emplace_back(pc.p, pc.q);
            }
            cert.planes.clear();
            break;
        }
        const auto& cx = *v.counterexample;
        lost.emplace_back(cx.p, cx.q);
        std::erase_if(cert.planes, [&](const PlaneCertificate& pc) { return pc.p == cx.p && pc.q == cx.q; });
    }
    if (dropped) {
        std::sort(lost.begin(), lost.end());
        *dropped = std::move(lost);
    }
    return cert;
}

SimDecision decide_sim(const Socn& net, std::size_t p, std::uint64_t m, std::size_t q,
                       std::uint64_t n, unsigned budget)
{
    net.validate();
    if (p >= net.num_states() || q >= net.num_states()) {
        throw std::invalid_argument("state out of range");
    }
    SimDecision out;
    if (budget > 0) {
        const SearchOutcome s = config_attacker_search(net, {p, m}, {q, n}, budget);
        if (s.attacker_wins()) {
            out.kind = SimDecision::Kind::No;
            out.rank = *s.attacker_rank;
            return out;
        }
    }
    const std::uint64_t view = std::max<std::uint64_t>(20, 2 * std::max(m, n) + 4);
    std::ostringstream diag;
    {
        const PlaneColoring coloring = color_planes(net, budget, view);
        std::vector<std::pair<std::size_t, std::size_t>> dropped;
        BeltCertificate cert = build_certificate(net, coloring, &dropped);
        if (certifies(cert, p, m, q, n)) {
            out.kind = SimDecision::Kind::Yes;
            out.certificate = std::move(cert);
            return out;
        }
        diag << "not refuted within " << budget << " rounds; view " << view << "; ";
        const auto f = frontier(coloring, p, q);
        const BeltFit fit = classify_and_fit(f);
        diag << "plane class " << belt_class_name(fit.kind) << (fit.unstable ? " (unstable fit)" : "");
        diag << "; uncertified planes " << dropped.size();
    }
    out.diagnostics = diag.str();
    return out;
}

}  // namespace gamelab
