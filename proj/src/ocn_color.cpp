#include "gamelab/ocn_sim.hpp"

#include <cstdlib>

namespace gamelab {

std::uint64_t default_cell_budget()
{
    if (const char* env = std::getenv("OCN_GAMELAB_CELL_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return v;
        }
    }
    return 20'000'000;
}

std::optional<unsigned> PlaneColoring::rank(std::size_t p, std::size_t q, std::uint64_t m,
                                            std::uint64_t n) const
{
    if (p >= num_states_ || q >= num_states_ || m >= cols_ || n >= rows_) {
        throw std::out_of_range("cell outside the coloring");
    }
    const std::uint32_t r = ranks_[((p * num_states_ + q) * cols_ + m) * rows_ + n];
    if (r == 0) {
        return std::nullopt;
    }
    return r;
}

namespace {

struct Move {
    std::int64_t delta;
    std::size_t to;
};

// moves[state][action]
std::vector<std::vector<std::vector<Move>>> index_rules(const Socn& net)
{
    std::vector<std::vector<std::vector<Move>>> moves(
        net.num_states(), std::vector<std::vector<Move>>(net.num_actions()));
    for (const auto& r : net.rules) {
        moves[r.from][r.action].push_back({r.delta, r.to});
    }
    return moves;
}

}  // namespace

PlaneColoring color_planes(const Socn& net, std::uint64_t rank_bound, std::uint64_t view,
                           std::uint64_t extra_margin, std::uint64_t cell_budget)
{
    net.validate();
    if (view == 0) {
        throw std::invalid_argument("view size must be positive");
    }
    const std::size_t nq = net.num_states();
    const std::uint64_t margin = rank_bound * net.max_abs_delta() + extra_margin;
    const std::uint64_t width = kWidthFactor * view;
    const std::uint64_t cols = width + margin;
    const std::uint64_t rows = view + margin;
    const long double cells = static_cast<long double>(cols) * rows * nq * nq;
    if (cells > static_cast<long double>(cell_budget)) {
        throw ResourceError("coloring needs " + std::to_string(static_cast<unsigned long long>(cells)) +
                            " cells, budget is " + std::to_string(cell_budget));
    }

    PlaneColoring out;
    out.num_states_ = nq;
    out.view_ = view;
    out.rank_bound_ = rank_bound;
    out.margin_ = margin;
    out.width_ = width;
    out.cols_ = cols;
    out.rows_ = rows;
    out.ranks_.assign(static_cast<std::size_t>(cells), 0);
    auto& ranks = out.ranks_;
    auto at = [&](std::size_t p, std::size_t q, std::uint64_t m, std::uint64_t n) {
        return ((p * nq + q) * cols + m) * rows + n;
    };
    const auto moves = index_rules(net);

    // Attacker refutes in round r when some move meets only responses
    // refuted in earlier rounds. Moves leaving the region are not trusted.
    auto refuted = [&](std::size_t p, std::size_t q, std::uint64_t m, std::uint64_t n) {
        for (ActionId a = 0; a < net.num_actions(); ++a) {
            for (const Move& att : moves[p][a]) {
                const std::int64_t m2 = static_cast<std::int64_t>(m) + att.delta;
                if (m2 < 0 || static_cast<std::uint64_t>(m2) >= cols) {
                    continue;
                }
                bool all = true;
                for (const Move& def : moves[q][a]) {
                    const std::int64_t n2 = static_cast<std::int64_t>(n) + def.delta;
                    if (n2 < 0) {
                        continue;
                    }
                    if (static_cast<std::uint64_t>(n2) >= rows ||
                        ranks[at(att.to, def.to, static_cast<std::uint64_t>(m2),
                                 static_cast<std::uint64_t>(n2))] == 0) {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    return true;
                }
            }
        }
        return false;
    };

    for (std::uint64_t r = 1; r <= rank_bound; ++r) {
        std::vector<std::size_t> fresh;
        for (std::size_t p = 0; p < nq; ++p) {
            for (std::size_t q = 0; q < nq; ++q) {
                for (std::uint64_t m = 0; m < cols; ++m) {
                    for (std::uint64_t n = 0; n < rows; ++n) {
                        const std::size_t idx = at(p, q, m, n);
                        if (ranks[idx] == 0 && refuted(p, q, m, n)) {
                            fresh.push_back(idx);
                        }
                    }
                }
            }
        }
        if (fresh.empty()) {
            break;
        }
        for (std::size_t idx : fresh) {
            ranks[idx] = static_cast<std::uint32_t>(r);
        }
    }
    return out;
}

bool monotone(const PlaneColoring& c)
{
    const std::uint64_t R = c.view();
    const std::uint64_t W = c.width();
    for (std::size_t p = 0; p < c.num_states(); ++p) {
        for (std::size_t q = 0; q < c.num_states(); ++q) {
            for (std::uint64_t m = 0; m < W; ++m) {
                for (std::uint64_t n = 0; n < R; ++n) {
                    if (c.black(p, q, m, n)) {
                        continue;
                    }
                    if (m + 1 < W && c.black(p, q, m + 1, n)) {
                        return false;
                    }
                    if (n > 0 && c.black(p, q, m, n - 1)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

std::vector<std::int64_t> frontier(const PlaneColoring& c, std::size_t p, std::size_t q)
{
    const std::uint64_t R = c.view();
    const std::uint64_t W = c.width();
    std::vector<std::int64_t> f(R, -1);
    for (std::uint64_t n = 0; n < R; ++n) {
        std::uint64_t count = 0;
        for (std::uint64_t m = 0; m < W; ++m) {
            if (c.black(p, q, m, n)) {
                ++count;
                f[n] = static_cast<std::int64_t>(m);
            }
        }
        if (count == W) {
            f[n] = kUnbounded;
        }
    }
    return f;
}

const char* belt_class_name(BeltClass kind)
{
    switch (kind) {
    case BeltClass::Horizontal:
        return "HF";
    case BeltClass::Vertical:
        return "VF";
    case BeltClass::Slanted:
        return "SF";
    }
    return "?";
}

BeltFit classify_and_fit(const std::vector<std::int64_t>& f)
{
    BeltFit fit;
    const std::size_t R = f.size();
    for (std::int64_t v : f) {
        if (v == kUnbounded) {
            fit.kind = BeltClass::Horizontal;
            return fit;
        }
    }
    const std::size_t half = R / 2;
    bool constant = true;
    for (std::size_t n = half; n < R; ++n) {
        constant = constant && f[n] == f[half];
    }
    if (constant) {
        fit.kind = BeltClass::Vertical;
        fit.dy = 1;
        return fit;
    }

    fit.kind = BeltClass::Slanted;
    fit.unstable = true;
    for (std::size_t dy = 1; half + 2 * dy <= R; ++dy) {
        const std::int64_t dx = f[half + dy] - f[half];
        if (dx <= 0) {
            continue;
        }
        bool repeats = true;
        for (std::size_t n = half; n + dy < R && repeats; ++n) {
            repeats = f[n + dy] == f[n] + dx;
        }
        if (repeats) {
            fit.unstable = false;
            fit.dx = static_cast<std::uint64_t>(dx);
            fit.dy = dy;
            break;
        }
    }
    if (fit.unstable || R < 4) {
        fit.unstable = true;
        return fit;
    }
    fit.slope = Rational(static_cast<std::int64_t>(fit.dx), static_cast<std::int64_t>(fit.dy));
    const std::size_t fit_end = half + R / 4;
    bool first = true;
    for (std::size_t n = half; n < fit_end; ++n) {
        const Rational c = Rational(f[n]) - fit.slope * static_cast<std::int64_t>(n);
        if (first || c < fit.band_lo) {
            fit.band_lo = c;
        }
        if (first || c > fit.band_hi) {
            fit.band_hi = c;
        }
        first = false;
    }
    const Rational step = fit.step();
    for (std::size_t n = fit_end; n < R; ++n) {
        const Rational c = Rational(f[n]) - fit.slope * static_cast<std::int64_t>(n);
        if (c < fit.band_lo - step || c > fit.band_hi + step) {
            fit.unstable = true;
        }
    }
    return fit;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>>
detect_belt_period(const PlaneColoring& c, std::size_t p, std::size_t q, const BeltFit& fit)
{
    if (fit.kind == BeltClass::Horizontal) {
        return std::pair<std::uint64_t, std::uint64_t>{1, 1};
    }
    if (fit.kind == BeltClass::Vertical) {
        return std::pair<std::uint64_t, std::uint64_t>{0, 1};
    }
    if (fit.unstable || fit.dy == 0) {
        return std::nullopt;
    }
    const std::uint64_t R = c.view();
    const std::uint64_t W = c.width();
    const std::uint64_t thr = R / 2;
    for (std::uint64_t k = 1;; ++k) {
        const std::uint64_t rx = k * fit.dx;
        const std::uint64_t ry = k * fit.dy;
        if (2 * ry > R - thr) {
            return std::nullopt;
        }
        bool invariant = true;
        for (std::uint64_t n = thr; n + ry < R && invariant; ++n) {
            for (std::uint64_t m = 0; m + rx < W; ++m) {
                if (c.black(p, q, m, n) != c.black(p, q, m + rx, n + ry)) {
                    invariant = false;
                    break;
                }
            }
        }
        if (invariant) {
            return std::pair<std::uint64_t, std::uint64_t>{rx, ry};
        }
    }
}

}  // namespace gamelab
