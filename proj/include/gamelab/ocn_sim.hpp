#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "gamelab/socn.hpp"

namespace gamelab {

using Rational = boost::rational<std::int64_t>;

/// Frontier value of a row whose every cell is black.
inline constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

/// Raised when a computation would exceed the configured cell budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Cell budget from OCN_GAMELAB_CELL_BUDGET, or a default of 2e7 cells.
std::uint64_t default_cell_budget();

/// Rank table for all pairs of control states over counter pairs (m, n).
/// The exact region has levels n < view() and columns m < width(), where
/// width() is kWidthFactor * view() so that frontiers steeper than one
/// column per level stay visible. Ranks are computed with a margin of
/// K*Δmax (plus any extra margin) on both axes; inside the exact region a
/// cell is white with rank r <= K exactly when the pair is refuted in r
/// rounds.
class PlaneColoring {
public:
    std::size_t num_states() const { return num_states_; }
    std::uint64_t view() const { return view_; }
    std::uint64_t rank_bound() const { return rank_bound_; }
    std::uint64_t margin() const { return margin_; }
    std::uint64_t width() const { return width_; }
    std::uint64_t cols() const { return cols_; }
    std::uint64_t rows() const { return rows_; }
    /// Rank of p(m) against q(n) if refuted within the bound; m < cols(),
    /// n < rows().
    std::optional<unsigned> rank(std::size_t p, std::size_t q, std::uint64_t m,
                                 std::uint64_t n) const;
    bool black(std::size_t p, std::size_t q, std::uint64_t m, std::uint64_t n) const
    {
        return !rank(p, q, m, n);
    }

private:
    friend PlaneColoring color_planes(const Socn&, std::uint64_t, std::uint64_t, std::uint64_t,
                                      std::uint64_t);

    std::size_t num_states_ = 0;
    std::uint64_t view_ = 0;
    std::uint64_t rank_bound_ = 0;
    std::uint64_t margin_ = 0;
    std::uint64_t width_ = 0;
    std::uint64_t cols_ = 0;
    std::uint64_t rows_ = 0;
    std::vector<std::uint32_t> ranks_;  // 0 = not refuted
};

inline constexpr std::uint64_t kWidthFactor = 4;

/// Round-synchronous rank computation. Moves leaving the computed region
/// count as unrefuted. Throws ResourceError when the region holds more than
/// `cell_budget` cells over all planes, std::invalid_argument when the view
/// is 0.
PlaneColoring color_planes(const Socn& net, std::uint64_t rank_bound, std::uint64_t view,
                           std::uint64_t extra_margin = 0,
                           std::uint64_t cell_budget = default_cell_budget());

/// Monotonicity inside the exact region: a white cell stays
/// white when moving right or down, for every plane.
bool monotone(const PlaneColoring& coloring);

/// Rightmost black column per level of the view: -1 when the row has no
/// black cell, kUnbounded when the whole exact row is black.
std::vector<std::int64_t> frontier(const PlaneColoring& coloring, std::size_t p, std::size_t q);

enum class BeltClass { Horizontal, Vertical, Slanted };

const char* belt_class_name(BeltClass kind);

struct BeltFit {
    BeltClass kind = BeltClass::Vertical;
    /// No stable slanted fit inside the view; the view is too small.
    bool unstable = false;
    Rational slope{0};  // horizontal advance per level
    Rational band_lo{0};
    Rational band_hi{0};
    std::uint64_t dx = 0;  // frontier repetition vector
    std::uint64_t dy = 0;

    /// Horizontal step 1 + 1/slope; only meaningful for a positive slope.
    Rational step() const { return Rational(1) + Rational(1) / slope; }
};

BeltFit classify_and_fit(const std::vector<std::int64_t>& frontier);

/// Smallest multiple of the fit's repetition vector under which every cell
/// of the upper half of the exact region is translation invariant.
/// Horizontal planes get (1,1), vertical ones (0,1); unstable fits and views
/// too small for two copies give nullopt.
std::optional<std::pair<std::uint64_t, std::uint64_t>>
detect_belt_period(const PlaneColoring& coloring, std::size_t p, std::size_t q, const BeltFit& fit);

/// Black set of one plane: a frontier prefix f(0..H-1) continued by
/// f(n) = f(n - period_y) + period_x for n >= H. Planes that are absent from
/// a certificate have no black cell.
struct PlaneCertificate {
    std::size_t p = 0;
    std::size_t q = 0;
    std::vector<std::int64_t> prefix;
    std::uint64_t period_x = 0;
    std::uint64_t period_y = 1;

    bool operator==(const PlaneCertificate&) const = default;
};

struct BeltCertificate {
    std::uint64_t net_hash = 0;
    std::vector<PlaneCertificate> planes;

    bool operator==(const BeltCertificate&) const = default;
};

/// FNV-1a over a canonical listing of the net.
std::uint64_t net_fingerprint(const Socn& net);

/// Frontier of a plane certificate at level n.
std::int64_t certified_frontier(const PlaneCertificate& plane, std::uint64_t n);

/// Does the certificate claim p(m) is simulated by q(n)?
bool certifies(const BeltCertificate& cert, std::size_t p, std::uint64_t m, std::size_t q,
               std::uint64_t n);

struct Counterexample {
    std::size_t p = 0;
    std::size_t q = 0;
    std::uint64_t level = 0;
    std::int64_t column = 0;  // kUnbounded for a fully black level
    std::size_t rule = 0;     // attacker rule without a good response
};

struct VerifyResult {
    enum class Kind { Valid, Invalid, Malformed };

    Kind kind = Kind::Malformed;
    std::string message;
    std::optional<Counterexample> counterexample;

    bool ok() const { return kind == Kind::Valid; }
};

/// Checks that the certified black set is a simulation. Only the frontier
/// cell of each level needs checking; beyond a computed level every check
/// repeats with the lcm of the vertical periods, so finitely many levels
/// decide the question.
VerifyResult verify_certificate(const Socn& net, const BeltCertificate& cert);

/// Packages fitted planes into a certificate, then drops planes that fail
/// verification until the remainder verifies. `dropped` receives the
/// removed or uncertifiable planes.
BeltCertificate build_certificate(const Socn& net, const PlaneColoring& coloring,
                                  std::vector<std::pair<std::size_t, std::size_t>>* dropped = nullptr);

struct SimDecision {
    enum class Kind { Yes, No, Unknown };

    Kind kind = Kind::Unknown;
    unsigned rank = 0;  // No
    std::optional<BeltCertificate> certificate;  // Yes
    std::string diagnostics;
};

/// No(r) from the bounded game, Yes from a verified certificate covering
/// the pair, Unknown otherwise. The coloring behind the certificate may
/// raise ResourceError.
SimDecision decide_sim(const Socn& net, std::size_t p, std::uint64_t m, std::size_t q,
                       std::uint64_t n, unsigned budget);

/// Start (m1,n1) and end (m2,n2) of a vector in plane (p,q).
struct BwVector {
    std::size_t p = 0;
    std::size_t q = 0;
    std::uint64_t m1 = 0, n1 = 0, m2 = 0, n2 = 0;

    bool operator==(const BwVector&) const = default;
};

struct Travel {
    enum class Status { Reached, LeftView, Breach, Precondition };

    Status status = Status::Precondition;
    std::vector<BwVector> steps;   // v1..vk
    std::vector<unsigned> ranks;   // white-end rank of v0..vk
    std::optional<std::string> mismatch_action;  // when the last end has rank 1
    std::string message;
};

/// Moves the vector to neighbour vectors with strictly smaller white-end
/// rank until its start is on the vertical axis or its end on the
/// horizontal axis (horizontal vectors: start on the vertical axis;
/// vertical vectors: end on the horizontal axis). Requires a unary net.
Travel trace_vector_travel(const Socn& net, const PlaneColoring& coloring, const BwVector& v0);

}  // namespace gamelab
