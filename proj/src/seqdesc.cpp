#include "gamelab/seqdesc.hpp"

#include <unordered_map>

namespace gamelab {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 21;

struct WindowHash {
    std::size_t operator()(const std::vector<Symbol>& w) const
    {
        std::uint64_t h = 1469598103934665603ULL;
        for (Symbol s : w) {
            h ^= s;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

SeqDescription::SeqDescription(std::vector<std::string> alphabet, Symbol hash, Symbol blank,
                               std::uint64_t m, Symbol fallback, std::map<Triple, Symbol> rules)
    : alphabet_(std::move(alphabet)), hash_(hash), blank_(blank), m_(m), fallback_(fallback),
      rules_(std::move(rules))
{
    const std::size_t n = alphabet_.size();
    if (m_ < 3) {
        throw std::invalid_argument("m >= 3 required");
    }
    if (hash_ >= n || blank_ >= n || fallback_ >= n) {
        throw std::invalid_argument("hash, blank or fallback symbol outside the alphabet");
    }
    if (hash_ == blank_) {
        throw std::invalid_argument("hash and blank symbols must differ");
    }
    for (const auto& [triple, out] : rules_) {
        for (Symbol s : triple) {
            if (s >= n) {
                throw std::invalid_argument("rule mentions a symbol outside the alphabet");
            }
        }
        if (out >= n) {
            throw std::invalid_argument("rule result outside the alphabet");
        }
    }
    const std::uint64_t cube = std::uint64_t{n} * n * n;
    if (cube <= kDenseLimit) {
        table_.assign(cube, fallback_);
        for (const auto& [t, out] : rules_) {
            table_[(std::uint64_t{t[0]} * n + t[1]) * n + t[2]] = out;
        }
    }
}

std::optional<Symbol> SeqDescription::find_symbol(const std::string& name) const
{
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        if (alphabet_[i] == name) {
            return static_cast<Symbol>(i);
        }
    }
    return std::nullopt;
}

Symbol SeqDescription::apply(Symbol a, Symbol b, Symbol c) const
{
    if (!table_.empty()) {
        const std::uint64_t n = alphabet_.size();
        return table_[(a * n + b) * n + c];
    }
    auto it = rules_.find(Triple{a, b, c});
    return it == rules_.end() ? fallback_ : it->second;
}

SequenceEvaluator::SequenceEvaluator(const SeqDescription& d) : d_(&d), ring_(d.m() + 1, 0) {}

Symbol SequenceEvaluator::next()
{
    const std::uint64_t i = pos_;
    const std::uint64_t m = d_->m();
    const std::uint64_t w = m + 1;
    Symbol s;
    if (i == 0) {
        s = d_->hash();
    } else if (i <= m) {
        s = d_->blank();
    } else {
        // S(i-m-1) lives in the slot S(i) is about to take.
        s = d_->apply(ring_[(i - m - 1) % w], ring_[(i - m) % w], ring_[(i - m + 1) % w]);
    }
    ring_[i % w] = s;
    ++pos_;
    return s;
}

std::vector<Symbol> SequenceEvaluator::window() const
{
    const std::uint64_t w = ring_.size();
    std::vector<Symbol> out;
    out.reserve(w);
    const std::uint64_t first = pos_ >= w ? pos_ - w : 0;
    for (std::uint64_t i = first; i < pos_; ++i) {
        out.push_back(ring_[i % w]);
    }
    return out;
}

Symbol eval_at(const SeqDescription& d, std::uint64_t i)
{
    SequenceEvaluator ev(d);
    Symbol s = ev.next();
    while (ev.position() <= i) {
        s = ev.next();
    }
    return s;
}

std::vector<Symbol> eval_prefix(const SeqDescription& d, std::uint64_t length)
{
    SequenceEvaluator ev(d);
    std::vector<Symbol> out;
    out.reserve(length);
    for (std::uint64_t i = 0; i < length; ++i) {
        out.push_back(ev.next());
    }
    return out;
}

PeriodResult find_period(const SeqDescription& d, std::uint64_t cap)
{
    // The window ending at i determines everything after i, so the first
    // repeated window yields the least preperiod and the least period.
    SequenceEvaluator ev(d);
    const std::uint64_t m = d.m();
    std::unordered_map<std::vector<Symbol>, std::uint64_t, WindowHash> seen;
    for (std::uint64_t i = 0;; ++i) {
        ev.next();
        if (i < m) {
            continue;
        }
        auto [it, inserted] = seen.emplace(ev.window(), i);
        if (!inserted) {
            return {true, it->second - m, i - it->second};
        }
        if (seen.size() >= cap) {
            return {};
        }
    }
}

bool decide_gsp(const SeqDescription& d, std::uint64_t n0, Symbol beta0)
{
    if (beta0 >= d.alphabet_size()) {
        throw InputError("query symbol outside the alphabet");
    }
    return eval_at(d, n0) == beta0;
}

EgspResult decide_egsp(const SeqDescription& d, Symbol beta0, std::uint64_t cap)
{
    if (beta0 >= d.alphabet_size()) {
        throw InputError("query symbol outside the alphabet");
    }
    SequenceEvaluator ev(d);
    const std::uint64_t m = d.m();
    std::unordered_map<std::vector<Symbol>, std::uint64_t, WindowHash> seen;
    for (std::uint64_t i = 0; i < cap; ++i) {
        if (ev.next() == beta0) {
            return {EgspResult::Kind::Yes, i};
        }
        if (i >= m && !seen.emplace(ev.window(), i).second) {
            // Everything from here on repeats what was already scanned.
            return {EgspResult::Kind::No, i + 1};
        }
    }
    return {EgspResult::Kind::Inconclusive, cap};
}

}  // namespace gamelab
