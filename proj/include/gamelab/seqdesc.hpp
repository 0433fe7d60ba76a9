#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gamelab {

using Symbol = std::uint32_t;
using Triple = std::array<Symbol, 3>;

/// (alphabet, local rule, initial length m). The word it describes starts
/// with the hash symbol followed by m blanks; every later symbol at i is the
/// local rule applied to the symbols at i-m-1, i-m and i-m+1.
class SeqDescription {
public:
    /// Throws std::invalid_argument on m < 3, hash == blank, or unknown
    /// symbols in rules.
    SeqDescription(std::vector<std::string> alphabet, Symbol hash, Symbol blank, std::uint64_t m,
                   Symbol fallback, std::map<Triple, Symbol> rules = {});

    std::size_t alphabet_size() const { return alphabet_.size(); }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const std::string& symbol_name(Symbol s) const { return alphabet_.at(s); }
    std::optional<Symbol> find_symbol(const std::string& name) const;
    Symbol hash() const { return hash_; }
    Symbol blank() const { return blank_; }
    std::uint64_t m() const { return m_; }
    Symbol fallback() const { return fallback_; }
    /// Explicit entries; every other triple maps to fallback().
    const std::map<Triple, Symbol>& rules() const { return rules_; }

    Symbol apply(Symbol a, Symbol b, Symbol c) const;

private:
    std::vector<std::string> alphabet_;
    Symbol hash_;
    Symbol blank_;
    std::uint64_t m_;
    Symbol fallback_;
    std::map<Triple, Symbol> rules_;
    std::vector<Symbol> table_;  // dense |Δ|^3 lookup, empty when too large
};

/// Streams S(0), S(1), ... keeping only the last m+1 symbols.
class SequenceEvaluator {
public:
    explicit SequenceEvaluator(const SeqDescription& d);

    Symbol next();
    /// Index of the next symbol next() returns.
    std::uint64_t position() const { return pos_; }
    /// The m+1 most recent symbols ending at position()-1, oldest first.
    /// Only meaningful once position() > m.
    std::vector<Symbol> window() const;

private:
    const SeqDescription* d_;
    std::uint64_t pos_ = 0;
    std::vector<Symbol> ring_;  // size m+1, S(i) stored at i mod (m+1)
};

Symbol eval_at(const SeqDescription& d, std::uint64_t i);
std::vector<Symbol> eval_prefix(const SeqDescription& d, std::uint64_t length);

struct PeriodResult {
    bool found = false;
    std::uint64_t start = 0;   // least i0 with S(i+d) = S(i) for all i >= i0
    std::uint64_t period = 0;  // least such d
};

/// Detects the first repeated (m+1)-symbol window; `cap` bounds the number
/// of distinct windows stored.
PeriodResult find_period(const SeqDescription& d, std::uint64_t cap);

/// Raised for queries that mention a symbol outside the alphabet.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool decide_gsp(const SeqDescription& d, std::uint64_t n0, Symbol beta0);

struct EgspResult {
    enum class Kind { Yes, No, Inconclusive };

    Kind kind = Kind::Inconclusive;
    std::uint64_t index = 0;  // Yes: least witness; otherwise positions scanned
};

EgspResult decide_egsp(const SeqDescription& d, Symbol beta0, std::uint64_t cap);

/// Deterministic single-tape machine. Moves are -1, 0, +1.
struct TuringMachine {
    struct Action {
        std::size_t next;
        std::size_t write;
        int move;
    };

    std::vector<std::string> states;
    std::vector<std::string> tape_alphabet;
    std::vector<std::size_t> input_alphabet;  // indices into tape_alphabet
    std::size_t blank = 0;
    std::size_t start = 0;
    std::size_t accept = 0;
    std::size_t reject = 0;
    /// delta[state][symbol]; must be total.
    std::vector<std::vector<std::optional<Action>>> delta;

    std::optional<std::size_t> find_state(const std::string& name) const;
    std::optional<std::size_t> find_symbol(const std::string& name) const;
    void set(std::size_t state, std::size_t read, std::size_t next, std::size_t write, int move);
};

/// Normal-form violation, naming the clause.
struct NormalFormError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Result of encoding a machine run as a sequence description.
struct TmEncoding {
    SeqDescription description;
    TuringMachine prologue_machine;  // the machine whose run is encoded
    /// Symbol for (state, tape symbol) of the prologue machine.
    std::vector<std::vector<Symbol>> head_symbol;
    std::vector<Symbol> tape_symbol;
    Symbol junk;
};

/// Encodes the run of the machine on `word` with rows of length m.
/// A nonempty word is first written by a prologue that starts in a fresh
/// state on cell 0, writes the word into cells 1..n and enters the machine's
/// start state on cell 1. For an empty word the machine runs as given,
/// starting on cell 0. Either way the initial state scanning blank is the
/// hash symbol. `check_steps` bounds a simulated run that checks the head
/// stays in cells 0..m-1 and never rewrites cell 0.
TmEncoding tm_to_seqdesc(const TuringMachine& machine, const std::vector<std::size_t>& word,
                         std::uint64_t m, std::uint64_t check_steps = 100000);

/// Machine that fills 2^n cells with 0 by n doubling rounds, enumerates all
/// of {0,1}^(2^n) as a binary counter, erases the tape and re-enters its
/// initial state, forever.
TuringMachine counter_machine(unsigned n);

/// The encoding of counter_machine(n) with rows of length 2^n + 2.
TmEncoding doubleexp_period_instance(unsigned n);

}  // namespace gamelab
