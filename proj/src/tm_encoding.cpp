#include "gamelab/seqdesc.hpp"

namespace gamelab {

std::optional<std::size_t> TuringMachine::find_state(const std::string& name) const
{
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> TuringMachine::find_symbol(const std::string& name) const
{
    for (std::size_t i = 0; i < tape_alphabet.size(); ++i) {
        if (tape_alphabet[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

void TuringMachine::set(std::size_t state, std::size_t read, std::size_t next, std::size_t write,
                        int move)
{
    if (delta.size() < states.size()) {
        delta.resize(states.size());
    }
    auto& row = delta.at(state);
    if (row.size() < tape_alphabet.size()) {
        row.resize(tape_alphabet.size());
    }
    row.at(read) = Action{next, write, move};
}

namespace {

// Undefined entries leave the configuration unchanged.
void fill_idle(TuringMachine& tm)
{
    tm.delta.resize(tm.states.size());
    for (std::size_t q = 0; q < tm.states.size(); ++q) {
        tm.delta[q].resize(tm.tape_alphabet.size());
        for (std::size_t x = 0; x < tm.tape_alphabet.size(); ++x) {
            if (!tm.delta[q][x]) {
                tm.delta[q][x] = TuringMachine::Action{q, x, 0};
            }
        }
    }
}

void check_shape(const TuringMachine& tm, const std::vector<std::size_t>& word, std::uint64_t m)
{
    const std::size_t nq = tm.states.size();
    const std::size_t nx = tm.tape_alphabet.size();
    if (nq == 0 || nx == 0) {
        throw NormalFormError("machine has no states or no tape symbols");
    }
    if (tm.blank >= nx || tm.start >= nq || tm.accept >= nq || tm.reject >= nq) {
        throw NormalFormError("blank, start, accept or reject index out of range");
    }
    if (tm.delta.size() != nq) {
        throw NormalFormError("transition function is not total");
    }
    for (std::size_t q = 0; q < nq; ++q) {
        if (tm.delta[q].size() != nx) {
            throw NormalFormError("transition function is not total");
        }
        for (std::size_t x = 0; x < nx; ++x) {
            const auto& act = tm.delta[q][x];
            if (!act) {
                throw NormalFormError("transition function is not total at state " + tm.states[q]);
            }
            if (act->next >= nq || act->write >= nx || act->move < -1 || act->move > 1) {
                throw NormalFormError("malformed transition at state " + tm.states[q]);
            }
        }
    }
    for (std::size_t halt : {tm.accept, tm.reject}) {
        for (std::size_t x = 0; x < nx; ++x) {
            const auto& act = *tm.delta[halt][x];
            if (act.next != halt || act.write != x || act.move != 0) {
                throw NormalFormError("accept and reject states must idle");
            }
        }
    }
    for (std::size_t a : tm.input_alphabet) {
        if (a >= nx) {
            throw NormalFormError("input symbol out of range");
        }
        if (a == tm.blank) {
            throw NormalFormError("blank must not be an input symbol");
        }
    }
    for (std::size_t a : word) {
        bool ok = false;
        for (std::size_t b : tm.input_alphabet) {
            ok = ok || a == b;
        }
        if (!ok) {
            throw NormalFormError("word contains a non-input symbol");
        }
    }
    if (m < 3) {
        throw NormalFormError("row length must be at least 3");
    }
    if (m <= word.size()) {
        throw NormalFormError("row length must exceed the word length");
    }
}

TuringMachine with_prologue(const TuringMachine& tm, const std::vector<std::size_t>& word)
{
    TuringMachine out = tm;
    if (word.empty()) {
        return out;
    }
    const std::size_t n = word.size();
    const std::size_t init = out.states.size();
    out.states.push_back("pro:init");
    for (std::size_t k = 1; k <= n; ++k) {
        out.states.push_back("pro:w" + std::to_string(k));
    }
    const std::size_t back = out.states.size();
    out.states.push_back("pro:back");
    out.delta.resize(out.states.size());
    out.set(init, out.blank, init + 1, out.blank, 1);
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t q = init + k;
        if (k < n) {
            out.set(q, out.blank, q + 1, word[k - 1], 1);
        } else {
            out.set(q, out.blank, back, word[k - 1], -1);
        }
    }
    for (std::size_t a : out.input_alphabet) {
        out.set(back, a, back, a, -1);
    }
    out.set(back, out.blank, tm.start, out.blank, 1);
    fill_idle(out);
    out.start = init;
    return out;
}

void check_run(const TuringMachine& tm, std::uint64_t m, std::uint64_t steps)
{
    const auto& first = *tm.delta[tm.start][tm.blank];
    if (first.write != tm.blank || first.move != 1) {
        throw NormalFormError("first step must write blank and move right");
    }
    std::vector<std::size_t> tape(m, tm.blank);
    std::uint64_t head = 0;
    std::size_t q = tm.start;
    for (std::uint64_t step = 0; step < steps; ++step) {
        const auto& act = *tm.delta[q][tape[head]];
        if (head == 0 && act.write != tm.blank) {
            throw NormalFormError("cell 0 must stay blank");
        }
        tape[head] = act.write;
        if ((head == 0 && act.move < 0) || (head + 1 == m && act.move > 0)) {
            throw NormalFormError("head leaves cells 0..m-1");
        }
        head = static_cast<std::uint64_t>(static_cast<std::int64_t>(head) + act.move);
        if (act.next != q && (act.next == tm.accept || act.next == tm.reject) && head != 0) {
            throw NormalFormError("accept or reject entered away from cell 0");
        }
        q = act.next;
    }
}

}  // namespace

TmEncoding tm_to_seqdesc(const TuringMachine& machine, const std::vector<std::size_t>& word,
                         std::uint64_t m, std::uint64_t check_steps)
{
    check_shape(machine, word, m);
    TuringMachine pm = with_prologue(machine, word);
    check_run(pm, m, check_steps);

    const std::size_t nq = pm.states.size();
    const std::size_t nx = pm.tape_alphabet.size();
    std::vector<std::string> names = pm.tape_alphabet;
    std::vector<Symbol> tape_symbol(nx);
    for (std::size_t x = 0; x < nx; ++x) {
        tape_symbol[x] = static_cast<Symbol>(x);
    }
    std::vector<std::vector<Symbol>> head_symbol(nq, std::vector<Symbol>(nx));
    for (std::size_t q = 0; q < nq; ++q) {
        for (std::size_t x = 0; x < nx; ++x) {
            head_symbol[q][x] = static_cast<Symbol>(names.size());
            names.push_back("[" + pm.states[q] + "," + pm.tape_alphabet[x] + "]");
        }
    }
    const auto junk = static_cast<Symbol>(names.size());
    names.push_back("!junk");

    struct Cell {
        bool head;
        std::size_t state;
        std::size_t sym;
    };
    auto decode = [&](Symbol s) {
        if (s < nx) {
            return Cell{false, 0, s};
        }
        const std::size_t k = s - nx;
        return Cell{true, k / nx, k % nx};
    };
    // Next content of the middle cell given the row above.
    auto local = [&](Symbol l, Symbol c, Symbol r) -> Symbol {
        const Cell L = decode(l), C = decode(c), R = decode(r);
        const bool from_left = L.head && pm.delta[L.state][L.sym]->move == 1;
        const bool from_right = R.head && pm.delta[R.state][R.sym]->move == -1;
        if (int{C.head} + int{from_left} + int{from_right} > 1) {
            return junk;
        }
        if (C.head) {
            const auto& act = *pm.delta[C.state][C.sym];
            return act.move == 0 ? head_symbol[act.next][act.write] : tape_symbol[act.write];
        }
        if (from_left) {
            return head_symbol[pm.delta[L.state][L.sym]->next][C.sym];
        }
        if (from_right) {
            return head_symbol[pm.delta[R.state][R.sym]->next][C.sym];
        }
        return tape_symbol[C.sym];
    };

    // Two heads meet in one triple only across a row boundary, which needs
    // rows of length 3; otherwise at most one head is realizable.
    const int max_heads = m <= 3 ? 2 : 1;
    std::map<Triple, Symbol> rules;
    for (Symbol l = 0; l < junk; ++l) {
        for (Symbol c = 0; c < junk; ++c) {
            for (Symbol r = 0; r < junk; ++r) {
                if (int{l >= nx} + int{c >= nx} + int{r >= nx} > max_heads) {
                    continue;
                }
                const Symbol out = local(l, c, r);
                if (out != junk) {
                    rules.emplace(Triple{l, c, r}, out);
                }
            }
        }
    }
    SeqDescription desc(std::move(names), head_symbol[pm.start][pm.blank], tape_symbol[pm.blank], m,
                        junk, std::move(rules));
    return TmEncoding{std::move(desc), std::move(pm), std::move(head_symbol), std::move(tape_symbol),
                      junk};
}

TuringMachine counter_machine(unsigned n)
{
    TuringMachine tm;
    tm.tape_alphabet = {"_", "0", "1", "$", "a", "b"};
    enum : std::size_t { B = 0, Z = 1, O = 2, D = 3, A = 4, M = 5 };
    tm.blank = B;
    tm.input_alphabet = {Z, O};

    auto add = [&](std::string name) {
        tm.states.push_back(std::move(name));
        return tm.states.size() - 1;
    };
    const std::size_t init = add("init");
    const std::size_t seed = add("seed");
    struct Round {
        std::size_t mark, carry, back, unmark, rewind;
    };
    std::vector<Round> rounds;
    for (unsigned i = 1; i <= n; ++i) {
        const std::string s = std::to_string(i);
        rounds.push_back({add("mark" + s), add("carry" + s), add("back" + s), add("unmark" + s),
                          add("rewind" + s)});
    }
    const std::size_t place = add("place");
    const std::size_t inc = add("inc");
    const std::size_t ret = add("ret");
    const std::size_t goend = add("goend");
    const std::size_t erase = add("erase");
    tm.accept = add("acc");
    tm.reject = add("rej");
    tm.start = init;
    tm.delta.resize(tm.states.size());

    tm.set(init, B, seed, B, 1);
    tm.set(seed, B, n > 0 ? rounds[0].mark : place, Z, 0);
    // Round i doubles the block of 0s: mark each 0 with a, append a b for
    // it, then turn the b's into 0s and unmark on the way back to cell 0.
    for (unsigned i = 0; i < n; ++i) {
        const Round& r = rounds[i];
        tm.set(r.mark, A, r.mark, A, 1);
        tm.set(r.mark, Z, r.carry, A, 1);
        tm.set(r.mark, M, r.unmark, M, 0);
        tm.set(r.carry, Z, r.carry, Z, 1);
        tm.set(r.carry, M, r.carry, M, 1);
        tm.set(r.carry, B, r.back, M, -1);
        tm.set(r.back, M, r.back, M, -1);
        tm.set(r.back, Z, r.back, Z, -1);
        tm.set(r.back, A, r.mark, A, 1);
        tm.set(r.unmark, M, r.unmark, Z, 1);
        tm.set(r.unmark, B, r.rewind, B, -1);
        tm.set(r.rewind, Z, r.rewind, Z, -1);
        tm.set(r.rewind, A, r.rewind, Z, -1);
        tm.set(r.rewind, B, i + 1 < n ? rounds[i + 1].mark : place, B, 1);
    }
    tm.set(place, Z, place, Z, 1);
    tm.set(place, B, inc, D, -1);
    // Binary counter, least significant bit next to the end marker.
    tm.set(inc, Z, ret, O, 1);
    tm.set(inc, O, inc, Z, -1);
    tm.set(inc, B, goend, B, 1);
    tm.set(ret, Z, ret, Z, 1);
    tm.set(ret, O, ret, O, 1);
    tm.set(ret, D, inc, D, -1);
    tm.set(goend, Z, goend, Z, 1);
    tm.set(goend, D, erase, B, -1);
    tm.set(erase, Z, erase, B, -1);
    tm.set(erase, B, init, B, 0);
    fill_idle(tm);
    return tm;
}

TmEncoding doubleexp_period_instance(unsigned n)
{
    const std::uint64_t m = (std::uint64_t{1} << n) + 2;
    return tm_to_seqdesc(counter_machine(n), {}, m, 1000000);
}

}  // namespace gamelab
