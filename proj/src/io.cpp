#include "gamelab/io.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gamelab {

using nlohmann::json;

namespace {

// Strict view of one JSON value with its path for diagnostics.
class Field {
public:
    Field(const json& value, std::string path) : v_(value), path_(std::move(path)) {}

    [[noreturn]] void fail(const std::string& what) const
    {
        throw DocumentError((path_.empty() ? std::string("document") : path_) + ": " + what);
    }

    const std::string& path() const { return path_; }
    const json& raw() const { return v_; }

    /// Requires an object whose keys all come from `allowed`.
    void object(std::initializer_list<const char*> allowed) const
    {
        if (!v_.is_object()) {
            fail("expected an object");
        }
        std::set<std::string> ok(allowed.begin(), allowed.end());
        for (const auto& [key, _] : v_.items()) {
            if (!ok.count(key)) {
                Field(v_[key], sub(key)).fail("unknown field");
            }
        }
    }

    bool has(const char* key) const { return v_.contains(key); }

    Field operator[](const char* key) const
    {
        if (!v_.contains(key)) {
            Field(v_, sub(key)).fail("missing field");
        }
        return Field(v_.at(key), sub(key));
    }

    std::string str() const
    {
        if (!v_.is_string()) {
            fail("expected a string");
        }
        return v_.get<std::string>();
    }

    std::int64_t integer() const
    {
        if (!v_.is_number_integer()) {
            fail("expected an integer");
        }
        return v_.get<std::int64_t>();
    }

    std::uint64_t natural() const
    {
        const std::int64_t x = integer();
        if (x < 0) {
            fail("expected a nonnegative integer");
        }
        return static_cast<std::uint64_t>(x);
    }

    std::vector<Field> array() const
    {
        if (!v_.is_array()) {
            fail("expected an array");
        }
        std::vector<Field> out;
        for (std::size_t i = 0; i < v_.size(); ++i) {
            out.emplace_back(v_[i], path_ + "[" + std::to_string(i) + "]");
        }
        return out;
    }

    std::vector<std::string> names() const
    {
        std::vector<std::string> out;
        std::set<std::string> seen;
        for (const Field& f : array()) {
            out.push_back(f.str());
            if (!seen.insert(out.back()).second) {
                f.fail("duplicate name " + out.back());
            }
        }
        return out;
    }

private:
    std::string sub(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    const json& v_;
    std::string path_;
};

void check_kind(const Field& doc, std::initializer_list<const char*> kinds)
{
    if (!doc.has("kind")) {
        return;
    }
    const std::string k = doc["kind"].str();
    for (const char* ok : kinds) {
        if (k == ok) {
            return;
        }
    }
    doc["kind"].fail("unexpected document kind " + k);
}

template <class Find>
std::size_t resolve(const Field& f, Find&& find, const char* what)
{
    const std::string name = f.str();
    const auto id = find(name);
    if (!id) {
        f.fail(std::string("unknown ") + what + " " + name);
    }
    return *id;
}

Owner parse_owner(const Field& f)
{
    const std::string s = f.str();
    if (s == "E") {
        return Owner::Eve;
    }
    if (s == "A") {
        return Owner::Adam;
    }
    f.fail("owner must be \"E\" or \"A\"");
}

const char* owner_text(Owner o)
{
    return o == Owner::Eve ? "E" : "A";
}

}  // namespace

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError("invalid JSON at byte " + std::to_string(e.byte));
    }
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DocumentError(path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_json(buf.str());
    } catch (const DocumentError& e) {
        throw DocumentError(path + ": " + e.what());
    }
}

std::string canonical(const json& doc)
{
    return doc.dump(2) + "\n";
}

Socn parse_socn(const json& j)
{
    const Field doc(j, "");
    doc.object({"kind", "states", "actions", "rules"});
    check_kind(doc, {"socn"});
    Socn net;
    for (auto& s : doc["states"].names()) {
        net.add_state(s);
    }
    for (auto& a : doc["actions"].names()) {
        net.add_action(a);
    }
    for (const Field& r : doc["rules"].array()) {
        r.object({"from", "action", "delta", "to"});
        const std::size_t from = resolve(r["from"], [&](auto& n) { return net.find_state(n); }, "state");
        const ActionId a = resolve(r["action"], [&](auto& n) { return net.find_action(n); }, "action");
        const std::size_t to = resolve(r["to"], [&](auto& n) { return net.find_state(n); }, "state");
        net.add_rule(from, a, r["delta"].integer(), to);
    }
    return net;
}

json socn_to_json(const Socn& net)
{
    json rules = json::array();
    for (const auto& r : net.rules) {
        rules.push_back({{"from", net.states[r.from]},
                         {"action", net.actions[r.action]},
                         {"delta", r.delta},
                         {"to", net.states[r.to]}});
    }
    return {{"kind", "socn"}, {"states", net.states}, {"actions", net.actions}, {"rules", rules}};
}

SocnRGame parse_socn_rgame(const json& j)
{
    const Field doc(j, "");
    doc.object({"kind", "states", "rules", "target"});
    check_kind(doc, {"socn-rgame", "countdown"});
    const bool countdown = doc.has("kind") && doc["kind"].str() == "countdown";
    SocnRGame g;
    for (const Field& s : doc["states"].array()) {
        s.object({"name", "owner"});
        const std::string name = s["name"].str();
        if (g.find(name)) {
            s["name"].fail("duplicate name " + name);
        }
        g.add_state(name, parse_owner(s["owner"]));
    }
    for (const Field& r : doc["rules"].array()) {
        r.object({"from", "delta", "to"});
        const std::size_t from = resolve(r["from"], [&](auto& n) { return g.find(n); }, "state");
        const std::size_t to = resolve(r["to"], [&](auto& n) { return g.find(n); }, "state");
        const std::int64_t delta = r["delta"].integer();
        if (countdown && delta >= 0) {
            r["delta"].fail("rule delta must be negative");
        }
        g.add_rule(from, delta, to);
    }
    g.target = resolve(doc["target"], [&](auto& n) { return g.find(n); }, "state");
    return g;
}

json socn_rgame_to_json(const SocnRGame& g, const std::string& kind)
{
    json states = json::array();
    for (std::size_t q = 0; q < g.num_states(); ++q) {
        states.push_back({{"name", g.states[q]}, {"owner", owner_text(g.owners[q])}});
    }
    json rules = json::array();
    for (const auto& r : g.rules) {
        rules.push_back({{"from", g.states[r.from]}, {"delta", r.delta}, {"to", g.states[r.to]}});
    }
    return {{"kind", kind}, {"states", states}, {"rules", rules}, {"target", g.states.at(g.target)}};
}

RGame parse_rgame(const json& j)
{
    const Field doc(j, "");
    doc.object({"kind", "vertices", "edges", "targets"});
    check_kind(doc, {"rgame"});
    RGame g;
    for (const Field& v : doc["vertices"].array()) {
        v.object({"name", "owner"});
        const std::string name = v["name"].str();
        if (g.find(name)) {
            v["name"].fail("duplicate name " + name);
        }
        g.add_vertex(name, parse_owner(v["owner"]));
    }
    for (const Field& e : doc["edges"].array()) {
        e.object({"from", "to"});
        g.add_edge(resolve(e["from"], [&](auto& n) { return g.find(n); }, "vertex"),
                   resolve(e["to"], [&](auto& n) { return g.find(n); }, "vertex"));
    }
    for (const Field& t : doc["targets"].array()) {
        g.set_target(resolve(t, [&](auto& n) { return g.find(n); }, "vertex"));
    }
    return g;
}

json rgame_to_json(const RGame& g)
{
    json vertices = json::array();
    json edges = json::array();
    json targets = json::array();
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        vertices.push_back({{"name", g.name(v)}, {"owner", owner_text(g.owner(v))}});
        for (VertexId w : g.successors(v)) {
            edges.push_back({{"from", g.name(v)}, {"to", g.name(w)}});
        }
        if (g.is_target(v)) {
            targets.push_back(g.name(v));
        }
    }
    return {{"kind", "rgame"}, {"vertices", vertices}, {"edges", edges}, {"targets", targets}};
}

SeqDescription parse_seqdesc(const json& j)
{
    const Field doc(j, "");
    doc.object({"kind", "alphabet", "hash", "blank", "m", "rules", "default"});
    check_kind(doc, {"seqdesc"});
    const std::vector<std::string> alphabet = doc["alphabet"].names();
    auto find = [&](const std::string& n) -> std::optional<Symbol> {
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
            if (alphabet[i] == n) {
                return static_cast<Symbol>(i);
            }
        }
        return std::nullopt;
    };
    const Symbol hash = static_cast<Symbol>(resolve(doc["hash"], find, "symbol"));
    const Symbol blank = static_cast<Symbol>(resolve(doc["blank"], find, "symbol"));
    const Symbol fallback = static_cast<Symbol>(resolve(doc["default"], find, "symbol"));
    const std::uint64_t m = doc["m"].natural();
    std::map<Triple, Symbol> rules;
    for (const Field& r : doc["rules"].array()) {
        r.object({"triple", "out"});
        const auto parts = r["triple"].array();
        if (parts.size() != 3) {
            r["triple"].fail("expected three symbols");
        }
        Triple t{};
        for (std::size_t i = 0; i < 3; ++i) {
            t[i] = static_cast<Symbol>(resolve(parts[i], find, "symbol"));
        }
        if (!rules.emplace(t, static_cast<Symbol>(resolve(r["out"], find, "symbol"))).second) {
            r.fail("duplicate triple");
        }
    }
    try {
        return SeqDescription(alphabet, hash, blank, m, fallback, std::move(rules));
    } catch (const std::invalid_argument& e) {
        throw DocumentError(e.what());
    }
}

json seqdesc_to_json(const SeqDescription& d)
{
    json rules = json::array();
    for (const auto& [t, out] : d.rules()) {
        rules.push_back({{"triple", {d.symbol_name(t[0]), d.symbol_name(t[1]), d.symbol_name(t[2])}},
                         {"out", d.symbol_name(out)}});
    }
    return {{"kind", "seqdesc"},
            {"alphabet", d.alphabet()},
            {"hash", d.symbol_name(d.hash())},
            {"blank", d.symbol_name(d.blank())},
            {"m", d.m()},
            {"rules", rules},
            {"default", d.symbol_name(d.fallback())}};
}

TuringMachine parse_tm(const json& j)
{
    const Field doc(j, "");
    doc.object({"kind", "states", "input_alphabet", "tape_alphabet", "blank", "start", "accept",
                "reject", "delta"});
    check_kind(doc, {"tm"});
    TuringMachine tm;
    tm.states = doc["states"].names();
    tm.tape_alphabet = doc["tape_alphabet"].names();
    auto state = [&](const Field& f) { return resolve(f, [&](auto& n) { return tm.find_state(n); }, "state"); };
    auto symbol = [&](const Field& f) {
        return resolve(f, [&](auto& n) { return tm.find_symbol(n); }, "symbol");
    };
    for (const Field& a : doc["input_alphabet"].array()) {
        tm.input_alphabet.push_back(symbol(a));
    }
    tm.blank = symbol(doc["blank"]);
    tm.start = state(doc["start"]);
    tm.accept = state(doc["accept"]);
    tm.reject = state(doc["reject"]);
    tm.delta.assign(tm.states.size(), std::vector<std::optional<TuringMachine::Action>>(tm.tape_alphabet.size()));
    for (const Field& d : doc["delta"].array()) {
        d.object({"state", "read", "next", "write", "move"});
        const std::size_t q = state(d["state"]);
        const std::size_t x = symbol(d["read"]);
        const std::int64_t move = d["move"].integer();
        if (move < -1 || move > 1) {
            d["move"].fail("move must be -1, 0 or 1");
        }
        if (tm.delta[q][x]) {
            d.fail("duplicate transition");
        }
        tm.set(q, x, state(d["next"]), symbol(d["write"]), static_cast<int>(move));
    }
    return tm;
}

json tm_to_json(const TuringMachine& tm)
{
    json input = json::array();
    for (std::size_t a : tm.input_alphabet) {
        input.push_back(tm.tape_alphabet[a]);
    }
    json delta = json::array();
    for (std::size_t q = 0; q < tm.delta.size(); ++q) {
        for (std::size_t x = 0; x < tm.delta[q].size(); ++x) {
            if (const auto& act = tm.delta[q][x]) {
                delta.push_back({{"state", tm.states[q]},
                                 {"read", tm.tape_alphabet[x]},
                                 {"next", tm.states[act->next]},
                                 {"write", tm.tape_alphabet[act->write]},
                                 {"move", act->move}});
            }
        }
    }
    return {{"kind", "tm"},
            {"states", tm.states},
            {"input_alphabet", input},
            {"tape_alphabet", tm.tape_alphabet},
            {"blank", tm.tape_alphabet.at(tm.blank)},
            {"start", tm.states.at(tm.start)},
            {"accept", tm.states.at(tm.accept)},
            {"reject", tm.states.at(tm.reject)},
            {"delta", delta}};
}

Lts parse_lts(const json& j)
{
    const Field doc(j, "");
    doc.object({"kind", "states", "actions", "transitions"});
    check_kind(doc, {"lts"});
    Lts lts;
    for (auto& s : doc["states"].names()) {
        lts.add_state(s);
    }
    for (auto& a : doc["actions"].names()) {
        lts.add_action(a);
    }
    for (const Field& t : doc["transitions"].array()) {
        t.object({"from", "action", "to"});
        lts.add_transition(resolve(t["from"], [&](auto& n) { return lts.find_state(n); }, "state"),
                           resolve(t["action"], [&](auto& n) { return lts.find_action(n); }, "action"),
                           resolve(t["to"], [&](auto& n) { return lts.find_state(n); }, "state"));
    }
    return lts;
}

json lts_to_json(const Lts& lts)
{
    json states = json::array();
    json actions = json::array();
    json transitions = json::array();
    for (StateId s = 0; s < lts.num_states(); ++s) {
        states.push_back(lts.state_name(s));
    }
    for (ActionId a = 0; a < lts.num_actions(); ++a) {
        actions.push_back(lts.action_name(a));
    }
    for (StateId s = 0; s < lts.num_states(); ++s) {
        for (ActionId a = 0; a < lts.num_actions(); ++a) {
            for (StateId t : lts.successors(s, a)) {
                transitions.push_back(
                    {{"from", lts.state_name(s)}, {"action", lts.action_name(a)}, {"to", lts.state_name(t)}});
            }
        }
    }
    return {{"kind", "lts"}, {"states", states}, {"actions", actions}, {"transitions", transitions}};
}

BeltCertificate parse_certificate(const json& j, const Socn& net)
{
    const Field doc(j, "");
    doc.object({"kind", "net_hash", "planes"});
    check_kind(doc, {"certificate"});
    BeltCertificate cert;
    const std::string hash = doc["net_hash"].str();
    try {
        std::size_t used = 0;
        cert.net_hash = std::stoull(hash, &used, 16);
        if (used != hash.size() || hash.size() != 16) {
            throw std::invalid_argument("digits");
        }
    } catch (const std::exception&) {
        doc["net_hash"].fail("expected 16 hex digits");
    }
    if (cert.net_hash != net_fingerprint(net)) {
        doc["net_hash"].fail("certificate does not match the net");
    }
    auto state = [&](const Field& f) { return resolve(f, [&](auto& n) { return net.find_state(n); }, "state"); };
    for (const Field& p : doc["planes"].array()) {
        p.object({"p", "q", "prefix", "period"});
        PlaneCertificate pc;
        pc.p = state(p["p"]);
        pc.q = state(p["q"]);
        for (const Field& v : p["prefix"].array()) {
            if (v.raw().is_string()) {
                if (v.str() != "inf") {
                    v.fail("expected an integer or \"inf\"");
                }
                pc.prefix.push_back(kUnbounded);
            } else {
                pc.prefix.push_back(v.integer());
            }
        }
        const auto period = p["period"].array();
        if (period.size() != 2) {
            p["period"].fail("expected two integers");
        }
        pc.period_x = period[0].natural();
        pc.period_y = period[1].natural();
        cert.planes.push_back(std::move(pc));
    }
    return cert;
}

json certificate_to_json(const BeltCertificate& cert, const Socn& net)
{
    json planes = json::array();
    for (const auto& pc : cert.planes) {
        json prefix = json::array();
        for (std::int64_t v : pc.prefix) {
            if (v == kUnbounded) {
                prefix.push_back("inf");
            } else {
                prefix.push_back(v);
            }
        }
        planes.push_back({{"p", net.states.at(pc.p)},
                          {"q", net.states.at(pc.q)},
                          {"prefix", prefix},
                          {"period", {pc.period_x, pc.period_y}}});
    }
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(cert.net_hash));
    return {{"kind", "certificate"}, {"net_hash", hash}, {"planes", planes}};
}

}  // namespace gamelab
