#include "gamelab/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gamelab/countdown.hpp"
#include "gamelab/io.hpp"
#include "gamelab/ocn_sim.hpp"
#include "gamelab/reductions.hpp"
#include "gamelab/render.hpp"

namespace gamelab {

namespace {

// Carries a finished command's exit code out of a CLI11 callback.
struct Finished {
    int code;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::size_t state_of(const Socn& net, const std::string& name)
{
    if (auto id = net.find_state(name)) {
        return *id;
    }
    throw UsageError("unknown state " + name);
}

std::size_t state_of(const SocnRGame& game, const std::string& name)
{
    if (auto id = game.find(name)) {
        return *id;
    }
    throw UsageError("unknown state " + name);
}

Symbol symbol_of(const SeqDescription& d, const std::string& name)
{
    if (auto s = d.find_symbol(name)) {
        return *s;
    }
    throw UsageError("unknown symbol " + name);
}

std::vector<std::string> split_word(const std::string& text)
{
    std::vector<std::string> out;
    if (text.empty()) {
        return out;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        out.push_back(item);
    }
    return out;
}

class Commands {
public:
    Commands(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    void install(CLI::App& app);

private:
    // Writes to --output when given, otherwise to stdout.
    void emit(const std::string& text) const
    {
        if (output_.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(output_, std::ios::binary);
        if (!(file << text)) {
            throw std::runtime_error("cannot write " + output_);
        }
    }

    void add_output(CLI::App* cmd) { cmd->add_option("-o,--output", output_, "Write the result to a file"); }

    void add_coloring(CLI::App* cmd)
    {
        cmd->add_option("--view", view_, "Size R of the exact view")->capture_default_str();
        cmd->add_option("--budget", budget_, "Round bound K")->capture_default_str();
    }

    PlaneColoring coloring(const Socn& net) const { return color_planes(net, budget_, view_); }

    void cg_solve();
    void ecg_solve();
    void seq_eval();
    void seq_period();
    void seq_gsp();
    void seq_egsp();
    void reduce_seq2cg();
    void reduce_ecg2rg();
    void reduce_rg2lts();
    void reduce_rg2socn();
    void reduce_tm2seq();
    void sim_check();
    void sim_plane();
    void sim_belts();
    void sim_certify();
    void sim_verify();
    void render_plane_cmd();
    void render_all_cmd();

    std::ostream& out_;
    std::ostream& err_;

    std::string input_;
    std::string cert_;
    std::string output_;
    std::string dir_;
    std::string state_;
    std::string p_;
    std::string q_;
    std::string symbol_;
    std::string word_;
    std::string mode_ = "hash";
    std::string format_ = "pgm";
    std::uint64_t n_ = 0;
    std::uint64_t m_ = 0;
    std::uint64_t index_ = 0;
    std::uint64_t length_ = 0;
    std::uint64_t cap_ = 1'000'000;
    std::uint64_t rows_ = 0;
    std::uint64_t steps_ = 100'000;
    std::uint64_t view_ = 20;
    unsigned budget_ = 40;
    unsigned cell_ = 1;
    bool frontier_ = false;
    bool fit_ = false;
    bool has_cap_ = false;
    bool has_index_ = false;
};

void Commands::install(CLI::App& app)
{
    auto action = [](CLI::App* cmd, void (Commands::*fn)(), Commands* self) {
        cmd->callback([self, fn] { (self->*fn)(); });
    };
    auto file_opt = [this](CLI::App* cmd, const char* name, const char* what) {
        cmd->add_option(name, input_, what)->required();
    };

    auto* cg = app.add_subcommand("cg", "Countdown games")->require_subcommand(1);
    auto* cg_solve_cmd = cg->add_subcommand("solve", "Decide whether state(n) is winning");
    file_opt(cg_solve_cmd, "--game", "Countdown game document");
    cg_solve_cmd->add_option("--state", state_, "Start state")->required();
    cg_solve_cmd->add_option("--n", n_, "Initial counter")->required();
    action(cg_solve_cmd, &Commands::cg_solve, this);

    auto* ecg = app.add_subcommand("ecg", "Existential countdown games")->require_subcommand(1);
    auto* ecg_solve_cmd = ecg->add_subcommand("solve", "Decide whether state(n) wins for some n");
    file_opt(ecg_solve_cmd, "--game", "Countdown game document");
    ecg_solve_cmd->add_option("--state", state_, "Start state")->required();
    ecg_solve_cmd->add_option("--cap", cap_, "Maximum number of levels")->each([this](const std::string&) {
        has_cap_ = true;
    });
    ecg_solve_cmd->add_option("--mode", mode_, "Cycle detection")
        ->check(CLI::IsMember({"hash", "brent"}))
        ->capture_default_str();
    action(ecg_solve_cmd, &Commands::ecg_solve, this);

    auto* seq = app.add_subcommand("seq", "Sequence descriptions")->require_subcommand(1);
    auto* eval = seq->add_subcommand("eval", "Print S(i) or a prefix of the sequence");
    file_opt(eval, "--desc", "Sequence description document");
    auto* at = eval->add_option("--index", index_, "Position to evaluate")->each([this](const std::string&) {
        has_index_ = true;
    });
    auto* prefix = eval->add_option("--length", length_, "Prefix length to print");
    at->excludes(prefix);
    action(eval, &Commands::seq_eval, this);

    auto* period = seq->add_subcommand("period", "Find the preperiod and period");
    file_opt(period, "--desc", "Sequence description document");
    period->add_option("--cap", cap_, "Maximum number of windows stored")->capture_default_str();
    action(period, &Commands::seq_period, this);

    auto* gsp = seq->add_subcommand("gsp", "Is S(n) the given symbol?");
    file_opt(gsp, "--desc", "Sequence description document");
    gsp->add_option("--n", n_, "Position")->required();
    gsp->add_option("--symbol", symbol_, "Symbol")->required();
    action(gsp, &Commands::seq_gsp, this);

    auto* egsp = seq->add_subcommand("egsp", "Does the symbol occur at all?");
    file_opt(egsp, "--desc", "Sequence description document");
    egsp->add_option("--symbol", symbol_, "Symbol")->required();
    egsp->add_option("--cap", cap_, "Maximum number of positions")->capture_default_str();
    action(egsp, &Commands::seq_egsp, this);

    auto* reduce = app.add_subcommand("reduce", "Reductions between problems")->require_subcommand(1);
    auto* seq2cg = reduce->add_subcommand("seq2cg", "Sequence description to countdown game");
    file_opt(seq2cg, "--desc", "Sequence description document");
    add_output(seq2cg);
    action(seq2cg, &Commands::reduce_seq2cg, this);

    auto* ecg2rg = reduce->add_subcommand("ecg2rg", "Existential countdown game to socn-r-game");
    file_opt(ecg2rg, "--game", "Countdown game document");
    ecg2rg->add_option("--state", state_, "Start state")->required();
    add_output(ecg2rg);
    action(ecg2rg, &Commands::reduce_ecg2rg, this);

    auto* rg2lts = reduce->add_subcommand("rg2lts", "Finite r-game to LTS");
    file_opt(rg2lts, "--game", "Reachability game document");
    add_output(rg2lts);
    action(rg2lts, &Commands::reduce_rg2lts, this);

    auto* rg2socn = reduce->add_subcommand("rg2socn", "Socn-r-game to SOCN");
    file_opt(rg2socn, "--game", "Socn-r-game document");
    add_output(rg2socn);
    action(rg2socn, &Commands::reduce_rg2socn, this);

    auto* tm2seq = reduce->add_subcommand("tm2seq", "Turing machine run to sequence description");
    file_opt(tm2seq, "--tm", "Turing machine document");
    tm2seq->add_option("--word", word_, "Comma-separated input symbols");
    tm2seq->add_option("--m", m_, "Row length")->required();
    tm2seq->add_option("--check-steps", steps_, "Steps of the checked run")->capture_default_str();
    add_output(tm2seq);
    action(tm2seq, &Commands::reduce_tm2seq, this);

    auto* sim = app.add_subcommand("sim", "Simulation on one-counter nets")->require_subcommand(1);
    auto* check = sim->add_subcommand("check", "Decide p(m) simulated by q(n)");
    file_opt(check, "--net", "SOCN document");
    check->add_option("--p", p_, "Left state")->required();
    check->add_option("--m", m_, "Left counter")->required();
    check->add_option("--q", q_, "Right state")->required();
    check->add_option("--n", n_, "Right counter")->required();
    check->add_option("--budget", budget_, "Round bound K")->capture_default_str();
    action(check, &Commands::sim_check, this);

    auto* plane = sim->add_subcommand("plane", "Print the rank matrix of one plane");
    file_opt(plane, "--net", "SOCN document");
    plane->add_option("--p", p_, "Left state")->required();
    plane->add_option("--q", q_, "Right state")->required();
    add_coloring(plane);
    action(plane, &Commands::sim_plane, this);

    auto* belts = sim->add_subcommand("belts", "Classify every plane");
    file_opt(belts, "--net", "SOCN document");
    add_coloring(belts);
    action(belts, &Commands::sim_belts, this);

    auto* certify = sim->add_subcommand("certify", "Build and verify a periodic certificate");
    file_opt(certify, "--net", "SOCN document");
    add_coloring(certify);
    add_output(certify);
    action(certify, &Commands::sim_certify, this);

    auto* verify = sim->add_subcommand("verify", "Verify a certificate against a net");
    file_opt(verify, "--net", "SOCN document");
    verify->add_option("--cert", cert_, "Certificate document")->required();
    action(verify, &Commands::sim_verify, this);

    auto* render = app.add_subcommand("render", "Images of planes")->require_subcommand(1);
    auto add_image = [this](CLI::App* cmd) {
        cmd->add_option("--format", format_, "Image format")
            ->check(CLI::IsMember({"pgm", "svg"}))
            ->capture_default_str();
        cmd->add_option("--cell", cell_, "Pixels per cell")->check(CLI::Range(1U, 64U))->capture_default_str();
        cmd->add_flag("--frontier", frontier_, "Draw the frontier (SVG)");
        cmd->add_flag("--fit", fit_, "Draw the fitted belt line (SVG)");
        add_coloring(cmd);
    };
    auto* one = render->add_subcommand("plane", "Render one plane");
    file_opt(one, "--net", "SOCN document");
    one->add_option("--p", p_, "Left state")->required();
    one->add_option("--q", q_, "Right state")->required();
    add_image(one);
    add_output(one);
    action(one, &Commands::render_plane_cmd, this);

    auto* all = render->add_subcommand("all", "Render every plane with a manifest");
    file_opt(all, "--net", "SOCN document");
    all->add_option("--dir", dir_, "Output directory")->required();
    add_image(all);
    action(all, &Commands::render_all_cmd, this);
}

void Commands::cg_solve()
{
    const CountdownGame game(parse_socn_rgame(read_json_file(input_)));
    const bool win = solve_cg(game, state_of(game.game(), state_), n_);
    out_ << (win ? "WIN" : "LOSE") << '\n';
    throw Finished{win ? kExitOk : kExitNegative};
}

void Commands::ecg_solve()
{
    const CountdownGame game(parse_socn_rgame(read_json_file(input_)));
    const EcgResult r = solve_ecg(game, state_of(game.game(), state_),
                                  has_cap_ ? std::optional<std::uint64_t>(cap_) : std::nullopt,
                                  mode_ == "brent" ? CycleMode::Brent : CycleMode::HashSet);
    switch (r.kind) {
    case EcgResult::Kind::Yes:
        out_ << "YES (n=" << r.level << ")\n";
        throw Finished{kExitOk};
    case EcgResult::Kind::No:
        out_ << "NO (segment repeat at j=" << r.repeat->first << "," << r.repeat->second << ")\n";
        throw Finished{kExitNegative};
    case EcgResult::Kind::Inconclusive:
        break;
    }
    out_ << "INCONCLUSIVE (no repeat up to level " << r.level << ")\n";
    throw Finished{kExitInconclusive};
}

void Commands::seq_eval()
{
    const SeqDescription d = parse_seqdesc(read_json_file(input_));
    if (length_ > 0) {
        const auto prefix = eval_prefix(d, length_);
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            out_ << (i ? " " : "") << d.symbol_name(prefix[i]);
        }
        out_ << '\n';
    } else if (has_index_) {
        out_ << d.symbol_name(eval_at(d, index_)) << '\n';
    } else {
        throw UsageError("seq eval needs --index or --length");
    }
}

void Commands::seq_period()
{
    const SeqDescription d = parse_seqdesc(read_json_file(input_));
    const PeriodResult r = find_period(d, cap_);
    if (!r.found) {
        out_ << "INCONCLUSIVE (more than " << cap_ << " distinct windows)\n";
        throw Finished{kExitInconclusive};
    }
    out_ << "start=" << r.start << " period=" << r.period << '\n';
}

void Commands::seq_gsp()
{
    const SeqDescription d = parse_seqdesc(read_json_file(input_));
    const bool yes = decide_gsp(d, n_, symbol_of(d, symbol_));
    out_ << (yes ? "YES" : "NO") << '\n';
    throw Finished{yes ? kExitOk : kExitNegative};
}

void Commands::seq_egsp()
{
    const SeqDescription d = parse_seqdesc(read_json_file(input_));
    const EgspResult r = decide_egsp(d, symbol_of(d, symbol_), cap_);
    switch (r.kind) {
    case EgspResult::Kind::Yes:
        out_ << "YES (i=" << r.index << ")\n";
        throw Finished{kExitOk};
    case EgspResult::Kind::No:
        out_ << "NO (window repeat after " << r.index << " positions)\n";
        throw Finished{kExitNegative};
    case EgspResult::Kind::Inconclusive:
        break;
    }
    out_ << "INCONCLUSIVE (scanned " << r.index << " positions)\n";
    throw Finished{kExitInconclusive};
}

void Commands::reduce_seq2cg()
{
    const SeqCountdown r = seqdesc_to_countdown(parse_seqdesc(read_json_file(input_)));
    emit(canonical(socn_rgame_to_json(r.game.game(), "countdown")));
}

void Commands::reduce_ecg2rg()
{
    const CountdownGame game(parse_socn_rgame(read_json_file(input_)));
    const PumpedGame r = ecg_to_socnrg(game, state_of(game.game(), state_));
    err_ << "start state: " << r.game.states[r.start] << '\n';
    emit(canonical(socn_rgame_to_json(r.game)));
}

void Commands::reduce_rg2lts()
{
    const MimickingLts r = rgame_to_mimicking_lts(parse_rgame(read_json_file(input_)));
    emit(canonical(lts_to_json(r.lts)));
}

void Commands::reduce_rg2socn()
{
    const MimickingNet r = socnrgame_to_socn(parse_socn_rgame(read_json_file(input_)));
    emit(canonical(socn_to_json(r.net)));
}

void Commands::reduce_tm2seq()
{
    const TuringMachine tm = parse_tm(read_json_file(input_));
    std::vector<std::size_t> word;
    for (const auto& s : split_word(word_)) {
        const auto id = tm.find_symbol(s);
        if (!id) {
            throw UsageError("unknown input symbol " + s);
        }
        word.push_back(*id);
    }
    const TmEncoding enc = tm_to_seqdesc(tm, word, m_, steps_);
    emit(canonical(seqdesc_to_json(enc.description)));
}

void Commands::sim_check()
{
    const Socn net = parse_socn(read_json_file(input_));
    const SimDecision d = decide_sim(net, state_of(net, p_), m_, state_of(net, q_), n_, budget_);
    switch (d.kind) {
    case SimDecision::Kind::Yes:
        out_ << "YES\n";
        throw Finished{kExitOk};
    case SimDecision::Kind::No:
        out_ << "NO (rank " << d.rank << ")\n";
        throw Finished{kExitNegative};
    case SimDecision::Kind::Unknown:
        break;
    }
    out_ << "UNKNOWN (" << d.diagnostics << ")\n";
    throw Finished{kExitInconclusive};
}

void Commands::sim_plane()
{
    const Socn net = parse_socn(read_json_file(input_));
    const std::size_t p = state_of(net, p_);
    const std::size_t q = state_of(net, q_);
    const PlaneColoring c = coloring(net);
    out_ << render_ranks(c, p, q) << fit_summary(c, p, q) << '\n';
}

void Commands::sim_belts()
{
    const Socn net = parse_socn(read_json_file(input_));
    const PlaneColoring c = coloring(net);
    for (std::size_t p = 0; p < net.num_states(); ++p) {
        for (std::size_t q = 0; q < net.num_states(); ++q) {
            out_ << net.states[p] << ' ' << net.states[q] << ' ' << fit_summary(c, p, q) << '\n';
        }
    }
}

void Commands::sim_certify()
{
    const Socn net = parse_socn(read_json_file(input_));
    std::vector<std::pair<std::size_t, std::size_t>> dropped;
    const BeltCertificate cert = build_certificate(net, coloring(net), &dropped);
    for (const auto& [p, q] : dropped) {
        err_ << "uncertified plane " << net.states[p] << ' ' << net.states[q] << '\n';
    }
    emit(canonical(certificate_to_json(cert, net)));
}

void Commands::sim_verify()
{
    const Socn net = parse_socn(read_json_file(input_));
    const BeltCertificate cert = parse_certificate(read_json_file(cert_), net);
    const VerifyResult v = verify_certificate(net, cert);
    switch (v.kind) {
    case VerifyResult::Kind::Valid:
        out_ << "VALID\n";
        throw Finished{kExitOk};
    case VerifyResult::Kind::Invalid: {
        const Counterexample& cx = *v.counterexample;
        out_ << "INVALID plane " << net.states[cx.p] << ' ' << net.states[cx.q] << " level " << cx.level
             << " column ";
        if (cx.column == kUnbounded) {
            out_ << "inf";
        } else {
            out_ << cx.column;
        }
        const auto& rule = net.rules[cx.rule];
        out_ << " rule " << net.states[rule.from] << ' ' << net.actions[rule.action] << ' ' << rule.delta
             << ' ' << net.states[rule.to] << '\n';
        throw Finished{kExitNegative};
    }
    case VerifyResult::Kind::Malformed:
        break;
    }
    err_ << "error: malformed certificate: " << v.message << '\n';
    throw Finished{kExitInputError};
}

void Commands::render_plane_cmd()
{
    const Socn net = parse_socn(read_json_file(input_));
    const std::size_t p = state_of(net, p_);
    const std::size_t q = state_of(net, q_);
    const RenderSpec spec{format_ == "svg" ? ImageFormat::Svg : ImageFormat::Pgm, cell_, frontier_, fit_};
    emit(render_plane(coloring(net), p, q, spec));
}

void Commands::render_all_cmd()
{
    const Socn net = parse_socn(read_json_file(input_));
    const RenderSpec spec{format_ == "svg" ? ImageFormat::Svg : ImageFormat::Pgm, cell_, frontier_, fit_};
    for (const auto& name : render_all(net.states, coloring(net), dir_, spec)) {
        out_ << name << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Countdown games, reductions and one-counter simulation", "ocngame"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");
    Commands commands(out, err);
    commands.install(app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        return kExitOk;
    } catch (const Finished& f) {
        return f.code;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    } catch (const ResourceError& e) {
        err << "error: resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::exception& e) {
        // Malformed documents, unknown names and failed writes.
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace gamelab
