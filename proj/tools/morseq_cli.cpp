// Command-line driver: Morse sequences, gradient fields, and Betti numbers
// on simplicial complexes.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "morseq/errors.hpp"
#include "morseq/homology_oracle.hpp"
#include "morseq/io.hpp"
#include "morseq/morse_complex.hpp"
#include "morseq/morse_sequence.hpp"
#include "morseq/schedulers.hpp"
#include "morseq/simplex_pool.hpp"
#include "morseq/stacks.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitStack = 3;

struct ComplexInput {
    std::string path;
    std::string values_path;
    bool use_weights = false;
};

struct LoadedComplex {
    morseq::SimplexPool pool;
    morseq::Stack stack;
};

LoadedComplex load_with_stack(const ComplexInput& in)
{
    morseq::io::ParsedComplex parsed =
        morseq::io::parse_complex(morseq::io::read_file(in.path));

    LoadedComplex out{std::move(parsed.pool), morseq::Stack()};
    if (!in.values_path.empty()) {
        morseq::VertexMap f = morseq::io::parse_vertex_values(
            morseq::io::read_file(in.values_path));
        out.stack = morseq::induced_stack(f, out.pool);
    } else if (in.use_weights) {
        if (!parsed.weights)
            throw morseq::io_error("--weights given but " + in.path +
                                   " has no weight column");
        out.stack = *parsed.weights;
    } else {
        out.stack = morseq::Stack::constant(out.pool);
    }
    return out;
}

void emit(const std::string& content, const std::string& out_path)
{
    if (out_path.empty())
        std::cout << content;
    else
        morseq::io::write_file(out_path, content);
}

int run_sweep(const ComplexInput& in, const std::string& out_path, bool maximal)
{
    LoadedComplex lc = load_with_stack(in);
    morseq::MorseSequence seq = maximal ? morseq::max_f(lc.pool, lc.stack)
                                        : morseq::min_f(lc.pool, lc.stack);
    emit(morseq::io::serialize_sequence(seq), out_path);
    return kExitOk;
}

int run_lowerstar(const std::string& path, const std::string& values_path,
                  unsigned jobs, const std::string& out_path)
{
    morseq::io::ParsedComplex parsed =
        morseq::io::parse_complex(morseq::io::read_file(path));
    morseq::VertexMap f =
        morseq::io::parse_vertex_values(morseq::io::read_file(values_path));
    if (!morseq::is_theta_map(f)) {
        std::cerr << "lowerstar: vertex values are not injective; use\n"
                  << "  morseq max " << path << " --values " << values_path
                  << "\nwhich handles ties directly.\n";
        return kExitStack;
    }
    morseq::MorseSequence seq = morseq::max_lower_star(parsed.pool, f, jobs);
    emit(morseq::io::serialize_sequence(seq), out_path);
    return kExitOk;
}

int run_validate(const ComplexInput& in, const std::string& seq_path,
                 const std::string& audit)
{
    LoadedComplex lc = load_with_stack(in);
    morseq::MorseSequence seq =
        morseq::io::parse_sequence(morseq::io::read_file(seq_path));

    morseq::SimplexPool k = lc.pool;
    morseq::Stack stack = lc.stack;
    if (!morseq::is_simplicial(lc.pool)) {
        // A sequence on a cosimplicial pool runs from its underline to its
        // closure; pair weights outside the pool are never consulted.
        k = morseq::closure(lc.pool);
        seq.base = morseq::underline(lc.pool);
        std::vector<morseq::Weight> w(k.size(), 0);
        for (morseq::Index i = 0; i < lc.pool.size(); ++i)
            w[k.index_of(lc.pool.at(i))] = lc.stack.at(i);
        stack = morseq::Stack::from_weights(std::move(w));
    }

    morseq::ValidationReport r = morseq::validate_f(seq, k, stack);
    if (!r) {
        if (r.index == static_cast<std::size_t>(-1))
            std::cout << "invalid: " << r.reason << "\n";
        else
            std::cout << "invalid at item " << r.index << ": " << r.reason
                      << "\n";
        return kExitCheckFailed;
    }
    std::cout << "valid\n";

    if (audit == "max") {
        bool ok = morseq::audit_maximal(seq, k, stack);
        std::cout << "maximal: " << (ok ? "yes" : "no") << "\n";
        if (!ok)
            return kExitCheckFailed;
    } else if (audit == "min") {
        bool ok = morseq::audit_minimal(seq, k, stack);
        std::cout << "minimal: " << (ok ? "yes" : "no") << "\n";
        if (!ok)
            return kExitCheckFailed;
    }
    return kExitOk;
}

void require_complex(const morseq::SimplexPool& pool, const char* who)
{
    if (!morseq::is_simplicial(pool))
        throw std::domain_error(std::string(who) +
                                ": input must be a simplicial complex");
}

int run_betti(const std::string& path, const std::string& seq_path,
              bool use_oracle)
{
    morseq::io::ParsedComplex parsed =
        morseq::io::parse_complex(morseq::io::read_file(path));
    require_complex(parsed.pool, "betti");

    std::vector<std::size_t> betti;
    if (use_oracle) {
        betti = morseq::oracle::betti_mod2(parsed.pool);
    } else {
        morseq::MorseSequence seq =
            morseq::io::parse_sequence(morseq::io::read_file(seq_path));
        betti = morseq::betti_mod2_from_morse(seq, parsed.pool);
    }
    for (std::size_t i = 0; i < betti.size(); ++i)
        std::cout << (i ? " " : "") << betti[i];
    std::cout << "\n";
    return kExitOk;
}

int run_stats(const std::string& path, const std::string& seq_path)
{
    morseq::io::ParsedComplex parsed =
        morseq::io::parse_complex(morseq::io::read_file(path));
    const morseq::SimplexPool& pool = parsed.pool;

    std::cout << "dim " << pool.dimension() << "\n"
              << "simplexes " << pool.size() << "\n";
    std::vector<std::size_t> counts = pool.counts_by_dim();
    for (std::size_t d = 0; d < counts.size(); ++d)
        std::cout << "d" << d << " " << counts[d] << "\n";
    std::cout << "euler " << morseq::euler_characteristic(pool) << "\n";

    if (!seq_path.empty()) {
        morseq::MorseSequence seq =
            morseq::io::parse_sequence(morseq::io::read_file(seq_path));
        std::size_t pairs = 0;
        for (const morseq::MorseItem& item : seq.items)
            if (item.is_pair())
                ++pairs;
        std::cout << "items " << seq.items.size() << "\n"
                  << "pairs " << pairs << "\n"
                  << "criticals " << seq.items.size() - pairs << "\n";
        std::vector<std::size_t> cv = morseq::critical_vector(seq);
        std::cout << "critical_vector";
        for (std::size_t c : cv)
            std::cout << " " << c;
        std::cout << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Morse sequences and gradient vector fields on simplicial "
                 "complexes"};
    app.require_subcommand(1);

    ComplexInput in;
    std::string out_path, seq_path, audit, values_path;
    unsigned jobs = 0;
    bool use_oracle = false;

    auto add_stack_options = [&](CLI::App* cmd) {
        CLI::Option* v =
            cmd->add_option("--values", in.values_path,
                            "vertex values file; the stack is the "
                            "max-over-vertices extension");
        CLI::Option* w = cmd->add_flag(
            "--weights", in.use_weights,
            "use the explicit weight column of the complex file");
        v->excludes(w);
    };

    CLI::App* cmd_max =
        app.add_subcommand("max", "maximal sequence (increasing sweep)");
    cmd_max->add_option("complex", in.path, "complex file")->required();
    add_stack_options(cmd_max);
    cmd_max->add_option("--out", out_path, "write the sequence here");

    CLI::App* cmd_min =
        app.add_subcommand("min", "minimal sequence (decreasing sweep)");
    cmd_min->add_option("complex", in.path, "complex file")->required();
    add_stack_options(cmd_min);
    cmd_min->add_option("--out", out_path, "write the sequence here");

    CLI::App* cmd_ls = app.add_subcommand(
        "lowerstar", "per-lower-star maximal sequence for injective values");
    cmd_ls->add_option("complex", in.path, "complex file")->required();
    cmd_ls->add_option("--values", values_path, "injective vertex values file")
        ->required();
    cmd_ls->add_option("--jobs", jobs, "worker threads (0 = hardware)");
    cmd_ls->add_option("--out", out_path, "write the sequence here");

    CLI::App* cmd_val =
        app.add_subcommand("validate", "replay-check a sequence file");
    cmd_val->add_option("complex", in.path, "complex file")->required();
    cmd_val->add_option("sequence", seq_path, "sequence file")->required();
    add_stack_options(cmd_val);
    cmd_val->add_option("--audit", audit, "also audit maximality/minimality")
        ->check(CLI::IsMember({"max", "min"}));

    CLI::App* cmd_betti = app.add_subcommand("betti", "mod-2 Betti numbers");
    cmd_betti->add_option("complex", in.path, "complex file")->required();
    CLI::Option* fs = cmd_betti->add_option(
        "--from-sequence", seq_path, "compute on the Morse complex of this sequence");
    CLI::Option* orc = cmd_betti->add_flag(
        "--oracle", use_oracle, "compute from the full boundary matrices");
    fs->excludes(orc);

    CLI::App* cmd_stats =
        app.add_subcommand("stats", "face counts and Euler characteristic");
    cmd_stats->add_option("complex", in.path, "complex file")->required();
    cmd_stats->add_option("--sequence", seq_path,
                          "also summarize this sequence file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (app.got_subcommand(cmd_max))
            return run_sweep(in, out_path, true);
        if (app.got_subcommand(cmd_min))
            return run_sweep(in, out_path, false);
        if (app.got_subcommand(cmd_ls))
            return run_lowerstar(in.path, values_path, jobs, out_path);
        if (app.got_subcommand(cmd_val))
            return run_validate(in, seq_path, audit);
        if (app.got_subcommand(cmd_betti)) {
            if (!use_oracle && seq_path.empty()) {
                std::cerr << "betti: pass --oracle or --from-sequence\n";
                return kExitParse;
            }
            return run_betti(in.path, seq_path, use_oracle);
        }
        if (app.got_subcommand(cmd_stats))
            return run_stats(in.path, seq_path);
    } catch (const morseq::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const morseq::stack_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStack;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStack;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}
