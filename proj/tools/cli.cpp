#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lcgraph/clifford.hpp"
#include "lcgraph/decomposition.hpp"
#include "lcgraph/equivalence.hpp"
#include "lcgraph/io.hpp"
#include "lcgraph/oracle.hpp"
#include "lcgraph/orbit.hpp"
#include "lcgraph/reduction.hpp"

namespace lcg::cli {

namespace {

// A failure that maps directly onto an exit code and an error prefix.
struct Failure {
    int code;
    std::string tag;
    std::string message;
};

struct Options {
    std::optional<std::uint64_t> cap;
    std::uint64_t seed = 0;
    bool verify = false;
    bool quiet = false;
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw Failure{exit_io, "io", "cannot write '" + path + "'"};
    f << text;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        out << text;
    else
        write_file(path, text);
}

bool within_oracle_limit(std::size_t n) { return n <= oracle::default_qubit_limit; }

void report_verify(std::ostream& out, const Options& opt, std::size_t n, const std::function<bool()>& check) {
    if (!opt.verify) return;
    if (!within_oracle_limit(n)) {
        if (!opt.quiet) out << "oracle: skipped (n > " << oracle::default_qubit_limit << ")\n";
        return;
    }
    if (!check()) throw Failure{exit_inequivalent, "verify", "statevector cross-check failed"};
    if (!opt.quiet) out << "oracle: ok\n";
}

Graph random_graph(std::size_t n, std::mt19937_64& rng) {
    BitMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() & 1u) {
                adj.set(i, j);
                adj.set(j, i);
            }
    return Graph(std::move(adj));
}

int cmd_reduce(const std::string& input, const std::string& prefix, const Options& opt, std::ostream& out) {
    const auto s = io::read_stabilizer_file(input);
    const auto w = to_graph_state(s);
    if (!verify_witness(s, w)) throw Failure{exit_internal, "internal", "reduction witness failed verification"};
    if (prefix.empty()) {
        out << "# graph\n" << io::to_text(w.graph) << "# clifford\n" << io::to_text(w.q) << "# basis change\n"
            << io::to_text(w.r);
    } else {
        write_file(prefix + ".graph", io::to_text(w.graph));
        write_file(prefix + ".lc", io::to_text(w.q));
        write_file(prefix + ".mat", io::to_text(w.r));
        if (!opt.quiet) out << "reduced to a graph with " << w.graph.edge_count() << " edges\n";
    }
    report_verify(out, opt, s.qubits(), [&] { return oracle::check_reduction(s, w); });
    return exit_ok;
}

int cmd_decompose(const std::string& clifford_path, const std::string& graph_path, const std::string& output,
                  const Options& opt, std::ostream& out) {
    const auto q = io::read_clifford_file(clifford_path);
    const auto g = io::read_graph_file(graph_path);
    if (q.qubits() != g.size()) throw Failure{exit_parse, "domain", "clifford and graph sizes differ"};
    LCSequence seq;
    try {
        seq = decompose_local_clifford(q, g);
    } catch (const NotInDomainError& e) {
        throw Failure{exit_parse, "domain", e.what()};
    }
    emit(out, output, io::to_text(seq));
    if (!all_indices_distinct(seq) && !opt.quiet) out << "warning: sequence repeats a vertex index\n";
    report_verify(out, opt, g.size(), [&] { return oracle::check_sequence(g, seq, apply_sequence(g, seq)); });
    return exit_ok;
}

int cmd_apply(const std::string& graph_path, const std::string& seq_path, const std::string& output,
              const std::string& expect, const Options& opt, std::ostream& out) {
    const auto g = io::read_graph_file(graph_path);
    const auto seq = io::read_sequence_file(seq_path);
    for (auto v : seq.expanded())
        if (v.value() > g.size())
            throw Failure{exit_parse, "domain", "sequence vertex " + std::to_string(v.value()) + " exceeds n"};
    const Graph result = apply_sequence(g, seq);
    emit(out, output, io::to_text(result));
    if (!expect.empty()) {
        const auto q = io::read_clifford_file(expect);
        if (q.qubits() != g.size()) throw Failure{exit_parse, "domain", "clifford and graph sizes differ"};
        const auto report = graph_action(q, g);
        if (!report.image || *report.image != result)
            throw Failure{exit_inequivalent, "mismatch", "sequence result differs from the Clifford image"};
        if (!opt.quiet) out << "# matches clifford action\n";
    }
    return exit_ok;
}

int cmd_orbit(const std::string& graph_path, const std::string& members_path, const std::string& dot_path,
              const Options& opt, std::ostream& out) {
    const auto g = io::read_graph_file(graph_path);
    const auto orbit = enumerate_orbit(g, opt.cap ? static_cast<std::size_t>(*opt.cap) : default_member_cap);
    out << orbit.size() << (orbit.size() == 1 ? " member\n" : " members\n");
    if (!opt.quiet) out << "canonical:\n" << io::to_text(orbit.canonical());
    if (!members_path.empty()) {
        std::ostringstream s;
        io::write_graphs(s, orbit.members());
        write_file(members_path, s.str());
    }
    if (!dot_path.empty()) {
        std::ostringstream s;
        for (std::size_t k = 0; k < orbit.size(); ++k) io::write_dot(s, orbit.members()[k], "G" + std::to_string(k + 1));
        write_file(dot_path, s.str());
    }
    return exit_ok;
}

int cmd_canon(const std::string& graph_path, const std::string& output, const Options& opt, std::ostream& out) {
    const auto g = io::read_graph_file(graph_path);
    emit(out, output, io::to_text(canonical_form(g, opt.cap ? static_cast<std::size_t>(*opt.cap) : default_member_cap)));
    return exit_ok;
}

int cmd_equiv(const std::string& a_path, const std::string& b_path, const std::string& witness_path,
              const Options& opt, std::ostream& out) {
    const auto s = io::read_graph_or_stabilizer_file(a_path);
    const auto s_prime = io::read_graph_or_stabilizer_file(b_path);
    if (s.qubits() != s_prime.qubits()) {
        out << "inequivalent\n";
        return exit_inequivalent;
    }
    const auto result = test_equivalence(s, s_prime, opt.cap.value_or(default_search_cap));
    switch (result.verdict) {
        case Verdict::equivalent:
            out << "equivalent\n";
            emit(out, witness_path, io::to_text(*result.witness));
            report_verify(out, opt, s.qubits(), [&] { return oracle::check_clifford_maps(*result.witness, s, s_prime); });
            return exit_ok;
        case Verdict::inequivalent:
            out << "inequivalent\n";
            return exit_inequivalent;
        case Verdict::indeterminate:
            out << "indeterminate\n";
            if (!opt.quiet)
                out << "searched " << result.searched << " of 2^" << result.space_dim << " candidates\n";
            return exit_indeterminate;
    }
    return exit_internal;
}

int cmd_export_dot(const std::string& graph_path, const std::string& output, std::ostream& out) {
    const auto g = io::read_graph_file(graph_path);
    std::ostringstream s;
    io::write_dot(s, g);
    emit(out, output, s.str());
    return exit_ok;
}

int cmd_oracle_check(const std::string& graph_path, std::size_t count, const Options& opt, std::ostream& out) {
    std::size_t checks = 0;
    std::size_t failures = 0;
    auto tally = [&](bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            out << "FAIL " << what << '\n';
        }
    };

    if (!graph_path.empty()) {
        const auto g = io::read_graph_file(graph_path);
        if (!within_oracle_limit(g.size())) throw Failure{exit_usage, "usage", "graph too large for the oracle"};
        tally(oracle::satisfies_graph_equations(oracle::build_graph_state(g), g), "graph state equations");
        for (std::size_t v = 1; v <= g.size(); ++v) {
            const VertexId vid(v);
            tally(oracle::check_graph_action(local_complement_clifford(g, vid), g, local_complement(g, vid)),
                  "local complementation at " + std::to_string(v));
        }
    } else {
        std::mt19937_64 rng(opt.seed);
        for (std::size_t k = 0; k < count; ++k) {
            const std::size_t n = 2 + k % 5;
            const auto s = random_stabilizer(n, rng());
            tally(oracle::check_reduction(s, to_graph_state(s)), "reduction #" + std::to_string(k));

            const Graph g = random_graph(n, rng);
            const VertexId v(1 + rng() % n);
            tally(oracle::check_graph_action(local_complement_clifford(g, v), g, local_complement(g, v)),
                  "local complementation #" + std::to_string(k));
        }
    }
    out << checks - failures << '/' << checks << " oracle checks passed\n";
    return failures == 0 ? exit_ok : exit_inequivalent;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph states and local Clifford operations over GF(2)", "lcgraph"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--cap", opt.cap, "Orbit member cap (orbit, canon) or candidate search cap (equiv)");
    app.add_option("--seed", opt.seed, "Seed for randomized commands");
    app.add_flag("--verify", opt.verify, "Cross-check the result against the statevector oracle (n <= 12)");
    app.add_flag("-q,--quiet", opt.quiet, "Print only essential output");

    std::string in1, in2, output, expect, members, dot;
    std::size_t count = 20;
    std::function<int()> action;

    auto* reduce = app.add_subcommand("reduce", "Reduce a stabilizer state to a graph state");
    reduce->add_option("stabilizer", in1, "Stabilizer file")->required();
    reduce->add_option("-o,--output", output, "Write PREFIX.graph, PREFIX.lc and PREFIX.mat");
    reduce->callback([&] { action = [&] { return cmd_reduce(in1, output, opt, out); }; });

    auto* decompose = app.add_subcommand("decompose", "Express a local Clifford action on a graph as local complementations");
    decompose->add_option("clifford", in1, "Local Clifford file")->required();
    decompose->add_option("graph", in2, "Graph file")->required();
    decompose->add_option("-o,--output", output, "Sequence file (default: stdout)");
    decompose->callback([&] { action = [&] { return cmd_decompose(in1, in2, output, opt, out); }; });

    auto* apply = app.add_subcommand("apply", "Apply a local complementation sequence to a graph");
    apply->add_option("graph", in1, "Graph file")->required();
    apply->add_option("sequence", in2, "Sequence file")->required();
    apply->add_option("-o,--output", output, "Graph file (default: stdout)");
    apply->add_option("--expect", expect, "Clifford file whose action the result must equal");
    apply->callback([&] { action = [&] { return cmd_apply(in1, in2, output, expect, opt, out); }; });

    auto* orbit = app.add_subcommand("orbit", "Enumerate the local complementation orbit of a graph");
    orbit->add_option("graph", in1, "Graph file")->required();
    orbit->add_option("--members", members, "Write all members, separated by blank lines");
    orbit->add_option("--dot", dot, "Write all members as DOT graphs");
    orbit->callback([&] { action = [&] { return cmd_orbit(in1, members, dot, opt, out); }; });

    auto* canon = app.add_subcommand("canon", "Print the canonical orbit representative");
    canon->add_option("graph", in1, "Graph file")->required();
    canon->add_option("-o,--output", output, "Graph file (default: stdout)");
    canon->callback([&] { action = [&] { return cmd_canon(in1, output, opt, out); }; });

    auto* equiv = app.add_subcommand("equiv", "Decide local Clifford equivalence of two states");
    equiv->add_option("first", in1, "Graph or stabilizer file")->required();
    equiv->add_option("second", in2, "Graph or stabilizer file")->required();
    output = "witness.lc";
    equiv->add_option("-o,--output", output, "Witness file, '-' for stdout")->capture_default_str();
    equiv->callback([&] { action = [&] { return cmd_equiv(in1, in2, output, opt, out); }; });

    auto* export_dot = app.add_subcommand("export-dot", "Write a graph in DOT format");
    export_dot->add_option("graph", in1, "Graph file")->required();
    export_dot->add_option("-o,--output", output, "DOT file (default: stdout)");
    export_dot->callback([&] { action = [&] { return cmd_export_dot(in1, output, out); }; });

    auto* oracle_check = app.add_subcommand("oracle-check", "Cross-check the binary core against statevectors");
    oracle_check->add_option("graph", in1, "Graph file (default: random instances)");
    oracle_check->add_option("--count", count, "Number of random instances")->capture_default_str();
    oracle_check->callback([&] { action = [&] { return cmd_oracle_check(in1, count, opt, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << '\n';
        return exit_usage;
    }
    // Only the equiv witness has a default destination.
    if (!equiv->parsed() && output == "witness.lc") output.clear();

    try {
        return action();
    } catch (const Failure& f) {
        err << "error: " << f.tag << ": " << f.message << '\n';
        return f.code;
    } catch (const io::ParseError& e) {
        err << "error: parse: " << e.what() << '\n';
        return exit_parse;
    } catch (const CapExceededError& e) {
        err << "error: cap: " << e.what() << '\n';
        return exit_cap;
    } catch (const oracle::TooLargeError& e) {
        err << "error: usage: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::logic_error& e) {
        err << "error: internal: " << e.what() << '\n';
        return exit_internal;
    } catch (const std::exception& e) {
        err << "error: io: " << e.what() << '\n';
        return exit_io;
    }
}

}  // namespace lcg::cli
