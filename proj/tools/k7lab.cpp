// k7lab: command-line front end for the small-graph minor laboratory.
//
// Subcommands:
//   verify {h8|deg9|appendix-five}   run a verification campaign
//   minor                            test a corpus against a target minor
//   enum                             enumerate constrained graph classes
//
// Exit codes: 0 success and expected outcome, 1 run verified but the outcome
// differs from the expected one, 2 usage error, 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "k7lab/enumerate.hpp"
#include "k7lab/graph6.hpp"
#include "k7lab/minors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnexpected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int resolve_threads(std::optional<int> cli_threads) {
    if (cli_threads) return std::max(1, *cli_threads);
    if (const char* env = std::getenv("K7LAB_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

int run_verify(const std::string& name, int threads, const std::string& output,
               bool timing, std::optional<int> expect_survivors) {
    k7lab::CampaignReport report;
    if (name == "h8") {
        report = k7lab::verify_h8_lemma(threads);
    } else if (name == "deg9") {
        report = k7lab::verify_deg9_lemma(threads);
    } else if (name == "appendix-five") {
        report = k7lab::find_minimal_k6_free(threads);
    } else {
        std::cerr << "unknown campaign: " << name << "\n";
        return kExitUsage;
    }
    if (expect_survivors) {
        report.expected_outcome =
            report.survivors.size() == static_cast<size_t>(*expect_survivors);
        report.extra["expected_survivor_override"] = *expect_survivors;
    }
    auto j = report.to_json(timing);
    if (!output.empty()) {
        std::ofstream out(output, std::ios::binary | std::ios::trunc);
        if (!out) {
            std::cerr << "cannot open " << output << "\n";
            return kExitIo;
        }
        out << j.dump(2) << '\n';
    } else {
        std::cout << j.dump(2) << '\n';
    }
    std::cerr << "campaign " << name << ": examined=" << report.examined
              << " survivors=" << report.survivors.size()
              << " counterexamples=" << report.counterexamples
              << " outcome=" << (report.expected_outcome ? "expected" : "UNEXPECTED")
              << "\n";
    return report.expected_outcome ? kExitOk : kExitUnexpected;
}

int run_minor(const std::string& input, const std::string& target_spec,
              const std::string& certs_dir, bool strict) {
    k7lab::SmallGraph target;
    try {
        target = k7lab::parse_target(target_spec);
    } catch (const std::exception& e) {
        std::cerr << "bad target: " << e.what() << "\n";
        return kExitUsage;
    }
    std::ifstream in(input, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open " << input << "\n";
        return kExitIo;
    }
    std::string line;
    int lineno = 0, index = 0;
    bool clean = true;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1 && line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
        if (line.empty()) continue;
        k7lab::SmallGraph g;
        try {
            g = k7lab::parse_graph6(line);
        } catch (const std::exception& e) {
            std::cerr << input << ":" << lineno << ": " << e.what() << "\n";
            if (strict) return kExitIo;
            clean = false;
            continue;
        }
        ++index;
        auto cert = k7lab::has_minor(g, target, target_spec);
        std::string cert_ref = "none";
        if (cert && !certs_dir.empty()) {
            std::string path =
                certs_dir + "/cert_" + std::to_string(index) + ".json";
            std::ofstream cf(path, std::ios::binary | std::ios::trunc);
            if (!cf) {
                std::cerr << "cannot open " << path << "\n";
                return kExitIo;
            }
            cf << cert->to_json().dump(2) << '\n';
            cert_ref = path;
        } else if (cert) {
            cert_ref = cert->to_json().dump();
        }
        std::cout << line << '\t' << (cert ? "minor" : "no-minor") << '\t'
                  << cert_ref << '\n';
    }
    return clean ? kExitOk : kExitIo;
}

int run_enum(const k7lab::EnumerationTask& task, const std::string& output) {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!output.empty()) {
        file.open(output, std::ios::binary | std::ios::trunc);
        if (!file) {
            std::cerr << "cannot open " << output << "\n";
            return kExitIo;
        }
        out = &file;
    }
    std::uint64_t count = 0;
    k7lab::enumerate_graphs(task, [&](const k7lab::SmallGraph& g) {
        *out << k7lab::serialize_graph6(g) << '\n';
        ++count;
    });
    std::cerr << "enumerated " << count << " graphs\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k7lab: exact small-graph minor laboratory"};
    app.require_subcommand(1);

    std::optional<int> threads_flag;
    app.add_option("--threads", threads_flag,
                   "worker count (default 1; env K7LAB_THREADS)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification campaign");
    std::string campaign;
    std::string verify_output;
    bool timing = false;
    std::optional<int> expect_survivors;
    verify->add_option("campaign", campaign, "h8 | deg9 | appendix-five")
        ->required();
    verify->add_option("--output", verify_output, "report JSON path (default stdout)");
    verify->add_flag("--timing", timing,
                     "include elapsed_ms in the report (breaks byte-stability)");
    verify->add_option("--expect-survivors", expect_survivors,
                       "override the expected survivor count");

    // minor
    auto* minor = app.add_subcommand("minor", "test a graph6 corpus for a minor");
    std::string input, target_spec, certs_dir;
    bool strict = false;
    minor->add_option("--input", input, "newline-delimited graph6 file")->required();
    minor->add_option("--target", target_spec,
                      "target minor: K6, K3,3, a named graph, or g6:<bytes>")
        ->required();
    minor->add_option("--certs-dir", certs_dir, "write certificates here");
    minor->add_flag("--strict", strict, "abort on the first parse failure");

    // enum
    auto* enumc = app.add_subcommand("enum", "enumerate constrained graphs");
    k7lab::EnumerationTask task;
    std::vector<std::string> filters;
    std::string shard_spec, enum_output;
    enumc->add_option("--n", task.n, "order")->required();
    int min_deg = -1, max_deg = -1;
    enumc->add_option("--min-degree", min_deg, "minimum degree");
    enumc->add_option("--max-degree", max_deg, "maximum degree");
    enumc->add_option("--filter", filters,
                      "k4-free | alpha-le-<k> | triangle-free-complement");
    enumc->add_option("--shard", shard_spec, "i/m shard selector");
    enumc->add_option("--checkpoint", task.checkpoint_path, "checkpoint file");
    enumc->add_option("--output", enum_output, "corpus path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    int threads = resolve_threads(threads_flag);

    try {
        if (*verify) return run_verify(campaign, threads, verify_output, timing,
                                       expect_survivors);
        if (*minor) return run_minor(input, target_spec, certs_dir, strict);
        if (*enumc) {
            if (min_deg >= 0) task.min_degree = min_deg;
            if (max_deg >= 0) task.max_degree = max_deg;
            for (const auto& f : filters) {
                if (f == "k4-free") {
                    task.k4_free = true;
                } else if (f == "triangle-free-complement") {
                    task.triangle_free_complement = true;
                } else if (f.rfind("alpha-le-", 0) == 0) {
                    task.alpha_le = std::stoi(f.substr(9));
                } else {
                    std::cerr << "unknown filter: " << f << "\n";
                    return kExitUsage;
                }
            }
            if (!shard_spec.empty()) {
                auto slash = shard_spec.find('/');
                if (slash == std::string::npos) {
                    std::cerr << "bad --shard, expected i/m\n";
                    return kExitUsage;
                }
                task.shard_index = std::stoi(shard_spec.substr(0, slash));
                task.shard_count = std::stoi(shard_spec.substr(slash + 1));
            }
            task.validate();
            return run_enum(task, enum_output);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
