// Command-line front end: kernel construction, GPB/PB pipelines, the
// brute-force oracle, partial-distance profiles and scaling exponents.
// Data goes to stdout or --out; progress and timings go to stderr.
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cvpk/oracle.hpp"
#include "cvpk/scaling.hpp"
#include "cvpk/serialize.hpp"
#include "cvpk/threading.hpp"
#include "cvpk/version.hpp"

namespace {

using namespace cvpk;

// exit codes
constexpr int kOk = 0;
constexpr int kUsageError = 2;
constexpr int kGuardViolation = 3;
constexpr int kVerifyMismatch = 4;

class VerifyMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

int log2_size(int n) {
    if (n < 1 || (n & (n - 1)) != 0)
        throw std::invalid_argument("size must be a power of two");
    int m = 0;
    while ((1 << m) < n) ++m;
    return m;
}

void diag(const std::string& line) { std::cerr << "[cvpk] " << line << "\n"; }

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

json wrap_manifest(const std::string& command, const json& params, json payload) {
    RunManifest m;
    m.command = command;
    m.params = params;
    m.version = kVersion;
    m.digest = digest_hex(payload.dump());
    payload["manifest"] = manifest_json(m);
    return payload;
}

void emit_json(const json& doc, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_sink(out_path, file);
    os << doc.dump(2) << "\n";
}

void emit_text(const std::string& text, const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_sink(out_path, file);
    os << text;
}

// CSV artifacts carry their manifest as a leading comment line.
void emit_csv(const std::string& command, const json& params, const std::string& body,
              const std::string& out_path) {
    RunManifest m;
    m.command = command;
    m.params = params;
    m.version = kVersion;
    m.digest = digest_hex(body);
    std::ofstream file;
    std::ostream& os = open_sink(out_path, file);
    os << "# manifest " << manifest_json(m).dump() << "\n" << body;
}

Kernel make_kernel(Family family, int n) {
    switch (family) {
        case Family::cvpk: return cvpk::cvpk(n);
        case Family::cvpk_swapped: return swapped_cvpk(n);
        case Family::cvpk_sorted: return sorted_cvpk(n);
        case Family::arikan_power: return arikan_power(log2_size(n));
    }
    throw std::logic_error("make_kernel: bad family");
}

OracleOptions oracle_options(int threads, bool force) {
    OracleOptions opt;
    opt.force = force;
    opt.threads = threads;
    opt.progress = [](int done, int total) {
        diag("oracle phase " + std::to_string(done) + "/" + std::to_string(total));
    };
    return opt;
}

// PB by the route the family calls for: the recursion for cvpk and its
// swapped variant, the oracle for sorted and Arikan kernels.
Pb pb_for(Family family, int n, int threads, bool force) {
    switch (family) {
        case Family::cvpk: {
            if (n >= 128) diag("computing GPB of size " + std::to_string(n));
            return pb_cvpk_pair(log2_size(n), threads).plain;
        }
        case Family::cvpk_swapped: {
            if (n >= 128) diag("computing GPB of size " + std::to_string(n));
            return pb_cvpk_pair(log2_size(n), threads).swapped;
        }
        case Family::cvpk_sorted:
        case Family::arikan_power:
            return pb_oracle(make_kernel(family, n), oracle_options(threads, force));
    }
    throw std::logic_error("pb_for: bad family");
}

// Streams {"n":..,"phases":[...],"manifest":{..}} so a full-size GPB never
// has to exist as one in-memory document.
void stream_gpb_json(int m, int threads, const std::string& command, const json& params,
                     const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_sink(out_path, file);
    std::uint64_t hash = 0xcbf29ce484222325ull;
    const auto feed = [&](const std::string& chunk) {
        for (unsigned char ch : chunk) {
            hash ^= ch;
            hash *= 0x100000001b3ull;
        }
        os << chunk;
    };
    const int n = 1 << m;
    feed("{\"n\":" + std::to_string(n) + ",\"phases\":[");
    gpb_stream(
        m,
        [&](int phase, GpbRow&& row) {
            json boxes = json::array();
            for (const WeightEnum& p : row) boxes.push_back(weight_enum_json(p));
            feed(phase == 0 ? boxes.dump() : "," + boxes.dump());
            if (n >= 256 && (phase % 64 == 0 || phase == n - 3))
                diag("gpb phase " + std::to_string(phase) + "/" + std::to_string(n - 3));
        },
        threads);
    feed("]");
    RunManifest man;
    man.command = command;
    man.params = params;
    man.version = kVersion;
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    man.digest = buf;
    os << ",\"manifest\":" << manifest_json(man).dump() << "}\n";
}

int run(int argc, char** argv) {
    CLI::App app{"polarization analysis of convolutional polar kernels"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: CVPK_THREADS or all cores)");

    std::string family_str = "cvpk";
    int size = 4;
    std::string out_path;
    std::string format = "json";
    bool force = false;

    // kernel print
    auto* kernel_cmd = app.add_subcommand("kernel", "kernel matrices");
    auto* print_cmd = kernel_cmd->add_subcommand("print", "print a kernel matrix");
    print_cmd->add_option("--family", family_str, "cvpk|cvpk-swapped|cvpk-sorted|arikan")
        ->capture_default_str();
    print_cmd->add_option("--size", size, "kernel size n")->required();
    print_cmd->add_option("--format", format, "txt|json")->capture_default_str();
    print_cmd->add_option("--out", out_path, "output file (default stdout)");

    // gpb
    auto* gpb_cmd = app.add_subcommand("gpb", "generalized polarization behaviour of Q^(n)");
    int gpb_size = 4;
    bool verify_oracle = false;
    std::string gpb_out;
    gpb_cmd->add_option("--size", gpb_size, "kernel size n = 2^m")->required();
    gpb_cmd->add_option("--out", gpb_out, "output file (default stdout)");
    gpb_cmd->add_flag("--verify-oracle", verify_oracle,
                      "cross-check against the exhaustive oracle (within its guard)");

    // pb
    auto* pb_cmd = app.add_subcommand("pb", "polarization behaviour");
    std::string pb_family = "cvpk", pb_out, pb_format = "json";
    int pb_size = 4;
    bool pb_force = false;
    pb_cmd->add_option("--family", pb_family, "cvpk|cvpk-swapped|cvpk-sorted|arikan")
        ->capture_default_str();
    pb_cmd->add_option("--size", pb_size, "kernel size n")->required();
    pb_cmd->add_option("--out", pb_out, "output file (default stdout)");
    pb_cmd->add_option("--format", pb_format, "json|csv")->capture_default_str();
    pb_cmd->add_flag("--force", pb_force, "enumerate past the oracle guard");

    // profile
    auto* prof_cmd = app.add_subcommand("profile", "partial distances and polarization rate");
    std::string prof_family = "cvpk", prof_out;
    int prof_size = 4;
    bool prof_force = false;
    prof_cmd->add_option("--family", prof_family, "kernel family")->capture_default_str();
    prof_cmd->add_option("--size", prof_size, "kernel size n")->required();
    prof_cmd->add_option("--out", prof_out, "also write a CSV profile to this file");
    prof_cmd->add_flag("--force", prof_force, "enumerate past the oracle guard");

    // mu
    auto* mu_cmd = app.add_subcommand("mu", "BEC scaling exponent");
    std::string mu_family = "cvpk", mu_out, mu_interp = "cubic";
    int mu_size = 4;
    bool mu_force = false;
    ScalingConfig mu_cfg;
    mu_cmd->add_option("--family", mu_family, "kernel family")->capture_default_str();
    mu_cmd->add_option("--size", mu_size, "kernel size n")->required();
    mu_cmd->add_option("--grid", mu_cfg.grid_size, "grid intervals on [0,1]")->capture_default_str();
    mu_cmd->add_option("--tol", mu_cfg.tol, "eigenvalue tolerance")->capture_default_str();
    mu_cmd->add_option("--max-iters", mu_cfg.max_iters, "iteration cap")->capture_default_str();
    mu_cmd->add_option("--interp", mu_interp, "cubic|linear")->capture_default_str();
    mu_cmd->add_option("--out", mu_out, "output file (default stdout)");
    mu_cmd->add_flag("--force", mu_force, "enumerate past the oracle guard");

    // report table3
    auto* report_cmd = app.add_subcommand("report", "paper-style summary tables");
    auto* table3_cmd = report_cmd->add_subcommand("table3", "polarization rate and scaling exponents");
    int t3_max = 32;
    bool t3_force = false;
    table3_cmd->add_option("--max-size", t3_max, "largest kernel size")->capture_default_str();
    table3_cmd->add_flag("--force", t3_force, "include the 2^32 sorted-kernel oracle run");

    // oracle gpb|pb
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive brute-force computations");
    auto* ogpb_cmd = oracle_cmd->add_subcommand("gpb", "GPB by enumeration");
    auto* opb_cmd = oracle_cmd->add_subcommand("pb", "PB by enumeration");
    std::string og_family = "cvpk", og_out;
    int og_size = 4;
    bool og_force = false;
    for (auto* cmd : {ogpb_cmd, opb_cmd}) {
        cmd->add_option("--family", og_family, "kernel family")->capture_default_str();
        cmd->add_option("--size", og_size, "kernel size n")->required();
        cmd->add_option("--out", og_out, "output file (default stdout)");
        cmd->add_flag("--force", og_force, "enumerate past the guard");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);  // prints help or the parse error
        return rc == 0 ? kOk : kUsageError;
    }
    const Timer timer;

    if (print_cmd->parsed()) {
        const Kernel k = make_kernel(family_from_name(family_str), size);
        if (format == "txt") emit_text(kernel_text(k), out_path);
        else if (format == "json") {
            const json params = {{"family", family_str}, {"size", size}, {"format", format}};
            emit_json(wrap_manifest("kernel print", params, kernel_json(k)), out_path);
        } else
            throw std::invalid_argument("kernel print: format must be txt or json");
    } else if (gpb_cmd->parsed()) {
        const int m = log2_size(gpb_size);
        if (gpb_size < 4) throw std::invalid_argument("gpb: size must be >= 4");
        if (verify_oracle) {
            if (gpb_size > kOracleGuard)
                throw GuardError("gpb --verify-oracle: size exceeds the oracle guard");
            const Gpb computed = gpb(m, threads);
            const Gpb truth = gpb_oracle(cvpk::cvpk(gpb_size), oracle_options(threads, false));
            for (std::size_t phase = 0; phase < computed.rows.size(); ++phase)
                for (int s = 0; s < 16; ++s)
                    if (computed.rows[phase][std::size_t(s)] != truth.rows[phase][std::size_t(s)])
                        throw VerifyMismatch("gpb: recursion disagrees with the oracle at phase " +
                                             std::to_string(phase) + ", subspace " +
                                             std::to_string(s));
            diag("verify-oracle: recursion matches the oracle at n = " + std::to_string(gpb_size));
        }
        const json params = {{"size", gpb_size}, {"verify_oracle", verify_oracle}};
        stream_gpb_json(m, threads, "gpb", params, gpb_out);
    } else if (pb_cmd->parsed()) {
        const Family fam = family_from_name(pb_family);
        const Pb pb = pb_for(fam, pb_size, threads, pb_force);
        const json params = {{"family", pb_family}, {"size", pb_size}, {"format", pb_format}};
        if (pb_format == "json") emit_json(wrap_manifest("pb", params, pb_json(pb)), pb_out);
        else if (pb_format == "csv") emit_csv("pb", params, pb_csv(pb), pb_out);
        else throw std::invalid_argument("pb: format must be json or csv");
    } else if (prof_cmd->parsed()) {
        const Family fam = family_from_name(prof_family);
        const Pb pb = pb_for(fam, prof_size, threads, prof_force);
        const PartialDistanceProfile prof = partial_distances(pb);
        std::cout << profile_text(prof) << "\n";
        if (!prof_out.empty()) {
            const json params = {{"family", prof_family}, {"size", prof_size}};
            emit_csv("profile", params, profile_csv(prof), prof_out);
        }
    } else if (mu_cmd->parsed()) {
        const Family fam = family_from_name(mu_family);
        if (mu_interp == "linear") mu_cfg.interpolation = Interp::linear;
        else if (mu_interp == "cubic") mu_cfg.interpolation = Interp::cubic;
        else throw std::invalid_argument("mu: interp must be cubic or linear");
        mu_cfg.threads = threads;
        const Pb pb = pb_for(fam, mu_size, threads, mu_force);
        diag("power iteration on a grid of " + std::to_string(mu_cfg.grid_size));
        const ScalingResult res = scaling_exponent(pb, mu_cfg);
        const json params = {{"family", mu_family},   {"size", mu_size},
                             {"grid", mu_cfg.grid_size}, {"tol", mu_cfg.tol},
                             {"max_iters", mu_cfg.max_iters}, {"interp", mu_interp}};
        emit_json(wrap_manifest("mu", params, scaling_json(pb, mu_cfg, res)), mu_out);
    } else if (table3_cmd->parsed()) {
        const int max_m = log2_size(t3_max);
        if (t3_max < 4) throw std::invalid_argument("report table3: max size must be >= 4");
        std::string table = "n        E        mu        mu_swapped  mu_sorted\n";
        ScalingConfig cfg;
        cfg.threads = threads;
        for (int m = 2; m <= max_m; ++m) {
            const int n = 1 << m;
            diag("table3: size " + std::to_string(n));
            const PbPair pair = pb_cvpk_pair(m, threads);
            const double e = partial_distances(pair.plain).E;
            const double mu_q = scaling_exponent(pair.plain, cfg).mu;
            const double mu_qt = scaling_exponent(pair.swapped, cfg).mu;
            std::string mu_qbar = "-";
            if (n == 16 || (n == 32 && t3_force)) {
                const Pb sorted_pb = pb_oracle(sorted_cvpk(n), oracle_options(threads, t3_force));
                mu_qbar = format_fixed(scaling_exponent(sorted_pb, cfg).mu, 3);
            }
            char line[128];
            std::snprintf(line, sizeof line, "%-8d %-8s %-9s %-11s %s\n", n,
                          format_fixed(e, 5).c_str(), format_fixed(mu_q, 3).c_str(),
                          format_fixed(mu_qt, 3).c_str(), mu_qbar.c_str());
            table += line;
        }
        emit_text(table, "");
    } else if (ogpb_cmd->parsed() || opb_cmd->parsed()) {
        const Kernel k = make_kernel(family_from_name(og_family), og_size);
        const OracleOptions opt = oracle_options(threads, og_force);
        const json params = {{"family", og_family}, {"size", og_size}, {"force", og_force}};
        if (ogpb_cmd->parsed()) {
            emit_json(wrap_manifest("oracle gpb", params, gpb_json(gpb_oracle(k, opt))), og_out);
        } else {
            emit_json(wrap_manifest("oracle pb", params, pb_json(pb_oracle(k, opt))), og_out);
        }
    }

    diag("done in " + format_fixed(timer.ms(), 1) + " ms");
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const GuardError& e) {
        std::cerr << "guard violation: " << e.what() << "\n";
        return kGuardViolation;
    } catch (const VerifyMismatch& e) {
        std::cerr << "verification mismatch: " << e.what() << "\n";
        return kVerifyMismatch;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
