// Command-line front end: constructs, scans, verifies, and demonstrates
// really perverse central configurations of the symmetric N-body family.
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rpcc/certificate_io.hpp"
#include "rpcc/dynamics.hpp"
#include "rpcc/errors.hpp"
#include "rpcc/masses.hpp"
#include "rpcc/reduced.hpp"
#include "rpcc/roots.hpp"
#include "rpcc/verify.hpp"
#include "rpcc/version.hpp"

namespace {

using namespace rpcc;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitNoCertificate = 2;
constexpr int kExitBadInput = 3;

std::string certificate_filename(int n, Branch branch) {
    return "cert_n" + std::to_string(n) + "_" + branch_name(branch) + ".json";
}

struct FindOptions {
    int n = 0;
    std::string branch = "all";
    RootSettings roots;
    double verify_tol = 1e-10;
    std::string out_dir = ".";
};

int run_find(const FindOptions& opt) {
    if (opt.n < 2) {
        std::cerr << "find: --n must be >= 2\n";
        return kExitBadInput;
    }
    std::vector<Branch> branches;
    if (opt.branch == "all") {
        branches = {Branch::lower, Branch::upper};
    } else if (auto b = branch_from_name(opt.branch)) {
        branches = {*b};
    } else {
        std::cerr << "find: --branch must be lower, upper, or all\n";
        return kExitBadInput;
    }

    int verified = 0;
    int failed_verification = 0;
    for (Branch branch : branches) {
        try {
            Certificate cert = construct_certificate(opt.n, branch, opt.roots);
            VerificationReport report = verify_certificate(cert, opt.verify_tol);
            if (!report.passed) {
                ++failed_verification;
                std::cerr << "find: n=" << opt.n << " " << branch_name(branch)
                          << ": constructed certificate failed verification\n";
                continue;
            }
            std::string path = opt.out_dir + "/" + certificate_filename(opt.n, branch);
            write_certificate_file(path, cert);
            std::cout << "verified certificate written: " << path << "\n";
            ++verified;
        } catch (const NoRootError& e) {
            std::cerr << "find: " << e.what() << "\n";
        } catch (const EmptyPositivityError& e) {
            std::cerr << "find: " << e.what() << "\n";
        } catch (const SingularSystemError& e) {
            std::cerr << "find: " << e.what() << "\n";
        }
    }
    if (verified > 0) return kExitOk;
    if (failed_verification > 0) return kExitCheckFailed;
    return kExitNoCertificate;
}

struct BranchOutcome {
    std::string stage;  // verified | verification_failed | empty_positivity |
                        // singular_system | no_root
    bool verified = false;
    std::optional<double> alpha;
    std::optional<double> total_mass;
    std::optional<PositivityInterval> interval;
};

BranchOutcome scan_branch(int n, Branch branch, const std::vector<RootResult>& roots,
                          const RootSettings& settings, double verify_tol) {
    BranchOutcome outcome;
    const RootResult* chosen = nullptr;
    for (const auto& r : roots) {
        bool on_branch = (branch == Branch::lower) ? (r.alpha < 1.0) : (r.alpha > 1.0);
        if (on_branch) {
            chosen = &r;
            break;
        }
    }
    if (chosen == nullptr) {
        outcome.stage = "no_root";
        return outcome;
    }
    outcome.alpha = chosen->alpha;
    double total_mass = 0.0;
    try {
        total_mass = admissible_total_mass(n, chosen->alpha);
    } catch (const SingularSystemError&) {
        outcome.stage = "singular_system";
        return outcome;
    }
    outcome.total_mass = total_mass;
    try {
        Certificate cert = construct_certificate(n, branch, settings);
        outcome.interval = cert.interval;
        outcome.verified = verify_certificate(cert, verify_tol).passed;
        outcome.stage = outcome.verified ? "verified" : "verification_failed";
    } catch (const EmptyPositivityError&) {
        outcome.stage = "empty_positivity";
        outcome.interval = positivity_interval(n, chosen->alpha, total_mass);
    }
    return outcome;
}

void append_branch_json(std::string& out, const char* name, const BranchOutcome& b) {
    out += "    \"";
    out += name;
    out += "\": {\"stage\": \"" + b.stage + "\", \"verified\": ";
    out += b.verified ? "true" : "false";
    if (b.alpha) out += ", \"alpha\": " + format_real(*b.alpha);
    if (b.total_mass) out += ", \"total_mass\": " + format_real(*b.total_mass);
    if (b.interval) {
        out += ", \"interval\": {\"t_lo\": " + format_real(b.interval->t_lo) +
               ", \"t_hi\": " + format_real(b.interval->t_hi) + "}";
    }
    out += "}";
}

void append_branch_csv(std::string& out, const BranchOutcome& b) {
    out += b.alpha ? format_real(*b.alpha) : "";
    out += ",";
    out += b.total_mass ? format_real(*b.total_mass) : "";
    out += ",";
    out += b.interval ? format_real(b.interval->t_lo) : "";
    out += ",";
    out += b.interval ? format_real(b.interval->t_hi) : "";
    out += ",";
    out += b.verified ? "true" : "false";
    out += ",";
    out += b.stage;
}

struct ScanOptions {
    int n_min = 0;
    int n_max = 0;
    RootSettings roots;
    double verify_tol = 1e-10;
    std::string out_json = "scan.json";
    std::string out_csv = "scan.csv";
};

int run_scan(const ScanOptions& opt) {
    if (opt.n_min < 2 || opt.n_min > opt.n_max) {
        std::cerr << "scan: need 2 <= --n-min <= --n-max\n";
        return kExitBadInput;
    }

    std::string json_text = "[\n";
    std::string csv_text =
        "n,big_n,lower_alpha,lower_total_mass,lower_t_lo,lower_t_hi,lower_verified,"
        "lower_stage,upper_alpha,upper_total_mass,upper_t_lo,upper_t_hi,upper_verified,"
        "upper_stage,verified\n";
    bool known_range_ok = true;
    int in_range_rows = 0;

    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        auto roots = find_alpha_roots(n, opt.roots);
        BranchOutcome lower = scan_branch(n, Branch::lower, roots, opt.roots, opt.verify_tol);
        BranchOutcome upper = scan_branch(n, Branch::upper, roots, opt.roots, opt.verify_tol);
        bool row_verified = lower.verified || upper.verified;
        if (n >= 24 && n <= 52) {
            ++in_range_rows;
            if (!row_verified) known_range_ok = false;
        }

        json_text += "  {\"n\": " + std::to_string(n) +
                     ", \"big_n\": " + std::to_string(n + 3) + ", \"verified\": " +
                     (row_verified ? "true" : "false") + ",\n";
        append_branch_json(json_text, "lower", lower);
        json_text += ",\n";
        append_branch_json(json_text, "upper", upper);
        json_text += "\n  }";
        json_text += (n < opt.n_max) ? ",\n" : "\n";

        csv_text += std::to_string(n) + "," + std::to_string(n + 3) + ",";
        append_branch_csv(csv_text, lower);
        csv_text += ",";
        append_branch_csv(csv_text, upper);
        csv_text += ",";
        csv_text += row_verified ? "true" : "false";
        csv_text += "\n";
    }
    json_text += "]\n";

    try {
        write_text_file_atomic(opt.out_json, json_text);
        write_text_file_atomic(opt.out_csv, csv_text);
    } catch (const Error& e) {
        std::cerr << "scan: " << e.what() << "\n";
        return kExitBadInput;
    }
    std::cout << "scan rows written: " << opt.out_json << ", " << opt.out_csv << "\n";
    if (in_range_rows > 0 && !known_range_ok) return kExitCheckFailed;
    return kExitOk;
}

struct VerifyOptions {
    std::string cert_path;
    double tol = 1e-10;
};

int run_verify(const VerifyOptions& opt) {
    Certificate cert;
    try {
        cert = read_certificate_file(opt.cert_path);
    } catch (const CertificateFormatError& e) {
        std::cerr << "verify: " << e.what() << "\n";
        for (const auto& issue : e.issues()) std::cerr << "  - " << issue << "\n";
        return kExitBadInput;
    }
    VerificationReport report;
    try {
        report = verify_certificate(cert, opt.tol);
    } catch (const DomainError& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitBadInput;
    }
    std::cout << verification_report_to_json(report);
    return report.passed ? kExitOk : kExitCheckFailed;
}

struct CurvesOptions {
    std::vector<int> ns = {23, 24};
    double alpha_min = 1e-3;
    double alpha_max = 8.0;
    int samples = 512;
    std::string out = "curves.csv";
};

int run_curves(const CurvesOptions& opt) {
    if (opt.samples < 2 || !(opt.alpha_min > 0.0) || !(opt.alpha_min < opt.alpha_max)) {
        std::cerr << "curves: need --samples >= 2 and 0 < --alpha-min < --alpha-max\n";
        return kExitBadInput;
    }
    for (int n : opt.ns) {
        if (n < 2) {
            std::cerr << "curves: every --n must be >= 2\n";
            return kExitBadInput;
        }
    }

    std::string text =
        "# g_value = (2 - 2/(1+alpha^2)^(3/2)) * (1 - alpha^3/(1+alpha^2)^(3/2)),"
        " nonnegative with maximum 9/4 - sqrt(2) at alpha = 1;"
        " level_n<k> = -(7/4)(H_k/k - 1)\n";
    text += "alpha,g_value";
    for (int n : opt.ns) text += ",level_n" + std::to_string(n);
    text += "\n";

    for (int i = 0; i < opt.samples; ++i) {
        double alpha = opt.alpha_min + (opt.alpha_max - opt.alpha_min) *
                                           static_cast<double>(i) /
                                           static_cast<double>(opt.samples - 1);
        text += format_real(alpha) + "," + format_real(g_of(alpha));
        for (int n : opt.ns) text += "," + format_real(level_of(n));
        text += "\n";
    }

    try {
        write_text_file_atomic(opt.out, text);
    } catch (const Error& e) {
        std::cerr << "curves: " << e.what() << "\n";
        return kExitBadInput;
    }
    std::cout << "curve data written: " << opt.out << "\n";
    return kExitOk;
}

struct SimulateOptions {
    std::string cert_path;
    IntegratorSettings settings;
    double threshold = 1e-7;
    std::string out_csv = "trajectory.csv";
    std::string out_summary = "summary.json";
};

std::string trajectory_csv(const PerverseMotionDetail& detail, int body_count) {
    std::string text = "time";
    for (char run : {'a', 'b'}) {
        for (int k = 0; k < body_count; ++k) {
            std::string stem = std::string(1, run) + "_body" + std::to_string(k);
            text += "," + stem + "_x," + stem + "_y," + stem + "_z";
        }
    }
    text += ",shape_residual_a,shape_residual_b,deviation,r_scalar\n";
    for (std::size_t i = 0; i < detail.grid.size(); ++i) {
        text += format_real(detail.grid[i]);
        for (const auto* positions : {&detail.positions_a[i], &detail.positions_b[i]}) {
            for (const auto& p : *positions) {
                text += "," + format_real(p.x) + "," + format_real(p.y) + "," +
                        format_real(p.z);
            }
        }
        text += "," + format_real(detail.shape_residual_a[i]) + "," +
                format_real(detail.shape_residual_b[i]) + "," +
                format_real(detail.deviation[i]) + "," + format_real(detail.scalar_r[i]);
        text += "\n";
    }
    return text;
}

std::string simulate_summary_json(const Certificate& cert, const PerverseMotionDetail& detail,
                                  const SimulateOptions& opt, bool passed) {
    const PerverseMotionReport& r = detail.report;
    bool truncated = r.reason_a != StopReason::reached_end ||
                     r.reason_b != StopReason::reached_end;
    std::string out = "{\n";
    out += "  \"n\": " + std::to_string(cert.n) + ",\n";
    out += "  \"branch\": \"" + std::string(branch_name(cert.branch)) + "\",\n";
    out += "  \"alpha\": " + format_real(cert.alpha) + ",\n";
    out += "  \"t_common\": " + format_real(r.t_common) + ",\n";
    out += "  \"stop_reason_a\": \"" + std::string(stop_reason_name(r.reason_a)) + "\",\n";
    out += "  \"stop_reason_b\": \"" + std::string(stop_reason_name(r.reason_b)) + "\",\n";
    out += std::string("  \"truncated\": ") + (truncated ? "true" : "false") + ",\n";
    out += "  \"max_deviation\": " + format_real(r.max_deviation) + ",\n";
    out += "  \"max_shape_residual_a\": " + format_real(r.max_shape_residual_a) + ",\n";
    out += "  \"max_shape_residual_b\": " + format_real(r.max_shape_residual_b) + ",\n";
    out += "  \"max_scalar_mismatch\": " + format_real(r.max_scalar_mismatch) + ",\n";
    out += "  \"threshold\": " + format_real(opt.threshold) + ",\n";
    out += std::string("  \"passed\": ") + (passed ? "true" : "false") + ",\n";
    out += "  \"settings\": {\"rel_tol\": " + format_real(opt.settings.rel_tol) +
           ", \"abs_tol\": " + format_real(opt.settings.abs_tol) +
           ", \"t_end\": " + format_real(opt.settings.t_end) +
           ", \"max_step\": " + format_real(opt.settings.max_step) +
           ", \"collision_radius\": " + format_real(opt.settings.collision_radius) +
           ", \"output_samples\": " + std::to_string(opt.settings.output_samples) + "},\n";
    out += "  \"tool_version\": \"" + std::string(kToolVersion) + "\"\n";
    out += "}\n";
    return out;
}

int run_simulate(const SimulateOptions& opt) {
    Certificate cert;
    try {
        cert = read_certificate_file(opt.cert_path);
    } catch (const CertificateFormatError& e) {
        std::cerr << "simulate: " << e.what() << "\n";
        for (const auto& issue : e.issues()) std::cerr << "  - " << issue << "\n";
        return kExitBadInput;
    }

    PerverseMotionDetail detail;
    try {
        detail = perverse_motion_detail(cert, opt.settings);
    } catch (const DomainError& e) {
        std::cerr << "simulate: " << e.what() << "\n";
        return kExitBadInput;
    }
    bool passed = detail.report.max_deviation <= opt.threshold;

    try {
        write_text_file_atomic(opt.out_csv, trajectory_csv(detail, cert.big_n));
        write_text_file_atomic(opt.out_summary,
                               simulate_summary_json(cert, detail, opt, passed));
    } catch (const Error& e) {
        std::cerr << "simulate: " << e.what() << "\n";
        return kExitBadInput;
    }
    std::cout << "max deviation between the two runs: "
              << format_real(detail.report.max_deviation) << " (threshold "
              << format_real(opt.threshold) << ")\n";
    std::cout << "trajectory written: " << opt.out_csv << "; summary: " << opt.out_summary
              << "\n";
    return passed ? kExitOk : kExitCheckFailed;
}

void add_root_flags(CLI::App* cmd, RootSettings& roots) {
    cmd->add_option("--alpha-min", roots.alpha_min, "Lower end of the root scan window");
    cmd->add_option("--alpha-max", roots.alpha_max, "Upper end of the root scan window");
    cmd->add_option("--scan-samples", roots.samples, "Grid points for the sign-change scan");
    cmd->add_option("--root-rel-tol", roots.rel_tol, "Relative width target for bisection");
    cmd->add_option("--max-iter", roots.max_iter, "Bisection iteration cap");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Really perverse central configurations: construct certificates (one ring of n "
        "bodies, a center, and two poles at height alpha, with two distinct positive mass "
        "triples of equal total mass), verify them against a direct force oracle, and "
        "demonstrate the shared homothetic collapse.\n\nFile formats:\n"
        "  certificate JSON: schema_version, n, big_n, branch, alpha, h_n, total_mass,\n"
        "    interval{t_lo,t_hi}, mass_a{m0,m1,m2}, mass_b{m0,m1,m2}, reduced_residuals,\n"
        "    tolerances, tool_version; reals carry 17 significant digits\n"
        "  scan CSV columns: n,big_n,lower_alpha,lower_total_mass,lower_t_lo,lower_t_hi,\n"
        "    lower_verified,lower_stage,upper_...,verified\n"
        "  curves CSV columns: alpha,g_value,level_n<k>... (one comment line on the g\n"
        "    sign convention precedes the header)\n"
        "  trajectory CSV columns: time,a_body<k>_x,a_body<k>_y,a_body<k>_z for each body,\n"
        "    then b_body<k>_* likewise, then shape_residual_a,shape_residual_b,deviation,\n"
        "    r_scalar\n"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    FindOptions find_opt;
    CLI::App* find_cmd =
        app.add_subcommand("find", "Construct and verify certificates for one n");
    find_cmd->add_option("--n", find_opt.n, "Ring body count")->required();
    find_cmd->add_option("--branch", find_opt.branch, "Root branch: lower, upper, or all");
    find_cmd->add_option("--verify-tol", find_opt.verify_tol, "Oracle pass tolerance");
    find_cmd->add_option("--out-dir", find_opt.out_dir, "Directory for certificate files");
    add_root_flags(find_cmd, find_opt.roots);

    ScanOptions scan_opt;
    CLI::App* scan_cmd = app.add_subcommand("scan", "Sweep n and report both branches");
    scan_cmd->add_option("--n-min", scan_opt.n_min, "First n")->required();
    scan_cmd->add_option("--n-max", scan_opt.n_max, "Last n")->required();
    scan_cmd->add_option("--verify-tol", scan_opt.verify_tol, "Oracle pass tolerance");
    scan_cmd->add_option("--out-json", scan_opt.out_json, "Scan rows as a JSON array");
    scan_cmd->add_option("--out-csv", scan_opt.out_csv, "Scan rows as CSV");
    add_root_flags(scan_cmd, scan_opt.roots);

    VerifyOptions verify_opt;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Re-verify a certificate file with the force oracle");
    verify_cmd->add_option("--cert", verify_opt.cert_path, "Certificate path")->required();
    verify_cmd->add_option("--tol", verify_opt.tol, "Oracle pass tolerance");

    CurvesOptions curves_opt;
    CLI::App* curves_cmd =
        app.add_subcommand("curves", "Emit alpha vs g and per-n level curve data");
    curves_cmd->add_option("--n", curves_opt.ns, "Ring counts for level columns");
    curves_cmd->add_option("--alpha-min", curves_opt.alpha_min, "First alpha");
    curves_cmd->add_option("--alpha-max", curves_opt.alpha_max, "Last alpha");
    curves_cmd->add_option("--samples", curves_opt.samples, "Row count");
    curves_cmd->add_option("--out", curves_opt.out, "Output CSV path");

    SimulateOptions sim_opt;
    // Position deviation between the two runs is integrator-limited only away
    // from the collapse singularity, so the default horizon stops at 90% of the
    // collapse time. Longer horizons truncate at the collision stop instead.
    sim_opt.settings.t_end = 0.9 * collapse_time();
    CLI::App* sim_cmd = app.add_subcommand(
        "simulate", "Integrate both mass vectors from rest and compare the motions");
    sim_cmd->add_option("--cert", sim_opt.cert_path, "Certificate path")->required();
    sim_cmd->add_option("--t-end", sim_opt.settings.t_end,
                        "Integration horizon (default 0.9x the collapse time)");
    sim_cmd->add_option("--rel-tol", sim_opt.settings.rel_tol, "Integrator relative tolerance");
    sim_cmd->add_option("--abs-tol", sim_opt.settings.abs_tol, "Integrator absolute tolerance");
    sim_cmd->add_option("--max-step", sim_opt.settings.max_step, "Step cap (0 = none)");
    sim_cmd->add_option("--collision-radius", sim_opt.settings.collision_radius,
                        "Stop once the scale estimate drops below this");
    sim_cmd->add_option("--samples", sim_opt.settings.output_samples, "Output grid size");
    sim_cmd->add_option("--threshold", sim_opt.threshold,
                        "Maximum allowed deviation between the two runs");
    sim_cmd->add_option("--out-csv", sim_opt.out_csv, "Trajectory CSV path");
    sim_cmd->add_option("--out-summary", sim_opt.out_summary, "Summary JSON path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (find_cmd->parsed()) return run_find(find_opt);
        if (scan_cmd->parsed()) return run_scan(scan_opt);
        if (verify_cmd->parsed()) return run_verify(verify_opt);
        if (curves_cmd->parsed()) return run_curves(curves_opt);
        if (sim_cmd->parsed()) return run_simulate(sim_opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
