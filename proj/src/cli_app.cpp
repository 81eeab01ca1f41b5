#include "picard/cli_app.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "picard/json_io.hpp"

namespace picard {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt(ComplexF v) {
    const double re = v.real() == 0.0 ? 0.0 : v.real();
    const double im = v.imag() == 0.0 ? 0.0 : v.imag();
    return fmt(re) + (im < 0 ? "" : "+") + fmt(im) + "i";
}

ComplexF parse_pair(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("complex values are written re,im");
    std::size_t a = 0, b = 0;
    const double re = std::stod(s.substr(0, comma), &a);
    const double im = std::stod(s.substr(comma + 1), &b);
    if (a != comma || b != s.size() - comma - 1)
        throw CLI::ValidationError("complex values are written re,im");
    return {re, im};
}

void emit(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file " + out_path);
        f << j.dump(2) << "\n";
    }
}

double env_tol() {
    if (const char* s = std::getenv("PICARD_TOL")) {
        const double v = std::atof(s);
        if (v > 0.0) return v;
    }
    return kDefaultTol;
}

int finish_reports(const std::vector<CertReport>& reports, bool json, const std::string& out_path) {
    bool all_ok = true;
    for (const auto& r : reports) all_ok = all_ok && r.certified;
    if (json) {
        emit(nlohmann::json(reports), out_path);
    } else {
        for (const auto& r : reports)
            std::cout << (r.certified ? "certified  " : "FAILED     ") << r.item
                      << "  min=" << fmt(r.min_value)
                      << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
        std::cout << (all_ok ? "all certified" : "certification FAILED") << "\n";
    }
    return all_ok ? 0 : 2;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Fundamental-domain toolkit for the Picard modular group PU(2,1;Z[i])"};
    app.require_subcommand(1);
    app.fallthrough();

    double tol = env_tol();
    int max_iter = 200;
    int grid_n = 50;
    bool json = false;
    std::string out_path;
    std::string z1_str, z2_str, w1_str, w2_str, matrix_str;
    double epsilon = 0.005;
    double witness_l = 0.1;

    app.add_option("--tol", tol, "geometric tolerance")->check(CLI::PositiveNumber);
    app.add_flag("--json", json, "emit JSON");
    app.add_option("--out", out_path, "write JSON report to file");

    auto* cmd_reduce = app.add_subcommand("reduce", "move a point into the fundamental domain");
    cmd_reduce->add_option("--z1", z1_str, "z1 as re,im")->required();
    cmd_reduce->add_option("--z2", z2_str, "z2 as re,im")->required();
    cmd_reduce->add_option("--max-iter", max_iter, "iteration cap")->check(CLI::PositiveNumber);

    auto* cmd_member = app.add_subcommand("member", "fundamental-domain membership report");
    cmd_member->add_option("--z1", z1_str, "z1 as re,im")->required();
    cmd_member->add_option("--z2", z2_str, "z2 as re,im")->required();

    auto* cmd_decompose =
        app.add_subcommand("decompose", "Langlands / big-cell decomposition of a group element");
    cmd_decompose->add_option("--matrix", matrix_str, "3x3 matrix, JSON, entries [re,im]")
        ->required();

    auto* cmd_generators = app.add_subcommand("generators", "the eight boundary automorphisms");

    auto* cmd_cayley = app.add_subcommand("cayley", "map between hyperquadric and ball models");
    cmd_cayley->add_option("--z1", z1_str, "hyperquadric z1 as re,im");
    cmd_cayley->add_option("--z2", z2_str, "hyperquadric z2 as re,im");
    cmd_cayley->add_option("--w1", w1_str, "ball w1 as re,im");
    cmd_cayley->add_option("--w2", w2_str, "ball w2 as re,im");

    auto* cmd_certify = app.add_subcommand("certify", "run the numerical certification suites");
    std::string what;
    cmd_certify->add_option("what", what, "lemmas|necessity|enumeration|witnesses")
        ->required()
        ->check(CLI::IsMember({"lemmas", "necessity", "enumeration", "witnesses"}));
    cmd_certify->add_option("--grid", grid_n, "grid resolution")->check(CLI::Range(2, 100000));
    cmd_certify->add_option("--epsilon", epsilon, "witness offset, in (0, 0.01]");
    cmd_certify->add_option("--siegel-L", witness_l, "Siegel parameter for witness checks");

    std::vector<const char*> argv;
    argv.push_back("picard");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (*cmd_reduce) {
            const PointD2 z(parse_pair(z1_str), parse_pair(z2_str), tol);
            const ReductionResult res = reduce(z, tol, max_iter);
            if (json) {
                emit(nlohmann::json(res), out_path);
            } else {
                std::cout << "reduced: z1 = " << fmt(res.reduced.z1)
                          << ", z2 = " << fmt(res.reduced.z2) << "\n"
                          << "inversions: " << res.iterations << "\n"
                          << "g = " << res.g.exact().str() << "\n"
                          << "height trace:";
                for (double hgt : res.height_trace) std::cout << " " << fmt(hgt);
                std::cout << "\n";
            }
            return 0;
        }

        if (*cmd_member) {
            const PointD2 z(parse_pair(z1_str), parse_pair(z2_str), tol);
            const MembershipReport rep = in_fundamental_domain(z, tol);
            if (json) {
                emit(nlohmann::json(rep), out_path);
            } else {
                std::cout << "in_set: " << (rep.in_set ? "true" : "false") << "\n";
                const std::array<std::string, 4> prism_names = {"Re z1 >= 0", "Im z1 >= 0",
                                                                "Re z1 + Im z1 <= 1",
                                                                "|Re z2| <= 1/2"};
                for (std::size_t i = 0; i < 4; ++i)
                    std::cout << "  " << prism_names[i] << ": margin " << fmt(rep.prism_margins[i])
                              << (rep.prism_margins[i] < -tol ? "  VIOLATED" : "") << "\n";
                for (std::size_t j = 0; j < 8; ++j)
                    std::cout << "  Q" << j + 1 << " >= " << fmt(q_threshold(static_cast<int>(j) + 1))
                              << ": margin " << fmt(rep.q_margins[j])
                              << (rep.q_margins[j] < -tol ? "  VIOLATED" : "") << "\n";
            }
            return 0;
        }

        if (*cmd_decompose) {
            const ExactMatrix3 m = nlohmann::json::parse(matrix_str).get<ExactMatrix3>();
            nlohmann::json j;
            if (m.at(0, 1).is_zero() && m.at(0, 2).is_zero() && m.at(1, 2).is_zero()) {
                const AutParams p = langlands_decompose(to_float(m));
                j = p;
                j["kind"] = "stabilizer";
            } else {
                const NjpDecomposition d = njp_decompose(m);
                j = d.params;
                j["kind"] = "big-cell";
                j["n"] = d.n;
                j["p"] = d.p;
            }
            if (json) {
                emit(j, out_path);
            } else {
                std::cout << j["kind"].get<std::string>() << ": delta = " << fmt(j["delta"].get<double>())
                          << ", beta = " << fmt(complex_from_json(j["beta"]))
                          << ", r = " << fmt(j["r"].get<double>())
                          << ", gamma = " << fmt(complex_from_json(j["gamma"])) << "\n";
            }
            return 0;
        }

        if (*cmd_generators) {
            const auto& table = generators();
            nlohmann::json j = nlohmann::json::array();
            for (std::size_t i = 0; i < table.g.size(); ++i) {
                const auto& m = table.g[i].exact();
                j.push_back({{"name", "G" + std::to_string(i + 1)},
                             {"matrix", m},
                             {"q_coefficients",
                              nlohmann::json::array({m.at(0, 0), m.at(0, 1), m.at(0, 2)})},
                             {"q_threshold", table.q_threshold[i]}});
            }
            if (json) {
                emit(j, out_path);
            } else {
                for (const auto& entry : j)
                    std::cout << entry["name"].get<std::string>() << " = "
                              << entry["matrix"].dump()
                              << "  (threshold " << entry["q_threshold"].get<double>() << ")\n";
            }
            return 0;
        }

        if (*cmd_cayley) {
            const bool forward = !z1_str.empty() || !z2_str.empty();
            const bool backward = !w1_str.empty() || !w2_str.empty();
            if (forward == backward)
                throw CLI::ValidationError("give either --z1/--z2 or --w1/--w2");
            nlohmann::json j;
            if (forward) {
                const PointD2 z(parse_pair(z1_str), parse_pair(z2_str), tol);
                const PointB2 w = cayley_to_ball(z);
                j = w;
                if (!json)
                    std::cout << "w1 = " << fmt(w.w1) << ", w2 = " << fmt(w.w2) << "\n";
            } else {
                const PointB2 w(parse_pair(w1_str), parse_pair(w2_str), tol);
                const PointD2 z = cayley_to_siegel(w);
                j = z;
                if (!json)
                    std::cout << "z1 = " << fmt(z.z1) << ", z2 = " << fmt(z.z2) << "\n";
            }
            if (json) emit(j, out_path);
            return 0;
        }

        if (*cmd_certify) {
            std::vector<CertReport> reports;
            if (what == "lemmas") {
                for (const auto& id : lemma_catalog()) reports.push_back(certify_lemma(id, grid_n));
            } else if (what == "necessity") {
                reports = certify_necessity();
            } else if (what == "enumeration") {
                reports = certify_dichotomy(grid_n);
            } else {
                reports = certify_siegel_witnesses(epsilon, witness_l);
            }
            return finish_reports(reports, json, out_path);
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 1;
    } catch (const std::overflow_error& e) {
        std::cerr << "arithmetic overflow: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args);
}

} // namespace picard
