#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "trop/corpus.hpp"
#include "trop/digraph.hpp"
#include "trop/inverse.hpp"
#include "trop/io.hpp"
#include "trop/linsys.hpp"
#include "trop/rank.hpp"

namespace {

using nlohmann::json;

trop::DetMethod method_from(const std::string& name) {
    if (name == "brute") return trop::DetMethod::Brute;
    if (name == "expand") return trop::DetMethod::Expand;
    if (name == "fast") return trop::DetMethod::Fast;
    return trop::DetMethod::Auto;
}

trop::Matrix load(const std::string& path) { return trop::parse_matrix(trop::read_file(path)); }

json scalar_json(const trop::Scalar& x) { return trop::to_string(x); }

json matrix_json(const trop::Matrix& a) { return json::parse(trop::format_matrix_json(a)); }

json coeffs_json(const std::vector<trop::Scalar>& cs) {
    json out = json::array();
    for (const auto& c : cs) out.push_back(trop::to_string(c));
    return out;
}

std::string coeffs_plain(const std::vector<trop::Scalar>& cs) {
    std::string out;
    for (const auto& c : cs) {
        if (!out.empty()) out += ' ';
        out += trop::to_string(c);
    }
    return out;
}

/// Emits one result payload either as plain text or as a json report.
struct Reporter {
    std::string command;
    bool as_json = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit(const json& payload, const std::string& plain) const {
        if (as_json) {
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            json report{{"command", command}, {"result", payload}, {"wall_ms", ms}};
            std::cout << report.dump() << "\n";
        } else {
            std::cout << plain << "\n";
        }
    }
};

const char* kind_name(trop::SolutionKind k) {
    switch (k) {
        case trop::SolutionKind::PureReal: return "pure-real";
        case trop::SolutionKind::Mixed: return "mixed";
        case trop::SolutionKind::Ghost: return "ghost";
    }
    return "?";
}

int run_check(std::uint64_t seed, std::size_t max_n, std::size_t samples, const Reporter& rep) {
    trop::Corpus corpus(seed);
    std::size_t pass = 0, fail = 0;
    auto tally = [&](bool ok) { ok ? ++pass : ++fail; };

    for (std::size_t n = 2; n <= max_n; ++n) {
        for (std::size_t s = 0; s < samples; ++s) {
            trop::Matrix a = corpus.matrix(n, n);

            trop::Scalar brute = trop::det(a, trop::DetMethod::Brute);
            trop::Scalar fast = trop::det(a, trop::DetMethod::Fast);
            trop::Scalar expand = trop::det(a, trop::DetMethod::Expand);
            tally(brute == fast && brute == expand);

            bool singular = trop::is_ghost(brute);
            tally(singular == (trop::rank(a) < n));

            tally(brute.is_neg_inf() == trop::rank_defect_certificate(a).has_value());
            if (auto cert = trop::rank_defect_certificate(a)) tally(trop::check_certificate(a, *cert));

            if (singular) {
                trop::DependenceWitness w = trop::square_witness(a);
                tally(trop::validate_witness(a.row_vectors(), w));
            } else if (n <= 4) {
                tally(trop::verify_pseudo_inverse(a, trop::pseudo_inverse(a)));
            }
        }
    }

    json payload{{"seed", seed}, {"max_n", max_n}, {"samples_per_size", samples}, {"pass", pass}, {"fail", fail}};
    rep.emit(payload, "check: " + std::to_string(pass) + " passed, " + std::to_string(fail) + " failed (seed " +
                          std::to_string(seed) + ")");
    return fail == 0 ? 0 : 4;
}

int run_bench(std::uint64_t seed, std::size_t max_n, const Reporter& rep) {
    trop::Corpus corpus(seed);
    json table = json::array();
    std::string plain = "n\tbrute_ms\tfast_ms\n";
    for (std::size_t n = 2; n <= max_n; n = n < 10 ? n + 2 : n + 10) {
        trop::Matrix a = corpus.real_matrix(n, n, -99, 99);
        double brute_ms = -1.0;
        if (n <= 8) {
            auto t0 = std::chrono::steady_clock::now();
            (void)trop::det(a, trop::DetMethod::Brute);
            brute_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        }
        auto t0 = std::chrono::steady_clock::now();
        (void)trop::det(a, trop::DetMethod::Fast);
        double fast_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        table.push_back({{"n", n}, {"brute_ms", brute_ms}, {"fast_ms", fast_ms}});
        plain += std::to_string(n) + "\t" + (brute_ms < 0 ? std::string("guarded") : std::to_string(brute_ms)) +
                 "\t" + std::to_string(fast_ms) + "\n";
    }
    rep.emit(table, plain);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact supertropical matrix algebra"};
    app.require_subcommand(1);

    std::string method = "auto", format = "plain", file, row_arg;
    std::uint64_t seed = 1;
    std::size_t max_n = 4;
    std::size_t samples = 100;
    app.add_option("--method", method)->check(CLI::IsMember({"brute", "expand", "fast", "auto"}));
    app.add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));
    app.add_option("--seed", seed);
    app.add_option("--max-n", max_n);
    app.add_option("--samples", samples);

    auto* det_cmd = app.add_subcommand("det", "tropical determinant of a square matrix");
    det_cmd->add_option("file", file)->required();
    auto* adj_cmd = app.add_subcommand("adjoint", "adjoint matrix");
    adj_cmd->add_option("file", file)->required();
    auto* pinv_cmd = app.add_subcommand("pinv", "canonical pseudo-inverse with verification");
    pinv_cmd->add_option("file", file)->required();
    auto* rank_cmd = app.add_subcommand("rank", "tropical rank and a maximal nonsingular minor");
    rank_cmd->add_option("file", file)->required();
    auto* minor_cmd = app.add_subcommand("minor-max", "location of a maximal nonsingular minor");
    minor_cmd->add_option("file", file)->required();
    auto* dep_cmd = app.add_subcommand("depend", "tropical dependence of the rows");
    dep_cmd->add_option("file", file)->required();
    auto* wit_cmd = app.add_subcommand("witness", "validated dependence coefficients for the rows");
    wit_cmd->add_option("file", file)->required();
    auto* solve_cmd = app.add_subcommand("solve", "pure real solution of the homogeneous system");
    solve_cmd->add_option("file", file)->required();
    auto* dig_cmd = app.add_subcommand("digraph", "edge list of the weighted digraph");
    dig_cmd->add_option("file", file)->required();
    auto* check_cmd = app.add_subcommand("check", "seeded cross-validation suite");
    auto* bench_cmd = app.add_subcommand("bench", "brute vs fast determinant timings");

    // let global flags appear after the subcommand too
    for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    Reporter rep{app.get_subcommands().front()->get_name(), format == "json"};
    try {
        if (det_cmd->parsed()) {
            trop::Scalar d = trop::det(load(file), method_from(method));
            rep.emit(scalar_json(d), trop::to_string(d));
        } else if (adj_cmd->parsed()) {
            trop::Matrix adj = trop::adjoint(load(file));
            rep.emit(matrix_json(adj), trop::format_matrix_plain(adj));
        } else if (pinv_cmd->parsed()) {
            trop::Matrix a = load(file);
            trop::Matrix p = trop::pseudo_inverse(a);
            bool right = trop::is_pseudo_unit(trop::mat_mul(a, p)).verdict;
            bool left = trop::is_pseudo_unit(trop::mat_mul(p, a)).verdict;
            rep.emit(json{{"pinv", matrix_json(p)}, {"right_pseudo_unit", right}, {"left_pseudo_unit", left}},
                     trop::format_matrix_plain(p) + "right pseudo unit: " + (right ? "yes" : "no") +
                         "\nleft pseudo unit: " + (left ? "yes" : "no"));
        } else if (rank_cmd->parsed() || minor_cmd->parsed()) {
            trop::Matrix a = load(file);
            auto loc = trop::max_nonsingular_minor(a);
            json jloc = nullptr;
            std::string plain;
            if (loc) {
                jloc = json{{"rows", loc->row_set}, {"cols", loc->col_set}, {"size", loc->size()}};
                plain = "rows {";
                for (auto r : loc->row_set) plain += " " + std::to_string(r);
                plain += " } cols {";
                for (auto c : loc->col_set) plain += " " + std::to_string(c);
                plain += " }";
            } else {
                plain = "none";
            }
            std::size_t k = loc ? loc->size() : 0;
            if (rank_cmd->parsed())
                rep.emit(json{{"rank", k}, {"minor", jloc}}, std::to_string(k) + "\n" + plain);
            else
                rep.emit(jloc, plain);
        } else if (dep_cmd->parsed()) {
            bool dep = trop::is_dependent(load(file).row_vectors());
            rep.emit(dep, dep ? "dependent" : "independent");
        } else if (wit_cmd->parsed()) {
            auto rows = load(file).row_vectors();
            trop::DependenceWitness w = trop::dependence_witness(rows);
            bool ok = trop::validate_witness(rows, w);
            rep.emit(json{{"coefficients", coeffs_json(w.coefficients)}, {"validated", ok}},
                     coeffs_plain(w.coefficients) + "\nvalidation " + (ok ? "OK" : "FAILED"));
        } else if (solve_cmd->parsed()) {
            trop::LinearSystem s{load(file)};
            auto sol = trop::find_pure_real_solution(s);
            if (!sol) {
                rep.emit(json{{"solution", nullptr}}, "none (coefficient matrix is nonsingular)");
            } else {
                json payload{{"point", coeffs_json(sol->point)},
                             {"kind", kind_name(sol->kind)},
                             {"form_values", coeffs_json(sol->form_values)},
                             {"solves", sol->solves}};
                rep.emit(payload, std::string(kind_name(sol->kind)) + " point: " + coeffs_plain(sol->point) +
                                      "\nform values: " + coeffs_plain(sol->form_values));
            }
        } else if (dig_cmd->parsed()) {
            trop::Digraph g = trop::digraph_of(load(file));
            std::string edges = trop::to_edge_list(g);
            json lines = json::array();
            for (const auto& e : g.edges) lines.push_back({{"from", e.from}, {"to", e.to}, {"w", trop::to_string(e.weight)}});
            rep.emit(lines, edges.empty() ? "" : edges.substr(0, edges.size() - 1));
        } else if (check_cmd->parsed()) {
            return run_check(seed, max_n, samples, rep);
        } else if (bench_cmd->parsed()) {
            return run_bench(seed, std::max<std::size_t>(max_n, 50), rep);
        }
    } catch (const trop::ParseError& e) {
        std::cerr << "parse error";
        if (e.line) std::cerr << " at line " << e.line << ", column " << e.column;
        std::cerr << ": " << e.what() << "\n";
        return 2;
    } catch (const trop::InternalError& e) {
        std::cerr << "internal validation failure: " << e.what() << "\n";
        return 4;
    } catch (const trop::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
