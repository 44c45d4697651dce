// Command-line surface: graph families -> complexes -> pairing runs ->
// homology, plus the packaged verification jobs and the open sweep.
//
// Exit codes: 0 pass/evidence, 1 verification failure, 2 usage error,
// 3 resource cap hit.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <morsetilings/config.hpp>
#include <morsetilings/verify.hpp>

using namespace morsetilings;

namespace {

struct FamilyOpts {
    std::string name;
    long long n = -1;
    long long k = -1;
    long long m = -1;
};

void add_family_options(CLI::App* cmd, FamilyOpts& fo) {
    cmd->add_option("family", fo.name,
                    "one of: grid2, gridmn, cycle, path, even-tiling, odd-simple, "
                    "odd-alternate, triangles, aux-xn")
        ->required();
    cmd->add_option("--n", fo.n, "column / polygon-size parameter");
    cmd->add_option("--k", fo.k, "polygon count");
    cmd->add_option("--m", fo.m, "row count (gridmn) or cycle/path length");
}

Graph build_graph(const FamilyOpts& fo) {
    if (fo.name == "aux-xn") {
        if (fo.n < 0) throw std::invalid_argument("aux-xn requires --n");
        return aux_graph_xn(static_cast<int>(fo.n));
    }
    FamilyDescriptor d;
    d.family = family_from_name(fo.name);
    if (fo.n >= 0) d.params["n"] = fo.n;
    if (fo.k >= 0) d.params["k"] = fo.k;
    if (fo.m >= 0) d.params["m"] = fo.m;
    return make_family(d);
}

// aux-xn is a graph whose independence complex is the object of interest;
// every other family feeds the perfect matching complex.
SimplicialComplex build_complex(const Graph& g, std::size_t cap) {
    if (g.family() == "aux-xn") return independence_complex(g, cap);
    return perfect_matching_complex(g, cap);
}

// Split a comma-separated label list, ignoring commas inside braces so
// subscripted labels like b_{1,1} survive intact.
std::vector<std::string> split_schedule(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    auto flush = [&]() {
        std::string t = morsetilings::detail::trim(cur);
        if (!t.empty()) out.push_back(std::move(t));
        cur.clear();
    };
    for (char ch : s) {
        if (ch == '{') ++depth;
        else if (ch == '}') --depth;
        if (ch == ',' && depth == 0) flush();
        else cur += ch;
    }
    flush();
    return out;
}

void emit(const std::string& text, const std::optional<std::string>& out_path) {
    if (out_path) {
        std::ofstream f(*out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + *out_path);
        f << text;
    } else {
        std::cout << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"perfect matching complexes of polygonal tilings: families, "
                 "element-pairing runs, homology, verification jobs"};
    app.require_subcommand(1);
    app.fallthrough();

    bool want_json = false, want_dot = false;
    std::optional<std::string> out_path, config_path;
    std::optional<long long> cap_faces_flag;
    app.add_flag("--json", want_json, "emit machine-readable JSON");
    app.add_flag("--dot", want_dot, "emit Graphviz DOT (family subcommand)");
    app.add_option("--out", out_path, "write primary output to PATH instead of stdout");
    app.add_option("--cap-faces", cap_faces_flag, "face-count cap before skipping");
    app.add_option("--config", config_path, "key=value config file (caps, out)");

    FamilyOpts fam_fo, bad_fo, cx_fo, morse_fo, hom_fo;
    bool full_faces = false;
    std::string schedule_arg;
    std::string job_arg;
    std::optional<int> n_max_flag, k_max_flag, m_max_flag, tri_k_max_flag;
    std::optional<int> conj_m_max, conj_n_max;

    auto* cmd_family = app.add_subcommand("family", "construct a graph family");
    add_family_options(cmd_family, fam_fo);

    auto* cmd_bad = app.add_subcommand("badmatchings",
                                       "enumerate minimal non-extendable matchings");
    add_family_options(cmd_bad, bad_fo);

    auto* cmd_complex = app.add_subcommand("complex", "build the associated complex");
    add_family_options(cmd_complex, cx_fo);
    cmd_complex->add_flag("--full-faces", full_faces, "list every face, not just facets");

    auto* cmd_morse = app.add_subcommand("morse", "run an element-pairing schedule");
    add_family_options(cmd_morse, morse_fo);
    cmd_morse->add_option("--schedule", schedule_arg, "comma-separated element labels")
        ->required();

    auto* cmd_homology = app.add_subcommand("homology", "reduced Betti numbers and torsion");
    add_family_options(cmd_homology, hom_fo);

    auto* cmd_verify = app.add_subcommand("verify", "run a verification job");
    cmd_verify
        ->add_option("job", job_arg,
                     "thm-grid | schedules | thm-even | thm-odd-alternate | thm-odd-simple | "
                     "thm-triangles | lemma-bad | lemma-bc | lemma-attach | ind-eq-pm | "
                     "fold-sequence | conjecture | all")
        ->required();
    cmd_verify->add_option("--n-max", n_max_flag, "largest n to test");
    cmd_verify->add_option("--k-max", k_max_flag, "largest k to test");
    cmd_verify->add_option("--m-max", m_max_flag, "largest m to test");
    cmd_verify->add_option("--tri-k-max", tri_k_max_flag, "largest triangle k to test");

    auto* cmd_conj = app.add_subcommand("conjecture", "Betti table over m x n grids");
    cmd_conj->add_option("--m-max", conj_m_max, "largest row count");
    cmd_conj->add_option("--n-max", conj_n_max, "largest column count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        Config cfg = resolve_config(config_path);
        if (cap_faces_flag) cfg.caps.cap_faces = static_cast<std::size_t>(*cap_faces_flag);
        if (out_path) cfg.out = out_path;

        if (cmd_family->parsed()) {
            Graph g = build_graph(fam_fo);
            emit(want_dot ? graph_to_dot(g) : graph_to_json(g).dump(2) + "\n", cfg.out);
            return 0;
        }
        if (cmd_bad->parsed()) {
            Graph g = build_graph(bad_fo);
            emit(bad_matching_report_json(g).dump(2) + "\n", cfg.out);
            return 0;
        }
        if (cmd_complex->parsed()) {
            Graph g = build_graph(cx_fo);
            auto cx = build_complex(g, cfg.caps.cap_faces);
            json j = complex_to_json(cx, full_faces);
            j["face_count"] = cx.face_count();
            j["void"] = cx.is_void();
            if (!cx.is_void()) j["f_vector"] = f_vector(cx);
            emit(j.dump(2) + "\n", cfg.out);
            return 0;
        }
        if (cmd_morse->parsed()) {
            Graph g = build_graph(morse_fo);
            auto cx = build_complex(g, cfg.caps.cap_faces);
            PairingSchedule sched{split_schedule(schedule_arg)};
            auto run = element_pairing_sequence(cx, sched);
            bool acyclic = verify_partial_pairing(run.pairing).ok && verify_acyclic(run.pairing);
            emit(morse_report_json(cx, sched, run, acyclic).dump(2) + "\n", cfg.out);
            return 0;
        }
        if (cmd_homology->parsed()) {
            Graph g = build_graph(hom_fo);
            auto cx = build_complex(g, cfg.caps.cap_faces);
            emit(homology_report_json(reduced_betti(cx)).dump(2) + "\n", cfg.out);
            return 0;
        }
        if (cmd_verify->parsed()) {
            JobRange range;
            range.n_max = n_max_flag;
            range.k_max = k_max_flag;
            range.m_max = m_max_flag;
            range.tri_k_max = tri_k_max_flag;
            if (job_arg == "all") {
                int worst = 0;
                json reports = json::array();
                for (auto j : {VerificationJob::BadMatchingsClosedForm,
                               VerificationJob::UpperLowerLinkage, VerificationJob::IndEqualsPm,
                               VerificationJob::FoldSequence, VerificationJob::GridHomotopy,
                               VerificationJob::GridSchedules,
                               VerificationJob::EvenTilingContractible,
                               VerificationJob::AttachEdgeExclusion,
                               VerificationJob::OddAlternateContractible,
                               VerificationJob::TriangleSpheres,
                               VerificationJob::OddSimpleContractible}) {
                    auto rep = run_verification(j, cfg.caps, range);
                    if (!want_json) std::cout << rep.to_text();
                    reports.push_back(rep.to_json());
                    if (rep.exit_code() == 1) worst = 1;
                    else if (rep.exit_code() == 3 && worst != 1) worst = 3;
                }
                if (want_json) std::cout << reports.dump(2) << "\n";
                if (cfg.out) emit(reports.dump(2) + "\n", cfg.out);
                return worst;
            }
            auto job = job_from_name(job_arg);
            if (!job) {
                std::cerr << "unknown verification job: " << job_arg << "\n";
                return 2;
            }
            if (*job == VerificationJob::ConjectureSweep) {
                auto sweep = run_conjecture_sweep(cfg.caps, range);
                std::string csv = sweep_csv(sweep);
                if (want_json) std::cout << sweep.report.to_json().dump(2) << "\n";
                else std::cout << csv;
                if (cfg.out) emit(csv, cfg.out);
                return sweep.report.exit_code();
            }
            auto rep = run_verification(*job, cfg.caps, range);
            if (want_json) std::cout << rep.to_json().dump(2) << "\n";
            else std::cout << rep.to_text();
            if (cfg.out) emit(rep.to_json().dump(2) + "\n", cfg.out);
            return rep.exit_code();
        }
        if (cmd_conj->parsed()) {
            JobRange range;
            range.m_max = conj_m_max;
            range.n_max = conj_n_max;
            auto sweep = run_conjecture_sweep(cfg.caps, range);
            std::string csv = sweep_csv(sweep);
            if (want_json) std::cout << sweep.report.to_json().dump(2) << "\n";
            else std::cout << csv;
            if (cfg.out) emit(csv, cfg.out);
            return sweep.report.exit_code();
        }
    } catch (const FaceCapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
