#include "jchain/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "jchain/json_io.hpp"

namespace jchain {

namespace {

constexpr int kJsonIndent = 2;

void emit(std::ostream& out, const Json& j) { out << j.dump(kJsonIndent) << "\n"; }

void write_output(const Json& j, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        emit(out, j);
        return;
    }
    std::ofstream f(out_path);
    if (!f) {
        throw Error("cannot write file: " + out_path);
    }
    emit(f, j);
}

int cmd_jordan(const std::string& matrix_path, const std::string& lambda_text,
               std::ostream& out) {
    Matrix a = matrix_from_json(load_json_file(matrix_path));
    Scalar lambda = Scalar::parse(lambda_text);
    EigenStructure es = eigen_structure(a, lambda);
    Matrix n = shift(a, lambda);
    GeneratorTuple u = generator_tuple(n);
    JordanBasis jb = jordan_basis(n, u);
    Json chains = Json::array();
    for (const auto& chain : jb.chains) {
        Json c = Json::array();
        for (const auto& v : chain) {
            Json row = Json::array();
            for (const auto& s : v) {
                row.push_back(s.str());
            }
            c.push_back(std::move(row));
        }
        chains.push_back(std::move(c));
    }
    emit(out, Json{{"eigenvalue", lambda.str()},
                   {"segre", es.segre},
                   {"weyr", es.weyr},
                   {"generators", tuple_to_json(u)},
                   {"jordan_basis", Json{{"chains", std::move(chains)}}}});
    return kOk;
}

int cmd_truncate(const std::string& matrix_path, const std::vector<size_t>& r_list,
                 const std::string& tuple_path, std::ostream& out) {
    Matrix n = matrix_from_json(load_json_file(matrix_path));
    EigenStructure es = eigen_structure(n, Scalar(0));
    TruncationIndex r{r_list};
    bool admissible = is_admissible(es.segre, r);
    GeneratorTuple u = tuple_path.empty() ? generator_tuple(n)
                                          : tuple_from_json(load_json_file(tuple_path));
    if (!tuple_path.empty() && !verify_generator_tuple(n, u)) {
        throw Error("supplied tuple is not a valid generator tuple");
    }
    Subspace wru = truncated_space(n, u, r);
    Subspace wr = w_of_r(n, es.segre, r);
    emit(out, Json{{"admissible", admissible},
                   {"segre", es.segre},
                   {"w_r_u", subspace_to_json(wru)},
                   {"w_r", subspace_to_json(wr)},
                   {"equal", wru == wr}});
    return kOk;
}

int cmd_check_theorem(const std::string& matrix_path, const std::vector<size_t>& r_list,
                      size_t trials, uint64_t seed, std::ostream& out) {
    Matrix n = matrix_from_json(load_json_file(matrix_path));
    TheoremReport report = check_theorem(n, TruncationIndex{r_list}, trials, seed);
    emit(out, report_to_json(report));
    const bool as_predicted = report.admissible
                                  ? (report.all_equal && !report.witness)
                                  : (!report.all_equal && report.witness.has_value());
    if (!as_predicted) {
        throw TheoremError("theorem outcome does not match the admissibility prediction");
    }
    return kOk;
}

int cmd_distinguish(const std::string& matrix_path, const std::vector<size_t>& r_list,
                    std::ostream& out) {
    Matrix n = matrix_from_json(load_json_file(matrix_path));
    TruncationIndex r{r_list};
    GeneratorTuple u = generator_tuple(n);
    GeneratorTuple v = distinguishing_tuple(n, u, r);
    Subspace wu = truncated_space(n, u, r);
    Subspace wv = truncated_space(n, v, r);
    emit(out, Json{{"tuple", tuple_to_json(v)},
                   {"space_u", subspace_to_json(wu)},
                   {"space_v", subspace_to_json(wv)}});
    if (wu == wv) {
        throw TheoremError("distinguishing tuple failed to separate the spaces");
    }
    return kOk;
}

int cmd_riccati(const std::string& problem_path, std::ostream& out) {
    RiccatiProblem p = problem_from_json(load_json_file(problem_path));
    RiccatiSolution sol = solve_are(p); // validates invariants in order
    HamiltonianData h = hamiltonian(p);
    emit(out, solution_to_json(sol, h.segre));
    return kOk;
}

int cmd_random_instance(const std::vector<size_t>& segre, size_t riccati_m, uint64_t seed,
                        const std::string& out_path, std::ostream& out) {
    if (!segre.empty()) {
        Matrix a = nilpotent_from_segre(segre);
        Conjugated c = conjugate_random(a, seed);
        write_output(Json{{"matrix", matrix_to_json(c.b)},
                          {"similarity", matrix_to_json(c.s)},
                          {"segre", segre},
                          {"seed", seed}},
                     out_path, out);
        return kOk;
    }
    PlantedRiccati inst = random_riccati_nilpotent(riccati_m, seed);
    Json j = problem_to_json(inst.problem);
    j["ground_truth"] = matrix_to_json(inst.x0);
    j["seed"] = seed;
    write_output(j, out_path, out);
    return kOk;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact truncated Jordan-chain subspaces and nilpotent Riccati solver"};
    app.require_subcommand(1);

    std::string matrix_path;
    std::string tuple_path;
    std::string problem_path;
    std::string out_path;
    std::string lambda_text;
    std::vector<size_t> r_list;
    std::vector<size_t> segre;
    size_t trials = 20;
    size_t riccati_m = 0;
    uint64_t seed = 0;

    auto* jordan = app.add_subcommand("jordan", "Eigenstructure at an eigenvalue");
    jordan->add_option("matrix", matrix_path, "matrix JSON file")->required();
    jordan->add_option("--eigenvalue", lambda_text, "exact eigenvalue, e.g. 0 or 1/2+1i")
        ->required();

    auto* truncate = app.add_subcommand("truncate", "Truncated chain spaces at 0");
    truncate->add_option("matrix", matrix_path, "matrix JSON file")->required();
    truncate->add_option("--r", r_list, "truncation depths, e.g. 1,0")
        ->required()
        ->delimiter(',');
    truncate->add_option("--tuple", tuple_path, "generator tuple JSON file");

    auto* check = app.add_subcommand("check-theorem", "Generator-tuple independence check");
    check->add_option("matrix", matrix_path, "matrix JSON file")->required();
    check->add_option("--r", r_list, "truncation depths")->required()->delimiter(',');
    check->add_option("--trials", trials, "number of random tuples");
    check->add_option("--seed", seed, "random seed")->required();

    auto* distinguish = app.add_subcommand("distinguish", "Distinguishing tuple for bad depths");
    distinguish->add_option("matrix", matrix_path, "matrix JSON file")->required();
    distinguish->add_option("--r", r_list, "truncation depths")->required()->delimiter(',');

    auto* riccati = app.add_subcommand("riccati", "Solve Q + F*X + XF - XDX = 0 exactly");
    riccati->add_option("--problem", problem_path, "problem JSON file")->required();

    auto* random = app.add_subcommand("random-instance", "Seeded instance generation");
    auto* segre_opt = random->add_option("--segre", segre, "Segre characteristic")->delimiter(',');
    auto* riccati_opt = random->add_option("--riccati", riccati_m, "Riccati problem size m");
    segre_opt->excludes(riccati_opt);
    riccati_opt->excludes(segre_opt);
    random->add_option("--seed", seed, "random seed")->required();
    random->add_option("--out", out_path, "output file (default stdout)");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end()); // CLI11 consumes args back to front
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    if (jordan->parsed()) {
        return cmd_jordan(matrix_path, lambda_text, out);
    }
    if (truncate->parsed()) {
        return cmd_truncate(matrix_path, r_list, tuple_path, out);
    }
    if (check->parsed()) {
        return cmd_check_theorem(matrix_path, r_list, trials, seed, out);
    }
    if (distinguish->parsed()) {
        return cmd_distinguish(matrix_path, r_list, out);
    }
    if (riccati->parsed()) {
        return cmd_riccati(problem_path, out);
    }
    if (random->parsed()) {
        if (segre.empty() && riccati_m == 0) {
            err << "error: random-instance needs --segre or --riccati\n";
            return kParseError;
        }
        return cmd_random_instance(segre, riccati_m, seed, out_path, out);
    }
    err << "error: no subcommand\n";
    return kParseError;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const EigenvalueError& e) {
        err << "error: " << e.what() << "\n";
        return kNotAnEigenvalue;
    } catch (const IndexError& e) {
        err << "error: " << e.what() << "\n";
        return kBadTruncation;
    } catch (const TheoremError& e) {
        err << "error: " << e.what() << "\n";
        return kTheoremViolation;
    } catch (const NilpotencyError& e) {
        err << "error: " << e.what() << "\n";
        return kNotNilpotent;
    } catch (const ProblemError& e) {
        err << "error: " << e.what() << "\n";
        return kBadProblem;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kFailure;
    }
}

} // namespace jchain
