#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <jchain/cli.hpp>
#include <jchain/instances.hpp>
#include <jchain/json_io.hpp>

#include "fixtures.hpp"

namespace fs = std::filesystem;
using jchain::Json;
using jchain::Matrix;
using jchain::run_cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        dir_ = fs::temp_directory_path() /
               ("jchain_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter_++));
        fs::create_directories(dir_);
    }
    ~TempDir() { fs::remove_all(dir_); }

    std::string write(const std::string& name, const Json& j) {
        fs::path p = dir_ / name;
        std::ofstream f(p);
        f << j.dump(2);
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    static inline int counter_ = 0;
    fs::path dir_;
};

} // namespace

TEST_SUITE("cli") {

TEST_CASE("jordan subcommand") {
    TempDir tmp;
    std::string m = tmp.write("a.json", jchain::matrix_to_json(fixtures::two_block_5x5()));

    Result r = run({"jordan", m, "--eigenvalue", "0"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["segre"] == Json::array({2, 3}));
    CHECK(j["weyr"] == Json::array({2, 2, 1}));
    CHECK(j["generators"]["vectors"].size() == 2);
    CHECK(j["jordan_basis"]["chains"][1].size() == 3);

    std::string id = tmp.write("id.json", jchain::matrix_to_json(Matrix::identity(3)));
    Result rid = run({"jordan", id, "--eigenvalue", "1"});
    CHECK(rid.code == 0);
    CHECK(Json::parse(rid.out)["segre"] == Json::array({1, 1, 1}));

    CHECK(run({"jordan", id, "--eigenvalue", "0"}).code == 3);
    CHECK(run({"jordan", tmp.path("missing.json"), "--eigenvalue", "0"}).code == 2);
    CHECK(run({"jordan", id, "--eigenvalue", "x"}).code == 2);
    std::string bad = tmp.write("bad.json", Json{{"rows", 1}});
    CHECK(run({"jordan", bad, "--eigenvalue", "0"}).code == 2);
}

TEST_CASE("truncate subcommand") {
    TempDir tmp;
    std::string m = tmp.write("a.json", jchain::matrix_to_json(fixtures::two_block_5x5()));

    Result inadmissible = run({"truncate", m, "--r", "1,0"});
    CHECK(inadmissible.code == 0);
    Json ji = Json::parse(inadmissible.out);
    CHECK(ji["admissible"] == false);
    CHECK(ji["equal"] == false);
    CHECK(ji["w_r_u"]["rows"] == 4);

    Result admissible = run({"truncate", m, "--r", "1,2"});
    CHECK(admissible.code == 0);
    Json ja = Json::parse(admissible.out);
    CHECK(ja["admissible"] == true);
    CHECK(ja["equal"] == true);

    Result full = run({"truncate", m, "--r", "0,0"});
    CHECK(Json::parse(full.out)["w_r_u"]["rows"] == 5);

    CHECK(run({"truncate", m, "--r", "2,0"}).code == 4);
    CHECK(run({"truncate", m, "--r", "1"}).code == 4);

    // Tuple supplied explicitly.
    jchain::GeneratorTuple ut{5, {fixtures::e(5, 2),
                                  jchain::vec_add(fixtures::e(5, 5), fixtures::e(5, 2))}};
    std::string t = tmp.write("u.json", jchain::tuple_to_json(ut));
    Result with_tuple = run({"truncate", m, "--r", "1,0", "--tuple", t});
    CHECK(with_tuple.code == 0);
    CHECK(Json::parse(with_tuple.out)["w_r_u"] !=
          Json::parse(inadmissible.out)["w_r_u"]);

    jchain::GeneratorTuple badt{5, {fixtures::e(5, 1), fixtures::e(5, 5)}};
    std::string tb = tmp.write("ub.json", jchain::tuple_to_json(badt));
    CHECK(run({"truncate", m, "--r", "1,0", "--tuple", tb}).code == 1);
}

TEST_CASE("check-theorem subcommand") {
    TempDir tmp;
    std::string m = tmp.write("a.json", jchain::matrix_to_json(fixtures::two_block_5x5()));

    Result ok = run({"check-theorem", m, "--r", "1,2", "--trials", "15", "--seed", "3"});
    CHECK(ok.code == 0);
    Json jo = Json::parse(ok.out);
    CHECK(jo["all_equal"] == true);
    CHECK(jo["witness"].is_null());

    Result witness = run({"check-theorem", m, "--r", "1,0", "--trials", "15", "--seed", "3"});
    CHECK(witness.code == 0);
    Json jw = Json::parse(witness.out);
    CHECK(jw["all_equal"] == false);
    CHECK(!jw["witness"].is_null());
    CHECK(jw["witness"]["space_u"] != jw["witness"]["space_v"]);

    std::string single = tmp.write("n3.json", jchain::matrix_to_json(fixtures::shift_3x3()));
    Result sr = run({"check-theorem", single, "--r", "1", "--trials", "5", "--seed", "1"});
    CHECK(sr.code == 0);
    CHECK(Json::parse(sr.out)["all_equal"] == true);

    // Identical invocations produce byte-identical stdout.
    Result again = run({"check-theorem", m, "--r", "1,0", "--trials", "15", "--seed", "3"});
    CHECK(again.out == witness.out);
}

TEST_CASE("distinguish subcommand") {
    TempDir tmp;
    std::string m = tmp.write("a.json", jchain::matrix_to_json(fixtures::two_block_5x5()));

    Result r = run({"distinguish", m, "--r", "1,0"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["tuple"]["vectors"].size() == 2);
    CHECK(j["space_u"] != j["space_v"]);

    CHECK(run({"distinguish", m, "--r", "1,2"}).code == 4); // admissible
    CHECK(run({"distinguish", m, "--r", "9,9"}).code == 4); // out of bounds
}

TEST_CASE("riccati subcommand") {
    TempDir tmp;
    jchain::RiccatiProblem p{Matrix{{1}}, Matrix{{1}}, Matrix{{-1}}};
    std::string f = tmp.write("p.json", jchain::problem_to_json(p));
    Result r = run({"riccati", "--problem", f});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["X"]["entries"] == Json::array({Json::array({"1"})}));
    CHECK(j["residual"]["entries"] == Json::array({Json::array({"0"})}));
    CHECK(j["segre"] == Json::array({2}));

    jchain::RiccatiProblem zero{Matrix{{0}}, Matrix{{1}}, Matrix{{0}}};
    std::string fz = tmp.write("pz.json", jchain::problem_to_json(zero));
    Result rz = run({"riccati", "--problem", fz});
    CHECK(rz.code == 0);
    CHECK(Json::parse(rz.out)["X"]["entries"][0][0] == "0");

    jchain::RiccatiProblem spin{Matrix{{0}}, Matrix{{1}}, Matrix{{1}}};
    CHECK(run({"riccati", "--problem", tmp.write("ps.json", jchain::problem_to_json(spin))})
              .code == 6);

    jchain::RiccatiProblem notpsd{Matrix{{0}}, Matrix{{-1}}, Matrix{{0}}};
    CHECK(run({"riccati", "--problem", tmp.write("pn.json", jchain::problem_to_json(notpsd))})
              .code == 7);
    jchain::RiccatiProblem uncontrollable{Matrix{{0}}, Matrix{{0}}, Matrix{{0}}};
    CHECK(run({"riccati", "--problem",
               tmp.write("pu.json", jchain::problem_to_json(uncontrollable))})
              .code == 7);
}

TEST_CASE("random-instance subcommand") {
    TempDir tmp;
    Result segre = run({"random-instance", "--segre", "2,3", "--seed", "4"});
    CHECK(segre.code == 0);
    Json js = Json::parse(segre.out);
    CHECK(js["segre"] == Json::array({2, 3}));
    Matrix b = jchain::matrix_from_json(js["matrix"]);
    CHECK(jchain::eigen_structure(b, jchain::Scalar(0)).segre == std::vector<size_t>{2, 3});

    // Deterministic per seed; emitted artifacts re-parse identically.
    Result segre2 = run({"random-instance", "--segre", "2,3", "--seed", "4"});
    CHECK(segre2.out == segre.out);

    std::string out_file = tmp.path("inst.json");
    Result rr = run({"random-instance", "--riccati", "2", "--seed", "5", "--out", out_file});
    CHECK(rr.code == 0);
    Json jr = jchain::load_json_file(out_file);
    auto prob = jchain::problem_from_json(jr);
    Matrix x0 = jchain::matrix_from_json(jr["ground_truth"]);
    CHECK(jchain::solve_are(prob).x == x0);

    CHECK(run({"random-instance", "--seed", "1"}).code == 2);
    CHECK(run({"random-instance", "--segre", "2", "--riccati", "1", "--seed", "1"}).code == 2);
    CHECK(run({"random-instance", "--segre", "2"}).code == 2); // seed is mandatory
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

} // TEST_SUITE
