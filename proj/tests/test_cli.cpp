#include "doctest.h"

#include "cli.hpp"

#include "quadorbit/report.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = quadorbit::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("orbit verb") {
    auto r = cli({"orbit", "--maps", "-5/16,-13/16,-21/16", "--point", "1/4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("finite orbit of size 6") != std::string::npos);

    r = cli({"orbit", "--maps", "3/16, -5/16, -13/16, -21/16", "--point", "3/4"});
    CHECK(r.code == 1);

    r = cli({"orbit", "--maps", "-5/16,-13/16,-21/16", "--point", "1/4", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(quadorbit::verify_orbit_report(r.out));
    // Global options may also precede the verb.
    CHECK(cli({"--format", "json", "orbit", "--maps", "-13/16", "--point", "1/4"}).code == 0);
}

TEST_CASE("single-map verbs") {
    auto r = cli({"preperiodic", "--c", "1", "--point", "0"});
    CHECK(r.code == 1);
    CHECK(r.out.find("escape-bound") != std::string::npos);
    CHECK(cli({"preperiodic", "--c", "-21/16", "--point", "-1/4"}).code == 0);

    r = cli({"periodic", "--c", "-29/16", "--n", "3", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["points"].size() == 3);
    CHECK(cli({"periodic", "--c", "0", "--n", "4"}).code == 2);

    CHECK(cli({"mu", "--maps", "-29/16,-21/16"}).code == 0);
}

TEST_CASE("verification verbs") {
    auto r = cli({"verify", "lemma", "--id", "2.4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("no finite orbit points") != std::string::npos);

    r = cli({"verify", "lemma", "--id", "2.4", "--route", "groebner", "--budget-seconds", "0.5"});
    CHECK(r.code == 3);

    CHECK(cli({"verify", "theorem", "--case", "7"}).code == 0);
    CHECK(cli({"verify", "theorem", "--case", "12"}).code == 2);

    r = cli({"family", "verify", "--id", "F-11b", "--specializations", "5", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["pass"] == true);
}

TEST_CASE("search verb") {
    std::string path = "cli_search_spec.json";
    {
        std::ofstream f(path);
        f << R"({"denominators": [1], "numerator_bound": 5, "set_size": 2})";
    }
    auto r = cli({"search", "--spec", path, "--workers", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("-3,-2: -2 -1 1 2") != std::string::npos);
    std::remove(path.c_str());
    CHECK(cli({"search", "--spec", "no-such-file.json"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"orbit", "--maps", "0.5", "--point", "1"}).code == 2);
    CHECK(cli({"orbit", "--maps", "1,1", "--point", "1"}).code == 2);
    CHECK(cli({"orbit", "--maps", "1"}).code == 2);
    CHECK(cli({"verify", "lemma", "--id", "9.9"}).code == 2);
    CHECK(cli({"family", "verify", "--id", "F-00"}).code == 2);
    CHECK(cli({"orbit", "--maps", "1", "--point", "0", "--format", "xml"}).code == 2);
    auto r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("orbit") != std::string::npos);
}
