#include <doctest.h>

#include "admrank/cli.hpp"
#include "admrank/forms.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = admrank::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("rank subcommand emits the stable JSON schema") {
    auto r = run({"rank", "4:3/5,7/5,4/3,5/4,1"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    for (const char* field : {"degree", "border_rank", "cactus_rank", "complex_rank",
                              "admissible_rank", "labels", "exact", "structure"})
        CHECK(doc.contains(field));
    CHECK(doc["border_rank"] == 3);
    CHECK(doc["cactus_rank"] == 3);
    CHECK(doc["complex_rank"] == 3);
    CHECK(doc["admissible_rank"] == 3);
    CHECK(doc["exact"] == true);
    CHECK(doc["structure"] == "standard");
    // round trip: every printed form reparses to a projectively equal form
    auto f = admrank::parse_form(doc["input"].get<std::string>());
    CHECK(f == admrank::parse_form("4:3/5,7/5,4/3,5/4,1"));
    auto cert = admrank::parse_form(doc["certificate"].get<std::string>());
    CHECK(cert.degree() == 3);
}

TEST_CASE("labels subcommand finds both labels of the paper point") {
    auto r = run({"labels", "4:3/5,7/5,4/3,5/4,1"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc["labels"].size() == 2);
    bool has11 = false, has03 = false;
    for (const auto& l : doc["labels"]) {
        if (l["a"] == 1 && l["b"] == 1) has11 = true;
        if (l["a"] == 0 && l["b"] == 3) has03 = true;
        // witness round trip
        auto w = admrank::parse_form(l["witness"]["form"].get<std::string>());
        CHECK(w.degree() == 3);
    }
    CHECK(has11);
    CHECK(has03);
    // pencil case surfaces the lambda-line discriminant, degree 5 here
    REQUIRE(doc.contains("pencil_discriminant"));
    auto disc = doc["pencil_discriminant"].get<std::string>();
    CHECK(disc.rfind("5:", 0) == 0);
}

TEST_CASE("zero form input exits 2 with a diagnostic") {
    auto r = run({"rank", "2:0,0,0"});
    CHECK(r.code == 2);
    CHECK(r.err.find("ZeroForm") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
    CHECK(run({"rank", "nonsense"}).code == 2);
    CHECK(run({"rank", "3:1,2"}).code == 2);
    CHECK(run({"bogus-subcommand", "2:1,0,1"}).code == 2);
}

TEST_CASE("domain errors exit 3") {
    // fpf on a non-sigma'-stable form
    auto r = run({"labels", "2:1,1,0", "--structure", "fpf"});
    CHECK(r.code == 3);
    // partition-svg on a non-pencil form
    r = run({"partition-svg", "3:0,1,0,0"});
    CHECK(r.code == 3);
}

TEST_CASE("realrank subcommand and exit codes") {
    auto r = run({"realrank", "4:3/5,7/5,4/3,5/4,1"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["real_rank"] == 3);
    CHECK(doc["exact"] == true);

    r = run({"realrank", "2:1,0,1"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["real_rank"] == 2);
}

TEST_CASE("file input processes one form per line") {
    const char* path = "cli_forms_input.txt";
    {
        std::ofstream f(path);
        f << "2:1,0,1\n3:1,0,0,1\n";
    }
    auto r = run({"rank", std::string("@") + path});
    std::remove(path);
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 2);
    CHECK(doc[0]["complex_rank"] == 2);
    CHECK(doc[1]["complex_rank"] == 2);
}

TEST_CASE("sample subcommand: json and csv") {
    auto r = run({"sample", "3", "--n", "50", "--seed", "5", "--bound", "20"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["degree"] == 3);
    CHECK(doc["n_samples"] == 50);
    CHECK(doc.contains("label_sets"));

    r = run({"sample", "3", "--n", "50", "--seed", "5", "--bound", "20", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("key,count,frequency", 0) == 0);
}

TEST_CASE("boundary subcommand") {
    auto r = run({"boundary", "5", "--u", "0", "--v", "1", "--w", "2", "--eps", "1/100,1/10000"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["r"] == 5);
    REQUIRE(doc["steps"].size() == 2);
    CHECK(doc["limit_minimal_apolar_squarefree"] == false);
}

TEST_CASE("partition-svg writes a picture for the paper pencil") {
    auto r = run({"partition-svg", "4:3/5,7/5,4/3,5/4,1"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("<svg") != std::string::npos);
    // 5 discriminant ticks drawn as tick lines
    size_t ticks = 0, pos = 0;
    while ((pos = r.out.find("stroke-width='1.5'", pos)) != std::string::npos) {
        ++ticks;
        pos += 10;
    }
    CHECK(ticks == 5);
}
