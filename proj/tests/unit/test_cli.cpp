#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "braidfoq/json_io.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using braidfoq::json;

namespace {

const std::string kData = BRAIDFOQ_TEST_DATA;

struct Result {
    int code;
    json report;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = braidfoq::cli::run(args, out, err);
    json report;
    if (!out.str().empty() && out.str().front() == '{') report = json::parse(out.str());
    return {code, report, err.str()};
}

std::string temp(const std::string& name) { return (fs::temp_directory_path() / ("braidfoq_cli_" + name)).string(); }

}  // namespace

TEST_CASE("validate reports the constant") {
    const Result r = call({"validate", kData + "/odd.json"});
    CHECK(r.code == 0);
    CHECK(r.report.at("holds") == true);
    CHECK(r.report.at("c") == "ζ8");
}

TEST_CASE("validation failure exits with one") {
    json j = json::parse(std::ifstream(kData + "/odd.json"));
    j["omega"][0][1] = "ζ8";
    const std::string path = temp("bad.json");
    std::ofstream(path) << j.dump();
    CHECK(call({"validate", path}).code == 1);
    CHECK(call({"trivrel", path}).code == 1);
    CHECK(call({"trivrel", "--scan", kData + "/odd.json"}).report.at("table").size() == 16);
}

TEST_CASE("fuse and dims") {
    const Result r = call({"fuse", "--a", "1,0", "--b", "1,0", "--parity", "even"});
    CHECK(r.code == 0);
    CHECK(r.report.at("summands") == json::parse(R"([{"k":2,"l":0,"mult":1},{"k":0,"l":0,"mult":1}])"));
    CHECK(call({"fuse", "--a", "1,0", "--b", "1,1", "--parity", "odd"}).code == 1);
    CHECK(call({"dims", "--k", "3", "--n", "3"}).report.at("dims") == json::parse("[1,3,8,21]"));
}

TEST_CASE("transforms and q parameter") {
    CHECK(call({"shift", "--s", "1", kData + "/even.json"}).report.at("d") == 0);
    CHECK(call({"cover", kData + "/odd.json"}).report.at("data").at("field") == "cyclo:32");
    CHECK(call({"reduce", kData + "/odd.json"}).report.at("steps") == json::parse(R"j(["cover","shift(1)"])j"));
    CHECK(call({"qparam", kData + "/identity.json"}).report.at("q") == -1.0);
    CHECK(call({"qparam", kData + "/even.json"}).report.at("q") == 1.0);
    CHECK(call({"irreducible", kData + "/even.json"}).code == 0);
}

TEST_CASE("present and verify") {
    const std::string boson = temp("boson.json"), tform = temp("tform.json"), cert = temp("cert.json");
    REQUIRE(call({"present", "--target", "boson", "--out", boson, kData + "/odd.json"}).code == 0);
    REQUIRE(call({"present", "--target", "tform", "--out", tform, kData + "/odd.json"}).code == 0);
    CHECK(call({"verify", "--check", "coassoc", boson}).code == 0);
    CHECK(call({"verify", "--check", "intertwiner", tform}).code == 0);
    const Result wd = call({"verify", "--check", "welldef", "--bound", "3", "--emit-cert", cert, boson});
    CHECK(wd.code == 0);
    CHECK(wd.report.at("all_in_ideal") == true);
    const json certs = json::parse(std::ifstream(cert));
    CHECK(certs.at("isometry(1,1)").at("verdict") == "in_ideal");
    CHECK(call({"verify", "--check", "welldef", "--bound", "1", boson}).code == 3);
}

TEST_CASE("row cap from the environment") {
    const std::string boson = temp("boson_cap.json");
    REQUIRE(call({"present", "--target", "boson", "--out", boson, kData + "/odd.json"}).code == 0);
    setenv("BRAIDFOQ_ROW_CAP", "50", 1);
    const int code = call({"verify", "--check", "welldef", boson}).code;
    unsetenv("BRAIDFOQ_ROW_CAP");
    CHECK(code == 3);
}

TEST_CASE("config file supplies defaults") {
    const std::string cfg = temp("config.json"), omega = temp("nofield.json");
    std::ofstream(cfg) << R"({"field": "cyclo:8", "degree_bound": 1})";
    json j = json::parse(std::ifstream(kData + "/odd.json"));
    j.erase("field");
    std::ofstream(omega) << j.dump();
    CHECK(call({"validate", omega}).code == 2);
    CHECK(call({"validate", "--config", cfg, omega}).code == 0);
}

TEST_CASE("solve completes blocks") {
    const std::string in = temp("solve.json");
    std::ofstream(in) << R"({"field": "cyclo:8", "degrees": [0, 1], "zeta": "ζ8^6", "d": 1, "blocks": {"0": [["1"]]}})";
    const Result r = call({"solve", in});
    CHECK(r.code == 0);
    CHECK(r.report.at("c_chosen") == true);
    std::ofstream(in) << R"({"field": "cyclo:8", "degrees": [0, 1], "zeta": "ζ8^6", "d": 1, "blocks": {"0": [["1"]]}, "c": "1"})";
    CHECK(call({"solve", in}).code == 1);
}

TEST_CASE("usage and io errors exit with two") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"validate", "/nonexistent/file.json"}).code == 2);
    CHECK(call({"fuse", "--a", "x", "--b", "1,0"}).code == 2);
    CHECK(call({"validate", "--field", "cyclo:zz", kData + "/odd.json"}).code == 2);
}
