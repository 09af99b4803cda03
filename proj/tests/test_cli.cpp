#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "config.hpp"
#include "zetalab/errors.hpp"

namespace fs = std::filesystem;
using zetalab::cli::run;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Result r;
    r.code = run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Writes a config into a per-process scratch directory and returns its path.
std::string write_config(const std::string& name, const std::string& text) {
    const fs::path dir = fs::temp_directory_path() / "zetalab-cli-tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

const char* kCylinder = R"(surface:
  preset: cylinder
  trace: 3
convention: unoriented
numerics:
  cutoff: 3
)";

const char* kPants = R"(surface:
  preset: pair-of-pants
  lengths: [5, 5, 5]
numerics:
  basis_order: 16
  cutoff: 8
region:
  re: [1.0, 1.2]
  im: [-1.0, 1.0]
grid:
  re_steps: 2
  im_steps: 3
)";

}  // namespace

TEST_CASE("malformed configs exit 1 and name the field") {
    const std::string bad_length = write_config("bad_length.yaml", R"(surface:
  preset: pair-of-pants
  lengths: [5, -1, 5]
)");
    Result r = invoke({"spectrum", "-c", bad_length});
    CHECK(r.code == 1);
    CHECK(r.err.find("surface.lengths[1]") != std::string::npos);

    const std::string unknown =
        write_config("unknown.yaml", "surface:\n  preset: cylinder\n  length: 1\nbogus: 3\n");
    r = invoke({"spectrum", "-c", unknown});
    CHECK(r.code == 1);
    CHECK(r.err.find("bogus") != std::string::npos);

    const std::string zero_basis =
        write_config("zero_basis.yaml", std::string(kPants) + "  word_cap: 0\n");
    r = invoke({"spectrum", "-c", zero_basis});
    CHECK(r.code == 1);
    CHECK(r.err.find("word_cap") != std::string::npos);

    const std::string broken = write_config("broken.yaml", "surface: [unclosed\n");
    CHECK(invoke({"spectrum", "-c", broken}).code == 1);
    CHECK(invoke({"spectrum", "-c", "/nonexistent/zetalab.yaml"}).code == 1);
    CHECK(invoke({"spectrum"}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
}

TEST_CASE("config parsing") {
    const zetalab::cli::RunConfig cfg = zetalab::cli::parse_config_text(kPants);
    CHECK(cfg.basis_order == 16);
    CHECK_THROWS_AS(zetalab::cli::parse_config_text("surface:\n  preset: moon\n"),
                    zetalab::cli::ConfigError);
    try {
        zetalab::cli::parse_config_text(
            "surface:\n  preset: cylinder\n  length: 1\nregion:\n  re: [2, 1]\n  im: [0, 1]\n");
        FAIL("expected a ConfigError");
    } catch (const zetalab::cli::ConfigError& e) {
        CHECK(std::string(e.what()).find("region.re") != std::string::npos);
    }
}

TEST_CASE("invalid groups exit 2") {
    const std::string overlap = write_config("overlap.yaml", R"(surface:
  generators:
    - matrix: [1.5, 1.118033988749895, 1.118033988749895, 1.5]
      disks: [[-0.2, 0.9], [0.2, 0.9]]
)");
    const Result r = invoke({"spectrum", "-c", overlap});
    CHECK(r.code == 2);
    CHECK(r.err.find("DiskOverlap") != std::string::npos);
}

TEST_CASE("cylinder spectrum is a single row") {
    const std::string path = write_config("cylinder.yaml", kCylinder);
    const Result r = invoke({"spectrum", "-c", path, "--no-timestamp"});
    REQUIRE(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "word,trace,length");
    // Core length 2 acosh(3/2).
    CHECK(rows[1].find("1.92484730023841") != std::string::npos);

    const Result j = invoke({"spectrum", "-c", path, "-f", "json", "--no-timestamp"});
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.contains("geodesics"));
}

TEST_CASE("timestamps") {
    const std::string path = write_config("cylinder_ts.yaml", kCylinder);
    const Result r = invoke({"spectrum", "-c", path});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("# generated ", 0) == 0);
}

TEST_CASE("output is independent of the thread count") {
    const std::string path = write_config("pants.yaml", kPants);
    const Result a = invoke({"zeta-eval", "-c", path, "-j", "1", "--no-timestamp"});
    const Result b = invoke({"zeta-eval", "-c", path, "-j", "4", "--no-timestamp"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto rows = lines(a.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == "re_s,im_s,re_z,im_z,log_abs_z,tail_bound");

    const Result c = invoke({"spectrum", "-c", path, "-j", "3", "--no-timestamp"});
    const Result d = invoke({"spectrum", "-c", path, "-j", "1", "--no-timestamp"});
    CHECK(c.out == d.out);
}

TEST_CASE("output to a file") {
    const std::string path = write_config("cylinder_out.yaml", kCylinder);
    const fs::path target = fs::temp_directory_path() / "zetalab-cli-tests" / "spectrum.csv";
    fs::remove(target);
    const Result r = invoke({"spectrum", "-c", path, "-o", target.string(), "--no-timestamp"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(target);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(lines(text.str()).size() == 2);
}

TEST_CASE("verify dims") {
    const Result r = invoke({"verify", "dims", "--no-timestamp"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["pass"] == true);
    CHECK(r.out.find("generated") == std::string::npos);
    bool found = false;
    for (const auto& e : doc["entries"]) {
        if (e["surface"] == "Compact(genus=2)" && e["n"] == 2) {
            found = true;
            CHECK(e["observed"] == 3);
            CHECK(e["expected"] == 3);
        }
    }
    CHECK(found);
    CHECK(invoke({"verify", "nonsense"}).code == 1);
}

TEST_CASE("help lists the schemas and exit codes") {
    const Result r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("re_s,im_s,re_z,im_z,log_abs_z,tail_bound") != std::string::npos);
    CHECK(r.out.find("word,trace,length") != std::string::npos);
    CHECK(r.out.find("Exit codes") != std::string::npos);
}
