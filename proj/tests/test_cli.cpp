#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/cache.hpp"
#include "toric/documents.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace toric;

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Runs the CLI with stdout captured; stderr is folded in so diagnostics of
// expected failures stay visible in test logs.
RunResult run_cli(const std::string& args) {
    static int counter = 0;
    fs::path out = fs::temp_directory_path() / ("toric_cli_out_" + std::to_string(counter++));
    std::string cmd = std::string(TORIC_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r{WEXITSTATUS(rc), slurp(out)};
    fs::remove(out);
    return r;
}

fs::path write_doc(const std::string& name, const std::string& body) {
    fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << body;
    return p;
}

const std::string kSurfaceDoc = "dim 2\ngen 6 0\ngen 0 2\ngen 7 0\ngen 6 4\ngen 15 0\n";
const std::string kCurveDoc = "dim 1\ngen 1\ngen 4\ngen 5\n";

}  // namespace

TEST_CASE("semigroup document round trip") {
    AffineSemigroup s = parse_semigroup_document(kSurfaceDoc);
    CHECK(s.dim() == 2);
    CHECK(s.ngens() == 5);
    std::string text = write_semigroup_document(s);
    AffineSemigroup back = parse_semigroup_document(text);
    CHECK(back == s);
    CHECK(write_semigroup_document(back) == text);

    // Comments and labels survive parsing.
    AffineSemigroup labeled =
        parse_semigroup_document("# header\ndim 1\ngen 2 # inline\ngen 3\nlabel cusp curve\n");
    CHECK(labeled.label() == "cusp curve");
}

TEST_CASE("semigroup document diagnostics carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_semigroup_document("dim 1\ngen x\n"),
                         "line 2: not an integer: x", InputError);
    CHECK_THROWS_AS(parse_semigroup_document("gen 1\n"), InputError);
    CHECK_THROWS_AS(parse_semigroup_document("dim 2\ngen 1\n"), InputError);
    CHECK_THROWS_AS(parse_semigroup_document("dim 1\nfoo 3\n"), InputError);
    CHECK_THROWS_AS(parse_semigroup_document("dim 1\n"), InputError);
}

TEST_CASE("cli ideal subcommand and exit codes") {
    fs::path doc = write_doc("surface.sg", kSurfaceDoc);
    RunResult r = run_cli("ideal " + doc.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("mu = 3") != std::string::npos);
    CHECK(r.out.find("x1^5 - x5^2") != std::string::npos);

    RunResult bad = run_cli("ideal /nonexistent.sg");
    CHECK(bad.exit_code == 2);

    fs::path malformed = write_doc("bad.sg", "dim 1\ngen zero\n");
    RunResult parse_fail = run_cli("ideal " + malformed.string());
    CHECK(parse_fail.exit_code == 2);
    CHECK(parse_fail.out.find("line 2") != std::string::npos);
}

TEST_CASE("cli single-generator semigroup reports the zero ideal") {
    fs::path doc = write_doc("single.sg", "dim 1\ngen 3\n");
    RunResult r = run_cli("ideal " + doc.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("zero") != std::string::npos);

    fs::path cusp = write_doc("cusp.sg", "dim 1\ngen 2\ngen 3\n");
    RunResult rc = run_cli("ideal " + cusp.string());
    CHECK(rc.exit_code == 0);
    CHECK(rc.out.find("x1^3 - x2^2") != std::string::npos);
}

TEST_CASE("cli stdbasis and tangent-cone subcommands") {
    fs::path doc = write_doc("surface_tc.sg", kSurfaceDoc);
    RunResult sb = run_cli("stdbasis " + doc.string());
    CHECK(sb.exit_code == 0);
    CHECK(sb.out.find("x4 - x1*x2^2") != std::string::npos);
    CHECK(sb.out.find("5 elements") != std::string::npos);

    RunResult tc = run_cli("tangent-cone " + doc.string());
    CHECK(tc.exit_code == 0);
    CHECK(tc.out.find("x3^3*x5") != std::string::npos);
    CHECK(tc.out.find("x3^6") != std::string::npos);
    CHECK(tc.out.find("leading ideal:") != std::string::npos);
}

TEST_CASE("cli extend reports the extension invariants for the curve") {
    fs::path doc = write_doc("curve_ext.sg", kCurveDoc);
    RunResult r = run_cli("extend " + doc.string() + " --l 1 --m 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("delta = 2, Delta = 10") != std::string::npos);
    CHECK(r.out.find("projective-good (l >= delta): no") != std::string::npos);
    CHECK(r.out.find("nice (l <= Delta): yes") != std::string::npos);
}

TEST_CASE("cli extend and verify exit semantics") {
    fs::path doc = write_doc("surface2.sg", kSurfaceDoc);
    RunResult ok = run_cli("extend " + doc.string() + " --l 3 --m 6,4");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("delta = 1, Delta = 3") != std::string::npos);

    RunResult invalid = run_cli("extend " + doc.string() + " --l 2 --m 6,4");
    CHECK(invalid.exit_code == 2);
    CHECK(invalid.out.find("relatively prime") != std::string::npos);

    RunResult verified = run_cli("verify " + doc.string() + " --l 3 --m 6,4 --which hf,cone");
    CHECK(verified.exit_code == 0);
    CHECK(verified.out.find("[pass] hilbert-function-transfer") != std::string::npos);

    // hom without --betti is an input error.
    RunResult missing = run_cli("verify " + doc.string() + " --l 3 --m 6,4 --which hom");
    CHECK(missing.exit_code == 2);

    // Property tags transfer onto passing reports.
    RunResult tagged =
        run_cli("verify " + doc.string() + " --l 3 --m 6,4 --which affine --tags stci");
    CHECK(tagged.exit_code == 0);
    CHECK(tagged.out.find("tag        set-theoretic-complete-intersection") != std::string::npos);
}

TEST_CASE("cli json output is deterministic and cache-transparent") {
    fs::path doc = write_doc("surface3.sg", kSurfaceDoc);
    RunResult a = run_cli("hilbert " + doc.string() + " --json");
    RunResult b = run_cli("hilbert " + doc.string() + " --json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    fs::path cache = fs::temp_directory_path() / "toric_test_cache";
    fs::remove_all(cache);
    RunResult cold = run_cli("hilbert " + doc.string() + " --json --cache-dir " + cache.string());
    RunResult warm = run_cli("hilbert " + doc.string() + " --json --cache-dir " + cache.string());
    CHECK(cold.out == a.out);
    CHECK(warm.out == a.out);
    CHECK(!fs::is_empty(cache));
    fs::remove_all(cache);
}

TEST_CASE("cli batch mode keeps input order under --jobs") {
    fs::path d1 = write_doc("batch1.sg", kSurfaceDoc);
    fs::path d2 = write_doc("batch2.sg", kCurveDoc);
    fs::path d3 = write_doc("batch3.sg", "dim 1\ngen 2\ngen 3\n");
    std::string args = d1.string() + " " + d2.string() + " " + d3.string();
    RunResult serial = run_cli("ideal " + args);
    RunResult parallel = run_cli("ideal " + args + " --jobs 3");
    CHECK(serial.exit_code == 0);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("cli gb reproduces the documented closure basis text") {
    fs::path doc = write_doc("curve145.sg", kCurveDoc);
    RunResult r = run_cli("gb " + doc.string() + " --projective");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("x1*x2 - x3*x0") != std::string::npos);
    CHECK(r.out.find("x1^4 - x2*x0^3") != std::string::npos);
    CHECK(r.out.find("5 elements") != std::string::npos);
}

TEST_CASE("cli chain emits one step per extension with growing codimension") {
    fs::path doc = write_doc("surface4.sg", kSurfaceDoc);
    RunResult r = run_cli("extend " + doc.string() + " --l 3 --m 6,4 --chain 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("embedding codim 4") != std::string::npos);
    CHECK(r.out.find("embedding codim 5") != std::string::npos);
    CHECK(r.out.find("embedding codim 6") != std::string::npos);
}

TEST_CASE("result cache stores and retrieves by content key") {
    fs::path dir = fs::temp_directory_path() / "toric_unit_cache";
    fs::remove_all(dir);
    ResultCache cache(dir.string());
    REQUIRE(cache.enabled());
    std::string key = cache.key_for("request");
    CHECK(!cache.lookup(key).has_value());
    cache.store(key, "payload");
    auto hit = cache.lookup(key);
    REQUIRE(hit.has_value());
    CHECK(*hit == "payload");
    CHECK(cache.key_for("other") != key);
    fs::remove_all(dir);

    ResultCache disabled{std::string{}};
    CHECK(!disabled.enabled());
}
