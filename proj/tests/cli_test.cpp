#include "syndet/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "syndet/differences.hpp"
#include "syndet/ramsey.hpp"

using nlohmann::json;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
    json doc;  // parsed stdout when it is nonempty JSON
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliRun r;
    r.code = syndet::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    if (!r.out.empty() && r.out.front() == '{') {
        r.doc = json::parse(r.out);
    }
    return r;
}

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("syndet_clitest_" + name))
        .string();
}

std::string write_tmp(const std::string& name, const std::string& text) {
    const std::string path = tmp_path(name);
    std::ofstream f(path, std::ios::binary);
    f << text;
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("vdw: envelope, result fields, determinism") {
    const CliRun r = run({"vdw", "--k", "3", "--r", "2", "--cap", "20"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.doc["schema_version"] == 1);
    CHECK(r.doc["command"] == "vdw");
    CHECK(r.doc["config"]["k"] == 3);
    CHECK(r.doc["config"]["r"] == 2);
    CHECK(r.doc["config"]["cap"] == 20);
    CHECK(r.doc["config"]["emit_certificate"].is_null());
    CHECK(r.doc["config"]["out"].is_null());
    CHECK(r.doc["result"]["outcome"] == "found");
    CHECK(r.doc["result"]["W"] == 9);
    CHECK(r.doc["result"]["certificate"] == "RRBBRRBB");
    CHECK(r.doc["result"]["certificate_length"] == 8);
    CHECK(r.doc["result"]["nodes"].get<std::int64_t>() > 0);

    // Same invocation, byte-identical report: nothing time- or run-dependent.
    const CliRun again = run({"vdw", "--k", "3", "--r", "2", "--cap", "20"});
    CHECK(again.out == r.out);
    CHECK(again.code == r.code);
}

TEST_CASE("vdw: cap exhaustion exits 3 with a partial certificate") {
    const CliRun r = run({"vdw", "--k", "3", "--r", "2", "--cap", "5"});
    CHECK(r.code == 3);
    CHECK(r.doc["result"]["outcome"] == "exceeded-cap");
    CHECK(!r.doc["result"].contains("W"));
    CHECK(r.doc["result"]["cap"] == 5);
    CHECK(r.doc["result"]["certificate"].get<std::string>().size() == 5);
}

TEST_CASE("vdw: emitted certificate file round-trips") {
    const std::string cert_path = tmp_path("vdw_cert.txt");
    const CliRun r = run({"vdw", "--k", "3", "--r", "2", "--cap", "20",
                          "--emit-certificate", cert_path});
    CHECK(r.code == 0);
    CHECK(r.doc["config"]["emit_certificate"] == cert_path);
    const auto [coloring, k] = syndet::parse_certificate(slurp(cert_path));
    CHECK(k == 3);
    CHECK(coloring.num_colors == 2);
    CHECK(syndet::format_coloring(coloring) == "RRBBRRBB");
    CHECK(syndet::verify_certificate(coloring, k));
    std::filesystem::remove(cert_path);
}

TEST_CASE("usage failures exit 2, help exits 0") {
    CHECK(run({}).code == 2);                                  // no subcommand
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"vdw", "--k", "3"}).code == 2);                 // missing required
    CHECK(run({"vdw", "--k", "3", "--r", "2", "--cap", "20", "--bogus"}).code == 2);
    CHECK(run({"vdw", "--k", "0", "--r", "2", "--cap", "5"}).code == 2);
    const CliRun bad = run({"vdw", "--k", "3"});
    CHECK(!bad.err.empty());

    const CliRun help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("vdw") != std::string::npos);
    CHECK(help.out.find("filterlab") != std::string::npos);
}

TEST_CASE("classify: structure flags and witnesses") {
    const std::string set = write_tmp("evens.set", "len=10\nbits=0101010101\n");
    const CliRun r = run({"classify", "--set", set, "--syndetic", "2", "--thick",
                          "2", "--pws", "2,3"});
    CHECK(r.code == 0);
    CHECK(r.doc["command"] == "classify");
    CHECK(r.doc["config"]["set"] == set);
    CHECK(r.doc["config"]["syndetic"] == 2);
    CHECK(r.doc["config"]["thick"] == 2);
    CHECK(r.doc["config"]["pws"] == "2,3");
    CHECK(r.doc["result"]["set"]["window_len"] == 10);
    CHECK(r.doc["result"]["set"]["count"] == 5);
    CHECK(r.doc["result"]["structure"]["max_gap"] == 1);
    CHECK(r.doc["result"]["structure"]["longest_run"] == 1);
    CHECK(r.doc["result"]["syndetic"]["syndetic"] == true);
    CHECK(!r.doc["result"]["syndetic"].contains("empty_window"));
    CHECK(r.doc["result"]["thick"]["thick"] == false);
    CHECK(r.doc["result"]["pws"]["piecewise_syndetic"] == true);
    CHECK(r.doc["result"]["pws"]["witness"]["run"]["length"].get<std::int64_t>() >= 3);

    // Flags not given stay out of the result and null in the config echo.
    const CliRun plain = run({"classify", "--set", set});
    CHECK(plain.code == 0);
    CHECK(plain.doc["config"]["syndetic"].is_null());
    CHECK(!plain.doc["result"].contains("syndetic"));
    std::filesystem::remove(set);
}

TEST_CASE("classify: empty sets are handled, not special-cased away") {
    const std::string set = write_tmp("empty.set", "len=4\nlist=\n");
    const CliRun r = run({"classify", "--set", set, "--thick", "1"});
    CHECK(r.code == 0);
    CHECK(r.doc["result"]["set"]["count"] == 0);
    CHECK(r.doc["result"]["thick"]["thick"] == false);
    std::filesystem::remove(set);
}

TEST_CASE("classify: unreadable and malformed set files exit 2 with context") {
    const CliRun missing = run({"classify", "--set", tmp_path("no_such.set")});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("cannot read file") != std::string::npos);

    const std::string set = write_tmp("bad.set", "len=x\nbits=01\n");
    const CliRun bad = run({"classify", "--set", set});
    CHECK(bad.code == 2);
    CHECK(bad.err.find(set) != std::string::npos);  // names the culprit file
    std::filesystem::remove(set);
}

TEST_CASE("density: prefix and window profile with exact rationals") {
    const std::string set = write_tmp("dens.set", "len=10\nbits=0101010101\n");
    const CliRun r =
        run({"density", "--set", set, "--prefix", "10", "--window", "2,5"});
    CHECK(r.code == 0);
    CHECK(r.doc["result"]["prefix"]["N"] == 10);
    CHECK(r.doc["result"]["prefix"]["value_num"] == 1);
    CHECK(r.doc["result"]["prefix"]["value_den"] == 2);
    const json& profile = r.doc["result"]["profile"];
    REQUIRE(profile.size() == 2);
    CHECK(profile[0]["N"] == 2);
    CHECK(profile[0]["value_num"] == 1);
    CHECK(profile[0]["value_den"] == 2);
    CHECK(profile[0]["witness_start"] == 0);
    CHECK(profile[1]["N"] == 5);
    CHECK(profile[1]["value_num"] == 3);
    CHECK(profile[1]["value_den"] == 5);
    CHECK(profile[1]["witness_start"] == 1);

    // At least one of the two analyses must be requested.
    const CliRun neither = run({"density", "--set", set});
    CHECK(neither.code == 2);
    CHECK(neither.err.find("--prefix") != std::string::npos);
    std::filesystem::remove(set);
}

TEST_CASE("fractal: depth mode, prefix mode, emit, verifications") {
    const CliRun stats = run({"fractal", "--k", "1", "--n", "2"});
    CHECK(stats.code == 0);
    CHECK(stats.doc["config"]["verify"] == "stats");  // the default
    CHECK(stats.doc["result"]["word"] == "1101100");
    CHECK(stats.doc["result"]["length"] == 7);
    CHECK(stats.doc["result"]["ones"] == 4);
    CHECK(stats.doc["result"]["trailing_zeros"] == 2);
    CHECK(stats.doc["result"]["ok"] == true);

    const std::string emitted = tmp_path("fractal.set");
    const CliRun len_mode =
        run({"fractal", "--k", "1", "--len", "10", "--emit", emitted});
    CHECK(len_mode.code == 0);
    CHECK(len_mode.doc["result"]["ok"] == true);  // prefix nesting holds
    CHECK(len_mode.doc["result"]["emitted"] == emitted);
    CHECK(slurp(emitted).find("bits=1101100110") != std::string::npos);
    std::filesystem::remove(emitted);

    const CliRun dens = run({"fractal", "--k", "2", "--len", "11", "--verify",
                             "density"});
    CHECK(dens.code == 0);
    CHECK(dens.doc["result"]["min_density"]["num"] == 8);
    CHECK(dens.doc["result"]["min_density"]["den"] == 11);
    CHECK(dens.doc["result"]["at_n"] == 11);
    CHECK(dens.doc["result"]["bound"]["num"] == 2);
    CHECK(dens.doc["result"]["bound"]["den"] == 3);
    CHECK(dens.doc["result"]["ok"] == true);

    const CliRun gaps = run({"fractal", "--k", "1", "--len", "200", "--verify",
                             "gaps"});
    CHECK(gaps.code == 0);
    CHECK(gaps.doc["result"]["ok"] == true);
    REQUIRE(!gaps.doc["result"]["gaps"].empty());
    CHECK(gaps.doc["result"]["gaps"][0]["n"] == 1);
    CHECK(gaps.doc["result"]["gaps"][0]["ok"] == true);

    CHECK(run({"fractal", "--k", "1"}).code == 2);  // need --n or --len
    CHECK(run({"fractal", "--k", "1", "--n", "2", "--len", "7"}).code == 2);
    CHECK(run({"fractal", "--k", "1", "--n", "2", "--verify", "bogus"}).code == 2);
}

TEST_CASE("jin: caveat is attached verbatim") {
    const std::string evens100 =
        "len=100\nbits=" + [] {
            std::string b(100, '0');
            for (std::size_t i = 1; i < 100; i += 2) b[i] = '1';
            return b;
        }() + "\n";
    const std::string a = write_tmp("jin_a.set", evens100);
    const CliRun r = run({"jin", "--a", a, "--b", a, "--dmax", "5", "--nreq", "10"});
    CHECK(r.code == 0);
    CHECK(r.doc["result"]["found"] == true);
    CHECK(r.doc["result"]["witness"]["d"] == 2);
    CHECK(r.doc["result"]["density_a"]["num"] == 1);
    CHECK(r.doc["result"]["density_a"]["den"] == 2);
    CHECK(r.doc["result"]["diag_window"] == 100);
    CHECK(r.doc["config"]["diag_window"] == 100);  // echoes the applied default
    CHECK(r.doc["result"]["caveat"] == std::string(syndet::kJinCaveat));
    std::filesystem::remove(a);
}

TEST_CASE("fs: sequence, sums, color, caveat") {
    const CliRun r =
        run({"fs", "--coloring", "RRRRRRR", "--m", "3", "--sum-cap", "7"});
    CHECK(r.code == 0);
    CHECK(r.doc["config"]["colors"] == 1);  // inferred from the letters
    CHECK(r.doc["result"]["found"] == true);
    CHECK(r.doc["result"]["seq"] == json::array({1, 2, 3}));
    CHECK(r.doc["result"]["fs_members"] == json::array({1, 2, 3, 4, 5, 6}));
    CHECK(r.doc["result"]["color"] == 1);
    CHECK(r.doc["result"]["caveat"].get<std::string>().find("capped search") !=
          std::string::npos);

    const CliRun absent =
        run({"fs", "--coloring", "RBRB", "--m", "2", "--sum-cap", "4"});
    CHECK(absent.code == 0);
    CHECK(absent.doc["result"]["found"] == false);
    CHECK(!absent.doc["result"].contains("seq"));

    const CliRun bad = run({"fs", "--coloring", "RXB", "--m", "1", "--sum-cap", "3"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("unknown color letter 'X'") != std::string::npos);
}

TEST_CASE("filterlab: the five actions") {
    const CliRun verdict = run({"filterlab", "--universe", "3", "--check-filter",
                                "[[1],[2],[1,2],[1,2,3]]"});
    CHECK(verdict.code == 0);
    CHECK(verdict.doc["result"]["ok"] == false);
    CHECK(verdict.doc["result"]["axiom"] == 2);
    CHECK(verdict.doc["result"]["axiom_name"] == "upward-closure");
    CHECK(verdict.doc["result"]["witness_a"] == json::array({1}));
    CHECK(verdict.doc["result"]["witness_b"] == json::array({1, 3}));

    const CliRun ultra = run({"filterlab", "--universe", "3", "--check-ultrafilter",
                              "[[2],[1,2],[2,3],[1,2,3]]"});
    CHECK(ultra.code == 0);
    CHECK(ultra.doc["result"]["ok"] == true);

    const CliRun gen = run({"filterlab", "--universe", "3", "--generate",
                            "[[1,2],[2,3]]"});
    CHECK(gen.code == 0);
    CHECK(gen.doc["result"]["members"] ==
          json::array({json::array({2}), json::array({1, 2}),
                       json::array({2, 3}), json::array({1, 2, 3})}));

    const CliRun ext = run({"filterlab", "--universe", "4", "--extend",
                            "[[1,2],[1,2,3],[1,2,4],[1,2,3,4]]", "--phi",
                            "meets:2,3"});
    CHECK(ext.code == 0);
    CHECK(ext.doc["result"]["core"] == json::array({2}));
    CHECK(ext.doc["result"]["phi"] == "meets:{2,3}");
    CHECK(ext.doc["result"]["members"].size() == 8);  // principal at one point

    const CliRun reg = run({"filterlab", "--universe", "4", "--partition-regular",
                            "[[2]]"});
    CHECK(reg.code == 0);
    CHECK(reg.doc["result"]["regular"] == true);
    CHECK(reg.doc["result"]["witness"].size() == 8);

    const CliRun irr = run({"filterlab", "--universe", "4", "--partition-regular",
                            "[[1,2],[3,4]]"});
    CHECK(irr.code == 0);
    CHECK(irr.doc["result"]["regular"] == false);
    CHECK(irr.doc["result"]["refuting_partition"] ==
          json::array({json::array({1, 3}), json::array({2, 4})}));
}

TEST_CASE("filterlab: action arbitration and error paths") {
    CHECK(run({"filterlab", "--universe", "3"}).code == 2);  // no action
    CHECK(run({"filterlab", "--universe", "3", "--generate", "[[1]]",
               "--extend", "[[1]]", "--phi", "nonempty"})
              .code == 2);  // two actions
    CHECK(run({"filterlab", "--universe", "3", "--extend", "[[1,2],[1,2,3]]"})
              .code == 2);  // --extend without --phi

    const CliRun clash = run({"filterlab", "--universe", "3", "--generate",
                              "[[1],[2]]"});
    CHECK(clash.code == 2);
    CHECK(clash.err.find("empty intersection") != std::string::npos);

    const CliRun badlit = run({"filterlab", "--universe", "3", "--check-filter",
                               "not json"});
    CHECK(badlit.code == 2);
    CHECK(badlit.err.find("family literal") != std::string::npos);
}

TEST_CASE("selftest: all checks pass deterministically") {
    const CliRun r = run({"selftest", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(r.doc["result"]["all_pass"] == true);
    CHECK(r.doc["result"]["seed"] == 1);
    REQUIRE(r.doc["result"]["checks"].size() == 22);
    for (const json& c : r.doc["result"]["checks"]) {
        CHECK(c["pass"] == true);
        CHECK(!c["name"].get<std::string>().empty());
    }
    const CliRun again = run({"selftest", "--seed", "1"});
    CHECK(again.out == r.out);

    CHECK(run({"selftest", "--seed", "99"}).code == 0);
}

TEST_CASE("--out writes the report to a file instead of the stream") {
    const std::string out_file = tmp_path("report.json");
    const CliRun r = run({"vdw", "--k", "3", "--r", "2", "--cap", "20", "--out",
                          out_file});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    const json doc = json::parse(slurp(out_file));
    CHECK(doc["command"] == "vdw");
    CHECK(doc["config"]["out"] == out_file);
    CHECK(doc["result"]["W"] == 9);
    std::filesystem::remove(out_file);
}

}  // TEST_SUITE
