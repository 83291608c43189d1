// End-to-end checks of the installed command line: exit codes, pipelines,
// and certificate round-trips.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "apg/canonical.hpp"
#include "apg/json_io.hpp"
#include "apg/recognition.hpp"

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "[FAIL] " << what << "\n";
        ++failures;
    }
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_data = "") {
    std::string cmd = std::string(APG_CLI_PATH) + " " + args;
    if (!stdin_data.empty()) {
        std::string tmp = "cli_test_stdin.tmp";
        FILE* f = std::fopen(tmp.c_str(), "w");
        std::fwrite(stdin_data.data(), 1, stdin_data.size(), f);
        std::fclose(f);
        cmd += " < " + tmp;
    }
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t k;
    while ((k = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), k);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string first_line(const std::string& s) {
    return s.substr(0, s.find('\n'));
}

}  // namespace

int main() {
    using namespace apg;

    // gen emits graph6 for registry keys
    RunResult gen_dw3 = run("gen DW:3");
    expect(gen_dw3.exit_code == 0, "gen DW:3 exits 0");
    expect(is_isomorphic(graph6_decode(first_line(gen_dw3.out)), complete_graph(5)),
           "gen DW:3 is K5");

    RunResult gen_m3 = run("gen M:3");
    expect(is_isomorphic(graph6_decode(first_line(gen_m3.out)), complete_bipartite(3, 3)),
           "gen M:3 is K33");

    RunResult gen_w4 = run("gen W:4");
    expect(graph6_decode(first_line(gen_w4.out)).order() == 5, "gen W:4 has five vertices");

    RunResult bad = run("gen NOPE");
    expect(bad.exit_code == 2, "unknown key exits 2");

    // exit codes on the golden trio
    expect(run("check --name K5 --method definition").exit_code == 0, "K5 checks clean");
    expect(run("check --name K33+").exit_code == 1, "K33+ is neither: exit 1");
    expect(run("check", "garbage!!!\n").exit_code == 2, "parse error: exit 2");

    RunResult k4 = run("check --name K5 --method definition");
    expect(k4.out.find("almost-planar") != std::string::npos, "K5 reads almost-planar");
    expect(run("check --name K33+").out.find("neither") != std::string::npos,
           "K33+ reads neither");

    // pipeline composability: gen X | check equals the in-process decision
    for (const std::string& key :
         {std::string("K5"), std::string("K33"), std::string("W:4"), std::string("DW:5"),
          std::string("M:4"), std::string("C2:7"), std::string("AW:6"), std::string("EX1"),
          std::string("EX2"), std::string("EX3"), std::string("EX6"), std::string("EX8"),
          std::string("K5+"), std::string("K33+"), std::string("K5h"), std::string("K33h"),
          std::string("K5oe"), std::string("K33oe"),
          std::string("Wclass:3,none;4,0;4,1")}) {
        RunResult g6 = run("gen '" + key + "'");
        expect(g6.exit_code == 0, "gen " + key);
        RunResult piped = run("check --method definition", g6.out);
        Graph g = graph6_decode(first_line(g6.out));
        std::string want = to_string(decide_by_definition(g).cls);
        expect(piped.out.find(want) != std::string::npos, "gen|check verdict for " + key);
    }

    // JSON output round-trips through certify
    RunResult json_out = run("check --json", run("gen K5").out + run("gen W:5").out +
                                                 run("gen K33+").out);
    expect(json_out.exit_code == 1, "json check exit reflects the worst verdict");
    RunResult certified = run("certify", json_out.out);
    expect(certified.exit_code == 0, "certify accepts fresh certificates");
    std::istringstream lines(certified.out);
    std::string line;
    int ok_lines = 0;
    while (std::getline(lines, line))
        if (line == "ok") ++ok_lines;
    expect(ok_lines == 3, "all three certificate lines verify");

    // minor queries answer with models
    RunResult minor_yes = run("minor --host M:5 --pattern K33 --json");
    expect(minor_yes.exit_code == 0, "minor query completes");
    expect(minor_yes.out.find("\"present\":true") != std::string::npos, "K33 <= M5");
    RunResult minor_no = run("minor --host W:8 --pattern K5 --json");
    expect(minor_no.out.find("\"present\":false") != std::string::npos, "K5 not<= W8");

    // enumeration matches the library count and comes out sorted
    RunResult enum4 = run("enumerate 4");
    int lines4 = 0;
    std::istringstream e4(enum4.out);
    std::string prev, cur;
    bool sorted = true;
    while (std::getline(e4, cur)) {
        if (!prev.empty() && cur < prev) sorted = false;
        prev = cur;
        ++lines4;
    }
    expect(lines4 == 11, "11 graphs on four vertices");
    expect(sorted, "enumeration output is sorted");

    RunResult enum6 = run("enumerate 6 --filter triconnected --filter nonplanar");
    std::istringstream e6(enum6.out);
    bool saw_k33 = false;
    while (std::getline(e6, cur))
        if (is_isomorphic(graph6_decode(cur), complete_bipartite(3, 3))) saw_k33 = true;
    expect(saw_k33, "filtered enumeration finds K33");

    // verify subcommand: a tiny suite run end to end
    expect(run("verify figures").exit_code == 0, "verify figures passes");
    expect(run("verify nonsense").exit_code == 2, "unknown suite: exit 2");

    std::remove("cli_test_stdin.tmp");
    if (failures == 0) {
        std::cout << "cli tests: all passed\n";
        return 0;
    }
    std::cerr << failures << " cli test(s) failed\n";
    return 1;
}
