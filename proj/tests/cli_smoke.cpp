// End-to-end checks of the command line tool: exit codes, byte-identical
// reruns, golden files. Invoked as: cli_smoke <path-to-permuto> <golden-dir>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void expect(bool cond, const std::string& what) {
    if (!cond) {
        ++failures;
        std::cerr << "FAIL " << what << "\n";
    } else {
        std::cout << "ok   " << what << "\n";
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run(const std::string& cmd) { return std::system(cmd.c_str()); }

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_smoke <permuto-binary> <golden-dir>\n";
        return 64;
    }
    const std::string bin = argv[1];
    const std::string golden = argv[2];
    const std::string tmp = "cli_smoke_tmp";

    // golden Poincare polynomials, n = 1..8
    for (int n = 1; n <= 8; ++n) {
        const std::string out = tmp + "_poincare.json";
        const std::string cmd = bin + " poincare --n " + std::to_string(n) +
                                " --format json > " + out + " 2>/dev/null";
        expect(run(cmd) == 0, "poincare --n " + std::to_string(n) + " exits 0");
        expect(slurp(out) == slurp(golden + "/poincare_n" + std::to_string(n) + ".json"),
               "poincare --n " + std::to_string(n) + " matches golden");
    }

    // golden ring dimensions, n = 1..5
    for (int n = 1; n <= 5; ++n) {
        const std::string out = tmp + "_dims.json";
        const std::string cmd = bin + " export --kind ring-dims --n " + std::to_string(n) +
                                " --out " + out + " 2>/dev/null";
        expect(run(cmd) == 0, "export ring-dims --n " + std::to_string(n) + " exits 0");
        expect(slurp(out) == slurp(golden + "/ring_dims_n" + std::to_string(n) + ".json"),
               "ring-dims --n " + std::to_string(n) + " matches golden");
    }

    // byte-identical reruns for a seeded suite
    {
        const std::string a = tmp + "_a.json", b = tmp + "_b.json";
        expect(run(bin + " verify --suite ring --format json --seed 7 > " + a + " 2>/dev/null") == 0,
               "verify --suite ring exits 0");
        expect(run(bin + " verify --suite ring --format json --seed 7 > " + b + " 2>/dev/null") == 0,
               "verify --suite ring rerun exits 0");
        expect(!slurp(a).empty() && slurp(a) == slurp(b), "verify output is byte-identical");
    }

    // fan export + partitions export counts
    {
        const std::string out = tmp + "_fan.json";
        expect(run(bin + " fan --n 2 --export " + out + " 2>/dev/null") == 0, "fan --export exits 0");
        const std::string text = slurp(out);
        expect(text.find("\"cones\"") != std::string::npos, "fan export mentions cones");
        expect(run(bin + " export --kind partitions --n 3 --out " + tmp + "_p.json 2>/dev/null") == 0,
               "export partitions exits 0");
        // 13 partitions of a 3-set
        const auto parts = nlohmann::json::parse(slurp(tmp + "_p.json"));
        expect(parts.is_array() && parts.size() == 13, "export partitions --n 3 lists 13 entries");
    }

    // ring --reduce on a quadratic-relation monomial reduces to zero
    {
        const std::string in = tmp + "_raw.json";
        std::ofstream(in) << R"({"B":[1,2,3],"factors":[[[1],[2,3]],[[2],[1,3]]]})";
        const std::string out = tmp + "_reduced.json";
        expect(run(bin + " ring --reduce " + in + " --format json > " + out + " 2>/dev/null") == 0,
               "ring --reduce exits 0");
        expect(slurp(out).find("[]") != std::string::npos, "bad pair reduces to zero");
    }

    // correlators: export a series, recover the family, run the round trip
    {
        const std::string series = tmp + "_series.json";
        expect(run(bin + " export --kind series --order 4 --dim 2 --indices 2 --seed 3 --out " +
                   series + " 2>/dev/null") == 0,
               "export series exits 0");
        const std::string family = tmp + "_family.json";
        expect(run(bin + " correlators --from-series " + series + " > " + family + " 2>/dev/null") ==
                   0,
               "correlators --from-series exits 0");
        expect(run(bin + " correlators --check " + family + " --order 4 >/dev/null 2>&1") == 0,
               "correlators --check passes on a recovered family");
        expect(run(bin + " correlators --roundtrip " + family + " >/dev/null 2>&1") == 0,
               "correlators --roundtrip exits 0");
    }

    // failure paths: nonzero exit codes
    {
        expect(run(bin + " verify --suite nonsense >/dev/null 2>&1") != 0,
               "unknown suite is rejected");
        expect(run(bin + " homology --n 5 --verify-lemma >/dev/null 2>&1") != 0,
               "lemma n=5 without --deep is rejected");
        expect(run(bin + " ring >/dev/null 2>&1") != 0, "ring without a mode is rejected");
    }

    for (const char* suffix :
         {"_poincare.json", "_dims.json", "_a.json", "_b.json", "_fan.json", "_p.json",
          "_raw.json", "_reduced.json", "_series.json", "_family.json"})
        std::remove((tmp + suffix).c_str());

    if (failures) std::cerr << failures << " cli checks failed\n";
    return failures;
}
