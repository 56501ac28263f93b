// End-to-end checks of the command line tool: exit codes, output contracts,
// determinism.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(PZETA_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, "popen failed"};
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

void expect(bool ok, const std::string& what, const RunResult& r) {
    if (!ok) {
        ++failures;
        std::cout << "FAIL  " << what << "\n--- exit " << r.exit_code << ", output:\n"
                  << r.output << "---\n";
    } else {
        std::cout << "ok    " << what << "\n";
    }
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main() {
    auto z1 = run("zeta --prime 3 --n 2 --form x1^2+x2^2 --depth 4");
    expect(z1.exit_code == 0 && contains(z1.output, "CONSISTENT") &&
               contains(z1.output, "q^-2*t^2"),
           "zeta: anisotropic closed form, consistent", z1);

    auto z2 = run("zeta --prime 3 --n 2 --form x1*x2 --depth 4");
    expect(z2.exit_code == 0 && contains(z2.output, "^2") && contains(z2.output, "4/9"),
           "zeta: x1*x2 closed form with a double factor", z2);

    auto z3 = run("zeta --prime 3 --n 2 --form x1^2+x2");
    expect(z3.exit_code == 2 && contains(z3.output, "homogeneous"),
           "zeta: non-homogeneous input exits 2", z3);

    auto s1 = run("solve --prime 3 --n 3 --form 3*x1^2+x2^2+x3^2 --beta 1 --json");
    expect(s1.exit_code == 0 && contains(s1.output, "\"coefficient\": \"4/3\"") &&
               contains(s1.output, "\"exponent\": \"-1\""),
           "solve: n=3 catalog form, coefficient 1 + p^-1", s1);

    auto s2 = run("solve --prime 3 --n 2 --form x1*x2 --beta 1");
    expect(s2.exit_code == 3 && contains(s2.output, "pole"),
           "solve: pole of Z at s=-1 exits 3", s2);

    auto s3 = run("solve --prime 3 --n 2 --form x1^2+x2^2 --beta 1");
    expect(s3.exit_code == 3 && contains(s3.output, "n/d"), "solve: beta = n/d exits 3", s3);

    auto g1 = run(
        "green --prime 3 --n 2 --form x1^2+x2^2 --beta 1 --lambda 1 --level 1 --depth 3 "
        "--eps 1/1000000000000 --json");
    expect(g1.exit_code == 0 && contains(g1.output, "0.909891433") &&
               contains(g1.output, "\"M=1\": \"9/10\"") &&
               contains(g1.output, "\"M=2\": \"829/910\""),
           "green: exact pairing and exact partial sums", g1);

    auto g2 = run("green --prime 3 --n 2 --form x1^2+x2^2 --beta 1 --lambda 0");
    expect(g2.exit_code == 2 && contains(g2.output, "lambda"), "green: lambda = 0 exits 2", g2);

    auto g3 = run("green --prime 3 --n 2 --form x1^2+x2^2 --beta 1 --lambda 1 --level 1 --depth 0 --json");
    expect(g3.exit_code == 0 && contains(g3.output, "\"M=0\": \"1\""),
           "green: depth 0 partial sum is the bare 1/lambda", g3);

    auto g4 = run(
        "green --prime 3 --n 2 --form x1^2+x2^2 --beta 1 --lambda 1 --level 1 --depth 1 "
        "--eps 1e-12 --json");
    expect(g4.exit_code == 0 && contains(g4.output, "0.909891433"),
           "green: scientific-notation eps is parsed exactly", g4);

    auto v1 = run("verify --prime 3 --n 2 --form x1^2+x2^2");
    expect(v1.exit_code == 0 && !contains(v1.output, "FAIL"), "verify: catalog form passes", v1);

    auto v2 = run("verify --prime 7 --n 2 --form x1^3+x2^3 --phi '2*W[-1] + 1/3*W[2]'");
    expect(v2.exit_code == 0 && !contains(v2.output, "FAIL"),
           "verify: cubic through stationary phase passes with a custom test function", v2);

    auto v3 = run(
        "verify --prime 3 --n 2 --form x1*x2 "
        "--zeta '{\"q\":\"3\",\"num\":[\"2/3\"],\"den_factors\":[[1,\"1\",1,1]]}'");
    expect(v3.exit_code == 1 && contains(v3.output, "mass_consistency") &&
               contains(v3.output, "t^0"),
           "verify: wrong user zeta fails with the mismatch location", v3);

    auto c1 = run("catalog --prime 3 --n 4");
    expect(c1.exit_code == 0 && contains(c1.output, "x1^2 - 2*x2^2 - 3*x3^2 + 6*x4^2"),
           "catalog: quaternary form at p = 3", c1);

    auto d1 = run("zeta --prime 5 --n 2 --form x1*x2 --depth 5 --json");
    auto d2 = run("zeta --prime 5 --n 2 --form x1*x2 --depth 5 --json");
    expect(d1.exit_code == 0 && d1.output == d2.output, "deterministic JSON output", d1);

    auto b1 = run("zeta --prime 5 --n 3 --form x1^2+x2^2+x3^2 --depth 6",
                  "PZETA_ENUM_BUDGET=50");
    expect(b1.exit_code == 4 && contains(b1.output, "budget"),
           "budget override via environment exits 4", b1);

    if (failures == 0) std::cout << "all cli checks passed\n";
    return failures == 0 ? 0 : 1;
}
