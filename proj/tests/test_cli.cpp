#include <doctest.h>

#include <sstream>

#include "powsum/cli.hpp"

using namespace powsum;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("derive") {
    auto r = run({"derive", "--a0", "1", "--d", "1", "--power", "2"});
    CHECK(r.status == 0);
    CHECK(r.out == "1/3*n^3 + 1/2*n^2 + 1/6*n\n");
    CHECK(r.err.empty());

    r = run({"derive", "--a0", "1", "--d", "1", "--power", "3", "--eval-at", "3"});
    CHECK(r.out == "1/4*n^4 + 1/2*n^3 + 1/4*n^2\nS(3) = 36\n");

    r = run({"derive", "--a0", "0", "--d", "0", "--power", "4"});
    CHECK(r.out == "0\n");

    r = run({"derive", "--a0", "1", "--d", "1", "--power", "1", "--format", "latex"});
    CHECK(r.out == "\\frac{1}{2} n^{2} + \\frac{1}{2} n\n");

    r = run({"derive", "--a0=-1/2", "--d", "1/3", "--power", "0"});
    CHECK(r.out == "n\n");
}

TEST_CASE("derive structured output") {
    auto r = run({"derive", "--a0", "1", "--d", "1", "--power", "1", "--format", "structured"});
    CHECK(r.out ==
          R"({"degree":2,"coefficients":[{"power":2,"value":"1/2"},{"power":1,"value":"1/2"}]})"
          "\n");
    r = run({"derive", "--a0", "1", "--d", "1", "--power", "1", "--format", "structured", "--eval-at", "4"});
    CHECK(r.out ==
          R"({"formula":{"degree":2,"coefficients":[{"power":2,"value":"1/2"},{"power":1,"value":"1/2"}]},"n":4,"value":"10"})"
          "\n");
}

TEST_CASE("derive usage errors") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"derive", "--a0", "1", "--d", "1", "--power", "-1"},
             {"derive", "--a0", "x", "--d", "1", "--power", "1"},
             {"derive", "--a0", "1", "--d", "1/0", "--power", "1"},
             {"derive", "--a0", "1", "--power", "1"},
             {"derive", "--a0", "1", "--d", "1", "--power", "1", "--format", "html"},
             {"derive", "--a0", "1", "--d", "1", "--power", "1", "--eval-at", "-2"},
             {},
             {"integrate"},
         }) {
        const auto r = run(args);
        CHECK(r.status == 2);
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }
    CHECK(run({"derive", "--a0", "x", "--d", "1", "--power", "1"}).err.find("\"x\"") != std::string::npos);
}

TEST_CASE("bernoulli") {
    auto r = run({"bernoulli", "--upto", "7"});
    CHECK(r.status == 0);
    CHECK(r.out == "1/6\n0\n-1/30\n0\n1/42\n0\n");

    CHECK(run({"bernoulli", "--upto", "2"}).out == "1/6\n");

    r = run({"bernoulli", "--upto", "4", "--format", "structured"});
    CHECK(r.out == R"([{"k":2,"value":"1/6"},{"k":3,"value":"0"},{"k":4,"value":"-1/30"}])"
                   "\n");

    CHECK(run({"bernoulli", "--upto", "4", "--format", "latex"}).out == "\\frac{1}{6}\n0\n-\\frac{1}{30}\n");

    r = run({"bernoulli", "--upto", "1"});
    CHECK(r.status == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find(">= 2") != std::string::npos);
}

TEST_CASE("seqsum") {
    auto r = run({"seqsum", "--a0", "0", "--diff", "0,0,0,1", "--power", "1", "--eval-at", "2"});
    CHECK(r.status == 0);
    CHECK(r.out.substr(r.out.find('\n') + 1) == "S(2) = 1\n");

    CHECK(run({"seqsum", "--a0", "7", "--diff", "0", "--power", "1"}).out == "7*n\n");

    r = run({"seqsum", "--a0", "1", "--diff", "0,1", "--power", "2", "--eval-at", "3"});
    CHECK(r.out.substr(r.out.find('\n') + 1) == "S(3) = 21\n");

    for (const char* diff : {"", "1,,2", "1,2,", "a"}) {
        CAPTURE(diff);
        CHECK(run({"seqsum", "--a0", "1", "--diff", diff, "--power", "1"}).status == 2);
    }
    CHECK(run({"seqsum", "--a0", "1", "--diff", "1", "--power", "0"}).status == 2);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--max-power", "3", "--max-n", "5", "--grid", "1:1,-1/2:1/3"});
    CHECK(r.status == 0);
    CHECK(r.out.rfind("all ", 0) == 0);
    CHECK(r.out.find(" checks passed\n") != std::string::npos);

    r = run({"verify", "--max-n", "1", "--max-power", "2"});
    CHECK(r.status == 0);

    CHECK(run({"verify", "--max-n", "0"}).status == 2);
    CHECK(run({"verify", "--grid", "1"}).status == 2);
}

TEST_CASE("verify reports an injected corruption") {
    VerifyOptions options;
    options.max_power = 3;
    options.max_n = 5;
    options.power_sum = [](const ArithmeticSpec& spec, unsigned m) {
        Polynomial p = derive(spec, m).formula;
        if (m == 3)
            p += Polynomial::monomial(Rational(1), 2) - Polynomial::monomial(Rational(1), 1);
        return p;
    };
    std::ostringstream out, err;
    CHECK(cli::run_verify(options, out, err) == cli::verification_failed);
    CHECK(out.str().find("counterexample: check=telescoping spec=(a0=0, D=0) m=3") != std::string::npos);
    CHECK_FALSE(err.str().empty());
}

TEST_CASE("identical invocations give identical output") {
    const std::vector<std::string> args{"seqsum", "--a0", "1/2", "--diff", "1,-1/3,2", "--power", "3"};
    CHECK(run(args).out == run(args).out);
}
