#include "powsum/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "powsum/power_sum.hpp"
#include "powsum/render.hpp"
#include "powsum/sequence_sum.hpp"

namespace powsum::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const ParseError& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

RenderStyle parse_style(const std::string& text) {
    if (auto style = parse_render_style(text))
        return *style;
    throw UsageError("--format: unknown style \"" + text + "\" (expected plain, latex or structured)");
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep))
        parts.push_back(part);
    if (!text.empty() && text.back() == sep)
        parts.emplace_back();
    return parts;
}

Polynomial parse_coefficient_list(const std::string& text) {
    if (text.empty())
        throw UsageError("--diff: empty coefficient list");
    std::vector<Rational> coeffs;
    for (const auto& part : split(text, ','))
        coeffs.push_back(parse_rational_flag("--diff", part));
    return Polynomial(std::move(coeffs));
}

std::vector<ArithmeticSpec> parse_grid(const std::string& text) {
    std::vector<ArithmeticSpec> grid;
    for (const auto& entry : split(text, ',')) {
        const auto colon = entry.find(':');
        if (colon == std::string::npos)
            throw UsageError("--grid: entry \"" + entry + "\" is not of the form a0:D");
        grid.push_back({parse_rational_flag("--grid", entry.substr(0, colon)),
                        parse_rational_flag("--grid", entry.substr(colon + 1))});
    }
    if (grid.empty())
        throw UsageError("--grid: no entries");
    return grid;
}

// Formula, optionally followed by its value at eval_at.
void print_formula(std::ostream& out, const Polynomial& formula, RenderStyle style,
                   const std::optional<long long>& eval_at) {
    if (eval_at && *eval_at < 0)
        throw UsageError("--eval-at: n must be a non-negative integer");
    if (style == RenderStyle::structured) {
        const std::string rendered = render_polynomial(formula, style);
        if (!eval_at) {
            out << rendered << '\n';
            return;
        }
        ordered_json doc;
        doc["formula"] = ordered_json::parse(rendered);
        doc["n"] = *eval_at;
        doc["value"] = evaluate(formula, Rational(*eval_at)).to_string();
        out << doc.dump() << '\n';
        return;
    }
    out << render_polynomial(formula, style) << '\n';
    if (eval_at)
        out << "S(" << *eval_at << ") = " << evaluate(formula, Rational(*eval_at)).to_string() << '\n';
}

struct DeriveArgs {
    std::string a0;
    std::string d;
    long long power = 0;
    std::string format = "plain";
    std::optional<long long> eval_at;
};

struct BernoulliArgs {
    long long upto = 0;
    std::string format = "plain";
};

struct SeqsumArgs {
    std::string a0;
    std::string diff;
    long long power = 1;
    std::string format = "plain";
    std::optional<long long> eval_at;
};

struct VerifyArgs {
    long long max_power = 12;
    long long max_n = 50;
    std::string grid;
};

int cmd_derive(const DeriveArgs& args, std::ostream& out) {
    const ArithmeticSpec spec{parse_rational_flag("--a0", args.a0), parse_rational_flag("--d", args.d)};
    if (args.power < 0)
        throw UsageError("--power: must be >= 0");
    const RenderStyle style = parse_style(args.format);
    const ClosedFormSum sum = derive(spec, static_cast<unsigned>(args.power));
    print_formula(out, sum.formula, style, args.eval_at);
    return success;
}

int cmd_bernoulli(const BernoulliArgs& args, std::ostream& out) {
    if (args.upto < 2)
        throw UsageError("--upto: must be >= 2; the power-sum constants give B_k only for k >= 2");
    const RenderStyle style = parse_style(args.format);
    if (style == RenderStyle::structured) {
        ordered_json list = ordered_json::array();
        for (long long k = 2; k <= args.upto; ++k)
            list.push_back(ordered_json{{"k", k}, {"value", bernoulli(static_cast<unsigned>(k)).to_string()}});
        out << list.dump() << '\n';
        return success;
    }
    for (long long k = 2; k <= args.upto; ++k)
        out << render_polynomial(Polynomial::constant(bernoulli(static_cast<unsigned>(k))), style) << '\n';
    return success;
}

int cmd_seqsum(const SeqsumArgs& args, std::ostream& out) {
    const DifferenceSpec spec{parse_rational_flag("--a0", args.a0), parse_coefficient_list(args.diff)};
    if (args.power < 1)
        throw UsageError("--power: must be >= 1");
    const RenderStyle style = parse_style(args.format);
    const SequenceSum sum = derive_sum(spec, static_cast<unsigned>(args.power));
    print_formula(out, sum.formula, style, args.eval_at);
    return success;
}

}  // namespace

int run_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
    const VerifyReport report = run_verification(options);
    if (report.passed()) {
        out << "all " << report.checks << " checks passed\n";
        return success;
    }
    out << "verification failed after " << report.checks << " checks\n" << describe(*report.failure) << '\n';
    err << "verify: formula does not match its checks\n";
    return verification_failed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed forms for power sums of arithmetic and polynomial-difference sequences", "powsum"};
    app.require_subcommand(1);

    DeriveArgs derive_args;
    auto* derive_cmd = app.add_subcommand("derive", "Closed form of sum_{k=1..n} (a0 + D(k-1))^power");
    derive_cmd->add_option("--a0", derive_args.a0, "First term, p or p/q")->required();
    derive_cmd->add_option("--d", derive_args.d, "Common difference, p or p/q")->required();
    derive_cmd->add_option("--power", derive_args.power, "Power m >= 0")->required();
    derive_cmd->add_option("--format", derive_args.format, "plain | latex | structured")->capture_default_str();
    derive_cmd->add_option("--eval-at", derive_args.eval_at, "Also print S(n) at this integer n >= 0");

    BernoulliArgs bernoulli_args;
    auto* bernoulli_cmd = app.add_subcommand("bernoulli", "Print B_2 .. B_upto from the power-sum constants");
    bernoulli_cmd->add_option("--upto", bernoulli_args.upto, "Largest index, >= 2")->required();
    bernoulli_cmd->add_option("--format", bernoulli_args.format, "plain | latex | structured")->capture_default_str();

    SeqsumArgs seqsum_args;
    auto* seqsum_cmd = app.add_subcommand(
        "seqsum", "Closed form of sum_{k=1..n} x(k)^power where x(1) = a0, x(k+1) = x(k) + D(k)");
    seqsum_cmd->add_option("--a0", seqsum_args.a0, "First term, p or p/q")->required();
    seqsum_cmd->add_option("--diff", seqsum_args.diff,
                           "Coefficients of D(n) in ascending order: c0,c1,c2,... means c0 + c1*n + c2*n^2 + ...")
        ->required();
    seqsum_cmd->add_option("--power", seqsum_args.power, "Power m >= 1")->capture_default_str();
    seqsum_cmd->add_option("--format", seqsum_args.format, "plain | latex | structured")->capture_default_str();
    seqsum_cmd->add_option("--eval-at", seqsum_args.eval_at, "Also print S(n) at this integer n >= 0");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check derived formulas against brute-force sums and identities");
    verify_cmd->add_option("--max-power", verify_args.max_power, "Largest power checked")->capture_default_str();
    verify_cmd->add_option("--max-n", verify_args.max_n, "Largest n checked against brute force")
        ->capture_default_str();
    verify_cmd->add_option("--grid", verify_args.grid, "Specs to check as a0:D,a0:D,... (default: built-in grid)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_error;
    }

    try {
        if (derive_cmd->parsed())
            return cmd_derive(derive_args, out);
        if (bernoulli_cmd->parsed())
            return cmd_bernoulli(bernoulli_args, out);
        if (seqsum_cmd->parsed())
            return cmd_seqsum(seqsum_args, out);

        if (verify_args.max_power < 0)
            throw UsageError("--max-power: must be >= 0");
        if (verify_args.max_n < 1)
            throw UsageError("--max-n: must be >= 1");
        VerifyOptions options;
        options.max_power = static_cast<unsigned>(verify_args.max_power);
        options.max_n = static_cast<std::uint64_t>(verify_args.max_n);
        if (!verify_args.grid.empty())
            options.grid = parse_grid(verify_args.grid);
        return run_verify(options, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
}

}  // namespace powsum::cli
