#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hsym/compositions.hpp"
#include "hsym/error.hpp"
#include "hsym/hopf.hpp"
#include "hsym/io.hpp"
#include "hsym/morphisms.hpp"
#include "hsym/ppartitions.hpp"
#include "hsym/report.hpp"
#include "hsym/signed_word.hpp"

namespace hsym::cli {

namespace {

enum class Format { json, text };

// Result of a command: a JSON value and its text rendering.
struct Output {
    json value;
    std::string text;
};

template <class Key>
Output combo(const LinComb<Key>& a, std::string_view symbol) {
    return Output{to_json(a), to_text(a, symbol)};
}

template <class Key>
Output tensor(const Tensor<Key>& t, std::string_view symbol) {
    return Output{to_json(t), to_text(t, symbol)};
}

bool is_permutation_algebra(const std::string& a) { return a == "hsym" || a == "ssym"; }

std::string_view symbol_of(const std::string& algebra) {
    if (algebra == "hsym") {
        return "H";
    }
    if (algebra == "ssym") {
        return "S";
    }
    if (algebra == "rqsym-f") {
        return "F";
    }
    return "M";
}

SignedPermutation parse_perm(const std::string& algebra, const std::string& text) {
    SignedPermutation p = parse_signed_permutation(text);
    if (algebra == "ssym" && std::any_of(p.entries().begin(), p.entries().end(), [](Letter a) { return a < 0; })) {
        throw ParseError("ssym takes unsigned permutations, got '" + text + "'");
    }
    return p;
}

RegularizedComposition parse_comp(const std::string& algebra, const std::string& text) {
    RegularizedComposition a = parse_regularized_composition(text);
    if (algebra == "qsym" && !a.is_composition()) {
        throw ParseError("qsym takes compositions without ε parts, got '" + text + "'");
    }
    return a;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot read poset file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Appends every law of `part` to `into`, prefixing law names with the suite.
void absorb(Report& into, const Report& part) {
    for (const auto& l : part.laws()) {
        LawResult& dst = into.law(part.suite() + ": " + l.law, l.budget);
        dst.passed += l.passed;
        dst.failed += l.failed;
        dst.counterexamples.insert(dst.counterexamples.end(), l.counterexamples.begin(), l.counterexamples.end());
    }
}

struct Options {
    std::string format = "json";
    std::string algebra;
    std::string lambda = "-1";
    std::vector<std::string> lambdas;
    std::vector<std::string> operands;
    std::string from;
    std::string to;
    std::string which;
    std::string poset;
    std::string basis;
    std::string suite;
    int vars = 0;
    long max_degree = 0;
    unsigned jobs = 1;
};

Output do_product(const Options& o) {
    const std::string& alg = o.algebra;
    const auto& x = o.operands[0];
    const auto& y = o.operands[1];
    if (alg == "hsym") {
        return combo(shifted_quasi_shuffle(parse_perm(alg, x), parse_perm(alg, y), Rational::parse(o.lambda)), "H");
    }
    if (alg == "ssym") {
        return combo(shifted_shuffle(parse_perm(alg, x), parse_perm(alg, y)), "S");
    }
    if (alg == "rqsym-f") {
        return combo(rqsym_product_F(parse_comp(alg, x), parse_comp(alg, y)), "F");
    }
    return combo(rqsym_product_M(parse_comp(alg, x), parse_comp(alg, y)), "M");
}

Output do_coproduct(const Options& o) {
    const std::string& alg = o.algebra;
    const auto& x = o.operands[0];
    if (is_permutation_algebra(alg)) {
        return tensor(hsym_coproduct(parse_perm(alg, x)), symbol_of(alg));
    }
    if (alg == "rqsym-f") {
        return tensor(rqsym_coproduct_F(parse_comp(alg, x)), "F");
    }
    return tensor(rqsym_coproduct_M(parse_comp(alg, x)), "M");
}

Output do_antipode(const Options& o) {
    const std::string& alg = o.algebra;
    const auto& x = o.operands[0];
    if (alg == "hsym") {
        return combo(antipode_graded(hsym_context(Rational::parse(o.lambda)), parse_perm(alg, x)), "H");
    }
    if (alg == "ssym") {
        return combo(antipode_graded(ssym_context(), parse_perm(alg, x)), "S");
    }
    if (alg == "rqsym-f") {
        return combo(rqsym_antipode_F(parse_comp(alg, x)), "F");
    }
    return combo(rqsym_antipode_M(parse_comp(alg, x)), "M");
}

Output do_convert(const Options& o) {
    if (o.from == o.to) {
        throw ParseError("--from and --to name the same basis");
    }
    const RegularizedComposition a = parse_regularized_composition(o.operands[0]);
    return o.from == "f" ? combo(f_to_m(a), "M") : combo(m_to_f(a), "F");
}

Output do_map(const Options& o) {
    const auto& x = o.operands[0];
    if (o.which == "d1" || o.which == "d2") {
        const SignedPermutation pi = parse_signed_permutation(x);
        if (o.which == "d1" &&
            std::any_of(pi.entries().begin(), pi.entries().end(), [](Letter a) { return a < 0; })) {
            throw ParseError("d1 takes unsigned permutations, got '" + x + "'");
        }
        return combo((o.which == "d1" ? d1(pi) : d2(pi)).combo, "F");
    }
    if (o.which == "phi2") {
        return combo(phi2(parse_signed_permutation(x)), "S");
    }
    const RegularizedComposition a = parse_regularized_composition(x);
    return o.which == "phi1M" ? combo(phi1_M(a), "M") : combo(phi1_F(a), "F");
}

Output do_gamma(const Options& o) {
    const SignedLabeledPoset P = parse_poset(read_file(o.poset));
    const auto extensions = linear_extensions(P);
    const LinComb<RegularizedComposition> f = gamma_F(P);
    json ext = json::array();
    std::string ext_text;
    for (const auto& pi : extensions) {
        ext.push_back(to_string(pi));
        ext_text += (ext_text.empty() ? "" : " ") + to_string(pi);
    }
    const TruncatedSeries series = gamma(P, o.vars);
    Output out;
    out.value = json{{"linear_extensions", std::move(ext)}, {"F", to_json(f)}, {"series", to_json(series)}};
    out.text = "L(P): " + (ext_text.empty() ? std::string("(none)") : ext_text) + "\nGamma(P) = " +
               to_text(f, "F") + "\nseries: " + to_text(series);
    return out;
}

Output do_expand(const Options& o) {
    const RegularizedComposition a = parse_regularized_composition(o.operands[0]);
    const TruncatedSeries s = o.basis == "m" ? expand_M(a, o.vars) : expand_F(a, o.vars);
    return Output{to_json(s), to_text(s)};
}

Report do_verify(const Options& o) {
    const long d = o.max_degree;
    if (o.suite == "hopf") {
        if (o.lambdas.empty()) {
            throw ParseError("verify --suite hopf needs at least one --lambda");
        }
        Report out("hopf");
        const HopfBudget budget = HopfBudget::from_max_degree(d);
        for (const auto& q : o.lambdas) {
            absorb(out, verify_hopf<SignedPermutation>(hsym_context(Rational::parse(q)), hsym_basis, budget, o.jobs));
        }
        absorb(out, verify_hopf<SignedPermutation>(ssym_context(), ssym_basis, budget, o.jobs));
        absorb(out, verify_hopf<RegularizedComposition>(rqsym_m_context(), rqsym_basis, budget, o.jobs));
        return out;
    }
    if (o.suite == "morphisms") {
        return verify_morphism_laws(MorphismBudget::from_max_degree(d), o.jobs);
    }
    if (o.suite == "square") {
        return verify_square(d, o.jobs);
    }
    return verify_gamma_theorems(GammaBudget::from_max_degree(d), o.jobs);
}

void emit(std::ostream& out, Format format, const Output& o) {
    if (format == Format::json) {
        out << o.value.dump(2) << '\n';
    } else {
        out << o.text << '\n';
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact computations in signed-permutation and regularized quasi-symmetric Hopf algebras", "hsym"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    const std::vector<std::string> algebras{"hsym", "ssym", "rqsym-m", "rqsym-f", "qsym"};
    auto algebra_cmd = [&](const std::string& name, const std::string& help, std::size_t operands) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("--algebra", o.algebra, "Algebra and basis")->required()->check(CLI::IsMember(algebras));
        c->add_option("--lambda", o.lambda, "Quasi-shuffle weight for hsym")->capture_default_str();
        c->add_option("operands", o.operands, "Basis keys")->required()->expected(static_cast<int>(operands));
        return c;
    };
    CLI::App* product = algebra_cmd("product", "Product of two basis elements", 2);
    CLI::App* coproduct = algebra_cmd("coproduct", "Coproduct of a basis element", 1);
    CLI::App* antipode = algebra_cmd("antipode", "Antipode of a basis element", 1);

    CLI::App* convert = app.add_subcommand("convert", "Change of basis between F and M");
    convert->add_option("--from", o.from, "Source basis")->required()->check(CLI::IsMember({"f", "m"}));
    convert->add_option("--to", o.to, "Target basis")->required()->check(CLI::IsMember({"f", "m"}));
    convert->add_option("operand", o.operands, "Regularized composition")->required()->expected(1);

    CLI::App* map = app.add_subcommand("map", "Apply one of the morphisms D1, D2, phi1, phi2");
    map->add_option("--which", o.which, "Morphism")
        ->required()
        ->check(CLI::IsMember({"d1", "d2", "phi1M", "phi1F", "phi2"}));
    map->add_option("operand", o.operands, "Basis key")->required()->expected(1);

    CLI::App* gamma_cmd = app.add_subcommand("gamma", "Generating function of signed P-partitions");
    gamma_cmd->add_option("--poset", o.poset, "Poset file with lines 'a < b' or 'a'")->required();
    gamma_cmd->add_option("--vars", o.vars, "Number of variables")->required()->check(CLI::PositiveNumber);

    CLI::App* expand = app.add_subcommand("expand", "Expand M or F in finitely many variables");
    expand->add_option("--basis", o.basis, "Basis")->required()->check(CLI::IsMember({"m", "f"}));
    expand->add_option("--vars", o.vars, "Number of variables")->required()->check(CLI::PositiveNumber);
    expand->add_option("operand", o.operands, "Regularized composition")->required()->expected(1);

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", o.suite, "Suite")
        ->required()
        ->check(CLI::IsMember({"hopf", "morphisms", "square", "gamma"}));
    verify->add_option("--max-degree", o.max_degree, "Degree budget")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--lambda", o.lambdas, "Quasi-shuffle weight (repeatable)")->allow_extra_args(false);
    verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitCode::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::parse_error;
    }

    const Format format = o.format == "text" ? Format::text : Format::json;
    try {
        if (verify->parsed()) {
            const Report r = do_verify(o);
            if (format == Format::json) {
                out << r.to_json().dump(2) << '\n';
            } else {
                out << r.to_text();
            }
            return r.ok() ? ExitCode::ok : ExitCode::verification_failed;
        }
        Output result;
        if (product->parsed()) {
            result = do_product(o);
        } else if (coproduct->parsed()) {
            result = do_coproduct(o);
        } else if (antipode->parsed()) {
            result = do_antipode(o);
        } else if (convert->parsed()) {
            result = do_convert(o);
        } else if (map->parsed()) {
            result = do_map(o);
        } else if (gamma_cmd->parsed()) {
            result = do_gamma(o);
        } else {
            result = do_expand(o);
        }
        emit(out, format, result);
        return ExitCode::ok;
    } catch (const std::invalid_argument& e) {
        // ParseError and malformed arguments of the core operations.
        err << "error: " << e.what() << '\n';
        return ExitCode::parse_error;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::parse_error;
    }
}

} // namespace hsym::cli
