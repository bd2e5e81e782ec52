#include "glam/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "glam/expr.hpp"
#include "glam/glambda.hpp"
#include "glam/serialize.hpp"
#include "glam/symbol_map.hpp"
#include "glam/uea.hpp"
#include "glam/verify.hpp"

namespace glam {

namespace {

struct Options {
    OutputFormat format = OutputFormat::json;
    SignConvention convention = SignConvention::corrected;
    std::string lambda_text;
};

Value specialize(const Value& v, const std::optional<Rational>& lambda) {
    if (!lambda) return v;
    return std::visit([&](const auto& x) -> Value { return x.specialize(*lambda); }, v);
}

LambdaPoly specialize(const LambdaPoly& p, const std::optional<Rational>& lambda) {
    return lambda ? LambdaPoly(p.eval(*lambda)) : p;
}

SymbolPoly symbol_of(const std::string& text, SignConvention conv) {
    const Value v = elaborate(parse(text));
    if (const auto* u = std::get_if<UEAElement>(&v)) return sigma(embed(*u), conv);
    if (const auto* A = std::get_if<DiffOp>(&v)) return sigma(*A, conv);
    throw TypeError(0, "symbol: expected an operator or enveloping-algebra expression");
}

Value bracket_of(const std::string& a, const std::string& b) {
    const Expr ea = parse(a);
    const Expr eb = parse(b);
    if (ea.type == Universe::uea || eb.type == Universe::uea) {
        const auto u = std::get<UEAElement>(elaborate_as(ea, Universe::uea));
        const auto v = std::get<UEAElement>(elaborate_as(eb, Universe::uea));
        return gl_bracket_image(u, v);
    }
    const auto A = std::get<DiffOp>(elaborate_as(ea, Universe::op));
    const auto B = std::get<DiffOp>(elaborate_as(eb, Universe::op));
    return commutator(A, B);
}

int run_verify(unsigned n_max, std::ostream& out) {
    const auto results = run_oracle_suite(n_max);
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        out << (r.passed ? "PASS  " : "FAIL  ");
        if (r.detail.empty())
            out << r.name;
        else
            out << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << r.detail;
        out << '\n';
    }
    out << (all ? "all checks passed" : "some checks FAILED") << '\n';
    return all ? 0 : 2;
}

}  // namespace

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symbol calculus for differential operators on densities", "glam"};
    app.require_subcommand(1);

    Options opt;
    const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::json}, {"latex", OutputFormat::latex}};
    const std::map<std::string, SignConvention> conventions{{"corrected", SignConvention::corrected},
                                                            {"printed", SignConvention::printed}};
    app.add_option("--format", opt.format, "Output format")->transform(CLI::CheckedTransformer(formats));
    app.add_option("--convention", opt.convention, "Sign convention of the symbol map")
        ->transform(CLI::CheckedTransformer(conventions));
    app.add_option("--lambda", opt.lambda_text, "Specialize the result at this rational value of l");

    std::string expr_a, expr_b;
    unsigned n = 0, k = 0, n_max = 5;
    std::vector<std::string> field_texts;

    auto* symbol = app.add_subcommand("symbol", "Symbol of an operator, or of the image of an enveloping-algebra element");
    symbol->add_option("expr", expr_a)->required();
    auto* quant = app.add_subcommand("quantize", "Operator whose symbol is the given xi-polynomial");
    quant->add_option("expr", expr_a)->required();
    auto* emb = app.add_subcommand("embed", "Operator image of an enveloping-algebra element");
    emb->add_option("expr", expr_a)->required();
    auto* brk = app.add_subcommand("bracket", "Image of the gl bracket, or commutator of two operators");
    brk->add_option("a", expr_a)->required();
    brk->add_option("b", expr_b)->required();
    auto* pnk = app.add_subcommand("pnk", "Coefficient polynomial P(n, k) in l");
    pnk->add_option("n", n)->required();
    pnk->add_option("k", k)->required();
    auto* ak = app.add_subcommand("ak", "Invariant operator A_k on the given fields");
    ak->add_option("k", k)->required();
    ak->add_option("fields", field_texts)->required();
    auto* ver = app.add_subcommand("verify", "Run the oracle suite and print a pass/fail table");
    ver->add_option("--n-max", n_max, "Largest order to check")->check(CLI::Range(1u, 5u));

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        std::optional<Rational> lambda;
        if (!opt.lambda_text.empty()) lambda = Rational::parse(opt.lambda_text);
        const auto print = [&](const Value& v) { out << emit(specialize(v, lambda), opt.format) << '\n'; };

        if (*symbol) {
            print(symbol_of(expr_a, opt.convention));
        } else if (*quant) {
            print(quantize(std::get<SymbolPoly>(elaborate_as(parse(expr_a), Universe::symbol)), opt.convention));
        } else if (*emb) {
            print(embed(std::get<UEAElement>(elaborate_as(parse(expr_a), Universe::uea))));
        } else if (*brk) {
            print(bracket_of(expr_a, expr_b));
        } else if (*pnk) {
            out << emit(specialize(pnk_polynomial(n, k, opt.convention), lambda), opt.format) << '\n';
        } else if (*ak) {
            std::vector<PolyField> fields;
            for (const auto& t : field_texts)
                fields.push_back(as_vector_field(std::get<DiffOp>(elaborate_as(parse(t), Universe::op))));
            print(SymbolPoly::from_component(ak_operator(k, fields), 0));
        } else if (*ver) {
            return run_verify(n_max, out);
        }
        return 0;
    } catch (const SyntaxError& e) {
        err << "syntax error " << e.what() << '\n';
        return 1;
    } catch (const ExprError& e) {
        err << "type error " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace glam
