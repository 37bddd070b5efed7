// Command-line front end: ordinal arithmetic, interval sets, finite
// partition checks and Erdos-Milner derivations. Invoked either as
// `ordcalc <group> <command>` or through the `ord`/`iset`/`ramsey`/`em`
// symlinks. Results go to stdout, diagnostics to stderr; exit code 0 on
// success/true, 1 on false/refuted, 2 on error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordcalc/coloring.hpp"
#include "ordcalc/derivation.hpp"
#include "ordcalc/interval_set.hpp"
#include "ordcalc/json_io.hpp"
#include "ordcalc/ordinal.hpp"
#include "ordcalc/parse.hpp"

using namespace ordcalc;
using nlohmann::json;

namespace {

struct Cli {
    bool as_json = false;
    bool unicode = false;
    int exit_code = 0;

    void emit(const std::string& kind, json body, const std::string& text) const {
        if (as_json)
            std::cout << payload(kind, std::move(body)).dump(2) << "\n";
        else
            std::cout << text << "\n";
    }
};

std::string render_statement(const PartitionStatement& s, bool unicode) {
    return render(s.source, unicode) + " -> (" + render(s.goals[0], unicode) + ", " +
           render(s.goals[1], unicode) + ")";
}

std::string summarize_rules(const Derivation& d) {
    std::string out = rule_name(d.rule);
    if (!d.premises.empty()) {
        out += "(";
        for (std::size_t i = 0; i < d.premises.size(); ++i) {
            if (i)
                out += ", ";
            out += summarize_rules(d.premises[i]);
        }
        out += ")";
    }
    return out;
}

json slurp_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw error("cannot open file '" + path + "'");
    json j;
    in >> j;
    return j;
}

std::vector<std::size_t> parse_goal_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ','))
        out.push_back(parse_natural(piece).convert_to<std::size_t>());
    if (out.empty())
        throw error("goal list must not be empty");
    return out;
}

void emit_derivation(Cli& cli, const Derivation& d) {
    std::string text = render_statement(d.conclusion, cli.unicode) +
                       "\nderivation: " + summarize_rules(d) + "\nverified: yes";
    cli.emit("derivation", derivation_to_json(d), text);
}

void setup_ord(CLI::App& group, Cli& cli) {
    auto* eval_cmd = group.add_subcommand("eval", "canonical form of an expression");
    auto expr = std::make_shared<std::string>();
    eval_cmd->add_option("expr", *expr, "ordinal expression")->required();
    eval_cmd->callback([&cli, expr] {
        Ordinal a = parse_ordinal(*expr);
        cli.emit("ordinal", ordinal_to_json(a), render(a, cli.unicode));
    });

    auto* cmp_cmd = group.add_subcommand("cmp", "compare two expressions");
    auto lhs = std::make_shared<std::string>(), rhs = std::make_shared<std::string>();
    cmp_cmd->add_option("lhs", *lhs)->required();
    cmp_cmd->add_option("rhs", *rhs)->required();
    cmp_cmd->callback([&cli, lhs, rhs] {
        auto c = cmp(parse_ordinal(*lhs), parse_ordinal(*rhs));
        std::string rel = c == std::strong_ordering::less    ? "<"
                          : c == std::strong_ordering::equal ? "="
                                                              : ">";
        cli.emit("comparison", {{"relation", rel}}, rel);
    });

    auto* cnf_cmd = group.add_subcommand("cnf", "Cantor normal form term list");
    auto cnf_expr = std::make_shared<std::string>();
    cnf_cmd->add_option("expr", *cnf_expr)->required();
    cnf_cmd->callback([&cli, cnf_expr] {
        Ordinal a = parse_ordinal(*cnf_expr);
        std::string text;
        for (const CnfTerm& t : a.terms()) {
            if (!text.empty())
                text += "\n";
            text += "exponent=" + render(t.exponent, cli.unicode) +
                    " coefficient=" + t.coefficient.str();
        }
        if (a.is_zero())
            text = "0 (no terms)";
        cli.emit("ordinal", ordinal_to_json(a), text);
    });

    auto* ind_cmd = group.add_subcommand("indecomp", "additively indecomposable?");
    auto ind_expr = std::make_shared<std::string>();
    ind_cmd->add_option("expr", *ind_expr)->required();
    ind_cmd->callback([&cli, ind_expr] {
        bool yes = is_indecomposable(parse_ordinal(*ind_expr));
        cli.emit("indecomposable", {{"indecomposable", yes}}, yes ? "yes" : "no");
        cli.exit_code = yes ? 0 : 1;
    });

    auto* split_cmd = group.add_subcommand("split", "canonical decomposable split");
    auto split_expr = std::make_shared<std::string>();
    split_cmd->add_option("expr", *split_expr)->required();
    split_cmd->callback([&cli, split_expr] {
        auto s = split_decomposable(parse_ordinal(*split_expr));
        if (s) {
            json body = {{"decomposable", true},
                         {"left", ordinal_to_json(s->first)},
                         {"right", ordinal_to_json(s->second)}};
            cli.emit("split", body,
                     "(" + render(s->first, cli.unicode) + ", " + render(s->second, cli.unicode) + ")");
        } else {
            cli.emit("split", {{"decomposable", false}}, "indecomposable");
            cli.exit_code = 1;
        }
    });

    auto* code_cmd = group.add_subcommand("code", "godel code of an ordinal");
    auto code_expr = std::make_shared<std::string>();
    code_cmd->add_option("expr", *code_expr)->required();
    code_cmd->callback([&cli, code_expr] {
        Nat code = godel_code(parse_ordinal(*code_expr));
        cli.emit("code", {{"code", code.str()}}, code.str());
    });

    auto* decode_cmd = group.add_subcommand("decode", "decode a natural to an ordinal");
    auto decode_n = std::make_shared<std::string>();
    decode_cmd->add_option("natural", *decode_n)->required();
    decode_cmd->callback([&cli, decode_n] {
        auto a = godel_decode(parse_natural(*decode_n));
        if (a) {
            cli.emit("decode", {{"found", true}, {"ordinal", ordinal_to_json(*a)}},
                     render(*a, cli.unicode));
        } else {
            cli.emit("decode", {{"found", false}}, "none");
            cli.exit_code = 1;
        }
    });
}

void setup_iset(CLI::App& group, Cli& cli) {
    auto* otype_cmd = group.add_subcommand("otype", "order type of an interval set");
    auto set_text = std::make_shared<std::string>();
    otype_cmd->add_option("set", *set_text, "interval set, e.g. [0,w)+[w*2,w*2+5)")->required();
    otype_cmd->callback([&cli, set_text] {
        Ordinal t = order_type(parse_interval_set(*set_text));
        cli.emit("ordinal", ordinal_to_json(t), render(t, cli.unicode));
    });

    auto* trim_cmd = group.add_subcommand("trim", "A2 above x inside A1, preserving the type");
    auto a_text = std::make_shared<std::string>(), a1_text = std::make_shared<std::string>();
    auto x_text = std::make_shared<std::string>(), alpha_text = std::make_shared<std::string>();
    trim_cmd->add_option("--A", *a_text, "ambient set A")->required();
    trim_cmd->add_option("--A1", *a1_text, "subset A1")->required();
    trim_cmd->add_option("--x", *x_text, "element of A")->required();
    trim_cmd->add_option("--alpha", *alpha_text, "indecomposable order type")->required();
    trim_cmd->callback([&cli, a_text, a1_text, x_text, alpha_text] {
        IntervalSet a2 = trim_above(parse_interval_set(*a_text), parse_interval_set(*a1_text),
                                    parse_ordinal(*x_text), parse_ordinal(*alpha_text));
        cli.emit("interval_set", interval_set_to_json(a2), render_interval_set(a2, cli.unicode));
    });

    auto* seg_cmd = group.add_subcommand("segment", "partition [0,beta) along finite F");
    auto beta_text = std::make_shared<std::string>(), f_text = std::make_shared<std::string>();
    seg_cmd->add_option("--beta", *beta_text)->required();
    seg_cmd->add_option("--F", *f_text, "comma-separated ordinals");
    seg_cmd->callback([&cli, beta_text, f_text] {
        auto pieces = segment_partition(parse_ordinal(*beta_text), parse_ordinal_list(*f_text));
        json arr = json::array();
        std::string text;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            bool singleton = i % 2 == 1;
            arr.push_back({{"role", singleton ? "singleton" : "segment"},
                           {"set", interval_set_to_json(pieces[i])}});
            if (!text.empty())
                text += "\n";
            if (singleton)
                text += "v" + std::to_string((i + 1) / 2) + ": {" +
                        render(pieces[i].intervals().front().lo, cli.unicode) + "}";
            else
                text += "D" + std::to_string(i / 2) + ": " +
                        render_interval_set(pieces[i], cli.unicode);
        }
        cli.emit("segments", {{"pieces", arr}}, text);
    });

    auto* strong_cmd = group.add_subcommand("strong", "split D into indecomposable-type pieces");
    auto d_text = std::make_shared<std::string>(), sbeta_text = std::make_shared<std::string>();
    strong_cmd->add_option("--D", *d_text)->required();
    strong_cmd->add_option("--beta", *sbeta_text)->required();
    strong_cmd->callback([&cli, d_text, sbeta_text] {
        auto pieces = strong_decompose_set(parse_interval_set(*d_text), parse_ordinal(*sbeta_text));
        json parr = json::array(), tarr = json::array();
        std::string text;
        for (const IntervalSet& p : pieces) {
            parr.push_back(interval_set_to_json(p));
            tarr.push_back(render(order_type(p)));
            if (!text.empty())
                text += "\n";
            text += render_interval_set(p, cli.unicode) + "  (type " +
                    render(order_type(p), cli.unicode) + ")";
        }
        if (pieces.empty())
            text = "empty";
        cli.emit("strong_pieces", {{"pieces", parr}, {"types", tarr}}, text);
    });
}

void setup_ramsey(CLI::App& group, Cli& cli) {
    auto* check_cmd = group.add_subcommand("check", "decide n -> (goals)^2 exhaustively");
    auto n = std::make_shared<std::size_t>(0);
    auto goals_text = std::make_shared<std::string>();
    auto cap = std::make_shared<std::size_t>(0);
    auto witness_file = std::make_shared<std::string>();
    check_cmd->add_option("--n", *n, "vertex count")->required();
    check_cmd->add_option("--goals", *goals_text, "comma-separated goal sizes")->required();
    auto* cap_opt = check_cmd->add_option("--cap", *cap, "exhaustive-search cap on n");
    check_cmd->add_option("--witness", *witness_file,
                          "coloring file to verify as a counterexample");
    check_cmd->callback([&cli, n, goals_text, cap, cap_opt, witness_file] {
        std::vector<std::size_t> goals = parse_goal_list(*goals_text);
        ArrowResult r;
        if (!witness_file->empty()) {
            r = check_arrow_witness(*n, goals, coloring_from_json(slurp_json(*witness_file)));
        } else {
            ArrowOptions opt;
            if (cap_opt->count() > 0)
                opt.cap = *cap;
            r = check_arrow_finite(*n, goals, opt);
        }
        json body = {{"verdict", r.verdict == ArrowVerdict::holds      ? "holds"
                                 : r.verdict == ArrowVerdict::refuted ? "refuted"
                                                                       : "inconclusive"},
                     {"n", *n},
                     {"goals", goals},
                     {"detail", r.detail}};
        std::string text = body["verdict"].get<std::string>();
        if (r.counterexample) {
            body["witness"] = coloring_to_json(*r.counterexample);
            text += "\n" + payload("coloring", coloring_to_json(*r.counterexample)).dump(2);
        } else if (!r.detail.empty()) {
            text += " (" + r.detail + ")";
        }
        cli.emit("arrow_check", body, text);
        cli.exit_code = r.verdict == ArrowVerdict::holds    ? 0
                        : r.verdict == ArrowVerdict::refuted ? 1
                                                             : 2;
    });

    auto* homog_cmd = group.add_subcommand("homog", "search a monochromatic set in a table");
    auto coloring_file = std::make_shared<std::string>();
    auto color = std::make_shared<int>(0);
    auto size = std::make_shared<std::size_t>(0);
    homog_cmd->add_option("--coloring", *coloring_file, "coloring JSON file")->required();
    homog_cmd->add_option("--color", *color)->required();
    homog_cmd->add_option("--size", *size)->required();
    homog_cmd->callback([&cli, coloring_file, color, size] {
        PairColoring c = coloring_from_json(slurp_json(*coloring_file));
        auto found = find_homogeneous(c, *color, *size);
        if (found) {
            json elems = json::array();
            std::string text = "{";
            for (const Ordinal& x : found->elements()) {
                elems.push_back(render(x));
                if (text.size() > 1)
                    text += ", ";
                text += render(x, cli.unicode);
            }
            text += "}";
            cli.emit("homog", {{"found", true}, {"set", elems}}, text);
        } else {
            cli.emit("homog", {{"found", false}}, "none");
            cli.exit_code = 1;
        }
    });

    auto* witness_cmd = group.add_subcommand("witness", "rule coloring for a negative relation");
    auto kind = std::make_shared<std::string>();
    auto alpha_text = std::make_shared<std::string>();
    witness_cmd->add_option("--kind", *kind, "sierpinski or decomposable")
        ->required()
        ->check(CLI::IsMember({"sierpinski", "decomposable"}));
    witness_cmd->add_option("--alpha", *alpha_text, "domain bound")->required();
    witness_cmd->callback([&cli, kind, alpha_text] {
        Ordinal alpha = parse_ordinal(*alpha_text);
        PairColoring c =
            *kind == "sierpinski" ? sierpinski_coloring(alpha) : decomposable_coloring(alpha);
        json body = coloring_to_json(c);
        std::string text = *kind + " rule coloring on pairs below " + render(alpha, cli.unicode);
        if (*kind == "decomposable")
            text += "\nsplit point: " + render(c.as_rule().split_lo, cli.unicode);
        cli.emit("coloring", body, text);
    });
}

void setup_em(CLI::App& group, Cli& cli) {
    auto* headline_cmd = group.add_subcommand("headline", "w^(1+nu*n) -> (2^n, w^(1+nu))");
    auto nu_text = std::make_shared<std::string>();
    auto n = std::make_shared<std::size_t>(0);
    headline_cmd->add_option("--nu", *nu_text)->required();
    headline_cmd->add_option("--n", *n)->required();
    headline_cmd->callback([&cli, nu_text, n] {
        emit_derivation(cli, em_headline(parse_ordinal(*nu_text), *n));
    });

    auto* larson_cmd = group.add_subcommand("larson", "w^(n*k) -> (w^n, k)");
    auto ln = std::make_shared<std::size_t>(0), lk = std::make_shared<std::size_t>(0);
    larson_cmd->add_option("--n", *ln)->required();
    larson_cmd->add_option("--k", *lk)->required();
    larson_cmd->callback([&cli, ln, lk] { emit_derivation(cli, larson_instance(*ln, *lk)); });

    auto* verify_cmd = group.add_subcommand("verify", "re-check a derivation file");
    auto file = std::make_shared<std::string>();
    verify_cmd->add_option("file", *file, "derivation JSON file")->required();
    verify_cmd->callback([&cli, file] {
        Derivation d = derivation_from_json(slurp_json(*file));
        VerifyResult r = verify_derivation(d);
        json body = {{"ok", r.ok}, {"node_path", r.node_path}, {"message", r.message}};
        std::string text = r.ok ? "verified: " + render_statement(d.conclusion, cli.unicode)
                                : "FAILED at " + r.node_path + ": " + r.message;
        cli.emit("verify", body, text);
        cli.exit_code = r.ok ? 0 : 1;
    });
}

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    CLI::App app{"ordinal arithmetic and partition calculus workbench"};
    app.require_subcommand(1);
    app.add_flag("--json", cli.as_json, "machine-readable JSON output");
    app.add_flag("--unicode", cli.unicode, "render the omega symbol in Unicode");

    auto add_group = [&](const char* name, const char* desc) {
        CLI::App* g = app.add_subcommand(name, desc);
        g->require_subcommand(1);
        g->fallthrough();
        return g;
    };
    CLI::App* ord_group = add_group("ord", "ordinal arithmetic");
    CLI::App* iset_group = add_group("iset", "interval sets and order types");
    CLI::App* ramsey_group = add_group("ramsey", "finite partition relations");
    CLI::App* em_group = add_group("em", "Erdos-Milner derivations");
    setup_ord(*ord_group, cli);
    setup_iset(*iset_group, cli);
    setup_ramsey(*ramsey_group, cli);
    setup_em(*em_group, cli);
    for (CLI::App* g : {ord_group, iset_group, ramsey_group, em_group})
        for (CLI::App* sub : g->get_subcommands(nullptr))
            sub->fallthrough();

    // When invoked through an alias symlink, the group is the program name.
    std::vector<std::string> args;
    std::string prog = std::filesystem::path(argv[0]).filename().string();
    app.name("ordcalc");
    if (prog == "ord" || prog == "iset" || prog == "ramsey" || prog == "em")
        args.push_back(prog);
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const error& e) {
        if (cli.as_json)
            std::cerr << payload("error", {{"error", {{"message", e.what()}}}}).dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        if (cli.as_json)
            std::cerr << payload("error", {{"error", {{"message", e.what()}}}}).dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return cli.exit_code;
}
