#include "cli.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "hh/catalog.hpp"
#include "hh/error.hpp"
#include "hh/groebner.hpp"
#include "hh/koszul.hpp"
#include "hh/parse.hpp"
#include "hh/quotient.hpp"
#include "hh/report.hpp"
#include "hh/weights.hpp"

namespace hh::cli {

namespace {

constexpr const char* kGrammar =
    "poly := term (('+'|'-') term)* ; term := coeff ('*'? factor)* ; "
    "factor := var ('^' uint)? | '(' poly ')' ; coeff := int ('/' uint)?";

Vars parse_vars(const std::string& csv) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) names.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (names.size() > 3) throw Error("at most 3 variables are supported");
    return Vars(std::move(names));
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (cur.empty()) throw Error("empty entry in integer list");
            out.push_back(std::stoi(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    return out;
}

// Atomic publication: the full document lands under the final name or not at
// all, so a concurrent reader never sees a truncated report.
void emit(const std::string& doc, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << doc;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error("cannot open " + tmp + " for writing");
        f << doc;
        f.flush();
        if (!f) throw Error("failed writing " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("failed to move report into place at " + path);
}

MonomialOrder make_order(const std::string& name, const std::string& weights_csv,
                         std::size_t nvars) {
    if (name == "lex") return MonomialOrder::lex(nvars);
    if (name == "wlex") {
        if (weights_csv.empty()) throw Error("--order wlex requires --weights");
        std::vector<int> w = parse_int_list(weights_csv);
        if (w.size() != nvars) throw Error("--weights arity does not match --vars");
        return MonomialOrder::weighted_lex(std::move(w));
    }
    throw Error("unknown order '" + name + "' (use lex or wlex)");
}

long env_weight_bound(long flag_value) {
    if (flag_value >= 0) return flag_value;  // explicit flag wins
    if (const char* e = std::getenv("KH_WEIGHT_BOUND")) {
        const std::string s(e);
        if (!s.empty() && s != "auto") return std::stol(s);
    }
    return -1;
}

struct Options {
    std::string vars;
    std::string poly;
    std::string gens;
    std::string divisors;
    std::string g;
    std::string order = "lex";
    std::string weights;
    long bound = -1;
    int p_max = 5;
    std::string case_id;
    std::string family;
    int param = -1;
    bool all = false;
    std::string format = "text";
    std::string out_path;
    bool verbose = false;
};

int dispatch(const std::string& cmd, const Options& o, std::ostream& out) {
    if (cmd == "gb" || cmd == "quotient") {
        Vars v = parse_vars(o.vars);
        MonomialOrder ord = make_order(o.order, o.weights, v.size());
        Ideal ideal(v, parse_polynomial_list(o.gens, v));
        GroebnerBasis gb = cmd == "gb" ? buchberger(ideal, ord)
                                       : ideal_quotient(ideal, parse_polynomial(o.g, v), ord);
        emit(o.format == "json" ? gb_json(gb) : gb_text(gb), o.out_path, out);
        return 0;
    }
    if (cmd == "nf") {
        Vars v = parse_vars(o.vars);
        MonomialOrder ord = make_order(o.order, o.weights, v.size());
        std::vector<Polynomial> divisors = parse_polynomial_list(o.divisors, v);
        DivisionResult r = normal_form(parse_polynomial(o.poly, v), divisors, ord);
        emit(o.format == "json" ? nf_json(r, divisors) : nf_text(r), o.out_path, out);
        return 0;
    }
    if (cmd == "member") {
        Vars v = parse_vars(o.vars);
        MonomialOrder ord = make_order(o.order, o.weights, v.size());
        GroebnerBasis gb = buchberger(Ideal(v, parse_polynomial_list(o.gens, v)), ord);
        const bool m = ideal_membership(parse_polynomial(o.poly, v), gb);
        emit(o.format == "json" ? member_json(m) : member_text(m), o.out_path, out);
        return m ? 0 : 1;
    }
    if (cmd == "basis") {
        Vars v = parse_vars(o.vars);
        GroebnerBasis gb = buchberger(Ideal(v, parse_polynomial_list(o.gens, v)),
                                      MonomialOrder::lex(v.size()));
        QuotientBasis qb;
        if (o.bound >= 0) {
            if (o.weights.empty()) throw Error("--bound requires --weights");
            std::vector<int> w = parse_int_list(o.weights);
            if (w.size() != v.size()) throw Error("--weights arity does not match --vars");
            qb = standard_monomials(gb, WeightVector{std::move(w), 0}, o.bound);
        } else {
            qb = standard_monomials(gb);
        }
        emit(o.format == "json" ? basis_json(qb) : basis_text(qb), o.out_path, out);
        return 0;
    }
    if (cmd == "milnor") {
        Vars v = parse_vars(o.vars);
        QuotientBasis qb = milnor_algebra(parse_polynomial(o.poly, v));
        emit(o.format == "json" ? milnor_json(qb) : milnor_text(qb), o.out_path, out);
        return 0;
    }
    if (cmd == "hilbert") {
        Vars v = parse_vars(o.vars);
        std::vector<Polynomial> gens = parse_polynomial_list(o.gens, v);
        if (o.bound < 0) throw Error("hilbert requires --bound");
        WeightVector wv;
        if (o.weights.empty()) {
            if (gens.size() != 1)
                throw Error("give --weights explicitly, or exactly one quasi-homogeneous "
                            "generator to detect them from");
            wv = detect_weights(gens[0]);
        } else {
            std::vector<int> w = parse_int_list(o.weights);
            if (w.size() != v.size()) throw Error("--weights arity does not match --vars");
            wv = WeightVector{std::move(w), 0};
        }
        GroebnerBasis gb = buchberger(Ideal(v, std::move(gens)), MonomialOrder::lex(v.size()));
        HilbertFunction hf = hilbert_function(gb, wv, o.bound);
        emit(o.format == "json" ? hilbert_json(hf) : hilbert_text(hf), o.out_path, out);
        return 0;
    }
    if (cmd == "cohomology") {
        Vars v = parse_vars(o.vars);
        Polynomial f = parse_polynomial(o.poly, v);
        KoszulComplex kc(f, o.p_max, env_weight_bound(o.bound));
        CohomologyReport rep = kc.cohomology(o.case_id);
        emit(o.format == "json" ? cohomology_json(rep, o.verbose)
                                : cohomology_text(rep, o.verbose),
             o.out_path, out);
        return 0;
    }
    if (cmd == "verify-catalog") {
        CatalogFilter filter;
        if (!o.all) {
            filter.family = o.family;
            filter.param = o.param;
        }
        filter.weight_bound = env_weight_bound(o.bound);
        std::vector<VerificationOutcome> res = run_catalog(filter);
        if (res.empty()) throw Error("no catalog entry matches the filter");
        std::string doc = o.format == "json"  ? catalog_json(res)
                          : o.format == "csv" ? catalog_csv(res)
                                              : catalog_text(res);
        emit(doc, o.out_path, out);
        return catalog_all_pass(res) ? 0 : 1;
    }
    throw Error("unknown command");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Hochschild cohomology of hypersurface algebras k[z]/<f>"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c, bool with_csv) {
        c->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember(with_csv ? std::vector<std::string>{"json", "csv", "text"}
                                           : std::vector<std::string>{"json", "text"}));
        c->add_option("--out", o.out_path, "write the report to this path (atomic)");
    };
    auto add_vars = [&](CLI::App* c) {
        c->add_option("--vars", o.vars, "comma-separated variable names")->required();
    };
    auto add_order = [&](CLI::App* c) {
        c->add_option("--order", o.order, "monomial order: lex (default) or wlex");
        c->add_option("--weights", o.weights, "comma-separated positive weights");
    };

    CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
    add_vars(gb);
    gb->add_option("--gens", o.gens, "generators, ';'-separated")->required();
    add_order(gb);
    add_common(gb, false);

    CLI::App* nf = app.add_subcommand("nf", "normal form of a polynomial");
    add_vars(nf);
    nf->add_option("--poly", o.poly, "polynomial to reduce")->required();
    nf->add_option("--divisors", o.divisors, "divisor list, ';'-separated")->required();
    add_order(nf);
    add_common(nf, false);

    CLI::App* member = app.add_subcommand("member", "ideal membership test (exit 1 when not)");
    add_vars(member);
    member->add_option("--poly", o.poly, "polynomial to test")->required();
    member->add_option("--gens", o.gens, "ideal generators, ';'-separated")->required();
    add_order(member);
    add_common(member, false);

    CLI::App* quot = app.add_subcommand("quotient", "ideal quotient (J : g)");
    add_vars(quot);
    quot->add_option("--gens", o.gens, "generators of J, ';'-separated")->required();
    quot->add_option("--g", o.g, "the divisor polynomial g")->required();
    add_order(quot);
    add_common(quot, false);

    CLI::App* basis = app.add_subcommand("basis", "standard monomials of k[z]/<gens>");
    add_vars(basis);
    basis->add_option("--gens", o.gens, "ideal generators, ';'-separated")->required();
    basis->add_option("--weights", o.weights, "weights for the bounded enumeration");
    basis->add_option("--bound", o.bound, "enumerate weights 0..bound (infinite quotients)");
    add_common(basis, false);

    CLI::App* milnor = app.add_subcommand("milnor", "Milnor number of an isolated singularity");
    add_vars(milnor);
    milnor->add_option("--poly", o.poly, "the polynomial f")->required();
    add_common(milnor, false);

    CLI::App* hilbert = app.add_subcommand("hilbert", "weighted Hilbert function of k[z]/<gens>");
    add_vars(hilbert);
    hilbert->add_option("--gens", o.gens, "ideal generators, ';'-separated")->required();
    hilbert->add_option("--weights", o.weights, "weights (default: detect from a single gen)");
    hilbert->add_option("--bound", o.bound, "tabulate weights 0..bound")->required();
    add_common(hilbert, false);

    CLI::App* coh = app.add_subcommand("cohomology", "Hochschild cohomology of k[z]/<f>");
    add_vars(coh);
    coh->add_option("--poly", o.poly, "quasi-homogeneous f with isolated singularity")
        ->required();
    coh->add_option("--p-max", o.p_max, "highest cohomological degree (default 5)");
    coh->add_option("--bound", o.bound,
                    "label bound (default auto; env KH_WEIGHT_BOUND overrides auto)");
    coh->add_option("--case", o.case_id, "case label echoed into the report");
    coh->add_flag("--verbose", o.verbose, "include per-slice rank tables");
    add_common(coh, false);

    CLI::App* cat = app.add_subcommand("verify-catalog", "run the encoded verification battery");
    cat->add_option("--family", o.family, "catalog id, e.g. A-curve or E7-surface");
    cat->add_option("--param", o.param, "single parameter value");
    cat->add_flag("--all", o.all, "full sweep (default when no filter is given)");
    cat->add_option("--bound", o.bound,
                    "label bound for every scan (default auto; env KH_WEIGHT_BOUND)");
    add_common(cat, true);

    std::vector<const char*> argv;
    argv.push_back("kh");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        err << "polynomial grammar: " << kGrammar << "\n";
        return 2;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        err << "polynomial grammar: " << kGrammar << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace hh::cli
