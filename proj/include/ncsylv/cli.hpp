#ifndef NCSYLV_CLI_HPP
#define NCSYLV_CLI_HPP

// Command-line front end. run_cli is the whole program minus main(), so the
// tests can drive it in-process.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncsylv.hpp"

namespace ncsylv {

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

struct VerifyArgs {
    std::string identity = "sylvester";
    std::string regime = "cf";
    int m = 3, n = 1, max_degree = 4;
    std::string method;  // empty: regime default
    std::uint64_t seed = 1;
    int trials = 3;
    std::optional<int> i, j, k, l;
    std::string mode = "entry";
    std::string c_form = "det";
    bool generic = false;
    bool literal = false;
    std::vector<int> betas{1, 2, 3};
};

struct Outcome {
    std::vector<VerifyReport> reports;
    bool pass = true;
    std::vector<std::string> summary;  // extra lines for text mode
};

namespace cli_detail {

inline Regime regime_arg(const std::string& s) {
    auto r = parse_regime(s);
    if (!r) throw std::invalid_argument("unknown regime '" + s + "' (commutative, cf, rq, q-cf, q-rq, qij-cf, qij-rq)");
    return *r;
}

inline CheckOptions options_of(const VerifyArgs& a) {
    CheckOptions o;
    if (!a.method.empty()) {
        o.method = parse_method(a.method);
        if (!o.method) throw std::invalid_argument("unknown method '" + a.method + "'");
    }
    if (a.trials < 1) throw std::invalid_argument("--trials must be positive");
    o.seed = a.seed;
    o.trials = a.trials;
    return o;
}

inline Outcome run_verify(const VerifyArgs& a) {
    Outcome out;
    CheckOptions o = options_of(a);
    auto add = [&](VerifyReport r) {
        out.pass = out.pass && r.pass;
        out.reports.push_back(std::move(r));
    };
    const std::string& id = a.identity;
    if (id == "counterexample") {
        auto res = qij_counterexample(o);
        out.summary.push_back("coefficient of a[2,1]a[3,2]a[1,3]: lhs " + res.lhs_coefficient.to_string() + ", rhs " +
                              res.rhs_coefficient.to_string());
        out.summary.push_back(res.confirmed ? "expected failure confirmed" : "expected failure NOT confirmed");
        out.reports.push_back(res.report);
        out.reports.push_back(res.specialized);
        out.pass = res.confirmed;
        return out;
    }
    if (id == "p-sets") {
        add(verify_p_set_identity(a.m, a.n, a.i.value_or(3), a.j.value_or(5), a.k.value_or(4), a.l, 1, o));
        return out;
    }
    if (id == "classical") {
        add(classical_sylvester_check(a.m, a.n));
        return out;
    }
    auto inst = SylvesterInstance::make(regime_arg(a.regime), a.m, a.n, a.max_degree, a.generic);
    if (id == "master") {
        add(verify_master_decomposition(inst));
    } else if (id == "sylvester") {
        if (a.c_form != "det" && a.c_form != "path") throw std::invalid_argument("--c-form is det or path");
        add(verify_sylvester(inst, o, a.c_form == "det" ? CForm::det : CForm::path));
    } else if (id == "c-entries") {
        add(verify_c_entries(inst, o));
    } else if (id == "c-relations") {
        add(verify_C_relations(inst, o));
    } else if (id == "inverse") {
        InverseMode mode;
        if (a.mode == "entry") mode = InverseMode::entry;
        else if (a.mode == "weaker") mode = InverseMode::weaker;
        else if (a.mode == "nested") mode = InverseMode::nested;
        else throw std::invalid_argument("--mode is entry, weaker or nested");
        if (mode != InverseMode::entry || (a.i && a.j)) {
            add(verify_inverse_formula(inst, a.i.value_or(a.m), a.j.value_or(a.m), mode, o));
        } else {
            for (int i = 1; i <= a.m; ++i)
                for (int j = 1; j <= a.m; ++j)
                    if ((!a.i || *a.i == i) && (!a.j || *a.j == j)) add(verify_inverse_formula(inst, i, j, mode, o));
        }
    } else if (id == "beta") {
        add(beta_expansion_check(inst, a.betas, a.literal ? ThirdCondition::literal : ThirdCondition::later_cycle));
    } else {
        throw std::invalid_argument("unknown identity '" + id + "'");
    }
    return out;
}

inline std::string render(const Outcome& out, bool json) {
    if (json) {
        ordered_json j;
        if (out.reports.size() == 1) {
            j = to_json(out.reports.front());
        } else {
            j = ordered_json::array();
            for (const auto& r : out.reports) j.push_back(to_json(r));
        }
        return j.dump(2) + "\n";
    }
    std::string s;
    for (const auto& r : out.reports) s += to_text(r);
    for (const auto& line : out.summary) s += line + "\n";
    return s;
}

inline Outcome run_suite(std::uint64_t seed) {
    Outcome out;
    CheckOptions o;
    o.seed = seed;
    auto add = [&](VerifyReport r) {
        out.pass = out.pass && r.pass;
        out.reports.push_back(std::move(r));
    };
    add(verify_master_decomposition(SylvesterInstance::make(Regime::cf, 3, 1, 5)));
    for (Regime r : all_regimes()) {
        auto inst = SylvesterInstance::make(r, 3, 1, 4);
        add(verify_sylvester(inst, o));
        add(verify_C_relations(inst, o));
    }
    add(verify_p_set_identity(5, 2, 3, 5, 4, std::nullopt, 1, o));
    add(beta_expansion_check(SylvesterInstance::make(Regime::cf, 3, 1, 4), {1, 2, 3}));
    auto ce = qij_counterexample(o);
    out.pass = out.pass && ce.confirmed;
    out.summary.push_back(ce.confirmed ? "counterexample: expected failure confirmed"
                                       : "counterexample: expected failure NOT confirmed");
    return out;
}

inline std::string element_lines(const Element& e) {
    std::string s;
    for (int d = 0; d <= e.max_degree(); ++d) {
        Element h = e.homogeneous(d);
        if (!h.is_zero()) s += "  [" + std::to_string(d) + "] " + h.to_string() + "\n";
    }
    return s.empty() ? "  0\n" : s;
}

}  // namespace cli_detail

/// Parses args (without the program name) and runs the requested command.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Noncommutative Sylvester identity checker"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    VerifyArgs va;
    std::string format = "text", output;
    auto* verify = app.add_subcommand("verify", "check an identity degree by degree");
    verify->add_option("--identity", va.identity,
                       "master | sylvester | c-entries | c-relations | inverse | beta | counterexample | p-sets | classical");
    verify->add_option("--regime", va.regime, "commutative | cf | rq | q-cf | q-rq | qij-cf | qij-rq");
    verify->add_option("--m", va.m, "matrix size")->check(CLI::Range(1, kMaxDim));
    verify->add_option("--n", va.n, "size of the pivot block A_0")->check(CLI::Range(0, kMaxDim));
    verify->add_option("--max-degree", va.max_degree, "truncation degree")->check(CLI::Range(1, 12));
    verify->add_option("--method", va.method, "free-algebra | normal-form | ideal-specialize | ideal-exact");
    verify->add_option("--seed", va.seed, "seed for random specialization");
    verify->add_option("--trials", va.trials, "random specializations per block");
    verify->add_option("--i", va.i, "row index");
    verify->add_option("--j", va.j, "column index");
    verify->add_option("--k", va.k, "third index (p-sets)");
    verify->add_option("--l", va.l, "fourth index (p-sets)");
    verify->add_option("--mode", va.mode, "inverse formula variant: entry | weaker | nested");
    verify->add_option("--c-form", va.c_form, "det | path");
    verify->add_flag("--generic", va.generic, "independent q[i,j] instead of the block-constant table");
    verify->add_flag("--literal", va.literal, "literal reading of the third descent condition");
    verify->add_option("--betas", va.betas, "integer exponents for the beta check")->delimiter(',');
    verify->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--output", output, "write the report here instead of stdout");

    std::uint64_t suite_seed = 1;
    auto* suite = app.add_subcommand("suite", "run the quick verification suite");
    suite->add_option("--seed", suite_seed, "seed for random specialization");
    suite->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    suite->add_option("--output", output, "write the report here instead of stdout");

    std::string regime = "cf";
    int m = 3, n = 1, degree = 3;
    bool reduce = false;
    auto* det = app.add_subcommand("det", "print the weighted det(I - A) up to a degree");
    det->add_option("--regime", regime, "regime whose weights to use");
    det->add_option("--m", m)->check(CLI::Range(1, kMaxDim));
    det->add_option("--max-degree", degree)->check(CLI::Range(1, 12));
    det->add_flag("--reduce", reduce, "reduce to normal form");

    std::string c_form = "det";
    auto* cmat = app.add_subcommand("cmatrix", "print the entries of C");
    cmat->add_option("--regime", regime);
    cmat->add_option("--m", m)->check(CLI::Range(1, kMaxDim));
    cmat->add_option("--n", n)->check(CLI::Range(0, kMaxDim));
    cmat->add_option("--max-degree", degree)->check(CLI::Range(1, 12));
    cmat->add_option("--c-form", c_form, "det | path")->check(CLI::IsMember({"det", "path"}));
    cmat->add_flag("--reduce", reduce, "reduce to normal form");

    std::string word;
    auto* dec = app.add_subcommand("decompose", "split a lattice path at every step ending above n");
    dec->add_option("--word", word, "e.g. a41a13a32")->required();
    dec->add_option("--n", n)->required();

    auto* ph = app.add_subcommand("phi", "map an ordered sequence to a path sequence and decompose it into cycles");
    ph->add_option("--word", word)->required();
    ph->add_option("--n", n, "cycles through heights above n are marked");

    std::string mu;
    bool literal = false;
    auto* emu = app.add_subcommand("emu", "coefficient polynomial e_mu(b) of an ordered word");
    emu->add_option("--mu", mu, "ending heights, one digit each, e.g. 132521421325")->required();
    emu->add_option("--n", n)->required();
    emu->add_flag("--literal", literal, "literal reading of the third descent condition");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? kExitPass : kExitUsage;
    }

    auto emit = [&](const std::string& text) {
        if (output.empty()) {
            out << text;
            return;
        }
        std::ofstream f(output);
        if (!f) throw std::runtime_error("cannot write " + output);
        f << text;
    };

    try {
        if (verify->parsed() || suite->parsed()) {
            Outcome res = verify->parsed() ? cli_detail::run_verify(va) : cli_detail::run_suite(suite_seed);
            emit(cli_detail::render(res, format == "json"));
            if (!res.pass) {
                for (const auto& r : res.reports)
                    if (const auto* d = r.first_failure()) {
                        err << r.identity << " failed at degree " << d->degree << "\n";
                        for (const auto& [w, c] : d->witness) err << "  witness " << witness_term(w, c) << "\n";
                    }
            }
            return res.pass ? kExitPass : kExitFail;
        }
        if (det->parsed()) {
            auto sys = RelationSystem::make(cli_detail::regime_arg(regime), m);
            ReducerPtr r = reduce && sys.normal_form_available() ? make_reducer(sys) : nullptr;
            if (reduce && !r) throw std::invalid_argument("no normal form for " + regime);
            out << "det(I - A), " << sys.describe() << ":\n"
                << cli_detail::element_lines(det_weighted(identity_minus(NCMatrix::generic(m, degree, r)), sys.scheme));
            return kExitPass;
        }
        if (cmat->parsed()) {
            auto inst = SylvesterInstance::make(cli_detail::regime_arg(regime), m, n, degree);
            ReducerPtr r = reduce ? inst.reducer(inst.resolve({})) : nullptr;
            if (reduce && !r) throw std::invalid_argument("no normal form for " + regime);
            auto c = build_C(inst, c_form == "det" ? CForm::det : CForm::path, r);
            for (const auto& [letter, e] : c.embedding)
                out << "c[" << letter.row() << "," << letter.col() << "]:\n" << cli_detail::element_lines(e);
            return kExitPass;
        }
        if (dec->parsed()) {
            Word w = Word::parse(word);
            if (!is_lattice_path(w)) throw std::invalid_argument(word + " is not a lattice path");
            for (const auto& piece : decompose_path(w, n)) out << piece.to_string() << "\n";
            return kExitPass;
        }
        if (ph->parsed()) {
            Word w = Word::parse(word);
            if (!is_ordered(w) || !is_balanced(w)) throw std::invalid_argument(word + " is not a balanced ordered sequence");
            Word p = phi(w);
            out << "phi: " << p.to_string() << "\n"
                << "cycles: " << cycles_of_p_sequence(p, n).to_string() << "\n";
            return kExitPass;
        }
        if (emu->parsed()) {
            auto heights = parse_index_word(mu);
            out << e_mu(heights, n, literal ? ThirdCondition::literal : ThirdCondition::later_cycle).to_string() << "\n";
            return kExitPass;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace ncsylv

#endif  // NCSYLV_CLI_HPP
