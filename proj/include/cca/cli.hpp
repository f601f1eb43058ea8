#ifndef CCA_CLI_HPP
#define CCA_CLI_HPP

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cca/annihilator.hpp"
#include "cca/betti.hpp"
#include "cca/errors.hpp"
#include "cca/gin.hpp"
#include "cca/groebner.hpp"
#include "cca/hilbert.hpp"
#include "cca/ideal_io.hpp"
#include "cca/monomial_ideal.hpp"
#include "cca/pommaret.hpp"
#include "cca/reduction.hpp"

namespace cca::cli {

using nlohmann::json;

struct CliResult {
    int exit_code = 0;
    std::string out;
};

constexpr int kSchemaVersion = 1;

namespace detail {

// Applies a generic callable to the generators and a unit of the active field.
template <class F>
auto with_field(const IdealInput& in, F&& f) {
    if (in.is_rational()) return f(in.rational_gens, Rational(1));
    GFp one(1, static_cast<uint64_t>(in.characteristic));
    return f(in.modp_gens, one);
}

inline MonomialIdeal initial_of(const IdealInput& in, TermOrder ord) {
    if (in.monomial_input()) return in.monomial_ideal();
    return with_field(in, [&](const auto& gens, const auto&) {
        return initial_ideal(gens, ord);
    });
}

inline BettiTable betti_quotient_table(const IdealInput& in, TermOrder ord,
                                       const BettiOptions& opts) {
    if (in.monomial_input()) {
        MonomialIdeal I = in.monomial_ideal();
        if (in.is_rational()) return betti_koszul<Rational>(I, opts);
        return betti_koszul<GFp>(I, opts,
                                 GFp(1, static_cast<uint64_t>(in.characteristic)));
    }
    return with_field(in, [&](const auto& gens, const auto&) {
        return betti_of_graded(gens, ord, opts);
    });
}

inline AnnihilatorTable ann_table(const IdealInput& in, TermOrder ord) {
    if (in.monomial_input()) return annihilator_numbers(in.monomial_ideal());
    return with_field(in, [&](const auto& gens, const auto&) {
        return annihilator_numbers_graded(gens, ord);
    });
}

inline json json_monomials(const MonomialIdeal& I,
                           const std::vector<std::string>& names) {
    json a = json::array();
    for (const auto& g : I.gens()) a.push_back(g.str(names));
    return a;
}

inline json json_primes(const std::vector<MonomialPrime>& primes,
                        const std::vector<std::string>& names) {
    json a = json::array();
    for (const auto& p : primes) a.push_back(p.str(names));
    return a;
}

inline json json_betti(const BettiTable& t) {
    json entries = json::array();
    for (const auto& [k, v] : t.entries)
        entries.push_back({{"i", k.first}, {"j", k.second}, {"value", v}});
    return {{"subject", t.subject == Subject::Quotient ? "quotient" : "ideal"},
            {"entries", entries},
            {"diagram", render_betti_diagram(t)}};
}

inline json json_extremal(const ExtremalSet& s) {
    json a = json::array();
    for (const auto& e : s)
        a.push_back({{"i", e.i}, {"j", e.j}, {"value", e.value}});
    return a;
}

inline json json_ann(const AnnihilatorTable& t) {
    json entries = json::array();
    for (const auto& [k, v] : t.alpha)
        entries.push_back({{"i", k.first}, {"j", k.second}, {"value", v}});
    json flags = json::array();
    for (bool f : t.finite) flags.push_back(f);
    return {{"entries", entries},
            {"finite_rows", flags},
            {"cutoff", t.cutoff}};
}

inline std::string render_ann(const AnnihilatorTable& t) {
    std::ostringstream os;
    os << "annihilator numbers (row i, degree j):\n";
    for (int i = 0; i <= t.nvars; ++i) {
        os << "i=" << i << ":";
        bool any = false;
        for (const auto& [k, v] : t.alpha) {
            if (k.first != i) continue;
            os << " j=" << k.second << ":" << v;
            any = true;
        }
        if (!any) os << " -";
        if (i < t.nvars)
            os << (t.finite[static_cast<size_t>(i)] ? " [finite]" : " [infinite]");
        os << "\n";
    }
    return os.str();
}

inline json ring_json(const IdealInput& in) {
    return {{"variables", in.var_names}, {"characteristic", in.characteristic}};
}

inline std::string classification_note(const IdealInput& in) {
    if (in.characteristic == 0) return "";
    return "note: classification theory assumes an infinite field; input is over "
           "GF(" + std::to_string(in.characteristic) + ")\n";
}

} // namespace detail

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

namespace detail {

struct Common {
    std::string file;
    bool as_json = false;
    TermOrder ord = TermOrder::Revlex;
};

inline CliResult cmd_initial(const Common& c) {
    IdealInput in = parse_ideal_file(c.file, c.ord);
    MonomialIdeal I = initial_of(in, c.ord);
    if (c.as_json) {
        json j = {{"schema_version", kSchemaVersion},
                  {"command", "initial"},
                  {"ring", ring_json(in)},
                  {"initial_ideal", json_monomials(I, in.var_names)}};
        return {0, j.dump(2) + "\n"};
    }
    return {0, "initial ideal: " + I.str(in.var_names) + "\n"};
}

inline CliResult cmd_classify(const Common& c) {
    IdealInput in = parse_ideal_file(c.file, c.ord);
    MonomialIdeal I = detail::initial_of(in, c.ord);
    ClassificationWitness bw, qw;
    bool borel = I.is_borel_type(&bw);
    bool qstable = I.is_quasi_stable(&qw);
    bool sstable = I.is_strongly_stable();
    bool stable = I.is_stable();
    auto ass = I.associated_primes();
    int dim = I.dimension();

    if (c.as_json) {
        json j = {{"schema_version", kSchemaVersion},
                  {"command", "classify"},
                  {"ring", ring_json(in)},
                  {"ideal", json_monomials(I, in.var_names)},
                  {"classified_initial_ideal", !in.monomial_input()},
                  {"borel_type", borel},
                  {"strongly_stable", sstable},
                  {"stable", stable},
                  {"quasi_stable", qstable},
                  {"associated_primes", json_primes(ass, in.var_names)},
                  {"dimension", dim}};
        if (!borel)
            j["borel_witness"] = {{"j", bw.index},
                                  {"monomial", bw.monomial.str(in.var_names)}};
        if (!qstable)
            j["quasi_stable_witness"] = {{"k", qw.index},
                                         {"monomial", qw.monomial.str(in.var_names)}};
        return {0, j.dump(2) + "\n"};
    }
    std::ostringstream os;
    os << (in.monomial_input() ? "ideal: " : "initial ideal: ")
       << I.str(in.var_names) << "\n";
    os << classification_note(in);
    os << "borel_type: " << (borel ? "true" : "false") << "\n";
    if (!borel)
        os << "  witness: j=" << bw.index << " monomial="
           << bw.monomial.str(in.var_names) << "\n";
    os << "strongly_stable: " << (sstable ? "true" : "false") << "\n";
    os << "stable: " << (stable ? "true" : "false") << "\n";
    os << "quasi_stable: " << (qstable ? "true" : "false") << "\n";
    if (!qstable)
        os << "  witness: k=" << qw.index << " monomial="
           << qw.monomial.str(in.var_names) << "\n";
    os << "associated_primes:";
    for (const auto& p : ass) os << " " << p.str(in.var_names);
    os << "\n";
    os << "dimension: " << dim << "\n";
    return {0, os.str()};
}

inline CliResult cmd_gin(const Common& c, int trials, uint64_t seed, long range) {
    IdealInput in = parse_ideal_file(c.file, c.ord);
    if (!in.is_rational())
        throw UnsupportedError("gin sampling is only supported in characteristic 0");
    GinOptions opts;
    opts.trials = trials;
    opts.seed = seed;
    opts.coeff_range = range;
    GinResult gin = gin_sample(in.rational_gens, c.ord, opts);
    BettiTable table =
        to_ideal_subject(betti_koszul<Rational>(gin.ideal, BettiOptions{}));
    if (c.as_json) {
        json per = json::array();
        for (const auto& t : gin.per_trial)
            per.push_back(json_monomials(t, in.var_names));
        json j = {{"schema_version", kSchemaVersion},
                  {"command", "gin"},
                  {"ring", ring_json(in)},
                  {"gin", json_monomials(gin.ideal, in.var_names)},
                  {"agreement", gin.agreement},
                  {"trials", gin.trials},
                  {"seed", seed},
                  {"per_trial", per},
                  {"betti", json_betti(table)},
                  {"certified", false}};
        return {0, j.dump(2) + "\n"};
    }
    std::ostringstream os;
    os << "gin (sampled, not certified): " << gin.ideal.str(in.var_names) << "\n";
    os << "agreement: " << gin.agreement << "/" << gin.trials << " (seed " << seed
       << ")\n";
    os << render_betti_diagram(table);
    return {0, os.str()};
}

inline CliResult cmd_betti(const Common& c, const std::string& subject,
                           const std::string& method, std::optional<int> jmax) {
    IdealInput in = parse_ideal_file(c.file, c.ord);
    BettiOptions opts;
    opts.j_max = jmax;
    BettiTable table;
    if (method == "oracle") {
        if (!in.monomial_input())
            throw DomainError("the oracle method needs a monomial ideal");
        table = betti_oracle(in.monomial_ideal(), opts);
    } else if (method == "koszul") {
        table = betti_quotient_table(in, c.ord, opts);
    } else {
        throw DomainError("unknown betti method: " + method);
    }
    if (subject == "ideal")
        table = to_ideal_subject(table);
    else if (subject != "quotient")
        throw DomainError("unknown betti subject: " + subject);
    if (c.as_json) {
        json j = {{"schema_version", kSchemaVersion},
                  {"command", "betti"},
                  {"ring", ring_json(in)},
                  {"method", method},
                  {"truncated", table.truncated},
                  {"betti", json_betti(table)}};
        return {0, j.dump(2) + "\n"};
    }
    std::string note =
        table.truncated ? "note: table truncated by the requested jmax\n" : "";
    return {0, render_betti_diagram(table) + note};
}

inline CliResult cmd_ann(const Common& c) {
    IdealInput in = parse_ideal_file(c.file, c.ord);
    AnnihilatorTable t = ann_table(in, c.ord);
    if (c.as_json) {
        json j = {{"schema_version", kSchemaVersion},
                  {"command", "ann"},
                  {"ring", ring_json(in)},
                  {"annihilator", json_ann(t)}};
        return {0, j.dump(2) + "\n"};
    }
    return {0, render_ann(t)};
}

inline CliResult cmd_extremal(const Common& c) {
    IdealInput in = parse_ideal_file(c.file, c.ord);
    BettiTable betti = betti_quotient_table(in, c.ord, BettiOptions{});
    AnnihilatorTable ann = ann_table(in, c.ord);
    ExtremalSet bcorners = extremal_betti(betti);
    ExtremalSet acorners = extremal_annihilators(ann); // throws on infinite rows
    CorrespondenceReport rep = correspondence_check(betti, ann);
    if (c.as_json) {
        json j = {{"schema_version", kSchemaVersion},
                  {"command", "extremal"},
                  {"ring", ring_json(in)},
                  {"extremal_betti", json_extremal(bcorners)},
                  {"extremal_alpha", json_extremal(acorners)},
                  {"positions_match", rep.positions_match},
                  {"values_match", rep.values_match},
                  {"bound_holds", rep.bound_holds}};
        return {0, j.dump(2) + "\n"};
    }
    std::ostringstream os;
    os << "extremal betti (subject R/I):";
    for (const auto& e : bcorners)
        os << " beta_{" << e.i << "," << e.i + e.j << "}=" << e.value;
    os << "\nextremal alpha:";
    for (const auto& e : acorners)
        os << " alpha_{" << e.i << "," << e.j << "}=" << e.value;
    os << "\ncorrespondence: " << (rep.positions_match && rep.values_match
                                       ? "ok"
                                       : "MISMATCH");
    os << "\nbound: " << (rep.bound_holds ? "ok" : "VIOLATED") << "\n";
    return {0, os.str()};
}

inline CliResult cmd_reduction(const Common& c, const std::string& forms_text,
                               int search_budget, uint64_t seed, int grid) {
    IdealInput in = parse_ideal_file(c.file, c.ord);
    return with_field(in, [&](const auto& gens, const auto& one) -> CliResult {
        using K = std::decay_t<decltype(one)>;
        std::ostringstream os;
        json j = {{"schema_version", kSchemaVersion},
                  {"command", "reduction"},
                  {"ring", ring_json(in)}};
        int d = dimension_of_quotient(gens, c.ord);
        int lb = reduction_lower_bound(gens, c.ord);
        os << "dimension: " << d << "\n";
        os << "lower_bound: " << lb << "\n";
        j["dimension"] = d;
        j["lower_bound"] = lb;

        if (!forms_text.empty()) {
            auto forms =
                parse_expression_list<K>(forms_text, in.var_names, c.ord, one);
            int r = reduction_number(gens, forms, c.ord);
            os << "r_J: " << r << " (J = (";
            for (size_t k = 0; k < forms.size(); ++k)
                os << (k ? ", " : "") << forms[k].str(in.var_names);
            os << "))\n";
            j["r_J"] = r;
        } else if (search_budget <= 0) {
            CanonicalReduction canon = canonical_reduction_number(gens, c.ord);
            os << "canonical_r: " << canon.r << " (tail variables)\n";
            j["canonical_r"] = canon.r;
        }
        if (search_budget > 0) {
            SearchOptions sopts;
            sopts.budget = search_budget;
            sopts.seed = seed;
            sopts.grid = grid;
            auto found = search_min_reduction(gens, c.ord, sopts);
            os << "search_best_r: " << found.best_r << " (J = (";
            for (size_t k = 0; k < found.best_forms.size(); ++k)
                os << (k ? ", " : "") << found.best_forms[k].str(in.var_names);
            os << "); " << found.sops_found << " sops among " << found.evaluated
               << " candidates)\n";
            j["search_best_r"] = found.best_r;
            j["search_sops"] = found.sops_found;
            j["search_evaluated"] = found.evaluated;
            j["seed"] = seed;
        }
        if (c.as_json) return CliResult{0, j.dump(2) + "\n"};
        return CliResult{0, os.str()};
    });
}

inline CliResult cmd_pommaret(const Common& c, int cap) {
    IdealInput in = parse_ideal_file(c.file, c.ord);
    MonomialIdeal I = initial_of(in, c.ord);
    PommaretResult res = pommaret_complete(I, cap);
    // graded input: lift the monomial basis of lt(I) through the reduced basis
    std::vector<std::string> lifted;
    if (res.complete && !in.monomial_input()) {
        lifted = with_field(in, [&](const auto& gens, const auto&) {
            auto gb = buchberger(gens, c.ord);
            std::vector<std::string> out;
            for (const auto& f : lift_involutive_basis(res.basis, gb))
                out.push_back(f.str(in.var_names));
            return out;
        });
    }
    if (c.as_json) {
        json j = {{"schema_version", kSchemaVersion},
                  {"command", "pommaret"},
                  {"ring", ring_json(in)},
                  {"complete", res.complete},
                  {"cap", res.cap}};
        json elems = json::array();
        for (const auto& m : res.basis.elements) elems.push_back(m.str(in.var_names));
        j["basis"] = elems;
        if (!lifted.empty()) j["lifted_basis"] = lifted;
        if (!res.complete) j["stopped_at_degree"] = res.stopped_at_degree;
        return {0, j.dump(2) + "\n"};
    }
    std::ostringstream os;
    if (res.complete) {
        os << "pommaret basis of " << (in.monomial_input() ? "I" : "lt(I)") << " ("
           << res.basis.elements.size() << " elements):";
        for (const auto& m : res.basis.elements) os << " " << m.str(in.var_names);
        os << "\n";
        if (!lifted.empty()) {
            os << "lifted polynomial basis:\n";
            for (const auto& f : lifted) os << "  " << f << "\n";
        }
    } else {
        os << "pommaret: diverged at degree " << res.stopped_at_degree << " (cap "
           << res.cap << "); the ideal is not quasi-stable\n";
    }
    return {0, os.str()};
}

inline CliResult cmd_report(const Common& c) {
    auto start = std::chrono::steady_clock::now();
    IdealInput in = parse_ideal_file(c.file, c.ord);
    MonomialIdeal I = initial_of(in, c.ord);
    bool monomial = in.monomial_input();

    std::ostringstream os;
    json j = {{"schema_version", kSchemaVersion},
              {"command", "report"},
              {"ring", ring_json(in)}};
    bool hypothesis_violated = false;

    os << "input: " << (monomial ? "monomial ideal " : "graded ideal, in(I) = ")
       << I.str(in.var_names) << "\n\n";
    j["initial_ideal"] = json_monomials(I, in.var_names);

    // classification
    bool borel = I.is_borel_type();
    bool qstable = I.is_quasi_stable();
    auto ass = I.associated_primes();
    int dim = I.dimension();
    os << "classification" << (monomial ? "" : " of in(I)") << ":\n";
    os << classification_note(in);
    os << "  borel_type: " << (borel ? "true" : "false")
       << ", strongly_stable: " << (I.is_strongly_stable() ? "true" : "false")
       << ", quasi_stable: " << (qstable ? "true" : "false") << "\n";
    os << "  associated_primes:";
    for (const auto& p : ass) os << " " << p.str(in.var_names);
    os << "\n  dimension: " << dim << "\n\n";
    j["classification"] = {{"borel_type", borel},
                           {"strongly_stable", I.is_strongly_stable()},
                           {"stable", I.is_stable()},
                           {"quasi_stable", qstable},
                           {"associated_primes", json_primes(ass, in.var_names)},
                           {"dimension", dim}};

    // hilbert
    HilbertSeries hs = hilbert_series(I);
    os << "hilbert numerator coefficients:";
    for (const auto& z : hs.numerator()) os << " " << z.get_str();
    os << "\n\n";
    json num = json::array();
    for (const auto& z : hs.numerator()) num.push_back(z.get_str());
    j["hilbert_numerator"] = num;

    // betti tables
    BettiTable bq = betti_quotient_table(in, c.ord, BettiOptions{});
    os << "betti diagram of " << (monomial ? "I" : "I (graded)") << ":\n"
       << render_betti_diagram(to_ideal_subject(bq));
    j["betti"] = json_betti(bq);
    BettiTable bin = bq;
    if (!monomial) {
        bin = in.is_rational()
                  ? betti_koszul<Rational>(I, BettiOptions{})
                  : betti_koszul<GFp>(
                        I, BettiOptions{},
                        GFp(1, static_cast<uint64_t>(in.characteristic)));
        os << "\nbetti diagram of in(I):\n"
           << render_betti_diagram(to_ideal_subject(bin));
        j["betti_initial"] = json_betti(bin);
    }
    DerivedInvariants inv = derive_invariants(bq, dim);
    os << "\npd(R/I) = " << inv.pd_quotient << ", depth(R/I) = " << inv.depth
       << ", reg(R/I) = " << inv.reg_quotient << ", reg(I) = " << inv.reg_ideal
       << ", cohen_macaulay = " << (inv.cohen_macaulay ? "true" : "false")
       << "\n\n";
    j["invariants"] = {{"pd_quotient", inv.pd_quotient},
                       {"depth", inv.depth},
                       {"reg_quotient", inv.reg_quotient},
                       {"reg_ideal", inv.reg_ideal},
                       {"dim", inv.dim},
                       {"cohen_macaulay", inv.cohen_macaulay}};

    // annihilator numbers + extremal data
    AnnihilatorTable ann = ann_table(in, c.ord);
    os << render_ann(ann) << "\n";
    j["annihilator"] = json_ann(ann);
    ExtremalSet bcorners = extremal_betti(bq);
    os << "extremal betti (subject R/I):";
    for (const auto& e : bcorners)
        os << " beta_{" << e.i << "," << e.i + e.j << "}=" << e.value;
    os << "\n";
    j["extremal_betti"] = json_extremal(bcorners);
    if (ann.all_finite()) {
        CorrespondenceReport rep = correspondence_check(bq, ann);
        os << "extremal alpha:";
        for (const auto& e : rep.alpha_corners)
            os << " alpha_{" << e.i << "," << e.j << "}=" << e.value;
        os << "\ncorrespondence: "
           << (rep.positions_match && rep.values_match ? "ok" : "MISMATCH")
           << ", bound: " << (rep.bound_holds ? "ok" : "VIOLATED") << "\n\n";
        j["extremal_alpha"] = json_extremal(rep.alpha_corners);
        j["correspondence_ok"] = rep.ok();
    } else {
        hypothesis_violated = true;
        os << "correspondence: skipped (annihilator row "
           << ann.first_infinite_row() << " has infinite length)\n\n";
        j["correspondence_ok"] = nullptr;
    }

    // annihilator table transfer for graded input
    if (!monomial) {
        TableEqualityReport eq = with_field(in, [&](const auto& gens, const auto&) {
            return annihilator_transfer_check(gens, c.ord);
        });
        if (!eq.hypothesis_ok) {
            hypothesis_violated = true;
            os << "alpha(I) vs alpha(in I): skipped (hypothesis violated)\n\n";
            j["alpha_tables_equal"] = nullptr;
        } else {
            os << "alpha(I) vs alpha(in I): " << (eq.equal ? "equal" : "DIFFER")
               << "\n\n";
            j["alpha_tables_equal"] = eq.equal;
        }
    }

    // reduction data
    auto reduction_section = [&]() {
        return with_field(in, [&](const auto& gens, const auto&) -> std::string {
            std::ostringstream ros;
            int lb = reduction_lower_bound(gens, c.ord);
            ros << "reduction lower bound: " << lb << "\n";
            j["reduction_lower_bound"] = lb;
            try {
                CanonicalReduction canon = canonical_reduction_number(gens, c.ord);
                ros << "canonical (tail variable) reduction number: " << canon.r
                    << "\n";
                j["canonical_r"] = canon.r;
            } catch (const HypothesisError& e) {
                hypothesis_violated = true;
                ros << "canonical reduction: skipped (" << e.what() << ")\n";
                j["canonical_r"] = nullptr;
            }
            return ros.str();
        });
    };
    os << reduction_section() << "\n";

    // pommaret completion of the monomial ideal
    PommaretResult pom = pommaret_complete(I, -1);
    if (pom.complete) {
        os << "pommaret basis of " << (monomial ? "I" : "in(I)") << " ("
           << pom.basis.elements.size() << " elements):";
        for (const auto& m : pom.basis.elements) os << " " << m.str(in.var_names);
        os << "\n";
    } else {
        os << "pommaret completion diverged at degree " << pom.stopped_at_degree
           << " (cap " << pom.cap << "): not quasi-stable\n";
    }
    json pel = json::array();
    for (const auto& m : pom.basis.elements) pel.push_back(m.str(in.var_names));
    j["pommaret"] = {{"complete", pom.complete}, {"basis", pel}};

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    j["timing_ms"] = ms;
    j["hypothesis_violated"] = hypothesis_violated;
    int code = hypothesis_violated ? 2 : 0;
    if (c.as_json) return CliResult{code, j.dump(2) + "\n"};
    os << "\n(" << ms << " ms)\n";
    return CliResult{code, os.str()};
}

} // namespace detail

inline CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact invariants of graded ideals and their initial ideals"};
    app.require_subcommand(1);

    detail::Common common;
    std::string order_name = "revlex";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", common.file, "ideal file")->required();
        sub->add_flag("--json", common.as_json, "emit JSON");
        sub->add_option("--order", order_name, "term order (revlex|lex|deglex)");
    };

    CLI::App* classify = app.add_subcommand("classify", "classification tests");
    add_common(classify);
    CLI::App* initial = app.add_subcommand("initial", "initial ideal");
    add_common(initial);

    CLI::App* gin = app.add_subcommand("gin", "sampled generic initial ideal");
    add_common(gin);
    int trials = 5;
    uint64_t seed = 1;
    long range = 10000;
    gin->add_option("--trials", trials, "independent random changes");
    gin->add_option("--seed", seed, "RNG seed");
    gin->add_option("--range", range, "coefficient range");

    CLI::App* betti = app.add_subcommand("betti", "graded Betti table");
    add_common(betti);
    std::string subject = "ideal";
    std::string method = "koszul";
    int jmax_opt = -1;
    betti->add_option("--subject", subject, "ideal|quotient");
    betti->add_option("--method", method, "koszul|oracle");
    betti->add_option("--jmax", jmax_opt, "degree bound override");

    CLI::App* ann = app.add_subcommand("ann", "annihilator numbers");
    add_common(ann);

    CLI::App* extremal = app.add_subcommand("extremal", "extremal corners");
    add_common(extremal);

    CLI::App* reduction = app.add_subcommand("reduction", "reduction numbers");
    add_common(reduction);
    std::string forms_text;
    int search_budget = 0;
    int grid = 1;
    uint64_t rseed = 1;
    reduction->add_option("--forms", forms_text, "comma-separated linear forms");
    reduction->add_option("--search", search_budget, "randomized search budget");
    reduction->add_option("--grid", grid, "search coefficient range");
    reduction->add_option("--seed", rseed, "search RNG seed");

    CLI::App* pommaret = app.add_subcommand("pommaret", "involutive basis");
    add_common(pommaret);
    int cap = -1;
    pommaret->add_option("--cap", cap, "completion degree cap");

    CLI::App* report = app.add_subcommand("report", "run everything");
    add_common(report);

    std::vector<std::string> argv_s;
    argv_s.push_back("cca");
    argv_s.insert(argv_s.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(argv_s.size());
    for (auto& s : argv_s) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        if (e.get_exit_code() == 0) {
            os << app.help();
            return {0, os.str()};
        }
        os << "error: " << e.what() << "\n";
        return {1, os.str()};
    }

    try {
        common.ord = term_order_from_string(order_name);
        if (classify->parsed()) return detail::cmd_classify(common);
        if (initial->parsed()) return detail::cmd_initial(common);
        if (gin->parsed()) return detail::cmd_gin(common, trials, seed, range);
        if (betti->parsed())
            return detail::cmd_betti(common, subject, method,
                                     jmax_opt < 0 ? std::nullopt
                                                  : std::optional<int>(jmax_opt));
        if (ann->parsed()) return detail::cmd_ann(common);
        if (extremal->parsed()) return detail::cmd_extremal(common);
        if (reduction->parsed())
            return detail::cmd_reduction(common, forms_text, search_budget, rseed,
                                         grid);
        if (pommaret->parsed()) return detail::cmd_pommaret(common, cap);
        if (report->parsed()) return detail::cmd_report(common);
        return {1, "error: no command\n"};
    } catch (const HypothesisError& e) {
        return {2, std::string("hypothesis violation: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace cca::cli

#endif
