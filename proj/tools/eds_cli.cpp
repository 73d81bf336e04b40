#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eds/classifier.hpp"
#include "eds/closed_form.hpp"
#include "eds/diophantine.hpp"
#include "eds/periodicity.hpp"
#include "eds/sequence.hpp"
#include "eds/tate.hpp"

using json = nlohmann::json;
using namespace eds;

namespace {

struct Output {
    bool as_json = false;
    unsigned digits = 0;

    std::string num(const Int& v) const { return format_int(v, digits); }

    void emit(const json& record, const std::string& text) const {
        if (as_json)
            std::cout << record.dump() << "\n";
        else
            std::cout << text;
    }
};

std::pair<long, long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("range must look like a..b");
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
}

std::vector<Int> admissible_alphas(int rank, long lo, long hi) {
    std::vector<Int> out;
    for (long a = lo; a <= hi; ++a)
        if (alpha_admissible(rank, Int(a))) out.emplace_back(a);
    return out;
}

int run_term(const Output& out, int rank, long alpha, unsigned long index, const std::string& method) {
    EdsSpec spec(rank, Int(alpha));
    Int value;
    if (method == "closed") {
        value = closed_term(spec, index);
    } else if (method == "recurrence") {
        EdsSequence seq(initial_values(spec));
        seq.extend_to(index);
        value = seq.term(index);
    } else {
        value = closed_term(spec, index);
        EdsSequence seq(initial_values(spec));
        seq.extend_to(index);
        if (value != seq.term(index)) {
            std::cerr << "cross-check failed: closed form and recurrence disagree at n=" << index
                      << "\n";
            return 1;
        }
    }
    out.emit(json{{"command", "term"},
                  {"rank", rank},
                  {"alpha", alpha},
                  {"index", index},
                  {"method", method},
                  {"value", value.get_str()}},
             out.num(value) + "\n");
    return 0;
}

int run_seq(const Output& out, int rank, long alpha, unsigned long count, long mod) {
    EdsSpec spec(rank, Int(alpha));
    json rec{{"command", "seq"}, {"rank", rank}, {"alpha", alpha}, {"count", count}};
    std::ostringstream text;
    json terms = json::array();
    if (mod > 0) {
        ModEds m = reduce_mod(spec, mod, count);
        rec["mod"] = mod;
        for (std::size_t n = 0; n < m.residues.size(); ++n) {
            terms.push_back(m.residues[n]);
            text << "h_" << n << " = " << m.residues[n] << "\n";
        }
    } else {
        EdsSequence seq(initial_values(spec));
        seq.extend_to(count);
        for (std::size_t n = 0; n <= count; ++n) {
            terms.push_back(seq.term(n).get_str());
            text << "h_" << n << " = " << out.num(seq.term(n)) << "\n";
        }
    }
    rec["terms"] = terms;
    out.emit(rec, text.str());
    return 0;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

int run_curve(const Output& out, int rank, long alpha) {
    EdsSpec spec(rank, Int(alpha));
    json rec{{"command", "curve"}, {"rank", rank}, {"alpha", alpha}};
    std::ostringstream text;
    if (rank >= 4) {
        CurveCoefficients tate = tate_normal_form(spec);
        CurveCoefficients model = integerize(spec, tate);
        rec["tate"] = {{"a1", rat_str(tate.a1)}, {"a2", rat_str(tate.a2)}, {"a3", rat_str(tate.a3)}};
        rec["integral"] = {{"a1", rat_str(model.a1)}, {"a2", rat_str(model.a2)}, {"a3", rat_str(model.a3)}};
        text << "tate normal form: y^2 + (" << rat_str(tate.a1) << ")xy + (" << rat_str(tate.a3)
             << ")y = x^3 + (" << rat_str(tate.a2) << ")x^2\n";
        text << "integral model:   y^2 + (" << rat_str(model.a1) << ")xy + (" << rat_str(model.a3)
             << ")y = x^3 + (" << rat_str(model.a2) << ")x^2\n";
    }
    InitialValues iv = initial_values(spec);
    rec["initial"] = {{"h2", iv.h2.get_str()}, {"h3", iv.h3.get_str()}, {"h4", iv.h4.get_str()}};
    text << "initial values:   [1; " << out.num(iv.h2) << "; " << out.num(iv.h3) << "; "
         << out.num(iv.h4) << "]\n";
    out.emit(rec, text.str());
    return 0;
}

int run_period(const Output& out, int rank, long alpha, long prime, const std::string& method) {
    EdsSpec spec(rank, Int(alpha));
    json rec{{"command", "period"}, {"rank", rank}, {"alpha", alpha}, {"prime", prime}};
    std::ostringstream text;
    long direct = -1, formula = -1;
    if (method == "direct" || method == "both") {
        direct = period_direct(spec, prime);
        rec["direct"] = direct;
    }
    if (method == "formula" || method == "both") {
        PeriodReport r = period_formula(spec, prime);
        formula = r.pi;
        rec["formula"] = {{"rho", r.rho},     {"a1", r.a1},   {"a2", r.a2}, {"e", r.e},
                          {"k", r.k},         {"nu", r.nu},   {"tau", r.tau}, {"pi", r.pi},
                          {"a1_primitive", r.a1_primitive},   {"shape_value", r.shape_value}};
        text << "rho = " << r.rho << ", a1 = " << r.a1 << ", a2 = " << r.a2 << ", e = " << r.e
             << ", k = " << r.k << ", nu = " << r.nu << ", tau = " << r.tau << "\n";
    }
    if (method == "both" && direct != formula) {
        std::cerr << "cross-check failed: direct " << direct << " vs formula " << formula << "\n";
        return 1;
    }
    text << "pi = " << (direct >= 0 ? direct : formula) << "\n";
    out.emit(rec, text.str());
    return 0;
}

int run_period_table(const Output& out, int rank, const std::string& range, const std::string& primes_csv,
                     const std::string& cache_dir) {
    auto [lo, hi] = parse_range(range);
    std::vector<long> primes;
    std::stringstream ss(primes_csv);
    for (std::string tok; std::getline(ss, tok, ',');) primes.push_back(std::stol(tok));

    std::string cache_file;
    if (!cache_dir.empty()) {
        std::ostringstream name;
        name << "grid_N" << rank << "_a" << lo << ".." << hi << "_p" << primes_csv << ".txt";
        cache_file = (std::filesystem::path(cache_dir) / name.str()).string();
        if (std::ifstream in{cache_file}) {
            std::cout << in.rdbuf();
            return 0;
        }
    }
    PeriodGrid grid = period_grid(rank, admissible_alphas(rank, lo, hi), primes);
    std::string text = render_period_grid(grid);
    if (out.as_json) {
        json rec{{"command", "period-table"}, {"rank", rank}};
        json rows = json::array();
        for (std::size_t i = 0; i < grid.alphas.size(); ++i) {
            json row{{"alpha", grid.alphas[i].get_str()}};
            json cells = json::array();
            for (const auto& c : grid.cells[i]) cells.push_back(c ? json(*c) : json(nullptr));
            row["periods"] = cells;
            rows.push_back(row);
        }
        rec["rows"] = rows;
        out.emit(rec, text);
    } else {
        std::cout << text;
    }
    if (!cache_file.empty()) {
        std::filesystem::create_directories(cache_dir);
        std::ofstream f(cache_file);
        f << text;
    }
    return 0;
}

int run_rank(const Output& out, int rank, long alpha, long prime) {
    EdsSpec spec(rank, Int(alpha));
    long rho = rank_of_apparition(spec, prime);
    out.emit(json{{"command", "rank"}, {"rank", rank}, {"alpha", alpha}, {"prime", prime}, {"rho", rho}},
             "rho = " + std::to_string(rho) + "\n");
    return 0;
}

int run_classify(const Output& out, int rank, const std::string& power_s, long alpha, bool has_alpha,
                 unsigned long max_index) {
    Power power = power_s == "square" ? Power::Square : Power::Cube;
    if (out.as_json) {
        json rec{{"command", "classify"}, {"rank", rank}, {"power", power_s}};
        json rows = json::array();
        for (const SummaryRow& row : summary_table(rank, power)) {
            json r{{"residue", row.residue}};
            switch (row.verdict.kind) {
                case PowerVerdict::Kind::ZeroTerm: r["verdict"] = "zero"; break;
                case PowerVerdict::Kind::Always: r["verdict"] = "always"; break;
                case PowerVerdict::Kind::Never: r["verdict"] = "never"; break;
                case PowerVerdict::Kind::Conditional:
                    r["verdict"] = "conditional";
                    r["condition"] = *row.verdict.condition_id;
                    break;
            }
            rows.push_back(r);
        }
        rec["rows"] = rows;
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << render_summary_table(rank, power);
    }
    if (has_alpha) {
        EdsSpec spec(rank, Int(alpha));
        bool all_ok = true;
        for (unsigned long n = 1; n <= max_index; ++n) {
            if (n % static_cast<unsigned long>(rank) == 0) continue;
            auto [predicted, actual] = predict_and_check(spec, n, power);
            if (out.as_json) {
                std::cout << json{{"n", n}, {"predicted", predicted}, {"actual", actual}}.dump()
                          << "\n";
            } else {
                std::cout << "n=" << n << " predicted=" << predicted << " actual=" << actual
                          << (predicted == actual ? "" : "  MISMATCH") << "\n";
            }
            all_ok = all_ok && predicted == actual;
        }
        if (!all_ok) return 1;
    }
    return 0;
}

int run_solve(const Output& out, const std::string& id, long bound) {
    SolutionSet s = solve_condition(id, Int(bound));
    json rec{{"command", "solve"}, {"condition", id}, {"bound", bound}, {"provenance", s.provenance}};
    std::ostringstream text;
    const Condition& c = find_condition(id);
    text << c.lhs() << "\n";
    switch (s.kind) {
        case SolutionSet::Kind::Empty:
            rec["kind"] = "empty";
            text << "no admissible solutions";
            break;
        case SolutionSet::Kind::Finite: rec["kind"] = "finite"; text << "alpha in {"; break;
        case SolutionSet::Kind::InfinitePell:
            rec["kind"] = "infinite-pell";
            rec["generator"] = s.generator;
            text << "infinite family via " << s.generator << "\nalpha in {";
            break;
    }
    json alphas = json::array();
    for (std::size_t i = 0; i < s.alphas.size(); ++i) {
        alphas.push_back(s.alphas[i].get_str());
        text << (i ? ", " : "") << s.alphas[i].get_str();
    }
    if (s.kind != SolutionSet::Kind::Empty)
        text << "}" << (s.kind == SolutionSet::Kind::InfinitePell ? " (within bound)" : "");
    text << "  [" << s.provenance << "]\n";
    rec["alphas"] = alphas;
    out.emit(rec, text.str());
    return 0;
}

int run_verify(const std::string& suite, long lo, long hi, unsigned long max_index) {
    int failures = 0;
    auto note = [&](bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            std::cerr << "FAIL " << what << "\n";
        }
    };
    if (suite == "closed-form" || suite == "all") {
        for (int rank : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12})
            for (const Int& a : admissible_alphas(rank, lo, hi)) {
                VerifyReport rep = verify_closed_form(EdsSpec(rank, a), max_index);
                note(rep.ok, "closed-form N=" + std::to_string(rank) + " alpha=" + a.get_str() +
                                 (rep.ok ? "" : " at n=" + std::to_string(rep.first_mismatch)));
            }
        std::cout << "closed-form suite done\n";
    }
    if (suite == "periods" || suite == "all") {
        for (int rank : {4, 5, 6, 7, 8, 9, 10, 12})
            for (const Int& a : admissible_alphas(rank, std::max(lo, -5L), std::min(hi, 5L)))
                for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L}) {
                    EdsSpec spec(rank, a);
                    try {
                        long direct = period_direct(spec, p);
                        long formula = period_formula(spec, p).pi;
                        note(direct == formula, "period N=" + std::to_string(rank) +
                                                    " alpha=" + a.get_str() + " p=" + std::to_string(p));
                    } catch (const BadPrime&) {
                    }
                }
        std::cout << "periods suite done\n";
    }
    if (suite == "powers" || suite == "all") {
        for (int rank : {4, 5, 6, 7, 8, 9, 10, 12})
            for (const Int& a : admissible_alphas(rank, lo, hi))
                for (Power pw : {Power::Square, Power::Cube})
                    for (unsigned long n = 1; n <= std::min<unsigned long>(max_index, 6UL * rank); ++n) {
                        if (n % static_cast<unsigned long>(rank) == 0) continue;
                        auto [predicted, actual] = predict_and_check(EdsSpec(rank, a), n, pw);
                        note(predicted == actual, "power N=" + std::to_string(rank) + " alpha=" +
                                                      a.get_str() + " n=" + std::to_string(n));
                    }
        std::cout << "powers suite done\n";
    }
    if (failures) {
        std::cerr << failures << " mismatches\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-term elliptic divisibility sequences"};
    app.require_subcommand(1);
    Output out;
    app.add_flag("--json", out.as_json, "one JSON record per line");
    app.add_option("--digits", out.digits, "abbreviate integers longer than this many digits");

    int rank = 4;
    long alpha = 2, prime = 5, mod = 0, bound = 10000;
    unsigned long index = 1, count = 10, max_index = 48, cap = 200;
    std::string method = "both", power = "square", range = "-5..5", primes = "5,7,11,13,17,19,23,29,31,37,41";
    std::string condition, suite = "all";
    std::string cache_dir = std::getenv("EDS_CACHE_DIR") ? std::getenv("EDS_CACHE_DIR") : "";
    app.add_option("--cap", cap, "largest index the CLI will compute (terms grow quadratically in digit count)");

    auto* term = app.add_subcommand("term", "one term of a sequence");
    term->add_option("--rank", rank)->required();
    term->add_option("--alpha", alpha)->required();
    term->add_option("--index", index)->required();
    term->add_option("--method", method)->check(CLI::IsMember({"closed", "recurrence", "both"}));

    auto* seq = app.add_subcommand("seq", "a prefix of a sequence");
    seq->add_option("--rank", rank)->required();
    seq->add_option("--alpha", alpha)->required();
    seq->add_option("--count", count)->required();
    seq->add_option("--mod", mod, "reduce modulo an odd prime");

    auto* curve = app.add_subcommand("curve", "curve models and seed values");
    curve->add_option("--rank", rank)->required();
    curve->add_option("--alpha", alpha)->required();

    auto* period = app.add_subcommand("period", "period modulo a prime");
    period->add_option("--rank", rank)->required();
    period->add_option("--alpha", alpha)->required();
    period->add_option("--prime", prime)->required();
    period->add_option("--method", method)->check(CLI::IsMember({"direct", "formula", "both"}));

    auto* ptable = app.add_subcommand("period-table", "grid of periods");
    ptable->add_option("--rank", rank)->required();
    ptable->add_option("--alpha-range", range);
    ptable->add_option("--primes", primes);
    ptable->add_option("--cache-dir", cache_dir);

    auto* rnk = app.add_subcommand("rank", "rank of apparition modulo a prime");
    rnk->add_option("--rank", rank)->required();
    rnk->add_option("--alpha", alpha)->required();
    rnk->add_option("--prime", prime)->required();

    auto* cls = app.add_subcommand("classify", "square/cube verdicts by residue class");
    cls->add_option("--rank", rank)->required();
    cls->add_option("--power", power)->check(CLI::IsMember({"square", "cube"}));
    auto* alpha_opt = cls->add_option("--alpha", alpha, "also sweep predicted vs actual");
    cls->add_option("--max-index", max_index);

    auto* solve = app.add_subcommand("solve", "solve a catalogued condition");
    solve->add_option("--condition", condition)->required();
    solve->add_option("--bound", bound);

    auto* verify = app.add_subcommand("verify", "cross-validation suites");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"closed-form", "periods", "powers", "all"}));
    verify->add_option("--alpha-range", range);
    verify->add_option("--max-index", max_index);

    auto* tables = app.add_subcommand("tables", "dump the exponent and condition tables as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if ((term->parsed() && index > cap) || (seq->parsed() && mod == 0 && count > cap)) {
            std::cerr << "index exceeds the cap of " << cap << "; raise it with --cap\n";
            return 2;
        }
        if (term->parsed()) return run_term(out, rank, alpha, index, method);
        if (seq->parsed()) return run_seq(out, rank, alpha, count, mod);
        if (curve->parsed()) return run_curve(out, rank, alpha);
        if (period->parsed()) return run_period(out, rank, alpha, prime, method);
        if (ptable->parsed()) return run_period_table(out, rank, range, primes, cache_dir);
        if (rnk->parsed()) return run_rank(out, rank, alpha, prime);
        if (cls->parsed()) return run_classify(out, rank, power, alpha, alpha_opt->count() > 0, max_index);
        if (solve->parsed()) return run_solve(out, condition, bound);
        if (verify->parsed()) {
            auto [lo, hi] = parse_range(range);
            return run_verify(suite, lo, hi, max_index);
        }
        if (tables->parsed()) {
            dump_closed_form_csv(std::cout);
            dump_conditions_csv(std::cout);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}
