// arckit: exact Weierstrass division/preparation, jet and stratum scheme
// presentations, arc lifting, and finite-field point counting.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 parameter error, 4 obstruction (requested object does not exist),
// 5 enumeration budget exceeded.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "arckit/enumerate.hpp"
#include "arckit/errors.hpp"
#include "arckit/geometry.hpp"
#include "arckit/io.hpp"
#include "arckit/lifting.hpp"
#include "arckit/models.hpp"
#include "arckit/report.hpp"
#include "arckit/weierstrass.hpp"

namespace {

using namespace arckit;

Field parse_field_flag(const std::string& s) {
    if (s == "Q" || s == "q") return Field::rationals();
    std::string digits = s;
    if (!digits.empty() && (digits[0] == 'F' || digits[0] == 'f')) digits = digits.substr(1);
    try {
        size_t used = 0;
        long p = std::stol(digits, &used);
        if (used != digits.size() || p < 2) throw std::invalid_argument(s);
        return Field::prime((unsigned long)p);
    } catch (const std::exception&) {
        throw parameter_error("bad field '" + s + "' (want Q, F<p>, or <p>)");
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream o(out_path, std::ios::binary);
    if (!o) throw std::runtime_error("cannot write " + out_path);
    o << text;
}

int resolve(const char* what, int flag_value, int doc_value) {
    if (flag_value >= 0) return flag_value;
    if (doc_value >= 0) return doc_value;
    throw parameter_error(std::string(what) + " required (flag or document header)");
}

struct Options {
    std::string variety_path, input_path, point_path, pres_path, output_path;
    std::string field = "Q";
    std::string verify_what = "all";
    int level = -1, d = -1, N = -1, n = -1;
    int q = 3;
    int workers = 1;
    long long budget = 100000000LL;
    long long seed = 0; // reserved for sampled suites; current checks are exhaustive
    bool json = false;
};

int cmd_jets(const Options& opt) {
    VarietyDoc doc = parse_variety(read_text_file(opt.variety_path));
    SpecialCI X = realize_variety(doc, parse_field_flag(opt.field));
    if (opt.level < 0) throw parameter_error("jet level required (--level >= 0)");
    emit(serialize_presentation(jet_presentation(X, opt.level)), opt.output_path);
    return 0;
}

int cmd_stratum(const Options& opt) {
    VarietyDoc doc = parse_variety(read_text_file(opt.variety_path));
    SpecialCI X = realize_variety(doc, parse_field_flag(opt.field));
    if (opt.d < 0) throw parameter_error("stratum depth required (--d >= 0)");
    emit(serialize_presentation(stratum_presentation(X, opt.d)), opt.output_path);
    return 0;
}

int cmd_weierstrass_div(const Options& opt) {
    SeriesDoc doc = parse_series(read_text_file(opt.input_path), "series");
    int N = resolve("truncation", opt.N, doc.truncation);
    Tps f = doc.get_tps("f", N);
    Tps g = doc.get_tps("g", N);
    DivisionResult res = opt.n >= 0 ? weierstrass_divide(f, g, opt.n) : weierstrass_divide(f, g);
    SeriesDoc out;
    out.field = doc.field;
    out.spec = doc.spec;
    out.truncation = N;
    out.ring = doc.ring;
    out.entries.emplace_back("b", TPoly::from_tps(res.b));
    out.entries.emplace_back("r", res.r.to_tpoly());
    std::ostringstream os;
    os << "# division g = b*f + r, deg r < " << res.n << "\n";
    os << "# n " << res.n << "\n";
    os << "# b certified below t^" << res.b_certified << "\n";
    os << serialize_series(out, "series");
    emit(os.str(), opt.output_path);
    return 0;
}

int cmd_weierstrass_prep(const Options& opt) {
    SeriesDoc doc = parse_series(read_text_file(opt.input_path), "series");
    int N = resolve("truncation", opt.N, doc.truncation);
    Tps f = doc.get_tps("f", N);
    Preparation prep = weierstrass_prepare(f);
    SeriesDoc out;
    out.field = doc.field;
    out.spec = doc.spec;
    out.truncation = N;
    out.ring = doc.ring;
    out.entries.emplace_back("q", prep.q.to_tpoly());
    out.entries.emplace_back("v", TPoly::from_tps(prep.v));
    std::ostringstream os;
    os << "# preparation f = q*v, q monic of degree " << prep.n << "\n";
    os << "# order " << prep.n << "\n";
    os << serialize_series(out, "series");
    emit(os.str(), opt.output_path);
    return 0;
}

int cmd_lift(const Options& opt) {
    VarietyDoc vdoc = parse_variety(read_text_file(opt.variety_path));
    SeriesDoc pdoc = parse_series(read_text_file(opt.point_path), "point");
    SpecialCI X = realize_variety(vdoc, pdoc.field);
    int d = resolve("depth d", opt.d, pdoc.d);
    int N = resolve("truncation", opt.N, pdoc.truncation);
    std::vector<TPoly> xbar;
    for (const auto& v : vdoc.vars) xbar.push_back(pdoc.get(v));
    LiftReport rep = lift_stratum_point(X, xbar, d, N);
    SeriesDoc out;
    out.field = pdoc.field;
    out.spec = pdoc.spec;
    out.truncation = N;
    out.d = d;
    out.ring = pdoc.ring;
    for (int i = 0; i < X.n; ++i)
        out.entries.emplace_back("nu_" + X.ring->var_name(X.y_idx[(size_t)i]),
                                 TPoly::from_tps(rep.nu[(size_t)i]));
    std::ostringstream os;
    os << "# lift of the depth-" << d << " window to truncation " << N << "\n";
    os << "# correction enters at t^" << 2 * d + 1 << ", certified to t^" << rep.certified
       << "\n";
    os << serialize_series(out, "point");
    emit(os.str(), opt.output_path);
    return 0;
}

int cmd_count(const Options& opt) {
    SchemePresentation P = parse_presentation(read_text_file(opt.pres_path));
    CountResult res = count_points(P, opt.q, opt.budget, opt.workers);
    std::ostringstream os;
    os << "count " << res.count << "\n";
    os << "total " << res.total << "\n";
    os << "q " << res.q << "\n";
    emit(os.str(), opt.output_path);
    std::cerr << "arckit: counted in " << res.ms << " ms\n";
    return 0;
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

void add_model_checks(ReportSet& rs) {
    rs.run("model-equations", []() -> std::pair<bool, std::string> {
        auto models = builtin_models(Field::rationals());
        bool y1 = model_remainder_identity(model_by_name(models, "Y1"));
        bool y2 = model_remainder_identity(model_by_name(models, "Y2"));
        return {y1 && y2, "rem(z_low^2, q) reproduces the Y1 and Y2 equations up to sign"};
    });
    rs.run("desk-check-Y2", []() -> std::pair<bool, std::string> {
        auto models = builtin_models(Field::prime(2));
        DeskCheckReport rep = formal_iso_desk_check(model_by_name(models, "Y2"), 2, 5);
        std::ostringstream os;
        os << rep.model_count << " model-side deformations onto " << rep.arc_count
           << " arcs, injective and round-tripped";
        return {rep.pass, os.str()};
    });
    rs.run("desk-check-Y1", []() -> std::pair<bool, std::string> {
        auto models = builtin_models(Field::prime(2));
        DeskCheckReport rep = formal_iso_desk_check(model_by_name(models, "Y1"), 2, 4);
        std::ostringstream os;
        os << rep.model_count << " model-side deformations onto " << rep.arc_count
           << " arcs, injective and round-tripped";
        return {rep.pass, os.str()};
    });
}

void add_counterexample_check(ReportSet& rs) {
    rs.run("counterexample", []() -> std::pair<bool, std::string> {
        CounterexampleReport rep = counterexample_check();
        std::ostringstream os;
        os << "model rank " << rep.base_rank << "/" << rep.base_eqs
           << " at (1,0,0,0); jet ranks " << join_ints(rep.jet_ranks)
           << (rep.jets_smooth ? " all full" : " NOT full");
        return {rep.pass, os.str()};
    });
}

void add_strata_checks(ReportSet& rs, int q, long long budget) {
    rs.run("census-F" + std::to_string(q), [q, budget]() -> std::pair<bool, std::string> {
        CensusReport rep = stratification_census(q, budget);
        std::ostringstream os;
        os << rep.total << " = " << rep.d0 << "*" << rep.tail_factor << " + " << rep.d1
           << " + " << rep.residual;
        return {rep.partition_ok, os.str()};
    });
}

int cmd_verify(const Options& opt) {
    ReportSet rs;
    if (opt.verify_what == "all" || opt.verify_what == "models") add_model_checks(rs);
    if (opt.verify_what == "all" || opt.verify_what == "counterexample")
        add_counterexample_check(rs);
    if (opt.verify_what == "all" || opt.verify_what == "strata")
        add_strata_checks(rs, opt.q, opt.budget);
    if (rs.records().empty())
        throw parameter_error("unknown verify group '" + opt.verify_what +
                              "' (want all, models, counterexample, or strata)");
    emit(opt.json ? rs.json() + "\n" : rs.text(), opt.output_path);
    double total_ms = 0;
    for (const auto& r : rs.records()) total_ms += r.ms;
    std::cerr << "arckit: " << rs.records().size() << " checks in " << total_ms << " ms\n";
    return rs.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arc-scheme presentations, Weierstrass division, and point counting"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* jets = app.add_subcommand("jets", "jet-scheme presentation of a variety file");
    jets->add_option("--variety,-i", opt.variety_path, "variety file (.ci)")->required();
    jets->add_option("--level,-j", opt.level, "jet level (number of coefficients minus 1)")
        ->required();
    jets->add_option("--field", opt.field, "coefficient field: Q or F<p> (default Q)");
    jets->add_option("--output,-o", opt.output_path, "output path (default stdout)");

    CLI::App* stratum =
        app.add_subcommand("stratum", "order-d stratum presentation of a variety file");
    stratum->add_option("--variety,-i", opt.variety_path, "variety file (.ci)")->required();
    stratum->add_option("--d,-d", opt.d, "stratum depth d >= 0")->required();
    stratum->add_option("--field", opt.field, "coefficient field: Q or F<p> (default Q)");
    stratum->add_option("--output,-o", opt.output_path, "output path (default stdout)");

    CLI::App* wei = app.add_subcommand("weierstrass", "division and preparation of t-series");
    wei->require_subcommand(1);
    CLI::App* wdiv = wei->add_subcommand("div", "divide entry g by entry f");
    wdiv->add_option("--input,-i", opt.input_path, "series file with entries f and g")
        ->required();
    wdiv->add_option("--n", opt.n, "divisor order (default: certified order of f)");
    wdiv->add_option("--N", opt.N, "working truncation (default: document header)");
    wdiv->add_option("--output,-o", opt.output_path, "output path (default stdout)");
    CLI::App* wprep = wei->add_subcommand("prep", "prepare entry f as q*v");
    wprep->add_option("--input,-i", opt.input_path, "series file with entry f")->required();
    wprep->add_option("--N", opt.N, "working truncation (default: document header)");
    wprep->add_option("--output,-o", opt.output_path, "output path (default stdout)");

    CLI::App* lift = app.add_subcommand("lift", "lift a stratum window to a longer arc");
    lift->add_option("--variety,-i", opt.variety_path, "variety file (.ci)")->required();
    lift->add_option("--point,-p", opt.point_path, "point file with one entry per variable")
        ->required();
    lift->add_option("--d", opt.d, "stratum depth (default: document header)");
    lift->add_option("--N", opt.N, "target truncation (default: document header)");
    lift->add_option("--output,-o", opt.output_path, "output path (default stdout)");

    CLI::App* count = app.add_subcommand("count", "count presentation points over F_q");
    count->add_option("--presentation,-i", opt.pres_path, "presentation file")->required();
    count->add_option("--q,-q", opt.q, "field size (prime or prime power)")->required();
    count->add_option("--budget", opt.budget, "assignment budget (default 1e8)");
    count->add_option("--workers", opt.workers, "enumeration threads (default 1)");
    count->add_option("--output,-o", opt.output_path, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run built-in verification batteries");
    verify->add_option("what", opt.verify_what,
                       "all | models | counterexample | strata (default all)");
    verify->add_option("--q", opt.q, "field size for the census (default 3)");
    verify->add_option("--budget", opt.budget, "assignment budget (default 1e8)");
    verify->add_option("--seed", opt.seed,
                       "seed for sampled suites (current suites are exhaustive)");
    verify->add_flag("--json", opt.json, "machine-readable output");
    verify->add_option("--output,-o", opt.output_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (jets->parsed()) rc = cmd_jets(opt);
        else if (stratum->parsed()) rc = cmd_stratum(opt);
        else if (wei->parsed()) rc = wdiv->parsed() ? cmd_weierstrass_div(opt)
                                                    : cmd_weierstrass_prep(opt);
        else if (lift->parsed()) rc = cmd_lift(opt);
        else if (count->parsed()) rc = cmd_count(opt);
        else if (verify->parsed()) rc = cmd_verify(opt);
    } catch (const parse_error& e) {
        std::cerr << "arckit: parse error: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "arckit: budget exceeded: " << e.what() << "\n";
        return 5;
    } catch (const obstruction_error& e) {
        std::cerr << "arckit: obstruction: " << e.what() << "\n";
        return 4;
    } catch (const order_error& e) {
        std::cerr << "arckit: order error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "arckit: invalid parameter: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "arckit: error: " << e.what() << "\n";
        return 1;
    }
    auto t1 = std::chrono::steady_clock::now();
    std::cerr << "arckit: done in "
              << std::chrono::duration<double, std::milli>(t1 - t0).count() << " ms\n";
    return rc;
}
