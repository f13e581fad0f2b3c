// hlcd: command-line front end for quaternary Hermitian LCD codes.
#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlcd/code.hpp"
#include "hlcd/errors.hpp"
#include "hlcd/io.hpp"
#include "hlcd/search.hpp"
#include "hlcd/transform.hpp"

namespace {

using namespace hlcd;
using Json = nlohmann::ordered_json;

struct Loaded {
    LinearCode code;
    std::string hash;
};

Loaded load(const std::string& path) {
    const std::string text = io::read_file(path);
    return {io::parse_code(text), io::fnv1a_hex(text)};
}

void emit_code(const LinearCode& code, const std::vector<std::string>& header, const std::string& out_path) {
    const std::string text = io::format_code_file(code, header);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        io::write_file(out_path, text);
    }
}

MinWeightMethod parse_method(const std::string& name) {
    if (name == "exhaustive") return MinWeightMethod::Exhaustive;
    if (name == "pruned") return MinWeightMethod::Pruned;
    if (name == "auto") return MinWeightMethod::Auto;
    throw InvalidArgument("unknown method '" + name + "'");
}

std::string join_coords(const std::vector<std::size_t>& t) {
    std::string s;
    for (std::size_t i : t) s += (s.empty() ? "" : ",") + std::to_string(i);
    return s;
}

int report_error(std::string_view kind, const std::string& message, Json extra = Json::object()) {
    Json j;
    j["error"] = kind;
    j["message"] = message;
    for (auto& [key, value] : extra.items()) j[key] = value;
    std::cerr << j.dump() << "\n";
    return 1;
}

struct Common {
    unsigned threads = 1;
    std::string format = "text";
    std::string output;
};

void add_threads(CLI::App* sub, Common& c) {
    sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
}

void add_format(CLI::App* sub, Common& c) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_output(CLI::App* sub, Common& c) {
    sub->add_option("-o,--output", c.output, "Output code file (default: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, transform and verify quaternary Hermitian LCD codes"};
    app.require_subcommand(1);
    Common common;

    std::string file;
    std::vector<std::size_t> coords;

    // info
    auto* info = app.add_subcommand("info", "Summarize a code");
    bool exact_d = false;
    std::optional<std::uint64_t> budget;
    std::string method = "auto";
    info->add_option("file", file, "Code file")->required();
    info->add_flag("--exact-d", exact_d, "Fail instead of reporting a budget-truncated bound");
    info->add_option("--budget", budget, "Max projective classes per minimum-weight run");
    info->add_option("--method", method, "Minimum-weight algorithm")
        ->check(CLI::IsMember({"exhaustive", "pruned", "auto"}));
    add_threads(info, common);
    add_format(info, common);

    auto* dual = app.add_subcommand("dual", "Hermitian dual");
    dual->add_option("file", file, "Code file")->required();
    add_output(dual, common);

    auto* punct = app.add_subcommand("puncture", "Delete coordinates");
    punct->add_option("file", file, "Code file")->required();
    punct->add_option("-t", coords, "1-based coordinates")->required()->delimiter(',');
    add_output(punct, common);

    auto* shrt = app.add_subcommand("shorten", "Shorten on coordinates");
    shrt->add_option("file", file, "Code file")->required();
    shrt->add_option("-t", coords, "1-based coordinates")->required()->delimiter(',');
    add_output(shrt, common);

    auto* ortho = app.add_subcommand("orthonormalize", "Generator G with G conj(G)^T = I");
    ortho->add_option("file", file, "Code file")->required();
    add_output(ortho, common);

    auto* parity = app.add_subcommand("parity", "Column-parity report for single-coordinate derivatives");
    parity->add_option("file", file, "Code file")->required();
    add_threads(parity, common);
    add_format(parity, common);

    auto* axy = app.add_subcommand("axy", "Hull-preserving A(x,y) construction");
    std::string xs;
    std::string ys;
    bool standardize = false;
    axy->add_option("file", file, "Code file")->required();
    axy->add_option("--x", xs, "Symbols of x")->required();
    axy->add_option("--y", ys, "Symbols of y")->required();
    axy->add_flag("--standardize", standardize, "Bring the generator to (I|A) first, permuting columns if needed");
    add_output(axy, common);

    auto* pair = app.add_subcommand("pair-check", "Check (x,x)_h = (y,y)_h = (x,y)_h = 0");
    pair->add_option("--x", xs, "Symbols of x")->required();
    pair->add_option("--y", ys, "Symbols of y")->required();
    add_format(pair, common);

    auto* srch = app.add_subcommand("search", "Seeded search for an LCD code");
    SearchConfig cfg;
    std::string strategy;
    std::vector<std::string> base_files;
    srch->add_option("--n", cfg.n, "Length")->required();
    srch->add_option("--k", cfg.k, "Dimension")->required();
    srch->add_option("--target-d", cfg.target_d, "Target minimum weight")->required();
    srch->add_option("--seed", cfg.seed, "Seed")->required();
    srch->add_option("--budget", cfg.budget, "Max candidate codes")->required();
    srch->add_option("--strategy", strategy, "random, axy or puncture-shorten")
        ->required()
        ->check(CLI::IsMember({"random", "axy", "puncture-shorten"}));
    srch->add_option("--base", base_files, "Starting code file (repeatable)");
    srch->add_option("--plateau-cap", cfg.plateau_cap, "Sideways moves before a restart (axy)");
    add_threads(srch, common);
    add_format(srch, common);
    add_output(srch, common);

    auto* verify = app.add_subcommand("verify-table", "Compare result codes with the bounds table");
    std::string results_dir;
    std::string bounds_csv;
    verify->add_option("--results", results_dir, "Directory of code files")->required();
    verify->add_option("--bounds", bounds_csv, "Bounds CSV (default: built-in table)");
    add_threads(verify, common);
    add_format(verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        const io::Format format = io::parse_format(common.format);
        const MinWeightOptions mw{.budget = std::nullopt, .threads = common.threads, .method = MinWeightMethod::Auto};

        if (info->parsed()) {
            const LinearCode c = load(file).code;
            MinWeightOptions opts{.budget = budget, .threads = common.threads, .method = parse_method(method)};
            const CodeSummary s = summarize(c, opts);
            if (exact_d && (!s.d_exact || !s.d_dual_exact)) {
                // Recompute to surface the BudgetExceeded with its bound.
                if (!s.d_exact) exact_min_weight(c, opts);
                exact_min_weight(hermitian_dual(c), opts);
            }
            std::cout << io::emit_summary(s, format);
        } else if (dual->parsed()) {
            const Loaded in = load(file);
            emit_code(hermitian_dual(in.code), {"hlcd dual", "parent " + in.hash}, common.output);
        } else if (punct->parsed() || shrt->parsed()) {
            const Loaded in = load(file);
            const CoordinateSet t{std::vector<std::size_t>(coords)};
            const bool is_punct = punct->parsed();
            const LinearCode out = is_punct ? puncture(in.code, t) : shorten(in.code, t);
            emit_code(out, {std::string("hlcd ") + (is_punct ? "puncture" : "shorten") + " -t " + join_coords(t.indices()),
                            "parent " + in.hash},
                      common.output);
        } else if (ortho->parsed()) {
            const Loaded in = load(file);
            emit_code(LinearCode(orthonormalize(in.code)), {"hlcd orthonormalize", "parent " + in.hash}, common.output);
        } else if (parity->parsed()) {
            const LinearCode c = load(file).code;
            const ParityReport rep = lcd_column_parity(c);
            const CodeSummary s = summarize(c, mw);
            const bool hypotheses = s.is_lcd && s.d.value_or(0) >= 2 && (!s.d_dual || *s.d_dual >= 2);
            Json rows = Json::array();
            std::ostringstream text;
            text << "coordinate column_weight predicted puncture_lcd shorten_lcd\n";
            bool agree = true;
            for (const ColumnParity& col : rep.columns) {
                const DerivativeLcd direct = derivative_lcd(c, col.coordinate);
                const char* predicted = col.puncture_lcd ? "puncture" : "shorten";
                agree = agree && direct.punctured == col.puncture_lcd && direct.shortened == col.shorten_lcd;
                text << col.coordinate << " " << col.column_weight << " " << predicted << " "
                     << (direct.punctured ? "yes" : "no") << " " << (direct.shortened ? "yes" : "no") << "\n";
                Json r;
                r["coordinate"] = col.coordinate;
                r["column_weight"] = col.column_weight;
                r["predicted"] = predicted;
                r["puncture_lcd"] = direct.punctured;
                r["shorten_lcd"] = direct.shortened;
                rows.push_back(r);
            }
            text << "hypotheses (LCD, d >= 2, d_dual >= 2): " << (hypotheses ? "yes" : "no") << "\n";
            text << "predictions match: " << (agree ? "yes" : "no") << "\n";
            if (format == io::Format::Json) {
                Json j;
                j["n"] = c.length();
                j["k"] = c.dimension();
                j["hypotheses"] = hypotheses;
                j["predictions_match"] = agree;
                j["columns"] = rows;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << text.str();
            }
        } else if (axy->parsed()) {
            const Loaded in = load(file);
            LinearCode c = in.code;
            std::vector<std::string> header{"hlcd axy --x " + xs + " --y " + ys, "parent " + in.hash};
            if (standardize) {
                const StandardForm sf = standard_form(c.generator());
                if (!sf.permutation.is_identity()) {
                    std::string perm;
                    for (std::size_t j : sf.permutation.source()) perm += (perm.empty() ? "" : ",") + std::to_string(j + 1);
                    header.push_back("column order " + perm);
                }
                c = LinearCode(sf.matrix);
            }
            const IsotropicPair p(F4Vector::parse(xs), F4Vector::parse(ys));
            emit_code(axy_construct(c, p), header, common.output);
        } else if (pair->parsed()) {
            const F4Vector x = F4Vector::parse(xs);
            const F4Vector y = F4Vector::parse(ys);
            const IsotropyReport r = check_isotropic(x, y);
            if (format == io::Format::Json) {
                Json j;
                j["xx"] = std::string(1, r.xx.symbol());
                j["yy"] = std::string(1, r.yy.symbol());
                j["xy"] = std::string(1, r.xy.symbol());
                j["pass"] = r.pass && !x.is_zero() && !y.is_zero();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "(x,x)_h = " << r.xx.symbol() << "\n(y,y)_h = " << r.yy.symbol() << "\n(x,y)_h = "
                          << r.xy.symbol() << "\n";
            }
            IsotropicPair checked(x, y);  // throws with the violated products
            if (format == io::Format::Text) std::cout << "isotropic: yes\n";
        } else if (srch->parsed()) {
            cfg.strategy = parse_strategy(strategy);
            cfg.threads = common.threads;
            std::vector<std::string> header{"hlcd search --n " + std::to_string(cfg.n) + " --k " + std::to_string(cfg.k) +
                                            " --target-d " + std::to_string(cfg.target_d) + " --seed " +
                                            std::to_string(cfg.seed) + " --budget " + std::to_string(cfg.budget) +
                                            " --strategy " + strategy};
            header.push_back("seed " + std::to_string(cfg.seed));
            for (const std::string& b : base_files) {
                const Loaded in = load(b);
                cfg.bases.push_back(in.code);
                header.push_back("parent " + in.hash);
            }
            const SearchResult r = search(cfg);
            if (!r.found) {
                Json extra;
                extra["candidates_tried"] = r.candidates_tried;
                extra["best_d"] = r.best_d;
                return report_error(kind_name(ErrorKind::BudgetExceeded),
                                    "no LCD code with d >= " + std::to_string(cfg.target_d) + " within " +
                                        std::to_string(cfg.budget) + " candidates",
                                    extra);
            }
            header.push_back("candidates " + std::to_string(r.candidates_tried));
            header.push_back("d " + std::to_string(*r.summary->d));
            emit_code(*r.found, header, common.output);
            if (!common.output.empty() && common.output != "-") std::cout << io::emit_summary(*r.summary, format);
        } else if (verify->parsed()) {
            const BoundsTable table = bounds_csv.empty() ? BoundsTable::builtin()
                                                         : BoundsTable::parse_csv(io::read_file(bounds_csv));
            std::vector<std::filesystem::path> paths;
            for (const auto& entry : std::filesystem::directory_iterator(results_dir)) {
                if (entry.is_regular_file() && entry.path().filename().string().front() != '.') {
                    paths.push_back(entry.path());
                }
            }
            std::sort(paths.begin(), paths.end());
            std::vector<LabeledSummary> results;
            for (const auto& p : paths) {
                results.push_back({p.filename().string(), summarize(load(p.string()).code, mw)});
            }
            const std::vector<BoundVerdict> verdicts = verify_bounds(results, table);
            if (format == io::Format::Json) {
                Json arr = Json::array();
                for (const BoundVerdict& v : verdicts) {
                    Json j;
                    j["label"] = v.label;
                    j["n"] = v.summary.n;
                    j["k"] = v.summary.k;
                    j["d"] = v.summary.d ? Json(*v.summary.d) : Json(nullptr);
                    j["lower"] = v.entry.lower;
                    j["upper"] = v.entry.upper;
                    j["status"] = bound_status_name(v.status);
                    arr.push_back(j);
                }
                std::cout << arr.dump() << "\n";
            } else {
                for (const BoundVerdict& v : verdicts) {
                    std::cout << "(" << v.summary.n << "," << v.summary.k << ") " << v.label << " d="
                              << (v.summary.d ? std::to_string(*v.summary.d) : "-") << " bounds=" << v.entry.lower
                              << ".." << v.entry.upper << " " << bound_status_name(v.status) << "\n";
                }
            }
        }
        return 0;
    } catch (const BudgetExceeded& e) {
        Json extra;
        extra["upper_bound"] = e.upper_bound();
        return report_error(kind_name(e.kind()), e.what(), extra);
    } catch (const IsotropyViolated& e) {
        Json extra;
        const auto& p = e.products();
        extra["products"] = {std::string(1, Gf4::from_bits(p[0]).symbol()), std::string(1, Gf4::from_bits(p[1]).symbol()),
                             std::string(1, Gf4::from_bits(p[2]).symbol())};
        return report_error(kind_name(e.kind()), e.what(), extra);
    } catch (const ParseError& e) {
        Json extra;
        extra["line"] = e.line();
        extra["column"] = e.column();
        return report_error(kind_name(e.kind()), e.what(), extra);
    } catch (const Error& e) {
        return report_error(kind_name(e.kind()), e.what());
    } catch (const std::filesystem::filesystem_error& e) {
        return report_error(kind_name(ErrorKind::InvalidArgument), e.what());
    } catch (const std::exception& e) {
        std::cerr << "hlcd " << command << ": internal error: " << e.what() << "\n";
        return 3;
    }
}
