// tap: exact twisted Alexander polynomial engine for presented groups.
//
// Subcommands:
//   alex <input>                       classical Alexander polynomial
//   twisted <input> --degree n         twisted reports over finite quotients
//   fiber-check <input> --max-degree n fibering obstruction search
//   ribbon-check --lower A --upper B   ribbon-concordance divisibility screen
//   catalog list                       built-in knot/link table
//
// Inputs are braid JSON files, presentation JSON files, or catalog:NAME.
// Exit codes: 0 completed, 10 certificate/obstruction found, 20 budget
// exhausted, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tap/catalog.hpp"
#include "tap/obstructions.hpp"
#include "tap/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCertificate = 10;
constexpr int kExitBudget = 20;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadedInput {
    std::string name;
    tap::Presentation presentation;
    std::optional<tap::CatalogEntry> catalog;
};

tap::Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file '" + path + "'");
    try {
        return tap::Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

/// Dispatch on catalog reference vs file, and on braid vs presentation shape.
LoadedInput load_input(const std::string& spec) {
    LoadedInput li;
    if (spec.rfind("catalog:", 0) == 0) {
        const std::string name = spec.substr(8);
        auto entry = tap::find_catalog(name);
        if (!entry) throw InputError("unknown catalog entry '" + name + "'");
        li.name = name;
        li.presentation = tap::catalog_presentation(*entry);
        li.catalog = std::move(entry);
        return li;
    }
    const tap::Json j = parse_json_file(spec);
    li.name = spec;
    try {
        if (j.contains("strands"))
            li.presentation = tap::braid_to_presentation(tap::braid_from_json(j));
        else if (j.contains("generators"))
            li.presentation = tap::presentation_from_json(j);
        else
            throw InputError("'" + spec +
                             "' is neither a braid file (field 'strands') nor a presentation "
                             "file (field 'generators')");
    } catch (const std::invalid_argument& e) {
        throw InputError("in '" + spec + "': " + e.what());
    }
    const tap::ValidationReport rep = li.presentation.validate();
    if (!rep.ok) {
        std::string msg = "invalid presentation in '" + spec + "':";
        for (const auto& v : rep.violations) msg += "\n  - " + v;
        throw InputError(msg);
    }
    return li;
}

void emit(const tap::Json& j, bool compact, const std::string& out_path) {
    const std::string text = compact ? j.dump() : j.dump(2);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw InputError("cannot write output file '" + out_path + "'");
        out << text << "\n";
    }
}

std::optional<double> default_budget_secs() {
    const char* env = std::getenv("TAP_BUDGET_SECS");
    if (env == nullptr || *env == '\0') return std::nullopt;
    try {
        return std::stod(env);
    } catch (const std::exception&) {
        throw InputError("TAP_BUDGET_SECS is not a number");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact twisted Alexander polynomials, fibering obstructions and "
                 "ribbon-concordance screens for presented groups"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    bool compact = false;
    std::string out_path;
    unsigned jobs = 1;
    app.add_flag("--compact", compact, "single-line canonical JSON output");
    app.add_option("-o,--output", out_path, "write the JSON report to a file");
    app.add_option("--jobs", jobs, "worker threads for quotient searches")->capture_default_str();

    // alex
    auto* alex = app.add_subcommand("alex", "classical Alexander polynomial (trivial twist)");
    std::string alex_input;
    alex->add_option("input", alex_input, "braid/presentation JSON or catalog:NAME")->required();

    // twisted
    auto* twisted = app.add_subcommand("twisted", "twisted reports over finite quotients");
    std::string twisted_input;
    int twisted_degree = 3;
    std::size_t twisted_dim_cap = 120;
    twisted->add_option("input", twisted_input, "braid/presentation JSON or catalog:NAME")
        ->required();
    twisted->add_option("--degree", twisted_degree, "largest symmetric group degree")
        ->capture_default_str();
    twisted->add_option("--dim-cap", twisted_dim_cap, "regular representation dimension cap")
        ->capture_default_str();

    // fiber-check
    auto* fiber = app.add_subcommand("fiber-check", "search for a nonfibered-class certificate");
    std::string fiber_input;
    int fiber_max_degree = 5;
    std::size_t fiber_dim_cap = 120;
    double fiber_budget = -1.0;
    fiber->add_option("input", fiber_input, "braid/presentation JSON or catalog:NAME")->required();
    fiber->add_option("--max-degree", fiber_max_degree, "largest symmetric group degree")
        ->capture_default_str();
    fiber->add_option("--dim-cap", fiber_dim_cap, "regular representation dimension cap")
        ->capture_default_str();
    fiber->add_option("--budget", fiber_budget,
                      "wall-clock budget in seconds (default: TAP_BUDGET_SECS or none)");

    // ribbon-check
    auto* ribbon = app.add_subcommand("ribbon-check", "divisibility screen for 'upper >= lower'");
    std::string ribbon_lower, ribbon_upper, rep_pair_path;
    bool upper_fibered_flag = false;
    int transfer_degree = 1;
    ribbon->add_option("--lower", ribbon_lower, "candidate smaller knot/link")->required();
    ribbon->add_option("--upper", ribbon_upper, "candidate larger knot/link")->required();
    ribbon->add_flag("--upper-fibered", upper_fibered_flag,
                     "assert that the upper input is fibered (catalog inputs set this)");
    ribbon->add_option("--transfer-degree", transfer_degree,
                       "quotient depth for the fibered-transfer check")
        ->capture_default_str();
    ribbon->add_option("--rep-pair", rep_pair_path,
                       "JSON file with a matched representation pair {\"lower\":…,\"upper\":…}; "
                       "results are conditional and never drive the verdict");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "built-in table");
    catalog->add_subcommand("list", "list catalog entries");
    catalog->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*alex) {
            const LoadedInput li = load_input(alex_input);
            const auto report = tap::compute_report(
                li.presentation, tap::Representation::trivial(li.presentation.num_generators()));
            tap::Json j;
            j["input"] = li.name;
            j["report"] = tap::report_to_json(report, li.presentation);
            if (const auto info = tap::genus_degree_report(report, 1)) {
                j["degree"] = info->degree;
                if (info->genus_lower_bound) j["genusLowerBound"] = *info->genus_lower_bound;
                j["degreeLabel"] = info->label;
            }
            emit(j, compact, out_path);
            return kExitOk;
        }

        if (*twisted) {
            const LoadedInput li = load_input(twisted_input);
            tap::Json reports = tap::Json::array();
            for (int degree = 1; degree <= twisted_degree; ++degree) {
                const auto found = tap::enumerate_homs(li.presentation, degree);
                for (const auto& h : tap::dedupe(found.homs)) {
                    const auto g = tap::image_subgroup(h);
                    if (g.size() > twisted_dim_cap) continue;
                    const auto rep =
                        degree == 1
                            ? tap::Representation::trivial(li.presentation.num_generators())
                            : tap::Representation::regular(g, h);
                    const auto report = tap::compute_report(li.presentation, rep);
                    tap::Json entry;
                    entry["degree"] = degree;
                    entry["hom"] = tap::hom_to_json(h, li.presentation);
                    entry["report"] = tap::report_to_json(report, li.presentation);
                    reports.push_back(std::move(entry));
                }
            }
            tap::Json j;
            j["input"] = li.name;
            j["maxDegree"] = twisted_degree;
            j["reports"] = std::move(reports);
            emit(j, compact, out_path);
            return kExitOk;
        }

        if (*fiber) {
            const LoadedInput li = load_input(fiber_input);
            tap::FiberCheckOptions opts;
            opts.max_degree = fiber_max_degree;
            opts.dim_cap = fiber_dim_cap;
            opts.jobs = jobs;
            opts.budget_secs =
                fiber_budget >= 0 ? std::optional<double>(fiber_budget) : default_budget_secs();
            const tap::FiberVerdict v = tap::fiber_check(li.presentation, opts);
            tap::Json j;
            j["input"] = li.name;
            j.update(tap::fiber_verdict_to_json(v, li.presentation));
            emit(j, compact, out_path);
            if (v.status == tap::FiberStatus::NonfiberedCertified) return kExitCertificate;
            if (v.status == tap::FiberStatus::BudgetExhausted) return kExitBudget;
            return kExitOk;
        }

        if (*ribbon) {
            const LoadedInput lower = load_input(ribbon_lower);
            const LoadedInput upper = load_input(ribbon_upper);
            tap::RibbonOptions opts;
            opts.lower_name = lower.name;
            opts.upper_name = upper.name;
            opts.jobs = jobs;
            opts.transfer_max_degree = transfer_degree;
            if (upper_fibered_flag)
                opts.upper_fibered = true;
            else if (upper.catalog)
                opts.upper_fibered = upper.catalog->fibered;
            if (!rep_pair_path.empty()) {
                const tap::Json pj = parse_json_file(rep_pair_path);
                try {
                    opts.rep_pairs.emplace_back(
                        tap::representation_from_json(pj.at("lower"), lower.presentation),
                        tap::representation_from_json(pj.at("upper"), upper.presentation));
                } catch (const std::exception& e) {
                    throw InputError(std::string("in rep-pair file: ") + e.what());
                }
            }
            const tap::RibbonReport r =
                tap::ribbon_screen(lower.presentation, upper.presentation, opts);
            emit(tap::ribbon_report_to_json(r, lower.presentation, upper.presentation), compact,
                 out_path);
            return r.verdict == tap::RibbonVerdict::Obstructed ? kExitCertificate : kExitOk;
        }

        if (*catalog) {
            tap::Json j = tap::Json::array();
            for (const auto& e : tap::catalog_entries()) j.push_back(tap::catalog_entry_to_json(e));
            emit(j, compact, out_path);
            return kExitOk;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const tap::BudgetExhausted& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
