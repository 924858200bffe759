#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgpart/report.hpp"

namespace {

using sgpart::GeneratorSet;
using sgpart::Int;
using ordered_json = nlohmann::ordered_json;

std::string join(const std::vector<Int>& values, const char* sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << sep;
        out << values[i];
    }
    return out.str();
}

void print_redundant_note(const GeneratorSet& gens) {
    if (!gens.redundant().empty())
        std::cout << "note: redundant generators: " << join(gens.redundant(), ",") << "\n";
}

void run_verify(const std::vector<Int>& gens_values, Int nmax, bool json) {
    const GeneratorSet gens(gens_values);
    const sgpart::IdentityReport report = sgpart::verify_identity(gens, nmax);
    if (json)
        std::cout << sgpart::to_json(report).dump(2) << "\n";
    else
        std::cout << sgpart::render_human(report);
}

void run_gaps(const std::vector<Int>& gens_values, bool json) {
    const GeneratorSet gens(gens_values);
    const std::vector<Int> gap_list = sgpart::gaps(gens);
    std::optional<Int> frob;
    if (!gap_list.empty()) frob = gap_list.back();
    if (json) {
        ordered_json j;
        j["gens"] = gens.gens();
        j["gaps"] = gap_list;
        if (frob)
            j["frobenius"] = *frob;
        else
            j["frobenius"] = nullptr;
        j["count"] = static_cast<Int>(gap_list.size());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "gens: " << join(gens.gens(), ",") << "\n";
        print_redundant_note(gens);
        std::cout << "gaps: {" << join(gap_list, ",") << "}\n";
        if (frob)
            std::cout << "frobenius: " << *frob << "\n";
        else
            std::cout << "frobenius: none\n";
        std::cout << "count: " << gap_list.size() << "\n";
    }
}

void run_star(const std::vector<Int>& gens_values, bool all_orderings, bool json) {
    const GeneratorSet gens(gens_values);
    const sgpart::StarCertificate cert = sgpart::check_star(gens);
    std::optional<sgpart::StarOrdering> any;
    if (all_orderings) any = sgpart::check_star_any_ordering(gens);
    if (json) {
        ordered_json j;
        j["gens"] = gens.gens();
        j["star"] = sgpart::to_json(cert);
        if (all_orderings) {
            if (any) {
                ordered_json o;
                o["ordering"] = any->ordering.gens();
                o["star"] = sgpart::to_json(any->certificate);
                j["any_ordering"] = std::move(o);
            } else {
                j["any_ordering"] = nullptr;
            }
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "gens: " << join(gens.gens(), ",") << "\n";
        print_redundant_note(gens);
        if (cert.holds)
            std::cout << "star: holds\n";
        else
            std::cout << "star: fails at i=" << *cert.failing_index << "\n";
        for (const auto& w : cert.witnesses) {
            std::cout << "  i=" << w.i << ": ell=" << w.ell;
            if (w.j)
                std::cout << " witness j=" << *w.j;
            else
                std::cout << " no witness";
            std::cout << "\n";
        }
        if (all_orderings) {
            if (any)
                std::cout << "first holding ordering: " << join(any->ordering.gens(), ",") << "\n";
            else
                std::cout << "no ordering holds\n";
        }
    }
}

void run_series(const std::vector<Int>& gens_values, Int degree, const std::string& which,
                bool json) {
    const GeneratorSet gens(gens_values);
    sgpart::TruncatedSeries series(0);
    if (which == "semigroup")
        series = sgpart::semigroup_series(gens, degree);
    else if (which == "lemma-gen")
        series = sgpart::product_form_series(gens, degree);
    else if (which == "mult")
        series = sgpart::multiplicity_gf(gens, degree);
    else if (which == "div")
        series = sgpart::divisibility_gf(gens, degree);
    else if (which == "exponent")
        series = sgpart::exponent_form_gf(gens, degree);
    else
        throw sgpart::InvalidInput("unknown series kind: " + which);
    if (json) {
        ordered_json j;
        j["gens"] = gens.gens();
        j["which"] = which;
        j["degree_bound"] = series.degree_bound();
        j["coeffs"] = series.coeffs();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << join(series.coeffs(), ",") << "\n";
    }
}

void run_search(int m, Int max_gen, Int nmax, unsigned jobs, bool json) {
    const sgpart::SearchOptions options{m, max_gen, nmax, jobs};
    const auto progress = [](std::size_t completed, std::size_t total) {
        const std::size_t step = std::max<std::size_t>(1, total / 20);
        if (completed % step == 0 || completed == total)
            std::cerr << "search: " << completed << "/" << total << " tuples\n";
    };
    const std::vector<sgpart::SearchRecord> records = sgpart::run_search(options, progress);
    for (const auto& record : records) {
        if (json)
            std::cout << sgpart::to_json(record).dump() << "\n";
        else
            std::cout << sgpart::render_human(record) << "\n";
    }
    const std::string summary = sgpart::render_search_summary(records);
    if (json)
        std::cerr << summary;  // keep stdout pure newline-delimited records
    else
        std::cout << summary;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroups, three restricted partition families, and their identities"};
    app.require_subcommand(1);

    std::vector<Int> gens_values;
    Int nmax = 0;
    Int degree = 0;
    Int max_gen = 0;
    int m = 0;
    unsigned jobs = 0;
    bool json = false;
    bool all_orderings = false;
    std::string which;

    auto* verify = app.add_subcommand(
        "verify", "count the three partition families for n = 0..nmax and cross-check them");
    verify->add_option("--gens", gens_values, "comma-separated generators")
        ->required()
        ->delimiter(',');
    verify->add_option("--nmax", nmax, "largest n to check")->required()->check(CLI::NonNegativeNumber);
    verify->add_flag("--json", json, "emit JSON");
    verify->callback([&] { run_verify(gens_values, nmax, json); });

    auto* gaps_cmd = app.add_subcommand("gaps", "list the complement of the semigroup");
    gaps_cmd->add_option("--gens", gens_values, "comma-separated generators")
        ->required()
        ->delimiter(',');
    gaps_cmd->add_flag("--json", json, "emit JSON");
    gaps_cmd->callback([&] { run_gaps(gens_values, json); });

    auto* star_cmd = app.add_subcommand("star", "check the star condition for the given ordering");
    star_cmd->add_option("--gens", gens_values, "comma-separated generators")
        ->required()
        ->delimiter(',');
    star_cmd->add_flag("--all-orderings", all_orderings,
                       "also look for a permutation whose certificate holds");
    star_cmd->add_flag("--json", json, "emit JSON");
    star_cmd->callback([&] { run_star(gens_values, all_orderings, json); });

    auto* series_cmd = app.add_subcommand("series", "expand a series to a degree bound");
    series_cmd->add_option("--gens", gens_values, "comma-separated generators")
        ->required()
        ->delimiter(',');
    series_cmd->add_option("--degree", degree, "degree bound")
        ->required()
        ->check(CLI::NonNegativeNumber);
    series_cmd
        ->add_option("--which", which,
                     "one of: semigroup, lemma-gen, mult, div, exponent")
        ->required()
        ->check(CLI::IsMember({"semigroup", "lemma-gen", "mult", "div", "exponent"}));
    series_cmd->add_flag("--json", json, "emit JSON");
    series_cmd->callback([&] { run_series(gens_values, degree, which, json); });

    auto* search_cmd = app.add_subcommand(
        "search", "sweep generator tuples and compare the star condition with the identity");
    search_cmd->add_option("--m", m, "tuple size")->required()->check(CLI::Range(3, 1000));
    search_cmd->add_option("--max-gen", max_gen, "largest generator value")
        ->required()
        ->check(CLI::Range(static_cast<Int>(3), static_cast<Int>(1) << 40));
    search_cmd->add_option("--nmax", nmax, "largest n to check per tuple")
        ->required()
        ->check(CLI::NonNegativeNumber);
    search_cmd->add_option("--jobs", jobs, "worker threads (0 = hardware concurrency)");
    search_cmd->add_flag("--json", json, "emit newline-delimited JSON records");
    search_cmd->callback([&] { run_search(m, max_gen, nmax, jobs, json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const sgpart::InternalInconsistency& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const sgpart::OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const sgpart::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
