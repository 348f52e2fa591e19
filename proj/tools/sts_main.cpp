// Command-line surface over the library: constructions, invariant reports,
// products, quadrilateral scans, corpus spectra and exhaustive censuses.
//
// Exit codes: 0 success, 1 validation or check failure, 2 usage error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sts/census.hpp"
#include "sts/combinatorics.hpp"
#include "sts/constructions.hpp"
#include "sts/core.hpp"
#include "sts/field.hpp"
#include "sts/invariants.hpp"
#include "sts/io.hpp"
#include "sts/oracle.hpp"

namespace fs = std::filesystem;

namespace {

struct GlobalOpts {
    int threads = 1;  // 0 = auto
    bool json = false;
    bool oracle = false;
    bool force_oracle = false;
};

std::string join_elems(const sts::Field& f, const std::vector<sts::Field::Elem>& elems) {
    std::string out = "{";
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) out += ", ";
        out += f.element_name(elems[i]);
    }
    return out + "}";
}

std::string encodings_csv(const std::vector<sts::Field::Elem>& elems) {
    std::string out;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(elems[i]);
    }
    return out;
}

void write_constructed(const fs::path& out, const sts::SteinerTripleSystem& sys,
                       const sts::Headers& headers, const std::string& diag) {
    sts::write_sts_file(out, sys, headers);
    std::cerr << diag << ", wrote " << out.string() << "\n";
}

int run_invariants(const fs::path& input, const GlobalOpts& g, bool table) {
    const sts::SteinerTripleSystem sys = sts::read_sts_file(input);
    const sts::InvariantReport rep = sts::invariant_report(sys, g.threads);
    if (table && !g.json)
        std::cout << sts::report_to_table(rep);
    else
        std::cout << sts::report_to_json(rep).dump() << "\n";

    if (!g.oracle && !g.force_oracle) return 0;
    sts::SuiteOptions opts;
    opts.worker_count = g.threads;
    opts.force_oracle = g.force_oracle;
    const sts::SuiteReport suite = sts::theorem_suite(sys, opts);
    for (const auto& check : suite.checks)
        std::cout << (check.pass ? "ok   " : "FAIL ") << check.name << "  (" << check.detail
                  << ")\n";
    return suite.all_pass() ? 0 : 1;
}

int run_verify_product(const fs::path& left, const fs::path& right, std::int64_t max_triples,
                       const GlobalOpts& g) {
    const sts::SteinerTripleSystem s = sts::read_sts_file(left);
    const sts::SteinerTripleSystem t = sts::read_sts_file(right);
    const std::int64_t mn = static_cast<std::int64_t>(s.order()) * t.order();
    if (sts::binom3(mn) > max_triples)
        throw sts::Error("BudgetExceeded",
                         "product order " + std::to_string(mn) + " needs " +
                             std::to_string(sts::binom3(mn)) + " triples, budget " +
                             std::to_string(max_triples));

    const sts::InvariantReport rs = sts::invariant_report(s, g.threads);
    const sts::InvariantReport rt = sts::invariant_report(t, g.threads);
    const sts::ProductPrediction pred = sts::product_formulas(rs, rt);
    const sts::InvariantReport measured =
        sts::invariant_report(sts::direct_product(s, t), g.threads);

    std::cout << "predicted alpha=" << pred.alpha << " beta=" << pred.beta
              << " gamma=" << pred.gamma << "\n";
    std::cout << "measured  alpha=" << measured.alpha << " beta=" << measured.beta
              << " gamma=" << measured.gamma << "\n";
    const bool match = pred.alpha == measured.alpha && pred.beta == measured.beta &&
                       pred.gamma == measured.gamma;
    std::cout << (match ? "match" : "MISMATCH") << "\n";
    return match ? 0 : 1;
}

int run_pasch(const fs::path& input, bool list, const GlobalOpts& g) {
    const sts::SteinerTripleSystem sys = sts::read_sts_file(input);
    const std::int64_t count = sts::pasch_count(sys, g.threads);
    std::cout << "pasch_count " << count << "\n";
    if (list) {
        for (const sts::PaschConfig& cfg : sts::pasch_configs(sys)) {
            for (int i = 0; i < 4; ++i) {
                if (i) std::cout << " | ";
                const sts::Triple& b = cfg.blocks[static_cast<std::size_t>(i)];
                std::cout << b.p[0] << " " << b.p[1] << " " << b.p[2];
            }
            std::cout << "\n";
        }
    }
    if (g.oracle || g.force_oracle) {
        const std::int64_t by_subsets =
            sts::pasch_count_by_4subsets(sys, 160, g.force_oracle);
        std::cout << "oracle_4subsets " << by_subsets << "\n";
        if (by_subsets != count) {
            std::cout << "MISMATCH\n";
            return 1;
        }
    }
    return 0;
}

std::string flags_word(const sts::InvariantFlags& f) {
    std::string out;
    auto append = [&](bool v, const char* name) {
        if (!v) return;
        if (!out.empty()) out += ",";
        out += name;
    };
    append(f.projective, "projective");
    append(f.anti_pasch, "anti_pasch");
    append(f.strongly_anti_pasch, "strongly_anti_pasch");
    append(f.enough_pasch, "enough_pasch");
    return out.empty() ? "-" : out;
}

int run_spectrum(const fs::path& dir, const GlobalOpts& g) {
    struct Row {
        std::string file;
        sts::Point n = -1;
        bool ok = false;
        sts::InvariantReport rep;
        std::string error;
    };
    std::vector<Row> rows;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".sts") continue;
        Row row;
        row.file = entry.path().filename().string();
        try {
            const sts::SteinerTripleSystem sys = sts::read_sts_file(entry.path());
            row.n = sys.order();
            row.rep = sts::invariant_report(sys, g.threads);
            row.ok = true;
        } catch (const sts::Error& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.ok != b.ok) return a.ok > b.ok;  // error rows last
        if (a.n != b.n) return a.n < b.n;
        return a.file < b.file;
    });

    bool any_error = false;
    std::int64_t violations = 0;
    if (g.json) {
        nlohmann::ordered_json out;
        out["files"] = nlohmann::ordered_json::array();
        for (const Row& row : rows) {
            nlohmann::ordered_json item;
            item["file"] = row.file;
            if (row.ok)
                item["report"] = sts::report_to_json(row.rep);
            else
                item["error"] = row.error;
            out["files"].push_back(std::move(item));
        }
        for (const Row& row : rows) {
            if (!row.ok) {
                any_error = true;
                continue;
            }
            if (!row.rep.bounds_ok || row.rep.gamma == sts::third_binom2(row.rep.n) - 1)
                ++violations;
        }
        out["violations"] = violations;
        std::cout << out.dump() << "\n";
        return (any_error || violations > 0) ? 1 : 0;
    }

    std::cout << std::left << std::setw(28) << "file" << std::right << std::setw(5) << "n"
              << std::setw(10) << "alpha" << std::setw(10) << "beta" << std::setw(8) << "gamma"
              << std::setw(8) << "pasch"
              << "  flags\n";
    for (const Row& row : rows) {
        if (!row.ok) {
            any_error = true;
            std::cout << std::left << std::setw(28) << row.file << "  ERROR " << row.error
                      << "\n";
            continue;
        }
        std::cout << std::left << std::setw(28) << row.file << std::right << std::setw(5)
                  << row.rep.n << std::setw(10) << row.rep.alpha << std::setw(10) << row.rep.beta
                  << std::setw(8) << row.rep.gamma << std::setw(8) << row.rep.pasch_count << "  "
                  << flags_word(row.rep.flags) << "\n";
        if (!row.rep.bounds_ok || row.rep.gamma == sts::third_binom2(row.rep.n) - 1)
            ++violations;
    }
    if (violations == 0)
        std::cout << "no bound or gamma-gap violations\n";
    else
        std::cout << violations << " system(s) violate the bounds or the gamma gap\n";
    return (any_error || violations > 0) ? 1 : 0;
}

int run_gen_all(sts::Point n, const fs::path& outdir) {
    fs::create_directories(outdir);
    const sts::CensusResult result = sts::census(n);

    nlohmann::ordered_json j;
    j["n"] = result.n;
    j["normalized_total"] = result.normalized_total;
    j["labeled_total"] = result.labeled_total;
    j["classes"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < result.classes.size(); ++i) {
        const sts::CensusClass& cls = result.classes[i];
        const std::string name =
            "sts" + std::to_string(n) + "_class" + std::to_string(i + 1) + ".sts";
        sts::write_sts_file(outdir / name, cls.rep,
                            {{"construction", "gen-all n=" + std::to_string(n) + " class=" +
                                                  std::to_string(i + 1)}});
        nlohmann::ordered_json item;
        item["file"] = name;
        item["normalized_count"] = cls.normalized_count;
        item["labeled_count"] = cls.labeled_count;
        item["aut_order"] = cls.aut_order;
        item["report"] = sts::report_to_json(cls.report);
        j["classes"].push_back(std::move(item));
    }
    j["bounds_violation"] = result.bounds_violation;
    j["gamma_gap_violation"] = result.gamma_gap_violation;

    std::ofstream census_file(outdir / ("census" + std::to_string(n) + ".json"));
    census_file << j.dump(2) << "\n";

    std::cout << "order " << n << ": " << result.classes.size() << " isomorphism class(es), "
              << result.normalized_total << " normalized / " << result.labeled_total
              << " labeled systems\n";
    for (std::size_t i = 0; i < result.classes.size(); ++i) {
        const sts::CensusClass& cls = result.classes[i];
        std::cout << "  class " << (i + 1) << ": aut_order=" << cls.aut_order
                  << " pasch=" << cls.report.pasch_count << " alpha=" << cls.report.alpha
                  << " beta=" << cls.report.beta << "\n";
    }
    if (result.bounds_violation || result.gamma_gap_violation) {
        std::cout << "VIOLATION detected during enumeration\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steiner triple systems: constructions, quadrilateral-derived invariants, "
                 "brute-force verification"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--threads", g.threads, "worker threads (0 = auto)")->capture_default_str();
    app.add_flag("--json", g.json, "machine-readable output where applicable");
    app.add_flag("--oracle", g.oracle, "cross-check with brute-force oracles");
    app.add_flag("--force-oracle", g.force_oracle, "run oracles past their size guards");

    int exit_code = 0;

    // construct
    auto* construct = app.add_subcommand("construct", "build a system and write it to a file");
    construct->require_subcommand(1);
    fs::path out_path;

    int pg_k = 2;
    auto* c_pg = construct->add_subcommand("pg", "binary projective geometry, n = 2^(k+1)-1");
    c_pg->add_option("--k", pg_k, "projective dimension, k >= 2")->required();
    c_pg->add_option("-o,--output", out_path, "output file")->required();
    c_pg->callback([&] {
        const sts::SteinerTripleSystem sys = sts::pg(pg_k);
        write_constructed(out_path, sys, {{"construction", "pg k=" + std::to_string(pg_k)}},
                          "construct pg: k=" + std::to_string(pg_k) + ", n=" +
                              std::to_string(sys.order()) + ", " +
                              std::to_string(sys.block_count()) + " blocks");
    });

    int ag_m = 1;
    auto* c_ag = construct->add_subcommand("ag", "m-fold power of the one-block system, n = 3^m");
    c_ag->add_option("--m", ag_m, "power, m >= 1")->required();
    c_ag->add_option("-o,--output", out_path, "output file")->required();
    c_ag->callback([&] {
        const sts::SteinerTripleSystem sys = sts::ag_power(ag_m);
        write_constructed(out_path, sys, {{"construction", "ag m=" + std::to_string(ag_m)}},
                          "construct ag: m=" + std::to_string(ag_m) + ", n=" +
                              std::to_string(sys.order()) + ", " +
                              std::to_string(sys.block_count()) + " blocks");
    });

    int bose_n = 9;
    auto* c_bose = construct->add_subcommand("bose", "Bose construction for n = 3 mod 6");
    c_bose->add_option("--n", bose_n, "order, 3 mod 6")->required();
    c_bose->add_option("-o,--output", out_path, "output file")->required();
    c_bose->callback([&] {
        const sts::SteinerTripleSystem sys = sts::bose(bose_n);
        write_constructed(out_path, sys, {{"construction", "bose n=" + std::to_string(bose_n)}},
                          "construct bose: n=" + std::to_string(bose_n) + ", " +
                              std::to_string(sys.block_count()) + " blocks");
    });

    int netto_q = 0;
    std::vector<sts::Field::Elem> netto_c;
    bool netto_auto = false;
    auto* c_netto =
        construct->add_subcommand("netto", "difference construction over GF(q), q = 6t+1");
    c_netto->add_option("--q", netto_q, "field size, a prime or prime square, 1 mod 6")
        ->required();
    auto* copt = c_netto->add_option("--c", netto_c,
                                     "multiplier set as comma-separated element encodings");
    copt->delimiter(',');
    auto* cauto = c_netto->add_flag("--auto-c", netto_auto,
                                    "pick C with the doubling-closure recursion");
    copt->excludes(cauto);
    c_netto->add_option("-o,--output", out_path, "output file")->required();
    c_netto->callback([&] {
        const sts::Field field = sts::Field::of_order(netto_q);
        if (!netto_auto && netto_c.empty())
            throw sts::Error("WrongCSize", "provide --c or --auto-c");
        const sts::NettoSpec spec = netto_auto ? sts::choose_enough_c(field)
                                               : sts::make_netto_spec(field, netto_c);
        const sts::SteinerTripleSystem sys = sts::netto(spec);
        write_constructed(out_path, sys,
                          {{"construction", "netto q=" + std::to_string(netto_q)},
                           {"x", std::to_string(spec.x)},
                           {"C", encodings_csv(spec.c)}},
                          "construct netto: q=" + std::to_string(netto_q) + ", t=" +
                              std::to_string(spec.t) + ", x=" + field.element_name(spec.x) +
                              ", C = " + join_elems(field, spec.c));
    });

    fs::path left_path, right_path;
    auto* c_prod = construct->add_subcommand("product", "direct product of two system files");
    c_prod->add_option("--left", left_path, "left factor file")->required();
    c_prod->add_option("--right", right_path, "right factor file")->required();
    c_prod->add_option("-o,--output", out_path, "output file")->required();
    c_prod->callback([&] {
        const sts::SteinerTripleSystem s = sts::read_sts_file(left_path);
        const sts::SteinerTripleSystem t = sts::read_sts_file(right_path);
        const sts::SteinerTripleSystem sys = sts::direct_product(s, t);
        write_constructed(
            out_path, sys,
            {{"construction", "product"},
             {"left_order", std::to_string(s.order())},
             {"right_order", std::to_string(t.order())}},
            "construct product: " + std::to_string(s.order()) + " x " +
                std::to_string(t.order()) + " -> n=" + std::to_string(sys.order()) +
                ", point (a,x) = a*" + std::to_string(t.order()) + "+x");
    });

    // invariants
    fs::path inv_input;
    bool inv_table = false;
    auto* inv = app.add_subcommand("invariants", "invariant report for a system file");
    inv->add_option("input", inv_input, "system file")->required();
    inv->add_flag("--table", inv_table, "aligned table instead of JSON");
    inv->callback([&] { exit_code = run_invariants(inv_input, g, inv_table); });

    // product
    auto* prod = app.add_subcommand("product", "direct product of two system files");
    prod->add_option("left", left_path, "left factor file")->required();
    prod->add_option("right", right_path, "right factor file")->required();
    prod->add_option("-o,--output", out_path, "output file")->required();
    prod->callback([&] {
        const sts::SteinerTripleSystem s = sts::read_sts_file(left_path);
        const sts::SteinerTripleSystem t = sts::read_sts_file(right_path);
        const sts::SteinerTripleSystem sys = sts::direct_product(s, t);
        write_constructed(
            out_path, sys,
            {{"construction", "product"},
             {"left_order", std::to_string(s.order())},
             {"right_order", std::to_string(t.order())}},
            "product: " + std::to_string(s.order()) + " x " + std::to_string(t.order()) +
                " -> n=" + std::to_string(sys.order()) + ", point (a,x) = a*" +
                std::to_string(t.order()) + "+x");
    });

    // verify-product
    std::int64_t max_triples = 20'000'000;
    auto* verify = app.add_subcommand(
        "verify-product", "check the product invariant formulas against direct enumeration");
    verify->add_option("left", left_path, "left factor file")->required();
    verify->add_option("right", right_path, "right factor file")->required();
    verify->add_option("--max-triples", max_triples, "enumeration budget in triples")
        ->capture_default_str();
    verify->callback(
        [&] { exit_code = run_verify_product(left_path, right_path, max_triples, g); });

    // pasch
    fs::path pasch_input;
    bool pasch_list = false;
    auto* pasch = app.add_subcommand("pasch", "count (or list) quadrilateral configurations");
    pasch->add_option("input", pasch_input, "system file")->required();
    pasch->add_flag("--list", pasch_list, "print each configuration as its four blocks");
    pasch->callback([&] { exit_code = run_pasch(pasch_input, pasch_list, g); });

    // spectrum
    fs::path spectrum_dir;
    auto* spectrum = app.add_subcommand("spectrum", "invariant table over a directory of .sts files");
    spectrum->add_option("dir", spectrum_dir, "directory")->required();
    spectrum->callback([&] { exit_code = run_spectrum(spectrum_dir, g); });

    // gen-all
    int gen_n = 7;
    fs::path gen_out;
    auto* gen = app.add_subcommand("gen-all",
                                   "exhaustive census with isomorphism-class representatives");
    gen->add_option("--n", gen_n, "order (7, 9 or 13)")
        ->required()
        ->check(CLI::IsMember({7, 9, 13}));
    gen->add_option("-o,--output", gen_out, "output directory")->required();
    gen->callback([&] { exit_code = run_gen_all(gen_n, gen_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const sts::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
