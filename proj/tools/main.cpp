#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "crossnest/charlier.hpp"
#include "crossnest/checks.hpp"
#include "crossnest/genfun.hpp"
#include "crossnest/group_seq.hpp"
#include "crossnest/partition.hpp"
#include "crossnest/serialize.hpp"
#include "crossnest/similarity.hpp"
#include "crossnest/tree.hpp"

namespace {

using namespace crossnest;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_enumerate(int n, int k, const std::string& format) {
    if (format == "json") {
        json out;
        out["n"] = n;
        if (k >= 0) out["k"] = k;
        out["partitions"] = json::array();
        auto visit = [&](const SetPartition& p) { out["partitions"].push_back(to_json(p)); };
        if (k >= 0)
            for_each_partition_k(n, k, visit);
        else
            for_each_partition(n, visit);
        emit_json(out);
    } else {
        auto visit = [&](const SetPartition& p) { std::cout << p.str() << "\n"; };
        if (k >= 0)
            for_each_partition_k(n, k, visit);
        else
            for_each_partition(n, visit);
    }
    return kExitOk;
}

int cmd_stats(const std::string& pi_text, const std::string& format) {
    const SetPartition p = parse_partition(pi_text);
    if (format == "json") {
        json out = to_json(p);
        out["k"] = p.block_count();
        out["cr"] = cr(p);
        out["ne"] = ne(p);
        out["al"] = al(p);
        emit_json(out);
    } else {
        std::cout << "n\t" << p.n() << "\n";
        std::cout << "k\t" << p.block_count() << "\n";
        std::cout << "cr\t" << cr(p) << "\n";
        std::cout << "ne\t" << ne(p) << "\n";
        std::cout << "al\t" << al(p) << "\n";
    }
    return kExitOk;
}

int cmd_tree_dist(const std::string& root_text, int level, std::optional<int> blocks,
                  const std::string& format) {
    const SetPartition root = parse_partition(root_text);
    const MultiSet<GroupVec> dist = stat_distribution(root, level, blocks, kAlpha, kBeta);
    if (format == "json") {
        json out;
        out["root"] = root.str();
        out["level"] = level;
        if (blocks) out["blocks"] = *blocks;
        out["dist"] = json::array();
        for (const auto& [g, m] : dist.items())
            out["dist"].push_back({{"cr", g.a}, {"ne", g.b}, {"count", m}});
        emit_json(out);
    } else {
        for (const auto& [g, m] : dist.items())
            std::cout << g.a << "\t" << g.b << "\t" << m << "\n";
    }
    return kExitOk;
}

int cmd_classes(int n, int k, const std::string& stat_name, const std::string& method,
                const std::string& format) {
    const SimStat which = stat_name == "cr" ? SimStat::cr : SimStat::ne;
    std::optional<long long> brute, formula;
    if (method == "brute" || method == "both") brute = count_classes_brute(n, k, which);
    if (method == "formula" || method == "both")
        formula = which == SimStat::cr ? count_cr_formula(n, k) : count_ne_recurrence(n, k);

    if (format == "json") {
        json out{{"n", n}, {"k", k}, {"stat", stat_name}};
        if (brute) out["brute"] = *brute;
        if (formula) out["formula"] = *formula;
        emit_json(out);
    } else {
        if (brute) std::cout << "brute\t" << *brute << "\n";
        if (formula) std::cout << "formula\t" << *formula << "\n";
    }
    if (brute && formula && *brute != *formula) {
        std::cerr << "classes: routes disagree (brute=" << *brute
                  << ", formula=" << *formula << ")\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

json series_to_json(const ZSeries& s) {
    json rows = json::array();
    for (int l = 0; l <= s.order(); ++l)
        for (const auto& [key, c] : s.coeff(l).terms())
            rows.push_back(
                {{"l", l}, {"deg_q", key.first}, {"deg_p", key.second}, {"coeff", c}});
    return rows;
}

void series_to_tsv(const ZSeries& s) {
    for (int l = 0; l <= s.order(); ++l)
        for (const auto& [key, c] : s.coeff(l).terms())
            std::cout << l << "\t" << key.first << "\t" << key.second << "\t" << c << "\n";
}

int cmd_gf(const std::string& pi_text, bool all, int order, const std::string& route,
           const std::string& fraction, const std::string& format) {
    ZSeries series(order);
    if (all) {
        series = fraction == "v1" ? fraction_allpartitions_v1(order)
                                  : fraction_allpartitions_v2(order);
    } else {
        const SetPartition pi = parse_partition(pi_text);
        std::optional<ZSeries> theorem, brute;
        if (route == "theorem" || route == "both") theorem = s_pi_theorem(pi, order);
        if (route == "brute" || route == "both") brute = s_pi_brute(pi, order);
        if (theorem && brute && !(*theorem == *brute)) {
            std::cerr << "gf: routes disagree for " << pi.str() << " at order " << order
                      << "\n";
            return kExitCheckFailed;
        }
        series = theorem ? *theorem : *brute;
    }
    if (format == "json")
        emit_json(series_to_json(series));
    else
        series_to_tsv(series);
    return kExitOk;
}

int cmd_verify(const std::string& suite, const std::string& format) {
    std::vector<checks::CheckResult> results;
    try {
        results = checks::run_suite(suite);
    } catch (const std::invalid_argument& err) {
        std::cerr << "verify: " << err.what() << "\n";
        return kExitUsage;
    }
    long long passed = 0;
    for (const auto& r : results) passed += r.pass ? 1 : 0;
    if (format == "json") {
        json out{{"suite", suite}, {"results", json::array()}};
        for (const auto& r : results)
            out["results"].push_back({{"label", r.label}, {"pass", r.pass}, {"detail", r.detail}});
        out["passed"] = passed;
        out["total"] = results.size();
        emit_json(out);
    } else {
        for (const auto& r : results) {
            std::cout << (r.pass ? "ok" : "FAIL") << "\t" << r.label;
            if (!r.detail.empty()) std::cout << "\t" << r.detail;
            std::cout << "\n";
        }
        std::cout << "passed\t" << passed << "/" << results.size() << "\n";
    }
    return passed == static_cast<long long>(results.size()) ? kExitOk : kExitCheckFailed;
}

int cmd_tables(const std::string& format) {
    const checks::TableReport crossing = checks::crossing_table_report();
    const checks::TableReport nesting = checks::nesting_table_report();
    const checks::TableAnomaly anomaly = checks::crossing_table_anomaly();

    bool ok = true;
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            const size_t i = static_cast<size_t>(n - 1), j = static_cast<size_t>(k - 1);
            if (crossing.computed[i][j] != crossing.brute[i][j]) ok = false;
            if (nesting.computed[i][j] != nesting.brute[i][j]) ok = false;
            if (nesting.printed[i][j] != nesting.computed[i][j]) ok = false;
            const bool is_anomaly_cell = n == anomaly.n && k == anomaly.k;
            if (!is_anomaly_cell && crossing.printed[i][j] != crossing.computed[i][j])
                ok = false;
            if (is_anomaly_cell && (crossing.printed[i][j] != anomaly.printed ||
                                    crossing.computed[i][j] != anomaly.computed))
                ok = false;
        }

    if (format == "json") {
        json out;
        out["crossing"] = {{"printed", crossing.printed},
                           {"computed", crossing.computed},
                           {"brute", crossing.brute}};
        out["nesting"] = {{"printed", nesting.printed},
                          {"computed", nesting.computed},
                          {"brute", nesting.brute}};
        out["anomalies"] = json::array({{{"table", "crossing"},
                                         {"n", anomaly.n},
                                         {"k", anomaly.k},
                                         {"printed", anomaly.printed},
                                         {"computed", anomaly.computed}}});
        out["consistent"] = ok;
        emit_json(out);
    } else {
        auto print_table = [](const char* name, const std::vector<std::vector<long long>>& rows) {
            std::cout << name << "\n";
            for (size_t i = 0; i < rows.size(); ++i) {
                std::cout << (i + 1);
                for (long long value : rows[i]) std::cout << "\t" << value;
                std::cout << "\n";
            }
        };
        print_table("crossing-similarity classes", crossing.printed);
        print_table("nesting-similarity classes", nesting.printed);
        std::cout << "anomaly\tcrossing\tn=" << anomaly.n << "\tk=" << anomaly.k
                  << "\tprinted=" << anomaly.printed << "\tcomputed=" << anomaly.computed
                  << "\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crossing and nesting statistics of set partitions"};
    app.require_subcommand(1);

    std::string format = "tsv";
    const auto format_check = CLI::IsMember({"tsv", "json"});

    auto* enumerate = app.add_subcommand("enumerate", "list set partitions of [n]");
    int enum_n = 0, enum_k = -1;
    enumerate->add_option("--n", enum_n, "ground-set size")->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--k", enum_k, "restrict to k blocks")->check(CLI::NonNegativeNumber);
    enumerate->add_option("--format", format)->check(format_check);

    auto* stats = app.add_subcommand("stats", "statistics of one partition");
    std::string stats_pi;
    stats->add_option("--pi", stats_pi, "partition, e.g. 1,2,5/3,4")->required();
    stats->add_option("--format", format)->check(format_check);

    auto* tree_dist = app.add_subcommand("tree-dist",
                                         "(cr,ne) distribution over a subtree level");
    std::string root_text;
    int td_level = 0;
    int td_blocks = -1;
    tree_dist->add_option("--root", root_text, "root partition")->required();
    tree_dist->add_option("--level", td_level, "depth below the root")->required()->check(CLI::NonNegativeNumber);
    tree_dist->add_option("--blocks", td_blocks, "restrict to this block count")->check(CLI::NonNegativeNumber);
    tree_dist->add_option("--format", format)->check(format_check);

    auto* classes = app.add_subcommand("classes", "similarity class counts");
    int cls_n = 0, cls_k = 0;
    std::string cls_stat, cls_method = "both";
    classes->add_option("--n", cls_n)->required()->check(CLI::PositiveNumber);
    classes->add_option("--k", cls_k)->required()->check(CLI::PositiveNumber);
    classes->add_option("--stat", cls_stat, "cr or ne")
        ->required()
        ->check(CLI::IsMember({"cr", "ne"}));
    classes->add_option("--method", cls_method)->check(CLI::IsMember({"brute", "formula", "both"}));
    classes->add_option("--format", format)->check(format_check);

    auto* gf = app.add_subcommand("gf", "generating function coefficients");
    std::string gf_pi, gf_route = "both", gf_fraction = "v2";
    bool gf_all = false;
    int gf_order = 0;
    gf->add_option("--pi", gf_pi, "root partition");
    gf->add_flag("--all", gf_all, "series over all partitions");
    gf->add_option("--order", gf_order, "truncation order in z")->required()->check(CLI::NonNegativeNumber);
    gf->add_option("--route", gf_route)->check(CLI::IsMember({"theorem", "brute", "both"}));
    gf->add_option("--fraction", gf_fraction)->check(CLI::IsMember({"v1", "v2"}));
    gf->add_option("--format", format)->check(format_check);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    verify->add_option("name", suite, "suite name or 'all'");
    verify->add_option("--suite", suite, "suite name or 'all'")->excludes("name");
    verify->add_option("--format", format)->check(format_check);

    auto* tables = app.add_subcommand("tables", "class-count tables with cross-checks");
    tables->add_option("--format", format)->check(format_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(enum_n, enum_k, format);
        if (stats->parsed()) return cmd_stats(stats_pi, format);
        if (tree_dist->parsed())
            return cmd_tree_dist(root_text, td_level,
                                 td_blocks >= 0 ? std::optional<int>(td_blocks) : std::nullopt,
                                 format);
        if (classes->parsed()) return cmd_classes(cls_n, cls_k, cls_stat, cls_method, format);
        if (gf->parsed()) {
            const bool have_pi = gf->count("--pi") > 0;
            if (gf_all == have_pi) {
                std::cerr << "gf: pass exactly one of --pi and --all\n";
                return kExitUsage;
            }
            return cmd_gf(gf_pi, gf_all, gf_order, gf_route, gf_fraction, format);
        }
        if (verify->parsed()) return cmd_verify(suite, format);
        if (tables->parsed()) return cmd_tables(format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
