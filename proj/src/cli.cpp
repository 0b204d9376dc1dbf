#include "harborth/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "harborth/numeric.hpp"
#include "harborth/report.hpp"

namespace harborth {

namespace {

std::string iso_timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct CommonOptions {
    std::string format = "text";
    bool no_timestamp = false;
    std::string output_path;
};

// Emits one report in the requested format, appending the timestamp unless
// suppressed (CSV never carries one; its column order is fixed).
void emit(std::ostream& out, const CommonOptions& opts, nlohmann::ordered_json json,
          std::string text, const std::string& csv) {
    if (opts.format == "json") {
        if (!opts.no_timestamp) json["timestamp"] = iso_timestamp();
        out << json.dump(2) << '\n';
    } else if (opts.format == "csv") {
        out << csv;
    } else {
        if (!opts.no_timestamp) text += "timestamp: " + iso_timestamp() + '\n';
        out << text;
    }
}

ElementSet read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("unreadable set file for --set: " + path);
    }
    return ElementSet::read(in);
}

void write_set_file(const std::string& path, const ElementSet& set, const char* flag) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument(std::string("cannot open output file for ") + flag + ": " +
                                    path);
    }
    set.write(out);
}

struct TableRow {
    std::string instance;
    int k;
    std::int64_t paper;
    BoundReport registry;
    std::optional<std::int64_t> solver;
    bool match;
};

std::vector<TableRow> build_table(const std::string& which, bool extended,
                                  const SearchBudget& budget) {
    std::vector<std::tuple<Group, int, std::int64_t>> instances;
    if (which == "thm39") {
        const std::int64_t values[] = {4, 5, 7, 8, 10};
        const int rmax = extended ? 6 : 5;
        for (int r = 2; r <= rmax; ++r) {
            instances.emplace_back(Group::from_moduli(std::vector<std::int64_t>(r, 2)), 4,
                                   values[r - 2]);
        }
    } else if (which == "prop315") {
        const std::int64_t values[] = {4, 5, 5, 5, 6, 7, 7, 7, 7};
        for (std::int64_t n = 4; n <= 12; ++n) {
            instances.emplace_back(Group::from_moduli({n}), 3, values[n - 4]);
        }
    } else if (which == "remark312") {
        for (std::int64_t p : {7, 13, 19})
            instances.emplace_back(Group::from_moduli({p}), 3, ceil_div(p + 8, 3));
        for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23})
            instances.emplace_back(Group::from_moduli({p}), 4, ceil_div(p + 15, 4));
        for (std::int64_t p : {11, 31})
            instances.emplace_back(Group::from_moduli({p}), 5, ceil_div(p + 24, 5));
        for (std::int64_t p : {11, 13, 17, 19, 23})
            instances.emplace_back(Group::from_moduli({p}), 6, ceil_div(p + 35, 6));
    } else if (which == "remark313") {
        instances.emplace_back(Group::from_moduli({7}), 6, 7);
        instances.emplace_back(Group::from_moduli({11}), 8, 10);
        instances.emplace_back(Group::from_moduli({13}), 8, 10);
    } else if (which == "harborth_classical") {
        auto grp = [](std::vector<std::int64_t> m) { return Group::from_moduli(std::move(m)); };
        instances.emplace_back(grp({6}), 6, 7);
        instances.emplace_back(grp({2, 2, 2}), 2, 9);
        instances.emplace_back(grp({3, 3}), 3, 5);
        instances.emplace_back(grp({5, 5}), 5, 9);
        instances.emplace_back(grp({2, 4}), 4, 6);
        instances.emplace_back(grp({2, 6}), 6, 9);
        instances.emplace_back(grp({2, 8}), 8, 10);
        instances.emplace_back(grp({3, 3, 3}), 3, 10);
        instances.emplace_back(grp({3, 9}), 9, 13);
        instances.emplace_back(grp({3, 15}), 15, 18);
        instances.emplace_back(grp({3, 3, 3, 3}), 3, 21);
    } else {
        throw std::invalid_argument("unknown table: " + which);
    }

    const BoundsRegistry registry;
    std::vector<TableRow> rows;
    for (const auto& [g, k, paper] : instances) {
        TableRow row{g.literal(), k, paper, registry.best_bounds(g, k), std::nullopt, true};
        const ExactResult solved = max_zero_sum_free(g, k, budget);
        if (solved.exhausted) row.solver = solved.harborth;
        const bool registry_ok = row.registry.exact
                                     ? *row.registry.exact == paper
                                     : (row.registry.lower <= paper && paper <= row.registry.upper);
        row.match = registry_ok && (!row.solver || *row.solver == paper);
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit_table(std::ostream& out, const CommonOptions& opts, const std::string& which,
                const std::vector<TableRow>& rows) {
    auto registry_str = [](const BoundReport& r) {
        if (r.exact) return std::to_string(*r.exact);
        return std::to_string(r.lower) + ".." + std::to_string(r.upper);
    };
    if (opts.format == "json") {
        nlohmann::ordered_json j;
        j["table"] = which;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json row;
            row["group"] = r.instance;
            row["k"] = r.k;
            row["paper"] = r.paper;
            row["registry_lower"] = r.registry.lower;
            row["registry_upper"] = r.registry.upper;
            if (r.solver) {
                row["solver"] = *r.solver;
            } else {
                row["solver"] = nullptr;
            }
            row["match"] = r.match;
            arr.push_back(row);
        }
        j["rows"] = arr;
        if (!opts.no_timestamp) j["timestamp"] = iso_timestamp();
        out << j.dump(2) << '\n';
    } else if (opts.format == "csv") {
        out << "group,k,paper,registry_lower,registry_upper,solver,match\n";
        for (const auto& r : rows) {
            out << '"' << r.instance << "\"," << r.k << ',' << r.paper << ','
                << r.registry.lower << ',' << r.registry.upper << ',';
            if (r.solver) out << *r.solver;
            out << ',' << (r.match ? "true" : "false") << '\n';
        }
    } else {
        out << "table: " << which << '\n';
        out << std::left << std::setw(14) << "group" << std::setw(4) << "k" << std::setw(7)
            << "paper" << std::setw(10) << "registry" << std::setw(8) << "solver"
            << "match" << '\n';
        for (const auto& r : rows) {
            out << std::left << std::setw(14) << r.instance << std::setw(4) << r.k
                << std::setw(7) << r.paper << std::setw(10) << registry_str(r.registry)
                << std::setw(8) << (r.solver ? std::to_string(*r.solver) : std::string("-"))
                << (r.match ? "ok" : "MISMATCH") << '\n';
        }
        if (!opts.no_timestamp) out << "timestamp: " << iso_timestamp() << '\n';
    }
}

ConstructionResult dispatch_construction(const std::string& name, std::int64_t n, int r,
                                         std::int64_t p, int k, const std::string& group_literal) {
    auto need_group = [&]() {
        if (group_literal.empty()) {
            throw std::invalid_argument("--group is required for " + name);
        }
        return Group::parse(group_literal);
    };
    if (name == "c3_interval") return constructions::c3_interval(n);
    if (name == "c3_odds") return constructions::c3_odds(n);
    if (name == "prop33_assembly") return constructions::prop33_assembly(need_group());
    if (name == "prop34_slab") return constructions::prop34_slab(need_group(), k);
    if (name == "prop36_c2r") return constructions::prop36_c2r(r);
    if (name == "thm311_extremal") return constructions::thm311_extremal(p, k);
    if (name == "prop317_318_set") return constructions::prop317_318_set(n);
    throw std::invalid_argument("unknown construction for --name: " + name);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact values, bounds and certificates for the k-Harborth constant g^k(G)"};
    app.require_subcommand(1);
    // common options may appear after the subcommand name
    app.fallthrough();

    CommonOptions common;
    app.add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_flag("--no-timestamp", common.no_timestamp, "suppress the timestamp field");
    app.add_option("--output", common.output_path, "write the report to a file");

    std::string group_literal;
    int k = 0;
    SearchBudget budget;
    std::string symmetry = "auto";
    std::string set_path;
    std::string witness_out;
    std::string set_out;
    std::string construct_name;
    std::int64_t param_n = 0;
    int param_r = 0;
    std::int64_t param_p = 0;
    bool upto = false;
    bool dsh = false;
    bool extended = false;
    std::int64_t decision_t = -1;
    std::string table_which;

    auto add_budget_opts = [&](CLI::App* cmd) {
        cmd->add_option("--budget-nodes", budget.max_nodes, "node budget");
        cmd->add_option("--budget-seconds", budget.max_seconds, "time budget in seconds");
        cmd->add_option("--symmetry", symmetry, "pruning actions")
            ->check(CLI::IsMember(
                {"none", "scalar", "scalar_and_translation", "linear_over_f2", "auto"}));
        cmd->add_option("--workers", budget.workers, "worker threads for subtree tasks");
    };

    CLI::App* exact = app.add_subcommand("exact", "maximum k-zero-sum-free set search");
    exact->add_option("--group", group_literal, "group literal, e.g. 2,12")->required();
    exact->add_option("--k", k, "subset size k")->required();
    exact->add_option("--exists-size", decision_t,
                      "decision form: search for a free set of exactly this size");
    exact->add_option("--witness-out", witness_out, "write the witness set file here");
    add_budget_opts(exact);

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive reference solver (order <= 20)");
    oracle->add_option("--group", group_literal, "group literal")->required();
    oracle->add_option("--k", k, "subset size k")->required();
    oracle->add_option("--witness-out", witness_out, "write the witness set file here");

    CLI::App* bounds = app.add_subcommand("bounds", "best known bounds for (G, k)");
    bounds->add_option("--group", group_literal, "group literal")->required();
    bounds->add_option("--k", k, "subset size k")->required();

    CLI::App* construct = app.add_subcommand("construct", "generate a lower-bound set");
    construct->add_option("--name", construct_name,
                          "generator: c3_interval|c3_odds|prop33_assembly|prop34_slab|"
                          "prop36_c2r|thm311_extremal|prop317_318_set|fixtures")
        ->required();
    construct->add_option("-n,--n", param_n, "cyclic order n");
    construct->add_option("--r", param_r, "rank r for C_2^r");
    construct->add_option("--p", param_p, "prime p");
    construct->add_option("--k", k, "subset size k");
    construct->add_option("--group", group_literal, "group literal");
    construct->add_option("--set-out", set_out, "write the generated set file here");

    CLI::App* verify = app.add_subcommand("verify", "check a set file for k-zero-sum freeness");
    verify->add_option("--set", set_path, "set file path")->required();
    verify->add_option("--k", k, "subset size k")->required();

    CLI::App* sumset = app.add_subcommand("sumset", "k-subsums of a set file");
    sumset->add_option("--set", set_path, "set file path")->required();
    sumset->add_option("--k", k, "subset size k")->required();
    sumset->add_flag("--upto", upto, "union over subset sizes 1..k");
    sumset->add_flag("--dsh", dsh, "report the restricted-sumset bound check");

    CLI::App* table = app.add_subcommand("table", "reproduce a known-values table");
    table->add_option("which", table_which, "thm39|prop315|remark312|remark313|harborth_classical")
        ->required();
    table->add_flag("--extended", extended, "include the slow rows (thm39 r=6)");
    add_budget_opts(table);

    std::vector<const char*> argv;
    argv.push_back("harborth");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ofstream file_out;
    std::ostream* sink = &out;
    try {
        if (!common.output_path.empty()) {
            file_out.open(common.output_path);
            if (!file_out) {
                throw std::invalid_argument("cannot open --output file: " + common.output_path);
            }
            sink = &file_out;
        }
        if (auto mode = symmetry_from_string(symmetry)) {
            budget.symmetry = *mode;
        }

        if (*exact || *oracle) {
            const Group g = Group::parse(group_literal);
            if (*exact && decision_t >= 0) {
                const DecisionResult d = exists_free_of_size(g, k, decision_t, budget);
                nlohmann::ordered_json j;
                j["group"] = g.literal();
                j["k"] = k;
                j["size"] = decision_t;
                j["status"] = d.status == DecisionStatus::found
                                  ? "found"
                                  : d.status == DecisionStatus::ruled_out ? "ruled_out"
                                                                          : "indeterminate";
                j["nodes_explored"] = d.nodes_explored;
                std::ostringstream text;
                text << "group: " << g.literal() << "\nk: " << k << "\nsize: " << decision_t
                     << "\nstatus: " << j["status"].get<std::string>()
                     << "\nnodes_explored: " << d.nodes_explored << '\n';
                if (d.witness) text << "witness: " << coords_list(*d.witness) << '\n';
                std::ostringstream csv;
                csv << "group,k,size,status,nodes_explored\n"
                    << '"' << g.literal() << "\"," << k << ',' << decision_t << ','
                    << j["status"].get<std::string>() << ',' << d.nodes_explored << '\n';
                if (d.witness && !witness_out.empty()) {
                    write_set_file(witness_out, *d.witness, "--witness-out");
                }
                emit(*sink, common, std::move(j), text.str(), csv.str());
                return d.status == DecisionStatus::indeterminate ? kExitBudget : kExitOk;
            }
            const ExactResult r = *oracle ? brute_force_oracle(g, k) : max_zero_sum_free(g, k, budget);
            if (!witness_out.empty()) {
                write_set_file(witness_out, r.witness, "--witness-out");
            }
            emit(*sink, common, to_json(r), to_text(r), to_csv(r));
            return r.exhausted ? kExitOk : kExitBudget;
        }
        if (*bounds) {
            const Group g = Group::parse(group_literal);
            const BoundsRegistry registry;
            const BoundReport r = registry.best_bounds(g, k);
            emit(*sink, common, to_json(r), to_text(r), to_csv(r));
            return kExitOk;
        }
        if (*construct) {
            if (construct_name == "fixtures") {
                const auto fixtures = constructions::fixture_sets();
                if (common.format == "json") {
                    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
                    for (const auto& f : fixtures) arr.push_back(to_json(f));
                    nlohmann::ordered_json j;
                    j["fixtures"] = arr;
                    if (!common.no_timestamp) j["timestamp"] = iso_timestamp();
                    *sink << j.dump(2) << '\n';
                } else if (common.format == "csv") {
                    *sink << "name,group,k,claimed_size,implied_lower_bound,verified\n";
                    for (const auto& f : fixtures) {
                        *sink << f.name << ",\"" << f.group.literal() << "\"," << f.k << ','
                              << f.claimed_size << ',' << f.implied_lower_bound << ','
                              << (f.verified ? "true" : "false") << '\n';
                    }
                } else {
                    for (const auto& f : fixtures) *sink << to_text(f) << '\n';
                }
                return kExitOk;
            }
            const ConstructionResult r =
                dispatch_construction(construct_name, param_n, param_r, param_p, k, group_literal);
            if (!set_out.empty()) {
                write_set_file(set_out, r.set, "--set-out");
            }
            emit(*sink, common, to_json(r), to_text(r) + r.set.to_string(), to_csv(r));
            return kExitOk;
        }
        if (*verify) {
            const ElementSet s = read_set_file(set_path);
            const bool free = is_k_zero_sum_free(s, k);
            *sink << "k-zero-sum-free: " << (free ? "true" : "false") << '\n';
            return free ? kExitOk : kExitVerification;
        }
        if (*sumset) {
            const ElementSet s = read_set_file(set_path);
            const ElementSet result = upto ? subsums_up_to(s, k) : k_subsums(s, k);
            nlohmann::ordered_json j;
            j["group"] = s.group().literal();
            j["k"] = k;
            j["mode"] = upto ? "upto" : "exactly";
            j["size"] = result.size();
            nlohmann::ordered_json elems = nlohmann::ordered_json::array();
            for (std::uint32_t m : result.indices()) elems.push_back(s.group().coords_of(m));
            j["elements"] = elems;
            std::ostringstream text;
            text << "mode: " << (upto ? "upto" : "exactly") << "\nsize: " << result.size() << '\n'
                 << result.to_string();
            std::ostringstream csv;
            csv << "group,k,mode,size,dsh_size,dsh_bound,dsh_holds\n"
                << '"' << s.group().literal() << "\"," << k << ','
                << (upto ? "upto" : "exactly") << ',' << result.size() << ',';
            if (dsh) {
                const DshCheck check = dsh_check(s, k);
                j["dsh"] = {{"size", check.size}, {"bound", check.bound}, {"holds", check.holds}};
                text << "dsh: size=" << check.size << " bound=" << check.bound
                     << " holds=" << (check.holds ? "true" : "false") << '\n';
                csv << check.size << ',' << check.bound << ','
                    << (check.holds ? "true" : "false");
            } else {
                csv << ",,";
            }
            csv << '\n';
            emit(*sink, common, std::move(j), text.str(), csv.str());
            return kExitOk;
        }
        if (*table) {
            // Table rows default to a small node budget so runs stay fast and
            // deterministic; rows that exceed it show "-" in the solver column.
            if (table->count("--budget-nodes") == 0) budget.max_nodes = 2'000'000;
            const auto rows = build_table(table_which, extended, budget);
            emit_table(*sink, common, table_which, rows);
            const bool all_match =
                std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.match; });
            return all_match ? kExitOk : kExitVerification;
        }
    } catch (const VerificationError& e) {
        err << "verification error: " << e.what() << '\n';
        return kExitVerification;
    } catch (const ConsistencyError& e) {
        err << "consistency error: " << e.what() << '\n';
        return kExitVerification;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace harborth
