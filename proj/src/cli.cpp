// SPDX-License-Identifier: Apache-2.0
#include "gcodelab/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcodelab/constructions.hpp"
#include "gcodelab/errors.hpp"
#include "gcodelab/io.hpp"
#include "gcodelab/schur.hpp"
#include "gcodelab/sweep.hpp"
#include "gcodelab/theorems.hpp"

namespace gcodelab::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommandConfig {
    std::string group_spec;
    std::string group_file;
    std::optional<std::uint32_t> p;
    std::vector<std::string> gens;
    std::string code_file;
    std::vector<std::string> with;
    std::string with_code_file;
    std::string subgroup;
    std::string out;
    bool json_output = false;
    bool exhaustive = false;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
    unsigned threads = default_threads();
    std::optional<std::uint64_t> guard;
    std::size_t max_t = 64;
    std::uint64_t budget = 1000000;
    std::size_t rm_r = 0;
    std::size_t rm_m = 0;
};

std::uint64_t effective_guard(const CommandConfig& cfg) {
    if (cfg.guard) return *cfg.guard;
    if (const char* env = std::getenv("GCODELAB_GUARD")) {
        try {
            const auto v = std::stoull(env);
            if (v == 0) throw UsageError("GCODELAB_GUARD must be >= 1");
            return v;
        } catch (const std::logic_error&) {
            throw UsageError(std::string("bad GCODELAB_GUARD value '") + env + "'");
        }
    }
    return kDefaultGuard;
}

GroupPtr load_group(const CommandConfig& cfg) {
    if (!cfg.group_spec.empty() && !cfg.group_file.empty()) throw UsageError("give exactly one of --group and --group-file");
    if (!cfg.group_spec.empty()) return parse_group_spec(cfg.group_spec);
    if (!cfg.group_file.empty()) return group_from_json(read_json_file(cfg.group_file));
    throw UsageError("a group is required (--group or --group-file)");
}

FieldSpec load_field(const CommandConfig& cfg) {
    if (!cfg.p) throw UsageError("a field is required (--p)");
    return FieldSpec(*cfg.p);
}

GCode code_from(const CommandConfig& cfg, const std::vector<std::string>& gens, const std::string& file) {
    if (!file.empty()) {
        if (!gens.empty()) throw UsageError("give generators or a code file, not both");
        return code_from_json(read_json_file(file));
    }
    if (gens.empty()) throw UsageError("a code is required (--gen or --code)");
    const GroupPtr g = load_group(cfg);
    const FieldSpec f = load_field(cfg);
    std::vector<AlgElem> elems;
    for (const auto& text : gens) elems.push_back(AlgElem::parse(g, f, text));
    return ideal_from_generators(g, f, elems);
}

GCode primary_code(const CommandConfig& cfg) { return code_from(cfg, cfg.gens, cfg.code_file); }

std::string basis_text(const GCode& c) {
    std::ostringstream s;
    s << "[";
    for (std::size_t i = 0; i < c.dim(); ++i) {
        s << (i ? ",[" : "[");
        const auto row = c.basis().row(i);
        for (std::size_t j = 0; j < row.size(); ++j) s << (j ? "," : "") << row[j];
        s << "]";
    }
    s << "]";
    return s.str();
}

json params_json(const ParamReport& r) {
    json j{{"n", r.length}, {"k", r.dimension}, {"bound_ok", r.bound_ok}, {"equality", r.equality}};
    j["d"] = r.min_distance ? json(*r.min_distance) : json(nullptr);
    j["product"] = r.product ? json(*r.product) : json(nullptr);
    return j;
}

void print_params(std::ostream& out, const ParamReport& r) {
    out << "n=" << r.length << " k=" << r.dimension;
    if (!r.min_distance) {
        out << " d=none (zero code)\n";
        return;
    }
    out << " d=" << *r.min_distance << "\n";
    out << "bound " << *r.min_distance << "*" << r.dimension << (r.equality ? " = " : " >= ") << r.length << ", "
        << (r.equality ? "equality" : "strict") << "\n";
}

void emit_code(std::ostream& out, const CommandConfig& cfg, const GCode& c) {
    const json j = code_to_json(c);
    if (!cfg.out.empty()) write_json_file(cfg.out, j);
    if (cfg.json_output)
        out << j.dump() << "\n";
    else
        out << "dim " << c.dim() << "\nbasis " << basis_text(c) << "\n";
}

SweepOptions sweep_options(const CommandConfig& cfg) {
    SweepOptions opt;
    opt.source.exhaustive = cfg.exhaustive;
    opt.source.samples = cfg.samples;
    opt.source.seed = cfg.seed;
    opt.threads = cfg.threads;
    opt.guard = effective_guard(cfg);
    return opt;
}

int report_result(std::ostream& out, const CommandConfig& cfg, const std::string& check, const SweepReport& r) {
    json j = report_to_json(r);
    j["check"] = check;
    if (!cfg.out.empty()) write_json_file(cfg.out, j);
    if (cfg.json_output) {
        out << j.dump() << "\n";
    } else {
        out << check << ": checked " << r.checked << ", failures " << r.failures.size() << "\n";
        for (const auto& f : r.failures) out << "  [" << f.check << "] " << f.subject << ": " << f.message << "\n";
    }
    return r.ok() ? kExitOk : kExitCheckFailed;
}

void add_group_options(CLI::App* cmd, CommandConfig& cfg) {
    cmd->add_option("--group", cfg.group_spec, "builtin group, e.g. cyclic:4, dihedral:4, elemabelian:2,3, cyclic:4*cyclic:2");
    cmd->add_option("--group-file", cfg.group_file, "group JSON file");
}

void add_field_option(CLI::App* cmd, CommandConfig& cfg) {
    cmd->add_option("--p,--field", cfg.p, "prime field characteristic");
}

void add_code_options(CLI::App* cmd, CommandConfig& cfg) {
    add_group_options(cmd, cfg);
    add_field_option(cmd, cfg);
    cmd->add_option("--gen", cfg.gens, "generator coefficients in group-index order, e.g. 1,2");
    cmd->add_option("--code", cfg.code_file, "code JSON file");
    cmd->add_option("--guard", cfg.guard, "maximum p^k for codeword enumeration")->check(CLI::PositiveNumber);
}

void add_output_options(CLI::App* cmd, CommandConfig& cfg) {
    cmd->add_option("--out", cfg.out, "write the JSON result to this file");
    cmd->add_flag("--json", cfg.json_output, "print JSON instead of a table");
}

void add_sweep_options(CLI::App* cmd, CommandConfig& cfg) {
    add_group_options(cmd, cfg);
    add_field_option(cmd, cfg);
    cmd->add_flag("--exhaustive", cfg.exhaustive, "visit every element of F_p G");
    cmd->add_option("--samples", cfg.samples, "number of sampled elements when not exhaustive");
    cmd->add_option("--seed", cfg.seed, "random seed");
    cmd->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--guard", cfg.guard, "maximum p^k for codeword enumeration")->check(CLI::PositiveNumber);
    add_output_options(cmd, cfg);
}

std::vector<Elem> parse_indices(const std::string& text) {
    std::vector<Elem> out;
    std::stringstream s(text);
    std::string tok;
    while (std::getline(s, tok, ','))
        if (!tok.empty()) out.push_back(std::stoul(tok));
    return out;
}

int run_group(CLI::App* cmd, std::ostream& out, const CommandConfig& cfg) {
    const GroupPtr g = load_group(cfg);
    const json j = group_to_json(*g);
    if (cmd->got_subcommand("make")) {
        if (!cfg.out.empty()) write_json_file(cfg.out, j);
        out << j.dump(cfg.json_output ? -1 : 2) << "\n";
        return kExitOk;
    }
    if (cfg.json_output) {
        out << j.dump() << "\n";
        return kExitOk;
    }
    out << "group " << g->name() << " of order " << g->order() << "\n";
    out << "generators:";
    for (Elem x : g->generators()) out << " " << g->label(x);
    out << "\n";
    for (Elem x = 0; x < g->order(); ++x)
        out << std::setw(4) << x << "  " << std::left << std::setw(14) << g->label(x) << std::right << " order "
            << g->element_order(x) << "\n";
    return kExitOk;
}

int run_code(CLI::App* cmd, std::ostream& out, const CommandConfig& cfg) {
    if (cmd->got_subcommand("induced")) {
        const GroupPtr g = load_group(cfg);
        const Subgroup h = subgroup_generated(g, parse_indices(cfg.subgroup));
        emit_code(out, cfg, trivial_induced(h, load_field(cfg)));
        return kExitOk;
    }
    const GCode c = primary_code(cfg);
    if (cmd->got_subcommand("ideal")) {
        emit_code(out, cfg, c);
    } else if (cmd->got_subcommand("dual")) {
        emit_code(out, cfg, dual(c));
    } else if (cmd->got_subcommand("params")) {
        const ParamReport r = params(c, effective_guard(cfg));
        json j = params_json(r);
        j["self_orthogonal"] = is_self_orthogonal(c);
        if (!cfg.out.empty()) write_json_file(cfg.out, j);
        if (cfg.json_output)
            out << j.dump() << "\n";
        else {
            print_params(out, r);
            out << "self-orthogonal " << (is_self_orthogonal(c) ? "yes" : "no") << "\n";
        }
    }
    return kExitOk;
}

int run_construct(std::ostream& out, const CommandConfig& cfg) {
    const GCode c = reed_muller({cfg.rm_r, cfg.rm_m});
    const ParamReport r = params(c, effective_guard(cfg));
    if (cfg.json_output) {
        json j = code_to_json(c);
        j["params"] = params_json(r);
        if (!cfg.out.empty()) write_json_file(cfg.out, code_to_json(c));
        out << j.dump() << "\n";
        return kExitOk;
    }
    if (!cfg.out.empty()) write_json_file(cfg.out, code_to_json(c));
    out << "RM(" << cfg.rm_r << "," << cfg.rm_m << ") over " << c.group()->name() << "\n";
    print_params(out, r);
    return kExitOk;
}

int run_schur(CLI::App* cmd, std::ostream& out, const CommandConfig& cfg) {
    const GCode c = primary_code(cfg);
    if (cmd->got_subcommand("product")) {
        const bool has_other = !cfg.with.empty() || !cfg.with_code_file.empty();
        const GCode other = has_other ? code_from(cfg, cfg.with, cfg.with_code_file) : c;
        emit_code(out, cfg, schur_product(c, other));
        return kExitOk;
    }
    if (cmd->got_subcommand("power")) {
        const SchurChainReport r = schur_power_chain(c, cfg.max_t);
        json j{{"dims", r.dims},
               {"regularity", r.regularity},
               {"converged", r.converged},
               {"cycle_start", r.cycle_start},
               {"cycle_length", r.cycle_length}};
        j["stabilizer_subgroup"] = r.stabilizer_subgroup ? json(r.stabilizer_subgroup->members()) : json(nullptr);
        j["stabilized_basis"] =
            r.stabilized_code ? json(r.stabilized_code->basis().matrix().to_rows()) : json(nullptr);
        if (!cfg.out.empty()) write_json_file(cfg.out, j);
        if (cfg.json_output) {
            out << j.dump() << "\n";
        } else {
            out << "dims";
            for (auto d : r.dims) out << " " << d;
            out << "\nregularity " << r.regularity << "\n";
            if (r.converged)
                out << "code cycle starts at t=" << r.cycle_start << " with period " << r.cycle_length << "\n";
            else
                out << "no repeated code within max-t=" << cfg.max_t << "\n";
            if (r.stabilizer_subgroup) {
                out << "limit K_H^G with H = {";
                const auto& m = r.stabilizer_subgroup->members();
                for (std::size_t i = 0; i < m.size(); ++i) out << (i ? ", " : "") << c.group()->label(m[i]);
                out << "}\n";
            }
        }
        return r.converged ? kExitOk : kExitCheckFailed;
    }
    // fixed-point
    const Subgroup h = fixed_point_structure(c, effective_guard(cfg));
    json j{{"subgroup", h.members()}};
    if (cfg.json_output) {
        out << j.dump() << "\n";
    } else {
        out << "C = K_H^G with H = {";
        for (std::size_t i = 0; i < h.members().size(); ++i) out << (i ? ", " : "") << c.group()->label(h.members()[i]);
        out << "}\n";
    }
    return kExitOk;
}

int run_verify(CLI::App* cmd, std::ostream& out, const CommandConfig& cfg) {
    const GroupPtr g = load_group(cfg);
    const FieldSpec f = load_field(cfg);
    const SweepOptions opt = sweep_options(cfg);
    if (cmd->got_subcommand("up")) return report_result(out, cfg, "up", verify_uncertainty(g, f, opt));
    if (cmd->got_subcommand("bound")) return report_result(out, cfg, "bound", verify_bound(g, f, opt));
    if (cmd->got_subcommand("equality")) return report_result(out, cfg, "equality", verify_equality(g, f, opt));
    if (cmd->got_subcommand("schur")) return report_result(out, cfg, "schur", verify_schur(g, f, opt));
    return report_result(out, cfg, "all", verify_all(g, f, opt));
}

int run_search(CLI::App* cmd, std::ostream& out, const CommandConfig& cfg) {
    if (cmd->got_subcommand("golay")) {
        const GolaySearchResult r = golay_search(cfg.budget, cfg.seed, cfg.threads);
        json j{{"budget", cfg.budget},
               {"seed", cfg.seed},
               {"found", r.code.has_value()},
               {"trials_run", r.trials_run},
               {"dimension_hits", r.dimension_hits}};
        if (r.code) {
            j["trial_index"] = r.trial_index;
            j["generator"] = r.generator->to_string();
            j["params"] = params_json(params(*r.code));
            j["self_dual"] = dual(*r.code) == *r.code;
            j["basis"] = r.code->basis().matrix().to_rows();
        }
        if (!cfg.out.empty()) write_json_file(cfg.out, j);
        if (cfg.json_output) {
            out << j.dump() << "\n";
        } else if (r.code) {
            out << "found [24,12,8] self-dual ideal at trial " << r.trial_index << "\ngenerator " << r.generator->to_string()
                << "\n";
        } else {
            out << "no [24,12,8] ideal within " << cfg.budget << " trials (" << r.dimension_hits
                << " trials reached dimension 12)\n";
        }
        return kExitOk;
    }
    // sweep
    const GroupPtr g = load_group(cfg);
    const FieldSpec f = load_field(cfg);
    const auto rows = sweep_report(g, f, sweep_options(cfg));
    json j = json::array();
    for (const auto& r : rows)
        j.push_back({{"generator", r.generator},
                     {"k", r.k},
                     {"d", r.d},
                     {"dk", r.product},
                     {"ratio", r.ratio},
                     {"self_orthogonal", r.self_orthogonal},
                     {"square_dim", r.square_dim}});
    if (!cfg.out.empty()) write_json_file(cfg.out, j);
    if (cfg.json_output) {
        for (const auto& row : j) out << row.dump() << "\n";
        return kExitOk;
    }
    out << std::setw(4) << "k" << std::setw(4) << "d" << std::setw(6) << "d*k" << std::setw(8) << "ratio" << std::setw(6)
        << "s.o." << std::setw(8) << "dim C*C" << "  generator\n";
    for (const auto& r : rows)
        out << std::setw(4) << r.k << std::setw(4) << r.d << std::setw(6) << r.product << std::setw(8) << std::fixed
            << std::setprecision(3) << r.ratio << std::setw(6) << (r.self_orthogonal ? "yes" : "no") << std::setw(8)
            << r.square_dim << "  " << r.generator << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CommandConfig cfg;
    CLI::App app{"Group codes: parameters, Schur products and structure checks", "gcodelab"};
    app.require_subcommand(1);

    auto* group = app.add_subcommand("group", "build or inspect groups")->require_subcommand(1);
    for (auto* sub : {group->add_subcommand("make", "write a builtin group as JSON"),
                      group->add_subcommand("show", "list elements and orders")}) {
        add_group_options(sub, cfg);
        add_output_options(sub, cfg);
    }

    auto* code = app.add_subcommand("code", "construct codes and report parameters")->require_subcommand(1);
    for (auto* sub : {code->add_subcommand("ideal", "right ideal generated by --gen"),
                      code->add_subcommand("params", "[n, k, d] and the d*k >= |G| bound"),
                      code->add_subcommand("dual", "dual code")}) {
        add_code_options(sub, cfg);
        add_output_options(sub, cfg);
    }
    auto* induced = code->add_subcommand("induced", "K_H^G for the subgroup generated by --subgroup");
    add_group_options(induced, cfg);
    add_field_option(induced, cfg);
    induced->add_option("--subgroup", cfg.subgroup, "comma separated element indices generating H")->required();
    add_output_options(induced, cfg);

    auto* construct = app.add_subcommand("construct", "named codes")->require_subcommand(1);
    auto* rm = construct->add_subcommand("rm", "binary Reed-Muller code RM(r, m)");
    rm->add_option("--r", cfg.rm_r, "order")->required();
    rm->add_option("--m", cfg.rm_m, "number of variables (<= 6)")->required();
    rm->add_option("--guard", cfg.guard, "maximum p^k for codeword enumeration")->check(CLI::PositiveNumber);
    add_output_options(rm, cfg);

    auto* schur = app.add_subcommand("schur", "Schur products")->require_subcommand(1);
    auto* product = schur->add_subcommand("product", "C * C' (C' defaults to C)");
    product->add_option("--with", cfg.with, "generators of the second code");
    product->add_option("--with-code", cfg.with_code_file, "second code JSON file");
    auto* power = schur->add_subcommand("power", "Schur power chain C^(t)");
    power->add_option("--max-t", cfg.max_t, "maximum number of powers")->check(CLI::PositiveNumber);
    auto* fixed = schur->add_subcommand("fixed-point", "recover H with C = K_H^G for C = C * C");
    for (auto* sub : {product, power, fixed}) {
        add_code_options(sub, cfg);
        add_output_options(sub, cfg);
    }

    auto* verify = app.add_subcommand("verify", "exhaustive or sampled theorem checks")->require_subcommand(1);
    for (const char* name : {"up", "bound", "equality", "schur", "all"}) add_sweep_options(verify->add_subcommand(name), cfg);

    auto* search = app.add_subcommand("search", "searches and sweeps")->require_subcommand(1);
    auto* golay = search->add_subcommand("golay", "look for a [24,12,8] ideal in F_2 S_4");
    golay->add_option("--budget", cfg.budget, "number of sampled generators");
    golay->add_option("--seed", cfg.seed, "random seed");
    golay->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    add_output_options(golay, cfg);
    add_sweep_options(search->add_subcommand("sweep", "parameters of every cyclic ideal"), cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (group->parsed()) return run_group(group, out, cfg);
        if (code->parsed()) return run_code(code, out, cfg);
        if (construct->parsed()) return run_construct(out, cfg);
        if (schur->parsed()) return run_schur(schur, out, cfg);
        if (verify->parsed()) return run_verify(verify, out, cfg);
        if (search->parsed()) return run_search(search, out, cfg);
    } catch (const InvariantViolation& e) {
        err << "check failed: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace gcodelab::cli
