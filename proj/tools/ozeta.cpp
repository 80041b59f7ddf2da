// Command-line front end: Kloosterman tables, identity verification
// campaigns, overorder oracle diffs and the finite trace factor.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "report.hpp"

using namespace orderzeta;

namespace {

struct common_flags {
    long local_prime = 2;
    long const_prime = 5;
    unsigned k = 1;
    std::string sign = "+";
    unsigned trunc = 0;  // 0 = per-prime default
    unsigned vmax = 4;
    unsigned rmax = 2;
    long n = 0;
    long f = 0;
    std::string pair_budget = "300000000";
    int workers = 0;
    std::string out;
    std::string format = "json";
    bool stable_output = false;
};

void add_common(CLI::App* cmd, common_flags& fl) {
    cmd->add_option("--local-prime", fl.local_prime,
                    "enumeration prime q of the local sums");
    cmd->add_option("--const-prime", fl.const_prime,
                    "prime p of the fixed constant +-p^k");
    cmd->add_option("--k", fl.k, "exponent k of the constant");
    cmd->add_option("--sign", fl.sign, "sign of the constant, + or -")
        ->check(CLI::IsMember({"+", "-"}));
    cmd->add_option("--trunc", fl.trunc, "series truncation order");
    cmd->add_option("--vmax", fl.vmax, "largest v exponent (ktab)");
    cmd->add_option("--rmax", fl.rmax, "largest r exponent (ktab)");
    cmd->add_option("--n", fl.n, "global index n");
    cmd->add_option("--f", fl.f, "global index f");
    cmd->add_option("--pair-budget", fl.pair_budget,
                    "largest admissible residue-pair count");
    cmd->add_option("--workers", fl.workers,
                    "worker threads (0 = hardware, env OZETA_WORKERS)");
    cmd->add_option("--out", fl.out, "output path (default stdout)");
    cmd->add_option("--format", fl.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--stable-output", fl.stable_output,
                  "zero the elapsed_ms field (byte-stable reports)");
}

local_options make_options(const common_flags& fl) {
    local_options opt;
    opt.pair_budget = Int(fl.pair_budget);
    opt.workers = fl.workers;
    if (opt.workers == 0) {
        if (const char* env = std::getenv("OZETA_WORKERS"))
            opt.workers = std::atoi(env);
    }
    return opt;
}

unsigned default_trunc(long q) {
    if (q == 2) return 10;
    if (q == 3) return 7;
    if (q == 5) return 5;
    return 4;
}

int emit(const common_flags& fl, const json& j, const std::string& csv) {
    std::string text = fl.format == "csv" ? csv : j.dump(2) + "\n";
    if (fl.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(fl.out, std::ios::binary);
        os << text;
    }
    return 0;
}

long elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

json params_json(const common_flags& fl,
                 std::initializer_list<const char*> keys) {
    json p = json::object();
    for (const char* key : keys) {
        std::string k = key;
        if (k == "local-prime") p[k] = fl.local_prime;
        if (k == "const-prime") p[k] = fl.const_prime;
        if (k == "k") p[k] = fl.k;
        if (k == "sign") p[k] = fl.sign;
        if (k == "vmax") p[k] = fl.vmax;
        if (k == "rmax") p[k] = fl.rmax;
        if (k == "n") p[k] = fl.n;
        if (k == "f") p[k] = fl.f;
    }
    return p;
}

int run_ktab(common_flags& fl) {
    auto t0 = std::chrono::steady_clock::now();
    local_options opt = make_options(fl);
    signed_constant c{Int(fl.const_prime), fl.k, fl.sign == "-" ? -1 : +1};
    table_report rep;
    rep.params = params_json(
        fl, {"local-prime", "const-prime", "k", "sign", "vmax", "rmax"});
    for (unsigned v = 0; v <= fl.vmax; ++v)
        for (unsigned r = 0; r <= fl.rmax; ++r) {
            table_entry e;
            e.v = v;
            e.r = r;
            try {
                e.value = local_K(fl.local_prime, c, v, r, opt).get_str();
            } catch (const resource_error& ex) {
                e.error = std::string(ex.what()) + " (pairs ~ " +
                          ex.estimated_pairs.get_str() + ")";
            }
            rep.entries.push_back(std::move(e));
        }
    rep.elapsed_ms = fl.stable_output ? 0 : elapsed_since(t0);
    emit(fl, rep.to_json(), rep.to_csv());
    for (const auto& e : rep.entries)
        if (!e.error.empty()) return 1;
    return 0;
}

int finish(common_flags& fl, match_report& rep,
           std::chrono::steady_clock::time_point t0) {
    rep.elapsed_ms = fl.stable_output ? 0 : elapsed_since(t0);
    emit(fl, rep.to_json(), rep.to_csv());
    return rep.pass() ? 0 : 1;
}

int run_verify_local(common_flags& fl) {
    auto t0 = std::chrono::steady_clock::now();
    kloosterman_table table(make_options(fl));
    unsigned T = fl.trunc ? fl.trunc : default_trunc(fl.local_prime);
    match_report rep;
    rep.command = "verify local";
    rep.params = params_json(fl, {"local-prime", "const-prime", "k", "sign"});
    rep.params["trunc"] = T;
    rep.items = verify_local(table, fl.local_prime, fl.const_prime, fl.k,
                             fl.sign == "-" ? -1 : +1, T);
    return finish(fl, rep, t0);
}

int run_verify_intermediate(common_flags& fl) {
    auto t0 = std::chrono::steady_clock::now();
    kloosterman_table table(make_options(fl));
    unsigned T = fl.trunc ? fl.trunc : default_trunc(fl.local_prime);
    match_report rep;
    rep.command = "verify intermediate";
    rep.params = params_json(fl, {"local-prime", "const-prime", "k", "sign"});
    rep.params["trunc"] = T;
    rep.items = verify_intermediate(table, fl.local_prime, fl.const_prime,
                                    fl.k, fl.sign == "-" ? -1 : +1, T);
    return finish(fl, rep, t0);
}

int run_verify_global(common_flags& fl) {
    auto t0 = std::chrono::steady_clock::now();
    match_report rep;
    rep.command = "verify global";
    rep.params = params_json(fl, {"const-prime", "k"});
    rep.items = global_consistency(fl.const_prime, fl.k);
    return finish(fl, rep, t0);
}

int run_verify_euler(common_flags& fl) {
    auto t0 = std::chrono::steady_clock::now();
    local_options opt = make_options(fl);
    signed_constant c{Int(fl.const_prime), fl.k, fl.sign == "-" ? -1 : +1};
    match_report rep;
    rep.command = "verify euler";
    rep.params = params_json(fl, {"const-prime", "k", "sign", "n", "f"});
    auto check = [&](long n, long f) {
        Int direct = global_K_direct(n, f, c, opt);
        Int factored = global_K(n, f, c, opt);
        rep.items.push_back({"K(" + std::to_string(n) + "," +
                                 std::to_string(f) + ") direct vs product",
                             factored.get_str(), direct.get_str(),
                             direct == factored});
    };
    if (fl.n > 0 || fl.f > 0) {
        check(std::max(1L, fl.n), std::max(1L, fl.f));
    } else {
        for (long f = 1; f * f <= 200; ++f)
            for (long n = 1; n * f * f <= 200; ++n) check(n, f);
    }
    return finish(fl, rep, t0);
}

int run_verify_periodicity(common_flags& fl, unsigned multiplier) {
    auto t0 = std::chrono::steady_clock::now();
    local_options opt = make_options(fl);
    signed_constant c{Int(fl.const_prime), fl.k, fl.sign == "-" ? -1 : +1};
    long n = std::max(1L, fl.n), f = std::max(1L, fl.f);
    match_report rep;
    rep.command = "verify periodicity";
    rep.params = params_json(fl, {"const-prime", "k", "sign", "n", "f"});
    rep.params["multiplier"] = multiplier;
    bool ok = periodicity_check(n, f, c, multiplier, opt);
    rep.items.push_back({"inner sums constant mod n*f^2", "true",
                         ok ? "true" : "false", ok});
    return finish(fl, rep, t0);
}

int run_verify_analytic(common_flags& fl) {
    auto t0 = std::chrono::steady_clock::now();
    match_report rep;
    rep.command = "verify analytic";
    rep.params = params_json(fl, {"k"});
    for (const auto& c : analytic_checks(fl.k))
        rep.items.push_back(item_from_numeric(c));
    return finish(fl, rep, t0);
}

int run_oracle_diff(common_flags& fl) {
    auto t0 = std::chrono::steady_clock::now();
    signed_constant c{Int(fl.const_prime), fl.k, fl.sign == "-" ? -1 : +1};
    Int q(fl.local_prime);
    match_report rep;
    rep.command = "oracle-diff";
    rep.params =
        params_json(fl, {"local-prime", "const-prime", "k", "sign", "rmax"});
    for (unsigned r = 1; r <= fl.rmax; ++r) {
        Int box = pow_int(q, 2 * r);
        long mismatches = 0;
        for (Int a = 0; a < box; ++a)
            for (Int b = 0; b < box; ++b) {
                auto sys = coset_ids(enumerate_overorders(a, b, c, q, r), q);
                auto orc = coset_ids(oracle_enumerate(a, b, c, q, r), q);
                if (sys != orc) ++mismatches;
            }
        rep.items.push_back({"r=" + std::to_string(r) + " mismatching (a,b)",
                             "0", std::to_string(mismatches),
                             mismatches == 0});
    }
    return finish(fl, rep, t0);
}

int run_trace_factor(common_flags& fl) {
    auto t0 = std::chrono::steady_clock::now();
    match_report rep;
    rep.command = "trace-factor";
    rep.params = params_json(fl, {"const-prime", "k"});
    Rat direct = trivial_trace_factor(fl.const_prime, fl.k);
    Rat oracle = trivial_trace_factor_series_oracle(fl.const_prime, fl.k);
    rep.items.push_back({"closed form vs series-coefficient oracle",
                         rat_str(oracle), rat_str(direct), direct == oracle});
    return finish(fl, rep, t0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact zeta data of cubic orders: Kloosterman tables and "
                 "Dirichlet-series verification"};
    app.require_subcommand(1);
    common_flags fl;
    unsigned multiplier = 2;

    CLI::App* ktab = app.add_subcommand("ktab", "emit a Kloosterman table");
    add_common(ktab, fl);

    CLI::App* verify = app.add_subcommand("verify", "run a verification");
    verify->require_subcommand(1);
    CLI::App* v_local = verify->add_subcommand("local", "local closed forms");
    CLI::App* v_inter =
        verify->add_subcommand("intermediate", "axis identities");
    CLI::App* v_global =
        verify->add_subcommand("global", "global/local consistency");
    CLI::App* v_euler = verify->add_subcommand("euler", "Euler factorization");
    CLI::App* v_per = verify->add_subcommand("periodicity", "periodicity");
    CLI::App* v_ana = verify->add_subcommand("analytic", "analytic constants");
    for (CLI::App* c : {v_local, v_inter, v_global, v_euler, v_per, v_ana})
        add_common(c, fl);
    v_per->add_option("--multiplier", multiplier, "lift multiplier m >= 2");

    CLI::App* odiff =
        app.add_subcommand("oracle-diff", "system vs oracle overorders");
    add_common(odiff, fl);
    CLI::App* tf =
        app.add_subcommand("trace-factor", "finite trace of the trivial rep");
    add_common(tf, fl);

    CLI11_PARSE(app, argc, argv);

    try {
        if (ktab->parsed()) return run_ktab(fl);
        if (verify->parsed()) {
            if (v_local->parsed()) return run_verify_local(fl);
            if (v_inter->parsed()) return run_verify_intermediate(fl);
            if (v_global->parsed()) return run_verify_global(fl);
            if (v_euler->parsed()) return run_verify_euler(fl);
            if (v_per->parsed()) return run_verify_periodicity(fl, multiplier);
            if (v_ana->parsed()) return run_verify_analytic(fl);
        }
        if (odiff->parsed()) return run_oracle_diff(fl);
        if (tf->parsed()) return run_trace_factor(fl);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    std::cerr << "error: unknown command\n";
    return 2;
}
