// scholl command-line front end. Every subcommand builds a JSON argument
// object and hands it to the library through the C API.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef SCHOLL_NETWORK
#include <httplib.h>
#endif

#include "scholl/scholl.h"

using json = nlohmann::json;

namespace {

struct Global {
    std::string cache_dir;
    bool verify_cache = false;
    bool pretty = false;
    bool timing = false;
    std::string format = "json";
};

std::vector<long long> parse_list(const std::string& s) {
    std::vector<long long> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        long long x = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        v.push_back(x);
    }
    return v;
}

int exit_code(scholl_status st) {
    switch (st) {
        case SCHOLL_OK: return 0;
        case SCHOLL_E_CONSISTENCY:
        case SCHOLL_E_PRECISION: return 1;
        default: return 2;
    }
}

std::string fraction(const json& num, const json& den) {
    std::string n = num.is_string() ? num.get<std::string>() : num.dump();
    std::string d = den.is_string() ? den.get<std::string>() : den.dump();
    return d == "1" ? n : n + "/" + d;
}

void print_series_csv(const std::string& name, const json& s) {
    long long N = s["N"], start = s["start"];
    long long k = 0;
    for (auto& c : s["coeffs"]) {
        long long e = start + k++;
        std::string expo = N == 1 ? std::to_string(e) : std::to_string(e) + "/" + std::to_string(N);
        std::cout << name << "," << expo << "," << fraction(c[0], c[1]) << "\n";
    }
}

bool print_csv(const std::string& op, const json& r) {
    if (op == "qexp") {
        std::cout << "series,exponent,coefficient\n";
        for (const char* k : {"series", "f1", "f2", "g_plus", "g_minus"})
            if (r.contains(k)) print_series_csv(k, r[k]);
        return true;
    }
    if (op == "table-check") {
        std::cout << "p,solve_match,verify_ok,factor_ok,self_dual,pure,ok\n";
        for (auto& row : r["rows"]) {
            bool v = true;
            for (auto& f : row["verify"]) v = v && f["ok"].get<bool>();
            std::cout << row["p"] << "," << row["solve_match"] << "," << v << "," << row["factor_ok"] << ","
                      << row["self_dual"] << "," << row["pure"] << "," << row["ok"] << "\n";
        }
        return true;
    }
    return false;
}

int run(scholl_ctx* ctx, const Global& g, const std::string& op, json args) {
    if (g.timing) args["timing"] = true;
    char* out = nullptr;
    scholl_status st = scholl_run(ctx, op.c_str(), args.dump().c_str(), &out);
    if (st != SCHOLL_OK) {
        std::cerr << "error: " << scholl_last_error(ctx) << "\n";
        return exit_code(st);
    }
    json r = json::parse(out);
    scholl_free_string(out);
    if (scholl_ctx_last_cached(ctx)) std::cerr << "served from cache\n";
    if (g.format == "csv") {
        if (!print_csv(op, r)) {
            std::cerr << "csv output is available for qexp and table-check only\n";
            return 2;
        }
    } else {
        std::cout << (g.pretty ? r.dump(2) : r.dump()) << "\n";
    }
    if (r.contains("ok") && r["ok"].is_boolean() && !r["ok"].get<bool>()) return 1;
    return 0;
}

#ifdef SCHOLL_NETWORK
int fetch_newform(scholl_ctx* ctx, const Global& g, const std::string& label, long long b, int count) {
    httplib::Client cli("https://www.lmfdb.org");
    cli.set_connection_timeout(10);
    std::string path = "/api/mf_newforms/?label=" + label + "&_format=json&_fields=label,traces";
    auto res = cli.Get(path);
    if (!res || res->status != 200) {
        std::cerr << "error: fetch failed for " << label << "\n";
        return 2;
    }
    json doc = json::parse(res->body, nullptr, false);
    if (doc.is_discarded() || !doc.contains("data") || doc["data"].empty()) {
        std::cerr << "error: no newform with label " << label << "\n";
        return 2;
    }
    json traces = doc["data"][0].value("traces", json::array());
    json rows = json::array();
    for (int p = 5, seen = 0; seen < count && p < (int)traces.size(); ++p) {
        bool prime = p > 1;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        ++seen;
        json row = {{"p", p}, {"newform_ap", traces[p - 1]}};
        char* out = nullptr;
        json a = {{"b", b}, {"p", p}};
        if (scholl_run(ctx, "curve-structure", a.dump().c_str(), &out) == SCHOLL_OK) {
            json r = json::parse(out);
            row["genus2_a1"] = r["lpoly"]["a1"];
            row["genus2_a2"] = r["lpoly"]["a2"];
            scholl_free_string(out);
        }
        rows.push_back(row);
    }
    json r = {{"label", label}, {"b", b}, {"informational", true}, {"rows", rows}};
    std::cout << (g.pretty ? r.dump(2) : r.dump()) << "\n";
    return 0;
}
#endif

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius traces, identities and ASD congruences for the E_n family and weight-4 forms"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--cache-dir", g.cache_dir, "Result cache directory (default: $SCHOLL_CACHE, else no cache)");
    app.add_flag("--verify-cache", g.verify_cache, "Recompute cache hits and fail on mismatch");
    app.add_flag("--pretty", g.pretty, "Indent JSON output");
    app.add_flag("--timing", g.timing, "Include wall-clock timings in results");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    std::string op;
    json args = json::object();
    long long n = 0, i = 0, p = 0, place = -1, d = 0, N = 0, k = 0, q = 0, a = 0, b = 0, prec = 20, terms = -1;
    long long form = 0, r_min = -1, r_max = 1, r_limit = 3;
    std::string method = "auto", flist, spec, Alist, table;

    auto need = [](CLI::App* s, const char* name, long long& v, const char* desc) { s->add_option(name, v, desc)->required(); };
    auto opt_place = [&](CLI::App* s) { s->add_option("--place", place, "Index of the place above p (default: all)"); };

    auto* s_places = app.add_subcommand("places", "Primes of Q(zeta_n) above p");
    need(s_places, "--n", n, "n");
    need(s_places, "--p", p, "prime p");

    auto* s_trace = app.add_subcommand("trace", "Character sum S(n,i,P)");
    need(s_trace, "--n", n, "n");
    need(s_trace, "--i", i, "i");
    need(s_trace, "--p", p, "prime p");
    opt_place(s_trace);
    s_trace->add_option("--method", method, "brute, greene, auto or both")->check(CLI::IsMember({"brute", "greene", "auto", "both"}));

    auto* s_charpoly = app.add_subcommand("charpoly", "Degree-2 Frobenius data of sigma_{n,i}");
    need(s_charpoly, "--n", n, "n");
    need(s_charpoly, "--i", i, "i coprime to n");
    need(s_charpoly, "--p", p, "prime p");
    opt_place(s_charpoly);

    auto* s_induce = app.add_subcommand("induce", "Integer characteristic polynomial of the new part");
    need(s_induce, "--n", n, "n");
    need(s_induce, "--p", p, "prime p");

    auto* s_twist = app.add_subcommand("twist", "S_i = (-1/P)^i S_{n-i}");
    need(s_twist, "--n", n, "n");
    need(s_twist, "--p", p, "prime p");
    s_twist->add_option("--i", i, "single i (default: all)");
    opt_place(s_twist);

    auto* s_weil = app.add_subcommand("weil", "Weil bound |S| <= 2 NP");
    need(s_weil, "--n", n, "n");
    need(s_weil, "--p", p, "prime p");
    s_weil->add_option("--i", i, "single i (default: all coprime)");
    opt_place(s_weil);

    auto* s_gcd = app.add_subcommand("gcd", "S(n,i) = S(n/d,i/d) under the place below");
    need(s_gcd, "--n", n, "n");
    need(s_gcd, "--i", i, "i");
    need(s_gcd, "--p", p, "prime p");
    s_gcd->add_option("--d", d, "divisor of gcd(i,n) (default: gcd)");
    opt_place(s_gcd);

    auto* s_newpart = app.add_subcommand("newpart", "Trace of the new part");
    need(s_newpart, "--n", n, "n");
    need(s_newpart, "--p", p, "prime p");
    opt_place(s_newpart);

    auto* s_count = app.add_subcommand("count-identity", "Points on s^n = f_n(x,y) against the character sums");
    need(s_count, "--n", n, "n");
    need(s_count, "--p", p, "prime p");
    opt_place(s_count);

    auto* s_curve = app.add_subcommand("curve", "Curve point counts");
    s_curve->require_subcommand(1);
    auto* c_count = s_curve->add_subcommand("count", "y^N = f(x) over F_{p^k}");
    need(c_count, "--N", N, "N dividing q-1");
    need(c_count, "--p", p, "prime p");
    c_count->add_option("--k", k, "extension degree (default 1)");
    c_count->add_option("--f", flist, "coefficients, constant first, comma separated")->required();
    auto* c_lpoly = s_curve->add_subcommand("lpoly", "Frobenius quartic of y^2 = monic sextic");
    c_lpoly->add_option("--f", flist, "7 coefficients, constant first")->required();
    need(c_lpoly, "--p", p, "odd prime p");
    auto* c_struct = s_curve->add_subcommand("structure", "y^2 = x^6 + b x^3 + 1: trace zero or square");
    need(c_struct, "--b", b, "b");
    need(c_struct, "--p", p, "prime p");

    auto* s_sym = app.add_subcommand("symmetry", "Pointwise checks of the symmetry maps");
    s_sym->require_subcommand(1);
    auto* y_en = s_sym->add_subcommand("en", "zeta A zeta = A on E_n");
    need(y_en, "--n", n, "n");
    need(y_en, "--q", q, "q = 1 mod 2n");
    auto* y_inv = s_sym->add_subcommand("involution", "tau_1, tau_2 on y^2 = x^6 + a x^4 + a x^2 + 1");
    need(y_inv, "--a", a, "a");
    need(y_inv, "--q", q, "odd prime power q");
    auto* y_frob = s_sym->add_subcommand("frobcomm", "Frob A = zeta^{(1-p)/2} A Frob over F_{p^k}");
    need(y_frob, "--n", n, "n");
    need(y_frob, "--p", p, "prime p");
    y_frob->add_option("--k", k, "extension degree (default 2)");

    auto* s_qexp = app.add_subcommand("qexp", "q-expansions");
    s_qexp->require_subcommand(1);
    auto* q_eta = s_qexp->add_subcommand("eta", "prod eta(m z)^e");
    q_eta->add_option("--spec", spec, "m:e pairs, comma separated, e.g. 4:6")->required();
    auto* q_e2 = s_qexp->add_subcommand("e2", "E2 = 1 - 24 sum sigma(n) q^n");
    auto* q_w4 = s_qexp->add_subcommand("weight4", "f1 and f2");
    auto* q_gpm = s_qexp->add_subcommand("gpm", "g_+ and g_- at 6z");
    for (auto* s : {q_eta, q_e2, q_w4, q_gpm}) {
        s->add_option("--prec", prec, "precision in q (default 20)");
        s->add_option("--terms", terms, "number of coefficients to print");
    }

    auto* s_asd = app.add_subcommand("asd", "Atkin-Swinnerton-Dyer congruences");
    s_asd->require_subcommand(1);
    auto* a_verify = s_asd->add_subcommand("verify", "Residues of the five-term combination");
    need(a_verify, "--p", p, "prime p >= 5");
    a_verify->add_option("--form", form, "1, 2, or 0 for both");
    a_verify->add_option("--A", Alist, "A3,A2,A1,A0 (default: the table row)");
    a_verify->add_option("--r-min", r_min, "lowest r (default -1)");
    a_verify->add_option("--r-max", r_max, "highest r (default 1)");
    a_verify->add_option("--table", table, "golden table file");
    auto* a_solve = s_asd->add_subcommand("solve", "Recover the quartic from f1, f2");
    need(a_solve, "--p", p, "prime p >= 5");
    a_solve->add_option("--r-limit", r_limit, "highest r to escalate to (default 3)");

    auto* s_table = app.add_subcommand("table-check", "Solve, verify and factor-check every golden table row");
    s_table->add_option("--table", table, "golden table file");

    auto* s_fetch = app.add_subcommand("fetch-newform", "Download newform traces for comparison (network build only)");
    std::string label;
    long long fetch_count = 10;
    s_fetch->add_option("--label", label, "newform label")->required();
    s_fetch->add_option("--b", b, "b for y^2 = x^6 + b x^3 + 1");
    s_fetch->add_option("--count", fetch_count, "number of primes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (g.cache_dir.empty())
        if (const char* env = std::getenv("SCHOLL_CACHE")) g.cache_dir = env;

    auto set = [&](const char* key, long long v) { args[key] = v; };
    auto ints = [&](const std::string& s, const char* what) {
        try {
            return parse_list(s);
        } catch (const std::exception&) {
            std::cerr << "error: " << what << " must be a comma separated integer list\n";
            std::exit(2);
        }
    };

    if (s_places->parsed()) { op = "places"; set("n", n); set("p", p); }
    else if (s_trace->parsed()) { op = "trace"; set("n", n); set("i", i); set("p", p); args["method"] = method; }
    else if (s_charpoly->parsed()) { op = "charpoly"; set("n", n); set("i", i); set("p", p); }
    else if (s_induce->parsed()) { op = "induce"; set("n", n); set("p", p); }
    else if (s_twist->parsed()) { op = "twist"; set("n", n); set("p", p); if (s_twist->count("--i")) set("i", i); }
    else if (s_weil->parsed()) { op = "weil"; set("n", n); set("p", p); if (s_weil->count("--i")) set("i", i); }
    else if (s_gcd->parsed()) { op = "gcd"; set("n", n); set("i", i); set("p", p); if (s_gcd->count("--d")) set("d", d); }
    else if (s_newpart->parsed()) { op = "newpart"; set("n", n); set("p", p); }
    else if (s_count->parsed()) { op = "count-identity"; set("n", n); set("p", p); }
    else if (c_count->parsed()) { op = "curve-count"; set("N", N); set("p", p); if (k) set("k", k); args["f"] = ints(flist, "--f"); }
    else if (c_lpoly->parsed()) { op = "curve-lpoly"; set("p", p); args["f"] = ints(flist, "--f"); }
    else if (c_struct->parsed()) { op = "curve-structure"; set("b", b); set("p", p); }
    else if (y_en->parsed()) { op = "symmetry-en"; set("n", n); set("q", q); }
    else if (y_inv->parsed()) { op = "symmetry-involution"; set("a", a); set("q", q); }
    else if (y_frob->parsed()) { op = "symmetry-frobcomm"; set("n", n); set("p", p); if (k) set("k", k); }
    else if (s_qexp->parsed()) {
        op = "qexp";
        set("prec", prec);
        if (terms >= 0) set("terms", terms);
        if (q_eta->parsed()) {
            args["kind"] = "eta";
            json sp = json::array();
            std::stringstream ss(spec);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                auto c = tok.find(':');
                try {
                    if (c == std::string::npos) throw std::invalid_argument(tok);
                    sp.push_back({std::stoi(tok.substr(0, c)), std::stoi(tok.substr(c + 1))});
                } catch (const std::exception&) {
                    std::cerr << "error: --spec entries look like m:e\n";
                    return 2;
                }
            }
            args["spec"] = sp;
        } else if (q_e2->parsed()) args["kind"] = "e2";
        else if (q_w4->parsed()) args["kind"] = "weight4";
        else args["kind"] = "gpm";
    }
    else if (a_verify->parsed()) {
        op = "asd-verify";
        set("p", p); set("form", form); set("r_min", r_min); set("r_max", r_max);
        if (!Alist.empty()) args["A"] = ints(Alist, "--A");
        if (!table.empty()) args["table"] = table;
    }
    else if (a_solve->parsed()) { op = "asd-solve"; set("p", p); set("r_limit", r_limit); }
    else if (s_table->parsed()) { op = "table-check"; if (!table.empty()) args["table"] = table; }

    scholl_ctx* ctx = scholl_ctx_new();
    if (!ctx) return 2;
    int rc;
    if (place >= 0) set("place", place);
    if (scholl_ctx_set_cache(ctx, g.cache_dir.c_str(), g.verify_cache) != SCHOLL_OK) {
        std::cerr << "error: " << scholl_last_error(ctx) << "\n";
        rc = 2;
    } else if (s_fetch->parsed()) {
#ifdef SCHOLL_NETWORK
        rc = fetch_newform(ctx, g, label, b, (int)fetch_count);
#else
        std::cerr << "error: fetch-newform needs a build with -DSCHOLL_NETWORK=ON\n";
        rc = 2;
#endif
    } else {
        rc = run(ctx, g, op, args);
    }
    scholl_ctx_free(ctx);
    return rc;
}
