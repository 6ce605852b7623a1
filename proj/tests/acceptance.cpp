// Acceptance run: one PASS/FAIL line per criterion, then a JSON report of
// exact results (no timings) for the determinism comparison.
//
// usage: acceptance [--cli PATH] [--report FILE] [--quick]

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "report.hpp"

using namespace scholl;

namespace {

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<uint64_t> primes_upto(uint64_t n) {
    std::vector<uint64_t> v;
    for (uint64_t p = 2; p <= n; ++p)
        if (is_prime(p)) v.push_back(p);
    return v;
}

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string info;  // printed on its own line, not part of pass/fail
    json data;
};

struct Criterion {
    int id;
    std::string name;
    double budget_s;  // informational target
    std::function<Outcome()> run;
};

bool in_tables(const Place& pl) { return pl.Np <= (unsigned long)kTableCap; }

// Shared sweep for the twist, conjugacy, Weil and Greene criteria.
struct SweepRow {
    int n;
    uint64_t p;
    int index;
    mpz_class Np;
    SymbolHistogram h;
};

struct Sweep {
    std::vector<SweepRow> rows;
    size_t skipped = 0;
    std::vector<std::string> skipped_places;
};

std::optional<Sweep> g_sweep;

const Sweep& sweep() {
    if (!g_sweep) {
        Sweep s;
        for (int n = 2; n <= 12; ++n)
            for (uint64_t p : primes_upto(100)) {
                if (n % p == 0) continue;
                for (auto& pl : enumerate_places(n, p)) {
                    if (!in_tables(pl)) {
                        ++s.skipped;
                        s.skipped_places.push_back(std::to_string(n) + "/" + std::to_string(p) + "^" + std::to_string(pl.f));
                        continue;
                    }
                    s.rows.push_back({n, p, pl.index, pl.Np, histogram(pl.sf(), Method::Auto)});
                }
            }
        g_sweep = std::move(s);
    }
    return *g_sweep;
}

json hist_json(const SymbolHistogram& h) { return h.H; }

Outcome c1_table() {
    Outcome o;
    auto rows = load_weight4_table();
    json info = json::array();
    for (auto& row : rows) {
        const auto& q = row.quartic;
        auto s = asd_solve(q.p);
        bool match = s.quartic == q;
        int r_max = q.p <= 7 ? 2 : 1;
        json forms = json::array();
        bool ver = true;
        for (int f : {1, 2}) {
            auto v = asd_verify(f, q, 0, r_max);
            ver = ver && v.ok;
            json rs = json::array();
            for (auto& r : v.rows) rs.push_back({r.r, r.valuation, r.ok});
            forms.push_back(rs);
            auto m1 = asd_verify(f, q, -1, -1).rows.front();
            info.push_back({{"p", q.p}, {"form", f}, {"residue_mod_p2", report::big(m1.residue)}, {"ok", m1.ok}});
            o.info += " p=" + std::to_string(q.p) + "/f" + std::to_string(f) + ":" + (m1.ok ? "0" : m1.residue.get_str());
        }
        o.pass = o.pass && match && ver;
        o.data.push_back({{"p", q.p}, {"solved", report::quartic(s.quartic)}, {"match", match}, {"survivors", s.survivors},
                          {"used_split", s.used_split}, {"verify", forms}});
        if (!match || !ver) o.detail += " p=" + std::to_string(q.p) + (match ? "" : " solve-mismatch") + (ver ? "" : " verify-failed");
        if (s.used_split) o.detail += " (p=" + std::to_string(q.p) + " needed the Z[zeta_3] conjugate-pair condition: " + std::to_string(s.survivors.back()) + " quartics pass the congruences)";
    }
    o.data.push_back({{"r_minus_one", info}});
    o.info = "r = -1 congruence a_i(p) + A3 a_i(1) mod p^2 (residue per row and form; not part of the criterion):" + o.info;
    o.detail = std::to_string(rows.size()) + " rows solved and verified for 0 <= r <= r_max" + o.detail;
    return o;
}

Outcome c2_factor() {
    Outcome o;
    auto rows = load_weight4_table();
    for (auto& row : rows) {
        auto fc = factor_check(row.quartic, row.first, row.second);
        o.pass = o.pass && fc.ok;
        o.data.push_back({{"p", row.quartic.p}, {"product", report::int_poly(fc.product)}, {"ok", fc.ok}});
    }
    // a perturbed pair must fail
    auto bad = rows.at(1);
    bad.first.T = -bad.first.T;
    bool rejected = !factor_check(bad.quartic, bad.first, bad.second).ok;
    o.pass = o.pass && rejected;
    o.detail = std::to_string(rows.size()) + " pairs multiply to their quartics; sign-flipped p=7 pair rejected: " + (rejected ? "yes" : "no");
    return o;
}

Outcome c3_eta() {
    Outcome o;
    auto eta = eta_quotient({{4, 6}}, 100);
    size_t checked = 0, zeros = 0;
    for (uint64_t p : primes_upto(97)) {
        if (p == 2) continue;
        auto pl = enumerate_places(2, p).at(0);
        CycInt s = trace_sum(2, 1, pl).value;
        mpq_class c = eta.at((long long)p);
        bool ok = s.is_rational() && mpq_class(s.rational_value()) == c;
        if (p % 4 == 3 && c == 0 && ok) ++zeros;
        o.pass = o.pass && ok;
        ++checked;
        o.data.push_back({p, report::big(s.rational_value()), report::big(c.get_num())});
        if (!ok) o.detail += " mismatch at p=" + std::to_string(p);
    }
    o.detail = std::to_string(checked) + " odd primes, " + std::to_string(zeros) + " forced zeros at p = 3 mod 4" + o.detail;
    return o;
}

Outcome c4_twist() {
    Outcome o;
    const auto& s = sweep();
    size_t checks = 0, odd_places = 0;
    for (auto& r : s.rows) {
        Place pl = enumerate_places(r.n, r.p).at(r.index);
        CycInt sym = minus_one_symbol(pl);
        if (r.n % 2 == 1) {
            ++odd_places;
            if (sym != CycInt(r.n, mpz_class(1))) {
                o.pass = false;
                o.detail += " nontrivial symbol at n=" + std::to_string(r.n) + " p=" + std::to_string(r.p);
            }
        }
        for (int i = 1; i < r.n; ++i) {
            ++checks;
            if (r.h.sum(i) != sym.pow((unsigned)i) * r.h.sum(r.n - i)) {
                o.pass = false;
                o.detail += " fail n=" + std::to_string(r.n) + " i=" + std::to_string(i) + " p=" + std::to_string(r.p);
            }
        }
    }
    o.data = {{"places", s.rows.size()}, {"identities", checks}, {"odd_n_places", odd_places}, {"skipped_places", s.skipped_places}};
    o.detail = std::to_string(checks) + " identities over " + std::to_string(s.rows.size()) + " places; symbol trivial at all " +
               std::to_string(odd_places) + " odd-n places; " + std::to_string(s.skipped) +
               " places with Np > 2^24 skipped (table capacity)" + o.detail;
    return o;
}

Outcome c5_conjugacy() {
    Outcome o;
    size_t checks = 0;
    for (auto& r : sweep().rows) {
        CycInt s1 = r.h.sum(1);
        for (int i : units_mod(r.n)) {
            ++checks;
            if (r.h.sum(i) != s1.galois_conjugate(i)) {
                o.pass = false;
                o.detail += " fail n=" + std::to_string(r.n) + " i=" + std::to_string(i) + " p=" + std::to_string(r.p);
            }
        }
    }
    o.data = {{"checks", checks}};
    o.detail = std::to_string(checks) + " conjugacy checks (i coprime to n) over the criterion-4 sweep" + o.detail;
    return o;
}

Outcome c6_weil() {
    Outcome o;
    size_t checks = 0;
    double worst = 0;
    for (auto& r : sweep().rows)
        for (int i : units_mod(r.n)) {
            ++checks;
            auto w = weil_check(r.h.sum(i), r.Np);
            worst = std::max(worst, w.max_abs / w.bound);
            if (!w.ok) {
                o.pass = false;
                o.detail += " fail n=" + std::to_string(r.n) + " i=" + std::to_string(i) + " p=" + std::to_string(r.p);
            }
        }
    o.data = {{"checks", checks}};
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", worst);
    o.detail = std::to_string(checks) + " sums within 2 Np; largest |S|/(2 Np) = " + buf + o.detail;
    return o;
}

Outcome c7_gcd() {
    Outcome o;
    size_t checks = 0, skipped = 0;
    for (int n = 4; n <= 12; ++n) {
        if (is_prime(n)) continue;
        for (uint64_t p : primes_upto(50)) {
            if (n % p == 0) continue;
            for (auto& pl : enumerate_places(n, p)) {
                if (!in_tables(pl)) { ++skipped; continue; }
                auto h = histogram(pl.sf(), Method::Auto);
                for (int i = 1; i < n; ++i)
                    for (int d = 2; d <= n; ++d) {
                        if (n % d || i % d) continue;
                        Place below = place_below(pl, d);
                        auto rep = gcd_reduction_check(n, i, pl, below);
                        ++checks;
                        if (!rep.ok || rep.value_n != h.sum(i)) {
                            o.pass = false;
                            o.detail += " fail n=" + std::to_string(n) + " i=" + std::to_string(i) + " d=" + std::to_string(d) + " p=" + std::to_string(p);
                        }
                    }
            }
        }
    }
    o.data = {{"checks", checks}, {"skipped_places", skipped}};
    o.detail = std::to_string(checks) + " reductions S(n,i) = S(n/d,i/d); " + std::to_string(skipped) + " places above the table cap skipped" + o.detail;
    return o;
}

Outcome c8_greene() {
    Outcome o;
    size_t compared = 0;
    for (auto& r : sweep().rows) {
        if (r.Np > 343) continue;
        Place pl = enumerate_places(r.n, r.p).at(r.index);
        auto b = histogram_brute(pl.sf());
        auto g = histogram_greene(pl.sf());
        ++compared;
        if (b.H != g.H) {
            o.pass = false;
            o.detail += " mismatch n=" + std::to_string(r.n) + " p=" + std::to_string(r.p);
        }
    }
    auto pl = enumerate_places(2, 10007).at(0);
    auto t0 = std::chrono::steady_clock::now();
    auto b = histogram_brute(pl.sf());
    double tb = since(t0);
    t0 = std::chrono::steady_clock::now();
    auto g = histogram_greene(pl.sf());
    double tg = since(t0);
    bool same = b.H == g.H;
    o.pass = o.pass && same;
    o.data = {{"compared", compared}, {"large_instance", {{"p", 10007}, {"agree", same}, {"H", hist_json(b)}}}};
    char buf[160];
    std::snprintf(buf, sizeof buf, "; p=10007: agree=%s, brute %.3f s, greene %.4f s, speedup %.0fx (informational target >= 10x: %s)",
                  same ? "yes" : "no", tb, tg, tb / tg, tb / tg >= 10 ? "met" : "not met");
    o.detail = std::to_string(compared) + " places with Np <= 343 agree exactly" + buf + o.detail;
    return o;
}

Outcome c9_frobenius() {
    Outcome o;
    size_t data = 0, newton = 0, newton_skipped = 0, skipped = 0, induced = 0, induce_skipped = 0;
    for (int n = 2; n <= 8; ++n)
        for (uint64_t p : primes_upto(50)) {
            if (n % p == 0) continue;
            auto places = enumerate_places(n, p);
            bool all_small = true;
            std::vector<std::vector<mpz_class>> polys;
            for (auto& pl : places) {
                if (pl.Np * pl.Np > (unsigned long)kTableCap) {
                    ++skipped;
                    all_small = false;
                    continue;
                }
                std::vector<FrobeniusDatum> ds;
                try {
                    ds = frobenius_data(n, pl);
                    polys.push_back(induce_place(ds));
                } catch (const Error& e) {
                    o.pass = false;
                    o.detail += std::string(" ") + e.what();
                    all_small = false;
                    continue;
                }
                std::optional<SymbolHistogram> h3;
                if (pl.Np * pl.Np * pl.Np <= (unsigned long)kTableCap) h3 = histogram(pl.extension(3), Method::Auto);
                for (auto& d : ds) {
                    ++data;
                    if (!weight3_weil_verify(d).ok) {
                        o.pass = false;
                        o.detail += " purity n=" + std::to_string(n) + " p=" + std::to_string(p);
                    }
                    if (h3) {
                        ++newton;
                        if (!newton_cubic_check(d, *h3).ok) {
                            o.pass = false;
                            o.detail += " newton n=" + std::to_string(n) + " i=" + std::to_string(d.i) + " p=" + std::to_string(p);
                        }
                    } else {
                        ++newton_skipped;
                    }
                }
            }
            if (!all_small) { ++induce_skipped; continue; }
            ++induced;
            for (auto& poly : polys)
                if (poly != polys.front()) {
                    o.pass = false;
                    o.detail += " induced polynomials differ n=" + std::to_string(n) + " p=" + std::to_string(p);
                    break;
                }
            o.data.push_back({{"n", n}, {"p", p}, {"poly", report::int_poly(polys.front())}});
        }
    o.detail = std::to_string(data) + " (T, D) data exact and pure; Newton cubic " + std::to_string(newton) + " checked, " +
               std::to_string(newton_skipped) + " skipped (Np^3 > 2^24); induced polynomials agree for " + std::to_string(induced) +
               " (n,p), " + std::to_string(induce_skipped) + " skipped; " + std::to_string(skipped) + " places with Np^2 > 2^24 skipped" + o.detail;
    return o;
}

Outcome c10_count() {
    Outcome o;
    size_t checks = 0;
    for (int n = 2; n <= 6; ++n)
        for (uint64_t p : primes_upto(49)) {
            if (n % p == 0) continue;
            for (auto& pl : enumerate_places(n, p)) {
                if (pl.Np > 49) continue;
                auto r = solution_count_identity(n, pl);
                ++checks;
                o.data.push_back({n, p, pl.index, report::big(r.lhs), r.ok});
                if (!r.ok) {
                    o.pass = false;
                    o.detail += " fail n=" + std::to_string(n) + " p=" + std::to_string(p);
                }
            }
        }
    o.detail = std::to_string(checks) + " places with Np <= 49, n <= 6" + o.detail;
    return o;
}

Outcome c11_genus2() {
    Outcome o;
    size_t checks = 0, bad = 0;
    for (long long b : {1, 3, 5})
        for (uint64_t p : primes_upto(61)) {
            if (p <= 3) continue;
            CbReport r;
            try {
                r = cb_structure_check(b, p);
            } catch (const Error& e) {
                if (e.kind == Error::Domain) { ++bad; continue; }
                throw;
            }
            ++checks;
            o.data.push_back({b, p, r.L.a1, r.L.a2, r.ok});
            if (!r.ok) {
                o.pass = false;
                o.detail += " fail b=" + std::to_string(b) + " p=" + std::to_string(p);
            }
        }
    o.detail = std::to_string(checks) + " (b,p) pairs: trace zero for p = 2 mod 3, square for p = 1 mod 3, pure; " + std::to_string(bad) +
               " bad-reduction pairs skipped" + o.detail;
    return o;
}

Outcome c12_maps() {
    Outcome o;
    size_t inv = 0, singular = 0, en = 0, fc = 0;
    uint64_t points = 0;
    auto fail = [&](const std::string& what) { o.pass = false; o.detail += " " + what; };
    for (long long a : {0, 1, 2})
        for (uint64_t q = 3; q <= 49; q += 2) {
            int k = 0;
            if (!prime_power_base(q, &k)) continue;
            try {
                auto r = involution_check(a, q);
                ++inv;
                points += r.points;
                if (!r.ok) fail("involution a=" + std::to_string(a) + " q=" + std::to_string(q));
            } catch (const Error& e) {
                if (e.kind != Error::Domain) throw;
                ++singular;
            }
        }
    for (int n = 2; n <= 8; ++n)
        for (uint64_t q = 3; q <= 300; ++q) {
            if ((q - 1) % (2 * n) || !prime_power_base(q)) continue;
            auto r = en_symmetry_check(n, q);
            ++en;
            points += r.points;
            if (!r.ok) fail("en n=" + std::to_string(n) + " q=" + std::to_string(q));
        }
    for (auto [n, p] : std::vector<std::pair<int, uint64_t>>{{2, 5}, {3, 7}, {4, 5}, {6, 7}}) {
        auto r = frobenius_commutation_check(n, p, 2);
        ++fc;
        points += r.points;
        if (!r.ok) fail("frobcomm n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
    o.data = {{"involution", inv}, {"singular_skipped", singular}, {"en", en}, {"frobcomm", fc}, {"points", points}};
    o.detail = std::to_string(inv) + " involution cases (" + std::to_string(singular) + " singular skipped), " + std::to_string(en) +
               " E_n symmetry cases, " + std::to_string(fc) + " Frobenius commutation cases; " + std::to_string(points) + " points";
    return o;
}

std::vector<Criterion> criteria() {
    return {
        {1, "weight-4 table reproduction by ASD solve and verify", 60, c1_table},
        {2, "Z[zeta_3] factorizations multiply to the table quartics", 1, c2_factor},
        {3, "n=2 traces equal eta(4z)^6 coefficients for odd p <= 97", 30, c3_eta},
        {4, "twist identity S_i = (-1/P)^i S_{n-i}, n <= 12, p <= 100", 180, c4_twist},
        {5, "Galois conjugacy S(n,i) = conj_i S(n,1)", 1, c5_conjugacy},
        {6, "Weil bound |S| <= 2 Np", 1, c6_weil},
        {7, "gcd reduction S(n,i) = S(n/d,i/d), n <= 12 composite, p <= 50", 60, c7_gcd},
        {8, "Greene pipeline equals brute force; large-instance speedup", 60, c8_greene},
        {9, "Frobenius data: D exact, purity, Newton cubic, induced agreement", 240, c9_frobenius},
        {10, "surface count identity, n <= 6, Np <= 49", 30, c10_count},
        {11, "genus-2 structure of y^2 = x^6 + b x^3 + 1", 30, c11_genus2},
        {12, "point-map symmetries", 30, c12_maps},
    };
}

std::string run_cli(const std::string& cli, const std::string& args) {
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return "<popen failed>";
    std::string out;
    char buf[4096];
    size_t k;
    while ((k = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, k);
    pclose(f);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli, report_path;
    for (int a = 1; a < argc; ++a) {
        std::string s = argv[a];
        if (s == "--cli" && a + 1 < argc) cli = argv[++a];
        else if (s == "--report" && a + 1 < argc) report_path = argv[++a];
    }
    auto t_all = std::chrono::steady_clock::now();
    bool all = true;
    json rep = json::object();
    auto run_all = [&](bool print) {
        json r = json::object();
        bool ok = true;
        g_sweep.reset();
        for (auto& c : criteria()) {
            auto t0 = std::chrono::steady_clock::now();
            Outcome o;
            try {
                o = c.run();
            } catch (const std::exception& e) {
                o.pass = false;
                o.detail = std::string("exception: ") + e.what();
            }
            double dt = since(t0);
            ok = ok && o.pass;
            r[std::to_string(c.id)] = {{"pass", o.pass}, {"data", o.data}};
            if (print) {
                std::printf("[%s] %2d %s: %s (%.1f s, target < %.0f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                            o.detail.c_str(), dt, c.budget_s);
                if (!o.info.empty()) std::printf("[INFO] %2d %s\n", c.id, o.info.c_str());
                std::fflush(stdout);
            }
        }
        return std::make_pair(r, ok);
    };
    auto [first, ok1] = run_all(true);
    rep = first;
    all = ok1;

    // 13: determinism of the full report and of CLI output
    auto t0 = std::chrono::steady_clock::now();
    auto [second, ok2] = run_all(false);
    bool same = first.dump() == second.dump();
    std::string cli_detail = "CLI not checked (no --cli given)";
    bool cli_same = true;
    if (!cli.empty()) {
        const char* cmds[] = {"table-check", "trace --n 5 --i 2 --p 11 --method both", "induce --n 8 --p 17",
                              "qexp weight4 --prec 30", "asd solve --p 13"};
        size_t k = 0;
        for (auto* c : cmds) {
            std::string a = run_cli(cli, c), b = run_cli(cli, c);
            if (a.empty() || a != b) cli_same = false;
            ++k;
        }
        cli_detail = std::to_string(k) + " CLI commands byte-identical across runs: " + (cli_same ? "yes" : "no");
    }
    // partitioned brute force must not depend on the chunking
    auto pl = enumerate_places(7, 29).at(0);
    bool chunks_same = histogram_brute(pl.sf(), 1).H == histogram_brute(pl.sf(), 5).H;
    bool pass13 = same && cli_same && chunks_same;
    all = all && pass13;
    std::printf("[%s] 13 determinism of repeated full-suite reports: %zu-byte report identical: %s; %s; chunked brute force identical: %s (%.1f s)\n",
                pass13 ? "PASS" : "FAIL", first.dump().size(), same ? "yes" : "no", cli_detail.c_str(), chunks_same ? "yes" : "no", since(t0));
    if (!report_path.empty()) std::ofstream(report_path) << first.dump(1) << "\n";
    std::printf("%s: %.1f s total\n", all ? "ALL PASS" : "SOME FAILED", since(t_all));
    return all ? 0 : 1;
}
