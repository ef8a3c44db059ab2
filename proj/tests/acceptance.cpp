// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "spinsym/cache.hpp"
#include "spinsym/golden.hpp"
#include "spinsym/verify.hpp"

using namespace spinsym;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        pass = false;
        if (notes.size() < 12) notes.push_back(what);
    }
    void absorb(const SuiteReport& r) {
        notes.push_back(r.summary());
        if (!r.ok()) {
            pass = false;
            for (const auto& f : r.failure_notes) notes.push_back("failed: " + f);
        }
    }
};

unsigned worker_count() { return std::max(2u, std::thread::hardware_concurrency()); }

double since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double x) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << x;
    return os.str();
}

Outcome golden_tables() {
    Outcome o;
    Engines e;
    const auto start = std::chrono::steady_clock::now();
    std::size_t cells = 0, matched = 0;
    for (int n = 3; n <= 7; ++n) {
        const YTable computed = e.green.y_table(n, worker_count());
        const YTable published = golden_y_table(n).to_table();
        o.require(computed.rows == published.rows && computed.cols == published.cols,
                  "table axes differ at n=" + std::to_string(n));
        if (computed.rows != published.rows || computed.cols != published.cols) continue;
        for (std::size_t r = 0; r < computed.rows.size(); ++r) {
            for (std::size_t c = 0; c < computed.cols.size(); ++c) {
                ++cells;
                const bool same = computed.entries[r][c] == published.entries[r][c];
                matched += same;
                o.require(same, "n=" + std::to_string(n) + " lambda=(" + computed.rows[r].to_string() + ") mu=(" +
                                    computed.cols[c].to_string() + "): computed " +
                                    computed.entries[r][c].to_string() + ", published " +
                                    published.entries[r][c].to_string());
            }
        }
    }
    const double secs = since(start);
    o.require(secs < 10.0, "took " + fixed(secs) + "s, limit 10s");
    o.notes.insert(o.notes.begin(), std::to_string(matched) + "/" + std::to_string(cells) + " cells match in " +
                                        fixed(secs) + "s");
    return o;
}

Outcome pinpoint_values() {
    Outcome o;
    Engines e;
    const VertexEngine& v = e.vertex;
    const TPoly t = TPoly::t();
    o.require(e.kostka.l_recursive(Partition{4, 1}, Partition{3, 2}) == TPoly::parse("2t"), "L_{(4,1)(3,2)} = 2t");
    o.require(v.qhl(Partition{3, 2}) == v.schur_q(Partition{3, 2}) + v.schur_q(Partition{4, 1}) * TPoly::parse("2t") +
                                            v.schur_q(Partition{5}) * TPoly::parse("2t^2"),
              "G_(3,2) expansion");
    o.require(v.qhl(Partition{4, 1}) == v.schur_q(Partition{4, 1}) + v.schur_q(Partition{5}) * TPoly::parse("2t"),
              "G_(4,1) expansion");
    o.require(pair(v.qhl(Partition{3, 2}), v.qhl(Partition{4, 1})) == TPoly::parse("8t+8t^3"), "<G_(3,2), G_(4,1)>");
    o.require(v.qhl_modes({1, 1}) == v.schur_q(Partition{2}) * (t * Rational(2)), "G_1 G_1.1 = 2t Q_2.1");
    o.require(e.green.y_recursive(Partition{4, 3}, Partition{5, 1, 1}) == TPoly::parse("2t(t^2-1)"),
              "Y^{(4,3)}_{(5,1,1)}");
    o.notes.push_back("6 values checked");
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    Engines e;
    const auto start = std::chrono::steady_clock::now();
    std::size_t l_pairs = 0, y_pairs = 0;
    // n = 9 is the optional extended run; it is cheap enough to include.
    for (int n = 1; n <= 9; ++n) {
        const LTable lt = e.kostka.l_table(n, worker_count());
        for (std::size_t r = 0; r < lt.rows.size(); ++r) {
            for (std::size_t c = 0; c < lt.cols.size(); ++c) {
                ++l_pairs;
                o.require(lt.entries[r][c] == e.kostka.l_direct(lt.rows[r], lt.cols[c]),
                          "L recursion vs oracle at (" + lt.rows[r].to_string() + "),(" + lt.cols[c].to_string() + ")");
            }
        }
        const YTable yt = e.green.y_table(n, worker_count());
        for (std::size_t r = 0; r < yt.rows.size(); ++r) {
            for (std::size_t c = 0; c < yt.cols.size(); ++c) {
                ++y_pairs;
                const std::string at = " at (" + yt.rows[r].to_string() + "),(" + yt.cols[c].to_string() + ")";
                o.require(yt.entries[r][c] == e.green.y_direct(yt.rows[r], yt.cols[c]), "Y recursion vs oracle" + at);
                o.require(yt.entries[r][c] == e.green.y_via_l(yt.rows[r], yt.cols[c]), "Y recursion vs L route" + at);
            }
        }
    }
    o.notes.push_back(std::to_string(l_pairs) + " L pairs, " + std::to_string(y_pairs) + " Y pairs, n <= 9, " +
                      fixed(since(start)) + "s");
    o.require(l_pairs > 0 && y_pairs > 0, "no pairs checked");
    return o;
}

Outcome operator_suites(const Engines& e) {
    Outcome o;
    OperatorBounds b;
    b.grade = 5;
    b.index = 5;
    const SuiteReport r = verify_operators(e, b, worker_count());
    o.require(r.checks > 0, "no checks ran");
    o.absorb(r);
    return o;
}

Outcome identities() {
    Outcome o;
    const SuiteReport r = verify_identities(30, 20, 10);
    o.require(r.checks > 0, "no checks ran");
    o.absorb(r);
    return o;
}

Outcome structural(const Engines& e, SuiteReport& lk, SuiteReport& sg) {
    Outcome o;
    lk = verify_lkostka(e, 9, worker_count());
    sg = verify_spingreen(e, 9, worker_count());
    o.require(lk.checks > 0 && sg.checks > 0, "no checks ran");
    o.absorb(lk);
    o.absorb(sg);
    return o;
}

Outcome positivity(const SuiteReport& lk, const SuiteReport& sg) {
    Outcome o;
    o.notes.push_back("L: " + std::to_string(lk.diagnostics.size()) + " counterexamples in " +
                      std::to_string(lk.diagnostic_checks) + " entries");
    o.notes.push_back("t^{n(lambda)} Y(1/t) at mu = 1^n: " + std::to_string(sg.diagnostics.size()) +
                      " counterexamples in " + std::to_string(sg.diagnostic_checks) + " entries");
    for (const auto& d : lk.diagnostics) o.notes.push_back("counterexample: " + d);
    for (const auto& d : sg.diagnostics) o.notes.push_back("counterexample: " + d);
    return o;
}

std::vector<std::string> render_all(const Engines& e, unsigned jobs) {
    std::vector<std::string> out;
    for (int n = 1; n <= 7; ++n) {
        for (Format f : {Format::json, Format::csv, Format::latex, Format::markdown}) {
            out.push_back(render(e.kostka.l_table(n, jobs), f));
            out.push_back(render(e.green.y_table(n, jobs), f));
            out.push_back(render(e.green.spin_char_table(n, jobs), f));
        }
    }
    return out;
}

Outcome infrastructure() {
    Outcome o;
    std::size_t round_trips = 0;
    {
        Engines e;
        for (int n = 1; n <= 7; ++n) {
            const LTable l = e.kostka.l_table(n);
            const YTable y = e.green.y_table(n);
            const SpinCharTable z = e.green.spin_char_table(n);
            o.require(poly_table_from_json(json::parse(render(l, Format::json))) == l, "L round trip n=" + std::to_string(n));
            o.require(poly_table_from_json(json::parse(render(y, Format::json))) == y, "Y round trip n=" + std::to_string(n));
            o.require(spin_char_table_from_json(json::parse(render(z, Format::json))) == z,
                      "zeta round trip n=" + std::to_string(n));
            round_trips += 3;
        }
    }

    const fs::path dir = fs::temp_directory_path() / ("spinsym-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    std::vector<std::string> cold;
    {
        Engines e;
        cold = render_all(e, 1);
        Cache c(dir);
        store_engines(c, e.vertex, e.kostka, e.green);
        c.save();
    }
    std::vector<std::string> warm;
    std::size_t seeded = 0;
    {
        Engines e;
        Cache c(dir);
        c.load();
        seeded = c.size();
        warm_engines(c, e.vertex, e.kostka, e.green);
        warm = render_all(e, 1);
    }
    fs::remove_all(dir);
    o.require(seeded > 0, "cache was empty after save");
    o.require(warm == cold, "warm-cache output differs from cold-cache output");

    Engines parallel;
    const std::vector<std::string> again = render_all(parallel, worker_count());
    o.require(again == cold, "output depends on the run or the job count");

    o.notes.push_back(std::to_string(round_trips) + " JSON round trips, " + std::to_string(seeded) +
                      " cache entries, " + std::to_string(cold.size()) + " renderings compared");
    return o;
}

int report(int id, const std::string& title, const Outcome& o) {
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << '\n';
    for (const auto& n : o.notes) std::cout << "    " << n << '\n';
    return o.pass ? 0 : 1;
}

}  // namespace

int main() {
    int failures = 0;
    failures += report(1, "golden tables n = 3..7", golden_tables());
    failures += report(2, "pinpoint values", pinpoint_values());
    failures += report(3, "oracle equivalence n <= 9", oracle_equivalence());
    Engines shared;
    failures += report(4, "operator identity suites d <= 5, |m|,|n| <= 5", operator_suites(shared));
    failures += report(5, "closed-form identities", identities());
    SuiteReport lk, sg;
    failures += report(6, "structural properties n <= 9", structural(shared, lk, sg));
    failures += report(7, "positivity diagnostics (informational)", positivity(lk, sg));
    failures += report(8, "infrastructure n <= 7", infrastructure());
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
