#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <thread>

#include "spinsym/cache.hpp"
#include "spinsym/verify.hpp"

namespace {

using namespace spinsym;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "markdown";
    std::string out;
    std::string cache_dir;
    unsigned jobs = 0;
    bool no_cache = false;

    unsigned job_count() const {
        if (jobs > 0) return jobs;
        return std::max(1u, std::thread::hardware_concurrency());
    }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "json, csv, latex or markdown")
        ->check(CLI::IsMember({"json", "csv", "latex", "markdown"}))
        ->capture_default_str();
    cmd->add_option("--out", c.out, "Write to this file instead of standard output");
    cmd->add_option("--cache-dir", c.cache_dir, "Cache directory (overrides GAMMA_CACHE_DIR)");
    cmd->add_option("--jobs", c.jobs, "Worker threads (default: all cores)");
    cmd->add_flag("--no-cache", c.no_cache, "Neither read nor write the cache");
}

// Engines plus the optional persistent cache behind them.
class Session {
public:
    explicit Session(const Common& c) {
        if (c.no_cache) return;
        cache_.emplace(c.cache_dir.empty() ? Cache::default_dir() : std::filesystem::path(c.cache_dir));
        try {
            cache_->load();
            warm_engines(*cache_, engines_.vertex, engines_.kostka, engines_.green);
        } catch (const std::exception& ex) {
            std::cerr << "warning: ignoring unreadable cache: " << ex.what() << '\n';
        }
    }

    ~Session() {
        if (!cache_) return;
        try {
            store_engines(*cache_, engines_.vertex, engines_.kostka, engines_.green);
            cache_->save();
        } catch (const std::exception& ex) {
            std::cerr << "warning: cache not saved: " << ex.what() << '\n';
        }
    }

    Engines& engines() { return engines_; }

private:
    Engines engines_;
    std::optional<Cache> cache_;
};

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream file(c.out, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot open output file '" + c.out + "'");
    file << text;
    file.close();
    if (!file) throw UsageError("failed writing output file '" + c.out + "'");
}

void require_writable(const Common& c) {
    if (c.out.empty()) return;
    std::ofstream probe(c.out, std::ios::binary | std::ios::app);
    if (!probe) throw UsageError("cannot open output file '" + c.out + "'");
}

Partition parse_strict(const std::string& text) {
    Partition lambda;
    try {
        lambda = Partition::parse(text);
    } catch (const std::exception& ex) {
        throw UsageError(std::string("--lambda: ") + ex.what());
    }
    if (!lambda.is_strict()) throw UsageError("--lambda: (" + lambda.to_string() + ") is not strict");
    return lambda;
}

int run_verify(Engines& e, const std::string& suite, int max_n, unsigned jobs, std::ostream& out) {
    std::vector<SuiteReport> reports;
    auto want = [&](const char* name) { return suite == "all" || suite == name; };
    if (want("identities")) reports.push_back(verify_identities());
    if (want("operators")) reports.push_back(verify_operators(e, OperatorBounds::from_max_n(max_n), jobs));
    if (want("lkostka")) reports.push_back(verify_lkostka(e, max_n, jobs));
    if (want("spingreen")) reports.push_back(verify_spingreen(e, max_n, jobs));
    if (want("tables")) reports.push_back(verify_tables(e, max_n, jobs));

    bool ok = true;
    for (const auto& r : reports) {
        out << r.summary() << '\n';
        for (const auto& note : r.failure_notes) out << "  failed: " << note << '\n';
        for (const auto& d : r.diagnostics) out << "  positivity: " << d << '\n';
        ok = ok && r.ok();
    }
    return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin Green polynomials, Q-Kostka polynomials and spin characters"};
    app.require_subcommand(1);

    Common common;
    int n = 0;

    auto* lk = app.add_subcommand("lkostka", "Table of L_{lambda mu}(t) over strict partitions of n");
    auto* sg = app.add_subcommand("spin-green", "Table of Y^lambda_mu(t)");
    auto* sc = app.add_subcommand("spin-char", "Table of spin characters zeta^lambda_mu");
    for (auto* cmd : {lk, sg, sc}) {
        cmd->add_option("--n", n, "Weight")->required();
        add_common(cmd, common);
    }

    auto* ex = app.add_subcommand("expand", "Expand G_lambda or Q_lambda in the Q or p basis");
    std::string family = "G", basis = "Q", lambda_text;
    ex->add_option("--family", family)->check(CLI::IsMember({"G", "Q"}))->capture_default_str();
    ex->add_option("--lambda", lambda_text, "Strict partition, e.g. 3,2")->required();
    ex->add_option("--basis", basis)->check(CLI::IsMember({"Q", "p"}))->capture_default_str();
    add_common(ex, common);

    auto* vf = app.add_subcommand("verify", "Run verification suites");
    std::string suite = "all";
    int max_n = 7;
    vf->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "operators", "identities", "lkostka", "spingreen", "tables"}))
        ->capture_default_str();
    vf->add_option("--max-n", max_n)->capture_default_str();
    add_common(vf, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const Format format = parse_format(common.format);
        if (lk->parsed() || sg->parsed() || sc->parsed()) {
            if (n < 1) throw UsageError("--n must be at least 1");
            require_writable(common);
            Session session(common);
            Engines& e = session.engines();
            const unsigned jobs = common.job_count();
            if (lk->parsed()) emit(common, render(e.kostka.l_table(n, jobs), format));
            if (sg->parsed()) emit(common, render(e.green.y_table(n, jobs), format));
            if (sc->parsed()) emit(common, render(e.green.spin_char_table(n, jobs), format));
            return 0;
        }
        if (ex->parsed()) {
            const Partition lambda = parse_strict(lambda_text);
            require_writable(common);
            Session session(common);
            const VertexEngine& v = session.engines().vertex;
            const GammaElement f = family == "G" ? v.qhl(lambda) : v.schur_q(lambda);
            const std::map<Partition, TPoly> terms = basis == "Q" ? v.q_expansion(f) : f.terms();
            emit(common, render_expansion(terms, basis, format));
            return 0;
        }
        if (vf->parsed()) {
            if (max_n < 1) throw UsageError("--max-n must be at least 1");
            require_writable(common);
            Session session(common);
            std::ostringstream report;
            const int status = run_verify(session.engines(), suite, max_n, common.job_count(), report);
            emit(common, report.str());
            return status;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
