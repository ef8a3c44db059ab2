#include "spinsym/verify.hpp"

#include <chrono>
#include <sstream>

#include "spinsym/golden.hpp"

namespace spinsym {

namespace {

constexpr std::size_t kMaxNotes = 20;

class Stopwatch {
public:
    explicit Stopwatch(SuiteReport& report)
        : report_(report), start_(std::chrono::steady_clock::now()) {}
    ~Stopwatch() {
        report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    SuiteReport& report_;
    std::chrono::steady_clock::time_point start_;
};

std::string label(const Partition& p) { return "(" + p.to_string() + ")"; }

TPoly sign_poly(int n) { return TPoly(n % 2 == 0 ? 1 : -1); }

std::vector<Partition> odd_basis_upto(int d) {
    std::vector<Partition> out;
    for (int w = 0; w <= d; ++w) {
        for (auto& mu : enumerate_odd(w)) out.push_back(std::move(mu));
    }
    return out;
}

bool nonnegative_integral(const TPoly& f) {
    if (!f.is_integral()) return false;
    for (const auto& c : f.coefficients()) {
        if (c < 0) return false;
    }
    return true;
}

}  // namespace

void SuiteReport::check(bool condition, std::string_view what) {
    ++checks;
    if (condition) return;
    ++failures;
    if (failure_notes.size() < kMaxNotes) failure_notes.emplace_back(what);
}

void SuiteReport::diagnose(bool condition, std::string_view what) {
    ++diagnostic_checks;
    if (!condition) diagnostics.emplace_back(what);
}

std::string SuiteReport::summary() const {
    std::ostringstream os;
    os << (ok() ? "PASS " : "FAIL ") << name << ": " << checks - failures << "/" << checks << " checks";
    if (diagnostic_checks > 0) {
        os << ", " << diagnostics.size() << "/" << diagnostic_checks << " positivity counterexamples";
    }
    os.setf(std::ios::fixed);
    os.precision(2);
    os << " (" << seconds << "s)";
    return os.str();
}

OperatorBounds OperatorBounds::from_max_n(int max_n) {
    return {max_n, max_n, max_n + 3, max_n + 2, max_n + 4};
}

SuiteReport verify_operators(const Engines& e, const OperatorBounds& b, unsigned) {
    SuiteReport report;
    report.name = "operators";
    Stopwatch watch(report);
    const VertexEngine& v = e.vertex;
    const auto Q = OperatorSpec::schur_q();
    const auto G = OperatorSpec::hall_littlewood();
    const auto Gs = OperatorSpec::hall_littlewood_dual();
    const auto qs = OperatorSpec::q_dual();
    const TPoly t = TPoly::t();
    const TPoly one_minus_t = TPoly(1) - t;

    const auto basis = odd_basis_upto(b.grade);
    for (const auto& mu : basis) {
        const GammaElement f = GammaElement::p_monomial(mu);
        auto A = [&](const OperatorSpec& s, int m, const GammaElement& x) { return v.apply(s, m, x); };
        for (int m = -b.index; m <= b.index; ++m) {
            for (int n = -b.index; n <= b.index; ++n) {
                const std::string at = " m=" + std::to_string(m) + " n=" + std::to_string(n) + " on p" + label(mu);

                GammaElement anti = A(Q, m, A(Q, n, f)) + A(Q, n, A(Q, m, f));
                GammaElement anti_rhs = m == -n ? f * (sign_poly(n) * Rational(2)) : GammaElement();
                report.check(anti == anti_rhs, "Clifford relation" + at);

                auto GG = [&](int a, int c) { return A(G, a, A(G, c, f)); };
                GammaElement quad = (GG(m, n) + GG(n, m)) * (TPoly(1) - t * t) +
                                    (GG(m - 1, n + 1) - GG(n + 1, m - 1) + GG(n - 1, m + 1) - GG(m + 1, n - 1)) * t;
                GammaElement quad_rhs =
                    m == -n ? f * (sign_poly(n) * one_minus_t * one_minus_t * Rational(2)) : GammaElement();
                report.check(quad == quad_rhs, "quadratic G relation" + at);

                // G*_m Q_n relation, multiplied through by t.
                GammaElement r1 = A(Gs, m, A(Q, n, f)) * t;
                GammaElement r1_rhs = A(Q, n, A(Gs, m, f)) * t + A(Gs, m - 1, A(Q, n - 1, f)) +
                                      A(Q, n - 1, A(Gs, m - 1, f));
                if (n - m >= 0) r1_rhs -= v.q_row(n - m) * f * (TPoly::monomial(2, n - m) * one_minus_t);
                report.check(r1 == r1_rhs, "G*_m Q_n commutator" + at);

                GammaElement r2 = A(qs, m, A(G, n, f));
                GammaElement r2_rhs = A(G, n, A(qs, m, f)) + A(qs, m - 1, A(G, n - 1, f)) + A(G, n - 1, A(qs, m - 1, f));
                report.check(r2 == r2_rhs, "q*_m G_n commutator" + at);

                GammaElement r3 = A(Q, m, v.q_row(n) * f);
                GammaElement r3_rhs = v.q_row(n) * A(Q, m, f) - A(Q, m + 1, v.q_row(n - 1) * f) -
                                      v.q_row(n - 1) * A(Q, m + 1, f);
                report.check(r3 == r3_rhs, "Q_m q_n commutator" + at);
            }
        }
    }

    // Mode adjointness: <Q_n u, w> = (-1)^n <u, Q_{-n} w> and <G_n u, w> = <u, G*_n w>.
    for (int n = -b.index; n <= b.index; ++n) {
        for (const auto& a : basis) {
            const int dw = weight(a) + n;
            if (dw < 0) continue;
            for (const auto& c : enumerate_odd(dw)) {
                const GammaElement u = GammaElement::p_monomial(a), w = GammaElement::p_monomial(c);
                const std::string at = " n=" + std::to_string(n) + " p" + label(a) + " p" + label(c);
                report.check(pair(v.apply(Q, n, u), w) == pair(u, v.apply(Q, -n, w)) * sign_poly(n),
                             "Q_n adjointness" + at);
                report.check(pair(v.apply(G, n, u), w) == pair(u, v.apply(Gs, n, w)), "G_n adjointness" + at);
            }
        }
    }

    // Vacuum expansion of G*_{-n}.
    for (int n = 0; n <= b.g_star_p; ++n) {
        GammaElement expected;
        for (const auto& rho : enumerate_odd(n)) expected.add_term(rho, inv_z_t(rho));
        report.check(v.apply(Gs, -n, GammaElement::one()) == expected,
                     "G*_{-n}.1 expansion n=" + std::to_string(n));
    }

    // Closed form for G*_k Q_lambda.1.
    for (int w = 0; w <= b.g_star_q; ++w) {
        for (const auto& lambda : enumerate_strict(w)) {
            for (int k = 1; k <= b.g_star_q; ++k) {
                report.check(v.gstar_on_schur(k, lambda) == v.apply(Gs, k, v.schur_q(lambda)),
                             "G*_k Q_lambda closed form k=" + std::to_string(k) + " lambda=" + label(lambda));
            }
        }
    }

    // G*_k p_mu.1 = sum over index subpartitions nu of p_nu G*_{k+|nu|-n}.1
    for (int w = 0; w <= b.g_star_p; ++w) {
        for (const auto& mu : enumerate_odd(w)) {
            for (int k = 0; k <= b.g_star_p; ++k) {
                GammaElement expected;
                for (int i = 0; i <= w; ++i) {
                    for (const auto& nu : index_subpartitions(mu, i)) {
                        expected += GammaElement::p_monomial(nu) * v.apply(Gs, k + i - w, GammaElement::one());
                    }
                }
                report.check(v.apply(Gs, k, GammaElement::p_monomial(mu)) == expected,
                             "G*_k p_mu expansion k=" + std::to_string(k) + " mu=" + label(mu));
            }
        }
    }

    // p*_k G_lambda.1 = sum_i G_{lambda_1} ... G_{lambda_i - k} ... G_{lambda_l}.1
    for (int w = 0; w <= b.g_star_p; ++w) {
        for (const auto& lambda : enumerate_strict(w)) {
            for (int k = 1; k <= b.g_star_p; k += 2) {
                GammaElement expected;
                for (std::size_t i = 0; i < lambda.length(); ++i) {
                    std::vector<int> modes = lambda.parts();
                    modes[i] -= k;
                    expected += v.qhl_modes(modes);
                }
                report.check(p_adjoint(k, v.qhl(lambda)) == expected,
                             "p*_k G_lambda expansion k=" + std::to_string(k) + " lambda=" + label(lambda));
            }
        }
    }

    // Pieri: Q_mu q_r = sum over strips 2^{a + l(mu) - l(lambda)} Q_lambda.
    for (int w = 0; w <= b.pieri; ++w) {
        for (const auto& mu : enumerate_strict(w)) {
            for (int r = 0; w + r <= b.pieri; ++r) {
                QExpansion expected;
                for (const auto& s : horizontal_strips(mu, r)) {
                    expected.emplace(s.outer, TPoly(pow2(s.a_stat + static_cast<int>(mu.length()) -
                                                         static_cast<int>(s.outer.length()))));
                }
                report.check(v.q_expansion(v.schur_q(mu) * v.q_row(r)) == expected,
                             "Pieri rule mu=" + label(mu) + " r=" + std::to_string(r));
            }
        }
    }
    return report;
}

SuiteReport verify_identities(int max_k, int max_lemma_n, int max_d_weight) {
    SuiteReport report;
    report.name = "identities";
    Stopwatch watch(report);
    for (int k = 1; k <= max_k; ++k) {
        TPoly lhs = signed_t(k);
        for (int i = 1; i < k; ++i) lhs += signed_t(i) * Rational(2);
        report.check(lhs == t_integer(k), "(k)_t + 2 sum (i)_t = [k]_t at k=" + std::to_string(k));
    }
    const TPoly t_minus_one{-1, 1};
    for (int n = 0; n <= max_lemma_n; ++n) {
        TPoly sum;
        for (const auto& rho : enumerate_odd(n)) sum += inv_z_t(rho);
        const TPoly expected = n == 0 ? TPoly(1) : t_minus_one * signed_t(n) * Rational(2);
        report.check(sum == expected, "sum of (-2)^l / z_rho(t) over OP_n at n=" + std::to_string(n));
    }
    for (int w = 0; w <= max_d_weight; ++w) {
        for (const auto& p : enumerate_partitions(w)) {
            TPoly counted;
            for (int i = 0; i <= w; ++i) {
                counted += TPoly::monomial(static_cast<int>(index_subpartitions(p, i).size()), i);
            }
            TPoly product = 1;
            for (int part = 1; part <= w; ++part) {
                for (int m = 0; m < p.multiplicity(part); ++m) product *= TPoly(1) + TPoly::monomial(1, part);
            }
            report.check(counted == product && d_poly(p) == product, "D_t product formula at " + label(p));
            report.check(d_poly(p).reversed(w) == d_poly(p), "D_t palindromic at " + label(p));
        }
    }
    return report;
}

SuiteReport verify_lkostka(const Engines& e, int max_n, unsigned jobs) {
    SuiteReport report;
    report.name = "lkostka";
    Stopwatch watch(report);
    const QKostkaEngine& k = e.kostka;

    for (int n = 0; n <= max_n; ++n) {
        const LTable table = k.l_table(n, jobs);
        const auto& sp = table.rows;
        for (std::size_t r = 0; r < sp.size(); ++r) {
            for (std::size_t c = 0; c < sp.size(); ++c) {
                const Partition& lambda = sp[r];
                const Partition& mu = sp[c];
                const TPoly& l = table.entries[r][c];
                const std::string at = " at " + label(lambda) + "," + label(mu);
                report.check(l == k.l_direct(lambda, mu), "recursion equals oracle" + at);
                if (!dominance_leq(mu, lambda)) {
                    report.check(l.is_zero(), "support within dominance" + at);
                    continue;
                }
                if (lambda == mu) report.check(l == TPoly(1), "unit diagonal" + at);
                if (lambda.length() == 1) {
                    report.check(l == TPoly::monomial(pow2(static_cast<int>(mu.length()) - 1), n_stat(mu)),
                                 "one-row row law" + at);
                }
                report.check(l.degree() == n_stat(mu) - n_stat(lambda), "degree law" + at);
                const Rational divisor = pow2(static_cast<int>(mu.length()) - static_cast<int>(lambda.length()));
                report.check((l * (1 / divisor)).is_integral(), "2-power divisibility" + at);
                if (mu.length() == 2) report.check(l == l_two_row(lambda, mu), "two-row closed form" + at);
                report.diagnose(nonnegative_integral(l), "L" + at + " = " + l.to_string());
            }
        }
    }

    // Prefix: L_{(m,lambda),(m,mu)} = L_{lambda mu} for m > lambda_1.
    for (int w = 0; w <= max_n - 3; ++w) {
        for (const auto& lambda : enumerate_strict(w)) {
            for (const auto& mu : enumerate_strict(w)) {
                if (!dominance_leq(mu, lambda)) continue;
                const TPoly base = k.l_recursive(lambda, mu);
                for (int m = lambda.largest() + 1; m <= max_n; ++m) {
                    report.check(k.l_recursive(prepend(m, lambda), prepend(m, mu)) == base,
                                 "prefix property m=" + std::to_string(m) + " at " + label(lambda) + "," + label(mu));
                }
            }
        }
    }

    // Stability: mu_1 >= lambda_2 gives L_{lambda+(r), mu+(r)} = L_{lambda mu}.
    for (int w = 1; w <= max_n - 2; ++w) {
        for (const auto& lambda : enumerate_strict(w)) {
            for (const auto& mu : enumerate_strict(w)) {
                const int lambda2 = lambda.length() > 1 ? lambda[1] : 0;
                if (mu.largest() < lambda2) continue;
                const TPoly base = k.l_recursive(lambda, mu);
                for (int r = 1; r <= 4; ++r) {
                    report.check(k.l_recursive(add_to_first(lambda, r), add_to_first(mu, r)) == base,
                                 "stability r=" + std::to_string(r) + " at " + label(lambda) + "," + label(mu));
                }
            }
        }
    }
    return report;
}

SuiteReport verify_spingreen(const Engines& e, int max_n, unsigned jobs) {
    SuiteReport report;
    report.name = "spingreen";
    Stopwatch watch(report);
    const SpinGreenEngine& g = e.green;
    const VertexEngine& v = e.vertex;

    for (int n = 1; n <= max_n; ++n) {
        const YTable table = g.y_table(n, jobs);
        const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            const Partition& lambda = table.rows[r];
            GammaElement rebuilt, frobenius;
            for (std::size_t c = 0; c < table.cols.size(); ++c) {
                const Partition& mu = table.cols[c];
                const TPoly& y = table.entries[r][c];
                const std::string at = " at " + label(lambda) + "," + label(mu);
                report.check(y == g.y_direct(lambda, mu), "recursion equals oracle" + at);
                report.check(y == g.y_via_l(lambda, mu), "recursion equals L-transition route" + at);
                report.check(y.degree() == n_stat(lambda) &&
                                 y.leading() == pow2(static_cast<int>(lambda.length()) - 1),
                             "degree and leading coefficient" + at);
                if (lambda.length() == 1) report.check(y == TPoly(1), "one-row value" + at);
                if (lambda.length() == 2) {
                    report.check(y == y_two_row(lambda[0], n, mu), "two-row closed form" + at);
                }
                const int twice = static_cast<int>(lambda.length()) - static_cast<int>(mu.length()) + epsilon(lambda);
                report.check(twice % 2 == 0, "2-exponent parity" + at);
                Rational zeta;
                bool integral = true;
                try {
                    zeta = g.spin_character(lambda, mu);
                } catch (const std::domain_error&) {
                    integral = false;
                }
                report.check(integral, "integral spin character" + at);
                const Rational inv_z = Rational(mpz_class(1), z_factor(mu));
                rebuilt.add_term(mu, y * (inv_z * pow2(static_cast<int>(mu.length()))));
                if (n <= 8 && integral) {
                    const int e2 = static_cast<int>(lambda.length() + mu.length()) + epsilon(lambda);
                    frobenius.add_term(mu, TPoly(inv_z * zeta * pow2(e2 / 2)));
                }
            }
            report.check(rebuilt == v.qhl(lambda), "power-sum reconstruction of G" + label(lambda));
            if (n <= 8) report.check(frobenius == v.schur_q(lambda), "Frobenius consistency at " + label(lambda));
            const TPoly y1 = table.at(lambda, ones);
            report.diagnose(nonnegative_integral(y1.reversed(n_stat(lambda))),
                            "t^{n(lambda)} Y(1/t) at " + label(lambda) + ",(1^" + std::to_string(n) + ") = " +
                                y1.reversed(n_stat(lambda)).to_string());
        }
    }
    return report;
}

SuiteReport verify_tables(const Engines& e, int max_n, unsigned jobs) {
    SuiteReport report;
    report.name = "tables";
    Stopwatch watch(report);
    for (const auto& golden : golden_y_tables()) {
        if (golden.n > max_n) continue;
        const YTable expected = golden.to_table();
        const YTable computed = e.green.y_table(golden.n, jobs);
        report.check(computed.rows == expected.rows && computed.cols == expected.cols,
                     "axes of table n=" + std::to_string(golden.n));
        if (computed.rows != expected.rows || computed.cols != expected.cols) continue;
        for (std::size_t r = 0; r < computed.rows.size(); ++r) {
            for (std::size_t c = 0; c < computed.cols.size(); ++c) {
                report.check(computed.entries[r][c] == expected.entries[r][c],
                             "n=" + std::to_string(golden.n) + " cell " + label(computed.rows[r]) + "," +
                                 label(computed.cols[c]) + ": computed " + computed.entries[r][c].to_string() +
                                 ", published " + expected.entries[r][c].to_string());
            }
        }
    }
    return report;
}

}  // namespace spinsym
