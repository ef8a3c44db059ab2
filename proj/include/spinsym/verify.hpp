#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spinsym/spin_green.hpp"

namespace spinsym {

struct SuiteReport {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    // First few failing checks, for the summary output.
    std::vector<std::string> failure_notes;
    // Non-fatal findings (positivity counterexamples).
    std::vector<std::string> diagnostics;
    std::size_t diagnostic_checks = 0;
    double seconds = 0;

    bool ok() const { return failures == 0; }
    void check(bool condition, std::string_view what);
    void diagnose(bool condition, std::string_view what);
    std::string summary() const;
};

// Index and grade bounds for the operator identity checks.
struct OperatorBounds {
    int grade = 5;        // relations applied to p_mu, |mu| <= grade
    int index = 5;        // mode indices in [-index, index]
    int g_star_q = 8;     // G*_k Q_lambda closed form: |lambda|, k <= this
    int g_star_p = 7;     // G*_k p_mu and p*_k G_lambda: |mu|, |lambda|, k <= this
    int pieri = 9;        // |mu| + r <= this

    // grade = index = max_n, the theorem-level bounds scaled from it.
    static OperatorBounds from_max_n(int max_n);
};

class Engines {
public:
    Engines() : kostka(vertex), green(kostka) {}
    VertexEngine vertex;
    QKostkaEngine kostka;
    SpinGreenEngine green;
};

// Clifford and quadratic relations, the G*/Q, q*/G, Q/q commutators, mode
// adjointness, the closed forms for G*_k on Q_lambda.1 and p_mu, p*_k on
// G_lambda.1, the vacuum expansion of G*_{-n}, and the Pieri rule.
SuiteReport verify_operators(const Engines& e, const OperatorBounds& bounds, unsigned jobs = 1);

// t-integer, D_t and 1/z_rho(t) identities.
SuiteReport verify_identities(int max_k = 30, int max_lemma_n = 20, int max_d_weight = 10);

// Recursion against the vertex-operator oracle and the structural laws of L.
SuiteReport verify_lkostka(const Engines& e, int max_n, unsigned jobs = 1);

// Three routes to Y, its structural laws, Frobenius consistency and
// integrality of the spin characters.
SuiteReport verify_spingreen(const Engines& e, int max_n, unsigned jobs = 1);

// Y-tables against the published tables, n = 3..min(7, max_n).
SuiteReport verify_tables(const Engines& e, int max_n, unsigned jobs = 1);

}  // namespace spinsym
