// Acceptance suite: every criterion at its stated bounds, one pass/fail
// line each, exact rational equality throughout. Exit 0 iff all pass.

#include <cstdio>
#include <thread>

#include "coneortho/verify.hpp"

using namespace coneortho;

namespace {

bool report(int number, const char* label, const VerifyResult& r) {
    std::printf("%s - criterion %d: %s (%zu checks)\n", r.pass() ? "PASS" : "FAIL", number,
                label, r.checked);
    for (const auto& f : r.failures) std::printf("       failure: %s\n", f.c_str());
    for (const auto& n : r.notes) std::printf("       note: %s\n", n.c_str());
    std::fflush(stdout);
    return r.pass();
}

bool report2(int number, const char* label, const VerifyResult& a, const VerifyResult& b) {
    VerifyResult merged;
    merged.suite = a.suite + "+" + b.suite;
    merged.checked = a.checked + b.checked;
    merged.failures = a.failures;
    merged.failures.insert(merged.failures.end(), b.failures.begin(), b.failures.end());
    merged.notes = a.notes;
    merged.notes.insert(merged.notes.end(), b.notes.begin(), b.notes.end());
    return report(number, label, merged);
}

}  // namespace

int main() {
    unsigned jobs = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    bool ok = true;

    ok &= report(1, "b/c inversion identity, |k| <= 6, d in {1,2,3}, mu in {1/2,1,7/3}",
                 verify_bc_delta({1, 2, 3}, 6, {Rational(1, 2), Rational(1), Rational(7, 3)},
                                 jobs));

    ok &= report(2, "V monomiality and orthogonality, d in {1,2,3}, n <= 6, full grid",
                 verify_cone_ortho({1, 2, 3}, 6, jobs));

    ok &= report(3, "construction equivalence of the two V forms, d in {2,3}, |k| <= 5, n <= 6",
                 verify_construction_equiv({2, 3}, 5, 6, jobs));

    ok &= report2(4, "norm closed forms equal exact pairings; error displays at grid points",
                  verify_norms({1, 2, 3}, 6, jobs), verify_en_tables(6, jobs));

    ok &= report(5, "least-squares optimality via exact normal equations, d = 1, n <= 3",
                 verify_least_squares(3, jobs));

    ok &= report(6, "Rodrigues dual-construction equality and orthogonality, d in {1,2}, n <= 4",
                 verify_rodrigues_dual({1, 2}, 4, jobs));

    ok &= report(7, "partial biorthogonality classification, d in {1,2}, n <= 5",
                 verify_biortho({1, 2}, 5, jobs));

    ok &= report(8, "Y-basis full biorthogonality, d = 1, n <= 8, both families",
                 verify_y_biortho(8, jobs));

    ok &= report(9, "all six generating functions at order 4, d in {1,2}",
                 verify_genfunc_suite({1, 2}, 4, jobs));

    ok &= report(10, "S reconstructed from V, d in {2,3}, |k| <= 5, n <= 6",
                 verify_s_from_v({2, 3}, 5, 6, jobs));

    std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
    return ok ? 0 : 1;
}
