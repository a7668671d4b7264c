// Acceptance suite: runs every criterion at its stated bound and prints one
// pass/fail line per criterion. Exits non-zero when any criterion fails.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <vector>

#include "dwcalc/verify.hpp"

using namespace dwcalc;

namespace {

int failures = 0;

void report(int index, const std::string& text, const SuiteResult& r) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << index << ": " << text << " ["
              << r.cases << " cases, " << std::fixed << std::setprecision(1) << r.seconds
              << "s]\n";
    if (!r.passed) {
        std::cout << "     witness: " << r.witness << "\n";
        ++failures;
    }
    std::cout.flush();
}

}  // namespace

int main() {
    // 1. omega_l normalization + cocycle identity, m <= 12, all l, exact.
    report(1, "cocycle validity (m <= 12, all l, exhaustive)", verify_cocycles(12));

    // 2. kappa == kappa_oracle, m <= 10, all l, all z, |a|,|b| <= 12.
    report(2, "kappa closed form == Euclidean product oracle (m <= 10, |a|,|b| <= 12)",
           verify_kappa(10, 12));

    // 3. Gram matrix of {chi^l_{h,s}} is the identity, m <= 12, all l.
    report(3, "orthonormality of the character basis (m <= 12, all l)",
           verify_orthonormality(12));

    // 4. Fusion: mul(S^-1 chi, S^-1 chi') = delta * m * S^-1 chi, m <= 8, all l.
    report(4, "fusion rule on the S-transformed basis (m <= 8, all l)", verify_fusion(8));

    // 5. dw_formula at l = 0 equals the hom-counting oracle, abelian groups of
    //    order <= 16, >= 100 Seifert data with g <= 2, n <= 3, |a|,|b| <= 4.
    report(5, "untwisted formula == hom-counting oracle (abelian order <= 16, 100 manifolds)",
           verify_formula_vs_oracle(16, 100));

    // 6. dw_prime_closed_form == dw_formula, p in {3,5,7}, all l, >= 50 cases
    //    per branch of the closed form.
    report(6, "prime closed form == character formula (p in {3,5,7}, all l, 50/branch)",
           verify_prime_vs_formula(50));

    // 7. Derived fixed values: Z^{w_0}(M(0;(1,1))) = 1/m and
    //    Z^{w_0}(M(g;)) = m^{2g} for m <= 8, g <= 3;
    //    Z^{w_1}(M(0;(1,1),(1,2))) over Z/3 = (1 + 2 zeta_3^2)/3.
    report(7, "derived fixed values (1/m, m^{2g}, (1+2 zeta_3^2)/3)",
           verify_fixed_values(8, 3));

    // 8. Gauss sums: |S_p(a)|^2 = p and S_p(a) = (a/p) S_p(1) for p <= 97; the
    //    half-sum variant is evaluated and its status recorded.
    bool half_variant = true;
    SuiteResult gauss = verify_gauss(97, &half_variant);
    report(8, "gauss sums: magnitude and Legendre twist (p <= 97)", gauss);
    std::cout << "     note: the half-sum variant (1+(a/p)g_1)/2 "
              << (half_variant ? "HOLDS" : "FAILS (direct summation is normative)") << "\n";

    // 9. Glued-solid-torus coefficients equal eta_rho(a,b)/#G and are
    //    completion independent, m <= 8, all l, |a|,|b| <= 5.
    report(9, "gluing-vector S-basis coefficients = eta/#G (m <= 8, |a|,|b| <= 5)",
           verify_gluing(8, 5));

    // 10. restriction_level returns l at generators (m <= 12) and survives 500
    //     randomized coboundary perturbations (m <= 8).
    report(10, "restriction level: generator values and coboundary invariance",
           verify_restriction(12, 500, 8));

    if (failures == 0) {
        std::cout << "ACCEPTANCE: all criteria passed\n";
        return 0;
    }
    std::cout << "ACCEPTANCE: " << failures << " criterion(s) FAILED\n";
    return 1;
}
