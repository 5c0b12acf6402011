#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>

#include "zetashift/moments.hpp"

using namespace zetashift;

namespace {

const std::string kDataFile = std::string(ZETASHIFT_DATA_DIR) + "/zeros_100k.txt";

ZeroSet first_zeros(std::size_t n) {
    static ZeroSet all = load_zeros(kDataFile);
    ZeroSet out;
    out.gammas.assign(all.gammas.begin(), all.gammas.begin() + n);
    out.t_max = out.gammas.back();
    return out;
}

const LambdaTable& table_1e6() {
    static LambdaTable t = build_lambda(1'000'002);
    return t;
}

MomentOptions base_options() {
    MomentOptions o;
    o.table = &table_1e6();
    return o;
}

} // namespace

TEST_CASE("rhs vanishes term by term at h = 0") {
    auto zs = first_zeros(500);
    auto rep = theorem1_rhs(zs, 0.0, base_options());
    for (double t : rep.terms) CHECK(t == 0.0);
    CHECK(rep.rhs_total == 0.0);
}

TEST_CASE("constant of the cos(h log 2) term") {
    auto zs = first_zeros(500);
    const double h = 1.3;
    auto rep = theorem1_rhs(zs, h, base_options());
    const double c = rep.T / (M_PI * M_PI);
    const double a = rep.terms[2] / (c * (1.0 - std::cos(h * std::log(2.0))));
    CHECK(std::abs(a - (-0.10502)) < 1e-5);
}

TEST_CASE("closed-form terms: T7 and T8 arithmetic") {
    auto zs = first_zeros(500);
    const double h = 1.0;
    auto rep = theorem1_rhs(zs, h, base_options());
    const double L = rep.bigL;
    const double c = rep.T / (M_PI * M_PI);
    CHECK(std::abs(rep.terms[7] - c / (L * L) * (23.0 / 100.0)) <
          1e-14 * rep.terms[7]);
    CHECK(std::abs(rep.terms[6] -
                   rep.T * h * std::sin(h * L) / (M_PI * M_PI * 5.0 * L)) <
          1e-14 * std::abs(rep.terms[6]));
}

TEST_CASE("term accounting is bit-exact in the fixed order") {
    auto zs = first_zeros(1000);
    auto rep = theorem1_rhs(zs, 0.7, base_options());
    double s = 0.0;
    for (double t : rep.terms) s += t;
    CHECK(s == rep.rhs_total);
}

TEST_CASE("full verification at a desk-unit scale") {
    auto zs = first_zeros(2000);
    for (double h : {0.5, 1.0}) {
        auto rep = verify_theorem1(zs, h, base_options());
        CHECK(rep.residual == rep.lhs - rep.rhs_total);
        CHECK(std::abs(rep.residual) <= 0.05 * rep.T);
        CHECK(rep.residual_norm ==
              std::abs(rep.residual) * rep.bigL * rep.bigL / rep.T);
        CHECK(rep.metadata.t2_lower <= rep.terms[1]);
        CHECK(rep.terms[1] <= rep.metadata.t2_upper);
        CHECK(rep.metadata.t9_lower <= rep.terms[8]);
        CHECK(rep.terms[8] <= rep.metadata.t9_upper);
    }
}

TEST_CASE("rhs_total is continuous in h") {
    auto zs = first_zeros(1000);
    auto a = theorem1_rhs(zs, 1.0, base_options());
    auto b = theorem1_rhs(zs, 1.0001, base_options());
    CHECK(std::abs(a.rhs_total - b.rhs_total) < 1.0);
}

TEST_CASE("cosine-integral form agrees within its budget") {
    auto zs = first_zeros(2000);
    for (double h : {0.5, 1.0}) {
        auto rep = theorem1_rhs(zs, h, base_options());
        auto ci = theorem1_ci_form(zs, h, base_options());
        const double budget = ci.metadata.ci_equiv_bound +
                              rep.metadata.t5_tail_bound +
                              rep.metadata.t6_tail_bound;
        CHECK(std::abs(ci.rhs_total - rep.rhs_total) <= budget);
        CHECK(!ci.flagged);
    }
    auto z = theorem1_ci_form(zs, 0.0, base_options());
    CHECK(z.flagged);
    CHECK(z.rhs_total == 0.0);

    // definitional rearrangement: Ci(y) - log y - C0 = -Cin(y)
    for (double y : {0.5, 2.0, 9.0})
        CHECK(std::abs((si_ci(y).ci - std::log(y) - kEulerGamma) +
                       one_minus_cos_integral(y)) < 1e-10);
}

TEST_CASE("small-shift baseline") {
    auto zs = first_zeros(2000);
    auto o = base_options();
    CHECK(fujii_rhs(zs, 0.0, o).value == 0.0);

    const double L = std::log(zs.t_max / (2.0 * M_PI));
    const double h = 1.0 / L; // hL = 1: inside the small-shift regime
    auto fj = fujii_rhs(zs, h, o);
    CHECK(!fj.large_h_flag);
    auto rep = theorem1_rhs(zs, h, o);
    CHECK(std::abs(fj.value - rep.rhs_total) <= 0.05 * rep.T);
    // the alpha-tail adds a nonnegative amount (F >= 0, 1 - cos >= 0)
    const double c = rep.T / (M_PI * M_PI);
    CHECK(fj.value / c - one_minus_cos_integral(h * rep.bigL) >= -1e-9);
    CHECK(fujii_rhs(zs, 2.0, o).large_h_flag);
}

TEST_CASE("spectral S3: vanishing shift and the uncached oracle") {
    auto zs = first_zeros(120);
    CHECK(s3_direct(zs, 0.5, 0.0) == 0.0);

    const double h = 1.0, beta = 0.5;
    const double L = std::log(zs.t_max / (2.0 * M_PI));
    const double lx = beta * L;
    // naive ordered loop with the direct (quadrature) transform
    long double acc = 0.0L;
    for (double a : zs.gammas)
        for (double b : zs.gammas)
            acc += k_hat((a - b) * lx) - k_hat((a - b - h) * lx);
    const double oracle = 2.0 / (M_PI * M_PI * lx) * static_cast<double>(acc);
    const double mine = s3_direct(zs, beta, h);
    CHECK(std::abs(mine - oracle) < 1e-6 * std::abs(oracle));

    // continuity in h
    CHECK(std::abs(s3_direct(zs, beta, 1.0) - s3_direct(zs, beta, 1.001)) < 1.0);
}

TEST_CASE("S3 formula: direct agreement and beta stability") {
    auto zs = first_zeros(1000);
    auto o = base_options();
    const double L = std::log(zs.t_max / (2.0 * M_PI));
    const double envelope = 10.0 * zs.t_max / (L * L);
    for (double h : {0.5, 1.0}) {
        const double sd = s3_direct(zs, 0.5, h);
        const double sf = s3_formula(zs, 0.5, h, o);
        CHECK(std::abs(sd - sf) <= envelope);
    }
    CHECK(std::abs(s3_formula(zs, 0.4, 1.0, o) - s3_formula(zs, 0.5, 1.0, o)) <=
          envelope);
    CHECK(s3_formula(zs, 0.5, 0.0, o) == 0.0);
}

TEST_CASE("S4/S5 formula against the direct prime sums") {
    const auto& t = table_1e6();
    auto f0 = s4_s5_formula(M_PI * M_PI, 10.0, 100.0, 0.0, t);
    CHECK(f0.s4 == 0.0);
    CHECK(f0.s5 == 0.0);

    const double x = 1e6, h = 1.0, beta = 0.5;
    const double L = std::log(x) / beta;
    auto d = s4_s5_direct(x, h, t);
    auto f = s4_s5_formula(M_PI * M_PI, L, x, h, t); // T = pi^2: C = 1
    CHECK(std::abs(f.s4 - d.s4_over_t_pi2) <= 1e-2 * std::abs(d.s4_over_t_pi2));
    CHECK(std::abs(f.s5 - d.s5_over_t_pi2) <= 1e-2 * std::abs(d.s5_over_t_pi2));
    // the S5 closed form is the uncapped prime-power cosine sum
    CHECK(f.s5 == prime_power_cos_sum(h));
}

TEST_CASE("kernel-transform identity at N = 200") {
    auto zs = first_zeros(200);
    for (double h : {0.0, 1.0})
        CHECK(lemma_21_22_check(zs, 0.5, h) <= 1e-3);
}
