// Acceptance suite: one line per criterion, non-zero exit if any fails.
// Usage: phm_acceptance [criterion numbers...]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "../support.hpp"

using namespace phm;
using test::series_from;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Accumulates a verdict and the first failure message.
class Check {
public:
    void require(bool ok, const std::string& what) {
        if (!ok && pass_) {
            pass_ = false;
            first_ = what;
        }
    }
    Outcome done(std::string summary) const {
        return {pass_, pass_ ? std::move(summary) : "first failure: " + first_ + "; " + summary};
    }

private:
    bool pass_ = true;
    std::string first_;
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

// ---------------------------------------------------------------- criteria

Outcome orthogonality() {
    Check c;
    double worst = 0.0;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto rep = orthogonality_selftest(n, 6, 16);
        c.require(std::abs(rep.zero_frequency_average - 1.0) <= 1e-12, "nu = 0 average differs from 1");
        c.require(rep.max_nonzero_modulus < 1e-12, "nonzero frequency average >= 1e-12 at n=" + std::to_string(n));
        worst = std::max(worst, rep.max_nonzero_modulus);
    }
    return c.done(fmt("max |avg| over nu != 0: %.3g", worst));
}

Outcome dft_round_trip() {
    Check c;
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const unsigned D = static_cast<unsigned>(trial % 6);
        const auto s = test::random_series(n, D, rng);
        for (double r : {0.3, 0.6, 0.9}) {
            for (const auto& t : dft_coefficients(s, r, D)) {
                const double err = std::abs(t.coeff - s.coeff(t.alpha));
                worst = std::max(worst, err);
                c.require(err <= 1e-9, "coefficient " + t.alpha.to_string() + " off by more than 1e-9");
            }
        }
    }
    return c.done(fmt("max coefficient error: %.3g", worst));
}

Outcome sharpness_n1() {
    Check c;
    const auto f = extremal_sharpness_map(1, 2, 1.0, SharpnessPart::Holomorphic);
    const auto audit = coefficient_audit(f, 1.0, 2);
    const auto* row = audit.find_row("m=2 sum|a|");
    c.require(row != nullptr, "audit row missing");
    const double attained = row ? row->attained : -1.0;
    const double bound = row ? row->bound : -1.0;
    c.require(std::abs(attained - 0.5) <= 1e-14, "sum |a_2| != 0.5");
    c.require(std::abs(bound - 0.5) <= 1e-14, "bound != 0.5");
    const auto member = membership(f, 1.0, TorusGrid::standard(1));
    c.require(std::abs(member.certified_upper - 1.0) <= 1e-14, "majorant != 1");
    c.require(member.verdict == MembershipVerdict::CertifiedMember, "verdict is not CERTIFIED_MEMBER");
    return c.done(fmt("sum|a_2| = %.15g, bound = %.15g", attained, bound) + ", verdict " +
                  std::string(to_string(member.verdict)));
}

Outcome sharpness_gap_n2() {
    Check c;
    const auto f = extremal_sharpness_map(2, 2, 1.0, SharpnessPart::Holomorphic);
    const auto audit = coefficient_audit(f, 1.0, 2);
    const auto* row = audit.find_row("m=2 sum|a|");
    c.require(row != nullptr, "audit row missing");
    const double attained = row ? row->attained : -1.0;
    const double bound = row ? row->bound : -1.0;
    c.require(audit.holds == Holds::Pass, "audit did not PASS");
    c.require(std::abs(bound - 0.75) <= 1e-12, "bound != 0.75");
    c.require(std::abs(attained - 0.375) <= 1e-12, "attained != 0.375");
    c.require(row && std::abs(row->ratio() - 0.5) <= 1e-12, "ratio != 0.5");
    return c.done(fmt("attained %.12g of bound %.12g", attained, bound) +
                  fmt(", ratio %.12g", row ? row->ratio() : -1.0));
}

Outcome majorant_implies_membership() {
    Check c;
    std::mt19937_64 rng(7);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = test::random_certified_map(2, 4, 0.95, rng);
        c.require(std::abs(certified_upper_bound(f) - 0.95) <= 1e-12, "fixture majorant is not 0.95");
        const double sup = sup_estimate(f, TorusGrid::standard(2)).value;
        worst = std::max(worst, sup);
        c.require(sup <= 0.95 + 1e-8, "sampled sup above 0.95 + 1e-8");
    }
    return c.done(fmt("max sampled sup: %.12g (limit 0.95)", worst));
}

Outcome epsilon_forward() {
    Check c;
    std::mt19937_64 rng(11);
    const auto eps = unimodular_sample(32);
    double worst = -INFINITY;
    std::size_t checks = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const PolySeries h = test::random_series(n, 4, rng);
        const PolySeries g = test::random_series(n, 4, rng);
        auto pts = halton_polydisk(n, 200, 0.99, trial + 1);
        const TorusGrid torus(n, 0.999, n == 1 ? 64 : (n == 2 ? 24 : 8));
        for (std::size_t i = 0; i < torus.size(); ++i) pts.push_back(torus.point(i));
        const LambdaFunctional full(PluriharmonicMap(h, g));
        std::vector<double> bound;
        for (const auto& z : pts) bound.push_back(full(z));
        for (const auto& e : eps) {
            const std::vector<PolySeries> parts{h, g};
            const std::vector<cplx> w{1.0, e};
            const LambdaFunctional F(PolySeries::linear_combination(parts, w));
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const double excess = F(pts[i]) - bound[i];
                worst = std::max(worst, excess);
                ++checks;
                c.require(excess <= 1e-12, "holo Lambda of h + eps g exceeds Lambda_f");
            }
        }
    }
    return c.done(std::to_string(checks) + " comparisons" + fmt(", max excess %.3g", worst));
}

Outcome band_and_injectivity() {
    Check c;
    std::mt19937_64 rng(13);
    const auto pts = halton_polydisk(2, 2000);
    double lo = INFINITY, hi = 0.0, gap = INFINITY;
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = test::random_certified_map(2, 4, 0.9, rng, false);
        c.require(holo_membership(f.h(), 0.9, TorusGrid(2, 0.999, 8), 0).verdict ==
                      MembershipVerdict::CertifiedMember,
                  "fixture is not a certified member");
        const auto band = derivative_band(f.h(), 0.9, pts);
        c.require(band.holds == Holds::Pass, "derivative band violated");
        for (std::size_t j = 1; j <= 2; ++j) {
            lo = std::min(lo, band.find_row("min |dphi| axis " + std::to_string(j))->attained);
            hi = std::max(hi, band.find_row("max |dphi| axis " + std::to_string(j))->attained);
        }
        const auto scan = injectivity_scan(f, pts, 1e-9, 1e-3);
        c.require(scan.status == InjectivityStatus::NoCollision, "collision found");
        gap = std::min(gap, scan.min_image_gap);
    }
    return c.done(fmt("|dphi| in [%.4f, %.4f]", lo, hi) + fmt(", min image gap %.3g", gap));
}

Outcome growth_n1() {
    Check c;
    const auto f1 = extremal_growth_map(1, 1.0, 1);
    const auto f2 = extremal_growth_map(1, 1.0, -1);
    double worst = 0.0;
    for (int k = 1; k <= 50; ++k) {
        const double r = 0.99 * k / 50.0;
        const ComplexPoint z{r};
        const double e1 = std::abs(std::abs(evaluate_map(f1, z)) - (r + r * r / 2));
        const double e2 = std::abs(std::abs(evaluate_map(f2, z)) - (r - r * r / 2));
        worst = std::max({worst, e1, e2});
        c.require(e1 <= 1e-12 && e2 <= 1e-12, "extremal value off the envelope");
    }
    std::mt19937_64 rng(17);
    const auto pts = halton_polydisk(1, 500, 0.99, 5);
    double upper = -INFINITY, lower = -INFINITY;
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = test::random_certified_map(1, 5, 0.2 + 0.008 * trial, rng);
        const auto rep = growth_check(f, 1.0, pts, TorusGrid::standard(1));
        c.require(rep.holds == Holds::Pass, "envelope violated by a certified member");
        upper = std::max(upper, rep.find_row("upper max excess")->attained);
        lower = std::max(lower, rep.find_row("lower max deficit")->attained);
    }
    return c.done(fmt("extremal error %.3g", worst) + fmt(", members: max upper excess %.3g, max lower deficit %.3g", upper, lower));
}

Outcome noshiro_linkage() {
    Check c;
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto disk = disk_grid();
    const auto poly = halton_polydisk(2, 1000);
    int passed = 0;
    for (int trial = 0; trial < 20; ++trial) {
        // |dh/dz - 1| + |dg/dz| <= 2 (|a| + |b|) < 1 on every axis.
        const std::size_t n = trial < 14 ? 1 : 2;
        const double budget = 0.05 + 0.9 * u(rng);
        const double share = u(rng);
        const cplx a = budget * share / 2.0 * std::polar(1.0, 2 * std::numbers::pi * u(rng));
        const cplx b = budget * (1 - share) / 2.0 * std::polar(1.0, 2 * std::numbers::pi * u(rng));
        PluriharmonicMap f = n == 1
            ? PluriharmonicMap(series_from(1, 2, {{{1}, 1.0}, {{2}, a}}), series_from(1, 2, {{{2}, b}}))
            : PluriharmonicMap(series_from(2, 2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{2, 0}, a}, {{0, 2}, a}}),
                               series_from(2, 2, {{{2, 0}, b}, {{0, 2}, b}}));
        const auto& pts = n == 1 ? disk : poly;
        const auto nw = noshiro_warschawski(f, 0.0, pts);
        c.require(nw.holds == Holds::Pass, "fixture " + std::to_string(trial) + " does not pass the criterion");
        if (nw.holds != Holds::Pass) continue;
        ++passed;
        c.require(injectivity_scan(f, pts).status == InjectivityStatus::NoCollision,
                  "collision for a criterion-passing fixture");
    }
    const PluriharmonicMap violator(series_from(1, 2, {{{1}, 1.0}}), series_from(1, 2, {{{2}, 0.6}}));
    const auto rep = noshiro_warschawski(violator, 0.0, disk);
    c.require(rep.holds == Holds::Fail && rep.witness && rep.witness->point, "violator not flagged");
    const double wz = rep.witness && rep.witness->point ? rep.witness->point->sup_norm() : 0.0;
    c.require(wz > 5.0 / 6.0 - 1e-3, "violator witness inside |z| < 5/6");
    return c.done(std::to_string(passed) + " fixtures pass and scan clean" + fmt(", violator witness |z| = %.6f", wz));
}

Outcome stable_biconditional() {
    Check c;
    const auto lambdas = unimodular_sample(16);
    const auto base = disk_grid();
    struct Fixture {
        double ch, cg;
    };
    const std::vector<Fixture> fixtures{{0.25, 0.25}, {0.5, 0.5}, {0.5, 0.0}, {0.3, 0.3}};
    const std::vector<double> offsets{0.01, 0.05, 0.1};
    std::ostringstream summary;
    for (const auto& fx : fixtures) {
        const PluriharmonicMap f(series_from(1, 2, {{{1}, 1.0}, {{2}, fx.ch}}), series_from(1, 2, {{{2}, fx.cg}}));
        // Ground truth for z + c z^2 on the unit disk: univalent iff |c| <= 1/2.
        // Where it is not, pairs symmetric about -1/(2c) share an image.
        std::vector<cplx> centres{-0.5};
        for (const auto& e : lambdas) {
            const cplx ce = fx.ch + e * fx.cg;
            if (std::abs(ce) > 0.5) centres.push_back(-1.0 / (2.0 * ce));
        }
        auto pts = base;
        const auto extra = symmetric_pairs(centres, offsets);
        pts.insert(pts.end(), extra.begin(), extra.end());

        const auto rep = stable_scan(f, lambdas, pts);
        int truth_mismatch = 0, oracle_mismatch = 0;
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            const bool univalent = std::abs(fx.ch + lambdas[i] * fx.cg) <= 0.5;
            const bool clean = rep.holomorphic[i].status == InjectivityStatus::NoCollision;
            if (univalent != clean) ++truth_mismatch;
        }
        // Brute-force pairwise oracle on the eps = 1 member of the family.
        std::vector<cplx> vals;
        for (const auto& z : pts) vals.push_back(z[0] + (fx.ch + fx.cg) * z[0] * z[0]);
        const auto oracle = test::pairwise_oracle(pts, vals, 1e-9, 1e-3);
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            if (lambdas[i] == cplx{1.0, 0.0} &&
                oracle.collision != (rep.holomorphic[i].status == InjectivityStatus::Collision))
                ++oracle_mismatch;
        }
        c.require(truth_mismatch == 0, "F_eps verdict disagrees with |c| <= 1/2");
        c.require(oracle_mismatch == 0, "F_1 verdict disagrees with the pairwise oracle");
        c.require(rep.biconditional_holds(), "stable f_lambda and stable F_eps verdicts disagree");
        int collisions = 0;
        for (const auto& v : rep.pluriharmonic) collisions += v.status == InjectivityStatus::Collision;
        summary << "(" << fx.ch << "," << fx.cg << "): f_lambda collisions " << collisions << "/" << lambdas.size()
                << ", stable " << (rep.stable_pluriharmonic() ? "yes" : "no") << "/"
                << (rep.stable_holomorphic() ? "yes" : "no") << "; ";
    }
    std::string s = summary.str();
    s.resize(s.size() - 2);
    return c.done(s);
}

Outcome convex_closure() {
    Check c;
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.3, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t k = 2 + trial % 3;
        const std::size_t n = 1 + trial % 3;
        std::vector<PluriharmonicMap> members;
        for (std::size_t i = 0; i < k; ++i) members.push_back(test::random_certified_map(n, 4, u(rng), rng));
        const auto mix = convex_combine(members, test::random_weights(k, rng));
        const double bound = certified_upper_bound(mix);
        worst = std::max(worst, bound);
        c.require(bound <= 1.0 + 1e-12, "combination majorant above 1");
        c.require(mix.is_normalized_h0(), "combination lost normalization");
    }
    return c.done(fmt("max majorant of combinations: %.15g", worst));
}

Outcome schwarz() {
    Check c;
    std::mt19937_64 rng(29);
    std::vector<PolySeries> fixtures;
    for (std::size_t n = 1; n <= 3; ++n) fixtures.push_back(identity_part(n, 2));
    fixtures.push_back(extremal_growth_map(1, 1.0, 1).h());
    fixtures.push_back(extremal_growth_map(1, 1.0, -1).h());
    fixtures.push_back(extremal_sharpness_map(1, 3, 1.0, SharpnessPart::Holomorphic).h());
    fixtures.push_back(series_from(2, 2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{1, 1}, 0.25}}));
    for (int i = 0; i < 6; ++i) fixtures.push_back(test::random_certified_map(2, 4, 1.0, rng, false).h());
    for (int i = 0; i < 3; ++i) fixtures.push_back(test::random_certified_map(3, 3, 1.0, rng, false).h());
    double worst = 0.0;
    for (const auto& phi : fixtures) {
        c.require(certified_upper_bound(phi) <= 1.0 + 1e-12, "fixture not certified");
        const auto rep = schwarz_check(phi, 1.0);
        c.require(rep.holds == Holds::Pass, "schwarz_check did not pass");
        for (const auto& row : rep.details) worst = std::max(worst, row.attained);
    }
    double eq = 0.0;
    for (double M : {0.5, 1.0, 2.0}) {
        const auto phi = series_from(1, 2, {{{1}, 1.0}, {{2}, M / 2}});
        for (int k = 1; k <= 64; ++k) {
            const ComplexPoint z{std::polar(0.99 * k / 64.0, 0.37 * k)};
            const cplx omega = z[0] * evaluate(second_partial(phi, 0, 0), z) / M;
            eq = std::max(eq, std::abs(std::abs(omega) - std::abs(z[0])));
        }
        const auto rep = schwarz_check(phi, M);
        c.require(rep.holds == Holds::Pass, "equality case did not pass");
        for (const auto& row : rep.details)
            if (row.label.find("omega") != std::string::npos) eq = std::max(eq, std::abs(row.attained - 1.0));
    }
    c.require(eq <= 1e-12, "equality case |omega| != |z|");
    return c.done(std::to_string(fixtures.size()) + " fixtures" + fmt(", max ratio %.12g", worst) +
                  fmt(", equality error %.3g", eq));
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all{
        {1, "orthogonality self-test", 1.0, orthogonality},
        {2, "DFT round trip", 10.0, dft_round_trip},
        {3, "sharpness fixture n=1", 0.0, sharpness_n1},
        {4, "sharpness gap audit n=2", 0.0, sharpness_gap_n2},
        {5, "majorant implies membership", 30.0, majorant_implies_membership},
        {6, "epsilon family forward invariant", 60.0, epsilon_forward},
        {7, "derivative band + injectivity", 60.0, band_and_injectivity},
        {8, "growth envelope n=1", 0.0, growth_n1},
        {9, "Noshiro-Warschawski linkage", 0.0, noshiro_linkage},
        {10, "stable univalence biconditional", 0.0, stable_biconditional},
        {11, "convex combination closure", 0.0, convex_closure},
        {12, "Schwarz-lemma check", 0.0, schwarz},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& cr : all) {
        if (!selected.empty() && !selected.count(cr.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = cr.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (cr.budget_seconds > 0.0 && secs > cr.budget_seconds) {
            out.pass = false;
            out.detail += fmt("; runtime %.2f s over budget %.0f s", secs, cr.budget_seconds);
        }
        failures += !out.pass;
        std::printf("[%s] %2d %-34s %6.2fs  %s\n", out.pass ? "PASS" : "FAIL", cr.id, cr.name, secs,
                    out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d criteria failed\n", failures);
    return failures ? 1 : 0;
}
