// phm: command-line reports for pluriharmonic maps on the unit polydisk.
//
// Exit codes: 0 on PASS / CERTIFIED_MEMBER / LIKELY_MEMBER, 1 on FAIL /
// NOT_MEMBER / INCONCLUSIVE, 2 on usage or map-spec errors.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "phm/errors.hpp"
#include "phm/io.hpp"
#include "phm/phm.hpp"

namespace {

using namespace phm;
using phm::io::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string map_path;
    double M = 1.0;
    double radius = 0.999;
    std::size_t angles = 0; // 0: default for n
    std::optional<unsigned> m_max;
    std::size_t lambdas = 16;
    std::optional<std::size_t> samples;
    std::uint64_t seed = 1;
    bool json = false;

    // selftest / extremal
    std::size_t n = 2;
    unsigned nu_max = 6;
    std::string kind = "sharpness";
    unsigned m = 2;
    std::string part = "h";
    int sign = 1;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string point_text(const ComplexPoint& z) {
    std::string out = "(";
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (j) out += ", ";
        out += num(std::abs(z[j])) + "*exp(i*" + num(std::arg(z[j])) + ")";
    }
    return out + ")";
}

void print_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

void print_report(const CriterionReport& rep) {
    std::cout << rep.name << ": " << to_string(rep.holds) << "\n";
    for (const auto& row : rep.details) {
        std::printf("  %-32s attained %-20s bound %-20s ratio %s\n", row.label.c_str(),
                    num(row.attained).c_str(), num(row.bound).c_str(), num(row.ratio()).c_str());
    }
    if (rep.witness) {
        std::cout << "  witness:";
        if (rep.witness->point) std::cout << " z = " << point_text(*rep.witness->point);
        for (const auto& [k, v] : rep.witness->values) std::cout << " " << k << "=" << num(v);
        std::cout << "\n";
    }
    for (const auto& note : rep.notes) std::cout << "  note: " << note << "\n";
    std::cout.flush();
}

int holds_exit(Holds h) { return h == Holds::Pass ? kExitOk : kExitFail; }

TorusGrid grid_for(const PluriharmonicMap& f, const Options& opt) {
    return TorusGrid(f.dim(), opt.radius, opt.angles ? opt.angles : default_angles(f.dim()));
}

int cmd_check(const Options& opt) {
    const auto f = io::load_map_spec(opt.map_path);
    const auto rep = membership(f, opt.M, grid_for(f, opt));
    if (opt.json) {
        print_json(io::to_json(rep));
    } else {
        std::cout << "map: n=" << f.dim() << " D=" << f.degree_cap() << "\n"
                  << "M: " << num(rep.M) << "\n"
                  << "normalized: " << (rep.normalized ? "yes" : "no") << "\n"
                  << "sampled sup: " << num(rep.sampled_sup) << "\n"
                  << "certified upper: " << num(rep.certified_upper) << "\n"
                  << "margin: " << num(rep.margin) << "\n"
                  << "witness: " << point_text(rep.witness) << "\n"
                  << "verdict: " << to_string(rep.verdict) << "\n";
    }
    return rep.verdict == MembershipVerdict::NotMember ? kExitFail : kExitOk;
}

int cmd_audit(const Options& opt) {
    const auto f = io::load_map_spec(opt.map_path);
    const unsigned m_max = opt.m_max.value_or(f.degree_cap());
    const auto audit = coefficient_audit(f, opt.M, m_max);
    const auto sufficient = sufficient_condition(f, opt.M);
    if (opt.json) {
        print_json({{"coefficient_audit", io::to_json(audit)},
                    {"sufficient_condition", io::to_json(sufficient)}});
    } else {
        print_report(audit);
        print_report(sufficient);
    }
    return holds_exit(audit.holds);
}

std::vector<ComplexPoint> growth_samples(std::size_t n, std::uint64_t seed) {
    auto pts = default_polydisk_sample(n, seed);
    // Real diagonal points, where the extremal maps attain the envelope.
    for (int k = 1; k <= 50; ++k) {
        const double r = 0.99 * k / 50.0;
        pts.emplace_back(std::vector<cplx>(n, cplx{r, 0.0}));
        pts.emplace_back(std::vector<cplx>(n, cplx{-r, 0.0}));
    }
    return pts;
}

int cmd_growth(const Options& opt) {
    const auto f = io::load_map_spec(opt.map_path);
    const auto rep = growth_check(f, opt.M, growth_samples(f.dim(), opt.seed), grid_for(f, opt));
    if (opt.json)
        print_json(io::to_json(rep));
    else
        print_report(rep);
    return holds_exit(rep.holds);
}

int cmd_univalence(const Options& opt) {
    const auto f = io::load_map_spec(opt.map_path);
    const auto points = default_polydisk_sample(f.dim(), opt.seed);
    const auto lambdas = unimodular_sample(opt.lambdas);
    const auto scan = stable_scan(f, lambdas, points);
    const auto nonvanishing = local_nonvanishing(f, points);
    if (opt.json) {
        print_json({{"points", points.size()},
                    {"stable_scan", io::to_json(scan)},
                    {"local_nonvanishing", io::to_json(nonvanishing)}});
    } else {
        std::cout << "points: " << points.size() << "\n";
        std::printf("  %-16s %-14s %-20s %-14s %s\n", "arg(lambda)", "f_lambda", "min gap", "F_eps",
                    "min gap");
        for (std::size_t i = 0; i < scan.lambdas.size(); ++i) {
            const auto& p = scan.pluriharmonic[i];
            const auto& h = scan.holomorphic[i];
            std::printf("  %-16s %-14s %-20s %-14s %s\n", num(std::arg(scan.lambdas[i])).c_str(),
                        std::string(to_string(p.status)).c_str(), num(p.min_image_gap).c_str(),
                        std::string(to_string(h.status)).c_str(), num(h.min_image_gap).c_str());
        }
        for (std::size_t i = 0; i < scan.lambdas.size(); ++i) {
            if (const auto& pair = scan.pluriharmonic[i].pair) {
                std::cout << "first f_lambda collision: arg(lambda)=" << num(std::arg(scan.lambdas[i]))
                          << " z=" << point_text(pair->z) << " w=" << point_text(pair->w)
                          << " gap=" << num(pair->image_gap) << "\n";
                break;
            }
        }
        std::cout << "stable pluriharmonic: " << (scan.stable_pluriharmonic() ? "yes" : "no") << "\n"
                  << "stable holomorphic: " << (scan.stable_holomorphic() ? "yes" : "no") << "\n"
                  << "biconditional on sample: " << (scan.biconditional_holds() ? "holds" : "violated")
                  << "\n";
        print_report(nonvanishing);
    }
    return scan.stable_pluriharmonic() ? kExitOk : kExitFail;
}

int cmd_extract(const Options& opt) {
    const auto f = io::load_map_spec(opt.map_path);
    const unsigned m_max = opt.m_max.value_or(f.degree_cap());
    const std::size_t N = opt.samples.value_or(2 * (static_cast<std::size_t>(m_max) + 1));
    const auto th = dft_coefficients(f.h(), opt.radius, N, m_max);
    const auto tg = dft_coefficients(f.g(), opt.radius, N, m_max);
    double max_dev = 0.0;
    for (const auto& t : th) max_dev = std::max(max_dev, std::abs(t.coeff - f.h().coeff(t.alpha)));
    for (const auto& t : tg) max_dev = std::max(max_dev, std::abs(t.coeff - f.g().coeff(t.alpha)));
    const bool ok = m_max < f.degree_cap() || max_dev <= tol::kSampled;
    if (opt.json) {
        print_json({{"radius", opt.radius},
                    {"samples_per_dim", N},
                    {"m_max", m_max},
                    {"h", io::to_json(th)},
                    {"g", io::to_json(tg)},
                    {"max_deviation", max_dev}});
    } else {
        std::cout << "radius: " << num(opt.radius) << "  samples/dim: " << N << "  m_max: " << m_max
                  << "\n";
        for (const auto* part : {&th, &tg}) {
            std::cout << (part == &th ? "h" : "g") << ":\n";
            std::printf("  %-16s %-22s %-22s %s\n", "alpha", "re", "im", "|value|");
            for (const auto& t : *part) {
                std::printf("  %-16s %-22s %-22s %s\n", t.alpha.to_string().c_str(),
                            num(t.coeff.real()).c_str(), num(t.coeff.imag()).c_str(),
                            num(std::abs(t.coeff)).c_str());
            }
        }
        std::cout << "max deviation from stored coefficients: " << num(max_dev) << "\n";
    }
    return ok ? kExitOk : kExitFail;
}

int cmd_selftest(const Options& opt) {
    const std::size_t N = opt.samples.value_or(16);
    const auto rep = orthogonality_selftest(opt.n, opt.nu_max, N);
    if (opt.json) {
        print_json(io::to_json(rep));
    } else {
        std::cout << "n: " << rep.n << "  nu_max: " << rep.nu_max << "  samples/dim: " << N << "\n"
                  << "frequencies checked: " << rep.frequencies_checked << "\n"
                  << "average at nu=0: " << num(rep.zero_frequency_average.real()) << " + "
                  << num(rep.zero_frequency_average.imag()) << "i\n"
                  << "max |average| at nu!=0: " << num(rep.max_nonzero_modulus) << "\n"
                  << "result: " << (rep.passed ? "PASS" : "FAIL") << "\n";
    }
    return rep.passed ? kExitOk : kExitFail;
}

// One row per criterion; holomorphic-only checks are skipped when g != 0.
int cmd_suite(const Options& opt) {
    const auto f = io::load_map_spec(opt.map_path);
    const std::size_t n = f.dim();
    const auto grid = grid_for(f, opt);
    const auto points = default_polydisk_sample(n, opt.seed);
    const auto member = membership(f, opt.M, grid);

    std::vector<CriterionReport> rows;
    rows.push_back(sufficient_condition(f, opt.M));
    if (f.degree_cap() >= 2) rows.push_back(coefficient_audit(f, opt.M, f.degree_cap()));
    rows.push_back(noshiro_warschawski(f, 0.0, points));
    rows.push_back(epsilon_family_check(f, opt.M, unimodular_sample(opt.lambdas), grid));
    rows.push_back(growth_check(f, opt.M, growth_samples(n, opt.seed), grid));
    rows.push_back(local_nonvanishing(f, points));
    if (f.g().is_zero()) {
        rows.push_back(derivative_band(f.h(), opt.M, points));
        rows.push_back(schwarz_check(f.h(), opt.M));
    }

    bool failed = member.verdict == MembershipVerdict::NotMember;
    for (const auto& r : rows) failed = failed || r.holds == Holds::Fail;
    if (opt.json) {
        json doc = {{"membership", io::to_json(member)}, {"criteria", json::array()}};
        for (const auto& r : rows) doc["criteria"].push_back(io::to_json(r));
        print_json(doc);
    } else {
        std::printf("%-24s %s\n", "membership", std::string(to_string(member.verdict)).c_str());
        for (const auto& r : rows) {
            if (r.notes.empty())
                std::printf("%-24s %s\n", r.name.c_str(), std::string(to_string(r.holds)).c_str());
            else
                std::printf("%-24s %-14s %s\n", r.name.c_str(), std::string(to_string(r.holds)).c_str(),
                            r.notes.front().c_str());
        }
    }
    return failed ? kExitFail : kExitOk;
}

int cmd_extremal(const Options& opt) {
    std::optional<PluriharmonicMap> f;
    if (opt.kind == "sharpness") {
        if (opt.part != "h" && opt.part != "g") throw UsageError("--part must be h or g");
        f = extremal_sharpness_map(opt.n, opt.m, opt.M,
                                   opt.part == "h" ? SharpnessPart::Holomorphic
                                                   : SharpnessPart::Antiholomorphic);
    } else if (opt.kind == "growth") {
        f = extremal_growth_map(opt.n, opt.M, opt.sign);
    } else {
        throw UsageError("--kind must be sharpness or growth");
    }
    std::cout << io::dump_map_spec(*f);
    return kExitOk;
}

void add_map_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--map", opt.map_path, "map-spec JSON file")->required();
    cmd->add_option("--M", opt.M, "class bound M > 0")->capture_default_str();
    cmd->add_flag("--json", opt.json, "emit JSON instead of text");
}

void add_grid_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--radius", opt.radius, "torus radius in (0, 1)")->capture_default_str();
    cmd->add_option("--angles", opt.angles, "angles per axis (default depends on n)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical checks for pluriharmonic maps f = h + conj(g) on the unit polydisk"};
    app.require_subcommand(1);
    Options opt;

    auto* check = app.add_subcommand("check", "membership verdict for the class at bound M");
    add_map_options(check, opt);
    add_grid_options(check, opt);

    auto* audit = app.add_subcommand("audit", "per-degree coefficient audit and majorant test");
    add_map_options(audit, opt);
    audit->add_option("--mmax", opt.m_max, "highest degree to audit (default: degree cap)");

    auto* growth = app.add_subcommand("growth", "two-sided growth envelope on interior samples");
    add_map_options(growth, opt);
    add_grid_options(growth, opt);
    growth->add_option("--seed", opt.seed, "seed for quasi-random points")->capture_default_str();

    auto* univalence = app.add_subcommand("univalence", "stable injectivity scan over rotations");
    add_map_options(univalence, opt);
    univalence->add_option("--lambdas", opt.lambdas, "equally spaced rotations")->capture_default_str();
    univalence->add_option("--seed", opt.seed, "seed for quasi-random points")->capture_default_str();

    auto* extract = app.add_subcommand("extract", "coefficient recovery from torus samples");
    add_map_options(extract, opt);
    extract->add_option("--radius", opt.radius, "torus radius in (0, 1)")->capture_default_str();
    extract->add_option("--mmax", opt.m_max, "highest degree recovered (default: degree cap)");
    extract->add_option("--samples", opt.samples, "samples per axis (default 2*(mmax+1))");

    auto* suite = app.add_subcommand("suite", "criterion-to-verdict matrix for one map");
    add_map_options(suite, opt);
    add_grid_options(suite, opt);
    suite->add_option("--lambdas", opt.lambdas, "equally spaced rotations")->capture_default_str();
    suite->add_option("--seed", opt.seed, "seed for quasi-random points")->capture_default_str();

    auto* selftest = app.add_subcommand("selftest", "discrete orthogonality of torus characters");
    selftest->add_option("--n", opt.n, "dimension")->capture_default_str();
    selftest->add_option("--numax", opt.nu_max, "largest |nu_j|")->capture_default_str();
    selftest->add_option("--samples", opt.samples, "samples per axis (default 16)");
    selftest->add_flag("--json", opt.json, "emit JSON instead of text");

    auto* extremal = app.add_subcommand("extremal", "write an extremal map-spec to stdout");
    extremal->add_option("--kind", opt.kind, "sharpness or growth")->capture_default_str();
    extremal->add_option("--n", opt.n, "dimension")->capture_default_str();
    extremal->add_option("--m", opt.m, "degree of the sharpness tail")->capture_default_str();
    extremal->add_option("--M", opt.M, "class bound M")->capture_default_str();
    extremal->add_option("--part", opt.part, "h or g (sharpness tail)")->capture_default_str();
    extremal->add_option("--sign", opt.sign, "+1 or -1 (growth)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*check) return cmd_check(opt);
        if (*audit) return cmd_audit(opt);
        if (*growth) return cmd_growth(opt);
        if (*univalence) return cmd_univalence(opt);
        if (*extract) return cmd_extract(opt);
        if (*suite) return cmd_suite(opt);
        if (*selftest) return cmd_selftest(opt);
        if (*extremal) return cmd_extremal(opt);
    } catch (const UsageError& e) {
        std::cerr << "phm: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DegreeCapError& e) {
        std::cerr << "phm: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
