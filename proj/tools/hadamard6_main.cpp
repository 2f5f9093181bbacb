// hadamard6: generate, verify and compare order-6 complex Hadamard matrices
// from the three-parameter block-reducible family.
//
// Exit codes: 0 success / equivalent / Hadamard; 1 negative verdict;
// 2 regime or usage error; 3 verification failure; 4 parse error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "hadamard6/errors.hpp"
#include "hadamard6/family.hpp"
#include "hadamard6/known_families.hpp"
#include "hadamard6/mat_core.hpp"
#include "hadamard6/matrix_io.hpp"
#include "hadamard6/moebius.hpp"
#include "hadamard6/verify.hpp"

namespace h6 = hadamard6;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr int kExitParse = 4;

int exit_code_for(const h6::Error& e) {
    switch (e.kind()) {
        case h6::ErrorKind::OutOfRange:
        case h6::ErrorKind::RegimeMismatch:
        case h6::ErrorKind::ExceptionalDirection:
            return kExitUsage;
        case h6::ErrorKind::ParseError:
            return kExitParse;
        default:
            return kExitVerification;
    }
}

std::string fmt(double v) { return h6::format_double(v); }

std::string cycle_notation(const h6::Perm6& p) {
    std::string out;
    std::array<bool, 6> seen{};
    for (int start = 0; start < 6; ++start) {
        if (seen[start] || p[start] == start) continue;
        std::string cycle = "(" + std::to_string(start);
        seen[start] = true;
        for (int j = p[start]; j != start; j = p[j]) {
            seen[j] = true;
            cycle += ' ' + std::to_string(j);
        }
        out += cycle + ")";
    }
    return out.empty() ? "id" : out;
}

struct AngleArgs {
    bool degrees = false;
    double to_rad(double v) const { return degrees ? v * std::numbers::pi / 180.0 : v; }
};

h6::Tolerance tolerance_from(double tol_unimod, double tol_unit) {
    if (!(tol_unimod > 0.0) || !(tol_unit >= tol_unimod))
        throw h6::Error(h6::ErrorKind::OutOfRange,
                        "tolerances must satisfy 0 < tol-unimod <= tol-unit");
    h6::Tolerance tol;
    tol.eps_unimodular = tol_unimod;
    tol.eps_unitarity = tol_unit;
    return tol;
}

void report_matrix(const h6::Mat6& h, const h6::Tolerance& tol) {
    const h6::HadamardReport rep = h6::is_hadamard(h, tol);
    std::cout << "unimodular_error: " << fmt(rep.unimodular_error) << '\n'
              << "unitarity_error: " << fmt(rep.unitarity_error) << '\n';
}

int run_gen(double theta, double phi, double psi1, const std::string& signs,
            const std::string& out, const h6::Tolerance& tol) {
    if (signs.size() != 4 || signs.find_first_not_of("01") != std::string::npos)
        throw h6::Error(h6::ErrorKind::OutOfRange, "--signs expects four 0/1 flags, e.g. 0101");
    h6::SignChoice sc;
    sc.s1 = signs[0] == '1';
    sc.s2 = signs[1] == '1';
    sc.s3 = signs[2] == '1';
    sc.s4 = signs[3] == '1';

    const h6::LambdaParams p(theta, phi);
    const h6::RegimeTag tag = h6::classify_regime(p, h6::kNearDegenerateBand);
    std::cout << "regime: " << h6::to_string(tag) << '\n';

    h6::Mat6 h;
    switch (tag) {
        case h6::RegimeTag::Generic:
            h = h6::build_matrix(h6::FamilyPoint(theta, phi, psi1), sc, tol);
            break;
        case h6::RegimeTag::DegenerateA:
        case h6::RegimeTag::DegenerateB:
            // psi1 supplies the free parameter of the single-degenerate path
            h = h6::build_degenerate(p, h6::UnimodularScalar::from_phase(psi1), h6::Anchor::Z1,
                                     tol);
            break;
        case h6::RegimeTag::DoublyDegenerateTheta0:
            throw h6::Error(h6::ErrorKind::RegimeMismatch,
                            "both Moebius maps degenerate at theta = 0; use `gen-limit theta0`");
        case h6::RegimeTag::DoublyDegenerateHalfPi:
            throw h6::Error(
                h6::ErrorKind::RegimeMismatch,
                "both Moebius maps degenerate at theta = pi/2, phi = 0; use `gen-limit halfpi`");
    }

    report_matrix(h, tol);
    if (!out.empty()) {
        h6::write_mat6_file(out, h,
                            {"theta " + fmt(theta) + " phi " + fmt(phi) + " psi1 " + fmt(psi1) +
                             " signs " + signs});
        std::cout << "wrote: " << out << '\n';
    }
    return kExitOk;
}

int run_verify(const std::string& path, const h6::Tolerance& tol) {
    const h6::Mat6 h = h6::read_mat6_file(path);
    const h6::HadamardReport rep = h6::is_hadamard(h, tol);
    std::cout << "unimodular_error: " << fmt(rep.unimodular_error) << '\n'
              << "unitarity_error: " << fmt(rep.unitarity_error) << '\n'
              << "hadamard: " << (rep.is_hadamard ? "yes" : "no") << '\n';
    if (!rep.is_hadamard) return kExitNegative;
    std::cout << "h2_reducible: " << (h6::h2_reducible(h, tol) ? "yes" : "no") << '\n';
    return kExitOk;
}

int run_equiv(const std::string& path_a, const std::string& path_b, const h6::Tolerance& tol) {
    const h6::Mat6 a = h6::read_mat6_file(path_a);
    const h6::Mat6 b = h6::read_mat6_file(path_b);
    const h6::EquivalenceReport rep = h6::are_equivalent(a, b, tol);
    std::cout << "equivalent: " << (rep.equivalent ? "yes" : "no") << '\n';
    if (!rep.equivalent) return kExitNegative;
    std::cout << "row_perm: " << cycle_notation(*rep.row_perm) << '\n'
              << "col_perm: " << cycle_notation(*rep.col_perm) << '\n'
              << "max_entry_error: " << fmt(rep.max_entry_error) << '\n';
    return kExitOk;
}

struct ScanRecord {
    double theta, phi, psi1;
    h6::RegimeTag tag;
    bool built = false;
    bool passed = false;
    double unimod_err = 0.0;
    double unit_err = 0.0;
    bool reducible = false;
};

int run_scan(int theta_steps, int phi_steps, int psi_steps, double margin, const std::string& out,
             const h6::Tolerance& tol) {
    if (theta_steps < 1 || phi_steps < 1 || psi_steps < 1)
        throw h6::Error(h6::ErrorKind::OutOfRange, "step counts must be >= 1");
    if (margin < 0.0) throw h6::Error(h6::ErrorKind::OutOfRange, "margin must be >= 0");

    constexpr double kPi = std::numbers::pi;
    auto grid = [&](int steps, int i) {
        // margin = 0: half-open [0, pi); margin > 0: closed [margin, pi - margin]
        if (margin == 0.0) return i * kPi / steps;
        if (steps == 1) return margin;
        return margin + i * (kPi - 2.0 * margin) / (steps - 1);
    };

    std::vector<ScanRecord> records(
        static_cast<std::size_t>(theta_steps) * phi_steps * psi_steps);

    auto fill_slice = [&](int ti) {
        const double theta = grid(theta_steps, ti);
        for (int pi_ = 0; pi_ < phi_steps; ++pi_) {
            const double phi = grid(phi_steps, pi_);
            const h6::LambdaParams p(theta, phi);
            const h6::RegimeTag tag = h6::classify_regime(p, h6::kNearDegenerateBand);
            const double curve_margin = std::min(std::abs(h6::curve_a(p)), std::abs(h6::curve_b(p)));
            for (int si = 0; si < psi_steps; ++si) {
                const double psi1 = grid(psi_steps, si);
                ScanRecord rec{theta, phi, psi1, tag};
                if (tag == h6::RegimeTag::Generic && curve_margin >= margin) {
                    rec.built = true;
                    try {
                        const h6::Mat6 h =
                            h6::build_matrix(h6::FamilyPoint(theta, phi, psi1), {}, tol);
                        const h6::HadamardReport rep = h6::is_hadamard(h, tol);
                        rec.unimod_err = rep.unimodular_error;
                        rec.unit_err = rep.unitarity_error;
                        rec.passed = rep.is_hadamard;
                        rec.reducible = rec.passed && h6::h2_reducible(h, tol);
                    } catch (const h6::Error&) {
                        rec.passed = false;
                    }
                }
                const std::size_t idx =
                    (static_cast<std::size_t>(ti) * phi_steps + pi_) * psi_steps + si;
                records[idx] = rec;
            }
        }
    };

    // data-parallel over theta slices; records land in deterministic grid order
    std::vector<std::future<void>> futures;
    futures.reserve(static_cast<std::size_t>(theta_steps));
    for (int ti = 0; ti < theta_steps; ++ti)
        futures.push_back(std::async(std::launch::async, fill_slice, ti));
    for (auto& f : futures) f.get();

    std::ofstream os(out);
    if (!os) throw h6::Error(h6::ErrorKind::ParseError, "cannot open '" + out + "' for writing");
    os << "theta\tphi\tpsi1\tregime\tunimod_err\tunit_err\treducible\n";
    std::size_t built = 0, skipped = 0, failed = 0;
    double max_unimod = 0.0, max_unit = 0.0;
    for (const ScanRecord& r : records) {
        os << fmt(r.theta) << '\t' << fmt(r.phi) << '\t' << fmt(r.psi1) << '\t'
           << h6::to_string(r.tag) << '\t';
        if (!r.built) {
            ++skipped;
            os << "-\t-\t-\n";
            continue;
        }
        ++built;
        if (!r.passed) ++failed;
        max_unimod = std::max(max_unimod, r.unimod_err);
        max_unit = std::max(max_unit, r.unit_err);
        os << fmt(r.unimod_err) << '\t' << fmt(r.unit_err) << '\t' << (r.reducible ? 1 : 0)
           << '\n';
    }
    os << "# summary built " << built << " skipped " << skipped << " failed " << failed
       << " max_unimod_err " << fmt(max_unimod) << " max_unit_err " << fmt(max_unit) << '\n';
    std::cout << "scanned " << records.size() << " points: " << built << " built, " << skipped
              << " skipped, " << failed << " failed\n"
              << "max unimodular_error: " << fmt(max_unimod) << '\n'
              << "max unitarity_error: " << fmt(max_unit) << '\n'
              << "wrote: " << out << '\n';
    return failed == 0 ? kExitOk : kExitVerification;
}

int run_gen_limit(const std::string& kind, double phi, double z_phase, const std::string& out,
                  const h6::Tolerance& tol) {
    h6::Mat6 h;
    std::string family;
    if (kind == "theta0") {
        h = h6::build_theta0_limit(phi, h6::UnimodularScalar::from_phase(z_phase), tol);
        family = "F6(2) (Fourier family)";
    } else if (kind == "halfpi") {
        h = h6::build_halfpi_limit(phi, h6::UnimodularScalar::from_phase(z_phase), tol);
        family = "(F6(2))^T (transposed Fourier family)";
    } else {
        throw h6::Error(h6::ErrorKind::OutOfRange, "kind must be theta0 or halfpi");
    }
    std::cout << "family: " << family << '\n';
    report_matrix(h, tol);
    if (!out.empty()) {
        h6::write_mat6_file(out, h,
                            {"limit " + kind + " phi " + fmt(phi) + " z " + fmt(z_phase)});
        std::cout << "wrote: " << out << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Order-6 complex Hadamard matrices: three-parameter family builder and tools"};
    app.require_subcommand(1);

    AngleArgs angles;
    double tol_unimod = 1e-10;
    double tol_unit = 1e-9;
    app.add_flag("--degrees", angles.degrees, "interpret angle arguments as degrees");
    app.add_option("--tol-unimod", tol_unimod, "unimodularity tolerance")->capture_default_str();
    app.add_option("--tol-unit", tol_unit, "unitarity tolerance")->capture_default_str();

    // gen
    auto* gen = app.add_subcommand("gen", "build a family member at (theta, phi, psi1)");
    double theta = 0, phi = 0, psi1 = 0;
    std::string signs = "0000", out;
    gen->add_option("--theta", theta, "theta in [0, pi)")->required();
    gen->add_option("--phi", phi, "phi in [0, pi)")->required();
    gen->add_option("--psi1", psi1, "psi1 in [0, pi); free-parameter phase")->required();
    gen->add_option("--signs", signs, "four 0/1 flags flipping z1..z4")->capture_default_str();
    gen->add_option("-o,--out", out, "output matrix file");

    // verify
    auto* verify = app.add_subcommand("verify", "check a matrix file for the Hadamard property");
    std::string vpath;
    verify->add_option("file", vpath, "matrix file")->required();

    // equiv
    auto* equiv = app.add_subcommand("equiv", "decide equivalence of two matrix files");
    std::string apath, bpath;
    equiv->add_option("a", apath, "first matrix file")->required();
    equiv->add_option("b", bpath, "second matrix file")->required();

    // scan
    auto* scan = app.add_subcommand("scan", "sweep a parameter grid and verify every member");
    int theta_steps = 12, phi_steps = 12, psi_steps = 12;
    double margin = 0.05;
    std::string scan_out = "scan.tsv";
    scan->add_option("--theta-steps", theta_steps)->capture_default_str();
    scan->add_option("--phi-steps", phi_steps)->capture_default_str();
    scan->add_option("--psi-steps", psi_steps)->capture_default_str();
    scan->add_option("--margin", margin, "distance kept from the degeneracy curves")
        ->capture_default_str();
    scan->add_option("-o,--out", scan_out, "output TSV path")->capture_default_str();

    // gen-limit
    auto* genlim = app.add_subcommand("gen-limit", "build a doubly-degenerate limit member");
    std::string kind;
    double lim_phi = 0, z_phase = 0;
    std::string lim_out;
    genlim->add_option("kind", kind, "theta0 or halfpi")->required();
    genlim->add_option("--phi", lim_phi, "direction angle")->required();
    genlim->add_option("--z", z_phase, "phase of the free z parameter")->capture_default_str();
    genlim->add_option("-o,--out", lim_out, "output matrix file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const h6::Tolerance tol = tolerance_from(tol_unimod, tol_unit);
        if (gen->parsed())
            return run_gen(angles.to_rad(theta), angles.to_rad(phi), angles.to_rad(psi1), signs,
                           out, tol);
        if (verify->parsed()) return run_verify(vpath, tol);
        if (equiv->parsed()) return run_equiv(apath, bpath, tol);
        if (scan->parsed())
            return run_scan(theta_steps, phi_steps, psi_steps, margin, scan_out, tol);
        if (genlim->parsed())
            return run_gen_limit(kind, angles.to_rad(lim_phi), angles.to_rad(z_phase), lim_out,
                                 tol);
    } catch (const h6::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerification;
    }
    return kExitUsage;
}
