#include "hadamard6/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hadamard6/errors.hpp"

namespace hadamard6 {

HadamardReport is_hadamard(const Mat6& h, const Tolerance& tol) {
    HadamardReport rep;
    rep.unimodular_error = unimodularity_error(h);
    rep.unitarity_error = unitarity_residual(h);
    rep.is_hadamard =
        rep.unimodular_error < tol.eps_unimodular && rep.unitarity_error < tol.eps_unitarity;
    return rep;
}

Mat6 dephase(const Mat6& h) {
    for (int i = 0; i < 6; ++i)
        if (std::abs(h(i, 0)) < 1e-150 || std::abs(h(0, i)) < 1e-150)
            throw Error(ErrorKind::ZeroEntry, "first row/column contains a zero entry");
    Mat6 r;
    const Complex h00 = h(0, 0);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            // num and den are the same expression on the first row/column,
            // so those entries come out exactly 1.
            const Complex num = h(i, j) * h00;
            const Complex den = h(i, 0) * h(0, j);
            r(i, j) = num / den;
        }
    return r;
}

bool submatrix_is_hadamard(const Mat6& h, int i, int l, int j, int k, const Tolerance& tol) {
    const Complex a = h(i, j), b = h(i, k), c = h(l, j), d = h(l, k);
    for (const Complex& x : {a, b, c, d})
        if (std::abs(std::abs(x) - 1.0) >= tol.eps_unimodular) return false;
    return std::abs(a * std::conj(c) + b * std::conj(d)) < tol.eps_unitarity;
}

namespace {

void require_hadamard(const Mat6& h, const Tolerance& tol, const char* op) {
    if (!is_hadamard(h, tol).is_hadamard)
        throw Error(ErrorKind::NotHadamard, std::string(op) + " requires a Hadamard matrix");
}

}  // namespace

bool h2_reducible(const Mat6& h, const Tolerance& tol) {
    require_hadamard(h, tol, "h2_reducible");
    for (int i = 0; i < 6; ++i)
        for (int l = i + 1; l < 6; ++l)
            for (int j = 0; j < 6; ++j)
                for (int k = j + 1; k < 6; ++k)
                    if (submatrix_is_hadamard(h, i, l, j, k, tol)) return true;
    return false;
}

bool dephased_has_minus_one(const Mat6& h, const Tolerance& tol) {
    const Mat6 d = dephase(h);
    for (const auto& x : d.e)
        if (std::abs(x + 1.0) < tol.eps_unimodular) return true;
    return false;
}

Fingerprint fingerprint(const Mat6& h, const Tolerance& tol) {
    require_hadamard(h, tol, "fingerprint");
    Fingerprint fp;
    fp.keys.reserve(225);
    for (int i = 0; i < 6; ++i)
        for (int k = i + 1; k < 6; ++k)
            for (int j = 0; j < 6; ++j)
                for (int l = j + 1; l < 6; ++l) {
                    const Complex prod =
                        h(i, j) * h(k, l) * std::conj(h(i, l)) * std::conj(h(k, j));
                    // fold to [0, pi]: row/column pair reversal conjugates
                    // the product, so only |arg| is permutation-invariant
                    const double phase = std::abs(std::arg(prod));
                    fp.keys.push_back(std::llround(phase * 1e6));
                }
    std::sort(fp.keys.begin(), fp.keys.end());
    return fp;
}

namespace {

std::vector<Perm6> all_permutations() {
    std::vector<Perm6> perms;
    perms.reserve(720);
    Perm6 p;
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return perms;
}

}  // namespace

EquivalenceReport are_equivalent(const Mat6& h1, const Mat6& h2, const Tolerance& tol,
                                 const EquivalenceOptions& opts) {
    require_hadamard(h1, tol, "are_equivalent");
    require_hadamard(h2, tol, "are_equivalent");

    EquivalenceReport rep;
    if (opts.use_fingerprint && !(fingerprint(h1, tol) == fingerprint(h2, tol))) {
        rep.max_entry_error = std::numeric_limits<double>::infinity();
        return rep;
    }

    const Mat6 target = dephase(h2);
    static const std::vector<Perm6> perms = all_permutations();

    double best_partial = std::numeric_limits<double>::infinity();
    for (const Perm6& rp : perms) {
        for (const Perm6& cp : perms) {
            const Complex g00 = h1(rp[0], cp[0]);
            double worst = 0.0;
            bool match = true;
            for (int i = 1; i < 6 && match; ++i) {
                const Complex gi0 = h1(rp[static_cast<std::size_t>(i)], cp[0]);
                for (int j = 1; j < 6; ++j) {
                    const Complex g0j = h1(rp[0], cp[static_cast<std::size_t>(j)]);
                    const Complex gij =
                        h1(rp[static_cast<std::size_t>(i)], cp[static_cast<std::size_t>(j)]);
                    const double err = std::abs(gij * g00 / (gi0 * g0j) - target(i, j));
                    worst = std::max(worst, err);
                    if (err > opts.entry_tol) {
                        match = false;
                        break;
                    }
                }
            }
            if (match) {
                rep.equivalent = true;
                rep.row_perm = rp;
                rep.col_perm = cp;
                rep.max_entry_error = worst;
                return rep;
            }
            best_partial = std::min(best_partial, worst);
        }
    }
    rep.max_entry_error = best_partial;  // lower bound on the residual distance
    return rep;
}

}  // namespace hadamard6
