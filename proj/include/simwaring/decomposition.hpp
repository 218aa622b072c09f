#pragma once

#include <algorithm>
#include <complex>
#include <thread>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "simwaring/apolar_scheme.hpp"
#include "simwaring/bigint.hpp"
#include "simwaring/collection.hpp"
#include "simwaring/errors.hpp"
#include "simwaring/monomial.hpp"

namespace simwaring {

/// Exponent tuples of total degree d over nvars variables, in descending
/// lexicographic order: the fixed basis order for coefficient vectors.
inline std::vector<std::vector<int>> degree_basis(int nvars, int degree) {
    if (nvars <= 0) throw std::invalid_argument("nvars must be positive");
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    std::vector<std::vector<int>> basis;
    std::vector<int> current(static_cast<std::size_t>(nvars), 0);
    auto recurse = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            current[static_cast<std::size_t>(var)] = remaining;
            basis.push_back(current);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, remaining - e);
        }
    };
    recurse(recurse, 0, degree);
    return basis;
}

/// Coefficient vector of (point . x)^d in the degree-d monomial basis: the
/// entry for exponents alpha is multinomial(d; alpha) * prod point_i^alpha_i.
/// Multinomials are computed exactly, then converted.
inline std::vector<std::complex<double>> expand_power(const std::vector<std::complex<double>>& point,
                                                      int degree) {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    const int nvars = static_cast<int>(point.size());
    const auto basis = degree_basis(nvars, degree);

    // pow_table[i][e] = point[i]^e
    std::vector<std::vector<std::complex<double>>> pow_table(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        pow_table[i].resize(static_cast<std::size_t>(degree) + 1);
        pow_table[i][0] = 1.0;
        for (int e = 1; e <= degree; ++e) pow_table[i][e] = pow_table[i][e - 1] * point[i];
    }

    std::vector<std::complex<double>> coeffs;
    coeffs.reserve(basis.size());
    for (const auto& alpha : basis) {
        std::complex<double> entry = multinomial(degree, alpha).convert_to<double>();
        for (std::size_t i = 0; i < point.size(); ++i)
            entry *= pow_table[i][static_cast<std::size_t>(alpha[i])];
        coeffs.push_back(entry);
    }
    return coeffs;
}

struct SolveOptions {
    double tol = 1e-8;
    int threads = 1;
};

/// Points, per-form degrees, per-form coefficients over the scheme's points,
/// and per-form relative residuals (max norm over monomial coefficients).
struct Decomposition {
    ApolarScheme scheme;
    std::vector<int> degrees;
    std::vector<std::vector<std::complex<double>>> coefficients; // per monomial, per point
    std::vector<double> residuals;
    BigInt claimed_rank;
    double tol = 1e-8;

    bool verified() const {
        return std::all_of(residuals.begin(), residuals.end(),
                           [this](double r) { return r <= tol; });
    }

    double max_residual() const {
        double worst = 0.0;
        for (double r : residuals) worst = std::max(worst, r);
        return worst;
    }
};

namespace detail {

inline std::size_t basis_index_of(const std::vector<std::vector<int>>& basis,
                                  const std::vector<int>& exponents) {
    const auto it = std::lower_bound(basis.begin(), basis.end(), exponents,
                                     [](const std::vector<int>& a, const std::vector<int>& b) {
                                         return a > b; // descending lex
                                     });
    if (it == basis.end() || *it != exponents)
        throw std::logic_error("exponent tuple missing from basis");
    return static_cast<std::size_t>(it - basis.begin());
}

/// Least-squares solve of sum_k lambda_k (p_k . x)^d = monomial, over the
/// chosen points. Returns (lambda, relative residual in max norm).
inline std::pair<Eigen::VectorXcd, double>
solve_single(const std::vector<std::vector<std::complex<double>>>& coords,
             const std::vector<std::size_t>& chosen, const Monomial& target, int degree) {
    const auto basis = degree_basis(target.nvars(), degree);
    const Eigen::Index rows = static_cast<Eigen::Index>(basis.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(chosen.size());

    Eigen::MatrixXcd system(rows, cols);
    for (Eigen::Index k = 0; k < cols; ++k) {
        const auto column = expand_power(coords[chosen[static_cast<std::size_t>(k)]], degree);
        for (Eigen::Index r = 0; r < rows; ++r) system(r, k) = column[static_cast<std::size_t>(r)];
    }

    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(rows);
    rhs(static_cast<Eigen::Index>(basis_index_of(basis, target.exponents()))) = 1.0;

    const Eigen::VectorXcd lambda = system.completeOrthogonalDecomposition().solve(rhs);
    const double residual = (system * lambda - rhs).cwiseAbs().maxCoeff();
    return {lambda, residual}; // rhs has max norm 1, so this is already relative
}

} // namespace detail

/// Solve for per-form coefficients over the scheme's points by complex least
/// squares. For each monomial the restricted system on its own point subset is
/// tried first, falling back to the full union when the residual misses the
/// tolerance. A decomposition whose residuals exceed the tolerance is returned
/// unverified, never silently accepted.
inline Decomposition solve_coefficients(const ApolarScheme& scheme, const Collection& coll,
                                        SolveOptions options = {}) {
    if (scheme.nvars != coll.nvars())
        throw std::invalid_argument("scheme and collection variable counts differ");

    Decomposition dec;
    dec.scheme = scheme;
    dec.tol = options.tol;
    dec.claimed_rank = BigInt(scheme.points.size());
    dec.degrees.resize(coll.size());
    dec.coefficients.assign(coll.size(), {});
    dec.residuals.assign(coll.size(), 0.0);

    const auto coords = materialize(scheme);
    std::vector<std::size_t> all_points(scheme.points.size());
    for (std::size_t k = 0; k < all_points.size(); ++k) all_points[k] = k;

    // The membership map only applies when the scheme was built for this
    // collection; otherwise every form is solved over the full union.
    const bool use_membership = scheme.membership.size() == coll.size();

    const auto solve_one = [&](std::size_t j) {
        const Monomial& target = coll[j];
        const int degree = target.degree();
        dec.degrees[j] = degree;

        const std::vector<std::size_t>& restricted =
            use_membership ? scheme.membership[j] : all_points;
        auto [lambda, residual] = detail::solve_single(coords, restricted, target, degree);
        if (residual > options.tol && restricted.size() < all_points.size()) {
            std::tie(lambda, residual) = detail::solve_single(coords, all_points, target, degree);
            dec.coefficients[j].assign(all_points.size(), {0.0, 0.0});
            for (std::size_t k = 0; k < all_points.size(); ++k)
                dec.coefficients[j][k] = lambda(static_cast<Eigen::Index>(k));
        } else {
            dec.coefficients[j].assign(all_points.size(), {0.0, 0.0});
            for (std::size_t k = 0; k < restricted.size(); ++k)
                dec.coefficients[j][restricted[k]] = lambda(static_cast<Eigen::Index>(k));
        }
        dec.residuals[j] = residual;
    };

    const int threads = std::max(1, options.threads);
    if (threads == 1 || coll.size() < 2) {
        for (std::size_t j = 0; j < coll.size(); ++j) solve_one(j);
    } else {
        std::vector<std::thread> pool;
        std::size_t next = 0;
        const std::size_t per_thread = (coll.size() + threads - 1) / threads;
        for (int t = 0; t < threads && next < coll.size(); ++t) {
            const std::size_t begin = next;
            const std::size_t end = std::min(coll.size(), begin + per_thread);
            next = end;
            pool.emplace_back([&, begin, end] {
                for (std::size_t j = begin; j < end; ++j) solve_one(j);
            });
        }
        for (auto& worker : pool) worker.join();
    }
    return dec;
}

/// Independent recheck: re-evaluate sum_k lambda_k (p_k . x)^d coefficient by
/// coefficient with its own power and multinomial computations (no reuse of
/// the solver's assembled system), and require the point count to match the
/// claimed rank.
inline bool verify_decomposition(const Decomposition& dec, const Collection& coll, double tol) {
    if (dec.coefficients.size() != coll.size()) return false;
    if (BigInt(dec.scheme.points.size()) != dec.claimed_rank) return false;

    std::vector<std::vector<std::complex<double>>> coords;
    coords.reserve(dec.scheme.points.size());
    for (const auto& point : dec.scheme.points) {
        std::vector<std::complex<double>> c;
        for (const auto& root : point) c.push_back(root.value());
        coords.push_back(std::move(c));
    }

    for (std::size_t j = 0; j < coll.size(); ++j) {
        const Monomial& target = coll[j];
        const int degree = dec.degrees[j];
        if (degree != target.degree()) return false;
        double worst = 0.0;
        for (const auto& alpha : degree_basis(coll.nvars(), degree)) {
            // multinomial via an incremental binomial product
            BigInt weight = 1;
            int remaining = degree;
            for (int part : alpha) {
                weight *= binomial(remaining, part);
                remaining -= part;
            }
            std::complex<double> total = 0.0;
            for (std::size_t k = 0; k < coords.size(); ++k) {
                std::complex<double> term = dec.coefficients[j][k];
                if (term == std::complex<double>(0.0, 0.0)) continue;
                for (int i = 0; i < coll.nvars(); ++i)
                    for (int e = 0; e < alpha[static_cast<std::size_t>(i)]; ++e)
                        term *= coords[k][static_cast<std::size_t>(i)];
                total += term;
            }
            total *= weight.convert_to<double>();
            const double expected = alpha == target.exponents() ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(total - expected));
        }
        if (worst > tol) return false;
    }
    return true;
}

} // namespace simwaring
