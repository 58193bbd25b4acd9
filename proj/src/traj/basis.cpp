#include "crowdnav/traj/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace crowdnav::traj {
namespace {

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

double bernstein(int n, int i, double u) {
    if (i < 0 || i > n) return 0.0;
    return binom(n, i) * std::pow(u, i) * std::pow(1.0 - u, n - i);
}

}  // namespace

PolyBasis build_basis(int degree, int n_p, double t_f, BasisFamily family) {
    if (degree < 3) throw std::invalid_argument("build_basis: degree must be >= 3");
    if (n_p < 2) throw std::invalid_argument("build_basis: n_p must be >= 2");
    if (t_f <= 0.0) throw std::invalid_argument("build_basis: t_f must be positive");

    PolyBasis b;
    b.family = family;
    b.degree = degree;
    b.n_p = n_p;
    b.t_f = t_f;
    const int nc = degree + 1;
    b.P.setZero(n_p, nc);
    b.Pdot.setZero(n_p, nc);
    b.Pddot.setZero(n_p, nc);

    for (int i = 0; i < n_p; ++i) {
        const double t = t_f * static_cast<double>(i) / (n_p - 1);
        if (family == BasisFamily::bernstein) {
            const double u = t / t_f;
            const int n = degree;
            for (int j = 0; j < nc; ++j) {
                b.P(i, j) = bernstein(n, j, u);
                b.Pdot(i, j) = n / t_f * (bernstein(n - 1, j - 1, u) - bernstein(n - 1, j, u));
                b.Pddot(i, j) = n * (n - 1.0) / (t_f * t_f) *
                                (bernstein(n - 2, j - 2, u) - 2.0 * bernstein(n - 2, j - 1, u) +
                                 bernstein(n - 2, j, u));
            }
        } else {
            for (int j = 0; j < nc; ++j) {
                b.P(i, j) = std::pow(t, j);
                b.Pdot(i, j) = j >= 1 ? j * std::pow(t, j - 1) : 0.0;
                b.Pddot(i, j) = j >= 2 ? j * (j - 1.0) * std::pow(t, j - 2) : 0.0;
            }
        }
    }

    b.W.setZero(2 * n_p, 2 * nc);
    b.W.topLeftCorner(n_p, nc) = b.P;
    b.W.bottomRightCorner(n_p, nc) = b.P;

    b.ones_coeff.setZero(nc);
    if (family == BasisFamily::bernstein) {
        b.ones_coeff.setOnes();
    } else {
        b.ones_coeff(0) = 1.0;
    }
    return b;
}

double basis_value(const PolyBasis& basis, int j, double t) {
    if (basis.family == BasisFamily::bernstein)
        return bernstein(basis.degree, j, t / basis.t_f);
    return std::pow(t, j);
}

SampledPath eval_path(const PolyBasis& basis, const Xi& xi) {
    if (xi.cx.size() != basis.n_coef() || xi.cy.size() != basis.n_coef())
        throw std::invalid_argument("eval_path: coefficient length mismatch");
    SampledPath p;
    p.x = basis.P * xi.cx;
    p.y = basis.P * xi.cy;
    p.xd = basis.Pdot * xi.cx;
    p.yd = basis.Pdot * xi.cy;
    p.xdd = basis.Pddot * xi.cx;
    p.ydd = basis.Pddot * xi.cy;
    p.dt = basis.dt();
    return p;
}

EqualityConstraint boundary_system(const PolyBasis& basis, const BoundaryCond& bc) {
    const int nc = basis.n_coef();
    struct Pin {
        const Eigen::MatrixXd* rows;
        int row_index;
        Eigen::Vector2d value;
    };
    std::vector<Pin> pins;
    const int last = basis.n_p - 1;
    if (bc.p0) pins.push_back({&basis.P, 0, *bc.p0});
    if (bc.v0) pins.push_back({&basis.Pdot, 0, *bc.v0});
    if (bc.a0) pins.push_back({&basis.Pddot, 0, *bc.a0});
    if (bc.pf) pins.push_back({&basis.P, last, *bc.pf});
    if (bc.vf) pins.push_back({&basis.Pdot, last, *bc.vf});
    if (bc.af) pins.push_back({&basis.Pddot, last, *bc.af});
    if (pins.empty()) throw std::invalid_argument("boundary_system: no pinned derivatives");

    EqualityConstraint eqc;
    const int m = static_cast<int>(pins.size()) * 2;
    eqc.A.setZero(m, 2 * nc);
    eqc.b.setZero(m);
    int r = 0;
    for (const Pin& pin : pins) {
        eqc.A.block(r, 0, 1, nc) = pin.rows->row(pin.row_index);
        eqc.b(r) = pin.value.x();
        ++r;
        eqc.A.block(r, nc, 1, nc) = pin.rows->row(pin.row_index);
        eqc.b(r) = pin.value.y();
        ++r;
    }
    return eqc;
}

EqualityProjector::EqualityProjector(EqualityConstraint eqc) : eqc_(std::move(eqc)) {
    const Eigen::MatrixXd gram = eqc_.A * eqc_.A.transpose();
    llt_.compute(gram);
    if (llt_.info() != Eigen::Success)
        throw std::invalid_argument("EqualityProjector: A A^T is singular (ill-posed boundary spec)");
    // LLT succeeds on barely-positive matrices; reject near-singular ones too.
    const Eigen::VectorXd d = llt_.matrixLLT().diagonal();
    if (d.minCoeff() <= 1e-10 * (1.0 + d.maxCoeff()))
        throw std::invalid_argument("EqualityProjector: A is rank deficient (duplicate pins?)");
}

Eigen::VectorXd EqualityProjector::apply(const Eigen::VectorXd& xi) const {
    if (xi.size() != eqc_.A.cols())
        throw std::invalid_argument("EqualityProjector: xi dimension mismatch");
    const Eigen::VectorXd residual = eqc_.A * xi - eqc_.b;
    return xi - eqc_.A.transpose() * llt_.solve(residual);
}

Xi EqualityProjector::apply(const Xi& xi) const { return Xi::from_stacked(apply(xi.stacked())); }

Xi project_equality(const Xi& xi, const EqualityConstraint& eqc) {
    return EqualityProjector(eqc).apply(xi);
}

}  // namespace crowdnav::traj
