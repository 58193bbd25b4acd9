#pragma once

#include <Eigen/Dense>
#include <optional>

namespace crowdnav::traj {

enum class BasisFamily { bernstein, monomial };

// Time-sampled polynomial basis on a uniform grid over [0, t_f].
// P, Pdot, Pddot map coefficients to positions and their first two
// time derivatives; W is the block form acting on stacked (c_x, c_y).
struct PolyBasis {
    BasisFamily family = BasisFamily::bernstein;
    int degree = 10;
    int n_p = 50;
    double t_f = 5.0;
    Eigen::MatrixXd P, Pdot, Pddot;  // n_p x (degree+1)
    Eigen::MatrixXd W;               // 2 n_p x 2(degree+1)
    Eigen::VectorXd ones_coeff;      // c with P c == 1 on the whole grid

    int n_coef() const { return degree + 1; }
    double dt() const { return t_f / (n_p - 1); }
};

PolyBasis build_basis(int degree, int n_p, double t_f,
                      BasisFamily family = BasisFamily::bernstein);

// Basis function value at arbitrary t (also outside [0, t_f]); used by
// derivative-consistency checks.
double basis_value(const PolyBasis& basis, int j, double t);

// Stacked polynomial coefficients for both axes.
struct Xi {
    Eigen::VectorXd cx, cy;

    Eigen::VectorXd stacked() const {
        Eigen::VectorXd s(cx.size() + cy.size());
        s << cx, cy;
        return s;
    }
    static Xi from_stacked(const Eigen::VectorXd& s) {
        const Eigen::Index n = s.size() / 2;
        return Xi{s.head(n), s.tail(n)};
    }
};

struct SampledPath {
    Eigen::VectorXd x, y, xd, yd, xdd, ydd;
    double dt = 0.0;

    Eigen::Index size() const { return x.size(); }
};

SampledPath eval_path(const PolyBasis& basis, const Xi& xi);

// Boundary pins, per derivative order and endpoint. The default pins
// position/velocity/acceleration at t_0 and velocity/acceleration at t_f;
// the terminal position is left to the cost.
struct BoundaryCond {
    std::optional<Eigen::Vector2d> p0 = Eigen::Vector2d{0, 0};
    std::optional<Eigen::Vector2d> v0 = Eigen::Vector2d{0, 0};
    std::optional<Eigen::Vector2d> a0 = Eigen::Vector2d{0, 0};
    std::optional<Eigen::Vector2d> pf;
    std::optional<Eigen::Vector2d> vf = Eigen::Vector2d{0, 0};
    std::optional<Eigen::Vector2d> af = Eigen::Vector2d{0, 0};
};

struct EqualityConstraint {
    Eigen::MatrixXd A;   // m x 2(degree+1)
    Eigen::VectorXd b;   // m
};

EqualityConstraint boundary_system(const PolyBasis& basis, const BoundaryCond& bc);

// Minimum-norm correction onto the affine set A xi = b. The factorization
// of A A^T is cached so one projector can serve a whole sample batch.
class EqualityProjector {
public:
    explicit EqualityProjector(EqualityConstraint eqc);

    Eigen::VectorXd apply(const Eigen::VectorXd& xi_stacked) const;
    Xi apply(const Xi& xi) const;

    const EqualityConstraint& constraint() const { return eqc_; }

private:
    EqualityConstraint eqc_;
    Eigen::LLT<Eigen::MatrixXd> llt_;  // of A A^T
};

Xi project_equality(const Xi& xi, const EqualityConstraint& eqc);

}  // namespace crowdnav::traj
