#pragma once

#include <vector>

#include "ncqm/constants.hpp"

namespace ncqm {

/// Central potentials in reduced units: distances in hbar/(mu c), energies in
/// mu c^2. All three kinds are attractive with a -C/x singularity at the
/// origin and vanish at infinity.
class Potential {
public:
    enum class Kind { Coulomb, Yukawa, Hulthen };

    /// V(x) = -coupling/x. For a hydrogenlike system coupling = alpha*Z.
    static Potential coulomb(double coupling);
    /// V(x) = -coupling exp(-x/screening)/x.
    static Potential yukawa(double coupling, double screening);
    /// V(x) = -coupling exp(-x/screening)/(screening (1 - exp(-x/screening))).
    static Potential hulthen(double coupling, double screening);

    Kind kind() const { return kind_; }
    double coupling() const { return coupling_; }
    double screening() const { return screening_; }

    double value(double x) const;
    double deriv(double x) const;

    /// Laurent data at the origin: V(x) = -coulomb_tail()/x + v0() + v1()*x + ...
    double coulomb_tail() const { return coupling_; }
    double v0() const;
    double v1() const;
    /// |dV/dx| = coulomb_tail()/x^2 + dv0() + O(x) near the origin.
    double dv0() const;

    /// Length scale used when sizing default grids.
    double natural_length(double beta) const;

private:
    Potential(Kind kind, double coupling, double screening);
    Kind kind_;
    double coupling_;
    double screening_;
};

/// Uniform radial grid; points are r_min + i*h with h = (r_max-r_min)/(points-1).
struct RadialGrid {
    double r_min = 0.0;
    double r_max = 0.0;
    int points = 0;
};

/// One bound-state problem for the rescaled radial equation
///   [-(beta^2/2)(d^2/dx^2 - l(l+1)/x^2) + V(x)] chi = E chi
/// in reduced units. mu_c2_ev fixes the physical scale of x and E.
struct RadialProblem {
    Potential potential;
    int l = 0;
    double beta = 1.0;
    double mu_c2_ev;
    RadialGrid grid;

    /// Effective mass mu/beta^2 in eV.
    double effective_mass_ev() const { return mu_c2_ev / (beta * beta); }

    /// Grid spanning `span_scales` natural lengths with the given point count.
    static RadialProblem standard(const Potential& potential, int l, double beta,
                                  double mu_c2_ev, int points = 20000,
                                  double span_scales = 50.0);
};

struct RadialSolution {
    double energy = 0.0;     ///< units of mu c^2, negative for bound states
    double energy_ev = 0.0;
    std::vector<double> r;   ///< grid, units hbar/(mu c)
    std::vector<double> chi; ///< normalized: integral chi^2 dx = 1
    int nodes = 0;
    double mean_r = 0.0;       ///< <x>
    double mean_inv_r2 = 0.0;  ///< <1/x^2>
    double mean_abs_dv = 0.0;  ///< <|dV/dx|>, mu c^2 per reduced length
    double tail_fraction = 0.0;///< |chi(r_max)| / max|chi|
};

struct SolveOptions {
    double eigen_rel_tol = 1e-12;
    double tail_tol = 1e-10;     ///< extend the grid until the tail is below this
    int max_extensions = 12;     ///< each extension doubles r_max at fixed step
    double shallow_cutoff = 1e-11; ///< |E| below cutoff*depth counts as unbound
};

/// Numerov outward/inward integration with matching at the outermost turning
/// point; the eigenvalue is bracketed by node counting and refined on the
/// derivative mismatch. Throws NoBoundStateError when no state with the
/// requested node count exists, ConvergenceError on matching failure.
RadialSolution solve_bound_state(const RadialProblem& problem, int node_target,
                                 const SolveOptions& options = {});

/// integral chi^2 |dV/dx| dx over a solved state, in reduced units.
/// Throws QuadratureError if the near-origin contribution cannot be resolved.
double mean_abs_force(const RadialSolution& solution, const Potential& potential,
                      int l, double beta);

/// <|F|> in MeV/cm for a solution obtained with reduced-mass energy mu_c2_ev.
double mean_abs_force_mev_cm(const RadialSolution& solution, double mu_c2_ev,
                             const Constants& c = {});

} // namespace ncqm
