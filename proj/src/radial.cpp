#include "ncqm/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ncqm/errors.hpp"

namespace ncqm {

namespace {

constexpr double kRescaleLimit = 1e250;
constexpr double kRescale = 1e-250;

void check_positive(double v, const char* what) {
    if (!(v > 0.0)) throw std::domain_error(std::string(what) + " must be positive");
}

} // namespace

Potential::Potential(Kind kind, double coupling, double screening)
    : kind_(kind), coupling_(coupling), screening_(screening) {
    check_positive(coupling, "coupling");
    if (kind != Kind::Coulomb) check_positive(screening, "screening length");
}

Potential Potential::coulomb(double coupling) {
    return Potential(Kind::Coulomb, coupling, 0.0);
}

Potential Potential::yukawa(double coupling, double screening) {
    return Potential(Kind::Yukawa, coupling, screening);
}

Potential Potential::hulthen(double coupling, double screening) {
    return Potential(Kind::Hulthen, coupling, screening);
}

double Potential::value(double x) const {
    check_positive(x, "x");
    switch (kind_) {
        case Kind::Coulomb:
            return -coupling_ / x;
        case Kind::Yukawa:
            return -coupling_ * std::exp(-x / screening_) / x;
        case Kind::Hulthen: {
            double u = x / screening_;
            if (u > 500.0) return -(coupling_ / screening_) * std::exp(-u);
            return -(coupling_ / screening_) / std::expm1(u);
        }
    }
    return 0.0;
}

double Potential::deriv(double x) const {
    check_positive(x, "x");
    switch (kind_) {
        case Kind::Coulomb:
            return coupling_ / (x * x);
        case Kind::Yukawa:
            return coupling_ * std::exp(-x / screening_) *
                   (1.0 / (x * x) + 1.0 / (screening_ * x));
        case Kind::Hulthen: {
            double u = x / screening_;
            double a2 = screening_ * screening_;
            if (u > 500.0) return (coupling_ / a2) * std::exp(-u);
            double s = 2.0 * std::sinh(0.5 * u);
            return (coupling_ / a2) / (s * s);
        }
    }
    return 0.0;
}

double Potential::v0() const {
    switch (kind_) {
        case Kind::Coulomb: return 0.0;
        case Kind::Yukawa: return coupling_ / screening_;
        case Kind::Hulthen: return 0.5 * coupling_ / screening_;
    }
    return 0.0;
}

double Potential::v1() const {
    switch (kind_) {
        case Kind::Coulomb: return 0.0;
        case Kind::Yukawa: return -0.5 * coupling_ / (screening_ * screening_);
        case Kind::Hulthen: return -coupling_ / (12.0 * screening_ * screening_);
    }
    return 0.0;
}

double Potential::dv0() const {
    switch (kind_) {
        case Kind::Coulomb: return 0.0;
        case Kind::Yukawa: return -0.5 * coupling_ / (screening_ * screening_);
        case Kind::Hulthen: return -coupling_ / (12.0 * screening_ * screening_);
    }
    return 0.0;
}

double Potential::natural_length(double beta) const {
    double bohr = beta * beta / coupling_;
    if (kind_ == Kind::Coulomb) return bohr;
    return std::max(bohr, screening_);
}

RadialProblem RadialProblem::standard(const Potential& potential, int l, double beta,
                                      double mu_c2_ev, int points,
                                      double span_scales) {
    RadialProblem p{potential, l, beta, mu_c2_ev, RadialGrid{}};
    double span = span_scales * potential.natural_length(beta);
    double h = span / points;
    p.grid = RadialGrid{h, span, points};
    return p;
}

namespace {

// Numerov sweeps for chi'' = f(x) chi on a uniform grid.
class Engine {
public:
    Engine(const RadialProblem& prob)
        : pot_(prob.potential), l_(prob.l), beta_(prob.beta) {
        const RadialGrid& g = prob.grid;
        if (!(g.r_min > 0.0) || !(g.r_max > g.r_min)) {
            throw std::invalid_argument("grid must satisfy 0 < r_min < r_max");
        }
        if (g.points < 1000) {
            throw std::invalid_argument("grid needs at least 1000 points");
        }
        n_ = g.points;
        h_ = (g.r_max - g.r_min) / (n_ - 1);
        x_.resize(n_);
        v_.resize(n_);
        for (int i = 0; i < n_; ++i) {
            x_[i] = g.r_min + h_ * i;
            v_[i] = pot_.value(x_[i]);
        }
        q_ = 2.0 * pot_.coulomb_tail() / (beta_ * beta_);
    }

    int points() const { return n_; }
    double step() const { return h_; }
    const std::vector<double>& grid() const { return x_; }

    double veff_min() const {
        double m = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n_; ++i) {
            double veff = v_[i] +
                          0.5 * beta_ * beta_ * l_ * (l_ + 1.0) / (x_[i] * x_[i]);
            m = std::min(m, veff);
        }
        return m;
    }

    // Power-series coefficients of chi/x^(l+1) about the origin, given E.
    struct Series {
        double a1, a2, a3;
    };

    Series series(double energy) const {
        double w0 = 2.0 * (pot_.v0() - energy) / (beta_ * beta_);
        double w1 = 2.0 * pot_.v1() / (beta_ * beta_);
        Series s{};
        s.a1 = -q_ / (2.0 * (l_ + 1.0));
        s.a2 = (-q_ * s.a1 + w0) / (2.0 * (2.0 * l_ + 3.0));
        s.a3 = (-q_ * s.a2 + w0 * s.a1 + w1) / (3.0 * (2.0 * l_ + 4.0));
        return s;
    }

    double seed(double x, const Series& s) const {
        return std::pow(x, l_ + 1) * (1.0 + x * (s.a1 + x * (s.a2 + x * s.a3)));
    }

    double f_at(int i, double energy) const {
        return l_ * (l_ + 1.0) / (x_[i] * x_[i]) +
               2.0 * (v_[i] - energy) / (beta_ * beta_);
    }

    // Sign changes of the outward solution across the whole grid.
    int node_count(double energy) const {
        Series s = series(energy);
        double em_prev = 1.0 - h_ * h_ * f_at(0, energy) / 12.0;
        double em_cur = 1.0 - h_ * h_ * f_at(1, energy) / 12.0;
        double prev = seed(x_[0], s);
        double cur = seed(x_[1], s);
        int count = (prev > 0.0) != (cur > 0.0) ? 1 : 0;
        for (int i = 1; i + 1 < n_; ++i) {
            double em_next = 1.0 - h_ * h_ * f_at(i + 1, energy) / 12.0;
            double next = ((12.0 - 10.0 * em_cur) * cur - em_prev * prev) / em_next;
            if (cur != 0.0 && (next > 0.0) != (cur > 0.0)) ++count;
            prev = cur;
            cur = next;
            em_prev = em_cur;
            em_cur = em_next;
            if (std::abs(cur) > kRescaleLimit) {
                prev *= kRescale;
                cur *= kRescale;
            }
        }
        return count;
    }

    int match_index(double energy) const {
        int m = -1;
        for (int i = 0; i < n_; ++i) {
            if (f_at(i, energy) <= 0.0) m = i;
        }
        if (m < 0) {
            // No classically allowed point: match at the effective minimum.
            double best = std::numeric_limits<double>::infinity();
            for (int i = 0; i < n_; ++i) {
                double fi = f_at(i, energy);
                if (fi < best) {
                    best = fi;
                    m = i;
                }
            }
        }
        return std::clamp(m, 2, n_ - 3);
    }

    // Log-derivative mismatch at the matching point; zero at an eigenvalue.
    double mismatch(double energy) const {
        int m = match_index(energy);
        Series s = series(energy);
        scratch_em_.resize(n_);
        for (int i = 0; i < n_; ++i) {
            scratch_em_[i] = 1.0 - h_ * h_ * f_at(i, energy) / 12.0;
        }
        const std::vector<double>& em = scratch_em_;

        // outward values at m-1, m, m+1
        scratch_out_.assign(m + 2, 0.0);
        std::vector<double>& out = scratch_out_;
        out[0] = seed(x_[0], s);
        out[1] = seed(x_[1], s);
        for (int i = 1; i <= m; ++i) {
            out[i + 1] = ((12.0 - 10.0 * em[i]) * out[i] - em[i - 1] * out[i - 1]) /
                         em[i + 1];
            if (std::abs(out[i + 1]) > kRescaleLimit) {
                for (int j = std::max(0, i - 2); j <= i + 1; ++j) out[j] *= kRescale;
            }
        }

        // inward values at m-1, m, m+1; chi(N-1) = 0, chi(N-2) = tiny
        double up = 0.0, cur = 1e-30;
        double in_m1 = 0.0, in_m = 0.0, in_p1 = 0.0;
        if (m + 1 == n_ - 2) in_p1 = cur;
        for (int i = n_ - 2; i >= m; --i) {
            double down = ((12.0 - 10.0 * em[i]) * cur - em[i + 1] * up) / em[i - 1];
            up = cur;
            cur = down;
            if (std::abs(cur) > kRescaleLimit) {
                up *= kRescale;
                cur *= kRescale;
                in_p1 *= kRescale;
                in_m *= kRescale;
            }
            if (i - 1 == m + 1) in_p1 = cur;
            if (i - 1 == m) in_m = cur;
            if (i - 1 == m - 1) in_m1 = cur;
        }

        double out_m1 = out[m - 1], out_m = out[m], out_p1 = out[m + 1];
        if (out_m == 0.0 || in_m == 0.0) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        return (out_m1 + out_p1) / out_m - (in_m1 + in_p1) / in_m;
    }

    // Full normalized solution at the given (converged) energy.
    void assemble(double energy, std::vector<double>& chi, int& nodes,
                  double& tail_fraction) const {
        int m = match_index(energy);
        Series s = series(energy);
        std::vector<double> em(n_);
        for (int i = 0; i < n_; ++i) em[i] = 1.0 - h_ * h_ * f_at(i, energy) / 12.0;

        chi.assign(n_, 0.0);
        chi[0] = seed(x_[0], s);
        chi[1] = seed(x_[1], s);
        for (int i = 1; i < m; ++i) {
            chi[i + 1] = ((12.0 - 10.0 * em[i]) * chi[i] - em[i - 1] * chi[i - 1]) /
                         em[i + 1];
            if (std::abs(chi[i + 1]) > kRescaleLimit) {
                for (int j = 0; j <= i + 1; ++j) chi[j] *= kRescale;
            }
        }
        std::vector<double> inner(n_, 0.0);
        inner[n_ - 1] = 0.0;
        inner[n_ - 2] = 1e-30;
        for (int i = n_ - 2; i > m; --i) {
            inner[i - 1] = ((12.0 - 10.0 * em[i]) * inner[i] - em[i + 1] * inner[i + 1]) /
                           em[i - 1];
            if (std::abs(inner[i - 1]) > kRescaleLimit) {
                for (int j = i - 1; j < n_; ++j) inner[j] *= kRescale;
            }
        }
        if (inner[m] == 0.0 || chi[m] == 0.0) {
            throw ConvergenceError("degenerate matching while assembling solution");
        }
        double scale = chi[m] / inner[m];
        for (int i = m; i < n_; ++i) chi[i] = inner[i] * scale;

        nodes = 0;
        double peak = 0.0;
        for (int i = 0; i + 1 < n_; ++i) {
            if (chi[i] != 0.0 && (chi[i] > 0.0) != (chi[i + 1] > 0.0) &&
                chi[i + 1] != 0.0) {
                ++nodes;
            }
            peak = std::max(peak, std::abs(chi[i]));
        }
        tail_fraction = peak > 0.0 ? std::abs(chi[n_ - 2]) / peak : 1.0;
    }

    // integral over [0, r_min] of chi^2 * x^power using the origin series,
    // with chi matched to its first grid value.
    double head_moment(const std::vector<double>& chi, double energy,
                       int power) const {
        Series s = series(energy);
        double x0 = x_[0];
        double base = seed(x0, s);
        if (base == 0.0) return 0.0;
        double d = chi[0] / base;
        // (1 + a1 x + a2 x^2 + a3 x^3)^2 through cubic order
        double p0 = 1.0;
        double p1 = 2.0 * s.a1;
        double p2 = s.a1 * s.a1 + 2.0 * s.a2;
        double p3 = 2.0 * s.a3 + 2.0 * s.a1 * s.a2;
        double total = 0.0;
        double coeffs[4] = {p0, p1, p2, p3};
        for (int j = 0; j < 4; ++j) {
            double expo = 2.0 * (l_ + 1) + power + j + 1.0;
            if (expo <= 0.0) {
                throw QuadratureError("near-origin moment diverges");
            }
            total += coeffs[j] * std::pow(x0, expo) / expo;
        }
        return d * d * total;
    }

    const Potential& potential() const { return pot_; }
    int l() const { return l_; }
    double beta() const { return beta_; }

private:
    Potential pot_;
    int l_;
    double beta_;
    int n_ = 0;
    double h_ = 0.0;
    double q_ = 0.0;
    std::vector<double> x_;
    std::vector<double> v_;
    mutable std::vector<double> scratch_em_;
    mutable std::vector<double> scratch_out_;
};

double simpson(const std::vector<double>& y, double h) {
    const std::size_t n = y.size();
    if (n < 2) return 0.0;
    std::size_t intervals = n - 1;
    double sum = 0.0;
    std::size_t start = 0;
    if (intervals % 2 == 1) {
        if (intervals < 3) return 0.5 * h * (y[0] + y[1]);
        sum += 3.0 * h / 8.0 * (y[0] + 3.0 * y[1] + 3.0 * y[2] + y[3]);
        start = 3;
    }
    for (std::size_t i = start; i + 2 < n; i += 2) {
        sum += h / 3.0 * (y[i] + 4.0 * y[i + 1] + y[i + 2]);
    }
    return sum;
}

struct Bracket {
    double lo, hi;
};

// Geometric ladder upward from the well bottom until the node count exceeds
// the target, then bisection on the count.
Bracket bracket_by_nodes(const Engine& eng, int node_target, double floor_energy,
                         double shallow_energy) {
    if (eng.node_count(shallow_energy) <= node_target) {
        throw NoBoundStateError("no bound state with " +
                                std::to_string(node_target) +
                                " nodes in the energy window");
    }
    double lo = floor_energy;
    if (eng.node_count(lo) > node_target) {
        throw ConvergenceError("energy floor still oscillates; grid too coarse");
    }
    // ladder: E_k = floor * 2^-k down to the shallow edge
    double hi = shallow_energy;
    double e = floor_energy;
    for (int k = 0; k < 2048; ++k) {
        e *= 0.5;
        if (e > shallow_energy) {
            break;
        }
        if (eng.node_count(e) > node_target) {
            hi = e;
            break;
        }
        lo = e;
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (eng.node_count(mid) <= node_target) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-6 * std::abs(lo)) break;
    }
    return {lo, hi};
}

double refine_by_mismatch(const Engine& eng, Bracket br, double rel_tol) {
    double a = br.lo, b = br.hi;
    double da = eng.mismatch(a), db = eng.mismatch(b);
    double width = b - a;
    int widen = 0;
    while ((!std::isfinite(da) || !std::isfinite(db) || da * db > 0.0) && widen < 10) {
        a -= width;
        b += width;
        width = b - a;
        da = eng.mismatch(a);
        db = eng.mismatch(b);
        ++widen;
    }
    if (!std::isfinite(da) || !std::isfinite(db) || da * db > 0.0) {
        throw ConvergenceError("matching function does not change sign near the "
                               "node-count bracket");
    }
    for (int it = 0; it < 240; ++it) {
        double mid = 0.5 * (a + b);
        double dm = eng.mismatch(mid);
        if (!std::isfinite(dm)) {
            // nudge off a pathological point
            mid = a + 0.47 * (b - a);
            dm = eng.mismatch(mid);
            if (!std::isfinite(dm)) throw ConvergenceError("matching failure");
        }
        if (da * dm <= 0.0) {
            b = mid;
            db = dm;
        } else {
            a = mid;
            da = dm;
        }
        if (b - a < rel_tol * std::abs(a)) break;
    }
    return 0.5 * (a + b);
}

} // namespace

RadialSolution solve_bound_state(const RadialProblem& problem, int node_target,
                                 const SolveOptions& options) {
    if (node_target < 0) throw std::domain_error("node_target must be >= 0");
    if (!(problem.beta > 0.0)) throw std::domain_error("beta must be positive");
    if (!(problem.mu_c2_ev > 0.0)) throw std::domain_error("mu_c2_ev must be positive");

    RadialProblem work = problem;
    int missing_probes = 0;
    for (int extension = 0;; ++extension) {
        Engine eng(work);
        double depth = eng.veff_min();
        if (!(depth < 0.0)) {
            throw NoBoundStateError("effective potential is nowhere negative");
        }
        double floor_energy = depth;
        double shallow_energy = options.shallow_cutoff * depth;  // tiny, negative

        Bracket br;
        try {
            br = bracket_by_nodes(eng, node_target, floor_energy, shallow_energy);
        } catch (const NoBoundStateError&) {
            // A marginally bound state may need more room before giving up.
            if (missing_probes < 2 && extension < options.max_extensions) {
                ++missing_probes;
                work.grid.r_max *= 2.0;
                work.grid.points *= 2;
                continue;
            }
            throw;
        }
        double energy = refine_by_mismatch(eng, br, options.eigen_rel_tol);

        RadialSolution sol;
        sol.energy = energy;
        sol.energy_ev = energy * work.mu_c2_ev;
        int nodes = 0;
        double tail = 0.0;
        eng.assemble(energy, sol.chi, nodes, tail);
        if (nodes != node_target) {
            throw ConvergenceError("assembled solution has " + std::to_string(nodes) +
                                   " nodes, expected " + std::to_string(node_target));
        }
        if (tail > options.tail_tol && extension < options.max_extensions) {
            work.grid.r_max *= 2.0;
            work.grid.points *= 2;
            continue;
        }
        if (tail > 1e4 * options.tail_tol) {
            throw NoBoundStateError(
                "state too shallow to confine on the maximum grid (tail " +
                std::to_string(tail) + ")");
        }

        sol.r = eng.grid();
        sol.nodes = nodes;
        sol.tail_fraction = tail;

        const double h = eng.step();
        const int n = eng.points();
        std::vector<double> w(n);
        for (int i = 0; i < n; ++i) w[i] = sol.chi[i] * sol.chi[i];
        double norm = simpson(w, h) + eng.head_moment(sol.chi, energy, 0);
        if (!(norm > 0.0)) throw ConvergenceError("normalization failed");
        double inv_sqrt = 1.0 / std::sqrt(norm);
        for (double& c : sol.chi) c *= inv_sqrt;

        for (int i = 0; i < n; ++i) w[i] = sol.chi[i] * sol.chi[i] * sol.r[i];
        sol.mean_r = simpson(w, h) + eng.head_moment(sol.chi, energy, 1);
        for (int i = 0; i < n; ++i) {
            w[i] = sol.chi[i] * sol.chi[i] / (sol.r[i] * sol.r[i]);
        }
        sol.mean_inv_r2 = simpson(w, h) + eng.head_moment(sol.chi, energy, -2);
        sol.mean_abs_dv = mean_abs_force(sol, work.potential, work.l, work.beta);
        return sol;
    }
}

double mean_abs_force(const RadialSolution& solution, const Potential& potential,
                      int l, double beta) {
    if (solution.chi.size() != solution.r.size() || solution.r.size() < 4) {
        throw std::invalid_argument("solution has no sampled wavefunction");
    }
    const std::size_t n = solution.r.size();
    const double h = (solution.r.back() - solution.r.front()) / (n - 1);
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = solution.chi[i] * solution.chi[i] *
               std::abs(potential.deriv(solution.r[i]));
    }
    double body = simpson(w, h);

    // Near-origin contribution from the power-series form of chi and the
    // Laurent form of |dV/dx|.
    RadialProblem tmp{potential, l, beta, 1.0,
                      RadialGrid{solution.r.front(), solution.r.back(),
                                 static_cast<int>(n)}};
    Engine eng(tmp);
    double head = potential.coulomb_tail() *
                      eng.head_moment(solution.chi, solution.energy, -2) +
                  potential.dv0() * eng.head_moment(solution.chi, solution.energy, 0);
    double total = body + head;
    if (!(total >= 0.0) || !std::isfinite(total)) {
        throw QuadratureError("force quadrature failed near the origin");
    }
    if (std::abs(head) > 0.5 * std::abs(total)) {
        throw QuadratureError("near-origin force contribution dominates; "
                              "grid is not resolving the state");
    }
    return total;
}

double mean_abs_force_mev_cm(const RadialSolution& solution, double mu_c2_ev,
                             const Constants& c) {
    // <|dV/dx|> in mu c^2 per hbar/(mu c) -> (mu c^2)^2/(hbar c), then eV -> MeV.
    return solution.mean_abs_dv * mu_c2_ev * mu_c2_ev / c.hbar_c_ev_cm() * 1e-6;
}

} // namespace ncqm
