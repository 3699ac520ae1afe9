#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace ncqm::poly {

/// Exponent tuple of one monomial; size equals the number of variables.
using Monomial = std::vector<std::uint16_t>;

/// Sparse real polynomial in a fixed number of variables. Just enough
/// algebra to apply first-order differential operators exactly, which is what
/// the commutator identity checks need.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial monomial(std::size_t nvars, const Monomial& m, double coeff = 1.0) {
        Polynomial p(nvars);
        p.add(m, coeff);
        return p;
    }

    std::size_t nvars() const { return nvars_; }

    Polynomial& add(const Monomial& m, double coeff) {
        if (coeff == 0.0) return *this;
        auto [it, inserted] = terms_.try_emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0.0) terms_.erase(it);
        }
        return *this;
    }

    /// x_k * p
    Polynomial times_var(std::size_t k) const {
        Polynomial out(nvars_);
        for (const auto& [m, c] : terms_) {
            Monomial mk = m;
            ++mk[k];
            out.add(mk, c);
        }
        return out;
    }

    /// d/dx_k p
    Polynomial derivative(std::size_t k) const {
        Polynomial out(nvars_);
        for (const auto& [m, c] : terms_) {
            if (m[k] == 0) continue;
            Monomial mk = m;
            --mk[k];
            out.add(mk, c * static_cast<double>(m[k]));
        }
        return out;
    }

    Polynomial scaled(double s) const {
        Polynomial out(nvars_);
        for (const auto& [m, c] : terms_) out.add(m, c * s);
        return out;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial out = *this;
        for (const auto& [m, c] : o.terms_) out.add(m, c);
        return out;
    }

    Polynomial operator-(const Polynomial& o) const {
        Polynomial out = *this;
        for (const auto& [m, c] : o.terms_) out.add(m, -c);
        return out;
    }

    double max_abs_coeff() const {
        double worst = 0.0;
        for (const auto& [m, c] : terms_) {
            double a = c < 0 ? -c : c;
            if (a > worst) worst = a;
        }
        return worst;
    }

private:
    std::size_t nvars_;
    std::map<Monomial, double> terms_;
};

/// sum_j w_j d/dx_j applied to f (a momentum operator with the -i*hbar factor
/// stripped off).
inline Polynomial apply_gradient_form(const std::vector<double>& w, const Polynomial& f) {
    Polynomial out(f.nvars());
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j] == 0.0) continue;
        out = out + f.derivative(j).scaled(w[j]);
    }
    return out;
}

/// Every monomial of total degree <= degree in nvars variables.
inline std::vector<Monomial> monomial_basis(std::size_t nvars, int degree) {
    std::vector<Monomial> basis;
    Monomial current(nvars, 0);
    // Depth-first enumeration of exponent tuples with bounded total degree.
    auto rec = [&](auto&& self, std::size_t var, int remaining) -> void {
        if (var == nvars) {
            basis.push_back(current);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            current[var] = static_cast<std::uint16_t>(e);
            self(self, var + 1, remaining - e);
        }
        current[var] = 0;
    };
    rec(rec, 0, degree);
    return basis;
}

} // namespace ncqm::poly
