#include <cmath>
#include <numbers>

#include "niafs/algorithms.hpp"
#include "niafs/errors.hpp"

namespace niafs::nia {

namespace {

void require_same_length(const std::vector<double>& a, const std::vector<double>& b,
                         const char* what) {
    if (a.size() != b.size())
        throw DimensionError(std::string(what) + ": vector length mismatch (" +
                             std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

} // namespace

std::vector<double> pso_velocity_update(const std::vector<double>& v, const std::vector<double>& x,
                                        const std::vector<double>& pbest,
                                        const std::vector<double>& gbest, double w, double c1,
                                        double c2, const std::vector<double>& r1,
                                        const std::vector<double>& r2) {
    require_same_length(v, x, "pso_velocity_update");
    require_same_length(v, pbest, "pso_velocity_update");
    require_same_length(v, gbest, "pso_velocity_update");
    require_same_length(v, r1, "pso_velocity_update");
    require_same_length(v, r2, "pso_velocity_update");
    std::vector<double> out(v.size());
    for (std::size_t d = 0; d < v.size(); ++d)
        out[d] = w * v[d] + c1 * r1[d] * (pbest[d] - x[d]) + c2 * r2[d] * (gbest[d] - x[d]);
    return out;
}

double levy_sigma(double beta) {
    if (!(beta > 1.0 && beta <= 2.0))
        throw ValidationError("levy_sigma: beta must lie in (1, 2]");
    const double num = std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
    const double den =
        std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / beta);
}

std::vector<double> levy_flight_step(double beta, double scale, RngStream& rng,
                                     std::size_t dimension) {
    if (!(scale > 0.0)) throw ValidationError("levy_flight_step: scale must be > 0");
    const double sigma = levy_sigma(beta);
    std::vector<double> step(dimension);
    for (std::size_t d = 0; d < dimension; ++d) {
        const double u = rng.normal() * sigma;
        double t = rng.normal();
        if (t == 0.0) t = 0x1.0p-30; // |t|^(1/beta) in the denominator
        step[d] = scale * u / std::pow(std::fabs(t), 1.0 / beta);
    }
    return step;
}

std::vector<double> firefly_move(const std::vector<double>& xi, const std::vector<double>& xj,
                                 double beta0, double gamma, double alpha,
                                 const std::vector<double>& noise) {
    require_same_length(xi, xj, "firefly_move");
    require_same_length(xi, noise, "firefly_move");
    if (gamma < 0.0) throw ValidationError("firefly_move: gamma must be >= 0");
    double r2 = 0.0;
    for (std::size_t d = 0; d < xi.size(); ++d) {
        const double diff = xi[d] - xj[d];
        r2 += diff * diff;
    }
    const double attraction = beta0 * std::exp(-gamma * r2);
    std::vector<double> out(xi.size());
    for (std::size_t d = 0; d < xi.size(); ++d)
        out[d] = xi[d] + attraction * (xj[d] - xi[d]) + alpha * noise[d];
    return out;
}

BatUpdate bat_update(const std::vector<double>& x, const std::vector<double>& v,
                     const std::vector<double>& gbest, double f_min, double f_max, double rand_f,
                     double loudness, double pulse_rate, RngStream& rng) {
    require_same_length(x, v, "bat_update");
    require_same_length(x, gbest, "bat_update");
    BatUpdate out;
    out.frequency = f_min + (f_max - f_min) * rand_f;
    out.velocity.resize(x.size());
    out.position.resize(x.size());
    for (std::size_t d = 0; d < x.size(); ++d) {
        out.velocity[d] = v[d] + (x[d] - gbest[d]) * out.frequency;
        out.position[d] = x[d] + out.velocity[d];
    }
    // Pulse-rate gate: replace the flight by a local walk around the
    // incumbent, amplitude given by the loudness argument.
    if (rng.uniform() > pulse_rate) {
        for (std::size_t d = 0; d < x.size(); ++d)
            out.position[d] = gbest[d] + loudness * rng.normal();
    }
    return out;
}

std::vector<double> abc_neighbor_search(const std::vector<double>& x,
                                        const std::vector<double>& partner, std::size_t dim_index,
                                        double phi) {
    require_same_length(x, partner, "abc_neighbor_search");
    if (dim_index >= x.size())
        throw DimensionError("abc_neighbor_search: dim_index " + std::to_string(dim_index) +
                             " out of range for dimension " + std::to_string(x.size()));
    std::vector<double> out = x;
    out[dim_index] = x[dim_index] + phi * (x[dim_index] - partner[dim_index]);
    return out;
}

std::vector<std::vector<double>> gsa_forces(const std::vector<std::vector<double>>& positions,
                                            const std::vector<double>& fitnesses, double G,
                                            double epsilon,
                                            const std::vector<std::vector<double>>& rng_weights,
                                            const std::vector<std::size_t>& attractors) {
    const std::size_t n = positions.size();
    if (n < 2) throw ValidationError("gsa_forces: need at least 2 agents");
    if (fitnesses.size() != n) throw DimensionError("gsa_forces: fitnesses length mismatch");
    if (!(epsilon > 0.0)) throw ValidationError("gsa_forces: epsilon must be > 0");

    std::vector<std::size_t> pull_from = attractors;
    if (pull_from.empty()) {
        pull_from.resize(n);
        for (std::size_t j = 0; j < n; ++j) pull_from[j] = j;
    }

    double best = fitnesses[0], worst = fitnesses[0];
    for (double f : fitnesses) {
        best = std::min(best, f);
        worst = std::max(worst, f);
    }

    // Normalized masses; uniform when all fitnesses coincide.
    std::vector<double> mass(n);
    if (best == worst) {
        std::fill(mass.begin(), mass.end(), 1.0 / static_cast<double>(n));
    } else {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            mass[i] = (worst - fitnesses[i]) / (worst - best);
            total += mass[i];
        }
        for (double& m : mass) m /= total;
    }

    const std::size_t dim = positions[0].size();
    std::vector<std::vector<double>> acc(n, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < pull_from.size(); ++a) {
            const std::size_t j = pull_from[a];
            if (j == i) continue;
            double dist2 = 0.0;
            for (std::size_t d = 0; d < dim; ++d) {
                const double diff = positions[j][d] - positions[i][d];
                dist2 += diff * diff;
            }
            const double dist = std::sqrt(dist2);
            const double w = rng_weights.empty() ? 1.0 : rng_weights[i][a];
            // acceleration = force / M_i, with the M_i factor cancelled
            const double pull = w * G * mass[j] / (dist + epsilon);
            for (std::size_t d = 0; d < dim; ++d)
                acc[i][d] += pull * (positions[j][d] - positions[i][d]);
        }
    }
    return acc;
}

double binarize_probability(double value) {
    return 1.0 / (1.0 + std::exp(-value));
}

} // namespace niafs::nia
