#include "sasakit/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sasakit::profiles {

namespace {

struct ThetaTable {
    double r = 0.0;
    std::vector<double> num;
    std::vector<double> den;

    double theta(double z) const {
        double n = 0.0;
        for (auto it = num.rbegin(); it != num.rend(); ++it) n = n * z + *it;
        double d = 0.0;
        for (auto it = den.rbegin(); it != den.rend(); ++it) d = d * z + *it;
        return n / d;
    }
};

ThetaTable make_table(const Profile& prof) {
    ThetaTable t;
    t.r = prof.r.approx();
    for (const auto& c : prof.theta.numerator().coefficients()) t.num.push_back(exact::to_double(c));
    for (const auto& c : prof.theta.denominator().coefficients()) t.den.push_back(exact::to_double(c));
    return t;
}

MetricFn<4> make_metric(const ThetaTable& t) {
    return [t](const double (&x)[4], double (&g)[4][4]) {
        const double u = (1.0 + t.r * x[2]) / t.r;
        const double th = t.theta(x[2]);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g[i][j] = 0.0;
        g[0][0] = u;
        g[1][1] = u + th * x[0] * x[0];
        g[1][3] = g[3][1] = th * x[0];
        g[2][2] = 1.0 / th;
        g[3][3] = th;
    };
}

constexpr double kMaxAbsZ = 15.0 / 16.0;

}  // namespace

double scalar_curvature_at(const Profile& prof, double z, const CurvatureOptions& opts) {
    if (!(std::fabs(z) <= kMaxAbsZ))
        throw std::domain_error("curvature: |z| must be at most 15/16");
    const auto metric = make_metric(make_table(prof));
    const double pt[4] = {opts.base_x, 0.0, z, 0.0};
    return opts.richardson ? fd::scalar_curvature_richardson<4>(metric, pt, opts.step)
                           : fd::scalar_curvature<4>(metric, pt, opts.step);
}

std::vector<CurvatureSample> scalar_curvature_samples(const Profile& prof,
                                                      const std::vector<Rational>& grid,
                                                      const CurvatureOptions& opts) {
    const Rational bound = exact::rational(15, 16);
    for (const auto& z : grid)
        if (abs(z) > bound) throw std::domain_error("curvature: grid point outside [-15/16, 15/16]");
    const auto metric = make_metric(make_table(prof));
    std::vector<CurvatureSample> out;
    out.reserve(grid.size());
    for (const auto& z : grid) {
        const double pt[4] = {opts.base_x, 0.0, exact::to_double(z), 0.0};
        const double s = opts.richardson ? fd::scalar_curvature_richardson<4>(metric, pt, opts.step)
                                         : fd::scalar_curvature<4>(metric, pt, opts.step);
        out.push_back({z, s});
    }
    return out;
}

AffineFit fit_affine(const std::vector<CurvatureSample>& samples) {
    if (samples.size() < 2) throw std::domain_error("fit_affine: need at least two samples");
    const double n = double(samples.size());
    double sx = 0.0, sxx = 0.0, sy = 0.0, sxy = 0.0;
    for (const auto& smp : samples) {
        const double x = exact::to_double(smp.z);
        sx += x;
        sxx += x * x;
        sy += smp.s;
        sxy += x * smp.s;
    }
    AffineFit fit;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    for (const auto& smp : samples) {
        const double x = exact::to_double(smp.z);
        fit.max_residual = std::max(fit.max_residual,
                                    std::fabs(smp.s - fit.intercept - fit.slope * x));
    }
    return fit;
}

double max_deviation_from_mean(const std::vector<CurvatureSample>& samples) {
    if (samples.empty()) throw std::domain_error("max_deviation_from_mean: no samples");
    double mean = 0.0;
    for (const auto& smp : samples) mean += smp.s;
    mean /= double(samples.size());
    double dev = 0.0;
    for (const auto& smp : samples) dev = std::max(dev, std::fabs(smp.s - mean));
    return dev;
}

double curvature_energy(const Profile& prof, int samples, const CurvatureOptions& opts) {
    if (samples < 16) throw std::domain_error("curvature_energy: need at least 16 samples");
    constexpr int kDegree = 6;
    const auto metric = make_metric(make_table(prof));
    const double r = prof.r.approx();

    std::vector<double> zs(samples), ss(samples);
    for (int j = 0; j < samples; ++j) {
        zs[j] = (7.0 / 8.0) * std::cos(std::numbers::pi * (2.0 * j + 1.0) / (2.0 * samples));
        const double pt[4] = {opts.base_x, 0.0, zs[j], 0.0};
        ss[j] = opts.richardson ? fd::scalar_curvature_richardson<4>(metric, pt, opts.step)
                                : fd::scalar_curvature<4>(metric, pt, opts.step);
    }

    // degree-6 least squares in the monomial basis via normal equations
    constexpr int M = kDegree + 1;
    long double ata[M][M] = {};
    long double atb[M] = {};
    for (int j = 0; j < samples; ++j) {
        long double pow_i = 1.0L;
        long double basis[M];
        for (int i = 0; i < M; ++i) {
            basis[i] = pow_i;
            pow_i *= zs[j];
        }
        for (int i = 0; i < M; ++i) {
            for (int k = 0; k < M; ++k) ata[i][k] += basis[i] * basis[k];
            atb[i] += basis[i] * ss[j];
        }
    }
    long double aug[M][M + 1];
    for (int i = 0; i < M; ++i) {
        for (int k = 0; k < M; ++k) aug[i][k] = ata[i][k];
        aug[i][M] = atb[i];
    }
    for (int col = 0; col < M; ++col) {
        int pivot = col;
        for (int row = col + 1; row < M; ++row)
            if (fabsl(aug[row][col]) > fabsl(aug[pivot][col])) pivot = row;
        for (int k = 0; k <= M; ++k) std::swap(aug[pivot][k], aug[col][k]);
        for (int row = 0; row < M; ++row) {
            if (row == col) continue;
            const long double f = aug[row][col] / aug[col][col];
            for (int k = col; k <= M; ++k) aug[row][k] -= f * aug[col][k];
        }
    }
    long double coef[M];
    for (int i = 0; i < M; ++i) coef[i] = aug[i][M] / aug[i][i];

    // integrate fit(z)^2 (1 + r z) exactly over [-1, 1]
    long double square[2 * kDegree + 1] = {};
    for (int i = 0; i < M; ++i)
        for (int k = 0; k < M; ++k) square[i + k] += coef[i] * coef[k];
    long double weighted[2 * kDegree + 2] = {};
    for (int i = 0; i <= 2 * kDegree; ++i) {
        weighted[i] += square[i];
        weighted[i + 1] += (long double)(r)*square[i];
    }
    long double integral = 0.0L;
    for (int i = 0; i <= 2 * kDegree + 1; i += 2) integral += 2.0L * weighted[i] / (i + 1);
    return double(integral);
}

}  // namespace sasakit::profiles
