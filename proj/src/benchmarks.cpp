#include "accs/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace accs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (const double v : x) {
        s += v * v;
    }
    return s;
}

double abs_sum_plus_prod(std::span<const double> x) {
    double s = 0.0;
    double p = 1.0;
    for (const double v : x) {
        s += std::fabs(v);
        p *= std::fabs(v);
    }
    return s + p;
}

double rotated_hyper_ellipsoid(std::span<const double> x) {
    double s = 0.0;
    double prefix = 0.0;
    for (const double v : x) {
        prefix += v;
        s += prefix * prefix;
    }
    return s;
}

double max_abs(std::span<const double> x) {
    double m = 0.0;
    for (const double v : x) {
        m = std::max(m, std::fabs(v));
    }
    return m;
}

double rosenbrock(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double step_fn(std::span<const double> x) {
    double s = 0.0;
    for (const double v : x) {
        const double t = std::floor(v + 0.5);
        s += t * t;
    }
    return s;
}

double weighted_quartic(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double v2 = x[i] * x[i];
        s += static_cast<double>(i + 1) * v2 * v2;
    }
    return s;
}

double schwefel(std::span<const double> x) {
    double s = 0.0;
    for (const double v : x) {
        s += -v * std::sin(std::sqrt(std::fabs(v)));
    }
    return s;
}

double rastrigin(std::span<const double> x) {
    double s = 0.0;
    for (const double v : x) {
        s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
    }
    return s;
}

double ackley(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (const double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * kPi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + kE;
}

double griewank(std::span<const double> x) {
    double s = 0.0;
    double p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i];
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s / 4000.0 - p + 1.0;
}

double penalized1(std::span<const double> x) {
    const std::size_t n = x.size();
    const auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
    double s = 10.0 * std::pow(std::sin(kPi * y(0)), 2);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double yi = y(i) - 1.0;
        s += yi * yi * (1.0 + 10.0 * std::pow(std::sin(kPi * y(i + 1)), 2));
    }
    const double yn = y(n - 1) - 1.0;
    s += yn * yn;
    double penalty = 0.0;
    for (const double v : x) {
        penalty += penalty_u(v, 10.0, 100.0, 4.0);
    }
    return kPi / static_cast<double>(n) * s + penalty;
}

double penalized2(std::span<const double> x) {
    const std::size_t n = x.size();
    double s = std::pow(std::sin(3.0 * kPi * x[0]), 2);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double xi = x[i] - 1.0;
        s += xi * xi * (1.0 + std::pow(std::sin(3.0 * kPi * x[i + 1]), 2));
    }
    const double xn = x[n - 1] - 1.0;
    s += xn * xn * (1.0 + std::pow(std::sin(2.0 * kPi * x[n - 1]), 2));
    double penalty = 0.0;
    for (const double v : x) {
        penalty += penalty_u(v, 5.0, 100.0, 4.0);
    }
    return 0.1 * s + penalty;
}

double shekel_foxholes(std::span<const double> x) {
    double s = 1.0 / 500.0;
    for (int j = 0; j < 25; ++j) {
        const double a1 = -32.0 + 16.0 * (j % 5);
        const double a2 = -32.0 + 16.0 * (j / 5);
        const double d1 = x[0] - a1;
        const double d2 = x[1] - a2;
        s += 1.0 / (static_cast<double>(j + 1) + std::pow(d1, 6) + std::pow(d2, 6));
    }
    return 1.0 / s;
}

double kowalik(std::span<const double> x) {
    static constexpr double a[11] = {0.1957, 0.1947, 0.1735, 0.16,   0.0844, 0.0627,
                                     0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
    static constexpr double b_inv[11] = {0.25, 0.5, 1, 2, 4, 6, 8, 10, 12, 14, 16};
    double s = 0.0;
    for (int i = 0; i < 11; ++i) {
        const double b = 1.0 / b_inv[i];
        const double r = a[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
        s += r * r;
    }
    return s;
}

double six_hump_camel(std::span<const double> x) {
    const double x1 = x[0];
    const double x2 = x[1];
    const double x1_2 = x1 * x1;
    const double x2_2 = x2 * x2;
    return 4.0 * x1_2 - 2.1 * x1_2 * x1_2 + x1_2 * x1_2 * x1_2 / 3.0 + x1 * x2 - 4.0 * x2_2 +
           4.0 * x2_2 * x2_2;
}

double branin(std::span<const double> x) {
    const double x1 = x[0];
    const double x2 = x[1];
    const double a = x2 - 5.1 / (4.0 * kPi * kPi) * x1 * x1 + 5.0 / kPi * x1 - 6.0;
    return a * a + 10.0 * (1.0 - 1.0 / (8.0 * kPi)) * std::cos(x1) + 10.0;
}

double goldstein_price(std::span<const double> x) {
    const double x1 = x[0];
    const double x2 = x[1];
    const double u = x1 + x2 + 1.0;
    const double t1 = 1.0 + u * u *
                                (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 +
                                 6.0 * x1 * x2 + 3.0 * x2 * x2);
    const double v = 2.0 * x1 - 3.0 * x2;
    const double t2 = 30.0 + v * v *
                                 (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 -
                                  36.0 * x1 * x2 + 27.0 * x2 * x2);
    return t1 * t2;
}

double hartmann3(std::span<const double> x) {
    static constexpr double a[4][3] = {
        {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}, {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}};
    static constexpr double c[4] = {1.0, 1.2, 3.0, 3.2};
    static constexpr double p[4][3] = {{0.3689, 0.1170, 0.2673},
                                       {0.4699, 0.4387, 0.7470},
                                       {0.1091, 0.8732, 0.5547},
                                       {0.03815, 0.5743, 0.8828}};
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double e = 0.0;
        for (int j = 0; j < 3; ++j) {
            const double d = x[j] - p[i][j];
            e += a[i][j] * d * d;
        }
        s -= c[i] * std::exp(-e);
    }
    return s;
}

// --- CEC-2019 base definitions ------------------------------------------
// Each search box is [-100, 100]-style per the catalogue; the hardcoded
// scale factors map it onto the function's natural domain. A +1 offset puts
// every base optimum at 1.

std::vector<double> scaled(std::span<const double> x, double factor) {
    std::vector<double> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        z[i] = x[i] * factor;
    }
    return z;
}

// Chebyshev polynomial fitting (Storn): coefficients of a degree n-1
// polynomial must keep |p(y)| <= 1 on [-1, 1] while p(+-1.2) reaches the
// Chebyshev bound.
double chebyshev_fit(std::span<const double> x) {
    const std::size_t n = x.size();
    double prev = 1.0;
    double bound = 1.2;
    for (std::size_t j = 0; j + 2 < n; ++j) {
        const double next = 2.4 * bound - prev;
        prev = bound;
        bound = next;
    }
    const auto horner = [&](double y) {
        double px = x[0];
        for (std::size_t j = 1; j < n; ++j) {
            px = y * px + x[j];
        }
        return px;
    };
    const int sample = static_cast<int>(32 * n);
    const double dy = 2.0 / static_cast<double>(sample);
    double sum = 0.0;
    double y = -1.0;
    for (int i = 0; i <= sample; ++i) {
        const double px = horner(y);
        if (px < -1.0 || px > 1.0) {
            const double over = 1.0 - std::fabs(px);
            sum += over * over;
        }
        y += dy;
    }
    for (const double edge : {-1.2, 1.2}) {
        const double px = horner(edge);
        if (px < bound) {
            sum += px * px;
        }
    }
    return sum;
}

// Inverse Hilbert matrix: decision vector is a b-by-b matrix Z (row-major);
// score is the absolute deviation of H*Z from the identity.
double inverse_hilbert(std::span<const double> x) {
    const auto b = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(x.size()))));
    double sum = 0.0;
    for (std::size_t i = 0; i < b; ++i) {
        for (std::size_t k = 0; k < b; ++k) {
            double prod = 0.0;
            for (std::size_t j = 0; j < b; ++j) {
                prod += x[k + b * j] / static_cast<double>(i + j + 1);
            }
            sum += std::fabs(prod - (i == k ? 1.0 : 0.0));
        }
    }
    return sum;
}

// Lennard-Jones cluster energy for n/3 atoms, shifted so the known 6-atom
// minimum sits at zero.
double lennard_jones(std::span<const double> x) {
    const std::size_t atoms = x.size() / 3;
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < atoms; ++i) {
        for (std::size_t j = i + 1; j < atoms; ++j) {
            const double dx = x[3 * i] - x[3 * j];
            const double dy = x[3 * i + 1] - x[3 * j + 1];
            const double dz = x[3 * i + 2] - x[3 * j + 2];
            const double r2 = dx * dx + dy * dy + dz * dz;
            const double r6 = r2 * r2 * r2;
            if (r6 > 1.0e-10) {
                sum += (1.0 / r6 - 2.0) / r6;
            } else {
                sum += 1.0e20;
            }
        }
    }
    return sum + 12.7120622568;
}

double weierstrass(std::span<const double> x) {
    constexpr double a = 0.5;
    constexpr double b = 3.0;
    constexpr int k_max = 20;
    double sum = 0.0;
    for (const double v : x) {
        for (int k = 0; k <= k_max; ++k) {
            sum += std::pow(a, k) * std::cos(2.0 * kPi * std::pow(b, k) * (v + 0.5));
        }
    }
    double centre = 0.0;
    for (int k = 0; k <= k_max; ++k) {
        centre += std::pow(a, k) * std::cos(2.0 * kPi * std::pow(b, k) * 0.5);
    }
    return sum - static_cast<double>(x.size()) * centre;
}

double modified_schwefel(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double sum = 0.0;
    for (const double v : x) {
        const double z = v + 4.209687462275036e+002;
        if (z > 500.0) {
            const double w = 500.0 - std::fmod(z, 500.0);
            sum -= w * std::sin(std::sqrt(w));
            const double t = (z - 500.0) / 100.0;
            sum += t * t / n;
        } else if (z < -500.0) {
            const double w = std::fmod(std::fabs(z), 500.0) - 500.0;
            sum -= w * std::sin(std::sqrt(500.0 - std::fmod(std::fabs(z), 500.0)));
            const double t = (z + 500.0) / 100.0;
            sum += t * t / n;
        } else {
            sum -= z * std::sin(std::sqrt(std::fabs(z)));
        }
    }
    return sum + 4.189828872724338e+002 * n;
}

double expanded_schaffer_f6(std::span<const double> x) {
    const auto pair_term = [](double u, double v) {
        const double r2 = u * u + v * v;
        const double s = std::sin(std::sqrt(r2));
        const double d = 1.0 + 0.001 * r2;
        return 0.5 + (s * s - 0.5) / (d * d);
    };
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += pair_term(x[i], x[(i + 1) % x.size()]);
    }
    return sum;
}

double happy_cat(std::span<const double> x) {
    constexpr double alpha = 1.0 / 8.0;
    const double n = static_cast<double>(x.size());
    double r2 = 0.0;
    double sum = 0.0;
    for (const double v : x) {
        const double z = v - 1.0;
        r2 += z * z;
        sum += z;
    }
    return std::pow(std::fabs(r2 - n), 2.0 * alpha) + (0.5 * r2 + sum) / n + 0.5;
}

BenchmarkFn classical(std::string id, std::size_t dim, double lo, double hi,
                      std::function<double(std::span<const double>)> fn, bool noise = false) {
    return BenchmarkFn(std::move(id), SearchSpace::uniform_box(dim, lo, hi), 0.0, std::move(fn),
                       noise);
}

BenchmarkFn cec(std::string id, std::size_t dim, double lo, double hi, double scale,
                double (*base)(std::span<const double>)) {
    auto fn = [scale, base](std::span<const double> x) {
        if (scale == 1.0) {
            return base(x) + 1.0;
        }
        const std::vector<double> z = scaled(x, scale);
        return base(z) + 1.0;
    };
    return BenchmarkFn(std::move(id), SearchSpace::uniform_box(dim, lo, hi), 1.0, std::move(fn));
}

} // namespace

double penalty_u(double x, double a, double k, double m) {
    if (x > a) {
        return k * std::pow(x - a, m);
    }
    if (x < -a) {
        return k * std::pow(-x - a, m);
    }
    return 0.0;
}

BenchmarkFn::BenchmarkFn(std::string id, SearchSpace space, std::optional<double> known_fmin,
                         std::function<double(std::span<const double>)> fn, bool additive_noise)
    : id_(std::move(id)),
      space_(std::move(space)),
      fmin_(known_fmin),
      fn_(std::move(fn)),
      additive_noise_(additive_noise) {}

double BenchmarkFn::evaluate(std::span<const double> x) const {
    if (additive_noise_) {
        throw std::invalid_argument(id_ + ": stochastic function needs a noise stream");
    }
    return deterministic_part(x);
}

double BenchmarkFn::evaluate(std::span<const double> x, RngStream& rng) const {
    const double base = deterministic_part(x);
    return additive_noise_ ? base + rng.unit() : base;
}

double BenchmarkFn::deterministic_part(std::span<const double> x) const {
    if (x.size() != dim()) {
        throw std::invalid_argument(id_ + ": expected dimension " + std::to_string(dim()) +
                                    ", got " + std::to_string(x.size()));
    }
    return fn_(x);
}

std::vector<BenchmarkFn> classical_suite() {
    std::vector<BenchmarkFn> suite;
    suite.reserve(19);
    suite.push_back(classical("F1", 30, -100.0, 100.0, sphere));
    suite.push_back(classical("F2", 30, -10.0, 10.0, abs_sum_plus_prod));
    suite.push_back(classical("F3", 30, -100.0, 100.0, rotated_hyper_ellipsoid));
    suite.push_back(classical("F4", 30, -100.0, 100.0, max_abs));
    suite.push_back(classical("F5", 30, -30.0, 30.0, rosenbrock));
    suite.push_back(classical("F6", 30, -100.0, 100.0, step_fn));
    suite.push_back(classical("F7", 30, -1.28, 1.28, weighted_quartic, true));
    {
        BenchmarkFn f8("F8", SearchSpace::uniform_box(30, -500.0, 500.0), -12569.486618173014,
                       schwefel);
        suite.push_back(std::move(f8));
    }
    suite.push_back(classical("F9", 30, -5.12, 5.12, rastrigin));
    suite.push_back(classical("F10", 30, -32.0, 32.0, ackley));
    suite.push_back(classical("F11", 30, -600.0, 600.0, griewank));
    suite.push_back(classical("F12", 30, -50.0, 50.0, penalized1));
    suite.push_back(classical("F13", 30, -50.0, 50.0, penalized2));
    suite.push_back(BenchmarkFn("F14", SearchSpace::uniform_box(2, -65.0, 65.0),
                                0.9980038377944498, shekel_foxholes));
    suite.push_back(BenchmarkFn("F15", SearchSpace::uniform_box(4, -5.0, 5.0),
                                0.00030748598780560557, kowalik));
    suite.push_back(BenchmarkFn("F16", SearchSpace::uniform_box(2, -5.0, 5.0),
                                -1.0316284534898776, six_hump_camel));
    suite.push_back(BenchmarkFn("F17", SearchSpace::uniform_box(2, -5.0, 5.0),
                                0.39788735772973816, branin));
    suite.push_back(BenchmarkFn("F18", SearchSpace::uniform_box(2, -2.0, 2.0), 3.0,
                                goldstein_price));
    suite.push_back(BenchmarkFn("F19", SearchSpace::uniform_box(3, 1.0, 3.0),
                                -3.862782147820756, hartmann3));
    return suite;
}

std::vector<BenchmarkFn> cec2019_suite() {
    std::vector<BenchmarkFn> suite;
    suite.reserve(10);
    suite.push_back(cec("CEC01", 9, -8192.0, 8192.0, 1.0, chebyshev_fit));
    suite.push_back(cec("CEC02", 16, -16384.0, 16384.0, 1.0, inverse_hilbert));
    suite.push_back(cec("CEC03", 18, -4.0, 4.0, 1.0, lennard_jones));
    suite.push_back(cec("CEC04", 10, -100.0, 100.0, 5.12 / 100.0, rastrigin));
    suite.push_back(cec("CEC05", 10, -100.0, 100.0, 600.0 / 100.0, griewank));
    suite.push_back(cec("CEC06", 10, -100.0, 100.0, 0.5 / 100.0, weierstrass));
    suite.push_back(cec("CEC07", 10, -100.0, 100.0, 1000.0 / 100.0, modified_schwefel));
    suite.push_back(cec("CEC08", 10, -100.0, 100.0, 1.0, expanded_schaffer_f6));
    suite.push_back(cec("CEC09", 10, -100.0, 100.0, 5.0 / 100.0, happy_cat));
    suite.push_back(cec("CEC10", 10, -100.0, 100.0, 1.0, ackley));
    return suite;
}

std::vector<BenchmarkFn> all_benchmarks() {
    std::vector<BenchmarkFn> suite = classical_suite();
    std::vector<BenchmarkFn> cec = cec2019_suite();
    suite.insert(suite.end(), std::make_move_iterator(cec.begin()),
                 std::make_move_iterator(cec.end()));
    return suite;
}

const BenchmarkFn* find_benchmark(std::span<const BenchmarkFn> suite, std::string_view id) {
    for (const BenchmarkFn& fn : suite) {
        if (fn.id() == id) {
            return &fn;
        }
    }
    return nullptr;
}

OptimumRecord known_optimum(std::string_view id) {
    const auto flat = [](std::size_t dim, double v) { return std::vector<double>(dim, v); };
    if (id == "F1" || id == "F2" || id == "F3" || id == "F4" || id == "F6" || id == "F7" ||
        id == "F9" || id == "F10" || id == "F11") {
        return {std::string(id), flat(30, 0.0), 0.0, 1e-3};
    }
    if (id == "F5") {
        return {"F5", flat(30, 1.0), 0.0, 1e-3};
    }
    if (id == "F8") {
        // Per-dimension minimizer of -x*sin(sqrt(|x|)) on [-500, 500].
        return {"F8", flat(30, 420.9687462275036), -12569.486618173014, 0.1};
    }
    if (id == "F12") {
        return {"F12", flat(30, -1.0), 0.0, 1e-3};
    }
    if (id == "F13") {
        return {"F13", flat(30, 1.0), 0.0, 1e-3};
    }
    if (id == "F14") {
        return {"F14", {-31.97833094665986, -31.978335455272838}, 0.9980038377944498, 1e-3};
    }
    if (id == "F15") {
        return {"F15",
                {0.192833452697743, 0.1908362457704643, 0.12311729954921155, 0.13576599286619756},
                0.00030748598780560557,
                1e-3};
    }
    if (id == "F16") {
        return {"F16", {0.08984200993169693, -0.7126564010150118}, -1.0316284534898776, 1e-3};
    }
    if (id == "F17") {
        return {"F17", {kPi, 2.275}, 0.39788735772973816, 1e-3};
    }
    if (id == "F18") {
        return {"F18", {0.0, -1.0}, 3.0, 1e-3};
    }
    if (id == "F19") {
        // Sits outside the catalogued [1, 3] box; evaluation is still defined.
        return {"F19", {0.114614, 0.555649, 0.852547}, -3.862782147820756, 1e-3};
    }
    if (id.starts_with("CEC")) {
        throw std::invalid_argument("known_optimum: no authoritative optimum for " +
                                    std::string(id) + " without official instance data");
    }
    throw std::invalid_argument("known_optimum: unknown function id " + std::string(id));
}

} // namespace accs
