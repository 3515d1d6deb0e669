#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace algint;

namespace {

constexpr AlgebraOrder A4 = AlgebraOrder::A4;
constexpr AlgebraOrder A5 = AlgebraOrder::A5;
constexpr AlgebraOrder A7 = AlgebraOrder::A7;
constexpr ArithmeticMode Sem = ArithmeticMode::Semantic;
constexpr ArithmeticMode Tru = ArithmeticMode::True;

constexpr int kSamples = 10000;
constexpr double kSessionRel = 1e-9;
constexpr int kMinkowskiUlps = 4;
constexpr int kInverseUlps = 8;
constexpr double kDescentTol = 1e-3;
constexpr double kWidthKeep = 0.10;
constexpr double kWidthPoint = 1e-6;
constexpr double kNewtonTol = 1e-6;
constexpr std::size_t kNewtonMaxIter = 50;
constexpr double kEigenTol = 1e-6;
constexpr double kSchulzTol = 1e-6;
constexpr double kUnitOffDiag = 1e-12;
constexpr double kRoundTrip = 1e-9;

constexpr double kSessionBudget = 1.0;
constexpr double kDescentBudget = 5.0;
constexpr double kSchulzBudget = 2.0;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

double max_abs(const GeneralizedInterval& x) { return std::max(std::abs(x.lo), std::abs(x.hi)); }

bool rel_close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }

IntervalNumber num(double lo, double hi, ArithmeticMode mode = Tru, AlgebraOrder order = A4) {
    return IntervalNumber(lo, hi, order, mode);
}

IntervalNumber num(const GeneralizedInterval& x, ArithmeticMode mode = Tru, AlgebraOrder order = A4) {
    return IntervalNumber(x, order, mode);
}

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ------------------------------------------------------------------ 1

Outcome session() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    struct Row {
        const char* name;
        std::function<IntervalNumber(const IntervalNumber&, const IntervalNumber&, const IntervalNumber&)> f;
        GeneralizedInterval semantic;
        GeneralizedInterval truth;
    };
    const Row rows[] = {
        {"a-a", [](auto& a, auto&, auto&) { return a - a; }, {-3, 3}, {0, 0}},
        {"a*b", [](auto& a, auto& b, auto&) { return a * b; }, {-4, 8}, {-4, 8}},
        {"b*a", [](auto& a, auto& b, auto&) { return b * a; }, {-4, 8}, {-4, 8}},
        {"b/b", [](auto&, auto& b, auto&) { return b / b; }, {1, 1}, {1, 1}},
        {"c+1", [](auto&, auto&, auto& c) { return c + 1.0; }, {4, 13}, {4, 13}},
        {"a*(b+c)", [](auto& a, auto& b, auto& c) { return a * (b + c); }, {-16, 32}, {-16, 32}},
        {"a*b+a*c", [](auto& a, auto& b, auto& c) { return a * b + a * c; }, {-16, 32}, {-16, 32}},
        {"(a+b)/c", [](auto& a, auto& b, auto& c) { return (a + b) / c; }, {0.5, 0.916666666667}, {0.5, 0.916666666667}},
        {"a/c+b/c", [](auto& a, auto& b, auto& c) { return a / c + b / c; }, {0.5, 0.916666666667}, {0.5, 0.916666666667}},
        {"a*(b-c)", [](auto& a, auto& b, auto& c) { return a * (b - c); }, {-28, 20}, {-16, 8}},
        {"a*b-a*c", [](auto& a, auto& b, auto& c) { return a * b - a * c; }, {-28, 20}, {-16, 8}},
        {"(a-b)/c", [](auto& a, auto& b, auto& c) { return (a - b) / c; }, {-0.833333333333, -0.416666666667},
         {-1.08333333333, -0.166666666667}},
        {"a/c-b/c", [](auto& a, auto& b, auto& c) { return a / c - b / c; }, {-1.08333333333, -0.166666666667},
         {-1.08333333333, -0.166666666667}},
    };
    auto check = [&](const std::string& what, const GeneralizedInterval& got, const GeneralizedInterval& want) {
        if (!rel_close(got.lo, want.lo, kSessionRel) || !rel_close(got.hi, want.hi, kSessionRel)) {
            o.fail(what + " gave " + to_string(got) + ", expected " + to_string(want));
        }
    };
    int checked = 0;
    for (ArithmeticMode mode : {Sem, Tru}) {
        const auto a = num(-1, 2, mode), b = num(3, 4, mode), c = num(3, 12, mode);
        for (const auto& r : rows) {
            check(std::string(to_string(mode)) + " " + r.name, r.f(a, b, c).canonical(),
                  mode == Sem ? r.semantic : r.truth);
            ++checked;
        }
        for (const char* text : {"x^2-2*x+1", "x*(x-2)+1", "(x-1)^2"}) {
            const auto ast = expr::parse(text);
            for (const auto& [at, sem, tru] :
                 {std::tuple{GeneralizedInterval{-1, 2}, GeneralizedInterval{-7, 8}, GeneralizedInterval{-1, 2}},
                  std::tuple{GeneralizedInterval{3, 4}, GeneralizedInterval{2, 11}, GeneralizedInterval{4, 9}}}) {
                expr::Bindings env;
                env.emplace("x", num(at, mode));
                check(std::string(to_string(mode)) + " " + text + " at " + to_string(at),
                      expr::eval(ast, env, mode).canonical(), mode == Sem ? sem : tru);
                ++checked;
            }
        }
    }
    const double secs = elapsed_since(t0);
    if (secs >= kSessionBudget) o.fail(fmt("runtime %.3f s over budget", secs));
    if (o.pass) o.detail = fmt("%.0f values match to %g relative", checked, kSessionRel);
    return o;
}

// ------------------------------------------------------------------ 2

Outcome ladder() {
    Outcome o;
    const GeneralizedInterval x{-2, 3}, y{-4, 2};
    const std::pair<AlgebraOrder, GeneralizedInterval> want[] = {{A4, {-16, 14}}, {A5, {-12, 10}}, {A7, {-12, 8}}};
    for (const auto& [order, w] : want) {
        const auto p = (num(x, Tru, order) * num(y, Tru, order)).canonical();
        if (p.lo != w.lo || p.hi != w.hi) {
            o.fail(fmt("order %.0f gave ", static_cast<double>(dimension(order))) + to_string(p));
        }
    }
    const auto m = minkowski::mul(x, y);
    if (m.lo != -12 || m.hi != 8) o.fail("minkowski gave " + to_string(m));
    if (o.pass) o.detail = "[-16,14] [-12,10] [-12,8], minkowski [-12,8]";
    return o;
}

// ------------------------------------------------------------------ 3

Outcome minkowski_agreement() {
    Outcome o;
    oracle::Sampler s(1003);
    int tested = 0;
    while (tested < kSamples) {
        const auto x = s.proper();
        const auto y = s.proper();
        if (x.contains_zero() && y.contains_zero()) continue;
        ++tested;
        const auto p = (num(x) * num(y)).canonical();
        const auto m = oracle::mink_mul({x.lo, x.hi}, {y.lo, y.hi});
        const double scale = max_abs(x) * max_abs(y);
        if (!oracle::close_ulps(p.lo, m.lo, scale, kMinkowskiUlps) ||
            !oracle::close_ulps(p.hi, m.hi, scale, kMinkowskiUlps)) {
            o.fail(to_string(x) + " * " + to_string(y) + " gave " + to_string(p));
        }
    }
    if (o.pass) o.detail = fmt("%.0f pairs within %.0f ulps of |x|max*|y|max", tested, kMinkowskiUlps);
    return o;
}

// ------------------------------------------------------------------ 4

Outcome enclosure_chain() {
    Outcome o;
    oracle::Sampler s(1004);
    for (int k = 0; k < kSamples; ++k) {
        const auto x = s.zero_containing();
        const auto y = s.zero_containing();
        const double slack = kMinkowskiUlps * std::numeric_limits<double>::epsilon() * max_abs(x) * max_abs(y);
        const auto m = oracle::mink_mul({x.lo, x.hi}, {y.lo, y.hi});
        oracle::Box inner{m.lo, m.hi};
        for (AlgebraOrder order : {A7, A5, A4}) {
            const auto p = (num(x, Tru, order) * num(y, Tru, order)).canonical();
            const oracle::Box outer{p.lo, p.hi};
            if (!oracle::box_contains(outer, inner, slack)) {
                o.fail(fmt("order %.0f breaks the chain at ", static_cast<double>(dimension(order))) + to_string(x) +
                       " * " + to_string(y));
            }
            inner = outer;
        }
    }
    if (o.pass) o.detail = fmt("%.0f zero-containing pairs, minkowski <= A7 <= A5 <= A4", kSamples);
    return o;
}

// ------------------------------------------------------------------ 5

Outcome distributivity() {
    Outcome o;
    oracle::Sampler s(1005);
    long checks = 0;
    for (AlgebraOrder order : oracle::kOrders) {
        for (ArithmeticMode mode : oracle::kModes) {
            for (int k = 0; k < kSamples; ++k) {
                const auto x = num(s.proper_dyadic(4), mode, order);
                const auto y = num(s.proper_dyadic(4), mode, order);
                const auto z = num(s.proper_dyadic(4), mode, order);
                ++checks;
                if (!identical(x * (y + z), x * y + x * z)) o.fail("x(y+z) != xy+xz at " + x.to_string());
                if (mode == Tru) {
                    ++checks;
                    if (!identical(x * (y - z), x * y - x * z)) o.fail("x(y-z) != xy-xz at " + x.to_string());
                }
            }
        }
    }
    if (o.pass) o.detail = fmt("%.0f identities, identical coefficients on the 1/8 grid", static_cast<double>(checks));
    return o;
}

// ------------------------------------------------------------------ 6

Outcome element_inverse() {
    Outcome o;
    oracle::Sampler s(1006);
    int tested = 0;
    const auto unit = AlgebraElement::unit(A4);
    while (tested < kSamples) {
        const auto u = s.element(A4);
        if (!is_invertible(u)) continue;
        ++tested;
        const auto inv = alg_inv(u);
        const auto p = alg_mul(u, inv);
        double nu = 0.0, ninv = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            nu += std::abs(u[i]);
            ninv += std::abs(inv[i]);
        }
        for (std::size_t i = 0; i < 4; ++i) {
            if (!oracle::close_ulps(p[i], unit[i], nu * ninv, kInverseUlps)) {
                o.fail(fmt("coefficient %.0f off by %g", static_cast<double>(i), p[i] - unit[i]));
            }
        }
    }
    for (ArithmeticMode mode : oracle::kModes) {
        const auto q = (num(3, 4, mode) / num(3, 4, mode)).collapse();
        if (q.lo != 1.0 || q.hi != 1.0) o.fail("b/b gave " + to_string(q));
    }
    if (o.pass) o.detail = fmt("%.0f elements within %.0f ulps of |u|1|u^-1|1, b/b = [1,1]", tested, kInverseUlps);
    return o;
}

// ------------------------------------------------------------------ 7

Outcome descent() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto f = expr::as_function(expr::parse("x*exp(x)"));
    const auto x0 = IntervalNumber::centered(2, 0.1);
    OptimizerConfig cfg;
    cfg.rho = 1e-2;
    cfg.eps = 1e-6;

    cfg.style = DerivativeStyle::Midpoint;
    const auto mid = gradient_descent(f, x0, cfg);
    const double m1 = mid.x.midpoint(), w1 = mid.x.width();
    if (std::abs(m1 + 1) > kDescentTol) o.fail(fmt("midpoint style ends at %.9g, off by %.3g", m1, m1 + 1));
    if (std::abs(w1 - x0.width()) > kWidthKeep * x0.width()) o.fail(fmt("midpoint style width %.6g", w1));

    cfg.style = DerivativeStyle::Full;
    const auto full = gradient_descent(f, x0, cfg);
    const double m2 = full.x.midpoint(), w2 = full.x.width();
    if (std::abs(m2 + 1) > kDescentTol) o.fail(fmt("full style ends at %.9g", m2));
    if (w2 >= kWidthPoint) o.fail(fmt("full style width %.3g", w2));

    const double secs = elapsed_since(t0);
    if (secs >= kDescentBudget) o.fail(fmt("runtime %.3f s over budget", secs));
    const std::string summary = fmt("midpoint style %.9g width %.3g; ", m1, w1) +
                                fmt("full style %.9g width %.3g", m2, w2);
    o.detail = o.pass ? summary : o.detail + "; " + summary;
    return o;
}

// ------------------------------------------------------------------ 8

Outcome newton() {
    Outcome o;
    OptimizerConfig cfg;
    cfg.eps = 1e-10;
    cfg.style = DerivativeStyle::Full;
    const auto r = newton_raphson(expr::as_function(expr::parse("x*exp(x)")), IntervalNumber::centered(2, 0.1), cfg);
    const std::size_t iters = r.trace.size() - 1;
    if (std::abs(r.x.midpoint() + 1) > kNewtonTol) o.fail(fmt("x*exp(x) ends at %.12g", r.x.midpoint()));
    if (iters > kNewtonMaxIter) o.fail(fmt("%.0f iterations", static_cast<double>(iters)));
    const auto quartic = expr::as_function(expr::parse("(x^2-1)^2"));
    std::string ends;
    for (double start : {-2.0, 0.3, 2.0}) {
        const auto q = newton_raphson(quartic, IntervalNumber::centered(start, 0.1), cfg);
        const double m = q.x.midpoint();
        double best = 1e300;
        for (double c : {-1.0, 0.0, 1.0}) best = std::min(best, std::abs(m - c));
        if (best > kNewtonTol) o.fail(fmt("quartic from %g ends at %.12g", start, m));
        ends += fmt(" %.9g", m);
    }
    if (o.pass) o.detail = fmt("x*exp(x) -> %.12g in %.0f iterations; quartic ->", r.x.midpoint(),
                               static_cast<double>(iters)) + ends;
    return o;
}

// ------------------------------------------------------------------ 9

Outcome power() {
    Outcome o;
    const double printed = 5.3722813;
    const IntervalVector ones(std::vector<IntervalNumber>(2, IntervalNumber::one(A4, Tru)));
    const auto r = power_iterate(demo_matrix_2x2(0.0), ones, 10);
    if (std::abs(r.eigenvalue.midpoint() - printed) > kEigenTol) o.fail(fmt("eigenvalue %.9g", r.eigenvalue.midpoint()));
    if (std::abs(r.eigenvector[0].midpoint() - 0.4159736) > kEigenTol ||
        std::abs(r.eigenvector[1].midpoint() - 0.9093767) > kEigenTol) {
        o.fail(fmt("eigenvector (%.9g, %.9g)", r.eigenvector[0].midpoint(), r.eigenvector[1].midpoint()));
    }
    // The printed value is a 7-decimal rounding, so containment is read within that rounding.
    const double exact = oracle::power_iteration({{1, 2}, {3, 4}}, 10).lambda;
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 9; ++i) {
        const double eps = std::pow(10.0, -i);
        const auto ev = power_iterate(demo_matrix_2x2(eps), ones, 10).eigenvalue.canonical();
        if (ev.lo > printed + kEigenTol || ev.hi < printed - kEigenTol) o.fail(fmt("eps %g misses 5.3722813", eps));
        if (ev.lo > exact || ev.hi < exact) o.fail(fmt("eps %g misses the point eigenvalue", eps));
        if (!(ev.width() < prev)) o.fail(fmt("width not decreasing at eps %g", eps));
        prev = ev.width();
    }
    if (o.pass) o.detail = fmt("eigenvalue %.9g, eigenvector (%.9g, %.9g), widths decreasing", r.eigenvalue.midpoint(),
                               r.eigenvector[0].midpoint(), r.eigenvector[1].midpoint());
    return o;
}

// ------------------------------------------------------------------ 10

std::vector<std::vector<double>> adjugate_inverse(const std::vector<std::vector<double>>& m) {
    auto cof = [&](int i, int j) {
        const int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    const double det = m[0][0] * cof(0, 0) + m[0][1] * cof(0, 1) + m[0][2] * cof(0, 2);
    std::vector<std::vector<double>> inv(3, std::vector<double>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) inv[i][j] = cof(j, i) / det;
    return inv;
}

const double kPrinted001[9][2] = {
    {-0.267860324247, -0.267853946662}, {0.160698378764, 0.160730266691}, {0.124977730269, 0.125022373367},
    {0.160698378764, 0.160730266691},   {-0.196508106182, -0.196348666547}, {0.124888651345, 0.125111866834},
    {0.124977730269, 0.125022373367},   {0.124888651345, 0.125111866834}, {-0.125155888117, -0.124843386433}};

Outcome schulz() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto adj = adjugate_inverse({{1, 4, 5}, {4, 2, 6}, {5, 6, 3}});
    const auto inv0 = schulz_invert(demo_matrix_3x3(0.0));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const auto e = inv0(i, j).canonical();
            if (std::abs(e.lo - adj[i][j]) > kSchulzTol || std::abs(e.hi - adj[i][j]) > kSchulzTol) {
                o.fail(fmt("eps 0 entry (%.0f,%.0f) ", static_cast<double>(i), static_cast<double>(j)) + to_string(e));
            }
        }
    if (std::abs(adj[0][0] + 0.2678571) > kSchulzTol || std::abs(adj[0][1] - 0.1607143) > kSchulzTol ||
        std::abs(adj[0][2] - 0.125) > kSchulzTol) {
        o.fail("adjugate first row disagrees with the printed row");
    }
    const auto m1 = demo_matrix_3x3(0.01);
    const auto inv1 = schulz_invert(m1);
    for (std::size_t k = 0; k < 9; ++k) {
        const auto e = inv1.entries()[k].canonical();
        if (std::abs(e.lo - kPrinted001[k][0]) > kSchulzTol || std::abs(e.hi - kPrinted001[k][1]) > kSchulzTol) {
            o.fail(fmt("eps 0.01 entry %.0f ", static_cast<double>(k)) + to_string(e));
        }
    }
    double worst_off = 0.0;
    for (const auto& [m, inv] : {std::pair{demo_matrix_3x3(0.0), inv0}, std::pair{m1, inv1}}) {
        for (const auto& p : {matmul(inv, m), matmul(m, inv)}) {
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) {
                    const auto e = p(i, j).canonical();
                    if (i == j) {
                        if (std::abs(e.lo - 1) > kUnitOffDiag || std::abs(e.hi - 1) > kUnitOffDiag)
                            o.fail("diagonal entry " + to_string(e));
                    } else {
                        worst_off = std::max(worst_off, max_abs(e));
                        if (max_abs(e) >= kUnitOffDiag) o.fail("off-diagonal entry " + to_string(e));
                    }
                }
        }
        const auto back = schulz_invert(inv);
        for (std::size_t k = 0; k < 9; ++k) {
            if (std::abs(back.entries()[k].lo() - m.entries()[k].lo()) > kRoundTrip ||
                std::abs(back.entries()[k].hi() - m.entries()[k].hi()) > kRoundTrip) {
                o.fail("(M^-1)^-1 entry " + back.entries()[k].to_string());
            }
        }
    }
    const double secs = elapsed_since(t0);
    if (secs >= kSchulzBudget) o.fail(fmt("runtime %.3f s over budget", secs));
    if (o.pass) o.detail = fmt("eps 0 and 0.01 match, worst off-diagonal %.3g", worst_off);
    return o;
}

// ------------------------------------------------------------------ 11

Outcome monotony() {
    Outcome o;
    oracle::Sampler s(1011);
    for (AlgebraOrder order : oracle::kOrders) {
        for (int k = 0; k < kSamples; ++k) {
            const auto x2 = s.proper();
            const double t1 = s.real(0, 1), t2 = s.real(0, 1);
            const GeneralizedInterval x1{x2.lo + std::min(t1, t2) * (x2.hi - x2.lo),
                                         x2.lo + std::max(t1, t2) * (x2.hi - x2.lo)};
            const auto z = s.proper();
            const auto big = (num(x2, Tru, order) * num(z, Tru, order)).canonical();
            const auto small = (num(x1, Tru, order) * num(z, Tru, order)).canonical();
            const double slack = kMinkowskiUlps * std::numeric_limits<double>::epsilon() * max_abs(x2) * max_abs(z);
            if (!oracle::box_contains({big.lo, big.hi}, {small.lo, small.hi}, slack)) {
                o.fail(fmt("order %.0f: ", static_cast<double>(dimension(order))) + to_string(x1) + " in " +
                       to_string(x2) + " times " + to_string(z));
            }
        }
    }
    if (o.pass) o.detail = fmt("%.0f triples per order", kSamples);
    return o;
}

}  // namespace

int main() {
    report(1, "session values in both modes", session);
    report(2, "multiplication ladder", ladder);
    report(3, "order-4 product equals minkowski product", minkowski_agreement);
    report(4, "enclosure and tightness chain", enclosure_chain);
    report(5, "distributivity", distributivity);
    report(6, "inverse", element_inverse);
    report(7, "gradient descent on x*exp(x)", descent);
    report(8, "newton-raphson", newton);
    report(9, "power iteration", power);
    report(10, "schulz inversion", schulz);
    report(11, "monotony of products", monotony);
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
