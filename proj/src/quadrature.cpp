#include "pqbasis/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "pqbasis/errors.hpp"

namespace pqbasis::quad {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kUflow = std::numeric_limits<double>::min();

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr std::array<double, 11> kXgk = {
    0.99565716302580809, 0.97390652851717174, 0.93015749135570824, 0.86506336668898454,
    0.78081772658641690, 0.67940956829902444, 0.56275713466860466, 0.43339539412924721,
    0.29439286270146020, 0.14887433898163122, 0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874, 0.032558162307964725, 0.054755896574351995, 0.075039674810919957,
    0.093125454583697601, 0.10938715880229764,  0.12349197626206584,  0.13470921731147334,
    0.14277593857706009,  0.14773910490133849,  0.1494455540029169};
// Gauss weights for kXgk[1], kXgk[3], ..., kXgk[9].
constexpr std::array<double, 5> kWg = {0.066671344308688138, 0.14945134915058059,
                                       0.21908636251598204, 0.26926671930999635,
                                       0.29552422471475287};
constexpr std::size_t kEvalsPerPanel = 21;

// Evaluates the integrand of one domain at a local coordinate s.
using DomainFn = std::function<double(int domain, double s)>;

struct Panel {
  int domain;
  double a;
  double b;
  double value;
  double error;
};

double checked(const DomainFn& g, int domain, double s) {
  const double v = g(domain, s);
  if (!std::isfinite(v)) throw NonFiniteIntegrand("quadrature: integrand is not finite", s);
  return v;
}

Panel kronrod21(const DomainFn& g, int domain, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(g, domain, center);
  double resg = 0.0;
  double resk = fc * kWgk[10];
  double resabs = std::fabs(resk);
  std::array<double, 10> f1{};
  std::array<double, 10> f2{};
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = checked(g, domain, center - dx);
    f2[j] = checked(g, domain, center + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[10] * std::fabs(fc - reskh);
  for (std::size_t j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::fabs(f1[j] - reskh) + std::fabs(f2[j] - reskh));
  }
  const double scale = std::fabs(half);
  const double result = resk * half;
  resabs *= scale;
  resasc *= scale;
  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > kUflow / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  return {domain, a, b, result, err};
}

bool splittable(const Panel& p) {
  const double mid = 0.5 * (p.a + p.b);
  const double span = std::max(std::fabs(p.a), std::fabs(p.b));
  return mid > p.a && mid < p.b && (p.b - p.a) > 16.0 * kEps * span;
}

// Neumaier-compensated sum of panel values and errors in left-endpoint order.
QuadResult assemble(std::vector<Panel> panels, std::size_t evaluations) {
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) {
    return x.domain != y.domain ? x.domain < y.domain : x.a < y.a;
  });
  double sum = 0.0;
  double comp = 0.0;
  double err = 0.0;
  for (const auto& p : panels) {
    const double t = sum + p.value;
    if (std::fabs(sum) >= std::fabs(p.value)) {
      comp += (sum - t) + p.value;
    } else {
      comp += (p.value - t) + sum;
    }
    sum = t;
    err += p.error;
  }
  return {sum + comp, err, evaluations};
}

QuadResult adaptive(const DomainFn& g, const std::vector<Panel>& initial, double tol,
                    std::size_t budget) {
  if (!(tol > 0.0)) throw DomainError("quadrature: tolerance must be positive");
  std::vector<Panel> panels;
  std::size_t evaluations = 0;
  for (const auto& p : initial) {
    if (evaluations + kEvalsPerPanel > budget) {
      throw BudgetExceeded("quadrature: budget too small for the initial mesh", 0.0,
                           std::numeric_limits<double>::infinity());
    }
    panels.push_back(kronrod21(g, p.domain, p.a, p.b));
    evaluations += kEvalsPerPanel;
  }

  auto by_error = [&panels](std::size_t i, std::size_t j) {
    if (panels[i].error != panels[j].error) return panels[i].error < panels[j].error;
    return i > j;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_error)> heap(by_error);
  double total_error = 0.0;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    heap.push(i);
    total_error += panels[i].error;
  }

  auto exact_total = [&panels] {
    double e = 0.0;
    for (const auto& p : panels) e += p.error;
    return e;
  };

  while (true) {
    if (total_error <= tol) {
      total_error = exact_total();
      if (total_error <= tol) break;
    }
    if (heap.empty()) {
      const auto best = assemble(panels, evaluations);
      throw BudgetExceeded("quadrature: roundoff limit reached before tolerance", best.value,
                           best.error_estimate);
    }
    const std::size_t worst = heap.top();
    heap.pop();
    const Panel parent = panels[worst];
    if (!splittable(parent)) continue;
    if (evaluations + 2 * kEvalsPerPanel > budget) {
      const auto best = assemble(panels, evaluations);
      throw BudgetExceeded("quadrature: evaluation budget exceeded", best.value,
                           best.error_estimate);
    }
    const double mid = 0.5 * (parent.a + parent.b);
    panels[worst] = kronrod21(g, parent.domain, parent.a, mid);
    panels.push_back(kronrod21(g, parent.domain, mid, parent.b));
    evaluations += 2 * kEvalsPerPanel;
    total_error += panels[worst].error + panels.back().error - parent.error;
    heap.push(worst);
    heap.push(panels.size() - 1);
  }
  return assemble(std::move(panels), evaluations);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol,
                     std::size_t budget) {
  if (!(std::isfinite(a) && std::isfinite(b) && a < b)) {
    throw DomainError("quadrature: interval must be finite with a < b");
  }
  const DomainFn g = [&f](int, double s) { return f(s); };
  std::vector<Panel> initial;
  constexpr int kInitial = 4;
  for (int i = 0; i < kInitial; ++i) {
    const double lo = a + (b - a) * i / kInitial;
    const double hi = i + 1 == kInitial ? b : a + (b - a) * (i + 1) / kInitial;
    initial.push_back({0, lo, hi, 0.0, 0.0});
  }
  return adaptive(g, initial, tol, budget);
}

QuadResult integrate(const std::function<double(double)>& f, double tol, std::size_t budget) {
  return integrate(f, 0.0, 1.0, tol, budget);
}

QuadResult integrate_split(const SplitIntegrand& f, double tol, std::size_t budget) {
  // Domain 0: x = s in [0, 1/2]. Domain 1: x = 1 - t, t in [0, 1/2].
  const DomainFn g = [&f](int domain, double s) {
    return domain == 0 ? f(s, 1.0 - s) : f(1.0 - s, s);
  };
  const std::vector<Panel> initial = {
      {0, 0.0, 0.25, 0.0, 0.0}, {0, 0.25, 0.5, 0.0, 0.0},
      {1, 0.0, 0.25, 0.0, 0.0}, {1, 0.25, 0.5, 0.0, 0.0}};
  return adaptive(g, initial, tol, budget);
}

}  // namespace pqbasis::quad
