#include "ahg/report.hpp"

#include "ahg/groebner.hpp"
#include "ahg/support.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace ahg {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string set_label(const std::set<int>& I) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int i : I) {
    if (!first) os << ",";
    first = false;
    os << (i + 1);
  }
  os << "}";
  return os.str();
}

}  // namespace

std::string emit_region_plot(const ProblemConfig& cfg, int exponent) {
  IMat B;
  if (cfg.basis) {
    validate_basis(cfg.A, *cfg.basis);
    B = *cfg.basis;
  } else {
    B = kernel_basis(cfg.A);
  }
  if (B.cols() != 2)
    throw std::invalid_argument(
        "region plot requires a rank-2 lattice (h = 2); this problem has h = " +
        std::to_string(B.cols()));
  int n = cfg.n();

  // Pick the base exponent.
  ToricGB gb = toric_groebner(B, cfg.w);
  MonomialIdeal in_w(n, gb.initial_gens);
  std::vector<FakeExponent> fes =
      fake_exponents(cfg.A, cfg.beta, standard_pairs(in_w), B);
  if (fes.empty()) throw std::invalid_argument("no fake exponent to plot");
  int pick = exponent >= 1 ? exponent - 1 : 0;
  if (pick >= static_cast<int>(fes.size()))
    throw std::invalid_argument("exponent index out of range");
  QVec v0 = fes[pick].v;

  int radius = cfg.radius;
  double R = std::max(radius, 1) + 0.75;
  const double W = 640, H = 640, M = 40;
  auto X = [&](double x) { return M + (x + R) / (2 * R) * (W - 2 * M); };
  auto Y = [&](double y) { return H - M - (y + R) / (2 * R) * (H - 2 * M); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H
      << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H
      << "\" fill=\"white\"/>\n";
  // Axes as paths so hyperplanes are the only <line> elements.
  svg << "<path d=\"M " << fmt(X(-R)) << " " << fmt(Y(0)) << " L "
      << fmt(X(R)) << " " << fmt(Y(0)) << "\" stroke=\"#cccccc\"/>\n";
  svg << "<path d=\"M " << fmt(X(0)) << " " << fmt(Y(-R)) << " L "
      << fmt(X(0)) << " " << fmt(Y(R)) << "\" stroke=\"#cccccc\"/>\n";

  // One hyperplane H_i : (v0 + x b1 + y b2)_i = 0 per coordinate.
  for (int i = 0; i < n; ++i) {
    double a = B(i, 0).get_d();
    double b = B(i, 1).get_d();
    double c = v0[i].get_d();
    std::vector<std::pair<double, double>> pts;
    auto add = [&](double x, double y) {
      if (x < -R - 1e-9 || x > R + 1e-9 || y < -R - 1e-9 || y > R + 1e-9)
        return;
      for (auto& p : pts)
        if (std::abs(p.first - x) < 1e-9 && std::abs(p.second - y) < 1e-9)
          return;
      pts.push_back({x, y});
    };
    if (a != 0 || b != 0) {
      if (b != 0) {
        add(-R, (-c - a * -R) / b);
        add(R, (-c - a * R) / b);
      }
      if (a != 0) {
        add((-c - b * -R) / a, -R);
        add((-c - b * R) / a, R);
      }
    }
    double x1 = -R, y1 = -R, x2 = -R, y2 = -R;  // degenerate fallback
    if (pts.size() >= 2) {
      x1 = pts[0].first;
      y1 = pts[0].second;
      x2 = pts[1].first;
      y2 = pts[1].second;
    }
    svg << "<line x1=\"" << fmt(X(x1)) << "\" y1=\"" << fmt(Y(y1))
        << "\" x2=\"" << fmt(X(x2)) << "\" y2=\"" << fmt(Y(y2))
        << "\" stroke=\"#3060c0\" stroke-width=\"1.2\"/>\n";
    if (pts.size() >= 2) {
      // Small arrow from the midpoint toward the positive side of H_i.
      double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
      double norm = std::max(std::abs(a), std::abs(b));
      double dx = a / norm * 0.35, dy = b / norm * 0.35;
      svg << "<path d=\"M " << fmt(X(mx)) << " " << fmt(Y(my)) << " L "
          << fmt(X(mx + dx)) << " " << fmt(Y(my + dy))
          << "\" stroke=\"#3060c0\" stroke-width=\"1.0\"/>\n";
      svg << "<text x=\"" << fmt(X(mx + 1.6 * dx)) << "\" y=\""
          << fmt(Y(my + 1.6 * dy))
          << "\" font-size=\"11\" fill=\"#3060c0\">H" << (i + 1)
          << "</text>\n";
    }
  }

  // Region labels at the minimal-weight vector of each class; minimal
  // vectors of classes in N marked with filled dots.
  if (radius >= 1) {
    SupportAnalysis sa = support_classes(v0, B, cfg.w, radius);
    for (auto& sc : sa.classes) {
      auto z = lattice_coordinates(B, sc.min_u);
      if (!z) continue;
      double zx = (*z)[0].get_d(), zy = (*z)[1].get_d();
      if (sc.in_N)
        svg << "<circle cx=\"" << fmt(X(zx)) << "\" cy=\"" << fmt(Y(zy))
            << "\" r=\"3\" fill=\"#c03030\"/>\n";
      svg << "<text x=\"" << fmt(X(zx) + 5) << "\" y=\"" << fmt(Y(zy) - 5)
          << "\" font-size=\"12\" fill=\"#202020\">" << set_label(sc.I)
          << "</text>\n";
    }
  }

  // The base point v0 sits at lattice coordinates (0, 0).
  svg << "<circle cx=\"" << fmt(X(0)) << "\" cy=\"" << fmt(Y(0))
      << "\" r=\"4\" fill=\"#208020\"/>\n";
  svg << "<text x=\"" << fmt(X(0) + 6) << "\" y=\"" << fmt(Y(0) + 12)
      << "\" font-size=\"12\" fill=\"#208020\">v0</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace ahg
