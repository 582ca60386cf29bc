#include "monpure/svg.hpp"

#include <algorithm>
#include <sstream>

namespace monpure {

namespace {

constexpr int kUnit = 48;
constexpr int kMargin = 40;

// deterministic fixed-point rendering with two decimals, round half up
std::string px(const Rat& world, bool flip, const Rat& world_max) {
  Rat v = flip ? Rat(kMargin) + (world_max - world) * kUnit
               : Rat(kMargin) + world * kUnit;
  Int scaled = rat_floor(v * 100 + make_rat(1, 2));
  Int whole = scaled / 100, frac = abs(scaled % 100);
  std::ostringstream os;
  if (scaled < 0 && whole == 0) os << '-';
  os << whole.get_str() << '.' << (frac < 10 ? "0" : "") << frac.get_str();
  return os.str();
}

}  // namespace

std::string emit_svg_plot(PurityEngine& eng, const PlotOptions& opt) {
  const AffineMonoid& M = eng.monoid();
  if (M.ambient_dim() != 2)
    throw InputError("plot: only ambient dimension 2 is supported");
  if (opt.m < 1) throw InputError("plot: m must be >= 1");

  std::vector<RatVector> vm;
  try {
    vm = eng.compute_Vm(opt.m).elements;
  } catch (const BudgetError&) {
  }

  RatVector alpha(IntVector(2, 0), 1);
  if (opt.alpha) {
    alpha = *opt.alpha;
    alpha.numerator_for_den(opt.m);  // precondition: alpha in (1/m)Z^2
    if (!eng.is_pure_translation(opt.m, alpha))
      throw InputError("plot: alpha is not a pure translation for this m");
  } else if (!vm.empty()) {
    alpha = vm.front();
    for (const RatVector& a : vm)
      if (a.degree() > alpha.degree() ||
          (a.degree() == alpha.degree() && rv_less(alpha, a)))
        alpha = a;
  }

  const Rat window = opt.degree_window;
  auto base_window = graded_window(M, window);
  std::vector<RatVector> translated;
  for (const WindowElement& w : base_window) {
    RatVector p = rv_add(rv_from_int(w.point), alpha);
    if (p.degree() <= window) translated.push_back(p);
  }

  Rat world_max = window + make_rat(1, 2);
  int canvas = 2 * kMargin + static_cast<int>(rat_ceil(world_max * kUnit).get_si());
  auto X = [&](const Rat& x) { return px(x, false, world_max); };
  auto Y = [&](const Rat& y) { return px(y, true, world_max); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas
      << "\" height=\"" << canvas << "\" viewBox=\"0 0 " << canvas << ' ' << canvas
      << "\">\n";
  svg << "<style>.monoid-point{fill:#1a486e;}"
         ".translate-point{stroke:#b03030;stroke-width:2;}"
         ".vm-point{fill:none;stroke:#2a8f4a;stroke-width:2;}"
         ".translated-cone{fill:#d9c9a3;fill-opacity:0.55;}"
         ".grid{stroke:#dddddd;stroke-width:1;}"
         ".axis{stroke:#555555;stroke-width:1.5;}</style>\n";
  svg << "<clipPath id=\"frame\"><rect x=\"" << kMargin / 2 << "\" y=\"" << kMargin / 2
      << "\" width=\"" << canvas - kMargin << "\" height=\"" << canvas - kMargin
      << "\"/></clipPath>\n";

  for (Int g = 0; g <= rat_floor(window); ++g) {
    Rat t((g));
    svg << "<line class=\"grid\" x1=\"" << X(t) << "\" y1=\"" << Y(Rat(0))
        << "\" x2=\"" << X(t) << "\" y2=\"" << Y(world_max) << "\"/>\n";
    svg << "<line class=\"grid\" x1=\"" << X(Rat(0)) << "\" y1=\"" << Y(t)
        << "\" x2=\"" << X(world_max) << "\" y2=\"" << Y(t) << "\"/>\n";
  }
  svg << "<line class=\"axis\" x1=\"" << X(Rat(0)) << "\" y1=\"" << Y(Rat(0))
      << "\" x2=\"" << X(world_max) << "\" y2=\"" << Y(Rat(0)) << "\"/>\n";
  svg << "<line class=\"axis\" x1=\"" << X(Rat(0)) << "\" y1=\"" << Y(Rat(0))
      << "\" x2=\"" << X(Rat(0)) << "\" y2=\"" << Y(world_max) << "\"/>\n";

  // shaded translated cone: alpha plus the cone between the extreme rays
  std::vector<IntVector> rays;
  for (const FaceDescriptor& f : eng.geometry().faces)
    if (f.dim == 1) rays.push_back(M.generators()[f.generator_indices.front()]);
  if (rays.size() == 2) {
    Rat far(4 * static_cast<int>(rat_ceil(window).get_si()));
    auto corner = [&](const IntVector& r) {
      Rat cx = alpha.coord(0) + Rat(r[0]) * far;
      Rat cy = alpha.coord(1) + Rat(r[1]) * far;
      return std::make_pair(cx, cy);
    };
    auto [ax, ay] = std::make_pair(alpha.coord(0), alpha.coord(1));
    auto [r1x, r1y] = corner(rays[0]);
    auto [r2x, r2y] = corner(rays[1]);
    svg << "<polygon class=\"translated-cone\" clip-path=\"url(#frame)\" points=\""
        << X(ax) << ',' << Y(ay) << ' ' << X(r1x) << ',' << Y(r1y) << ' '
        << X(r1x + r2x - ax) << ',' << Y(r1y + r2y - ay) << ' ' << X(r2x) << ','
        << Y(r2y) << "\"/>\n";
  }

  for (const WindowElement& w : base_window) {
    Rat x(w.point[0]), y(w.point[1]);
    svg << "<circle class=\"monoid-point\" cx=\"" << X(x) << "\" cy=\"" << Y(y)
        << "\" r=\"4\" data-x=\"" << rat_to_string(x) << "\" data-y=\""
        << rat_to_string(y) << "\"/>\n";
  }
  for (const RatVector& p : translated) {
    std::string cx = X(p.coord(0)), cy = Y(p.coord(1));
    svg << "<g class=\"translate-point\" data-x=\"" << rat_to_string(p.coord(0))
        << "\" data-y=\"" << rat_to_string(p.coord(1))
        << "\"><path d=\"M -4 -4 L 4 4 M -4 4 L 4 -4\" transform=\"translate(" << cx
        << ' ' << cy << ")\"/></g>\n";
  }
  for (const RatVector& a : vm) {
    if (a.degree() > window) continue;
    svg << "<circle class=\"vm-point\" cx=\"" << X(a.coord(0)) << "\" cy=\""
        << Y(a.coord(1)) << "\" r=\"8\" data-x=\"" << rat_to_string(a.coord(0))
        << "\" data-y=\"" << rat_to_string(a.coord(1)) << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace monpure
