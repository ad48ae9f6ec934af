#include "liftcover/svg.hpp"

#include <algorithm>
#include <sstream>

#include "liftcover/errors.hpp"

namespace liftcover {

std::vector<QVector> polygon_vertices(const HPolyhedron& P) {
  if (P.dim() != 2) throw DimensionError("polygon_vertices needs a planar polyhedron");
  if (!bounding_box(P).bounded()) return {};
  std::vector<QVector> pts;
  for (std::size_t i = 0; i < P.num_rows(); ++i)
    for (std::size_t j = i + 1; j < P.num_rows(); ++j) {
      QMatrix A = QMatrix::from_rows({P.normal(i), P.normal(j)}, 2);
      if (determinant(A) == 0) continue;
      QVector x = *solve(A, QVector{P.b()[i], P.b()[j]});
      if (P.contains(x) && std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
    }
  if (pts.empty()) {
    // A single point cut out by parallel rows only.
    if (auto x = feasible_point(P)) pts.push_back(*x);
    return pts;
  }
  QVector c(2);
  for (const auto& p : pts) c += p;
  c = make_rational(1, static_cast<long>(pts.size())) * c;
  auto half = [&](const QVector& p) {
    QVector d = p - c;
    return (d[1] > 0 || (d[1] == 0 && d[0] > 0)) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const QVector& a, const QVector& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    QVector da = a - c, db = b - c;
    return da[0] * db[1] - da[1] * db[0] > 0;
  });
  return pts;
}

std::string fixed3(const Rational& x) {
  Integer scaled = floor_of(Rational(x * 1000 + Rational(1, 2)));
  bool negative = scaled < 0;
  Integer mag = abs(scaled);
  std::string digits = mag.get_str();
  while (digits.size() < 4) digits.insert(digits.begin(), '0');
  std::string out = (negative ? "-" : "") + digits.substr(0, digits.size() - 3) + "." + digits.substr(digits.size() - 3);
  return out == "-0.000" ? "0.000" : out;
}

namespace {

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7"};

struct Canvas {
  long range, scale;
  std::ostringstream out;

  std::string px(const Rational& v) const { return fixed3(Rational((v + range) * scale)); }
  std::string py(const Rational& v) const { return fixed3(Rational((range - v) * scale)); }

  void shape(const std::vector<QVector>& pts, const std::string& style) {
    if (pts.size() == 1) {
      out << "  <circle cx=\"" << px(pts[0][0]) << "\" cy=\"" << py(pts[0][1]) << "\" r=\"2.000\" " << style << "/>\n";
      return;
    }
    out << "  <polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << px(pts[i][0]) << "," << py(pts[i][1]);
    out << "\" " << style << "/>\n";
  }
};

}  // namespace

std::string plot_svg(const LiftingContext& ctx, PlotOptions options) {
  if (ctx.lattice().dim() != 2) throw PreconditionError("plot needs a 2-d pair");
  if (options.range <= 0 || options.scale <= 0) throw PreconditionError("plot range and scale must be positive");
  long R = options.range;
  HPolyhedron box = HPolyhedron::box(QVector::filled(2, -R), QVector::filled(2, R));
  Canvas cv{R, options.scale, {}};
  long size = 2 * R * options.scale;
  cv.out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
         << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  cv.out << "  <rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";

  // Spindles in original coordinates, their W_S translates, then B on top.
  std::vector<HPolyhedron> spindles;
  const auto& red = ctx.reduction();
  if (ctx.body().is_halfspace()) {
    spindles.push_back(HPolyhedron(2));
  } else {
    for (const auto& sp : ctx.working_region().spindles)
      spindles.push_back(red ? sp.region.preimage(red->coordinates, QVector(sp.region.dim())) : sp.region);
  }
  const QMatrix& W = ctx.translation_lattice().basis();
  long reach = 2 * R + 2;
  cv.out << "  <g id=\"translates\" fill-opacity=\"0.25\" stroke-width=\"0.5\">\n";
  for (std::size_t j = 0; j < spindles.size() && !ctx.body().is_halfspace(); ++j) {
    std::string colour = kPalette[j % 8];
    // Skip slivers where a full-dimensional translate only grazes the frame.
    std::size_t min_pts = polygon_vertices(spindles[j]).size() >= 3 ? 3 : 1;
    std::vector<long> lo(W.cols(), -reach), c = lo;
    for (;;) {
      QVector coeff(W.cols());
      bool origin = true;
      for (std::size_t i = 0; i < W.cols(); ++i) {
        coeff[i] = c[i];
        origin = origin && c[i] == 0;
      }
      if (!origin) {
        auto pts = polygon_vertices(spindles[j].translated(W * coeff).intersect(box));
        if (pts.size() >= min_pts) cv.shape(pts, "fill=\"" + colour + "\" stroke=\"" + colour + "\"");
      }
      std::size_t i = 0;
      while (i < c.size() && c[i] == reach) c[i++] = -reach;
      if (i == c.size()) break;
      ++c[i];
    }
  }
  cv.out << "  </g>\n  <g id=\"spindles\" fill-opacity=\"0.7\" stroke=\"black\" stroke-width=\"1\">\n";
  for (std::size_t j = 0; j < spindles.size(); ++j) {
    auto pts = polygon_vertices(spindles[j].intersect(box));
    if (!pts.empty()) cv.shape(pts, std::string("fill=\"") + kPalette[j % 8] + "\"");
  }
  cv.out << "  </g>\n";
  auto body = polygon_vertices(ctx.body().polyhedron().intersect(box));
  if (!body.empty()) cv.shape(body, "fill=\"none\" stroke=\"black\" stroke-width=\"2\"");
  cv.out << "  <g id=\"lattice\" fill=\"black\">\n";
  for (const auto& s : enumerate_points(ctx.lattice(), QVector::filled(2, -R), QVector::filled(2, R)))
    cv.out << "    <circle cx=\"" << cv.px(s[0]) << "\" cy=\"" << cv.py(s[1]) << "\" r=\"3.000\"/>\n";
  cv.out << "  </g>\n";
  const auto& rep = ctx.check_covering();
  if (rep.witness) {
    const QVector& x = *rep.witness;
    cv.out << "  <circle id=\"witness\" cx=\"" << cv.px(x[0]) << "\" cy=\"" << cv.py(x[1])
           << "\" r=\"5.000\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n";
  }
  cv.out << "</svg>\n";
  return cv.out.str();
}

}  // namespace liftcover
