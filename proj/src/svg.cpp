#include "sphsep/svg.hpp"

#include "sphsep/linalg.hpp"
#include "sphsep/rational.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace sphsep {

namespace {

constexpr double kHalf = 400.0;   // viewport is 800x800, origin centered
constexpr double kRadius = 300.0; // unit circle in pixels
constexpr double kRayLength = 360.0;

std::string fmt(double v) {
  if (std::abs(v) < 5e-5) v = 0.0;  // avoid "-0.0000"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// y points up in math coordinates.
std::string px(double x, double y) { return fmt(kHalf + x) + "," + fmt(kHalf - y); }

void line(std::ostream& os, double x1, double y1, double x2, double y2,
          const std::string& cls, const std::string& style) {
  os << "  <line class=\"" << cls << "\" x1=\"" << fmt(kHalf + x1) << "\" y1=\""
     << fmt(kHalf - y1) << "\" x2=\"" << fmt(kHalf + x2) << "\" y2=\"" << fmt(kHalf - y2)
     << "\" " << style << "/>\n";
}

struct Arc {
  double lo = 0.0, hi = 0.0;  // radians, lo <= hi
  bool empty = true;
};

// Feasible angles of a 2D instance side, as one contiguous arc around a
// reference direction known to lie inside.
Arc wedge_around(const std::vector<double>& center_angles, double reference) {
  // Each constraint admits (c - pi/2, c + pi/2) around its center angle.
  Arc arc;
  double lo = -M_PI, hi = M_PI;
  for (const double c : center_angles) {
    double delta = std::remainder(c - reference, 2.0 * M_PI);
    lo = std::max(lo, delta - M_PI_2);
    hi = std::min(hi, delta + M_PI_2);
  }
  if (lo >= hi) return arc;
  arc.lo = reference + lo;
  arc.hi = reference + hi;
  arc.empty = false;
  return arc;
}

void wedge_path(std::ostream& os, const Arc& arc, double radius, const std::string& cls,
                const std::string& style) {
  const double x1 = radius * std::cos(arc.lo), y1 = radius * std::sin(arc.lo);
  const double x2 = radius * std::cos(arc.hi), y2 = radius * std::sin(arc.hi);
  const int large = (arc.hi - arc.lo) > M_PI ? 1 : 0;
  // SVG sweep flag 0 walks counterclockwise in y-up coordinates.
  os << "  <path class=\"" << cls << "\" d=\"M " << px(0, 0) << " L " << px(x1, y1) << " A "
     << fmt(radius) << " " << fmt(radius) << " 0 " << large << " 0 " << px(x2, y2)
     << " Z\" " << style << "/>\n";
}

void arc_path(std::ostream& os, const Arc& arc, double radius, const std::string& cls,
              const std::string& style) {
  const double x1 = radius * std::cos(arc.lo), y1 = radius * std::sin(arc.lo);
  const double x2 = radius * std::cos(arc.hi), y2 = radius * std::sin(arc.hi);
  const int large = (arc.hi - arc.lo) > M_PI ? 1 : 0;
  os << "  <path class=\"" << cls << "\" d=\"M " << px(x1, y1) << " A " << fmt(radius) << " "
     << fmt(radius) << " 0 " << large << " 0 " << px(x2, y2) << "\" " << style << "/>\n";
}

std::vector<double> column_angles(const MatrixXd& columns) {
  std::vector<double> angles;
  angles.reserve(static_cast<std::size_t>(columns.cols()));
  for (Index j = 0; j < columns.cols(); ++j)
    angles.push_back(std::atan2(columns(1, j), columns(0, j)));
  return angles;
}

double mean_direction(const std::vector<double>& angles) {
  double sx = 0.0, sy = 0.0;
  for (const double a : angles) {
    sx += std::cos(a);
    sy += std::sin(a);
  }
  return std::atan2(sy, sx);
}

void render_side_2d(std::ostream& os, const SideSpec& side, int which) {
  const std::string tone = which == 1 ? "#2563eb" : "#dc2626";
  const std::string fill = which == 1 ? "#2563eb22" : "#dc262622";
  const MatrixXd data = to_double(side.data);
  if (side.kind == SideSpec::Kind::Halfspaces) {
    // Boundary diameters plus the feasible wedge {Ax > 0}.
    std::vector<double> centers;
    for (Index i = 0; i < data.rows(); ++i) {
      const Eigen::Vector2d a = data.row(i).transpose().normalized();
      centers.push_back(std::atan2(a[1], a[0]));
      line(os, kRadius * a[1], -kRadius * a[0], -kRadius * a[1], kRadius * a[0],
           "halfspace-boundary side" + std::to_string(which),
           "stroke=\"" + tone + "\" stroke-width=\"1\" stroke-dasharray=\"6,6\"");
    }
    // Anchor the wedge at a certified interior direction.
    const OpenConeCheck check = open_cone_nonempty(side.data.cols(), side.data);
    if (check.nonempty) {
      const VectorXd x0 = to_double(check.interior_point);
      const Arc arc = wedge_around(centers, std::atan2(x0[1], x0[0]));
      if (!arc.empty)
        wedge_path(os, arc, kRadius, "cone side" + std::to_string(which), "fill=\"" + fill + "\"");
    }
    return;
  }
  // Generators: rays plus their conic wedge.
  std::vector<double> angles;
  for (Index j = 0; j < data.cols(); ++j) {
    const Eigen::Vector2d g = data.col(j).normalized();
    angles.push_back(std::atan2(g[1], g[0]));
    line(os, 0, 0, kRayLength * g[0], kRayLength * g[1], "ray side" + std::to_string(which),
         "stroke=\"" + tone + "\" stroke-width=\"2\"");
  }
  const double reference = mean_direction(angles);
  double lo = 0.0, hi = 0.0;
  bool pointed_fan = true;
  for (const double a : angles) {
    const double delta = std::remainder(a - reference, 2.0 * M_PI);
    if (std::abs(delta) >= M_PI_2) pointed_fan = false;
    lo = std::min(lo, delta);
    hi = std::max(hi, delta);
  }
  if (pointed_fan) {
    Arc arc{reference + lo, reference + hi, false};
    wedge_path(os, arc, kRadius, "cone side" + std::to_string(which), "fill=\"" + fill + "\"");
  }
}

void render_2d(std::ostream& os, const InstanceFile& instance,
               const std::optional<CertificateFile>& certificate) {
  os << "  <circle class=\"sphere\" cx=\"" << fmt(kHalf) << "\" cy=\"" << fmt(kHalf)
     << "\" r=\"" << fmt(kRadius) << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  if (instance.side1) render_side_2d(os, *instance.side1, 1);
  if (instance.side2) render_side_2d(os, *instance.side2, 2);

  if (!certificate || certificate->kind != CertificateFile::Kind::Separator) return;
  const Separator& sep = *certificate->separator;
  const Eigen::Vector2d u(sep.u_hat[0], sep.u_hat[1]);
  const Eigen::Vector2d perp(-u[1], u[0]);  // the great hypersphere u-perp
  line(os, -kRadius * perp[0], -kRadius * perp[1], kRadius * perp[0], kRadius * perp[1],
       "separator", "stroke=\"#111111\" stroke-width=\"2.5\"");

  // The arc E: directions strictly positive on side-1 generators and
  // strictly negative on side-2 generators.
  if (!sep.open_case && instance.side1 && instance.side2) {
    std::vector<double> centers = column_angles(to_double(instance.side1->data));
    for (double a : column_angles(to_double(instance.side2->data)))
      centers.push_back(a + M_PI);  // -h constraints
    const Arc arc = wedge_around(centers, std::atan2(u[1], u[0]));
    if (!arc.empty)
      arc_path(os, arc, kRadius + 18.0, "arc-E",
               "fill=\"none\" stroke=\"#059669\" stroke-width=\"5\"");
  }
}

void render_3d(std::ostream& os, const InstanceFile& instance,
               const std::optional<CertificateFile>& certificate) {
  os << "  <circle class=\"sphere\" cx=\"" << fmt(kHalf) << "\" cy=\"" << fmt(kHalf)
     << "\" r=\"" << fmt(kRadius) << "\" fill=\"#f8f8f8\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  const auto draw_points = [&](const SideSpec& side, int which) {
    const std::string tone = which == 1 ? "#2563eb" : "#dc2626";
    const MatrixXd data = to_double(side.data);
    for (Index j = 0; j < data.cols(); ++j) {
      const Eigen::Vector3d g = data.col(j).normalized();
      const char* opacity = g[2] >= 0.0 ? "1.0" : "0.35";  // far hemisphere dimmed
      os << "  <circle class=\"generator-point side" << which << "\" cx=\""
         << fmt(kHalf + kRadius * g[0]) << "\" cy=\"" << fmt(kHalf - kRadius * g[1])
         << "\" r=\"6\" fill=\"" << tone << "\" fill-opacity=\"" << opacity << "\"/>\n";
    }
  };
  if (instance.side1 && instance.side1->kind == SideSpec::Kind::Generators)
    draw_points(*instance.side1, 1);
  if (instance.side2 && instance.side2->kind == SideSpec::Kind::Generators)
    draw_points(*instance.side2, 2);

  if (!certificate || certificate->kind != CertificateFile::Kind::Separator) return;
  const Separator& sep = *certificate->separator;
  Eigen::Vector3d u(sep.u_hat[0], sep.u_hat[1], sep.u_hat[2]);
  u.normalize();
  // Orthonormal frame of the separating plane u-perp.
  const Eigen::Vector3d pick = std::abs(u[0]) < 0.9 ? Eigen::Vector3d::UnitX()
                                                    : Eigen::Vector3d::UnitY();
  const Eigen::Vector3d e1 = u.cross(pick).normalized();
  const Eigen::Vector3d e2 = u.cross(e1).normalized();
  os << "  <polyline class=\"separator\" fill=\"none\" stroke=\"#111111\" stroke-width=\"2.5\" points=\"";
  const int segments = 128;
  for (int i = 0; i <= segments; ++i) {
    const double t = 2.0 * M_PI * i / segments;
    const Eigen::Vector3d p = std::cos(t) * e1 + std::sin(t) * e2;
    os << px(kRadius * p[0], kRadius * p[1]);
    if (i != segments) os << " ";
  }
  os << "\"/>\n";
}

}  // namespace

std::string render_svg(const InstanceFile& instance,
                       const std::optional<CertificateFile>& certificate) {
  if (instance.dim > 3) throw ValidationError("render supports n<=3");
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
        "viewBox=\"0 0 800 800\">\n";
  os << "  <rect width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
  if (instance.dim == 2)
    render_2d(os, instance, certificate);
  else
    render_3d(os, instance, certificate);
  os << "</svg>\n";
  return os.str();
}

}  // namespace sphsep
