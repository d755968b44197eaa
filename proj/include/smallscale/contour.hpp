#pragma once

#include <cstddef>
#include <vector>

namespace smallscale {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Closed polyline in the half-plane x2 >= 0, counterclockwise, with a signed
// patch amplitude.
struct PatchContour {
  std::vector<Point2> nodes;
  double weight = 1.0;
};

// Signed patch system; with odd_symmetry the stored contours live in
// x1 >= 0 and a mirror patch of opposite sign across the x2-axis is implied.
struct PatchSystem {
  std::vector<PatchContour> contours;
  double alpha = 0.0;  // in [0, 1/2)
  bool odd_symmetry = false;
  double t = 0.0;
};

double polygon_area(const std::vector<Point2>& nodes);  // signed, CCW > 0
Point2 polygon_centroid(const std::vector<Point2>& nodes);
bool point_in_polygon(const std::vector<Point2>& nodes, double x, double y);

// Positive inside, negative outside.
double signed_distance(const std::vector<Point2>& nodes, double x, double y);

double segment_distance(const Point2& a, const Point2& b, const Point2& c,
                        const Point2& d);

// Smallest distance between segment pairs separated by more than
// guard_arclength along the contour (both ways around); pairs closer along
// the curve than that are legitimately near each other in space.
double min_self_distance(const std::vector<Point2>& nodes,
                         double guard_arclength);

double min_node_spacing(const std::vector<Point2>& nodes);

// Arclength redistribution on a Catmull-Rom interpolant of the closed
// contour. Target spacing is proportional to curvature^{-1/2}, clamped to
// [floor, h0]; nodes landing within rounding of the wall are snapped to it.
std::vector<Point2> resample_contour(const std::vector<Point2>& nodes,
                                     double h0, double floor_spacing = 1e-3);

// True when some spacing left the [0.5, 1.6] band around its local target;
// resampling only then keeps the respline from diffusing the contour.
bool needs_resample(const std::vector<Point2>& nodes, double h0,
                    double floor_spacing = 1e-3);

// Leftmost node abscissa over all stored contours.
double front_abscissa(const PatchSystem& system);

}  // namespace smallscale
