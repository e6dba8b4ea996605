#include "amoeba/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "amoeba/errors.hpp"
#include "amoeba/linprog.hpp"

namespace amoeba {

namespace {

using I64 = std::int64_t;

I64 cross(const ExponentVector& o, const ExponentVector& a, const ExponentVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; returns hull in counterclockwise order, collinear
// points dropped. Input must be sorted and deduplicated.
std::vector<ExponentVector> hull2d(std::vector<ExponentVector> pts) {
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<ExponentVector> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::vector<double> to_double_vec(const ExponentVector& e) {
  return std::vector<double>(e.begin(), e.end());
}

// CCW hull order for r = 2 (as produced by hull2d), any order otherwise.
std::vector<ExponentVector> hull_for_tests(const std::vector<ExponentVector>& pts, int r) {
  std::vector<ExponentVector> p = pts;
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (r == 1) {
    std::vector<ExponentVector> v{p.front()};
    if (p.back() != p.front()) v.push_back(p.back());
    return v;
  }
  if (r == 2) return hull2d(p);
  return p;  // r >= 3 membership goes through the LP on the full support
}

// x in m * conv(verts)? verts as from hull_for_tests. Exact integers for
// r <= 2, hardware LP beyond.
bool in_hull_pre(const ExponentVector& x, const std::vector<ExponentVector>& verts,
                 I64 m, int r) {
  if (r == 1) {
    const I64 lo = verts.front()[0] * m, hi = verts.back()[0] * m;
    return x[0] >= lo && x[0] <= hi;
  }
  if (r == 2) {
    if (verts.size() == 1) return x[0] == verts[0][0] * m && x[1] == verts[0][1] * m;
    if (verts.size() == 2) {
      ExponentVector a = {verts[0][0] * m, verts[0][1] * m};
      ExponentVector b = {verts[1][0] * m, verts[1][1] * m};
      if (cross(a, b, x) != 0) return false;
      return std::min(a[0], b[0]) <= x[0] && x[0] <= std::max(a[0], b[0]) &&
             std::min(a[1], b[1]) <= x[1] && x[1] <= std::max(a[1], b[1]);
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
      ExponentVector a = {verts[i][0] * m, verts[i][1] * m};
      const auto& vb = verts[(i + 1) % verts.size()];
      ExponentVector b = {vb[0] * m, vb[1] * m};
      if (cross(a, b, x) < 0) return false;  // hull is counterclockwise
    }
    return true;
  }
  std::vector<std::vector<double>> scaled;
  scaled.reserve(verts.size());
  for (const auto& p : verts) {
    std::vector<double> v = to_double_vec(p);
    for (double& c : v) c *= static_cast<double>(m);
    scaled.push_back(std::move(v));
  }
  return in_convex_hull(to_double_vec(x), scaled);
}

}  // namespace

std::vector<ExponentVector> hull_vertices(const std::vector<ExponentVector>& pts_in, int r) {
  if (pts_in.empty()) throw degenerate_error("hull of empty point set");
  std::vector<ExponentVector> pts = pts_in;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<ExponentVector> verts;
  if (r <= 2) {
    verts = hull_for_tests(pts, r);
  } else {
    // p is extreme iff p is not in the hull of the others.
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<std::vector<double>> others;
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (j != i) others.push_back(to_double_vec(pts[j]));
      if (others.empty() || !in_convex_hull(to_double_vec(pts[i]), others)) verts.push_back(pts[i]);
    }
  }
  std::sort(verts.begin(), verts.end());
  return verts;
}

bool point_in_dilated_hull(const ExponentVector& x, const std::vector<ExponentVector>& pts,
                           std::int64_t m, int r) {
  return in_hull_pre(x, hull_for_tests(pts, r), m, r);
}

std::uint64_t dilated_box_count(const NewtonPolytopeData& P, std::int64_t m) {
  std::uint64_t total = 1;
  for (std::int64_t w : P.widths) {
    const std::uint64_t side = static_cast<std::uint64_t>(w) * static_cast<std::uint64_t>(m) + 1ULL;
    if (total > std::numeric_limits<std::uint64_t>::max() / side)
      return std::numeric_limits<std::uint64_t>::max();
    total *= side;
  }
  return total;
}

std::vector<ExponentVector> lattice_points_in_dilated_hull(const NewtonPolytopeData& P,
                                                           std::int64_t m,
                                                           std::uint64_t max_box) {
  const std::uint64_t box = dilated_box_count(P, m);
  if (box > max_box)
    throw budget_error("lattice enumeration box too large", static_cast<double>(box));

  const int r = P.r;
  const std::vector<ExponentVector> verts = hull_for_tests(P.support, r);
  std::vector<I64> lo(r), hi(r);
  for (int i = 0; i < r; ++i) {
    lo[i] = P.mins[i] * m;
    hi[i] = (P.mins[i] + P.widths[i]) * m;
  }

  std::vector<ExponentVector> out;
  ExponentVector x(lo.begin(), lo.end());
  while (true) {
    if (in_hull_pre(x, verts, m, r)) out.push_back(x);
    int i = r - 1;
    while (i >= 0) {
      if (++x[i] <= hi[i]) break;
      x[i] = lo[i];
      --i;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace amoeba
