#pragma once

#include "rational.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace lorder {

// Orientation-preserving piecewise-linear map of the line with rational data.
// Between breakpoints the map is affine; outside, it follows the tail slopes.
class PLHomeo {
 public:
  struct Pt {
    Q x, y;
  };

  PLHomeo() : pts_{{Q(0), Q(0)}}, sl_(1), sr_(1) {}

  PLHomeo(std::vector<Pt> pts, Q left_slope = 1, Q right_slope = 1)
      : pts_(std::move(pts)), sl_(std::move(left_slope)), sr_(std::move(right_slope)) {
    if (pts_.empty()) pts_.push_back({Q(0), Q(0)});
    std::sort(pts_.begin(), pts_.end(), [](const Pt& a, const Pt& b) { return a.x < b.x; });
    if (sl_ <= 0 || sr_ <= 0) throw ComputeError("PL tail slopes must be positive");
    for (std::size_t i = 1; i < pts_.size(); ++i)
      if (!(pts_[i - 1].x < pts_[i].x) || !(pts_[i - 1].y < pts_[i].y))
        throw ComputeError("PL data not strictly increasing");
    normalize();
  }

  static PLHomeo identity() { return PLHomeo(); }
  static PLHomeo affine(const Q& slope, const Q& shift) {
    return PLHomeo({{Q(0), shift}}, slope, slope);
  }

  const std::vector<Pt>& points() const { return pts_; }
  const Q& left_slope() const { return sl_; }
  const Q& right_slope() const { return sr_; }

  Q operator()(const Q& x) const {
    if (x <= pts_.front().x) return pts_.front().y + sl_ * (x - pts_.front().x);
    if (x >= pts_.back().x) return pts_.back().y + sr_ * (x - pts_.back().x);
    auto it = std::upper_bound(pts_.begin(), pts_.end(), x, [](const Q& v, const Pt& p) { return v < p.x; });
    const Pt& b = *it;
    const Pt& a = *(it - 1);
    return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
  }

  Q inv(const Q& y) const {
    if (y <= pts_.front().y) return pts_.front().x + (y - pts_.front().y) / sl_;
    if (y >= pts_.back().y) return pts_.back().x + (y - pts_.back().y) / sr_;
    auto it = std::upper_bound(pts_.begin(), pts_.end(), y, [](const Q& v, const Pt& p) { return v < p.y; });
    const Pt& b = *it;
    const Pt& a = *(it - 1);
    return a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y);
  }

  PLHomeo inverse() const {
    std::vector<Pt> p;
    for (auto& q : pts_) p.push_back({q.y, q.x});
    return PLHomeo(std::move(p), 1 / sl_, 1 / sr_);
  }

  // slope on the piece immediately right (left) of x
  Q right_deriv(const Q& x) const {
    if (x >= pts_.back().x) return sr_;
    if (x < pts_.front().x) return sl_;
    auto it = std::upper_bound(pts_.begin(), pts_.end(), x, [](const Q& v, const Pt& p) { return v < p.x; });
    return ((*it).y - (it - 1)->y) / ((*it).x - (it - 1)->x);
  }
  Q left_deriv(const Q& x) const {
    if (x <= pts_.front().x) return sl_;
    if (x > pts_.back().x) return sr_;
    auto it = std::lower_bound(pts_.begin(), pts_.end(), x, [](const Pt& p, const Q& v) { return p.x < v; });
    return ((*it).y - (it - 1)->y) / ((*it).x - (it - 1)->x);
  }

  // genuine breakpoints (slope changes)
  std::vector<Q> breakpoints() const {
    std::vector<Q> b;
    for (auto& p : pts_)
      if (left_deriv(p.x) != right_deriv(p.x)) b.push_back(p.x);
    return b;
  }

  bool is_identity() const { return sl_ == 1 && sr_ == 1 && pts_.size() == 1 && pts_[0].x == pts_[0].y; }

  friend PLHomeo compose(const PLHomeo& f, const PLHomeo& g) {
    // breakpoints of f∘g: those of g, and g^{-1} of those of f
    std::vector<Q> xs;
    for (auto& p : g.pts_) xs.push_back(p.x);
    for (auto& p : f.pts_) xs.push_back(g.inv(p.x));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Pt> pts;
    pts.reserve(xs.size());
    for (auto& x : xs) pts.push_back({x, f(g(x))});
    return PLHomeo(std::move(pts), f.sl_ * g.sl_, f.sr_ * g.sr_);
  }

  PLHomeo operator*(const PLHomeo& o) const { return compose(*this, o); }

  friend bool operator==(const PLHomeo& a, const PLHomeo& b) {
    if (a.sl_ != b.sl_ || a.sr_ != b.sr_ || a.pts_.size() != b.pts_.size()) return false;
    for (std::size_t i = 0; i < a.pts_.size(); ++i)
      if (a.pts_[i].x != b.pts_[i].x || a.pts_[i].y != b.pts_[i].y) return false;
    return true;
  }

  std::string key() const {
    std::string s = qstr(sl_) + "|" + qstr(sr_);
    for (auto& p : pts_) s += "|" + qstr(p.x) + ":" + qstr(p.y);
    return s;
  }

  std::string str() const {
    std::string s = "PL[";
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      if (i) s += ", ";
      s += "(" + qstr(pts_[i].x) + "," + qstr(pts_[i].y) + ")";
    }
    return s + "; tails " + qstr(sl_) + "," + qstr(sr_) + "]";
  }

  // exact ∫_a^b (h(x) - x) dx
  Q displacement_integral(const Q& a, const Q& b) const {
    std::vector<Q> xs{a, b};
    for (auto& p : pts_)
      if (p.x > a && p.x < b) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    Q s = 0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
      Q d0 = (*this)(xs[i - 1]) - xs[i - 1], d1 = (*this)(xs[i]) - xs[i];
      s += (d0 + d1) * (xs[i] - xs[i - 1]) / 2;
    }
    return s;
  }

  // exact ∫_a^b (h(x) - c) dx for a <= b
  Q offset_integral(const Q& a, const Q& b, const Q& c) const {
    std::vector<Q> xs{a, b};
    for (auto& p : pts_)
      if (p.x > a && p.x < b) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    Q s = 0;
    for (std::size_t i = 1; i < xs.size(); ++i)
      s += ((*this)(xs[i - 1]) + (*this)(xs[i]) - 2 * c) * (xs[i] - xs[i - 1]) / 2;
    return s;
  }

 private:
  void normalize() {
    if (pts_.size() > 1) {
      std::vector<Pt> keep;
      for (std::size_t i = 0; i < pts_.size(); ++i) {
        Q lft = i == 0 ? sl_ : (pts_[i].y - pts_[i - 1].y) / (pts_[i].x - pts_[i - 1].x);
        Q rgt = i + 1 == pts_.size() ? sr_ : (pts_[i + 1].y - pts_[i].y) / (pts_[i + 1].x - pts_[i].x);
        if (lft != rgt) keep.push_back(pts_[i]);
      }
      if (keep.empty()) keep.push_back(pts_.front());
      pts_ = std::move(keep);
    }
    if (pts_.size() == 1 && sl_ == sr_ && pts_[0].x != 0) {
      // canonical anchor at x = 0 for affine maps
      Q y0 = pts_[0].y - sl_ * pts_[0].x;
      pts_[0] = {Q(0), y0};
    }
  }

  std::vector<Pt> pts_;
  Q sl_, sr_;
};

// interpolate through increasing pairs, slope-1 tails
inline PLHomeo pl_through(std::vector<PLHomeo::Pt> pts) {
  if (pts.empty()) return PLHomeo();
  return PLHomeo(std::move(pts), 1, 1);
}

}  // namespace lorder
