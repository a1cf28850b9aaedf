#pragma once

#include <string>
#include <utility>
#include <vector>

#include "channelgame/rational.hpp"

namespace channelgame {

/// Minimal deterministic SVG line chart. All coordinates are rendered with
/// fixed two-decimal precision so identical inputs give identical bytes.
class SvgChart {
 public:
  SvgChart(int width, int height) : width_(width), height_(height) {}

  void set_x_range(const Rat& lo, const Rat& hi);
  void set_y_range(const Rat& lo, const Rat& hi);
  void set_title(std::string title) { title_ = std::move(title); }
  void set_axis_labels(std::string x, std::string y);

  void add_series(const std::string& name, const std::string& color,
                  std::vector<std::pair<Rat, Rat>> points);

  std::string render() const;

 private:
  struct Series {
    std::string name;
    std::string color;
    std::vector<std::pair<Rat, Rat>> points;
  };

  int width_;
  int height_;
  Rat x_lo_, x_hi_, y_lo_, y_hi_;
  std::string title_;
  std::string x_label_, y_label_;
  std::vector<Series> series_;
};

}  // namespace channelgame
