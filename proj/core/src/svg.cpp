#include "channelgame/svg.hpp"

#include <sstream>
#include <stdexcept>

namespace channelgame {

namespace {

constexpr int kMarginLeft = 64;
constexpr int kMarginRight = 16;
constexpr int kMarginTop = 28;
constexpr int kMarginBottom = 44;

}  // namespace

void SvgChart::set_x_range(const Rat& lo, const Rat& hi) {
  if (lo >= hi) throw std::invalid_argument("empty x range");
  x_lo_ = lo;
  x_hi_ = hi;
}

void SvgChart::set_y_range(const Rat& lo, const Rat& hi) {
  if (lo >= hi) throw std::invalid_argument("empty y range");
  y_lo_ = lo;
  y_hi_ = hi;
}

void SvgChart::set_axis_labels(std::string x, std::string y) {
  x_label_ = std::move(x);
  y_label_ = std::move(y);
}

void SvgChart::add_series(const std::string& name, const std::string& color,
                          std::vector<std::pair<Rat, Rat>> points) {
  series_.push_back(Series{name, color, std::move(points)});
}

std::string SvgChart::render() const {
  const int plot_w = width_ - kMarginLeft - kMarginRight;
  const int plot_h = height_ - kMarginTop - kMarginBottom;
  const Rat x_span = x_hi_ - x_lo_;
  const Rat y_span = y_hi_ - y_lo_;

  auto px = [&](const Rat& x) {
    Rat t = (x - x_lo_) / x_span;
    return format_fixed(Rat(kMarginLeft) + t * plot_w, 2);
  };
  auto py = [&](const Rat& y) {
    Rat t = (y - y_lo_) / y_span;
    return format_fixed(Rat(kMarginTop) + (Rat(1) - t) * plot_h, 2);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
     << height_ << "\" viewBox=\"0 0 " << width_ << ' ' << height_ << "\">\n";
  os << "<rect width=\"" << width_ << "\" height=\"" << height_ << "\" fill=\"white\"/>\n";
  if (!title_.empty()) {
    os << "<text x=\"" << width_ / 2 << "\" y=\"18\" text-anchor=\"middle\" font-size=\"13\" "
          "font-family=\"sans-serif\">"
       << title_ << "</text>\n";
  }
  // axes
  os << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft
     << "\" y2=\"" << (height_ - kMarginBottom) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kMarginLeft << "\" y1=\"" << (height_ - kMarginBottom) << "\" x2=\""
     << (width_ - kMarginRight) << "\" y2=\"" << (height_ - kMarginBottom)
     << "\" stroke=\"black\"/>\n";
  // axis end labels
  os << "<text x=\"" << kMarginLeft << "\" y=\"" << (height_ - kMarginBottom + 16)
     << "\" font-size=\"11\" font-family=\"sans-serif\">" << format_fixed(x_lo_, 0)
     << "</text>\n";
  os << "<text x=\"" << (width_ - kMarginRight) << "\" y=\"" << (height_ - kMarginBottom + 16)
     << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">"
     << format_fixed(x_hi_, 0) << "</text>\n";
  os << "<text x=\"" << (kMarginLeft - 6) << "\" y=\"" << (height_ - kMarginBottom)
     << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">"
     << format_fixed(y_lo_, 2) << "</text>\n";
  os << "<text x=\"" << (kMarginLeft - 6) << "\" y=\"" << (kMarginTop + 4)
     << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">"
     << format_fixed(y_hi_, 2) << "</text>\n";
  if (!x_label_.empty()) {
    os << "<text x=\"" << (kMarginLeft + plot_w / 2) << "\" y=\"" << (height_ - 8)
       << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">" << x_label_
       << "</text>\n";
  }
  if (!y_label_.empty()) {
    os << "<text x=\"14\" y=\"" << (kMarginTop + plot_h / 2)
       << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\" "
          "transform=\"rotate(-90 14 "
       << (kMarginTop + plot_h / 2) << ")\">" << y_label_ << "</text>\n";
  }
  for (const Series& s : series_) {
    os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1\" points=\"";
    bool first = true;
    for (const auto& [x, y] : s.points) {
      if (!first) os << ' ';
      first = false;
      os << px(x) << ',' << py(y);
    }
    os << "\"><title>" << s.name << "</title></polyline>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace channelgame
