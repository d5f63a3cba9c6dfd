#include "heyland/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "heyland/errors.hpp"
#include "heyland/format.hpp"

namespace heyland {
namespace {

constexpr double kPadding = 0.10;
constexpr double kMarkerRadiusPx = 6.0;
constexpr double kFontPx = 28.0;

double snap3(double v) { return std::round(v * 1000.0) / 1000.0; }

std::string escape_xml(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

struct Box {
    double xmin, xmax, ymin, ymax;
};

Box diagram_box(const HeylandDiagram& diag, bool full_circle) {
    const CircleShape& c = diag.circle;
    Box b{std::min(0.0, c.center.x - c.radius), std::max(c.center.x + c.radius, diag.anchors.a.x),
          std::min(0.0, full_circle ? c.center.y - c.radius : c.center.y),
          std::max(c.center.y + c.radius, diag.anchors.a.y)};
    const double pad_x = kPadding * (b.xmax - b.xmin);
    const double pad_y = kPadding * (b.ymax - b.ymin);
    return {b.xmin - pad_x, b.xmax + pad_x, b.ymin - pad_y, b.ymax + pad_y};
}

class SvgWriter {
public:
    SvgWriter(const CanvasMap& map, bool labels) : map_(map), labels_(labels) {}

    std::ostringstream& out() { return out_; }

    static std::string num(double v) { return fmt::fixed3(v); }

    void line(std::string_view attrs, Point2 a, Point2 b) {
        out_ << "<line " << attrs << " x1=\"" << num(map_.to_px_x(a.x)) << "\" y1=\""
             << num(map_.to_px_y(a.y)) << "\" x2=\"" << num(map_.to_px_x(b.x)) << "\" y2=\""
             << num(map_.to_px_y(b.y)) << "\"/>\n";
    }

    void text(std::string_view attrs, double px, double py, std::string_view body) {
        if (!labels_) {
            return;
        }
        out_ << "<text " << attrs << " x=\"" << num(px) << "\" y=\"" << num(py)
             << "\" font-size=\"" << num(kFontPx) << "\" font-family=\"sans-serif\">"
             << escape_xml(body) << "</text>\n";
    }

    void marker(std::string_view cls, Point2 p, std::string_view fill, std::string_view label) {
        const double px = map_.to_px_x(p.x);
        const double py = map_.to_px_y(p.y);
        out_ << "<circle class=\"" << cls << "\" cx=\"" << num(px) << "\" cy=\"" << num(py)
             << "\" r=\"" << num(kMarkerRadiusPx) << "\" fill=\"" << fill << "\"/>\n";
        text("class=\"label\"", px + 1.5 * kMarkerRadiusPx, py - 1.5 * kMarkerRadiusPx, label);
    }

private:
    const CanvasMap& map_;
    bool labels_;
    std::ostringstream out_;
};

} // namespace

CanvasMap fit_canvas(const HeylandDiagram& diag, const RenderOptions& opts) {
    if (!(opts.width_px > 2.0 * opts.margin_px) || !(opts.height_px > 2.0 * opts.margin_px)) {
        throw PreconditionError("canvas must be larger than twice the margin");
    }
    const Box box = diagram_box(diag, opts.show_full_circle);
    const double avail_w = opts.width_px - 2.0 * opts.margin_px;
    const double avail_h = opts.height_px - 2.0 * opts.margin_px;
    const double bw = box.xmax - box.xmin;
    const double bh = box.ymax - box.ymin;

    CanvasMap map;
    map.px_per_ampere = std::floor(std::min(avail_w / bw, avail_h / bh) * 1000.0) / 1000.0;
    if (!(map.px_per_ampere > 0.0)) {
        throw PreconditionError("canvas too small for the diagram");
    }
    const double s = map.px_per_ampere;
    map.origin_x = snap3(opts.margin_px + 0.5 * (avail_w - s * bw) - s * box.xmin);
    map.origin_y = snap3(opts.margin_px + 0.5 * (avail_h - s * bh) + s * box.ymax);
    return map;
}

std::string render_svg(const HeylandDiagram& diag, const ExtremalSet& extremals,
                       const RenderOptions& opts) {
    const CanvasMap map = fit_canvas(diag, opts);
    const Box box = diagram_box(diag, opts.show_full_circle);
    const CircleShape& c = diag.circle;
    const Point2 o = diag.anchors.o_prime;
    const Point2 a = diag.anchors.a;
    const Point2 d = diag.split_point_d;
    const auto num = SvgWriter::num;

    SvgWriter w(map, opts.show_labels);
    auto& out = w.out();

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(opts.width_px)
        << "\" height=\"" << num(opts.height_px) << "\" viewBox=\"" << num(0.0) << ' ' << num(0.0)
        << ' ' << num(opts.width_px) << ' ' << num(opts.height_px) << "\" data-px-per-ampere=\""
        << num(map.px_per_ampere) << "\" data-origin-x=\"" << num(map.origin_x)
        << "\" data-origin-y=\"" << num(map.origin_y) << "\">\n";
    out << "<title>" << escape_xml(opts.title) << "</title>\n";
    out << "<rect x=\"" << num(0.0) << "\" y=\"" << num(0.0) << "\" width=\"" << num(opts.width_px)
        << "\" height=\"" << num(opts.height_px) << "\" fill=\"white\"/>\n";

    // Axes
    out << "<g id=\"axes\" stroke=\"black\" stroke-width=\"" << num(2.0) << "\">\n";
    w.line("id=\"axis-reactive\"", {box.xmin, 0.0}, {box.xmax, 0.0});
    w.line("id=\"axis-active\"", {0.0, box.ymin}, {0.0, box.ymax});
    out << "</g>\n";
    w.text("id=\"axis-reactive-label\"", map.to_px_x(box.xmax) - 12.0 * kFontPx,
           map.to_px_y(0.0) + 1.2 * kFontPx, "reactive current (A)");
    w.text("id=\"axis-active-label\"", map.to_px_x(0.0) + 0.5 * kFontPx,
           map.to_px_y(box.ymax) + kFontPx, "active current (A)");

    w.line("id=\"reference-horizontal\" stroke=\"gray\" stroke-width=\"" + num(1.5)
               + "\" stroke-dasharray=\"" + num(8.0) + ' ' + num(6.0) + '"',
           {box.xmin, o.y}, {box.xmax, o.y});

    // Locus
    const double r_px = map.px_per_ampere * c.radius;
    if (opts.show_full_circle) {
        out << "<circle id=\"locus\" cx=\"" << num(map.to_px_x(c.center.x)) << "\" cy=\""
            << num(map.to_px_y(c.center.y)) << "\" r=\"" << num(r_px)
            << "\" fill=\"none\" stroke=\"navy\" stroke-width=\"" << num(2.5) << "\"/>\n";
    } else {
        const Point2 right{c.center.x + c.radius, c.center.y};
        out << "<path id=\"locus\" d=\"M " << num(map.to_px_x(o.x)) << ' ' << num(map.to_px_y(o.y))
            << " A " << num(r_px) << ' ' << num(r_px) << ' ' << num(0.0) << " 0 1 "
            << num(map.to_px_x(right.x)) << ' ' << num(map.to_px_y(right.y))
            << "\" fill=\"none\" stroke=\"navy\" stroke-width=\"" << num(2.5) << "\"/>\n";
    }

    const std::string ref_style = "stroke-width=\"" + num(2.0) + '"';
    w.line("id=\"output-line\" stroke=\"darkgreen\" " + ref_style, o, a);
    w.line("id=\"torque-line\" stroke=\"darkred\" " + ref_style, o, d);
    w.line("id=\"blocked-rotor-vertical\" stroke=\"gray\" " + ref_style, a, {a.x, 0.0});

    out << "<g id=\"points\">\n";
    w.marker("point", o, "black", "O'");
    w.marker("point", a, "black", "A");
    w.marker("point", c.center, "black", "C");
    w.marker("point", d, "black", "D");
    out << "</g>\n";

    out << "<g id=\"extremals\">\n";
    w.marker("extremal max-output", extremals.max_output.point, "darkgreen", "max output");
    w.marker("extremal max-torque", extremals.max_torque.point, "darkred", "max torque");
    w.marker("extremal max-power-factor", extremals.max_power_factor.point, "purple", "max pf");
    w.marker("extremal max-input", extremals.max_input.point, "navy", "max input");
    out << "</g>\n";

    if (!opts.show_slip_lines.empty()) {
        out << "<g id=\"slip-lines\" stroke=\"orange\" stroke-width=\"" << num(1.5) << "\">\n";
        for (double s : opts.show_slip_lines) {
            const OperatingPoint end = point_at_slip(diag, s);
            w.line("class=\"slip-line\" data-slip=\"" + num(s) + '"', o, end.point);
        }
        out << "</g>\n";
    }

    if (opts.show_full_circle) {
        const Point2 bottom{c.center.x, c.center.y - c.radius};
        w.text("id=\"generating-label\"", map.to_px_x(bottom.x), map.to_px_y(bottom.y) + 1.2 * kFontPx,
               "generating");
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace heyland
