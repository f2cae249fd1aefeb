#include "refsev/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace refsev {

namespace {

struct MarkGroup {
    enum class Tag { Source, Sink, Edge, Through } tag;
    int first_gap;
    int last_gap;
    long size;
    int white_a; // source: target floor; sink: origin floor; edge: lower end
    int white_b; // edge: upper end
    long weight; // edge weight
};

std::vector<MarkGroup> mark_groups(const FloorDiagram& d) {
    const int h = static_cast<int>(d.height());
    std::vector<MarkGroup> groups;
    if (d.through > 0)
        groups.push_back({MarkGroup::Tag::Through, 0, h, d.through, 0, 0, 1});
    for (int j = 1; j <= h; ++j) {
        const long src = d.sources[static_cast<size_t>(j) - 1];
        if (src > 0)
            groups.push_back({MarkGroup::Tag::Source, 0, j - 1, src, j, 0, 1});
        const long snk = d.sink_count(j);
        if (snk > 0)
            groups.push_back({MarkGroup::Tag::Sink, j, h, snk, j, 0, 1});
    }
    for (size_t i = 0; i < d.edges.size();) {
        size_t j = i;
        while (j < d.edges.size() && d.edges[j] == d.edges[i]) ++j;
        groups.push_back({MarkGroup::Tag::Edge, d.edges[i].from,
                          d.edges[i].to - 1, static_cast<long>(j - i),
                          d.edges[i].from, d.edges[i].to, d.edges[i].weight});
        i = j;
    }
    return groups;
}

void arc(std::ostringstream& os, double x1, double x2, double y, long weight,
         bool label) {
    const double lift = std::min(54.0, 12.0 + 0.22 * std::abs(x2 - x1));
    os << "  <path d=\"M " << x1 << " " << y << " Q " << (x1 + x2) / 2 << " "
       << y - lift << " " << x2 << " " << y << "\" fill=\"none\" stroke=\"#333\""
       << " stroke-width=\"" << (weight > 1 ? 2.2 : 1.2) << "\"/>\n";
    if (label && weight > 1)
        os << "  <text x=\"" << (x1 + x2) / 2 << "\" y=\""
           << y - lift / 2 - 4 << "\" font-size=\"11\" text-anchor=\"middle\""
           << " fill=\"#a33\">" << weight << "</text>\n";
}

} // namespace

std::string render_floor_diagrams_svg(const HTransversePolygon& p, long delta,
                                      const RenderOptions& opts) {
    auto diagrams = enumerate_floor_diagrams(p, delta);
    const size_t total = diagrams.size();
    const bool truncated =
        opts.max_diagrams >= 0 &&
        diagrams.size() > static_cast<size_t>(opts.max_diagrams);
    if (truncated) diagrams.resize(static_cast<size_t>(opts.max_diagrams));

    const int h = static_cast<int>(p.height());
    const double dx = 44.0;
    const double margin = 26.0;
    const double row_h = 118.0;
    const double header_h = 34.0;

    // widest row: whites plus, in marked mode, one dot per group unit (in
    // unmarked mode the through elevators are drawn after the whites)
    size_t max_nodes = static_cast<size_t>(h);
    for (const auto& d : diagrams) {
        size_t n = static_cast<size_t>(h);
        if (opts.marked)
            for (const auto& g : mark_groups(d))
                n += static_cast<size_t>(g.size);
        else
            n += static_cast<size_t>(d.through);
        max_nodes = std::max(max_nodes, n);
    }
    const double width =
        std::max(560.0, margin * 2 + dx * static_cast<double>(
                                              std::max<size_t>(max_nodes, 1)));
    const double height =
        header_h + row_h * static_cast<double>(std::max<size_t>(
                               diagrams.size(), 1)) + 10.0;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
       << height << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "  <text x=\"" << margin << "\" y=\"22\" font-size=\"14\" "
       << "font-family=\"monospace\">" << p.str() << "  delta=" << delta
       << "  (" << total << " floor diagram" << (total == 1 ? "" : "s");
    if (truncated) os << ", showing first " << diagrams.size();
    os << ")</text>\n";

    double y0 = header_h;
    for (size_t idx = 0; idx < diagrams.size(); ++idx) {
        const auto& d = diagrams[idx];
        const double base = y0 + 72.0;
        const auto groups = mark_groups(d);

        // node layout: gap g holds its canonical dots, then white g+1
        std::vector<double> white_x(static_cast<size_t>(h) + 1, 0.0);
        struct Dot {
            double x;
            size_t group;
        };
        std::vector<Dot> dots;
        double x = margin + dx / 2;
        for (int g = 0; g <= h; ++g) {
            if (opts.marked) {
                for (size_t gi = 0; gi < groups.size(); ++gi) {
                    if (groups[gi].first_gap != g) continue;
                    for (long u = 0; u < groups[gi].size; ++u) {
                        dots.push_back({x, gi});
                        x += dx;
                    }
                }
            }
            if (g < h) {
                white_x[static_cast<size_t>(g) + 1] = x;
                x += dx;
            }
        }

        // arcs
        if (opts.marked) {
            for (const auto& dot : dots) {
                const auto& g = groups[dot.group];
                switch (g.tag) {
                    case MarkGroup::Tag::Source:
                        arc(os, dot.x, white_x[static_cast<size_t>(g.white_a)],
                            base, 1, false);
                        break;
                    case MarkGroup::Tag::Sink:
                        arc(os, white_x[static_cast<size_t>(g.white_a)], dot.x,
                            base, 1, false);
                        break;
                    case MarkGroup::Tag::Edge:
                        arc(os, white_x[static_cast<size_t>(g.white_a)], dot.x,
                            base, g.weight, true);
                        arc(os, dot.x, white_x[static_cast<size_t>(g.white_b)],
                            base, g.weight, false);
                        break;
                    case MarkGroup::Tag::Through:
                        // elevator from top boundary to bottom boundary
                        os << "  <line x1=\"" << dot.x << "\" y1=\""
                           << base - 14 << "\" x2=\"" << dot.x << "\" y2=\""
                           << base + 14
                           << "\" stroke=\"#333\" stroke-width=\"1.2\"/>\n";
                        break;
                }
            }
        } else {
            for (const auto& e : d.edges)
                arc(os, white_x[static_cast<size_t>(e.from)],
                    white_x[static_cast<size_t>(e.to)], base, e.weight, true);
            for (long u = 0; u < d.through; ++u) {
                const double tx =
                    margin + dx / 2 + dx * static_cast<double>(h + u);
                os << "  <line x1=\"" << tx << "\" y1=\"" << base - 14
                   << "\" x2=\"" << tx << "\" y2=\"" << base + 14
                   << "\" stroke=\"#333\" stroke-width=\"1.2\"/>\n";
            }
        }

        // nodes
        for (int j = 1; j <= h; ++j) {
            const double wx = white_x[static_cast<size_t>(j)];
            os << "  <circle cx=\"" << wx << "\" cy=\"" << base
               << "\" r=\"9\" fill=\"white\" stroke=\"black\" "
                  "stroke-width=\"1.4\"/>\n";
            if (!opts.marked) {
                const long src = d.sources[static_cast<size_t>(j) - 1];
                const long snk = d.sink_count(j);
                if (src > 0)
                    os << "  <text x=\"" << wx << "\" y=\"" << base - 16
                       << "\" font-size=\"11\" text-anchor=\"middle\" "
                          "fill=\"#06c\">+"
                       << src << "</text>\n";
                if (snk > 0)
                    os << "  <text x=\"" << wx << "\" y=\"" << base + 24
                       << "\" font-size=\"11\" text-anchor=\"middle\" "
                          "fill=\"#06c\">-"
                       << snk << "</text>\n";
            }
        }
        if (opts.marked)
            for (const auto& dot : dots)
                os << "  <circle cx=\"" << dot.x << "\" cy=\"" << base
                   << "\" r=\"3.5\" fill=\"black\"/>\n";

        os << "  <text x=\"" << margin << "\" y=\"" << base + 40
           << "\" font-size=\"12\" font-family=\"monospace\">#" << (idx + 1)
           << "  " << d.str() << "  mult=" << diagram_multiplicity(d).str()
           << "  markings=" << count_markings(d).get_str() << "</text>\n";
        y0 += row_h;
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace refsev
