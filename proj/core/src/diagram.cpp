#include "multiseg/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace multiseg {

namespace {
constexpr int kColWidth = 2;
}

std::string render_text(const Multisegment& a) {
    if (a.empty()) return "(empty)\n";
    std::map<Line, std::vector<Segment>> per_line;
    for (const auto& s : a) per_line[s.line].push_back(s);
    std::ostringstream os;
    for (const auto& [line, segs] : per_line) {
        int lo = segs.front().b, hi = segs.front().e;
        for (const auto& s : segs) {
            lo = std::min(lo, s.b);
            hi = std::max(hi, s.e);
        }
        if (per_line.size() > 1 || line.label != "rho") os << '@' << line.label << '\n';
        for (const auto& s : segs) {
            std::string row((hi - lo + 1) * kColWidth, ' ');
            for (int x = s.b; x <= s.e; ++x) row[(x - lo) * kColWidth] = '*';
            os << row << '\n';
        }
        // exponent axis
        for (int x = lo; x <= hi; ++x) {
            std::string t = std::to_string(((x % 10) + 10) % 10);
            os << t << std::string(kColWidth - t.size(), ' ');
        }
        os << '\n';
    }
    return os.str();
}

std::string render_svg(const Multisegment& a) {
    constexpr int unit = 20, r = 5, pad = 20;
    std::map<Line, std::vector<Segment>> per_line;
    for (const auto& s : a) per_line[s.line].push_back(s);
    int lo = 0, hi = 0, rows = 0;
    bool first = true;
    for (const auto& [line, segs] : per_line) {
        for (const auto& s : segs) {
            if (first) {
                lo = s.b;
                hi = s.e;
                first = false;
            }
            lo = std::min(lo, s.b);
            hi = std::max(hi, s.e);
        }
        rows += static_cast<int>(segs.size()) + 1;  // gap row between line groups
    }
    int width = (hi - lo + 1) * unit + 2 * pad;
    int height = std::max(rows, 1) * unit + 2 * pad;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\">\n";
    int row = 0;
    for (const auto& [line, segs] : per_line) {
        for (const auto& s : segs) {
            int cy = pad + row * unit;
            os << "  <line x1=\"" << pad + (s.b - lo) * unit << "\" y1=\"" << cy << "\" x2=\""
               << pad + (s.e - lo) * unit << "\" y2=\"" << cy
               << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
            for (int x = s.b; x <= s.e; ++x)
                os << "  <circle cx=\"" << pad + (x - lo) * unit << "\" cy=\"" << cy << "\" r=\""
                   << r << "\" fill=\"black\"/>\n";
            ++row;
        }
        ++row;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace multiseg
