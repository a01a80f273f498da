#include "padic/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace padic {

std::string polygon_to_ascii(const NewtonPolygon& np) {
    if (np.vertices.empty()) return "(empty polygon)\n";
    const long imin = np.vertices.front().index, imax = np.vertices.back().index;
    const long vmax = np.vertices.front().val;
    const int width = static_cast<int>(std::min<long>(60, std::max<long>(imax - imin + 1, 2)));
    const int height = static_cast<int>(std::min<long>(30, std::max<long>(vmax + 1, 2)));
    auto col = [&](long i) {
        if (imax == imin) return 0;
        return static_cast<int>((i - imin) * (width - 1) / (imax - imin));
    };
    auto row = [&](double v) {
        double vm = std::max<double>(vmax, 1);
        int r = static_cast<int>(std::lround((vm - v) * (height - 1) / vm));
        return std::clamp(r, 0, height - 1);
    };
    std::vector<std::string> grid(static_cast<size_t>(height), std::string(static_cast<size_t>(width), ' '));
    for (size_t k = 0; k + 1 < np.vertices.size(); ++k) {
        const auto& a = np.vertices[k];
        const auto& b = np.vertices[k + 1];
        for (int c = col(a.index); c <= col(b.index); ++c) {
            double t = col(b.index) == col(a.index)
                           ? 0.0
                           : static_cast<double>(c - col(a.index)) / (col(b.index) - col(a.index));
            double v = a.val + t * (b.val - a.val);
            grid[static_cast<size_t>(row(v))][static_cast<size_t>(c)] = '.';
        }
    }
    for (const auto& v : np.vertices)
        grid[static_cast<size_t>(row(static_cast<double>(v.val)))][static_cast<size_t>(col(v.index))] = '*';

    std::ostringstream os;
    const size_t lw = std::to_string(vmax).size();
    for (int rw = 0; rw < height; ++rw) {
        std::string label;
        if (rw == 0) label = std::to_string(vmax);
        if (rw == height - 1) label = "0";
        os << std::string(lw - label.size(), ' ') << label << " |" << grid[static_cast<size_t>(rw)] << "\n";
    }
    os << std::string(lw + 1, ' ') << "+" << std::string(static_cast<size_t>(width), '-') << "\n";
    os << "vertices:";
    for (const auto& v : np.vertices)
        os << " (" << v.index << "," << v.val << ")" << (v.certified ? "" : "?");
    os << "\nslopes:";
    for (const auto& s : np.slopes) os << " " << s.get_str();
    os << "\n";
    return os.str();
}

std::string polygon_to_svg(const NewtonPolygon& np) {
    const double W = 640, H = 400, mL = 50, mR = 30, mT = 30, mB = 40;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 400\">\n";
    os << "  <rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
    if (np.vertices.empty()) {
        os << "  <text x=\"320\" y=\"200\" text-anchor=\"middle\">empty polygon</text>\n</svg>\n";
        return os.str();
    }
    const long imin = 0, imax = std::max<long>(np.vertices.back().index, 1);
    const long vmax = std::max<long>(np.vertices.front().val, 1);
    auto X = [&](double i) { return mL + (i - imin) * (W - mL - mR) / (imax - imin); };
    auto Y = [&](double v) { return H - mB - v * (H - mT - mB) / vmax; };
    // axes
    os << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(static_cast<double>(imax))
       << "\" y2=\"" << Y(0) << "\" stroke=\"black\"/>\n";
    os << "  <line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\""
       << Y(static_cast<double>(vmax)) << "\" stroke=\"black\"/>\n";
    os << "  <text x=\"" << X(static_cast<double>(imax)) << "\" y=\"" << Y(0) + 25
       << "\" text-anchor=\"end\" font-size=\"12\">index</text>\n";
    os << "  <text x=\"" << X(0) - 35 << "\" y=\"" << Y(static_cast<double>(vmax)) - 10
       << "\" font-size=\"12\">v_K</text>\n";
    os << "  <text x=\"" << X(0) - 8 << "\" y=\"" << Y(0) + 14 << "\" text-anchor=\"end\" font-size=\"11\">0</text>\n";
    os << "  <text x=\"" << X(0) - 8 << "\" y=\"" << Y(static_cast<double>(vmax)) + 4
       << "\" text-anchor=\"end\" font-size=\"11\">" << vmax << "</text>\n";
    // hull
    os << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (const auto& v : np.vertices)
        os << X(static_cast<double>(v.index)) << "," << Y(static_cast<double>(v.val)) << " ";
    os << "\"/>\n";
    for (const auto& v : np.vertices) {
        os << "  <circle cx=\"" << X(static_cast<double>(v.index)) << "\" cy=\"" << Y(static_cast<double>(v.val))
           << "\" r=\"3.5\" fill=\"" << (v.certified ? "steelblue" : "orange") << "\"/>\n";
        os << "  <text x=\"" << X(static_cast<double>(v.index)) + 6 << "\" y=\""
           << Y(static_cast<double>(v.val)) - 6 << "\" font-size=\"11\">(" << v.index << ", " << v.val
           << ")</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace padic
