#include "splab/bounds_report.hpp"

#include <cstdio>
#include <sstream>

namespace splab {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

BoundCheckReport make_report(std::string theorem, std::vector<double> point,
                             double lhs, double rhs, std::string notes) {
    BoundCheckReport r;
    r.theorem = std::move(theorem);
    r.point = std::move(point);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.ratio = (rhs != 0.0) ? lhs / rhs : 0.0;
    r.notes = std::move(notes);
    return r;
}

std::string report_json(const BoundCheckReport& r) {
    std::ostringstream out;
    out << "{\"theorem\":\"" << json_escape(r.theorem) << "\",\"point\":[";
    for (std::size_t i = 0; i < r.point.size(); ++i) {
        if (i)
            out << ',';
        out << fmt17(r.point[i]);
    }
    out << "],\"lhs\":" << fmt17(r.lhs) << ",\"rhs\":" << fmt17(r.rhs)
        << ",\"margin\":" << fmt17(r.margin) << ",\"ratio\":" << fmt17(r.ratio)
        << ",\"notes\":\"" << json_escape(r.notes) << "\"}";
    return out.str();
}

std::string report_csv_header() {
    return "theorem,point,lhs,rhs,margin,ratio,notes";
}

std::string report_csv(const BoundCheckReport& r) {
    std::ostringstream out;
    out << r.theorem << ',';
    for (std::size_t i = 0; i < r.point.size(); ++i) {
        if (i)
            out << ' ';
        out << fmt17(r.point[i]);
    }
    out << ',' << fmt17(r.lhs) << ',' << fmt17(r.rhs) << ','
        << fmt17(r.margin) << ',' << fmt17(r.ratio) << ',' << r.notes;
    return out.str();
}

} // namespace splab
