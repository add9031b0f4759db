#ifndef SPLAB_BOUNDS_REPORT_HPP
#define SPLAB_BOUNDS_REPORT_HPP

#include <string>
#include <vector>

namespace splab {

/// One theorem check: left side, right side, margin = rhs - lhs and the
/// sharpness ratio lhs/rhs, together with the evaluation point (real
/// coordinates; complex points are flattened re,im per axis).
struct BoundCheckReport {
    std::string theorem;
    std::vector<double> point;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double ratio = 0.0;
    std::string notes;
};

BoundCheckReport make_report(std::string theorem, std::vector<double> point,
                             double lhs, double rhs, std::string notes = "");

/// {"theorem":...,"point":[...],"lhs":...,"rhs":...,"margin":...,
///  "ratio":...,"notes":...} with 17 significant digits.
std::string report_json(const BoundCheckReport& r);

/// theorem,point(space-separated),lhs,rhs,margin,ratio,notes
std::string report_csv(const BoundCheckReport& r);
std::string report_csv_header();

} // namespace splab

#endif
