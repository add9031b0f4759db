#ifndef SPLAB_CAMPAIGN_HPP
#define SPLAB_CAMPAIGN_HPP

#include "splab/bounds_report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace splab {

/// Configuration of one verification campaign: N random-function checks
/// for a theorem tag plus the applicable extremal sharpness checks.
struct CampaignConfig {
    std::string theorem;
    int trials = 50;
    std::uint64_t seed = 1;
    int n = 2;
    int nu = 2;
    double p = 2.0;        // norm exponent where the theorem allows a choice
    int degree_cap = 4;
    double decay = 0.55;
    double tolerance = -1.0; // < 0: per-tag default
    int poisson_polar = 128; // thm0 grid
    int poisson_azimuth = 256;
};

struct CampaignOutcome {
    std::vector<BoundCheckReport> reports;
    bool passed = true;
    std::string failure; // first violated check, empty when passed
};

const std::vector<std::string>& campaign_tags();

/// Default margin tolerance per theorem tag.
double default_tolerance(const std::string& tag);

CampaignOutcome run_campaign(const CampaignConfig& config);

} // namespace splab

#endif
