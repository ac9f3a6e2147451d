#ifndef IVPOLY_REPORT_HPP
#define IVPOLY_REPORT_HPP

#include <string>
#include <vector>

namespace ivpoly {

struct CheckReport {
    std::string property;
    long cases = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void record(bool pass, const std::string& witness);
    std::string to_json() const;  // {"property":..., "cases":..., "failures":[...]}
};

}  // namespace ivpoly

#endif
