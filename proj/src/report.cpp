#include "ivpoly/report.hpp"

#include <json.hpp>

namespace ivpoly {

void CheckReport::record(bool pass, const std::string& witness) {
    ++cases;
    if (!pass) failures.push_back(witness);
}

std::string CheckReport::to_json() const {
    return nlohmann::json{{"property", property}, {"cases", cases}, {"failures", failures}}.dump();
}

}  // namespace ivpoly
