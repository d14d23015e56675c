#include "report.hpp"

namespace kite {

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["check"] = check;
  j["pass"] = pass;
  j["elapsed_s"] = elapsed_s;
  j["counts"] = counts;
  j["witnesses"] = witnesses;
  j["certifies"] = anchor;
  return j;
}

}  // namespace kite
