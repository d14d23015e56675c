#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace kite {

// Machine-readable outcome of one named verification.
struct VerificationReport {
  std::string check;
  bool pass = false;
  double elapsed_s = 0;
  nlohmann::json counts = nlohmann::json::object();
  std::vector<std::string> witnesses;
  std::string anchor;  // which result this certifies

  nlohmann::json to_json() const;
};

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace kite
