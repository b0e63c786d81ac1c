#pragma once

#include <vector>

namespace extremal::detail {

// Capacitated assignment of N-vertices (rows of adj) to M-neighbours.
class RoofAssignment {
 public:
  RoofAssignment(int nm, const std::vector<std::vector<int>>& adj);
  // On failure fills `violator` with X such that |X| > cap |N(X)|.
  bool run(int cap, std::vector<int>* violator = nullptr);
  const std::vector<int>& assignment() const { return assign_; }

 private:
  int nm_;
  const std::vector<std::vector<int>>& adj_;
  std::vector<int> assign_;
};

}  // namespace extremal::detail
