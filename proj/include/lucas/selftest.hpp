#pragma once

// Regression corpus of known values, runnable from the CLI.

#include <string>
#include <vector>

namespace lucas {

enum class ItemStatus { kPass, kFail, kSkipped };

struct SelftestItem {
  std::string name;
  ItemStatus status = ItemStatus::kPass;
  std::string detail;
};

struct SelftestOptions {
  bool quotient_route = true;
};

std::vector<SelftestItem> run_selftest(const SelftestOptions& options = {});

const char* to_string(ItemStatus s);

}  // namespace lucas
