#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace alexnorm {

struct ClaimResult {
  int index;
  std::string name;
  bool pass;
  std::string detail;
};

/// Reads a whole file; missing or unreadable files raise InputError.
std::string read_file(const std::filesystem::path& path);

/// Checks the bundled-data claims in a fixed order. Failures inside a claim
/// (including unreadable or corrupt data) are reported, never thrown.
std::vector<ClaimResult> run_claims(const std::filesystem::path& data_dir);

}  // namespace alexnorm
