#include <doctest.h>

#include <fstream>

#include "alexnorm/arith.hpp"
#include "alexnorm/report.hpp"

using namespace alexnorm;

namespace {

const std::filesystem::path data = ALEXNORM_DATA_DIR;

std::filesystem::path scratch_copy(const char* tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("alexnorm_report_" + std::string(tag));
  std::filesystem::remove_all(dir);
  std::filesystem::copy(data, dir);
  return dir;
}

}  // namespace

TEST_CASE("bundled claims all pass") {
  const auto claims = run_claims(data);
  CHECK(claims.size() == 9);
  for (const auto& c : claims) CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
}

TEST_CASE("a corrupted diagram fails only the polynomial claim") {
  const auto dir = scratch_copy("corrupt");
  {
    std::ofstream out(dir / "mt_link.pd", std::ios::app);
    out << "X 1 2 3\n";
  }
  const auto claims = run_claims(dir);
  CHECK_FALSE(claims[0].pass);
  for (std::size_t i = 1; i < claims.size(); ++i)
    if (claims[i].name != "surgery homology") CHECK(claims[i].pass);
  std::filesystem::remove_all(dir);
}

TEST_CASE("a missing data directory fails every file-backed claim") {
  const auto claims = run_claims("/nonexistent/alexnorm");
  CHECK_FALSE(claims[0].pass);
  CHECK(claims.back().pass);  // the gluing claim needs no data
}

TEST_CASE("read_file reports missing files") { CHECK_THROWS_AS(read_file("/nonexistent/file"), InputError); }
