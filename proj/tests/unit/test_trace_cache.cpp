#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "isc/trace_cache.hpp"

using namespace isc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("isc_test_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("records persist and reload") {
  TempDir dir("reload");
  const auto file = dir.path / "traces.txt";
  {
    TraceCache cache(file);
    CHECK(cache.size() == 0);
    cache.insert({"4913/1", 11, -4});
    cache.insert({"0/1", 5, 0});
    CHECK(cache.pending() == 2);
    cache.flush();
    CHECK(cache.pending() == 0);
  }
  CHECK(slurp(file) == "0/1 5 0\n4913/1 11 -4\n");
  TraceCache again(file);
  CHECK(again.size() == 2);
  CHECK(again.lookup("4913/1", 11) == -4);
  CHECK_FALSE(again.lookup("4913/1", 13).has_value());
  again.insert({"4913/1", 11, -4});  // duplicate of a loaded record: nothing to write
  CHECK(again.pending() == 0);
}

TEST_CASE("flush output does not depend on insertion order") {
  TempDir dir("order");
  const std::vector<TraceRecord> recs = {{"1/1", 5, 2}, {"4913/1", 11, -4}, {"1/1", 7, 1}, {"-64/1", 13, 6}};
  for (int variant = 0; variant < 2; ++variant) {
    TraceCache cache(dir.path / ("t" + std::to_string(variant)));
    if (variant == 0)
      for (const auto& r : recs) cache.insert(r);
    else
      for (auto it = recs.rbegin(); it != recs.rend(); ++it) cache.insert(*it);
    cache.flush();
  }
  CHECK(slurp(dir.path / "t0") == slurp(dir.path / "t1"));
}

TEST_CASE("Hasse bound and consistency are enforced") {
  TraceCache cache;
  CHECK_THROWS(cache.insert({"x", 11, 7}));  // 49 > 44
  cache.insert({"x", 11, 6});
  CHECK_THROWS(cache.insert({"x", 11, 5}));
}

TEST_CASE("malformed or inconsistent files are rejected") {
  TempDir dir("bad");
  const auto file = dir.path / "traces.txt";
  std::ofstream(file) << "4913/1 11\n";
  CHECK_THROWS(TraceCache(file));
  std::ofstream(file) << "4913/1 11 100\n";
  CHECK_THROWS(TraceCache(file));
  std::ofstream(file) << "4913/1 11 1\n4913/1 11 2\n";
  CHECK_THROWS(TraceCache(file));
  std::ofstream(file) << "4913/1 11 1\n\n";
  CHECK(TraceCache(file).size() == 1);
}

TEST_CASE("in-memory cache never writes") {
  TraceCache cache;
  cache.insert({"a", 5, 1});
  cache.flush();
  CHECK(cache.size() == 1);
  CHECK_FALSE(cache.path().has_value());
}
