#pragma once
// Paths and scratch-directory plumbing shared by the test binaries.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#ifndef CITEMETRICS_FIXTURE_DIR
#error "CITEMETRICS_FIXTURE_DIR must be defined by the build"
#endif

namespace test_support {

inline std::filesystem::path fixture_dir() {
    return std::filesystem::path(CITEMETRICS_FIXTURE_DIR);
}

inline std::filesystem::path worked_example_path() {
    return fixture_dir() / "worked_example.jsonl";
}

inline std::filesystem::path api_cache_dir() {
    return fixture_dir() / "api_cache";
}

// Fresh scratch directory under the system temp dir, removed on destruction.
class TempDir {
  public:
    TempDir() {
        auto base = std::filesystem::temp_directory_path();
        std::random_device rd;
        path_ = base / ("citemetrics_test_" + std::to_string(rd()) + "_" +
                        std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

  private:
    std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void spit(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

}  // namespace test_support
