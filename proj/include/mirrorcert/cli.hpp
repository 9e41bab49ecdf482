#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mirrorcert::cli {

enum class Format { json, csv, text };

struct JobConfig {
    std::string command;
    std::optional<std::string> operator_path;
    std::optional<std::string> fixture;
    std::size_t order = 64;
    std::size_t max_degree = 16;
    std::vector<long> primes;
    long prime_bound = 50;
    Format format = Format::json;
    std::optional<std::string> out_path;
};

// Exit status: 0 success, 1 a certificate failed, 2 usage or computation
// error (diagnostic on `err`).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace mirrorcert::cli
