#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace homc {

// Input is malformed or violates an operation precondition.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Text parse failure with position information.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int col)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line(line), col(col) {}
    int line;
    int col;
};

// A search or construction exceeded its configured budget.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Tunable limits for the exact searches. Values are caps, not promises of
// speed; every limit can be raised by the caller.
struct Budgets {
    long long max_nodes = 200'000'000;          // backtracking nodes per search
    std::optional<double> time_limit_s;         // wall-clock deadline per operation
    int core_vertex_budget = 10;                // exhaustive core search
    std::size_t orpower_vertex_budget = 200'000;
    int partition_edge_budget_plain = 14;       // edge-partition search for C
    int partition_edge_budget_injective = 12;   // edge-partition search for IC
    int strong_vertex_budget = 6;               // brute-force strong complexity
    int strong_edge_budget = 6;
    int bipdim_vertex_budget_l2 = 16;           // complete-multipartite enumeration
    int bipdim_vertex_budget = 9;               // same, for l > 2
    bool degree_pruning = true;                 // candidate filter in injective search
};

class Deadline {
public:
    Deadline() = default;
    explicit Deadline(std::optional<double> seconds) {
        if (seconds)
            at_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(*seconds));
    }
    bool expired() const {
        return at_ && std::chrono::steady_clock::now() > *at_;
    }

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace homc
