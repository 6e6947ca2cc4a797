#pragma once

// The ccg command-line surface: build, verify, stats, incidence.

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ccg::cli {

enum class Command { Build, Verify, Stats, Incidence };
enum class GraphKind { Lambda, Gamma, Delta, M2 };
enum class Format { Dot, Graphml, Edgelist, Csv, Json, Pbm, Text };

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitInternal = 4;

struct RunConfig {
    Command command = Command::Build;
    std::uint32_t p = 2;
    GraphKind graph = GraphKind::Lambda;
    Format format = Format::Edgelist;
    /// Empty means stdout.
    std::string output;
    unsigned threads = 1;
};

/// Thrown for invalid configurations; maps to kExitUsage.
struct UsageError : std::exception {
    explicit UsageError(std::string m) : message(std::move(m)) {}
    const char* what() const noexcept override { return message.c_str(); }
    std::string message;
};

/// Throws UsageError when p is not prime, the graph or format does not fit
/// the command, or an oracle limit is exceeded.
void validate(const RunConfig& config);

/// Executes a validated configuration. Data goes to `out` (or the output
/// file), diagnostics to `err`. Returns an exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments (args[0] is the program name), validates and runs.
/// CCG_THREADS supplies the thread count when --threads is absent.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const char* to_string(GraphKind g);
const char* to_string(Format f);

}  // namespace ccg::cli
