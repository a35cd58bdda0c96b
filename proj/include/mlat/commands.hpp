#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlat/io.hpp"

namespace mlat {

/// Bad invocation rather than bad data; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int domain = 2;
inline constexpr int law_violation = 3;
}  // namespace exit_code

struct CommandOptions {
  bool json = false;
  bool dot = false;
  std::uint64_t seed = 0;
  CellPolicy policy = CellPolicy::Canonical;
};

// Each command writes its report to `out` and returns an exit code. Domain
// problems surface as `Error`, bad invocations as `UsageError`.

int cmd_parse(const std::string& src, const CommandOptions& opts, std::ostream& out);
int cmd_merge(const Workspace& ws, const std::string& g, const std::string& h, bool emit_complex,
              const CommandOptions& opts, std::ostream& out);
int cmd_betti(const Workspace& ws, const std::optional<std::string>& chain,
              const CommandOptions& opts, std::ostream& out);
/// Betti numbers of a complex given directly in serialized form.
int cmd_betti_complex(const Multicomplex& x, const CommandOptions& opts, std::ostream& out);
int cmd_filtrate(const Workspace& ws, const std::optional<std::string>& start, bool fixed_order,
                 const CommandOptions& opts, std::ostream& out);
int cmd_lattice(const std::vector<std::string>& atoms, const CommandOptions& opts,
                std::ostream& out);
/// Lattice laws on k default atoms, then monoidal laws on every triple of
/// workspace graphs (or on seeded random graphs when `ws` is null).
int cmd_check_laws(const Workspace* ws, std::size_t k, const CommandOptions& opts,
                   std::ostream& out, std::size_t max_k = 5);
int cmd_incremental(const Workspace& ws, const std::string& g, const std::string& h,
                    const CommandOptions& opts, std::ostream& out);
int cmd_reference_cases(const CommandOptions& opts, std::ostream& out);
/// One JSON line per random pair on `jsonl`; agreement rates per dimension
/// as CSV on `summary`.
int cmd_fuzz(std::size_t pairs, const CommandOptions& opts, std::ostream& jsonl,
             std::ostream& summary);

/// Chain used when none is given: the workspace default, else every graph
/// tensored in name order.
std::string default_chain(const Workspace& ws);

}  // namespace mlat
