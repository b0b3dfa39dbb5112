#pragma once

#include <cstddef>
#include <functional>

namespace deviant {

/// How many worker threads a scoring call may use. `workers == 1` runs inline.
struct ExecutionPolicy {
  std::size_t workers = 1;
};

/// Runs `task(b)` for every block b in [0, blocks). Blocks are claimed
/// dynamically, so `task` must only write state owned by its block.
void for_each_block(std::size_t blocks, const ExecutionPolicy& policy,
                    const std::function<void(std::size_t)>& task);

}  // namespace deviant
