#pragma once

// Placeholder during bring-up; replaced by the full CLI.
namespace shw::cli {
inline int run(int, char**) { return 0; }
}  // namespace shw::cli
