#pragma once

namespace arcchroma::cli {

// Full command-line entry point.  Returns the process exit code: 0 for a
// positive result, 1 for a negative but well-formed result (invalid
// coloring, exhausted or limited search), 2 for usage or input errors.
int cli_main(int argc, const char* const* argv);

}  // namespace arcchroma::cli
