#ifndef VCA_VERIFY_HPP
#define VCA_VERIFY_HPP

#include <functional>
#include <string>

namespace vca {

/// Runs the full self-contained verification suite. Emits one line per
/// criterion ("PASS n: ..." / "FAIL n: ...") plus informational lines
/// prefixed "info:". Returns the number of failed criteria.
int run_verification(const std::function<void(const std::string&)>& emit);

}  // namespace vca

#endif
