#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace coreborder {

using WarningSink = std::function<void(std::string_view)>;

/// Routes a non-fatal warning to the installed sink (stderr by default).
void warn(std::string_view message);

/// Replaces the process-wide warning sink and returns the previous one.
/// Passing an empty function restores the stderr default.
WarningSink set_warning_sink(WarningSink sink);

/// Collects warnings for the lifetime of the object, then restores the
/// previous sink.
class ScopedWarningCapture {
public:
    ScopedWarningCapture();
    ~ScopedWarningCapture();
    ScopedWarningCapture(const ScopedWarningCapture&) = delete;
    ScopedWarningCapture& operator=(const ScopedWarningCapture&) = delete;

    const std::vector<std::string>& messages() const { return messages_; }

private:
    std::vector<std::string> messages_;
    WarningSink previous_;
};

}  // namespace coreborder
