#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace park {

// Input outside an operation's domain: bad entry ranges, non-parking
// preference lists, malformed partitions, non-cover pairs, and so on.
// Carries a stable machine-readable code; the CLI maps these to exit code 3.
class domain_error : public std::invalid_argument {
public:
    domain_error(std::string code, const std::string& message)
        : std::invalid_argument(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace park
