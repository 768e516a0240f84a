#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsym {

/// Malformed textual input. `position()` is the 1-based index of the offending
/// entry (or character, for scalar literals); 0 when no single position applies.
class ParseError : public std::invalid_argument {
public:
    explicit ParseError(const std::string& what, std::size_t position = 0)
        : std::invalid_argument(position == 0 ? what : what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace hsym
