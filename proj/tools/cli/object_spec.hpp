#pragma once

// Object spec grammar shared by the Ver_p and sVec_2 commands:
//   spec := term ('+' term)*      term := [count '*'] atom
// with atoms '1', 'L<k>' (Ver_p) or '1', 'W' (sVec_2). Whitespace is ignored.

#include "vercat/svec2.hpp"
#include "vercat/verlinde.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace vercat::cli {

class SpecError : public std::invalid_argument {
public:
    SpecError(const std::string& text, std::size_t position, const std::string& message);

    std::size_t position() const noexcept { return position_; }
    /// Message plus the input with a caret under the offending position.
    const std::string& pretty() const noexcept { return pretty_; }

private:
    std::size_t position_;
    std::string pretty_;
};

struct SpecTerm {
    std::uint64_t count = 1;
    char atom = '1';        ///< '1', 'L' or 'W'
    std::uint64_t index = 0; ///< k of L<k>
    std::size_t position = 0;
};

/// Parses the terms; atoms are checked against `allowed` (e.g. "1L").
std::vector<SpecTerm> parse_terms(const std::string& text, const std::string& allowed);

ver::VerObject parse_ver_object(const std::string& text, std::uint64_t p);
svec2::DModule parse_dmodule(const std::string& text);

/// Comma-separated basis names of `ambient`; throws SpecError on unknown names.
std::vector<std::size_t> parse_basis_names(const std::string& text, const svec2::DModule& ambient);

} // namespace vercat::cli
