#pragma once

#include <stdexcept>
#include <string>

namespace talex {

// Input text that does not parse, or a structurally malformed diagram /
// manifest.  Carries file and line when known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::string file = {}, int line = 0)
        : std::runtime_error(file.empty() ? what
                                          : file + ":" + std::to_string(line) + ": " + what),
          file_(std::move(file)),
          line_(line) {}

    const std::string& file() const { return file_; }
    int line() const { return line_; }

private:
    std::string file_;
    int line_;
};

// Well-formed input that fails a semantic check: a representation that does
// not satisfy a relator, a non-unit matrix image, a meridian with the wrong
// abelian image.
class verify_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Presentation outside the scope of the theory: abelianization not infinite
// cyclic, wrong deficiency, or every normalization column unusable.
class degenerate_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// det Phi(x_k - 1) = 0 for one particular column; recoverable by trying
// another column.
class vanishing_denominator : public degenerate_error {
    using degenerate_error::degenerate_error;
};

} // namespace talex
