#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sts {

// All library failures carry a stable machine-readable name ("PairUncovered",
// "BadOrderModSix", ...) plus a human-readable detail string. The CLI prints
// the name on stderr and maps it to a nonzero exit code.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

}  // namespace sts
