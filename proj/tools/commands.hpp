#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace gogtool {

enum Exit : int {
    Ok = 0,
    False = 1,
    Unknown = 2,
    ParseFailure = 64,
    ValidationFailure = 65,
};

struct Options {
    std::string command;
    std::string file;
    std::optional<std::size_t> depth;
    std::size_t wordlen = 6;
    std::string element;
    std::string cylinder;
    std::string format = "text";
    std::string property;
    std::string xi;
    bool orbit = false;
};

int run(const Options& opt, std::ostream& out, std::ostream& err);

}  // namespace gogtool
