#pragma once

#include "dgv/dg.hpp"

#include <stdexcept>
#include <string>

namespace dgv {

// Schema or validation failure while reading a structure file; the message
// names the offending field or id.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string dg_to_json(const DoubleGroupoid& g);
DoubleGroupoid dg_from_json(const std::string& text);

void save_dg(const DoubleGroupoid& g, const std::string& path);
DoubleGroupoid load_dg(const std::string& path);

// Resolves "-" (stdin), "gen:<builder expr>" or a file path.
DoubleGroupoid load_dg_input(const std::string& spec);

}  // namespace dgv
