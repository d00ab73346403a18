#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "expunc/model.hpp"

namespace expunc {

// One instance with optional true and predicted values.
//
//   MIN|SORT n m          MST n V
//   i OPEN L U | i TRIV W (n lines)
//   S k id...  (m lines)  E u v (n lines, edge i on line i)
//   REAL / PRED           optional blocks of n lines "i value"
//
// Numbers are written in canonical rational form, so write(read(write(x)))
// reproduces the same bytes. Lines starting with '#' are ignored.
struct Document {
    Instance instance;
    std::optional<Values> real;
    std::optional<Values> pred;
};

std::string write_document(const Document& doc);
Document read_document(std::string_view text);

Document load_document(const std::string& path);
void save_document(const std::string& path, const Document& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Independent finite-support value distribution per element, "D i k v p v p ...".
struct Distribution {
    std::vector<std::vector<std::pair<Scalar, Scalar>>> support;  // (value, probability)
};

Distribution read_distribution(std::string_view text, const Instance& inst);
std::string write_distribution(const Distribution& dist);

}  // namespace expunc
