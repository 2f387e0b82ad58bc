#ifndef QHFORGE_JSON_IO_HPP
#define QHFORGE_JSON_IO_HPP

#include <string>

#include "qhforge/algebra.hpp"

namespace qhforge {

/// Canonical JSON for the algebra interchange format:
/// {"p","dim","unit","mult":[[i,j,k,c]...],"idempotents":[{"label","vector"}...],"grading"?}
/// mult entries sorted by (i,j,k); serialization is byte-reproducible.
std::string algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const std::string& text);

std::string poset_to_json(const std::vector<std::string>& labels,
                          const std::vector<std::pair<std::string, std::string>>& covers);

void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace qhforge

#endif
