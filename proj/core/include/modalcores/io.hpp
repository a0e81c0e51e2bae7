#pragma once

#include <string>
#include <vector>

#include "modalcores/dataset.hpp"
#include "modalcores/mcores.hpp"

namespace mcores {

// Versioned record stream of modal-set estimates: one record per estimate
// carrying rank, creation level, founder and member indices. Writes are
// byte-deterministic for identical inputs; comment_lines (provenance) are
// emitted verbatim after the header, each prefixed with "# ".
void write_estimates(const std::string& path, const std::vector<ModalSetEstimate>& estimates,
                     const std::vector<std::string>& comment_lines = {});
std::vector<ModalSetEstimate> read_estimates(const std::string& path);

// Single-column label file aligned with input row order.
void write_labels(const std::string& path, const std::vector<int>& labels,
                  const std::vector<std::string>& comment_lines = {});
std::vector<int> read_labels(const std::string& path);

// Ground-truth point sets, one set per record, same decimal format as the
// dataset CSV.
void write_truth(const std::string& path, const std::vector<Dataset>& truth,
                 const std::vector<std::string>& comment_lines = {});
std::vector<Dataset> read_truth(const std::string& path);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace mcores
