#pragma once

#include <iosfwd>
#include <string>

#include "twwcol/trigraph.hpp"

namespace twwcol {

// Witness files use the PACE 2023 convention: each of the n-1 lines `u v`
// contracts node v into node u, u and v being 1-based vertex ids and the
// merged node keeping the id u. Internally the merged node gets the next id
// n+k; the reader and writer translate between the two schemes.
ContractionSequence read_witness(std::istream& in, const Graph& g);
ContractionSequence read_witness_file(const std::string& path, const Graph& g);

void write_witness(std::ostream& out, const ContractionSequence& seq);
void write_witness_file(const std::string& path, const ContractionSequence& seq);

}  // namespace twwcol
