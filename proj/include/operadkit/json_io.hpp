#pragma once

#include "operadkit/dg_algebra.hpp"
#include "operadkit/transfer.hpp"

#include <stdexcept>
#include <string>

namespace operadkit {

// Schema violation while reading a JSON input; the message names the
// offending field or entry.  Mathematical defects (d.d != 0, a failing
// algebra axiom, ...) are not detected here.
struct JsonError : std::runtime_error {
    explicit JsonError(const std::string& message)
        : std::runtime_error(message)
    {
    }
};

// {"degrees": {"0": ["e1", ...], ...}, "d": [[from, to, "num/den"], ...]}
// where from/to are basis names and every d entry drops degree by one.
// Unknown fields are rejected.
ChainComplex parse_complex(const std::string& text);

// The complex fields plus optional "star"/"bullet" arrays of
// [x, y, {name: "num/den", ...}] triples; a missing product is the zero
// product, so every complex file is also an algebra file.
DgAs2Algebra parse_algebra(const std::string& text);

// {"complex": <complex>, "structure": {"(i,j)": [[[names...],
// {name: "num/den", ...}], ...], ...}}.  Index pairs not listed below the
// largest present weight are treated as zero operations.
TransferredStructure parse_structure(const std::string& text);

// Canonical serializations: two-space indent, sorted object keys, entry
// lists sorted by basis name, all coefficients as "num/den".  Zero rows,
// empty degrees, and empty products are omitted.
std::string complex_to_json(const ChainComplex& c);
std::string algebra_to_json(const DgAs2Algebra& alg);
std::string structure_to_json(const TransferredStructure& t);

}  // namespace operadkit
