// Plain-text file formats.
//
//   matrix     "rows cols", then one line of '0'/'1' per row
//   graph      "n", then one "i j" pair per line (1-based, i < j); '#' comments
//   stabilizer n lines over {I,X,Y,Z}, optional leading sign; or a matrix block
//   clifford   "n", then n lines "a b c d"
//   sequence   one step per line, "g i" or "gg j k"
//
// Blank lines and '#' comments are skipped by every reader. Writers emit the
// canonical form, so write(read(write(x))) == write(x) byte for byte.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcgraph/clifford.hpp"
#include "lcgraph/decomposition.hpp"
#include "lcgraph/gf2.hpp"
#include "lcgraph/graph.hpp"
#include "lcgraph/stabilizer.hpp"

namespace lcg::io {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    std::size_t line;
    std::size_t column;
};

void write_matrix(std::ostream& out, const BitMatrix& m);
[[nodiscard]] BitMatrix read_matrix(std::istream& in);

void write_graph(std::ostream& out, const Graph& g);
[[nodiscard]] Graph read_graph(std::istream& in);
/// Graphs separated by a blank line.
void write_graphs(std::ostream& out, const std::vector<Graph>& graphs);
void write_dot(std::ostream& out, const Graph& g, const std::string& name = "G");

void write_stabilizer(std::ostream& out, const StabilizerGenMatrix& s);
/// Accepts either Pauli strings or a 2n x n matrix block.
[[nodiscard]] StabilizerGenMatrix read_stabilizer(std::istream& in);

void write_clifford(std::ostream& out, const LocalCliffordOp& q);
[[nodiscard]] LocalCliffordOp read_clifford(std::istream& in);

void write_sequence(std::ostream& out, const LCSequence& seq);
[[nodiscard]] LCSequence read_sequence(std::istream& in);

/// A graph file, or a stabilizer file converted to S. Graph files are those
/// whose first content line is a single integer.
[[nodiscard]] StabilizerGenMatrix read_graph_or_stabilizer(std::istream& in, bool* was_graph = nullptr);

[[nodiscard]] std::string to_text(const BitMatrix& m);
[[nodiscard]] std::string to_text(const Graph& g);
[[nodiscard]] std::string to_text(const StabilizerGenMatrix& s);
[[nodiscard]] std::string to_text(const LocalCliffordOp& q);
[[nodiscard]] std::string to_text(const LCSequence& seq);

[[nodiscard]] Graph read_graph_file(const std::string& path);
[[nodiscard]] StabilizerGenMatrix read_stabilizer_file(const std::string& path);
[[nodiscard]] LocalCliffordOp read_clifford_file(const std::string& path);
[[nodiscard]] LCSequence read_sequence_file(const std::string& path);
[[nodiscard]] BitMatrix read_matrix_file(const std::string& path);
[[nodiscard]] StabilizerGenMatrix read_graph_or_stabilizer_file(const std::string& path, bool* was_graph = nullptr);

}  // namespace lcg::io
