#include "lcgraph/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace lcg::io {

ParseError::ParseError(std::size_t line_no, std::size_t column_no, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_no) + ", column " + std::to_string(column_no) + ": " +
                         message),
      line(line_no),
      column(column_no) {}

namespace {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;  // 1-based
    std::vector<Token> tokens;
};

// Content lines with comments stripped, split on whitespace.
std::vector<Line> content_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        Line line{number, {}};
        std::size_t pos = 0;
        while (pos < raw.size()) {
            while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
            if (pos == raw.size()) break;
            const std::size_t start = pos;
            while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
            line.tokens.push_back({raw.substr(start, pos - start), start + 1});
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

std::optional<std::size_t> as_count(const std::string& text) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

std::size_t expect_count(const Line& line, std::size_t k) {
    if (k >= line.tokens.size()) throw ParseError(line.number, 1, "expected a number");
    const auto& tok = line.tokens[k];
    auto v = as_count(tok.text);
    if (!v) throw ParseError(line.number, tok.column, "expected a non-negative integer, got '" + tok.text + "'");
    return *v;
}

bool expect_bit(const Line& line, std::size_t k) {
    const auto v = expect_count(line, k);
    if (v > 1) throw ParseError(line.number, line.tokens[k].column, "expected 0 or 1");
    return v == 1;
}

void expect_arity(const Line& line, std::size_t n) {
    if (line.tokens.size() != n) {
        const std::size_t col = line.tokens.size() > n ? line.tokens[n].column : 1;
        throw ParseError(line.number, col,
                         "expected " + std::to_string(n) + " fields, found " + std::to_string(line.tokens.size()));
    }
}

ParseError end_of_input(const std::vector<Line>& lines, const std::string& what) {
    const std::size_t line = lines.empty() ? 1 : lines.back().number + 1;
    return ParseError(line, 1, "unexpected end of input: " + what);
}

BitMatrix parse_matrix(const std::vector<Line>& lines, std::size_t& pos) {
    if (pos >= lines.size()) throw end_of_input(lines, "expected matrix header 'rows cols'");
    const Line& header = lines[pos++];
    expect_arity(header, 2);
    const auto rows = expect_count(header, 0);
    const auto cols = expect_count(header, 1);
    BitMatrix m(rows, cols);
    if (cols == 0) return m;
    for (std::size_t r = 0; r < rows; ++r) {
        if (pos >= lines.size()) throw end_of_input(lines, "expected " + std::to_string(rows) + " matrix rows");
        const Line& line = lines[pos++];
        expect_arity(line, 1);
        const auto& tok = line.tokens[0];
        if (tok.text.size() != cols)
            throw ParseError(line.number, tok.column,
                             "row has " + std::to_string(tok.text.size()) + " bits, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) {
            const char ch = tok.text[c];
            if (ch != '0' && ch != '1') throw ParseError(line.number, tok.column + c, "expected '0' or '1'");
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

void expect_end(const std::vector<Line>& lines, std::size_t pos) {
    if (pos < lines.size()) throw ParseError(lines[pos].number, lines[pos].tokens[0].column, "unexpected trailing content");
}

Graph parse_graph(const std::vector<Line>& lines) {
    if (lines.empty()) throw end_of_input(lines, "expected vertex count");
    expect_arity(lines[0], 1);
    const auto n = expect_count(lines[0], 0);
    BitMatrix adj(n, n);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        expect_arity(line, 2);
        const auto a = expect_count(line, 0);
        const auto b = expect_count(line, 1);
        if (a < 1 || a > n) throw ParseError(line.number, line.tokens[0].column, "vertex outside 1.." + std::to_string(n));
        if (b < 1 || b > n) throw ParseError(line.number, line.tokens[1].column, "vertex outside 1.." + std::to_string(n));
        if (a == b) throw ParseError(line.number, line.tokens[1].column, "self-loop");
        adj.set(a - 1, b - 1);
        adj.set(b - 1, a - 1);
    }
    return Graph(std::move(adj));
}

StabilizerGenMatrix checked_stabilizer(BitMatrix m, const std::vector<Line>& lines, std::size_t first_line,
                                       bool per_generator_lines) {
    try {
        return StabilizerGenMatrix(std::move(m));
    } catch (const NotCommutingError& e) {
        const std::size_t at = per_generator_lines ? lines[first_line + e.second].number : lines[first_line].number;
        throw ParseError(at, 1, e.what());
    } catch (const StabilizerError& e) {
        throw ParseError(lines[first_line].number, 1, e.what());
    }
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return in;
}

}  // namespace

void write_matrix(std::ostream& out, const BitMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) out << m.row(r).to_string() << '\n';
}

BitMatrix read_matrix(std::istream& in) {
    const auto lines = content_lines(in);
    std::size_t pos = 0;
    auto m = parse_matrix(lines, pos);
    expect_end(lines, pos);
    return m;
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.size() << '\n';
    for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

Graph read_graph(std::istream& in) { return parse_graph(content_lines(in)); }

void write_graphs(std::ostream& out, const std::vector<Graph>& graphs) {
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        if (k) out << '\n';
        write_graph(out, graphs[k]);
    }
}

void write_dot(std::ostream& out, const Graph& g, const std::string& name) {
    out << "graph " << name << " {\n";
    for (std::size_t v = 1; v <= g.size(); ++v) out << "  " << v << ";\n";
    for (auto [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
}

void write_stabilizer(std::ostream& out, const StabilizerGenMatrix& s) {
    for (const auto& p : s.to_pauli_strings()) out << p.to_string() << '\n';
}

StabilizerGenMatrix read_stabilizer(std::istream& in) {
    const auto lines = content_lines(in);
    if (lines.empty()) throw end_of_input(lines, "expected stabilizer generators");
    if (lines[0].tokens.size() == 2 && as_count(lines[0].tokens[0].text)) {
        std::size_t pos = 0;
        auto m = parse_matrix(lines, pos);
        expect_end(lines, pos);
        return checked_stabilizer(std::move(m), lines, 0, false);
    }

    std::vector<PauliString> gens;
    for (const auto& line : lines) {
        expect_arity(line, 1);
        const auto& tok = line.tokens[0];
        try {
            gens.push_back(PauliString::parse(tok.text));
        } catch (const std::invalid_argument& e) {
            const auto bad = tok.text.find_first_not_of("IXYZ", (tok.text[0] == '+' || tok.text[0] == '-') ? 1 : 0);
            throw ParseError(line.number, tok.column + (bad == std::string::npos ? 0 : bad), e.what());
        }
    }
    const auto n = gens.size();
    for (std::size_t k = 0; k < n; ++k)
        if (gens[k].size() != n)
            throw ParseError(lines[k].number, 1,
                             "generator has " + std::to_string(gens[k].size()) + " qubits, expected " + std::to_string(n));
    BitMatrix m(2 * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q < n; ++q) {
            m.set(q, j, gens[j].z[q]);
            m.set(n + q, j, gens[j].x[q]);
        }
    return checked_stabilizer(std::move(m), lines, 0, true);
}

void write_clifford(std::ostream& out, const LocalCliffordOp& q) {
    out << q.qubits() << '\n';
    for (std::size_t i = 0; i < q.qubits(); ++i) {
        const auto s = q.qubit(i);
        out << int(s.a) << ' ' << int(s.b) << ' ' << int(s.c) << ' ' << int(s.d) << '\n';
    }
}

LocalCliffordOp read_clifford(std::istream& in) {
    const auto lines = content_lines(in);
    if (lines.empty()) throw end_of_input(lines, "expected qubit count");
    expect_arity(lines[0], 1);
    const auto n = expect_count(lines[0], 0);
    if (lines.size() != n + 1) {
        if (lines.size() < n + 1) throw end_of_input(lines, "expected " + std::to_string(n) + " qubit lines");
        expect_end(lines, n + 1);
    }
    BitVec a(n), b(n), c(n), d(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Line& line = lines[i + 1];
        expect_arity(line, 4);
        const QubitSymplectic s{expect_bit(line, 0), expect_bit(line, 1), expect_bit(line, 2), expect_bit(line, 3)};
        if (!s.invertible()) throw ParseError(line.number, 1, "qubit matrix is singular (need ad + bc = 1)");
        a.set(i, s.a);
        b.set(i, s.b);
        c.set(i, s.c);
        d.set(i, s.d);
    }
    return LocalCliffordOp(std::move(a), std::move(b), std::move(c), std::move(d));
}

void write_sequence(std::ostream& out, const LCSequence& seq) {
    for (const auto& s : seq.steps) {
        if (s.kind == LCStep::Kind::single)
            out << "g " << s.j.value() << '\n';
        else
            out << "gg " << s.j.value() << ' ' << s.k.value() << '\n';
    }
}

LCSequence read_sequence(std::istream& in) {
    LCSequence seq;
    for (const auto& line : content_lines(in)) {
        const auto& head = line.tokens[0].text;
        auto vertex = [&line](std::size_t k) {
            const auto v = expect_count(line, k);
            if (v == 0) throw ParseError(line.number, line.tokens[k].column, "vertices are 1-based");
            return VertexId(v);
        };
        if (head == "g") {
            expect_arity(line, 2);
            seq.steps.push_back(LCStep::single(vertex(1)));
        } else if (head == "gg") {
            expect_arity(line, 3);
            seq.steps.push_back(LCStep::triple(vertex(1), vertex(2)));
        } else {
            throw ParseError(line.number, line.tokens[0].column, "expected 'g' or 'gg', got '" + head + "'");
        }
    }
    return seq;
}

StabilizerGenMatrix read_graph_or_stabilizer(std::istream& in, bool* was_graph) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    std::istringstream probe(text);
    const auto lines = content_lines(probe);
    const bool graph = !lines.empty() && lines[0].tokens.size() == 1 && as_count(lines[0].tokens[0].text).has_value();
    if (was_graph) *was_graph = graph;
    std::istringstream again(text);
    if (graph) return StabilizerGenMatrix::from_graph(read_graph(again));
    return read_stabilizer(again);
}

std::string to_text(const BitMatrix& m) {
    std::ostringstream s;
    write_matrix(s, m);
    return s.str();
}

std::string to_text(const Graph& g) {
    std::ostringstream s;
    write_graph(s, g);
    return s.str();
}

std::string to_text(const StabilizerGenMatrix& st) {
    std::ostringstream s;
    write_stabilizer(s, st);
    return s.str();
}

std::string to_text(const LocalCliffordOp& q) {
    std::ostringstream s;
    write_clifford(s, q);
    return s.str();
}

std::string to_text(const LCSequence& seq) {
    std::ostringstream s;
    write_sequence(s, seq);
    return s.str();
}

Graph read_graph_file(const std::string& path) {
    auto in = open(path);
    return read_graph(in);
}

StabilizerGenMatrix read_stabilizer_file(const std::string& path) {
    auto in = open(path);
    return read_stabilizer(in);
}

LocalCliffordOp read_clifford_file(const std::string& path) {
    auto in = open(path);
    return read_clifford(in);
}

LCSequence read_sequence_file(const std::string& path) {
    auto in = open(path);
    return read_sequence(in);
}

BitMatrix read_matrix_file(const std::string& path) {
    auto in = open(path);
    return read_matrix(in);
}

StabilizerGenMatrix read_graph_or_stabilizer_file(const std::string& path, bool* was_graph) {
    auto in = open(path);
    return read_graph_or_stabilizer(in, was_graph);
}

}  // namespace lcg::io
