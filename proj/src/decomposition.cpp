#include "lcgraph/decomposition.hpp"

#include <algorithm>
#include <string>

namespace lcg {

namespace {

// In-place x <- x + col_i(x) v^T with v = row_i(x) + x_ii e_i; equal to f_transform.
void f_transform_inplace(BitMatrix& x, std::size_t i) {
    BitVec v = x.row(i);
    if (v.get(i)) v.flip(i);
    const BitVec col = column(x, i);
    for (auto r = col.find_first(); r < col.size(); r = col.find_next(r + 1)) x.xor_into_row(r, v);
}

bool is_basis_row(const BitMatrix& x, std::size_t i) { return x.row(i).count() == 1 && x(i, i); }

}  // namespace

InvertibleCDForm::InvertibleCDForm(Graph theta, BitVec c, BitVec d)
    : theta_(std::move(theta)), c_(std::move(c)), d_(std::move(d)) {
    if (c_.size() != theta_.size() || d_.size() != theta_.size())
        throw std::invalid_argument("InvertibleCDForm: diagonal length mismatch");
    r_ = lower_product(theta_.adjacency(), c_, d_);
    if (!is_invertible(r_)) throw SingularError("InvertibleCDForm: C theta + D is singular");
}

std::vector<VertexId> LCSequence::expanded() const {
    std::vector<VertexId> out;
    for (const auto& s : steps) {
        if (s.kind == LCStep::Kind::single) {
            out.push_back(s.j);
        } else {
            out.push_back(s.j);
            out.push_back(s.k);
            out.push_back(s.j);
        }
    }
    return out;
}

bool all_indices_distinct(const LCSequence& seq) {
    std::vector<std::size_t> seen;
    for (const auto& s : seq.steps) {
        seen.push_back(s.j.value());
        if (s.kind == LCStep::Kind::triple) seen.push_back(s.k.value());
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool singles_precede_triples(const LCSequence& seq) {
    return std::is_partitioned(seq.steps.begin(), seq.steps.end(),
                               [](const LCStep& s) { return s.kind == LCStep::Kind::single; });
}

BitMatrix f_transform(const BitMatrix& x, VertexId i) {
    if (!x.is_square() || i.value() < 1 || i.value() > x.rows())
        throw std::out_of_range("f_transform: index out of range");
    const auto n = x.rows();
    const BitMatrix lambda_i = diag(BitVec::unit(n, i.index()));
    BitMatrix factor = lambda_i * x + identity(n);
    if (x(i.index(), i.index())) factor = factor + lambda_i;
    return x * factor;
}

BitMatrix apply_f_sequence(const BitMatrix& x, const LCSequence& seq) {
    BitMatrix out = x;
    for (auto v : seq.expanded()) out = f_transform(out, v);
    return out;
}

LCSequence reduce_to_identity(const InvertibleCDForm& form) {
    const auto n = form.theta().size();
    BitMatrix r = form.r();
    LCSequence seq;
    const std::size_t budget = 3 * n;

    while (!r.is_identity()) {
        if (seq.steps.size() >= budget)
            throw NonTerminationError("reduce_to_identity: exceeded " + std::to_string(budget) + " steps");

        std::size_t i0 = 0;
        while (i0 < n && !(r(i0, i0) && !is_basis_row(r, i0))) ++i0;
        if (i0 < n) {
            seq.steps.push_back(LCStep::single(VertexId::from_index(i0)));
            f_transform_inplace(r, i0);
            continue;
        }

        // Every unfinished row now has a zero diagonal.
        std::size_t j0 = 0;
        while (j0 < n && r(j0, j0)) ++j0;
        std::size_t k0 = 0;
        while (k0 < n && !r(k0, j0)) ++k0;
        if (j0 == n || k0 == n) throw std::logic_error("reduce_to_identity: input is not invertible");
        seq.steps.push_back(LCStep::triple(VertexId::from_index(j0), VertexId::from_index(k0)));
        f_transform_inplace(r, j0);
        f_transform_inplace(r, k0);
        f_transform_inplace(r, j0);
    }
    return seq;
}

LCSequence decompose_local_clifford(const LocalCliffordOp& q, const Graph& g) {
    const auto report = graph_action(q, g);
    if (!report.invertible_cd) throw NotInDomainError("graph outside domain: C theta + D is singular");
    if (!report.zero_diagonal) throw NotInDomainError("graph outside domain: image has a nonzero diagonal");

    LCSequence seq = reduce_to_identity(InvertibleCDForm(g, q.c(), q.d()));
    if (apply_sequence(g, seq) != *report.image)
        throw std::logic_error("decompose_local_clifford: sequence does not reproduce the Clifford action");
    return seq;
}

Graph apply_sequence(const Graph& g, const LCSequence& seq) {
    Graph out = g;
    for (auto v : seq.expanded()) out = local_complement(out, v);
    return out;
}

}  // namespace lcg
