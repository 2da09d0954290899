#include <gtest/gtest.h>

#include <random>

#include "lcgraph/decomposition.hpp"
#include "support.hpp"

using namespace lcg;
using lcg::testing::enumerate_graphs;
using lcg::testing::factor_cd;
using lcg::testing::naive_local_complement;
using lcg::testing::naive_lower_product;
using lcg::testing::naive_rank;
using lcg::testing::random_bits;
using lcg::testing::random_domain_pair;
using lcg::testing::random_graph;
using lcg::testing::to_dense;

namespace {

InvertibleCDForm random_form(std::mt19937_64& rng, std::size_t n) {
    const Graph g = random_graph(rng, n);
    for (;;) {
        BitVec c = random_bits(rng, n), d = random_bits(rng, n);
        if (naive_rank(naive_lower_product(g, c, d)) == n) return InvertibleCDForm(g, c, d);
    }
}

// Replays the expanded vertex sequence with the naive edge-toggle oracle.
lcg::testing::Dense naive_replay(const Graph& g, const LCSequence& seq) {
    auto adj = to_dense(g.adjacency());
    for (auto v : seq.expanded()) adj = naive_local_complement(adj, v.index());
    return adj;
}

}  // namespace

TEST(InvertibleCDForm, StoresProduct) {
    const Graph edge = Graph::complete(2);
    const InvertibleCDForm f(edge, BitVec::from_string("10"), BitVec::from_string("11"));
    EXPECT_EQ(f.r(), BitMatrix::from_ints({{1, 1}, {0, 1}}));
    EXPECT_THROW(InvertibleCDForm(Graph::empty(2), BitVec::from_string("11"), BitVec::from_string("00")), SingularError);
}

TEST(FTransform, Examples) {
    EXPECT_EQ(f_transform(identity(3), VertexId(1)), identity(3));
    EXPECT_EQ(f_transform(BitMatrix::from_ints({{1, 1}, {0, 1}}), VertexId(1)), identity(2));
    EXPECT_THROW((void)f_transform(identity(2), VertexId(3)), std::out_of_range);
}

TEST(FTransform, PreservesClassOfInvertibleCDForms) {
    std::mt19937_64 rng(70);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + rng() % 10;
        const auto form = random_form(rng, n);
        const VertexId i(1 + rng() % n);
        const BitMatrix out = f_transform(form.r(), i);
        EXPECT_EQ(naive_rank(to_dense(out)), n);
        const auto factor = factor_cd(out);
        ASSERT_TRUE(factor.has_value()) << out.to_string();
        EXPECT_EQ(naive_lower_product(factor->theta, factor->c, factor->d), to_dense(out));
    }
}

TEST(FTransform, TracksLocalComplementOnTheta) {
    // When C_ii = D_ii = 1, f_i(C theta + D) = C' g_i(theta) + D' with
    // C' = C + Lambda_i and D' diagonal.
    std::mt19937_64 rng(71);
    int tested = 0;
    while (tested < 300) {
        const std::size_t n = 2 + rng() % 8;
        const auto form = random_form(rng, n);
        const std::size_t i = rng() % n;
        if (!form.c()[i] || !form.d()[i]) continue;
        ++tested;
        const BitMatrix out = f_transform(form.r(), VertexId::from_index(i));
        const Graph next = local_complement(form.theta(), VertexId::from_index(i));
        EXPECT_EQ(out.row(i), BitVec::unit(n, i));
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            BitVec off = out.row(r);
            off.set(r, false);
            if (form.c()[r])
                EXPECT_EQ(off, next.adjacency().row(r)) << "row " << r;
            else
                EXPECT_TRUE(off.none()) << "row " << r;
        }
    }
}

TEST(ReduceToIdentity, Examples) {
    const Graph edge = Graph::complete(2);
    EXPECT_TRUE(reduce_to_identity(InvertibleCDForm(edge, BitVec(2), BitVec::ones(2))).empty());

    const auto single = reduce_to_identity(InvertibleCDForm(edge, BitVec::from_string("10"), BitVec::from_string("11")));
    EXPECT_EQ(single.steps, (std::vector<LCStep>{LCStep::single(VertexId(1))}));

    const auto triple = reduce_to_identity(InvertibleCDForm(edge, BitVec::from_string("11"), BitVec::from_string("00")));
    EXPECT_EQ(triple.steps, (std::vector<LCStep>{LCStep::triple(VertexId(1), VertexId(2))}));
    EXPECT_EQ(apply_f_sequence(edge.adjacency(), triple), identity(2));
}

TEST(ReduceToIdentity, RandomFormsReachIdentity) {
    std::mt19937_64 rng(72);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + rng() % 12;
        const auto form = random_form(rng, n);
        const auto seq = reduce_to_identity(form);
        EXPECT_EQ(apply_f_sequence(form.r(), seq), identity(n));
        EXPECT_TRUE(singles_precede_triples(seq));
        EXPECT_TRUE(all_indices_distinct(seq));
        EXPECT_LE(seq.steps.size(), 3 * n);
    }
}

TEST(ReduceToIdentity, ExhaustiveSmall) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (std::uint32_t cd = 0; cd < (1u << (2 * n)); ++cd) {
                BitVec c(n), d(n);
                for (std::size_t i = 0; i < n; ++i) {
                    c.set(i, cd >> i & 1u);
                    d.set(i, cd >> (n + i) & 1u);
                }
                if (naive_rank(naive_lower_product(g, c, d)) != n) continue;
                const InvertibleCDForm form(g, c, d);
                const auto seq = reduce_to_identity(form);
                ASSERT_EQ(apply_f_sequence(form.r(), seq), identity(n));
                EXPECT_TRUE(singles_precede_triples(seq));
                EXPECT_TRUE(all_indices_distinct(seq));
            }
}

TEST(SequenceChecks, DetectAnomalies) {
    LCSequence repeated{{LCStep::single(VertexId(1)), LCStep::triple(VertexId(2), VertexId(1))}};
    EXPECT_FALSE(all_indices_distinct(repeated));
    EXPECT_TRUE(singles_precede_triples(repeated));
    LCSequence misordered{{LCStep::triple(VertexId(2), VertexId(3)), LCStep::single(VertexId(1))}};
    EXPECT_TRUE(all_indices_distinct(misordered));
    EXPECT_FALSE(singles_precede_triples(misordered));
}

TEST(ApplySequence, Examples) {
    std::mt19937_64 rng(73);
    const Graph g = random_graph(rng, 6);
    EXPECT_EQ(apply_sequence(g, {}), g);
    EXPECT_EQ(apply_sequence(g, LCSequence{{LCStep::single(VertexId(3)), LCStep::single(VertexId(3))}}), g);

    const Graph edge = Graph::complete(2);
    const LCSequence t{{LCStep::triple(VertexId(1), VertexId(2))}};
    EXPECT_EQ(apply_sequence(edge, t),
              local_complement(local_complement(local_complement(edge, VertexId(1)), VertexId(2)), VertexId(1)));
    EXPECT_THROW((void)apply_sequence(edge, LCSequence{{LCStep::single(VertexId(3))}}), std::out_of_range);
}

TEST(Decompose, IdentityGivesEmptySequence) {
    std::mt19937_64 rng(74);
    const Graph g = random_graph(rng, 7);
    EXPECT_TRUE(decompose_local_clifford(LocalCliffordOp::identity(7), g).empty());
}

TEST(Decompose, LocalComplementClifford) {
    std::mt19937_64 rng(75);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 10;
        const Graph g = random_graph(rng, n);
        const VertexId i(1 + rng() % n);
        const auto seq = decompose_local_clifford(local_complement_clifford(g, i), g);
        EXPECT_EQ(apply_sequence(g, seq), local_complement(g, i));
    }
}

TEST(Decompose, RejectsOutsideDomain) {
    EXPECT_THROW((void)decompose_local_clifford(LocalCliffordOp::hadamard_all(3), Graph::empty(3)), NotInDomainError);
    EXPECT_THROW((void)decompose_local_clifford(LocalCliffordOp::uniform(2, QubitSymplectic::phase()), Graph::complete(2)),
                 NotInDomainError);
}

TEST(Decompose, RandomPairsMatchCliffordAction) {
    std::mt19937_64 rng(76);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + rng() % 10;
        const auto [q, g] = random_domain_pair(rng, n);
        const auto seq = decompose_local_clifford(q, g);
        const auto report = graph_action(q, g);
        ASSERT_TRUE(report.in_domain());
        EXPECT_EQ(to_dense(report.image->adjacency()), naive_replay(g, seq));
        EXPECT_TRUE(singles_precede_triples(seq));
    }
}

TEST(Decompose, RejectionSampledPairs) {
    // Uniform local Cliffords, kept only when the graph lies in their domain.
    std::mt19937_64 rng(77);
    const QubitSymplectic ops[] = {{1, 0, 0, 1}, {0, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 0}};
    int kept = 0;
    while (kept < 200) {
        const std::size_t n = 1 + rng() % 5;
        const Graph g = random_graph(rng, n);
        LocalCliffordOp q = LocalCliffordOp::identity(n);
        for (std::size_t i = 0; i < n; ++i) q = q.with_qubit(i, ops[rng() % 6]);
        const auto report = graph_action(q, g);
        if (!report.in_domain()) continue;
        ++kept;
        EXPECT_EQ(apply_sequence(g, decompose_local_clifford(q, g)), *report.image);
    }
}
