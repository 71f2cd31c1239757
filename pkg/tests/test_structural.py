import itertools

import numpy as np
import pytest

from mincontrol import (
    DimensionMismatch,
    MissingSelfLoops,
    NotSquare,
    StateDigraph,
    StructuralMatrix,
    StructuralVector,
    compatible_mscp_solution,
    is_structurally_controllable,
    scc_dag,
    solve_mscp,
    state_digraph,
)


def golden_pattern(golden_a):
    return StructuralMatrix.from_numeric(golden_a)


def random_full_diagonal_pattern(rng, n, density=0.3):
    mask = rng.uniform(size=(n, n)) < density
    np.fill_diagonal(mask, True)
    return StructuralMatrix(n, n, tuple(mask.ravel().tolist()))


class TestStateDigraph:
    def test_worked_example(self, golden_a):
        g = state_digraph(golden_pattern(golden_a))
        incoming_2 = {(i, j) for i, j in g.edges if j == 2}
        incoming_4 = {(i, j) for i, j in g.edges if j == 4}
        assert incoming_2 == {(2, 2)}
        assert incoming_4 == {(4, 4)}
        for a, b in itertools.permutations((1, 3, 5), 2):
            assert (a, b) in g.edges

    def test_diagonal_only(self):
        g = state_digraph(StructuralMatrix.from_rows(["*00", "0*0", "00*"]))
        assert g.edges == frozenset({(1, 1), (2, 2), (3, 3)})

    def test_dense_two_by_two(self):
        g = state_digraph(StructuralMatrix.from_rows(["**", "**"]))
        assert g.edges == frozenset({(1, 1), (1, 2), (2, 1), (2, 2)})

    def test_edge_orientation(self):
        # only entry (2, 1) is set: state 2 sees state 1, so x1 -> x2
        g = state_digraph(StructuralMatrix.from_rows(["00", "*0"]))
        assert g.edges == frozenset({(1, 2)})

    def test_not_square(self):
        with pytest.raises(NotSquare):
            state_digraph(StructuralMatrix.from_rows(["**0", "0*0"]))


class TestSccDag:
    def test_worked_example(self, golden_a):
        dag = scc_dag(state_digraph(golden_pattern(golden_a)))
        assert dag.components == ((1, 3, 5), (2,), (4,))
        assert dag.non_top_linked_components == ((2,), (4,))

    def test_single_component(self):
        g = StateDigraph(3, frozenset({(1, 2), (2, 3), (3, 1)}))
        dag = scc_dag(g)
        assert dag.components == ((1, 2, 3),)
        assert dag.non_top_linked == (True,)

    def test_chain(self):
        g = StateDigraph(
            3, frozenset({(1, 1), (2, 2), (3, 3), (1, 2), (2, 3)})
        )
        dag = scc_dag(g)
        assert dag.components == ((1,), (2,), (3,))
        assert dag.non_top_linked == (True, False, False)

    def test_membership(self, golden_a):
        dag = scc_dag(state_digraph(golden_pattern(golden_a)))
        assert dag.membership == (0, 1, 0, 2, 0)

    def test_relabeling_invariance(self):
        rng = np.random.default_rng(31)
        for _ in range(15):
            n = int(rng.integers(2, 9))
            pattern = random_full_diagonal_pattern(rng, n)
            dag = scc_dag(state_digraph(pattern))
            perm = rng.permutation(n)  # vertex v -> perm[v-1] + 1
            mask = np.array(pattern.mask).reshape(n, n)
            permuted = np.empty_like(mask)
            for i in range(n):
                for j in range(n):
                    permuted[perm[i], perm[j]] = mask[i, j]
            dag_p = scc_dag(
                state_digraph(
                    StructuralMatrix(n, n, tuple(permuted.ravel().tolist()))
                )
            )
            mapped = sorted(
                tuple(sorted(perm[v - 1] + 1 for v in comp))
                for comp in dag.components
            )
            assert mapped == sorted(dag_p.components)
            flags = {
                tuple(sorted(perm[v - 1] + 1 for v in comp)): flag
                for comp, flag in zip(dag.components, dag.non_top_linked)
            }
            for comp, flag in zip(dag_p.components, dag_p.non_top_linked):
                assert flags[comp] == flag


class TestSolveMscp:
    def test_worked_example(self, golden_a):
        assert str(solve_mscp(golden_pattern(golden_a))) == "0*0*0"

    def test_strongly_connected(self):
        pattern = StructuralMatrix.from_rows(["**0", "***", "*0*"])
        assert str(solve_mscp(pattern)) == "*00"

    def test_diagonal_needs_every_state(self):
        pattern = StructuralMatrix.from_rows(["*00", "0*0", "00*"])
        assert str(solve_mscp(pattern)) == "***"

    def test_missing_self_loops(self):
        pattern = StructuralMatrix.from_rows(["0*", "**"])
        with pytest.raises(MissingSelfLoops) as excinfo:
            solve_mscp(pattern)
        assert "matching" in str(excinfo.value)

    def test_star_count_equals_non_top_linked_count(self):
        rng = np.random.default_rng(13)
        for _ in range(25):
            n = int(rng.integers(2, 9))
            pattern = random_full_diagonal_pattern(rng, n)
            solution = solve_mscp(pattern)
            dag = scc_dag(state_digraph(pattern))
            assert solution.nnz == sum(dag.non_top_linked)

    def test_minimality_exhaustive(self):
        rng = np.random.default_rng(29)
        for _ in range(25):
            n = int(rng.integers(2, 9))
            pattern = random_full_diagonal_pattern(rng, n)
            solution = solve_mscp(pattern)
            assert is_structurally_controllable(pattern, solution)
            for pos in solution.support:
                weakened = StructuralVector.from_support(
                    [q for q in solution.support if q != pos], n
                )
                assert not is_structurally_controllable(pattern, weakened)


class TestIsStructurallyControllable:
    def test_worked_positive(self, golden_a):
        assert is_structurally_controllable(
            golden_pattern(golden_a), StructuralVector.from_text("0*0*0")
        )

    def test_worked_negative(self, golden_a):
        assert not is_structurally_controllable(
            golden_pattern(golden_a), StructuralVector.from_text("*0000")
        )

    def test_full_input_always_works(self):
        rng = np.random.default_rng(41)
        for _ in range(10):
            n = int(rng.integers(2, 7))
            pattern = random_full_diagonal_pattern(rng, n)
            assert is_structurally_controllable(
                pattern, StructuralVector((True,) * n)
            )

    def test_requires_self_loops(self):
        pattern = StructuralMatrix.from_rows(["0*", "*0"])
        with pytest.raises(MissingSelfLoops):
            is_structurally_controllable(pattern, StructuralVector.from_text("**"))

    def test_length_mismatch(self, golden_a):
        with pytest.raises(DimensionMismatch):
            is_structurally_controllable(
                golden_pattern(golden_a), StructuralVector.from_text("***")
            )


class TestCompatibleSolution:
    def test_picks_vertices_inside_reference(self):
        # two-vertex source component {1,2}; reference actuates vertex 2 only
        pattern = StructuralMatrix.from_rows(["**0", "**0", "0**"])
        reference = StructuralVector.from_text("0*0")
        canonical = solve_mscp(pattern)
        witness = compatible_mscp_solution(pattern, reference)
        assert str(canonical) == "*00"
        assert str(witness) == "0*0"
        assert is_structurally_controllable(pattern, witness)
        assert witness.nnz == canonical.nnz

    def test_falls_back_to_lowest_vertex(self):
        pattern = StructuralMatrix.from_rows(["*00", "0*0", "00*"])
        witness = compatible_mscp_solution(
            pattern, StructuralVector.from_text("000")
        )
        assert str(witness) == "***"
