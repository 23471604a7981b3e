from fractions import Fraction

import numpy as np
import pytest

from drgjacobi import (
    IntersectionSequence,
    NonIntegralCountError,
    NonIntegralDegreeError,
    NonRegularityWitness,
    SequenceError,
    certify_distance_regular,
    degree_sequence,
    distance_poly_eval,
    graph_from_edges,
    graph_from_name,
    isoscycle_numbers,
    parse_edge_list,
    sequence_from_pairs,
    verify_recurrence,
)
from drgjacobi.oracle import dense_distance_matrices

PRISM_TEXT = "0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n0 3\n1 4\n2 5"


def brute_force_counts(g, seq):
    """Recount every ordered pair's two intersection numbers from scratch."""
    from drgjacobi import bfs_distances

    for i in range(g.vertex_count):
        dist = bfs_distances(g, i)
        for j in range(g.vertex_count):
            k = dist[j]
            if k == 0:
                continue
            closer = sum(1 for u in g.adjacency[j] if dist[u] == k - 1)
            farther = sum(1 for u in g.adjacency[j] if dist[u] == k + 1)
            assert closer == seq.a[k - 1]
            expected_far = seq.b[k] if k < seq.d else 0
            assert farther == expected_far


@pytest.mark.parametrize("n", range(2, 9))
def test_certify_complete(n):
    seq = certify_distance_regular(graph_from_name(f"complete:{n}"))
    assert isinstance(seq, IntersectionSequence)
    assert seq.d == 1 and seq.a == (1,) and seq.b == (n - 1,)


def test_certify_petersen_brute_forced():
    g = graph_from_name("petersen")
    seq = certify_distance_regular(g)
    assert seq.a == (1, 1) and seq.b == (3, 2)
    brute_force_counts(g, seq)


def test_certify_cycles():
    even = certify_distance_regular(graph_from_name("cycle:6"))
    assert even.a == (1, 1, 2) and even.b == (2, 1, 1)
    odd = certify_distance_regular(graph_from_name("cycle:5"))
    assert odd.a == (1, 1) and odd.b == (2, 1)


def test_certify_hypercube_and_bipartite():
    q3 = certify_distance_regular(graph_from_name("hypercube:3"))
    assert q3.a == (1, 2, 3) and q3.b == (3, 2, 1)
    k33 = certify_distance_regular(graph_from_name("complete_bipartite:3"))
    assert k33.a == (1, 3) and k33.b == (3, 2)


def test_certify_prism_witness():
    g = parse_edge_list(PRISM_TEXT)
    witness = certify_distance_regular(g)
    assert isinstance(witness, NonRegularityWitness)
    assert witness.kind == "NotDistanceRegular"
    assert witness.distance == 1 and witness.count_type == "b"
    assert {witness.first_count, witness.second_count} == {1, 2}
    assert witness.recount(g) == (witness.first_count, witness.second_count)


def test_certify_path_not_regular():
    witness = certify_distance_regular(parse_edge_list("0 1\n1 2"))
    assert isinstance(witness, NonRegularityWitness)
    assert witness.kind == "NotRegular"
    assert {witness.first_count, witness.second_count} == {1, 2}


def test_certify_corpus_round_trip(corpus_entry):
    name, g, seq = corpus_entry
    assert isinstance(seq, IntersectionSequence), name
    assert verify_recurrence(g, seq)


def test_edge_flip_perturbations_yield_checkable_witnesses(corpus):
    from drgjacobi import NotConnectedError

    for name, g, _ in corpus:
        n = g.vertex_count
        edges = set(g.edges())
        for i in range(n):
            for j in range(i + 1, n):
                flipped = edges ^ {(i, j)}
                try:
                    h = graph_from_edges(sorted(flipped), vertex_count=n)
                except NotConnectedError:
                    continue
                outcome = certify_distance_regular(h)
                assert isinstance(outcome, NonRegularityWitness), (name, i, j)
                first, second = outcome.recount(h)
                assert (first, second) == (outcome.first_count, outcome.second_count)
                assert first != second


def test_sequence_invariants_enforced():
    with pytest.raises(SequenceError):
        sequence_from_pairs([(2, 3)])  # a_1 must be 1
    with pytest.raises(SequenceError):
        sequence_from_pairs([(1, 3), (1, 3)])  # alpha_1 = -1
    with pytest.raises(SequenceError):
        sequence_from_pairs([])
    with pytest.raises(SequenceError):
        IntersectionSequence((1, 0), (3, 2))
    with pytest.raises(SequenceError):
        IntersectionSequence((1,), (2, 1))


def test_degree_sequence_examples():
    petersen = sequence_from_pairs([(1, 3), (1, 2)])
    assert degree_sequence(petersen) == [1, 3, 6]
    # finite stretch of the degree-3 tree sequence: n (n-1)^(k-1)
    tree3 = sequence_from_pairs([(1, 3), (1, 2), (1, 2), (1, 2)])
    assert degree_sequence(tree3) == [1, 3, 6, 12, 24]
    assert degree_sequence(sequence_from_pairs([(1, 5)])) == [1, 5]


def test_degree_sequence_non_integral():
    with pytest.raises(NonIntegralDegreeError):
        sequence_from_pairs([(1, 4), (3, 2)])  # 4 * 2/3


def test_isoscycle_numbers_examples():
    for n in (3, 4, 7):
        seq = sequence_from_pairs([(1, n - 1)])
        assert isoscycle_numbers(seq) == [0, (n - 2) * (n - 1) // 2]
    petersen = sequence_from_pairs([(1, 3), (1, 2)])
    assert isoscycle_numbers(petersen) == [0, 0, 6]
    # interior values vanish along a tree-like stretch
    tree3 = sequence_from_pairs([(1, 3), (1, 2), (1, 2), (1, 2)])
    assert isoscycle_numbers(tree3)[:-1] == [0, 0, 0, 0]
    k2 = sequence_from_pairs([(1, 1)])
    assert isoscycle_numbers(k2) == [0, 0]


def test_isoscycle_numbers_non_integral():
    seq = sequence_from_pairs([(1, 3), (1, 1)])  # alpha_1 = 1, deg_1 = 3
    with pytest.raises(NonIntegralCountError):
        isoscycle_numbers(seq)


def test_counts_match_closed_forms(corpus_entry):
    from drgjacobi import degree_k, isoscycle_count

    _, g, seq = corpus_entry
    degs = degree_sequence(seq)
    isos = isoscycle_numbers(seq)
    for v in range(g.vertex_count):
        for k in range(seq.d + 1):
            assert degree_k(g, v, k) == degs[k]
            assert isoscycle_count(g, v, k) == isos[k]


def test_verify_recurrence_k4_reduces_to_square():
    g = graph_from_name("complete:4")
    seq = certify_distance_regular(g)
    assert verify_recurrence(g, seq)
    a = dense_distance_matrices(g)[1]
    assert np.array_equal(a @ a, 3 * np.eye(4, dtype=np.int64) + 2 * a)


def test_verify_recurrence_tampered_sequence_fails():
    g = graph_from_name("petersen")
    tampered = sequence_from_pairs([(1, 3), (2, 2)])  # feasible but wrong
    check = verify_recurrence(g, tampered)
    assert not check
    k, i, j, lhs, rhs = check.mismatch
    assert lhs != rhs
    # the reported entry is recomputable from dense products
    mats = dense_distance_matrices(g)
    assert (mats[1] @ mats[k])[i, j] == lhs


def test_alphas_and_tau_star():
    petersen = sequence_from_pairs([(1, 3), (1, 2)])
    assert petersen.alphas == (0, 0, 2)
    assert petersen.tau_star == 2
    c6 = sequence_from_pairs([(1, 2), (1, 1), (2, 1)])
    assert c6.alphas == (0, 0, 0, 0)
    assert c6.tau_star == 0


def test_distance_poly_eval_basics():
    seq = sequence_from_pairs([(1, 3), (1, 2)])
    for x in (0, 1, Fraction(7, 3)):
        assert distance_poly_eval(seq, 0, x) == 1
        assert distance_poly_eval(seq, 1, x) == x
    assert distance_poly_eval(seq, 2, 3) == 6
    with pytest.raises(ValueError):
        distance_poly_eval(seq, 3, 0)


def test_distance_poly_at_degree_equals_deg_k(corpus_entry):
    _, _, seq = corpus_entry
    degs = degree_sequence(seq)
    for k in range(seq.d + 1):
        value = distance_poly_eval(seq, k, seq.degree)
        assert value == degs[k]  # exact rational evaluation
        assert isinstance(value, (int, Fraction))


def test_json_serialization():
    seq = sequence_from_pairs([(1, 3), (1, 2)])
    assert seq.to_json() == {
        "d": 2,
        "a": [1, 1],
        "b": [3, 2],
        "degree": 3,
        "alpha": [0, 0, 2],
        "deg_k": [1, 3, 6],
    }
