import math

import pytest

from drgjacobi import (
    QuadratureNotConvergedError,
    SequenceError,
    density_moment,
    eigenvalues,
    family_from_name,
    kesten_mckay_density,
    moment,
    spectral_radius_tree,
    tree_sequence,
    truncated_jacobi,
)


def test_tree_sequence_pairs():
    t2 = tree_sequence(2)
    assert t2.degree == 2
    assert [t2.pair(k) for k in range(1, 6)] == [(1, 2), (1, 1), (1, 1), (1, 1), (1, 1)]
    t3 = tree_sequence(3)
    assert t3.pair(1) == (1, 3) and t3.pair(7) == (1, 2)
    assert all(t3.alpha(k) == 0 for k in range(0, 10))
    with pytest.raises(SequenceError):
        tree_sequence(1)


def test_family_from_name():
    assert family_from_name("tree:4").pair(2) == (1, 3)
    gen = family_from_name("custom:1,3;1,2;period=1")
    assert gen.pair(1) == (1, 3)
    assert gen.pair(2) == gen.pair(9) == (1, 2)
    two = family_from_name("custom:1,4;1,3;2,2;period=2")
    assert [two.pair(k) for k in range(1, 7)] == [
        (1, 4), (1, 3), (2, 2), (1, 3), (2, 2), (1, 3),
    ]


@pytest.mark.parametrize(
    "text", ["tree", "tree:x", "ring:3", "custom:1;period=1", "custom:1,3;period=5", "custom:2,3"]
)
def test_family_from_name_rejects(text):
    with pytest.raises(SequenceError):
        family_from_name(text)


def test_family_alpha_validation_per_term():
    gen = family_from_name("custom:1,3;1,3;period=1")  # alpha_1 = -1
    with pytest.raises(SequenceError):
        gen.alpha(1)
    with pytest.raises(SequenceError):
        truncated_jacobi(gen, 2)


def test_truncated_jacobi_examples():
    t3 = truncated_jacobi(tree_sequence(3), 3)
    assert t3.diag == (0.0, 0.0, 0.0)
    assert t3.offdiag == (math.sqrt(3), math.sqrt(2))
    assert t3.tau is None
    one = truncated_jacobi(tree_sequence(5), 1)
    assert one.diag == (0.0,) and one.offdiag == ()
    assert eigenvalues(one) == [0.0]
    t2 = truncated_jacobi(tree_sequence(2), 4)
    assert t2.offdiag == (math.sqrt(2), 1.0, 1.0)


def test_moment_examples():
    for n in (2, 3, 4):
        gen = tree_sequence(n)
        assert moment(gen, 0) == 1
        assert moment(gen, 2) == n
        assert all(moment(gen, k) == 0 for k in (1, 3, 5, 7, 11))
    t2 = tree_sequence(2)
    # closed walks on the two-sided path are central binomials
    for k in range(0, 13, 2):
        assert moment(t2, k) == math.comb(k, k // 2)


def test_moment_matches_dense_matrix_power():
    import numpy as np

    # a family with nonzero diagonal: degree 4, alpha_k = 1 for k >= 1
    gen = family_from_name("custom:1,4;1,2;period=1")
    dense = truncated_jacobi(gen, 10).to_dense()
    power = np.eye(10)
    for k in range(13):
        assert moment(gen, k) == pytest.approx(power[0, 0], rel=1e-12)
        power = power @ dense


def test_moment_truncation_stability():
    for n in (2, 3, 4):
        gen = tree_sequence(n)
        for k in range(13):
            minimal = (k + 1) // 2 + 1
            assert moment(gen, k) == moment(gen, k, truncation=minimal + 4)
    with pytest.raises(SequenceError):
        moment(tree_sequence(3), 10, truncation=2)


def test_kesten_mckay_density_values():
    assert kesten_mckay_density(2, 0.0) == pytest.approx(1 / (2 * math.pi), rel=1e-14)
    assert kesten_mckay_density(3, 0.0) == pytest.approx(math.sqrt(8) / (6 * math.pi), rel=1e-14)
    for n in (2, 3, 5):
        radius = 2 * math.sqrt(n - 1)
        assert kesten_mckay_density(n, radius + 1e-9) == 0.0
        assert kesten_mckay_density(n, -radius - 5.0) == 0.0
        x = 0.37 * radius
        assert kesten_mckay_density(n, x) == kesten_mckay_density(n, -x)
    assert kesten_mckay_density(3, 2 * math.sqrt(2)) == 0.0
    assert kesten_mckay_density(2, 2.0) == math.inf  # genuine endpoint singularity


def test_density_normalizes_and_matches_exact_moments():
    for n in (2, 3, 4):
        assert density_moment(n, 0) == pytest.approx(1.0, abs=1e-8)
        assert density_moment(n, 2) == pytest.approx(n, abs=1e-8)
        gen = tree_sequence(n)
        for k in range(13):
            assert abs(density_moment(n, k) - moment(gen, k)) < 1e-6
    assert density_moment(2, 4) == pytest.approx(6.0, abs=1e-8)


def test_density_moment_unreachable_tolerance():
    with pytest.raises(QuadratureNotConvergedError):
        density_moment(3, 8, quad_tol=1e-20)


def test_spectral_radius_values():
    assert spectral_radius_tree(2) == 2.0
    assert spectral_radius_tree(3) == pytest.approx(2.8284271, abs=1e-7)
    assert spectral_radius_tree(5) == 4.0


def test_truncated_radius_monotone_and_bounded():
    for n in (2, 3, 4):
        bound = spectral_radius_tree(n)
        gen = tree_sequence(n)
        previous = 0.0
        for m in (2, 5, 10, 25, 50, 100, 200):
            top = eigenvalues(truncated_jacobi(gen, m))[-1]
            assert top >= previous - 1e-12
            assert top <= bound + 1e-9
            previous = top
        assert previous > bound - 0.05  # the m = 200 truncation is already close


def test_strict_gap_to_degree():
    for n in range(3, 11):
        assert spectral_radius_tree(n) < n
