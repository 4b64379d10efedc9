import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverpaths.multisegments import MayaTuple, is_chain, is_n_reduced_tuple
from quiverpaths.partitions import (
    AffineWeight,
    ChargedMaya,
    DomainError,
    dim_vector_level1,
    is_n_reduced,
    level1_weight,
    young_diagrams_upto,
)
from quiverpaths.paths import (
    HighestWeight,
    LevelPath,
    _h_assignment,
    _h_exhaustive,
    enumerate_components,
    enumerate_paths,
    geometric_weight,
    ground_path,
    h_energy,
    highest_lift,
    is_lift,
    min_energy_with_support,
    n_reduce,
    path_energy,
    path_of_tuple,
    path_weight,
    tuple_leq,
)


def h_oracle(alpha, beta):
    return min(sum(a >= b for a, b in zip(alpha, p)) for p in itertools.permutations(beta))


def chain_tuples(n, charges, max_size):
    ys = list(young_diagrams_upto(max_size))
    for combo in itertools.product(ys, repeat=len(charges)):
        if sum(Y.size for Y in combo) > max_size:
            continue
        M = MayaTuple(tuple(ChargedMaya(Y, g) for Y, g in zip(combo, charges)), n)
        if is_chain(M):
            yield M


def test_highest_weight_validation():
    with pytest.raises(DomainError):
        HighestWeight(1, (1, 0))
    with pytest.raises(DomainError):
        HighestWeight(1, (0, 2))
    with pytest.raises(DomainError):
        HighestWeight(0, (0,))
    lam = HighestWeight(2, (0, 0, 2))
    assert lam.level == 3
    assert lam.w() == (2, 0, 1)
    assert lam.ground_step(1) == (0, 1, 1)


def test_h_energy_examples():
    assert h_energy((0,), (0,), 1) == 1
    assert h_energy((1,), (0,), 1) == 1
    assert h_energy((0,), (1,), 1) == 0
    assert h_energy((0, 1), (1, 1), 1) == 1
    assert h_energy((0, 0), (1, 1), 1) == 0
    with pytest.raises(ValueError):
        h_energy((0,), (0, 1), 1)
    with pytest.raises(ValueError):
        h_energy((2,), (0,), 1)


@settings(max_examples=200)
@given(st.integers(1, 6).flatmap(lambda l: st.tuples(
    st.lists(st.integers(0, 3), min_size=l, max_size=l),
    st.lists(st.integers(0, 3), min_size=l, max_size=l))))
def test_h_energy_methods_agree(pair):
    a, b = (tuple(sorted(x)) for x in pair)
    expected = h_oracle(a, b)
    assert _h_exhaustive(a, b) == expected
    assert _h_assignment(a, b) == expected
    assert h_energy(a, b, 3) == expected


def test_level_path_trims_ground_tail():
    lam = HighestWeight(1, (0,))
    # ground steps of Lambda_0 at n=1 alternate 0, 1, 0, 1, ...
    assert LevelPath(lam, ((1,), (0,), (0,), (1,))).prefix == ((1,), (0,))
    assert LevelPath(lam, ((0,), (1,))) == ground_path(lam)
    with pytest.raises(ValueError):
        LevelPath(lam, ((0, 1),))


def test_ground_path():
    for lam in (HighestWeight(1, (0,)), HighestWeight(1, (0, 1)), HighestWeight(2, (0, 2, 2))):
        g = ground_path(lam)
        assert path_energy(g) == 0
        assert path_weight(g) == AffineWeight(lam.w(), 0)


def test_path_weight_examples():
    lam = HighestWeight(1, (0,))
    eta = LevelPath(lam, ((1,),))
    assert path_energy(eta) == 1
    assert path_weight(eta) == AffineWeight((-1, 2), -1)


def test_single_charge_matches_level_one():
    for n in (1, 2, 3):
        for Y in young_diagrams_upto(9):
            if not is_n_reduced(Y, n):
                continue
            M = MayaTuple.of([(Y.parts, 0)], n)
            eta = path_of_tuple(M)
            assert path_weight(eta) == level1_weight(Y, n)
            assert path_energy(eta) == dim_vector_level1(Y, n)[0]
            assert highest_lift(eta) == M


def test_path_weight_equals_geometric_weight():
    for n, charges in ((1, (0, 0)), (1, (0, 1)), (2, (0, 2)), (2, (1, 1, 2))):
        for M in chain_tuples(n, charges, 6):
            eta = path_of_tuple(M)
            w = path_weight(eta)
            assert w.level == len(charges)
            g = geometric_weight(M)
            if is_n_reduced_tuple(M):
                assert w == g, M
            else:
                # an unreduced tuple sits below its path by whole imaginary roots
                assert w.h == g.h and w.deg > g.deg


def test_path_weight_h_part_is_additive():
    # the finite part of the weight is the sum over single-charge paths
    for n, charges in ((1, (0, 1)), (2, (0, 1)), (2, (0, 0, 2))):
        for M in chain_tuples(n, charges, 6):
            h = [0] * (n + 1)
            for m in M:
                w1 = path_weight(path_of_tuple(MayaTuple((m,), n)))
                h = [a + b for a, b in zip(h, w1.h)]
            assert path_weight(path_of_tuple(M)).h == tuple(h)


def test_is_lift():
    M = MayaTuple.of([((1,), 0), ((), 1)], 1)
    assert is_lift(M, path_of_tuple(M))
    with pytest.raises(ValueError):
        is_lift(M, ground_path(HighestWeight(1, (0, 0))))


def test_n_reduce_examples():
    M = MayaTuple.of([((2, 2), 0), ((2, 2), 1)], 1)
    R = n_reduce(M)
    assert is_n_reduced_tuple(R)
    assert is_lift(R, path_of_tuple(M))
    assert n_reduce(MayaTuple.of([((1, 1), 0)], 1)) == MayaTuple.of([((), 0)], 1)


def test_n_reduce_properties():
    for n, charges in ((1, (0, 0)), (1, (0, 1)), (2, (0, 2))):
        for M in chain_tuples(n, charges, 7):
            R = n_reduce(M)
            assert is_n_reduced_tuple(R)
            assert is_lift(R, path_of_tuple(M))
            assert tuple_leq(M, R)
            assert n_reduce(R) == R


def test_tuple_leq_is_antisymmetric():
    ms = list(chain_tuples(1, (0, 1), 4))
    for a in ms:
        for b in ms:
            if tuple_leq(a, b) and tuple_leq(b, a):
                assert a == b
    with pytest.raises(ValueError):
        tuple_leq(ms[0], MayaTuple.of([((), 0), ((), 0)], 1))


def test_highest_lift_dominates_all_lifts():
    for n, charges in ((1, (0, 0)), (1, (0, 1)), (2, (0, 1))):
        lifts = {}
        for M in chain_tuples(n, charges, 8):
            lifts.setdefault(path_of_tuple(M), []).append(M)
        for eta, ms in lifts.items():
            top = highest_lift(eta)
            assert is_n_reduced_tuple(top)
            assert all(tuple_leq(M, top) for M in ms)


def test_enumerate_paths_zero_energy():
    lam = HighestWeight(2, (0,))
    assert enumerate_paths(lam, 0) == [ground_path(lam)]
    with pytest.raises(ValueError):
        enumerate_paths(lam, -1)


@pytest.mark.parametrize("n", [1, 2])
def test_enumerate_paths_counts_reduced_diagrams(n):
    E = 4
    lam = HighestWeight(n, (0,))
    got = Counter(str(path_weight(p)) for p in enumerate_paths(lam, E))
    assert all(path_energy(p) <= E for p in enumerate_paths(lam, E))
    expected = Counter()
    for Y in young_diagrams_upto(20):
        if is_n_reduced(Y, n) and dim_vector_level1(Y, n)[0] <= E:
            assert Y.size <= 16, Y
            expected[str(level1_weight(Y, n))] += 1
    assert got == expected


def test_enumerate_components_gl_contains_reduced():
    for charges in ((0,), (0, 1), (0, 0)):
        lam = HighestWeight(1, charges)
        red = enumerate_components(lam, 3)
        full = enumerate_components(lam, 3, reduced=False)
        assert set(red) <= set(full)
        assert all(is_n_reduced_tuple(M) for M in red)
        assert any(not is_n_reduced_tuple(M) for M in full)


def test_min_energy_with_support():
    lam = HighestWeight(1, (0,))
    assert min_energy_with_support(lam, 0) == 0
    assert min_energy_with_support(lam, 1) == 1
    assert min_energy_with_support(HighestWeight(1, (0, 1)), 1) == 0
    for lam in (HighestWeight(1, (0,)), HighestWeight(1, (0, 1)), HighestWeight(2, (0, 0))):
        values = [min_energy_with_support(lam, K) for K in range(1, 9)]
        assert all(v is not None and v >= 0 for v in values)
        assert values == sorted(values)
