import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kostka import core
from oracles import bubble_sign, partition_count


def test_compositions_canonical_order_n3():
    assert core.compositions_of(3) == [(3,), (2, 1), (1, 2), (1, 1, 1)]


def test_compositions_of_one():
    assert core.compositions_of(1) == [(1,)]


@pytest.mark.parametrize("n", range(1, 11))
def test_composition_count_and_uniqueness(n):
    comps = core.compositions_of(n)
    assert len(comps) == 2 ** (n - 1)
    assert len(set(comps)) == len(comps)
    assert all(sum(c) == n and core.is_composition(c) for c in comps)


def test_compositions_degree_zero_rejected():
    with pytest.raises(core.DegreeError):
        core.compositions_of(0)
    with pytest.raises(core.DegreeError):
        core.partitions_of(0)


def test_partitions_reverse_lex_order():
    assert core.partitions_of(1) == [(1,)]
    assert core.partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("n", range(1, 11))
def test_partition_count_matches_pentagonal_recurrence(n):
    parts = core.partitions_of(n)
    assert len(parts) == partition_count(n)
    assert parts[0] == (n,)
    assert all(core.is_partition(p) and sum(p) == n for p in parts)


def test_partitions_of_eight_has_22():
    assert len(core.partitions_of(8)) == 22
    assert len(core.compositions_of(8)) == 128


def test_dec():
    assert core.dec((2, 3, 1, 1)) == (3, 2, 1, 1)
    assert core.dec((5, 1, 2)) == (5, 2, 1)
    assert core.dec((4,)) == (4,)


def test_flatten():
    assert core.flatten((2, 0, 3, 0, 1)) == (2, 3, 1)
    assert core.flatten((5, 1, 2, 0)) == (5, 1, 2)
    assert core.flatten((2, 3, 0)) == (2, 3)
    with pytest.raises(core.InvalidContentError):
        core.flatten((1, -1, 2))


def test_dominates():
    assert core.dominates((3, 1), (2, 2))
    assert not core.dominates((2, 2), (3, 1))
    assert core.dominates((2, 1, 2), (2, 1, 2))
    with pytest.raises(ValueError):
        core.dominates((2,), (1, 1, 1))


def test_lex_geq():
    assert core.lex_geq((2, 2), (2, 1, 1))
    assert not core.lex_geq((1, 3), (2, 2))
    assert core.lex_geq((2, 2), (2, 2))


@pytest.mark.parametrize("n", range(1, 9))
def test_dominance_implies_lex(n):
    comps = core.compositions_of(n)
    for alpha, beta in itertools.product(comps, repeat=2):
        if core.dominates(alpha, beta):
            assert core.lex_geq(alpha, beta)


def test_perm_compose_matches_value_swap():
    s4 = core.transposition(6, 4)
    assert core.perm_compose(s4, (1, 2, 4, 3, 6, 5)) == (1, 2, 5, 3, 6, 4)
    assert core.swap_values((1, 2, 4, 3, 6, 5), 4) == (1, 2, 5, 3, 6, 4)


def test_perm_compose_identity_and_involution():
    sigma = (3, 1, 4, 2)
    ident = core.identity_perm(4)
    assert core.perm_compose(sigma, ident) == sigma
    s2 = core.transposition(4, 2)
    assert core.perm_compose(s2, core.perm_compose(s2, sigma)) == sigma
    with pytest.raises(ValueError):
        core.perm_compose((1, 2), (1, 2, 3))


def test_perm_sign_examples():
    assert core.perm_sign((1, 3, 4, 2)) == 1
    assert core.perm_sign((1, 2, 3)) == 1
    assert core.perm_sign((2, 1, 3)) == -1


@pytest.mark.parametrize("n", range(1, 7))
def test_perm_sign_exhaustive(n):
    for sigma in core.permutations_of(n):
        expected = bubble_sign(sigma)
        assert core.perm_sign(sigma) == expected
        assert core.perm_sign(sigma) == (-1) ** sum(core.lehmer_code(sigma))
        for k in range(1, n):
            assert core.perm_sign(core.swap_values(sigma, k)) == -expected


def test_lehmer_examples():
    assert core.lehmer_code((1, 2, 3, 4)) == (0, 0, 0, 0)
    assert core.lehmer_code((2, 4, 1, 3)) == (1, 2, 0, 0)


@pytest.mark.parametrize("n", [6, 7])
def test_lehmer_bijects_onto_code_box(n):
    import math

    seen = set()
    for sigma in core.permutations_of(n):
        code = core.lehmer_code(sigma)
        assert all(0 <= code[i] <= n - (i + 1) for i in range(n))
        assert core.lehmer_decode(code) == sigma
        seen.add(code)
    assert len(seen) == math.factorial(n)


def test_embed():
    assert core.embed((1, 3, 2), 5) == (1, 3, 2, 4, 5)
    assert core.embed(core.identity_perm(3), 6) == core.identity_perm(6)
    with pytest.raises(ValueError):
        core.embed((1, 2, 3), 2)


def test_embed_preserves_sign_s5():
    for sigma in core.permutations_of(5):
        assert core.perm_sign(core.embed(sigma, 8)) == core.perm_sign(sigma)


def test_swap_positions():
    assert core.swap_positions((3, 1, 2), 1) == (1, 3, 2)
    assert core.swap_positions((3, 1, 2), 2) == (3, 2, 1)


def test_delete_fixed_point():
    assert core.delete_fixed_point((1, 2, 3), 3) == (1, 2)
    assert core.delete_fixed_point((2, 1, 3, 5, 4), 3) == (2, 1, 4, 3)
    with pytest.raises(ValueError):
        core.delete_fixed_point((2, 1, 3), 1)


def test_cycles_to_perm():
    assert core.cycles_to_perm([(2, 1), (4, 3, 2), (3,), (4,)], 4) == (2, 4, 1, 3)
    assert core.cycles_to_perm([(3, 4), (1, 3), (1, 2), (1,)], 4) == (2, 4, 1, 3)


@given(st.permutations(list(range(1, 8))))
def test_lehmer_roundtrip_property(images):
    sigma = tuple(images)
    assert core.lehmer_decode(core.lehmer_code(sigma)) == sigma
    assert core.perm_compose(sigma, core.perm_inverse(sigma)) == core.identity_perm(7)
