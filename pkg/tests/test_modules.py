"""Module carriers and submodule lattices."""

from __future__ import annotations

import pytest

from torsionlab.errors import NotASubmodule, RingMismatch
from torsionlab.modules import (
    element_annihilator,
    free_module,
    is_submodule,
    module_annihilator,
    module_from_ideal,
    span,
    submodule_lattice,
)
from torsionlab.rings import (
    enumerate_ideals,
    ideal_from_generators,
    product_ring,
    zmod,
)


@pytest.fixture(scope="module")
def z12():
    return zmod(12)


def test_free_rank_one_matches_ring(z12):
    m = free_module(z12, 1)
    assert m.size == 12
    # coset of (x,) gets index x because cosets sort by representative
    assert m.add_elem(4, 9) == 1
    assert m.scalar(3, 5) == 3


def test_free_rank_two_arithmetic(z12):
    m = free_module(z12, 2)
    assert m.size == 144
    i = m._coset_of[(1, 2)]
    j = m._coset_of[(3, 4)]
    assert m.reps[m.add_elem(i, j)] == (4, 6)
    assert m.reps[m.scalar(2, i)] == (2, 4)


def test_submodule_and_quotient(z12):
    m = free_module(z12, 1)
    sub = frozenset({0, 4, 8})
    assert is_submodule(m, sub)
    s = m.submodule_module(sub)
    assert s.size == 3
    q = m.quotient_module(sub)
    assert q.size == 4
    with pytest.raises(NotASubmodule):
        m.submodule_module(frozenset({0, 5}))


def test_direct_sum(z12):
    a = free_module(z12, 1)
    s = a.direct_sum(a)
    assert s.size == 144
    with pytest.raises(RingMismatch):
        a.direct_sum(free_module(zmod(6), 1))


def test_annihilators(z12):
    m = free_module(z12, 1)
    assert element_annihilator(m, 4).elements == frozenset({0, 3, 6, 9})
    sub = m.submodule_module(frozenset({0, 4, 8}))
    assert module_annihilator(sub).elements == frozenset({0, 3, 6, 9})


def test_span(z12):
    m = free_module(z12, 1)
    assert span(m, [4]) == frozenset({0, 4, 8})
    assert span(m, []) == frozenset({0})
    assert span(m, [4, 6]) == frozenset({0, 2, 4, 6, 8, 10})


def test_lattice_rank_one_matches_ideals(z12):
    lat = submodule_lattice(free_module(z12, 1))
    ideal_sets = {i.elements for i in enumerate_ideals(z12)}
    assert {s for s in lat.submodules} == ideal_sets
    assert lat.n == 6


def test_lattice_rank_one_product_ring():
    r = product_ring(zmod(2), zmod(2))
    lat = submodule_lattice(free_module(r, 1))
    assert lat.n == 4


def test_lattice_all_closed(z12):
    m = free_module(z12, 2)
    lat = submodule_lattice(m)
    for s in lat.submodules:
        assert is_submodule(m, s)


def test_lattice_contains_random_spans(z12):
    # every span of a small generating set must appear in the lattice
    m = free_module(z12, 2)
    lat = submodule_lattice(m)
    gens_list = [(1,), (5, 17), (30, 77), (m.size - 1,), (13, 26, 39)]
    for gens in gens_list:
        assert span(m, gens) in lat.index


def test_pair_colon(z12):
    m = free_module(z12, 1)
    lat = submodule_lattice(m)
    rl = lat.ring_lattice
    i6 = lat.idx(frozenset({0, 6}))
    i2 = lat.idx(frozenset({0, 2, 4, 6, 8, 10}))
    got = rl.ideals[lat.pair_colon(i6, i2)]
    assert got.elements == frozenset({0, 3, 6, 9})


def test_min_gens(z12):
    m = free_module(z12, 2)
    lat = submodule_lattice(m)
    full = lat.top
    assert len(lat.min_gens(full)) == 2
    assert lat.min_gens(lat.zero) == ()


def test_mult_by_ideal(z12):
    m = free_module(z12, 1)
    lat = submodule_lattice(m)
    rl = lat.ring_lattice
    i2 = lat.idx(frozenset({0, 2, 4, 6, 8, 10}))
    i3 = rl.index[frozenset({0, 3, 6, 9})]
    assert lat.submodules[lat.mult_by_ideal(i2, i3)] == frozenset({0, 6})


def test_inclusion_pairs_and_chains(z12):
    lat = submodule_lattice(free_module(z12, 1))
    pairs = lat.inclusion_pairs()
    assert (lat.zero, lat.top) in pairs
    assert all(lat.leq(i, j) for i, j in pairs)
    chains = lat.maximal_chains()
    assert all(c[0] == lat.zero and c[-1] == lat.top for c in chains)
    # Z/12 ideal lattice routes: (0)<(6)<(3)<(1), (0)<(6)<(2)<(1), (0)<(4)<(2)<(1)
    assert len(chains) == 3


def test_module_from_ideal(z12):
    i = ideal_from_generators(z12, [4])
    m = module_from_ideal(i)
    assert m.size == 3
    assert module_annihilator(m).elements == frozenset({0, 3, 6, 9})


def test_module_axioms_on_cosets(z12):
    # scalar action laws on coset arithmetic, exhaustively on a subquotient
    m = free_module(z12, 1).quotient_module(frozenset({0, 6}))
    ring = m.ring
    for a in ring.elements():
        for b in ring.elements():
            for x in m.all_indices():
                assert m.scalar(a, m.scalar(b, x)) == m.scalar(ring.mul(a, b), x)
                assert m.scalar(ring.add(a, b), x) == m.add_elem(
                    m.scalar(a, x), m.scalar(b, x)
                )
    for x in m.all_indices():
        assert m.scalar(ring.one, x) == x
        for y in m.all_indices():
            assert m.add_elem(x, y) == m.add_elem(y, x)
