"""Independent oracles used to pin expected values in the test suite.

Everything here recomputes results by brute force, in a style deliberately
different from the library code paths it checks: linear-combination sweeps
instead of closure algorithms, raw subset scans instead of lattice logic.
"""

from __future__ import annotations

from itertools import product as iproduct

from torsionlab.rings import FiniteRing, Ideal


def ideal_by_linear_combinations(ring: FiniteRing, gens: list[int]) -> frozenset:
    """All sums sum_i r_i*g_i over every coefficient tuple."""
    if not gens:
        return frozenset({ring.zero})
    out = set()
    for coeffs in iproduct(range(ring.size), repeat=len(gens)):
        acc = ring.zero
        for r, g in zip(coeffs, gens):
            acc = ring.add(acc, ring.mul(r, g))
        out.add(acc)
    return frozenset(out)


def is_ideal_scan(ring: FiniteRing, elems: frozenset) -> bool:
    if ring.zero not in elems:
        return False
    return all(
        ring.add(a, b) in elems for a in elems for b in elems
    ) and all(ring.mul(r, a) in elems for a in elems for r in range(ring.size))


def all_ideals_by_subset_scan(ring: FiniteRing) -> set[frozenset]:
    """Every ideal, found by testing all 2^n element subsets.  Tiny rings only."""
    assert ring.size <= 12, "subset scan is exponential"
    elems = list(range(ring.size))
    out = set()
    for mask in range(1 << ring.size):
        subset = frozenset(e for e in elems if mask & (1 << e))
        if ring.zero in subset and is_ideal_scan(ring, subset):
            out.add(subset)
    return out


def colon_by_scan(ring: FiniteRing, i: frozenset, j: frozenset) -> frozenset:
    return frozenset(
        a for a in range(ring.size) if all(ring.mul(a, b) in i for b in j)
    )


def gabriel_filters_by_subset_scan(ring: FiniteRing, ideals: list[Ideal]) -> list[frozenset]:
    """All Gabriel filters, by checking the four axioms on every ideal subset.

    Returns each filter as a frozenset of ideal element-sets.  Exponential in
    the number of ideals; used only as the census oracle.  Element colons
    (b : x) are precomputed once so the subset loop is pure set lookups.
    """
    sets = [i.elements for i in ideals]
    n = len(sets)
    unit = frozenset(range(ring.size))
    colon_table = {
        (b, x): colon_by_scan(ring, b, frozenset({x}))
        for b in sets
        for x in range(ring.size)
    }
    out = []
    for mask in range(1, 1 << n):
        members = [sets[k] for k in range(n) if mask & (1 << k)]
        member_set = set(members)
        if unit not in member_set:
            continue
        ok = all(
            t in member_set
            for s in members
            for t in sets
            if s <= t
        )
        if ok:
            ok = all(s & t in member_set for s in members for t in members)
        if ok:
            for b in sets:
                if b in member_set:
                    continue
                for a in members:
                    if all(colon_table[(b, x)] in member_set for x in a):
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            out.append(frozenset(member_set))
    return out
