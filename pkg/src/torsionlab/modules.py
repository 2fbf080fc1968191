"""Finite modules as subquotients U/V of free modules A^k.

A module element is a coset of V inside U, indexed by its minimal vector
representative; index 0 is always the zero coset.  Submodules of a module
are plain frozensets of element indices, and :class:`SubmoduleLattice`
gives every submodule a stable index plus memoized colon/sum arithmetic,
which is what makes the exhaustive suites cheap.
"""

from __future__ import annotations

from typing import Iterable

from .errors import NotASubmodule, RingMismatch, SizeCapExceeded
from .rings import (
    FiniteRing,
    Ideal,
    IdealLattice,
    ideal_lattice,
    primitive_idempotents,
)

FREE_CARRIER_CAP = 4096

Vector = tuple


class FiniteModule:
    """Subquotient U/V of A^k with exact coset arithmetic."""

    def __init__(
        self,
        ring: FiniteRing,
        rank: int,
        carrier_u: frozenset,
        carrier_v: frozenset,
        label: str,
        _checked: bool = False,
    ):
        self.ring = ring
        self.rank = rank
        self.carrier_u = carrier_u
        self.carrier_v = carrier_v
        self.label = label
        if not _checked:
            if not carrier_v <= carrier_u:
                raise NotASubmodule("relations are not contained in the carrier")
            for name, carrier in (("carrier", carrier_u), ("relations", carrier_v)):
                if not _is_submodule_of_free(ring, rank, carrier):
                    raise NotASubmodule(f"{name} is not a submodule of A^{rank}")
        cosets: list[frozenset] = []
        coset_of: dict[Vector, int] = {}
        for vec in sorted(carrier_u):
            if vec in coset_of:
                continue
            coset = frozenset(_vec_add(ring, vec, w) for w in carrier_v)
            idx = len(cosets)
            cosets.append(coset)
            for member in coset:
                coset_of[member] = idx
        self.elements = tuple(cosets)
        self.reps = tuple(min(c) for c in cosets)
        self._coset_of = coset_of
        self.size = len(cosets)
        self.zero = 0
        self._cache: dict = {}

    def add_elem(self, i: int, j: int) -> int:
        return self._coset_of[_vec_add(self.ring, self.reps[i], self.reps[j])]

    def scalar(self, a: int, i: int) -> int:
        return self._coset_of[_vec_scale(self.ring, a, self.reps[i])]

    def neg_elem(self, i: int) -> int:
        ring = self.ring
        return self._coset_of[tuple(ring.neg(x) for x in self.reps[i])]

    def elem_label(self, i: int) -> str:
        ring = self.ring
        return "(" + ",".join(ring.elem_label(x) for x in self.reps[i]) + ")"

    def all_indices(self) -> range:
        return range(self.size)

    def __repr__(self) -> str:
        return f"FiniteModule({self.label}, size={self.size})"

    # -- derived modules -----------------------------------------------------

    def submodule_module(self, indices: Iterable[int]) -> "FiniteModule":
        """The submodule spanned by the given element indices, as a module."""
        indices = frozenset(indices)
        if not is_submodule(self, indices):
            raise NotASubmodule("index set is not a submodule")
        u = frozenset(v for i in indices for v in self.elements[i])
        return FiniteModule(
            self.ring, self.rank, u, self.carrier_v,
            f"{self.label}|sub", _checked=True,
        )

    def quotient_module(self, indices: Iterable[int]) -> "FiniteModule":
        """The quotient by the submodule given as element indices."""
        indices = frozenset(indices)
        if not is_submodule(self, indices):
            raise NotASubmodule("index set is not a submodule")
        v = frozenset(vec for i in indices for vec in self.elements[i])
        return FiniteModule(
            self.ring, self.rank, self.carrier_u, v,
            f"{self.label}|quo", _checked=True,
        )

    def direct_sum(self, other: "FiniteModule") -> "FiniteModule":
        if self.ring is not other.ring:
            raise RingMismatch("direct sum needs a common base ring")
        u = frozenset(a + b for a in self.carrier_u for b in other.carrier_u)
        v = frozenset(a + b for a in self.carrier_v for b in other.carrier_v)
        return FiniteModule(
            self.ring, self.rank + other.rank, u, v,
            f"{self.label}(+){other.label}", _checked=True,
        )


def _vec_add(ring: FiniteRing, a: Vector, b: Vector) -> Vector:
    return tuple(ring.add(x, y) for x, y in zip(a, b))


def _vec_scale(ring: FiniteRing, r: int, a: Vector) -> Vector:
    return tuple(ring.mul(r, x) for x in a)


def _is_submodule_of_free(ring: FiniteRing, rank: int, carrier: frozenset) -> bool:
    zero = (ring.zero,) * rank
    if zero not in carrier:
        return False
    for a in carrier:
        for b in carrier:
            if _vec_add(ring, a, b) not in carrier:
                return False
        for r in range(ring.size):
            if _vec_scale(ring, r, a) not in carrier:
                return False
    return True


def free_module(ring: FiniteRing, rank: int) -> FiniteModule:
    """The free module A^rank; cached per ring."""
    key = ("free_module", rank)
    if key not in ring._cache:
        if ring.size**rank > FREE_CARRIER_CAP:
            raise SizeCapExceeded(
                f"free module carrier {ring.size}^{rank} exceeds {FREE_CARRIER_CAP}"
            )
        vectors = [()]
        for _ in range(rank):
            vectors = [v + (x,) for v in vectors for x in range(ring.size)]
        label = ring.label if rank == 1 else f"{ring.label}^{rank}"
        ring._cache[key] = FiniteModule(
            ring, rank, frozenset(vectors), frozenset({(ring.zero,) * rank}),
            label, _checked=True,
        )
    return ring._cache[key]


def module_from_ideal(ideal: Ideal) -> FiniteModule:
    """An ideal viewed as a module over its ring."""
    ring = ideal.ring
    return FiniteModule(
        ring, 1,
        frozenset((x,) for x in ideal.elements),
        frozenset({(ring.zero,)}),
        f"{ring.label}|{ideal.label}", _checked=True,
    )


def is_submodule(module: FiniteModule, indices: frozenset) -> bool:
    if module.zero not in indices:
        return False
    for i in indices:
        for j in indices:
            if module.add_elem(i, j) not in indices:
                return False
        for r in range(module.ring.size):
            if module.scalar(r, i) not in indices:
                return False
    return True


def element_annihilator(module: FiniteModule, i: int) -> Ideal:
    """The ideal (0 : m) for the element with index i."""
    ring = module.ring
    return Ideal(
        ring,
        frozenset(a for a in range(ring.size) if module.scalar(a, i) == module.zero),
    )


def module_annihilator(module: FiniteModule, indices: Iterable[int] | None = None) -> Ideal:
    """The ideal killing every listed element (defaults to the whole module)."""
    ring = module.ring
    idx = module.all_indices() if indices is None else indices
    out = frozenset(range(ring.size))
    for i in idx:
        out = out & element_annihilator(module, i).elements
        if len(out) == 1:
            break
    return Ideal(ring, out)


def span(module: FiniteModule, gens: Iterable[int]) -> frozenset:
    """Submodule generated by the given element indices."""
    out = frozenset({module.zero})
    for g in gens:
        cyc = _cyclic(module, g)
        if not cyc <= out:
            out = _index_subgroup_sum(module, out, cyc)
    return out


def _cyclic(module: FiniteModule, x: int) -> frozenset:
    cache = module._cache.setdefault("cyclic", {})
    if x not in cache:
        cache[x] = frozenset(module.scalar(a, x) for a in range(module.ring.size))
    return cache[x]


def _index_subgroup_sum(module: FiniteModule, u: frozenset, c: frozenset) -> frozenset:
    res = set(u)
    for w in sorted(c):
        if w not in res:
            res.update(module.add_elem(x, w) for x in u)
    return frozenset(res)


class SubmoduleLattice:
    """All submodules of a module, with memoized index-level arithmetic.

    Enumeration goes through the primitive-idempotent decomposition of the
    base ring when it splits (submodules are then componentwise sums), and
    through a join-closure search over cyclic submodules otherwise.
    """

    def __init__(self, module: FiniteModule):
        self.module = module
        self.ring_lattice: IdealLattice = ideal_lattice(module.ring)
        subs = self._enumerate()
        self.submodules = tuple(
            sorted(subs, key=lambda s: (len(s), tuple(sorted(s))))
        )
        self.index = {s: i for i, s in enumerate(self.submodules)}
        self.n = len(self.submodules)
        self.zero = self.index[frozenset({module.zero})]
        self.top = self.index[frozenset(module.all_indices())]
        self._colon_rows: dict[int, tuple[int, ...]] = {}
        self._pair_colon: dict[tuple[int, int], int] = {}
        self._min_gens: dict[int, tuple[int, ...]] = {}
        self._sums: dict[tuple[int, int], int] = {}
        self._incl_pairs: list[tuple[int, int]] | None = None
        self._covers: dict[int, tuple[int, ...]] | None = None

    # -- enumeration ---------------------------------------------------------

    def _enumerate(self) -> set[frozenset]:
        module = self.module
        atoms = primitive_idempotents(module.ring)
        if len(atoms) == 1:
            return self._bfs(frozenset(module.all_indices()))
        components = []
        for e in atoms:
            comp = frozenset(module.scalar(e, m) for m in module.all_indices())
            components.append(self._bfs(comp))
        partial: list[frozenset] = [frozenset({module.zero})]
        for comp_subs in components:
            nxt = []
            for left in partial:
                for right in sorted(comp_subs, key=lambda s: (len(s), tuple(sorted(s)))):
                    nxt.append(
                        frozenset(
                            module.add_elem(a, b) for a in left for b in right
                        )
                    )
            partial = nxt
        return set(partial)

    def _bfs(self, scope: frozenset) -> set[frozenset]:
        module = self.module
        cyclics = []
        seen_c = set()
        for x in sorted(scope):
            c = _cyclic(module, x)
            if c not in seen_c:
                seen_c.add(c)
                cyclics.append(c)
        zero = frozenset({module.zero})
        found = {zero}
        work = [zero]
        while work:
            u = work.pop()
            for c in cyclics:
                if c <= u:
                    continue
                v = _index_subgroup_sum(module, u, c)
                if v not in found:
                    found.add(v)
                    work.append(v)
        return found

    # -- arithmetic ----------------------------------------------------------

    def idx(self, indices: frozenset) -> int:
        return self.index[indices]

    def leq(self, i: int, j: int) -> bool:
        return self.submodules[i] <= self.submodules[j]

    def colon_row(self, i: int) -> tuple[int, ...]:
        """For each module element m, the ring-lattice index of (N_i : m)."""
        if i not in self._colon_rows:
            module = self.module
            ring = module.ring
            sub = self.submodules[i]
            row = []
            for m in module.all_indices():
                s = frozenset(
                    a for a in range(ring.size) if module.scalar(a, m) in sub
                )
                row.append(self.ring_lattice.index[s])
            self._colon_rows[i] = tuple(row)
        return self._colon_rows[i]

    def colon_elem(self, i: int, m: int) -> int:
        return self.colon_row(i)[m]

    def pair_colon(self, i: int, j: int) -> int:
        """Ring-lattice index of (N_i : N_j) = {a : N_j*a <= N_i}."""
        key = (i, j)
        if key not in self._pair_colon:
            rl = self.ring_lattice
            out = rl.unit
            row = self.colon_row(i)
            for g in self.min_gens(j):
                out = rl.inter(out, row[g])
            self._pair_colon[key] = out
        return self._pair_colon[key]

    def min_gens(self, i: int) -> tuple[int, ...]:
        """Greedy minimal generators of N_i (largest span growth, smallest index)."""
        if i not in self._min_gens:
            module = self.module
            target = self.submodules[i]
            gens: list[int] = []
            cur = frozenset({module.zero})
            while cur != target:
                best_x = -1
                best_size = 0
                for x in sorted(target):
                    if x in cur:
                        continue
                    cyc = _cyclic(module, x)
                    size = len(cur) * len(cyc) // len(cur & cyc)
                    if size > best_size:
                        best_size = size
                        best_x = x
                gens.append(best_x)
                cur = _index_subgroup_sum(module, cur, _cyclic(module, best_x))
            self._min_gens[i] = tuple(gens)
        return self._min_gens[i]

    def sum(self, i: int, j: int) -> int:
        key = (i, j) if i <= j else (j, i)
        if key not in self._sums:
            self._sums[key] = self.index[
                _index_subgroup_sum(self.module, self.submodules[key[0]], self.submodules[key[1]])
            ]
        return self._sums[key]

    def mult_by_ideal(self, i: int, ideal_idx: int) -> int:
        """Index of N_i * a for a ring-lattice ideal index."""
        module = self.module
        ideal = self.ring_lattice.ideals[ideal_idx]
        out = frozenset({module.zero})
        for g in self.min_gens(i):
            piece = frozenset(module.scalar(a, g) for a in ideal.elements)
            if not piece <= out:
                out = _index_subgroup_sum(module, out, piece)
        return self.index[out]

    def inclusion_pairs(self) -> list[tuple[int, int]]:
        """All (i, j) with N_i <= N_j, including i == j, in index order."""
        if self._incl_pairs is None:
            by_size = sorted(range(self.n), key=lambda k: len(self.submodules[k]))
            pairs = []
            for i in range(self.n):
                si = self.submodules[i]
                for j in by_size:
                    sj = self.submodules[j]
                    if len(sj) >= len(si) and si <= sj:
                        pairs.append((i, j))
            pairs.sort()
            self._incl_pairs = pairs
        return self._incl_pairs

    def covers(self) -> dict[int, tuple[int, ...]]:
        """Hasse diagram: for each i, the submodules covering it."""
        if self._covers is None:
            ups: dict[int, list[int]] = {i: [] for i in range(self.n)}
            for i, j in self.inclusion_pairs():
                if i != j:
                    ups[i].append(j)
            out = {}
            for i, above in ups.items():
                above_set = set(above)
                covers_i = []
                for j in above:
                    if not any(k in above_set and self.leq(k, j) and k != j for k in above):
                        covers_i.append(j)
                out[i] = tuple(sorted(covers_i))
            self._covers = out
        return self._covers

    def maximal_chains(self) -> list[tuple[int, ...]]:
        """All maximal chains from the zero submodule to the full module."""
        covers = self.covers()
        chains: list[tuple[int, ...]] = []
        stack = [(self.zero, (self.zero,))]
        while stack:
            node, path = stack.pop()
            ups = covers[node]
            if not ups:
                chains.append(path)
                continue
            for j in ups:
                stack.append((j, path + (j,)))
        chains.sort()
        return chains


def submodule_lattice(module: FiniteModule) -> SubmoduleLattice:
    if "lattice" not in module._cache:
        module._cache["lattice"] = SubmoduleLattice(module)
    return module._cache["lattice"]
