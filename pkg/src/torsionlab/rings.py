"""Exact kernel for finite commutative rings.

Rings come from a small constructor grammar: integers mod n, binary
products, quotients F_p[x]/(f) by a monic polynomial, and square-zero
extensions F_p[x_1..x_k]/(x_i*x_j).  Elements are canonical indices
0..size-1 backed by full addition/multiplication tables, so everything
downstream is pure table arithmetic.

Derived rings (quotients by an ideal, local factors) reuse the same
representation but are never parsed from user input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    InvalidModulus,
    NonMonicPolynomial,
    NotPrime,
    RingMismatch,
    SizeCapExceeded,
    TheoremViolation,
)

DEFAULT_SIZE_CAP = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FiniteRing:
    """Commutative unital ring on element indices 0..size-1.

    Instances are immutable after construction and compared by identity;
    all operations are table lookups.
    """

    def __init__(
        self,
        size: int,
        add_table: Sequence[Sequence[int]],
        mul_table: Sequence[Sequence[int]],
        one: int,
        label: str,
        term: dict | None = None,
        elem_labels: Sequence[str] | None = None,
    ):
        self.size = size
        self._add = add_table
        self._mul = mul_table
        self.zero = 0
        self.one = one
        self.label = label
        self.term = term
        self._elem_labels = (
            tuple(elem_labels) if elem_labels is not None else tuple(str(i) for i in range(size))
        )
        neg = [0] * size
        for a in range(size):
            row = add_table[a]
            for b in range(size):
                if row[b] == 0:
                    neg[a] = b
                    break
        self._neg = neg
        self._cache: dict = {}

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def elements(self) -> range:
        return range(self.size)

    def elem_label(self, a: int) -> str:
        return self._elem_labels[a]

    def __repr__(self) -> str:
        return f"FiniteRing({self.label}, size={self.size})"


def zmod(n: int, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    """The ring Z/n."""
    if n < 2:
        raise InvalidModulus(f"modulus must be at least 2, got {n}")
    if n > cap:
        raise SizeCapExceeded(f"Z/{n} exceeds size cap {cap}")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return FiniteRing(n, add, mul, 1 % n, f"Z/{n}", term={"zmod": n})


def product_ring(left: FiniteRing, right: FiniteRing, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    """Componentwise product of two rings; index = l * right.size + r."""
    size = left.size * right.size
    if size > cap:
        raise SizeCapExceeded(f"product of sizes {left.size}x{right.size} exceeds cap {cap}")
    rs = right.size

    def pack(l: int, r: int) -> int:
        return l * rs + r

    add = [[0] * size for _ in range(size)]
    mul = [[0] * size for _ in range(size)]
    for a in range(size):
        la, ra = divmod(a, rs)
        for b in range(size):
            lb, rb = divmod(b, rs)
            add[a][b] = pack(left.add(la, lb), right.add(ra, rb))
            mul[a][b] = pack(left.mul(la, lb), right.mul(ra, rb))
    labels = [
        f"({left.elem_label(a // rs)},{right.elem_label(a % rs)})" for a in range(size)
    ]
    term = None
    if left.term is not None and right.term is not None:
        term = {"product": [left.term, right.term]}
    return FiniteRing(
        size, add, mul, pack(left.one, right.one),
        f"{left.label} x {right.label}", term=term, elem_labels=labels,
    )


def _poly_label(coeffs: Sequence[int], var: str = "x") -> str:
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else str(c)
            parts.append(f"{head}{var}" if i == 1 else f"{head}{var}^{i}")
    return "+".join(parts) if parts else "0"


def poly_quotient(p: int, coeffs: Sequence[int], cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    """The ring F_p[x]/(f) for a monic f, coefficients given low-to-high."""
    if not _is_prime(p):
        raise InvalidModulus(f"coefficient modulus must be prime, got {p}")
    coeffs = [c % p for c in coeffs]
    if len(coeffs) < 2 or coeffs[-1] != 1:
        raise NonMonicPolynomial(
            f"need a monic polynomial of degree >= 1, got coefficients {coeffs}"
        )
    d = len(coeffs) - 1
    size = p**d
    if size > cap:
        raise SizeCapExceeded(f"F_{p}[x]/(f) of size {size} exceeds cap {cap}")

    def digits(i: int) -> tuple[int, ...]:
        out = []
        for _ in range(d):
            i, r = divmod(i, p)
            out.append(r)
        return tuple(out)

    def undigits(vec: Sequence[int]) -> int:
        acc = 0
        for c in reversed(vec):
            acc = acc * p + c
        return acc

    # x^k mod f for k < 2d-1, as degree-<d coefficient vectors
    reps: list[list[int]] = []
    cur = [0] * d
    cur[0] = 1
    reps.append(list(cur))
    for _ in range(2 * d - 2):
        shifted = [0] + cur[:]
        top = shifted.pop()
        nxt = [(shifted[j] - top * coeffs[j]) % p for j in range(d)]
        reps.append(list(nxt))
        cur = nxt

    add = [[0] * size for _ in range(size)]
    mul = [[0] * size for _ in range(size)]
    vecs = [digits(i) for i in range(size)]
    for a in range(size):
        va = vecs[a]
        for b in range(size):
            vb = vecs[b]
            add[a][b] = undigits([(va[j] + vb[j]) % p for j in range(d)])
            conv = [0] * (2 * d - 1)
            for i_, ca in enumerate(va):
                if ca:
                    for j_, cb in enumerate(vb):
                        if cb:
                            conv[i_ + j_] = (conv[i_ + j_] + ca * cb) % p
            acc = [0] * d
            for k, ck in enumerate(conv):
                if ck:
                    rep = reps[k]
                    acc = [(acc[j] + ck * rep[j]) % p for j in range(d)]
            mul[a][b] = undigits(acc)
    labels = [_poly_label(vecs[i]) for i in range(size)]
    return FiniteRing(
        size, add, mul, 1,
        f"F{p}[x]/({_poly_label(coeffs)})",
        term={"polyquot": {"p": p, "f": list(coeffs)}},
        elem_labels=labels,
    )


_SQZ_VARS = ("x", "y", "z")


def square_zero(p: int, k: int, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    """The local ring F_p[x_1..x_k]/(x_i*x_j): all products of generators vanish."""
    if not _is_prime(p):
        raise InvalidModulus(f"coefficient modulus must be prime, got {p}")
    if k < 1:
        raise InvalidModulus(f"need at least one nilpotent generator, got k={k}")
    size = p ** (k + 1)
    if size > cap:
        raise SizeCapExceeded(f"square-zero ring of size {size} exceeds cap {cap}")

    def digits(i: int) -> tuple[int, ...]:
        out = []
        for _ in range(k + 1):
            i, r = divmod(i, p)
            out.append(r)
        return tuple(out)

    def undigits(vec: Sequence[int]) -> int:
        acc = 0
        for c in reversed(vec):
            acc = acc * p + c
        return acc

    vecs = [digits(i) for i in range(size)]
    add = [[0] * size for _ in range(size)]
    mul = [[0] * size for _ in range(size)]
    for a in range(size):
        va = vecs[a]
        for b in range(size):
            vb = vecs[b]
            add[a][b] = undigits([(va[j] + vb[j]) % p for j in range(k + 1)])
            prod = [0] * (k + 1)
            prod[0] = (va[0] * vb[0]) % p
            for j in range(1, k + 1):
                prod[j] = (va[0] * vb[j] + va[j] * vb[0]) % p
            mul[a][b] = undigits(prod)

    names = [_SQZ_VARS[j] if j < len(_SQZ_VARS) else f"x{j + 1}" for j in range(k)]

    def lbl(vec: Sequence[int]) -> str:
        parts = []
        if vec[0]:
            parts.append(str(vec[0]))
        for j in range(1, k + 1):
            if vec[j]:
                head = "" if vec[j] == 1 else str(vec[j])
                parts.append(f"{head}{names[j - 1]}")
        return "+".join(parts) if parts else "0"

    var_list = ",".join(names)
    return FiniteRing(
        size, add, mul, 1,
        f"F{p}[{var_list}]/({var_list})^2",
        term={"squarezero": {"p": p, "k": k}},
        elem_labels=[lbl(v) for v in vecs],
    )


def build_ring(term: dict, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    """Build a ring from a constructor grammar term (see the spec-file schema)."""
    if not isinstance(term, dict) or len(term) != 1:
        raise ValueError(f"ring term must be a single-key object, got {term!r}")
    (kind, arg), = term.items()
    if kind == "zmod":
        return zmod(arg, cap)
    if kind == "product":
        if not isinstance(arg, list) or len(arg) != 2:
            raise ValueError("product takes exactly two ring terms")
        return product_ring(build_ring(arg[0], cap), build_ring(arg[1], cap), cap)
    if kind == "polyquot":
        return poly_quotient(arg["p"], arg["f"], cap)
    if kind == "squarezero":
        return square_zero(arg["p"], arg["k"], cap)
    raise ValueError(f"unknown ring constructor {kind!r}")


def ring_axiom_report(ring: FiniteRing) -> list[str]:
    """Exhaustive check of the commutative unital ring axioms; empty means pass."""
    out = []
    n = ring.size
    for a in range(n):
        if ring.add(a, 0) != a:
            out.append(f"additive identity fails at {a}")
        if ring.mul(a, ring.one) != a:
            out.append(f"multiplicative identity fails at {a}")
        if ring.add(a, ring.neg(a)) != 0:
            out.append(f"additive inverse fails at {a}")
    for a in range(n):
        for b in range(n):
            if ring.add(a, b) != ring.add(b, a):
                out.append(f"addition not commutative at ({a},{b})")
            if ring.mul(a, b) != ring.mul(b, a):
                out.append(f"multiplication not commutative at ({a},{b})")
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c)):
                    out.append(f"addition not associative at ({a},{b},{c})")
                if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)):
                    out.append(f"multiplication not associative at ({a},{b},{c})")
                if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)):
                    out.append(f"distributivity fails at ({a},{b},{c})")
    return out


# ---------------------------------------------------------------------------
# Ideals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    """An ideal as an explicit element set; rings compare by identity."""

    ring: FiniteRing
    elements: frozenset

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def sort_key(self) -> tuple:
        return (len(self.elements), tuple(sorted(self.elements)))

    def issubset(self, other: "Ideal") -> bool:
        _same_ring(self, other)
        return self.elements <= other.elements

    @property
    def label(self) -> str:
        gens = minimal_generators(self)
        if not gens:
            return "(0)"
        return "(" + ",".join(self.ring.elem_label(g) for g in gens) + ")"

    def __repr__(self) -> str:
        return f"Ideal({self.ring.label}, {self.label})"


def _same_ring(a, b) -> None:
    if a.ring is not b.ring:
        raise RingMismatch(f"operands over {a.ring.label} and {b.ring.label}")


def _additive_span(ring: FiniteRing, seed: Iterable[int]) -> frozenset:
    """Smallest additive subgroup containing the seed."""
    span = {ring.zero}
    for t in sorted(set(seed)):
        if t in span:
            continue
        mult = []
        x = t
        while x != ring.zero:
            mult.append(x)
            x = ring.add(x, t)
        for m in mult:
            if m not in span:
                span |= {ring.add(s, m) for s in span}
    return frozenset(span)


def _subgroup_sum(ring: FiniteRing, u: frozenset, c: frozenset) -> frozenset:
    """Sum of two additive subgroups, built as a union of u-cosets."""
    res = set(u)
    for w in sorted(c):
        if w not in res:
            res.update(ring.add(x, w) for x in u)
    return frozenset(res)


def is_ideal(ring: FiniteRing, elems: frozenset) -> bool:
    if ring.zero not in elems:
        return False
    for a in elems:
        for b in elems:
            if ring.add(a, b) not in elems:
                return False
        for r in range(ring.size):
            if ring.mul(r, a) not in elems:
                return False
    return True


def ideal_from_generators(ring: FiniteRing, gens: Iterable[int]) -> Ideal:
    """Smallest ideal containing the given elements."""
    gens = list(gens)
    for g in gens:
        if not (0 <= g < ring.size):
            raise ValueError(f"{g} is not an element of {ring.label}")
    seed = {ring.mul(r, g) for g in gens for r in range(ring.size)}
    return Ideal(ring, _additive_span(ring, seed))


def zero_ideal(ring: FiniteRing) -> Ideal:
    return Ideal(ring, frozenset({ring.zero}))


def unit_ideal(ring: FiniteRing) -> Ideal:
    return Ideal(ring, frozenset(range(ring.size)))


def principal_ideal(ring: FiniteRing, x: int) -> Ideal:
    cache = ring._cache.setdefault("principal", {})
    if x not in cache:
        cache[x] = ideal_from_generators(ring, [x])
    return cache[x]


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    _same_ring(i, j)
    r = i.ring
    return Ideal(r, frozenset(r.add(a, b) for a in i.elements for b in j.elements))


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    _same_ring(i, j)
    r = i.ring
    seed = {r.mul(a, b) for a in i.elements for b in j.elements}
    return Ideal(r, _additive_span(r, seed))


def ideal_intersect(i: Ideal, j: Ideal) -> Ideal:
    _same_ring(i, j)
    return Ideal(i.ring, i.elements & j.elements)


def colon_element(i: Ideal, b: int) -> Ideal:
    """The ideal (i : b) = {a : a*b in i}."""
    r = i.ring
    return Ideal(r, frozenset(a for a in range(r.size) if r.mul(a, b) in i.elements))


def colon(i: Ideal, j: Ideal) -> Ideal:
    """The ideal quotient (i : j) = {a : a*j <= i}."""
    _same_ring(i, j)
    r = i.ring
    out = frozenset(range(r.size))
    for b in j.elements:
        out &= colon_element(i, b).elements
        if len(out) == 1:
            break
    return Ideal(r, out)


def annihilator(i: Ideal) -> Ideal:
    return colon(zero_ideal(i.ring), i)


def enumerate_ideals(ring: FiniteRing) -> tuple[Ideal, ...]:
    """All ideals, sorted by cardinality then lexicographic element order."""
    if "ideals" in ring._cache:
        return ring._cache["ideals"]
    principal_sets = []
    seen_p = set()
    for x in range(ring.size):
        p = principal_ideal(ring, x).elements
        if p not in seen_p:
            seen_p.add(p)
            principal_sets.append(p)
    zero = frozenset({ring.zero})
    found = {zero}
    work = [zero]
    while work:
        u = work.pop()
        for c in principal_sets:
            if c <= u:
                continue
            v = _subgroup_sum(ring, u, c)
            if v not in found:
                found.add(v)
                work.append(v)
    ideals = tuple(
        Ideal(ring, s) for s in sorted(found, key=lambda s: (len(s), tuple(sorted(s))))
    )
    ring._cache["ideals"] = ideals
    return ideals


def prime_spectrum(ring: FiniteRing) -> tuple[Ideal, ...]:
    """All prime ideals: proper ideals whose quotient has no zero divisors."""
    if "spectrum" in ring._cache:
        return ring._cache["spectrum"]
    primes = []
    for ideal in enumerate_ideals(ring):
        if len(ideal.elements) == ring.size:
            continue
        is_prime_ideal = True
        outside = [a for a in range(ring.size) if a not in ideal.elements]
        for a in outside:
            for b in outside:
                if ring.mul(a, b) in ideal.elements:
                    is_prime_ideal = False
                    break
            if not is_prime_ideal:
                break
        if is_prime_ideal:
            primes.append(ideal)
    out = tuple(primes)
    ring._cache["spectrum"] = out
    return out


def minimal_generators(ideal: Ideal) -> tuple[int, ...]:
    """Greedy minimal generating set: grow the span fastest, ties to smallest index."""
    ring = ideal.ring
    cache = ring._cache.setdefault("min_gens", {})
    if ideal.elements in cache:
        return cache[ideal.elements]
    gens: list[int] = []
    span = frozenset({ring.zero})
    while span != ideal.elements:
        best_x = -1
        best_size = 0
        for x in sorted(ideal.elements):
            if x in span:
                continue
            px = principal_ideal(ring, x).elements
            size = len(span) * len(px) // len(span & px)
            if size > best_size:
                best_size = size
                best_x = x
        gens.append(best_x)
        span = _subgroup_sum(ring, span, principal_ideal(ring, best_x).elements)
    out = tuple(gens)
    cache[ideal.elements] = out
    return out


# ---------------------------------------------------------------------------
# Ring maps, quotients, local decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RingMap:
    """A ring homomorphism recorded as an element-index mapping."""

    source: FiniteRing
    target: FiniteRing
    mapping: tuple
    kind: str = "map"

    def apply(self, x: int) -> int:
        return self.mapping[x]

    def image_ideal(self, i: Ideal) -> Ideal:
        if i.ring is not self.source:
            raise RingMismatch("ideal not over the map source")
        return Ideal(self.target, frozenset(self.mapping[x] for x in i.elements))

    def preimage_ideal(self, j: Ideal) -> Ideal:
        if j.ring is not self.target:
            raise RingMismatch("ideal not over the map target")
        return Ideal(
            self.source,
            frozenset(x for x in range(self.source.size) if self.mapping[x] in j.elements),
        )

    def is_surjective_hom(self) -> bool:
        src, tgt, f = self.source, self.target, self.mapping
        if f[src.one] != tgt.one:
            return False
        for a in range(src.size):
            for b in range(src.size):
                if f[src.add(a, b)] != tgt.add(f[a], f[b]):
                    return False
                if f[src.mul(a, b)] != tgt.mul(f[a], f[b]):
                    return False
        return len(set(f)) == tgt.size


def identity_map(ring: FiniteRing) -> RingMap:
    return RingMap(ring, ring, tuple(range(ring.size)), kind="identity")


def quotient_ring(ring: FiniteRing, ideal: Ideal) -> tuple[FiniteRing, RingMap]:
    """The quotient ring by an ideal, with its projection map."""
    if ideal.ring is not ring:
        raise RingMismatch("ideal not over the given ring")
    coset_idx: dict[int, int] = {}
    reps: list[int] = []
    for x in range(ring.size):
        if x in coset_idx:
            continue
        idx = len(reps)
        reps.append(x)
        for v in ideal.elements:
            coset_idx[ring.add(x, v)] = idx
    size = len(reps)
    add = [[coset_idx[ring.add(reps[a], reps[b])] for b in range(size)] for a in range(size)]
    mul = [[coset_idx[ring.mul(reps[a], reps[b])] for b in range(size)] for a in range(size)]
    labels = [f"[{ring.elem_label(r)}]" for r in reps]
    quotient = FiniteRing(
        size, add, mul, coset_idx[ring.one],
        f"{ring.label}/{ideal.label}", elem_labels=labels,
    )
    proj = RingMap(ring, quotient, tuple(coset_idx[x] for x in range(ring.size)), kind="quotient")
    return quotient, proj


def primitive_idempotents(ring: FiniteRing) -> tuple[int, ...]:
    """Atoms of the Boolean algebra of idempotents (e <= f iff e*f == e)."""
    idem = [e for e in range(1, ring.size) if ring.mul(e, e) == e]
    atoms = []
    for e in idem:
        if not any(f != e and ring.mul(e, f) == f for f in idem):
            atoms.append(e)
    total = 0
    for e in atoms:
        total = ring.add(total, e)
    if total != ring.one or any(
        ring.mul(a, b) != 0 for i, a in enumerate(atoms) for b in atoms[i + 1:]
    ):
        raise TheoremViolation(
            f"primitive idempotents of {ring.label} are not orthogonal with sum 1: {atoms}"
        )
    return tuple(atoms)


def _nonunits(ring: FiniteRing) -> frozenset:
    units = set()
    for a in range(ring.size):
        for b in range(ring.size):
            if ring.mul(a, b) == ring.one:
                units.add(a)
                break
    return frozenset(x for x in range(ring.size) if x not in units)


def local_decomposition(ring: FiniteRing) -> list[tuple[FiniteRing, RingMap]]:
    """Decompose into local factors via primitive idempotents.

    Factors are returned with their projection maps, ordered by residue
    characteristic and then by the pulled-back maximal ideal.
    """
    if "local_decomposition" in ring._cache:
        return ring._cache["local_decomposition"]
    atoms = primitive_idempotents(ring)
    if atoms == (ring.one,):
        out = [(ring, identity_map(ring))]
        ring._cache["local_decomposition"] = out
        return out
    factors = []
    for e in atoms:
        complement = principal_ideal(ring, ring.add(ring.one, ring.neg(e)))
        factor, proj = quotient_ring(ring, complement)
        max_ideal = _nonunits(factor)
        if not is_ideal(factor, max_ideal):
            raise TheoremViolation(f"factor {factor.label} is not local")
        pullback = frozenset(
            x for x in range(ring.size) if proj.mapping[x] in max_ideal
        )
        residue_char = min(p for p in range(2, factor.size + 1) if factor.size % p == 0)
        factors.append(((residue_char, len(pullback), tuple(sorted(pullback))), factor, proj))
    factors.sort(key=lambda t: t[0])
    out = [(factor, proj) for _, factor, proj in factors]
    ring._cache["local_decomposition"] = out
    return out


def localize_at_prime(ring: FiniteRing, p: Ideal) -> tuple[FiniteRing, RingMap]:
    """The local factor whose maximal ideal pulls back to the prime p."""
    if p not in prime_spectrum(ring):
        raise NotPrime(f"{p.label} is not a prime ideal of {ring.label}")
    for factor, proj in local_decomposition(ring):
        max_ideal = _nonunits(factor)
        pullback = frozenset(x for x in range(ring.size) if proj.mapping[x] in max_ideal)
        if pullback == p.elements:
            return factor, proj
    raise TheoremViolation(f"no local factor of {ring.label} matches prime {p.label}")


# ---------------------------------------------------------------------------
# Cached ideal-lattice arithmetic
# ---------------------------------------------------------------------------


class IdealLattice:
    """Index-level view of the full ideal lattice, with memoized arithmetic.

    Every exhaustive sweep goes through this: ideals get stable indices and
    sums/products/intersections/colons become index lookups.
    """

    def __init__(self, ring: FiniteRing):
        self.ring = ring
        self.ideals = enumerate_ideals(ring)
        self.n = len(self.ideals)
        self.index = {ideal.elements: i for i, ideal in enumerate(self.ideals)}
        self.zero = self.index[frozenset({ring.zero})]
        self.unit = self.index[frozenset(range(ring.size))]
        self._colon_rows: dict[int, tuple[int, ...]] = {}
        self._inter: dict[tuple[int, int], int] = {}
        self._prod: dict[tuple[int, int], int] = {}
        self._sum: dict[tuple[int, int], int] = {}
        self._colon: dict[tuple[int, int], int] = {}

    def idx(self, ideal: Ideal) -> int:
        return self.index[ideal.elements]

    def leq(self, i: int, j: int) -> bool:
        return self.ideals[i].elements <= self.ideals[j].elements

    def upset(self, i: int) -> tuple[int, ...]:
        cache = self.ring._cache.setdefault("lattice_upsets", {})
        if i not in cache:
            cache[i] = tuple(j for j in range(self.n) if self.leq(i, j))
        return cache[i]

    def colon_row(self, i: int) -> tuple[int, ...]:
        if i not in self._colon_rows:
            ideal = self.ideals[i]
            ring = self.ring
            row = []
            for x in range(ring.size):
                s = frozenset(a for a in range(ring.size) if ring.mul(a, x) in ideal.elements)
                row.append(self.index[s])
            self._colon_rows[i] = tuple(row)
        return self._colon_rows[i]

    def colon_elem(self, i: int, x: int) -> int:
        return self.colon_row(i)[x]

    def colon(self, i: int, j: int) -> int:
        key = (i, j)
        if key not in self._colon:
            out = self.unit
            for g in minimal_generators(self.ideals[j]):
                out = self.inter(out, self.colon_elem(i, g))
            self._colon[key] = out
        return self._colon[key]

    def ann(self, x: int) -> int:
        return self.colon_elem(self.zero, x)

    def inter(self, i: int, j: int) -> int:
        key = (i, j) if i <= j else (j, i)
        if key not in self._inter:
            self._inter[key] = self.index[
                self.ideals[i].elements & self.ideals[j].elements
            ]
        return self._inter[key]

    def sum(self, i: int, j: int) -> int:
        key = (i, j) if i <= j else (j, i)
        if key not in self._sum:
            self._sum[key] = self.index[ideal_sum(self.ideals[i], self.ideals[j]).elements]
        return self._sum[key]

    def prod(self, i: int, j: int) -> int:
        key = (i, j) if i <= j else (j, i)
        if key not in self._prod:
            self._prod[key] = self.index[
                ideal_product(self.ideals[i], self.ideals[j]).elements
            ]
        return self._prod[key]


def ideal_lattice(ring: FiniteRing) -> IdealLattice:
    if "lattice" not in ring._cache:
        ring._cache["lattice"] = IdealLattice(ring)
    return ring._cache["lattice"]


# ---------------------------------------------------------------------------
# Ring catalog for exhaustive sweeps
# ---------------------------------------------------------------------------

_IRREDUCIBLE = {
    (2, 2): [1, 1, 1],
    (2, 3): [1, 1, 0, 1],
    (2, 4): [1, 1, 0, 0, 1],
    (3, 2): [1, 0, 1],
}


def ring_catalog(max_size: int) -> list[dict]:
    """Deterministic catalog of constructor terms with size <= max_size.

    This is the testbed universe for the exhaustive suites: all Z/n, all
    two-factor products of Z/a x Z/b, small three-factor products, prime
    powers F_p[x]/(x^d), the finite fields F_4..F_16, and the square-zero
    plane F_2[x,y]/(x,y)^2.
    """
    terms: list[dict] = []
    for n in range(2, max_size + 1):
        terms.append({"zmod": n})
    for a in range(2, max_size + 1):
        for b in range(a, max_size + 1):
            if a * b <= max_size:
                terms.append({"product": [{"zmod": a}, {"zmod": b}]})
    for m in (2, 3, 4):
        if 4 * m <= max_size:
            terms.append(
                {"product": [{"product": [{"zmod": 2}, {"zmod": 2}]}, {"zmod": m}]}
            )
    for p in (2, 3):
        d = 2
        while p**d <= max_size:
            coeffs = [0] * d + [1]
            terms.append({"polyquot": {"p": p, "f": coeffs}})
            if (p, d) in _IRREDUCIBLE:
                terms.append({"polyquot": {"p": p, "f": _IRREDUCIBLE[(p, d)]}})
            d += 1
    if 8 <= max_size:
        terms.append({"squarezero": {"p": 2, "k": 2}})
    return terms
