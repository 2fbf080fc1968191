"""Gabriel filters and hereditary torsion machinery on finite rings.

A filter is stored extensionally as a set of ideals.  Constructors always
re-run the axiom check; a failure there means an implementation bug, not a
bad input, and raises :class:`TheoremViolation`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    NotASubmodule,
    NotMultiplicativelyClosed,
    NotPrime,
    RingMismatch,
    TheoremViolation,
    UnsupportedMap,
)
from .modules import (
    FiniteModule,
    element_annihilator,
    is_submodule,
    module_annihilator,
    submodule_lattice,
)
from .rings import (
    FiniteRing,
    Ideal,
    RingMap,
    enumerate_ideals,
    ideal_lattice,
    ideal_product,
    minimal_generators,
    prime_spectrum,
    unit_ideal,
)


@dataclass(frozen=True)
class GabrielFilter:
    """A Gabriel filter: the ideal set of a hereditary torsion theory."""

    ring: FiniteRing
    members: frozenset

    def __contains__(self, ideal: Ideal) -> bool:
        return ideal in self.members

    @property
    def basis(self) -> tuple[Ideal, ...]:
        """Minimal members under inclusion."""
        out = [
            a for a in self.members
            if not any(b.elements < a.elements for b in self.members)
        ]
        return tuple(sorted(out, key=Ideal.sort_key))

    @property
    def label(self) -> str:
        return "filter<" + ",".join(b.label for b in self.basis) + ">"

    def sorted_members(self) -> tuple[Ideal, ...]:
        return tuple(sorted(self.members, key=Ideal.sort_key))

    def __repr__(self) -> str:
        return f"GabrielFilter({self.ring.label}, {self.label})"


@dataclass(frozen=True)
class Violation:
    """A failed filter axiom with concrete witness ideals."""

    axiom: str
    witnesses: tuple

    def describe(self) -> str:
        parts = ", ".join(f"{name}={ideal.label}" for name, ideal in self.witnesses)
        return f"{self.axiom}: {parts}" if parts else self.axiom


def gabriel_check(ring: FiniteRing, members: Iterable[Ideal]) -> list[Violation]:
    """All axiom violations of a candidate filter; empty iff Gabriel.

    Checks, in order: non-emptiness, presence of the unit ideal, upward
    closure, closure under finite intersections, the Gabriel condition, and
    (derived, must follow from the others) closure under ideal products.
    """
    members = set(members)
    out: list[Violation] = []
    if not members:
        return [Violation("empty-filter", ())]
    lat = ideal_lattice(ring)
    member_idx = frozenset(lat.idx(a) for a in members)
    if lat.unit not in member_idx:
        out.append(Violation("missing-unit-ideal", ()))
    for i in sorted(member_idx):
        for j in lat.upset(i):
            if j not in member_idx:
                out.append(
                    Violation(
                        "upward-closure",
                        (("member", lat.ideals[i]), ("superset", lat.ideals[j])),
                    )
                )
    ordered = sorted(member_idx)
    for pos, i in enumerate(ordered):
        for j in ordered[pos:]:
            k = lat.inter(i, j)
            if k not in member_idx:
                out.append(
                    Violation(
                        "intersection-closure",
                        (("left", lat.ideals[i]), ("right", lat.ideals[j]),
                         ("intersection", lat.ideals[k])),
                    )
                )
    for b in range(lat.n):
        if b in member_idx:
            continue
        row = lat.colon_row(b)
        for a in ordered:
            if all(row[x] in member_idx for x in lat.ideals[a].elements):
                out.append(
                    Violation(
                        "gabriel-condition",
                        (("absent", lat.ideals[b]), ("via", lat.ideals[a])),
                    )
                )
                break
    for pos, i in enumerate(ordered):
        for j in ordered[pos:]:
            k = lat.prod(i, j)
            if k not in member_idx:
                out.append(
                    Violation(
                        "product-closure",
                        (("left", lat.ideals[i]), ("right", lat.ideals[j]),
                         ("product", lat.ideals[k])),
                    )
                )
    return out


def _checked_filter(ring: FiniteRing, members: Iterable[Ideal], what: str) -> GabrielFilter:
    members = frozenset(members)
    report = gabriel_check(ring, members)
    if report:
        raise TheoremViolation(
            f"{what} produced a non-Gabriel filter on {ring.label}: "
            + "; ".join(v.describe() for v in report)
        )
    return GabrielFilter(ring, members)


def gabriel_closure(ring: FiniteRing, seeds: Iterable[Ideal]) -> GabrielFilter:
    """Least Gabriel filter containing the seeds.

    Fixed point of: add the unit ideal, close upward, close under
    intersections, apply the Gabriel condition; the iteration order is fixed
    for reproducibility but the least fixed point does not depend on it.
    """
    lat = ideal_lattice(ring)
    current = {lat.idx(a) for a in seeds}
    current.add(lat.unit)
    while True:
        before = len(current)
        for i in list(current):
            current.update(lat.upset(i))
        ordered = sorted(current)
        for pos, i in enumerate(ordered):
            for j in ordered[pos:]:
                current.add(lat.inter(i, j))
        for b in range(lat.n):
            if b in current:
                continue
            row = lat.colon_row(b)
            if any(
                all(row[x] in current for x in lat.ideals[a].elements)
                for a in sorted(current)
            ):
                current.add(b)
        if len(current) == before:
            break
    return _checked_filter(ring, (lat.ideals[i] for i in current), "gabriel_closure")


def filter_from_mult_set(ring: FiniteRing, mult_set: Iterable[int]) -> GabrielFilter:
    """The filter {a : a meets the multiplicatively closed set}."""
    sigma = sorted(set(mult_set))
    for s in sigma:
        if not (0 <= s < ring.size):
            raise ValueError(f"{s} is not an element of {ring.label}")
    if ring.one not in sigma:
        raise NotMultiplicativelyClosed("the set does not contain 1")
    for s in sigma:
        for t in sigma:
            if ring.mul(s, t) not in sigma:
                raise NotMultiplicativelyClosed(
                    f"witness pair ({ring.elem_label(s)},{ring.elem_label(t)}): "
                    f"product {ring.elem_label(ring.mul(s, t))} missing"
                )
    members = [a for a in enumerate_ideals(ring) if a.elements & set(sigma)]
    return _checked_filter(ring, members, "filter_from_mult_set")


def lambda_filter(ring: FiniteRing) -> GabrielFilter:
    """The filter of ideals with zero annihilator (the dense ideals)."""
    lat = ideal_lattice(ring)
    members = [
        a for i, a in enumerate(lat.ideals) if lat.colon(lat.zero, i) == lat.zero
    ]
    return _checked_filter(ring, members, "lambda_filter")


def filter_from_prime(ring: FiniteRing, p: Ideal) -> GabrielFilter:
    """The filter {a : a not contained in p}, for a prime ideal p."""
    if p not in prime_spectrum(ring):
        raise NotPrime(f"{p.label} is not prime in {ring.label}")
    members = [a for a in enumerate_ideals(ring) if not a.elements <= p.elements]
    return _checked_filter(ring, members, "filter_from_prime")


def trivial_filter(ring: FiniteRing) -> GabrielFilter:
    return _checked_filter(ring, [unit_ideal(ring)], "trivial_filter")


def improper_filter(ring: FiniteRing) -> GabrielFilter:
    return _checked_filter(ring, enumerate_ideals(ring), "improper_filter")


def meet_filters(filters: Sequence[GabrielFilter]) -> GabrielFilter:
    """Intersection of the member sets; the meet of the torsion theories."""
    if not filters:
        raise ValueError("meet of an empty filter list")
    ring = filters[0].ring
    for f in filters[1:]:
        if f.ring is not ring:
            raise RingMismatch("meet needs filters over one ring")
    members = frozenset.intersection(*(f.members for f in filters))
    return _checked_filter(ring, members, "meet_filters")


def enumerate_gabriel_filters(ring: FiniteRing) -> tuple[GabrielFilter, ...]:
    """Every Gabriel filter on the ring.

    On a finite ring every filter of ideals is the up-set of its smallest
    member (the intersection of finitely many members is a member), so it
    suffices to test the up-set of each ideal.  The census acceptance test
    cross-checks this against a raw subset scan of the ideal lattice.
    """
    lat = ideal_lattice(ring)
    found = []
    for b in range(lat.n):
        members = [lat.ideals[j] for j in lat.upset(b)]
        if not gabriel_check(ring, members):
            found.append(GabrielFilter(ring, frozenset(members)))
    found.sort(key=lambda f: (len(f.members), tuple(a.sort_key() for a in f.sorted_members())))
    return tuple(found)


# ---------------------------------------------------------------------------
# Torsion radical, closure, density
# ---------------------------------------------------------------------------


def _require_same_ring(module_or_ideal, sigma: GabrielFilter) -> None:
    if module_or_ideal.ring is not sigma.ring:
        raise RingMismatch("module and filter live over different rings")


def torsion_submodule(module: FiniteModule, sigma: GabrielFilter) -> frozenset:
    """The largest torsion submodule: elements whose annihilator is in the filter."""
    _require_same_ring(module, sigma)
    return frozenset(
        m for m in module.all_indices() if element_annihilator(module, m) in sigma.members
    )


def torsion_submodule_via_class(module: FiniteModule, sigma: GabrielFilter) -> frozenset:
    """Same set computed the slow way: the sum of all torsion submodules."""
    _require_same_ring(module, sigma)
    lat = submodule_lattice(module)
    acc = lat.zero
    for i, sub in enumerate(lat.submodules):
        if all(element_annihilator(module, m) in sigma.members for m in sub):
            acc = lat.sum(acc, i)
    return lat.submodules[acc]


def closure(module: FiniteModule, sub: frozenset, sigma: GabrielFilter) -> frozenset:
    """The closure of a submodule: preimage of the torsion part of the quotient."""
    _require_same_ring(module, sigma)
    if not is_submodule(module, sub):
        raise NotASubmodule("closure input is not a submodule")
    ring = module.ring
    out = set()
    for m in module.all_indices():
        relative = frozenset(
            a for a in range(ring.size) if module.scalar(a, m) in sub
        )
        if Ideal(ring, relative) in sigma.members:
            out.add(m)
    return frozenset(out)


def is_closed(module: FiniteModule, sub: frozenset, sigma: GabrielFilter) -> bool:
    return closure(module, sub, sigma) == sub


def is_dense(module: FiniteModule, sub: frozenset, sigma: GabrielFilter) -> bool:
    return closure(module, sub, sigma) == frozenset(module.all_indices())


def ideal_closure(ideal: Ideal, sigma: GabrielFilter) -> Ideal:
    """Closure of an ideal inside the ring, as an ideal."""
    _require_same_ring(ideal, sigma)
    ring = ideal.ring
    out = set()
    for x in range(ring.size):
        relative = frozenset(a for a in range(ring.size) if ring.mul(a, x) in ideal.elements)
        if Ideal(ring, relative) in sigma.members:
            out.add(x)
    return Ideal(ring, frozenset(out))


def is_totally_torsion(
    module: FiniteModule, sigma: GabrielFilter
) -> tuple[bool, Ideal]:
    """Whether one filter ideal kills the whole module.

    Returns the module annihilator either way: it is the largest possible
    witness, so the module is totally torsion iff it lies in the filter.
    """
    _require_same_ring(module, sigma)
    ann = module_annihilator(module)
    return ann in sigma.members, ann


# ---------------------------------------------------------------------------
# Spectrum partition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpecPartition:
    """Primes split by the filter: torsionfree side, filter side, and Max K."""

    K: tuple
    Z: tuple
    C: tuple


def spec_partition(sigma: GabrielFilter) -> SpecPartition:
    """Partition the prime spectrum by filter membership.

    Primes in the filter land in Z; all others land in K and the quotient by
    each is verified torsionfree.  C collects the maximal elements of K.
    """
    ring = sigma.ring
    k_side, z_side = [], []
    for p in prime_spectrum(ring):
        if p in sigma.members:
            z_side.append(p)
        else:
            for m in range(ring.size):
                if m in p.elements:
                    continue
                rel = frozenset(a for a in range(ring.size) if ring.mul(a, m) in p.elements)
                if Ideal(ring, rel) in sigma.members:
                    raise TheoremViolation(
                        f"prime {p.label} outside the filter but {ring.label}/{p.label}"
                        f" is not torsionfree (witness {ring.elem_label(m)})"
                    )
            k_side.append(p)
    for p in z_side:
        for q in prime_spectrum(ring):
            if p.elements <= q.elements and q not in z_side:
                raise TheoremViolation(
                    f"filter side is not upward closed: {p.label} <= {q.label}"
                )
    c_side = [
        p for p in k_side if not any(p.elements < q.elements for q in k_side)
    ]
    return SpecPartition(
        K=tuple(sorted(k_side, key=Ideal.sort_key)),
        Z=tuple(sorted(z_side, key=Ideal.sort_key)),
        C=tuple(sorted(c_side, key=Ideal.sort_key)),
    )


def meet_decomposition_check(sigma: GabrielFilter) -> bool:
    """Whether the filter is the meet of the prime-complement filters over K."""
    ring = sigma.ring
    part = spec_partition(sigma)
    if not part.K:
        expected = frozenset(enumerate_ideals(ring))
    else:
        expected = frozenset.intersection(
            *(filter_from_prime(ring, p).members for p in part.K)
        )
    return expected == sigma.members


# ---------------------------------------------------------------------------
# Jansian structure
# ---------------------------------------------------------------------------


def ideal_power_stabilized(ideal: Ideal) -> tuple[int, Ideal]:
    """Iterate a^(n+1) = a*a^n until repetition; returns (exponent, power)."""
    power = ideal
    n = 1
    while True:
        nxt = ideal_product(power, ideal)
        n += 1
        if nxt.elements == power.elements:
            return n - 1, power
        power = nxt


@dataclass(frozen=True)
class JansianStatus:
    is_jansian: bool
    idempotent_basis_ideal: Ideal | None
    is_almost_jansian: bool
    power_witnesses: tuple


def jansian_status(sigma: GabrielFilter) -> JansianStatus:
    """Detect single-ideal bases and stabilized-power membership.

    On a finite ring both properties always hold; the basis ideal is checked
    to be idempotent and every member's stabilized power is checked to stay
    in the filter.  These are reported, and a failure raises.
    """
    ring = sigma.ring
    lat = ideal_lattice(ring)
    member_idx = sorted(lat.idx(a) for a in sigma.members)
    bottom = member_idx[0]
    for i in member_idx[1:]:
        bottom = lat.inter(bottom, i)
    basis_ideal = lat.ideals[bottom]
    is_jansian = frozenset(lat.upset(bottom)) == frozenset(member_idx)
    if is_jansian:
        if ideal_product(basis_ideal, basis_ideal).elements != basis_ideal.elements:
            raise TheoremViolation(
                f"single-ideal basis {basis_ideal.label} of {sigma.label} is not idempotent"
            )
    witnesses = []
    almost = True
    for a in sigma.sorted_members():
        exponent, stabilized = ideal_power_stabilized(a)
        ok = stabilized in sigma.members
        almost = almost and ok
        witnesses.append((a, exponent, stabilized))
    return JansianStatus(
        is_jansian=is_jansian,
        idempotent_basis_ideal=basis_ideal if is_jansian else None,
        is_almost_jansian=almost,
        power_witnesses=tuple(witnesses),
    )


# ---------------------------------------------------------------------------
# Induced filters along surjections
# ---------------------------------------------------------------------------


def induced_filter(ring_map: RingMap, sigma: GabrielFilter) -> GabrielFilter:
    """Push a filter through a surjective ring map (quotients, local factors).

    Members downstairs are the ideals whose preimage is a member; for these
    maps that set is verified to coincide with the images of the members,
    and the result is verified to have a finite generating set per basis
    ideal.
    """
    if sigma.ring is not ring_map.source:
        raise RingMismatch("filter is not over the map source")
    if not ring_map.is_surjective_hom():
        raise UnsupportedMap(
            "induced filters are only computed along surjective ring maps"
        )
    target = ring_map.target
    members = [
        b for b in enumerate_ideals(target) if ring_map.preimage_ideal(b) in sigma.members
    ]
    images = frozenset(ring_map.image_ideal(a).elements for a in sigma.members)
    if images != frozenset(b.elements for b in members):
        raise TheoremViolation(
            f"extended-ideal description failed along {ring_map.kind} map to {target.label}"
        )
    induced = _checked_filter(target, members, "induced_filter")
    for b in induced.basis:
        assert len(minimal_generators(b)) <= len(b.elements)  # finite type, trivially
    return induced


# ---------------------------------------------------------------------------
# Torsion/torsionfree class axioms, exhaustively over subquotients
# ---------------------------------------------------------------------------


def torsion_class_report(module: FiniteModule, filters: Sequence[GabrielFilter]) -> dict:
    """Exhaustive torsion/torsionfree class axioms over all subquotients.

    Subquotients are the pairs V <= U of submodules.  Whether U/V is torsion
    or torsionfree depends only on the set of coset annihilators, so pairs
    are deduplicated by that profile; the checks are still exhaustive
    because equal profiles force equal verdicts.  Verdicts for all filters
    are carried as bitmasks so one pass covers every filter.
    """
    lat = submodule_lattice(module)
    rl = lat.ring_lattice
    nf = len(filters)
    full = (1 << nf) - 1
    for f in filters:
        _require_same_ring(module, f)
    lmask = [0] * rl.n
    for fi, f in enumerate(filters):
        for a in f.members:
            lmask[rl.idx(a)] |= 1 << fi

    pairs = lat.inclusion_pairs()
    profiles: dict[tuple[int, int], frozenset] = {}
    t_mask: dict[tuple[int, int], int] = {}
    tf_mask: dict[tuple[int, int], int] = {}
    for v, u in pairs:
        row = lat.colon_row(v)
        sub_v = lat.submodules[v]
        prof = frozenset(row[m] for m in lat.submodules[u] if m not in sub_v)
        profiles[(v, u)] = prof
        tm, tfm = full, full
        for a in prof:
            tm &= lmask[a]
            tfm &= full & ~lmask[a]
        t_mask[(v, u)] = tm
        tf_mask[(v, u)] = tfm

    ups: dict[int, list[int]] = {}
    for v, u in pairs:
        ups.setdefault(v, []).append(u)

    checks = {
        name: {"instances": 0, "violmask": 0, "witness": None}
        for name in (
            "torsion-submodule-closure",
            "torsion-quotient-closure",
            "torsion-extension-closure",
            "torsion-direct-sum-closure",
            "torsionfree-submodule-closure",
            "torsionfree-product-closure",
            "torsionfree-extension-closure",
            "torsionfree-radical-vanishes",
        )
    }

    def record(name: str, mask: int, witness: str) -> None:
        entry = checks[name]
        entry["instances"] += 1
        if mask and not entry["violmask"]:
            entry["witness"] = witness
        entry["violmask"] |= mask

    for v, w in pairs:
        for u in ups[w]:
            tvw, twu, tvu = t_mask[(v, w)], t_mask[(w, u)], t_mask[(v, u)]
            label = f"V={v},W={w},U={u}"
            record("torsion-submodule-closure", tvu & ~tvw & full, label)
            record("torsion-quotient-closure", tvu & ~twu & full, label)
            record("torsion-extension-closure", tvw & twu & ~tvu & full, label)
            fvw, fwu, fvu = tf_mask[(v, w)], tf_mask[(w, u)], tf_mask[(v, u)]
            record("torsionfree-submodule-closure", fvu & ~fvw & full, label)
            record("torsionfree-extension-closure", fvw & fwu & ~fvu & full, label)

    # direct sums / products via deduplicated annihilator profiles
    distinct: dict[frozenset, int] = {}
    reps: list[frozenset] = []
    for pair in pairs:
        prof = profiles[pair]
        if prof not in distinct:
            distinct[prof] = len(reps)
            reps.append(prof)
    masks = []
    for prof in reps:
        tm, tfm = full, full
        for a in prof:
            tm &= lmask[a]
            tfm &= full & ~lmask[a]
        masks.append((tm, tfm))
    for i, p1 in enumerate(reps):
        t1, f1 = masks[i]
        for j in range(i, len(reps)):
            p2 = reps[j]
            t2, f2 = masks[j]
            tsum, fsum = full, full
            for a in p1:
                for b in p2:
                    c = rl.inter(a, b)
                    tsum &= lmask[c]
                    fsum &= full & ~lmask[c]
            label = f"profiles {i},{j}"
            record("torsion-direct-sum-closure", t1 & t2 & ~tsum & full, label)
            record("torsionfree-product-closure", f1 & f2 & ~fsum & full, label)

    # independent route: the radical computed element by element must vanish
    # exactly on the torsionfree carrier and fill exactly the torsion one
    top_pair = (lat.zero, lat.top)
    radical_mismatch = 0
    for fi, f in enumerate(filters):
        radical = torsion_submodule(module, f)
        vanishes = radical == frozenset({module.zero})
        fills = radical == frozenset(module.all_indices())
        if vanishes != bool(tf_mask[top_pair] & (1 << fi)):
            radical_mismatch |= 1 << fi
        if fills != bool(t_mask[top_pair] & (1 << fi)):
            radical_mismatch |= 1 << fi
    record("torsionfree-radical-vanishes", radical_mismatch, module.label)

    out = {}
    for fi, f in enumerate(filters):
        per = {}
        for name, entry in checks.items():
            violated = bool(entry["violmask"] & (1 << fi))
            per[name] = {
                "instances": entry["instances"],
                "passed": not violated,
                "witness": entry["witness"] if violated else None,
            }
        out[f.label] = per
    return out
