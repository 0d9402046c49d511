"""Finite Zariski-type spaces on the primary, prime and ring spectra, their
varieties and base sets, and the topological analyzer (connectedness,
irreducibility, components, generic points, separation, soberness, the
spectral-space checklist).

Spaces are materialized only in the finite regime; infinite instances are
served by the pointwise membership predicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from . import numtheory
from .algebra import (
    DEFAULT_ENUM_BOUND,
    AlgebraError,
    BaseRing,
    GradedModule,
    GradedSubmodule,
    Ideal,
    enumerate_submodules,
    ideal_times_module,
)
from .spectra import Trilean, graded_radical, is_multiplication, spectrum_points

PSPEC = "pspec"
SPEC = "spec"
RINGSPEC = "ringspec"


@dataclass(frozen=True)
class PointSet:
    """Subset of a space's canonical point list, as a bitmask."""

    space: "FiniteSpace"
    mask: int

    def __post_init__(self):
        assert 0 <= self.mask <= self.space.full_mask

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def union(self, other: "PointSet") -> "PointSet":
        return PointSet(self.space, self.mask | other.mask)

    def intersect(self, other: "PointSet") -> "PointSet":
        return PointSet(self.space, self.mask & other.mask)

    def complement(self) -> "PointSet":
        return PointSet(self.space, self.mask ^ self.space.full_mask)

    def issubset(self, other: "PointSet") -> bool:
        return self.mask & ~other.mask == 0

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == self.space.full_mask

    def indices(self) -> list[int]:
        return [i for i in range(len(self.space.points)) if self.mask >> i & 1]

    def members(self) -> list:
        return [self.space.points[i] for i in self.indices()]

    def size(self) -> int:
        return self.mask.bit_count()


class FiniteSpace:
    """A materialized spectrum with its full closed-set family.

    points are canonical submodules (module spaces) or prime ideals (ring
    spaces); closed_masks is the deduplicated family of all varieties, with a
    witness submodule/ideal per closed set; base lists the distinct basic
    open sets with one representative scalar each.
    """

    def __init__(self, kind, points, module=None, ring=None):
        self.kind = kind
        self.points = tuple(points)
        self.module = module
        self.ring = ring
        self.full_mask = (1 << len(self.points)) - 1
        self.closed_masks: tuple[int, ...] = ()
        self.witnesses: dict[int, object] = {}
        self.base: tuple[tuple[int, int], ...] = ()
        # per-point caches for module spaces
        self.radicals: tuple[GradedSubmodule, ...] = ()
        self.rad_colons: tuple[Ideal, ...] = ()
        self.colons: tuple[Ideal, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.points

    def point_set(self, mask: int) -> PointSet:
        return PointSet(self, mask)

    @property
    def full(self) -> PointSet:
        return PointSet(self, self.full_mask)

    @property
    def empty(self) -> PointSet:
        return PointSet(self, 0)

    def singleton(self, index: int) -> PointSet:
        return PointSet(self, 1 << index)

    def closed_sets(self) -> list[PointSet]:
        return [PointSet(self, m) for m in self.closed_masks]

    def open_sets(self) -> list[PointSet]:
        return [PointSet(self, m ^ self.full_mask) for m in self.closed_masks]

    def is_closed(self, Y: PointSet) -> bool:
        return Y.mask in set(self.closed_masks)

    def index_of(self, point) -> int:
        return self.points.index(point)


def build_space(
    M: GradedModule, kind: str = PSPEC, bound: int = DEFAULT_ENUM_BOUND
) -> FiniteSpace:
    """Materialize the primary or prime spectrum of a finite module together
    with every variety (deduplicated, with witnesses) and the basic opens."""
    if kind not in (PSPEC, SPEC):
        raise AlgebraError(f"unknown module space kind {kind!r}")
    points = spectrum_points(M, "primary" if kind == PSPEC else "prime", bound)
    space = FiniteSpace(kind, points, module=M)
    space.radicals = tuple(graded_radical(Q, bound).require() for Q in points)
    space.rad_colons = tuple(R.colon() for R in space.radicals)
    space.colons = tuple(Q.colon() for Q in points)
    if kind == PSPEC:
        # primary-spectrum points satisfy the defining colon identity
        for Q, rc in zip(points, space.rad_colons):
            assert rc == Q.colon().radical()

    masks = []
    witnesses: dict[int, object] = {}
    for N in enumerate_submodules(M, bound):
        m = variety(space, N).mask
        if m not in witnesses:
            witnesses[m] = N
            masks.append(m)
    space.closed_masks = tuple(sorted(masks))
    space.witnesses = witnesses

    base = []
    seen = set()
    for r in _base_scalars(M):
        m = basic_open(space, r).mask
        if m not in seen:
            seen.add(m)
            base.append((r, m))
    space.base = tuple(base)
    return space


def _base_scalars(M: GradedModule) -> list[int]:
    """Representative scalars indexing every distinct basic open: 0, 1 and
    the divisors of the lcm of factor orders and ring modulus.  r.M only
    depends on gcd(r, that lcm), so the list is exhaustive."""
    return sorted({0, 1, *numtheory.divisors(M.base_scale())})


def build_ring_space(ring: BaseRing) -> FiniteSpace:
    """Materialize the prime spectrum of a finite ring Z/m with the V(I)
    closed family and the basic opens D_r."""
    if not ring.is_finite:
        raise AlgebraError("ring spectrum of Z is infinite; lazy mode only")
    points = ring.prime_ideals()
    space = FiniteSpace(RINGSPEC, points, ring=ring)
    masks = []
    witnesses: dict[int, object] = {}
    for I in ring.ideals():
        m = ring_variety(space, I).mask
        if m not in witnesses:
            witnesses[m] = I
            masks.append(m)
    space.closed_masks = tuple(sorted(masks))
    space.witnesses = witnesses
    base = []
    seen = set()
    for r in sorted({0, 1, *numtheory.divisors(ring.modulus)}):
        m = ring_basic_open(space, r).mask
        if m not in seen:
            seen.add(m)
            base.append((r, m))
    space.base = tuple(base)
    return space


# -- varieties ---------------------------------------------------------------


def variety(space: FiniteSpace, N: GradedSubmodule, star: bool = False) -> PointSet:
    """Closed set of points cut out by N.

    On the primary spectrum: points whose graded radical contains N (star)
    or whose radical-colon contains (N : M) (default, the closed sets of the
    topology).  On the prime spectrum the same with the point itself in
    place of its radical.
    """
    if space.kind == RINGSPEC:
        raise AlgebraError("use ring_variety on ring spectra")
    if N.module != space.module:
        raise AlgebraError("submodule lives in a different module")
    mask = 0
    if star:
        for i, R in enumerate(space.radicals):
            if R.contains(N):
                mask |= 1 << i
    else:
        c = N.colon()
        for i, rc in enumerate(space.rad_colons):
            if rc.contains(c):
                mask |= 1 << i
    return PointSet(space, mask)


def variety_membership(
    N: GradedSubmodule, Q: GradedSubmodule, star: bool = False,
    bound: int = DEFAULT_ENUM_BOUND,
) -> bool:
    """Pointwise variety membership, usable when the spectrum is infinite."""
    R = graded_radical(Q, bound).require()
    if star:
        return R.contains(N)
    return R.colon().contains(N.colon())


def basic_open(space: FiniteSpace, r: int) -> PointSet:
    """Complement of the variety of r.M; these sets form the base."""
    if space.kind == RINGSPEC:
        raise AlgebraError("use ring_basic_open on ring spectra")
    M = space.module
    return variety(space, ideal_times_module(M.ring.ideal(r), M)).complement()


def ring_variety(space: FiniteSpace, I: Ideal) -> PointSet:
    if space.kind != RINGSPEC:
        raise AlgebraError("ring_variety needs a ring spectrum")
    mask = 0
    for i, p in enumerate(space.points):
        if p.contains(I):
            mask |= 1 << i
    return PointSet(space, mask)


def ring_basic_open(space: FiniteSpace, r: int) -> PointSet:
    return ring_variety(space, space.ring.ideal(r)).complement()


# -- eta / gamma / closure -----------------------------------------------------


def radical_core(Y: PointSet) -> GradedSubmodule:
    """Intersection of the graded radicals of the members; the whole module
    for the empty set."""
    space = Y.space
    if space.kind == RINGSPEC:
        raise AlgebraError("radical_core applies to module spaces")
    acc = space.module.full_submodule
    for i in Y.indices():
        acc = acc.intersect(space.radicals[i])
    return acc


def ideal_core(Z: PointSet) -> Ideal:
    """Intersection of the member ideals of a ring-spectrum subset; the unit
    ideal for the empty set."""
    space = Z.space
    if space.kind != RINGSPEC:
        raise AlgebraError("ideal_core applies to ring spectra")
    members = Z.members()
    if not members:
        return space.ring.unit_ideal
    gen = 1
    for p in members:
        gen = lcm(gen, p.gen)
    return space.ring.ideal(gen)


def smallest_closed_superset(Y: PointSet) -> PointSet:
    """Lattice-theoretic closure: intersection of all closed sets containing
    Y (the family is closed under intersection, so this is closed)."""
    space = Y.space
    acc = space.full_mask
    for m in space.closed_masks:
        if Y.mask & ~m == 0:
            acc &= m
    return PointSet(space, acc)


def closure(Y: PointSet) -> PointSet:
    """Topological closure on the primary spectrum, computed as the variety
    of the radical core and cross-checked against the lattice closure."""
    space = Y.space
    if space.kind != PSPEC:
        return smallest_closed_superset(Y)
    via_variety = variety(space, radical_core(Y))
    via_lattice = smallest_closed_superset(Y)
    assert via_variety.mask == via_lattice.mask, "closure routes disagree"
    return via_variety


# -- analysis ------------------------------------------------------------------


@dataclass(frozen=True)
class TopologyReport:
    connected: bool
    irreducible: bool
    t0: bool
    t1: bool
    sober: bool
    spectral: bool
    quasi_compact: bool
    trivial_topology: bool
    is_empty: bool
    components: tuple[int, ...]          # masks of the irreducible components
    generic_points: tuple[tuple[int, tuple[int, ...]], ...]  # (closed mask, points)


def is_irreducible_subset(space: FiniteSpace, mask: int) -> bool:
    """Irreducibility by definition: nonempty, and any two relatively open
    nonempty subsets intersect.  The empty set is not irreducible."""
    if mask == 0:
        return False
    opens = [m ^ space.full_mask for m in space.closed_masks]
    rel = {o & mask for o in opens if o & mask}
    for a in rel:
        for b in rel:
            if a & b == 0:
                return False
    return True


def _singleton_closures(space: FiniteSpace) -> list[int]:
    return [
        smallest_closed_superset(space.singleton(i)).mask
        for i in range(len(space.points))
    ]


def _finite_subcover_exists(target: int, cover: list[int]) -> bool:
    """Greedy extraction of a finite subcover from a cover by base opens;
    in a finite space this always succeeds, but it is executed, not assumed."""
    acc = 0
    for m in cover:
        if m & target & ~acc:
            acc |= m
        if target & ~acc == 0:
            return True
    return target & ~acc == 0


def is_quasi_compact(space: FiniteSpace, target_mask: int) -> bool:
    """Every cover of the target by basic opens admits a finite subcover.

    Any cover refines the maximal one (all base opens), so extracting an
    explicit finite subcover from that settles it; when no basic-open cover
    exists the condition holds vacuously.
    """
    if target_mask == 0:
        return True
    base_masks = [m for _, m in space.base]
    union_all = 0
    for m in base_masks:
        union_all |= m
    if target_mask & ~union_all:
        return True
    return _finite_subcover_exists(target_mask, base_masks)


def analyze_space(space: FiniteSpace) -> TopologyReport:
    full = space.full_mask
    closed = list(space.closed_masks)
    closed_set = set(closed)
    opens = [m ^ full for m in closed]

    connected = not any(
        m in closed_set and m not in (0, full) for m in opens
    )
    irreducible = is_irreducible_subset(space, full)

    sing = _singleton_closures(space)
    t0 = len(set(sing)) == len(sing)
    t1 = all(sing[i] == 1 << i for i in range(len(space.points)))

    irr_closed = [m for m in closed if is_irreducible_subset(space, m)]
    generic: list[tuple[int, tuple[int, ...]]] = []
    for m in irr_closed:
        pts = tuple(i for i in range(len(space.points)) if m >> i & 1 and sing[i] == m)
        generic.append((m, pts))
    sober = all(len(pts) == 1 for _, pts in generic)
    has_generic = all(pts for _, pts in generic)

    components = [
        m for m in irr_closed if not any(other != m and other & m == m for other in irr_closed)
    ]

    quasi_compact = is_quasi_compact(space, full)
    # the spectral checklist: T0, quasi-compact, quasi-compact opens closed
    # under finite intersection and forming a base, soberness; all but the
    # first and last are automatic in a finite space but are computed anyway
    opens_set = set(opens)
    qc_opens = [u for u in opens if is_quasi_compact(space, u)]
    qc_base_ok = all(
        (a & b) in opens_set and is_quasi_compact(space, a & b)
        for a in qc_opens
        for b in qc_opens
    ) and all(_union_of_members(u, qc_opens) for u in opens)
    spectral = t0 and quasi_compact and qc_base_ok and sober and has_generic

    trivial = set(closed) <= {0, full}

    return TopologyReport(
        connected=connected,
        irreducible=irreducible,
        t0=t0,
        t1=t1,
        sober=sober,
        spectral=spectral,
        quasi_compact=quasi_compact,
        trivial_topology=trivial,
        is_empty=space.is_empty,
        components=tuple(sorted(components)),
        generic_points=tuple(sorted(generic)),
    )


def _union_of_members(target: int, family: list[int]) -> bool:
    acc = 0
    for m in family:
        if m & target == m:
            acc |= m
    return acc == target


def specialization_closures(space: FiniteSpace) -> list[int]:
    """Closure mask of each singleton; point j specializes point i (edge
    i -> j) when j lies in the closure of {i}."""
    return _singleton_closures(space)


# -- the quasi topology --------------------------------------------------------


def star_variety_family(space: FiniteSpace, bound: int = DEFAULT_ENUM_BOUND):
    """All star varieties with witnesses, over every graded submodule."""
    out: dict[int, GradedSubmodule] = {}
    for N in enumerate_submodules(space.module, bound):
        m = variety(space, N, star=True).mask
        out.setdefault(m, N)
    return out


def is_primary_top_module(M: GradedModule, bound: int = DEFAULT_ENUM_BOUND) -> Trilean:
    """Whether the star-variety family is closed under finite union, so that
    it defines a topology on the primary spectrum.

    Finite modules are decided exhaustively over all pairs; infinite
    multiplication modules qualify; otherwise Unknown.
    """
    if M.is_finite and M.size <= bound:
        space = build_space(M, PSPEC, bound)
        fam = star_variety_family(space, bound)
        masks = sorted(fam)
        for a in masks:
            for b in masks:
                if a | b not in fam:
                    return Trilean.no((fam[a], fam[b]))
        return Trilean.yes()
    mult = is_multiplication(M)
    if mult.is_true:
        return Trilean.yes()  # multiplication modules carry the quasi topology
    return Trilean.unknown("infinite module, not known to be multiplication")
