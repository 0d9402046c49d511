"""Catalog of executable structural checks with stable ids, each with an
applicability guard and a counterexample reporter; `gps check` is its CLI
front end.

Identities are verified extensionally over all graded submodules, pairs,
ideals (and triples where families are quantified) of a finite instance;
subset-quantified statements run over all subsets up to 2^12 points and over
256 seeded samples beyond that.  The two sides of an identity are always
computed by independent routines (for example closure as the variety of the
radical core versus the smallest closed superset in the lattice).
Implications whose hypothesis is Unknown are skipped, never assumed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from functools import cached_property

from .algebra import (
    DEFAULT_ENUM_BOUND,
    AlgebraError,
    GradedModule,
    Ideal,
    enumerate_submodules,
    ideal_times_module,
    quotient_module,
)
from .dsl import Model
from .maps import (
    InducedSpectrumMap,
    MapAnalysis,
    PermutationMap,
    analyze_natural_map,
    identity_map,
    reduced_ring,
)
from .numtheory import divisors
from .spectra import (
    graded_radical,
    in_primary_spectrum,
    is_cancellation,
    is_graded_prime,
    is_graded_primary,
    is_multiplication,
    spectrum_points,
)
from .topology import (
    PSPEC,
    SPEC,
    analyze_space,
    basic_open,
    build_ring_space,
    build_space,
    ideal_core,
    is_irreducible_subset,
    is_quasi_compact,
    radical_core,
    ring_basic_open,
    ring_variety,
    smallest_closed_superset,
    specialization_closures,
    variety,
    variety_membership,
)

SUBSET_EXHAUSTIVE_LIMIT = 12
SUBSET_SAMPLES = 256
TRIPLE_LIMIT = 125_000


class UnknownCheckError(AlgebraError):
    pass


class Skip(Exception):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class CheckFailure(Exception):
    def __init__(self, message: str, counterexample=None):
        self.message = message
        self.counterexample = counterexample
        super().__init__(message)


@dataclass
class CheckResult:
    check_id: str
    status: str  # "pass" | "fail" | "skip"
    instance: str
    detail: str = ""
    vacuous: bool = False
    counterexample: object = None
    elapsed: float = 0.0


class Context:
    """Per-instance caches shared by the checks."""

    def __init__(self, model: Model, instance: str, bound: int, seed: int):
        self.model = model
        self.instance = instance
        self.bound = bound
        self.seed = seed

    @property
    def module(self) -> GradedModule:
        return self.model.module

    @cached_property
    def finite(self) -> bool:
        return self.module.is_finite and self.module.size <= self.bound

    def require_finite(self):
        if not self.finite:
            raise Skip("infinite instance: only pointwise checks apply")

    @cached_property
    def subs(self):
        self.require_finite()
        return enumerate_submodules(self.module, self.bound)

    @cached_property
    def proper_subs(self):
        return tuple(N for N in self.subs if N.is_proper)

    @cached_property
    def pspec(self):
        self.require_finite()
        return build_space(self.module, PSPEC, self.bound)

    @cached_property
    def spec(self):
        self.require_finite()
        return build_space(self.module, SPEC, self.bound)

    @cached_property
    def reduced(self):
        return reduced_ring(self.module)

    @cached_property
    def ring_space(self):
        self.require_finite()
        return build_ring_space(self.reduced.ring)

    @cached_property
    def rho(self) -> MapAnalysis:
        self.require_finite()
        return analyze_natural_map(self.module, "primary", self.bound)

    @cached_property
    def phi(self) -> MapAnalysis:
        self.require_finite()
        return analyze_natural_map(self.module, "prime", self.bound)

    @cached_property
    def nu_masks(self):
        return {N: variety(self.pspec, N).mask for N in self.subs}

    @cached_property
    def star_masks(self):
        return {N: variety(self.pspec, N, star=True).mask for N in self.subs}

    @cached_property
    def ring_ideal_reps(self) -> tuple[Ideal, ...]:
        ring = self.module.ring
        if ring.is_finite:
            return tuple(ring.ideals())
        gens = sorted({0, 1, *divisors(self.module.base_scale())})
        return tuple(ring.ideal(g) for g in gens)

    @cached_property
    def scalar_reps(self) -> tuple[int, ...]:
        ring = self.module.ring
        if ring.is_finite:
            return tuple(range(ring.modulus))
        return tuple(sorted({0, 1, *divisors(self.module.base_scale())}))

    def subset_masks(self, space) -> list[int]:
        n = len(space.points)
        if n <= SUBSET_EXHAUSTIVE_LIMIT:
            return list(range(1 << n))
        rng = random.Random(self.seed)
        masks = {0, space.full_mask}
        while len(masks) < SUBSET_SAMPLES:
            masks.add(rng.randrange(1 << n))
        return sorted(masks)

    def named_subset_masks(self, space) -> list[int]:
        out = []
        points = list(space.points)
        for members in self.model.named_subsets.values():
            subs = [self.model.named_submodules[m] for m in members]
            if all(s in points for s in subs):
                out.append(sum(1 << points.index(s) for s in subs))
        return out

    def triples(self, items):
        n = len(items)
        if n**3 <= TRIPLE_LIMIT:
            for a in items:
                for b in items:
                    for c in items:
                        yield a, b, c
            return
        rng = random.Random(self.seed)
        for _ in range(SUBSET_SAMPLES):
            yield (
                items[rng.randrange(n)],
                items[rng.randrange(n)],
                items[rng.randrange(n)],
            )

    @cached_property
    def quotient_maps(self):
        """Canonical projections M -> M/K for every proper graded K."""
        self.require_finite()
        return tuple(quotient_module(self.module, K)[1] for K in self.subs)


# -- check implementations -----------------------------------------------------
# Each check returns (substantive_count, detail) or raises Skip / CheckFailure.


def _fail(msg: str, ce=None):
    raise CheckFailure(msg, ce)


def check_T2_1(ctx: Context):
    ctx.require_finite()
    sp = ctx.pspec
    star = ctx.star_masks
    count = 0
    if star[ctx.module.zero_submodule] != sp.full_mask:
        _fail("star variety of 0 is not the whole space")
    if star[ctx.module.full_submodule] != 0:
        _fail("star variety of M is not empty")
    count += 2
    subs = ctx.subs
    for N in subs:
        for N2 in subs:
            if N2.contains(N) and star[N2] & ~star[N]:
                _fail("antitonicity fails", (N, N2))
            if star[N] & star[N2] != star[N.plus(N2)]:
                _fail("pairwise intersection law fails", (N, N2))
            if (star[N] | star[N2]) & ~star[N.intersect(N2)]:
                _fail("union is not inside the variety of the intersection", (N, N2))
            count += 3
    for N, N2, N3 in ctx.triples(subs):
        if star[N] & star[N2] & star[N3] != star[N.plus(N2).plus(N3)]:
            _fail("triple intersection law fails", (N, N2, N3))
        count += 1
    for N in ctx.proper_subs:
        r = graded_radical(N, ctx.bound)
        if r.status == "submodule" and star[N] != star[r.submodule]:
            _fail("variety differs from variety of the radical", N)
        count += 1
    return count, f"{count} instantiations"


def check_CE2_1(ctx: Context):
    M = ctx.module
    if (
        M.ring.modulus != 0
        or len(M.factors) != 2
        or any(o != 0 for o, _ in M.factors)
        or M.factors[0][1] == M.factors[1][1]
    ):
        raise Skip("needs the rank-two free instance with distinct degrees")
    N = M.submodule([(4, 0)])
    N2 = M.submodule([(0, 4)])
    P = M.zero_submodule
    if not is_graded_prime(P):
        _fail("the zero submodule should be graded prime here")
    inter = N.intersect(N2)
    if not variety_membership(inter, P, star=True, bound=ctx.bound):
        _fail("P should lie in the star variety of the intersection")
    if variety_membership(N, P, star=True, bound=ctx.bound) or variety_membership(
        N2, P, star=True, bound=ctx.bound
    ):
        _fail("P should avoid both star varieties")
    return 3, "strict inclusion confirmed at P"


def check_T2_2(ctx: Context):
    ctx.require_finite()
    mult = is_multiplication(ctx.module)
    if mult.is_unknown:
        raise Skip("multiplication status unknown")
    if mult.is_false:
        return 0, "hypothesis fails (not a multiplication module)"
    fam = {}
    for N in ctx.subs:
        fam.setdefault(ctx.star_masks[N], N)
    count = 0
    for a in fam:
        for b in fam:
            if a | b not in fam:
                _fail("star family is not closed under union", (fam[a], fam[b]))
            count += 1
    return count, f"union closure over {len(fam)} distinct star varieties"


def check_P2_3(ctx: Context):
    ctx.require_finite()
    mult = is_multiplication(ctx.module)
    if mult.is_unknown:
        raise Skip("multiplication status unknown")
    if mult.is_false:
        return 0, "hypothesis fails (not a multiplication module)"
    M = ctx.module
    sp = ctx.pspec
    star = ctx.star_masks
    count = 0
    for I in ctx.ring_ideal_reps:
        IM = ideal_times_module(I, M)
        for N in ctx.subs:
            IN = N.scaled(I)
            lhs = star[N] | star[IM]
            rhs = variety(sp, IN, star=True).mask
            if lhs != rhs:
                _fail("scaled-variety union law fails", (I, N))
            count += 1
        for J in ctx.ring_ideal_reps:
            lhs = star[IM] | star[ideal_times_module(J, M)]
            rhs = variety(sp, ideal_times_module(I.product(J), M), star=True).mask
            if lhs != rhs:
                _fail("product law for scaled varieties fails", (I, J))
            count += 1
    return count, f"{count} instantiations"


def check_T2_4(ctx: Context):
    ctx.require_finite()
    sp = ctx.pspec
    nu = ctx.nu_masks
    M = ctx.module
    count = 0
    if nu[M.zero_submodule] != sp.full_mask or nu[M.full_submodule] != 0:
        _fail("boundary varieties are wrong")
    count += 2
    subs = ctx.subs
    colon_mods = {N: ideal_times_module(N.colon(), M) for N in subs}
    for N in subs:
        for N2 in subs:
            if nu[N] & nu[N2] != variety(sp, colon_mods[N].plus(colon_mods[N2])).mask:
                _fail("pairwise intersection law fails", (N, N2))
            if nu[N] | nu[N2] != variety(sp, N.intersect(N2)).mask:
                _fail("union law fails", (N, N2))
            if N2.contains(N) and nu[N2] & ~nu[N]:
                _fail("antitonicity fails", (N, N2))
            count += 3
    for N, N2, N3 in ctx.triples(subs):
        lhs = nu[N] & nu[N2] & nu[N3]
        rhs = variety(
            sp, colon_mods[N].plus(colon_mods[N2]).plus(colon_mods[N3])
        ).mask
        if lhs != rhs:
            _fail("triple intersection law fails", (N, N2, N3))
        count += 1
    return count, f"{count} instantiations"


def check_P2_5(ctx: Context):
    ctx.require_finite()
    mult = is_multiplication(ctx.module)
    if mult.is_unknown:
        raise Skip("multiplication status unknown")
    primary_points = set(ctx.pspec.points)
    count = 0
    logged = 0
    for N in ctx.proper_subs:
        r = graded_radical(N, ctx.bound)
        if r.status != "submodule":
            continue
        identity_holds = ctx.nu_masks[N] == variety(ctx.pspec, r.submodule).mask
        hyp = (N in primary_points) or mult.is_true
        if hyp:
            if not identity_holds:
                _fail("variety of the radical differs", N)
            count += 1
        elif identity_holds:
            logged += 1  # observed outside the hypotheses; logged, not asserted
    note = f"; identity also held in {logged} unguarded cases" if logged else ""
    return count, f"{count} instantiations{note}"


def check_L2_6(ctx: Context):
    ctx.require_finite()
    ps, ss = ctx.pspec, ctx.spec
    spec_idx = [ps.index_of(p) for p in ss.points]
    M = ctx.module
    count = 0
    primary_points = set(ps.points)
    for N in ctx.subs:
        nu_mask = ctx.nu_masks[N]
        star_mask = ctx.star_masks[N]
        v_mask = variety(ss, N).mask
        vstar_mask = variety(ss, N, star=True).mask
        for j, i in enumerate(spec_idx):
            if bool(v_mask >> j & 1) != bool(nu_mask >> i & 1):
                _fail("prime-side variety is not the restriction", N)
            if bool(vstar_mask >> j & 1) != bool(star_mask >> i & 1):
                _fail("prime-side star variety is not the restriction", N)
        cm = ideal_times_module(N.colon(), M)
        gm = ideal_times_module(N.colon().radical(), M)
        if not (
            nu_mask
            == ctx.nu_masks[cm]
            == variety(ps, cm, star=True).mask
            == variety(ps, gm, star=True).mask
        ):
            _fail("colon reformulations of the variety differ", N)
        count += 3
    for N in ctx.subs:
        for N2 in ctx.subs:
            same_rad = N.colon().radical() == N2.colon().radical()
            same_variety = ctx.nu_masks[N] == ctx.nu_masks[N2]
            if same_rad and not same_variety:
                _fail("equal colon radicals gave different varieties", (N, N2))
            if (
                N in primary_points
                and N2 in primary_points
                and same_variety
                and not same_rad
            ):
                _fail("converse fails on primary points", (N, N2))
            count += 1
    return count, f"{count} instantiations"


def check_C2_7(ctx: Context):
    ctx.require_finite()
    from .topology import is_primary_top_module

    ptop = is_primary_top_module(ctx.module, ctx.bound)
    if ptop.is_unknown:
        raise Skip("primary-top status unknown")
    if ptop.is_false:
        return 0, "hypothesis fails (not primary top)"
    ss = ctx.spec
    fam = {}
    for N in ctx.subs:
        fam.setdefault(variety(ss, N, star=True).mask, N)
    count = 0
    for a in fam:
        for b in fam:
            if a | b not in fam:
                _fail("prime-side star family is not closed under union", (fam[a], fam[b]))
            count += 1
    return count, f"union closure over {len(fam)} distinct sets"


def check_P2_8(ctx: Context):
    ctx.require_finite()
    res = ctx.rho
    sp = res.space
    separates = all(
        variety(sp, sp.points[i]).mask != variety(sp, sp.points[j]).mask
        for i in range(len(sp.points))
        for j in range(i + 1, len(sp.points))
    )
    fibers_small = all(mask.bit_count() <= 1 for _, mask in res.fibers)
    injective = res.injective.is_true
    if not (separates == fibers_small == injective):
        _fail(
            f"equivalence broken: separates={separates}, fibers<=1={fibers_small}, "
            f"injective={injective}"
        )
    return 3, f"all three equal {injective}"


def check_C2_9(ctx: Context):
    ctx.require_finite()
    res = ctx.rho
    if not all(mask.bit_count() == 1 for _, mask in res.fibers):
        return 0, "hypothesis fails (some fiber is not a singleton)"
    if not (res.injective.is_true and res.surjective.is_true):
        _fail("map is not bijective despite singleton fibers")
    return 1, "bijective"


def check_P2_10(ctx: Context):
    ctx.require_finite()
    res = ctx.rho
    if not res.continuity_ok:
        _fail("preimage identity fails for some reduced ideal")
    return len(ctx.reduced.ideals()), "preimage identity for every reduced ideal"


def check_P2_11(ctx: Context):
    ctx.require_finite()
    res = ctx.rho
    if not res.surjective.is_true:
        return 0, "hypothesis fails (natural map not surjective)"
    if res.image_identities_ok is not True:
        _fail("image identities fail")
    if not res.open_closed.is_true:
        _fail("map is not open and closed")
    return len(ctx.subs), "image identities over all submodules"


def check_C2_12(ctx: Context):
    ctx.require_finite()
    res = ctx.rho
    bijective = res.injective.is_true and res.surjective.is_true
    homeo = res.homeomorphism.is_true
    if bijective != homeo:
        _fail(f"bijective={bijective} but homeomorphism={homeo}")
    return 1, f"both sides {bijective}"


def check_T2_13(ctx: Context):
    ctx.require_finite()
    c_spec = analyze_space(ctx.spec).connected
    c_pspec = analyze_space(ctx.pspec).connected
    c_ring = analyze_space(ctx.ring_space).connected
    count = 0
    if ctx.rho.surjective.is_true:
        if c_spec and not c_pspec:
            _fail("connected prime spectrum but disconnected primary spectrum")
        if c_pspec != c_ring:
            _fail("primary spectrum and reduced ring disagree on connectedness")
        count += 1 + (1 if c_spec else 0)
    else:
        raise Skip("natural map not surjective")
    if ctx.phi.surjective.is_true:
        if not (c_spec == c_pspec == c_ring):
            _fail("the three connectedness statements differ")
        count += 1
    return count, f"connected: spec={c_spec}, pspec={c_pspec}, ring={c_ring}"


def check_L2_14(ctx: Context):
    ctx.require_finite()
    count = 0
    primary_points = list(ctx.pspec.points)
    for proj in ctx.quotient_maps:
        K = proj.kernel()
        target = proj.target
        if target.factors:
            for Q2 in spectrum_points(target, "primary", ctx.bound):
                pre = proj.preimage_submodule(Q2)
                if not in_primary_spectrum(pre, ctx.bound):
                    _fail("preimage left the primary spectrum", (K, Q2))
                count += 1
        for Q in primary_points:
            if Q.contains(K):
                img = proj.image_submodule(Q)
                if not in_primary_spectrum(img, ctx.bound):
                    _fail("image left the primary spectrum", (K, Q))
                count += 1
    return count, f"{count} transports"


def check_T2_15(ctx: Context):
    ctx.require_finite()
    count = 0
    for proj in ctx.quotient_maps:
        pi = InducedSpectrumMap(proj)
        res = pi.analyze(ctx.bound)
        if not res.injective:
            _fail("induced map is not injective", proj.kernel())
        if not res.continuity_ok:
            _fail("continuity identity fails", proj.kernel())
        if res.surjective and not res.homeomorphism.is_true:
            _fail("surjective induced map is not a homeomorphism", proj.kernel())
        count += 2 + (1 if res.surjective else 0)
    return count, f"{len(ctx.quotient_maps)} projections analyzed"


def check_C2_16(ctx: Context):
    ctx.require_finite()
    M = ctx.module
    isos = [identity_map(M)]
    factors = M.factors
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if factors[i] == factors[j]:
                assignment = list(range(len(factors)))
                assignment[i], assignment[j] = j, i
                isos.append(PermutationMap(M, assignment))
    _, proj0 = quotient_module(M, M.zero_submodule)
    isos.append(proj0)
    count = 0
    for f in isos:
        res = InducedSpectrumMap(f).analyze(ctx.bound)
        if not res.homeomorphism.is_true:
            _fail("isomorphism did not induce a homeomorphism")
        count += 1
    return count, f"{count} isomorphisms"


def check_T2_17(ctx: Context):
    M = ctx.module
    if M.ring.modulus != 0:
        raise Skip("needs the ring of integers (a graded PID)")
    mult, canc = is_multiplication(M), is_cancellation(M)
    if mult.is_unknown or canc.is_unknown:
        raise Skip("multiplication or cancellation status unknown")
    if not (mult.is_true and canc.is_true):
        return 0, "hypothesis fails (not a cancellation multiplication module)"
    candidates = list(dict.fromkeys(
        [M.submodule([tuple(d if i == 0 else 0 for i in range(len(M.factors)))])
         for d in (0, 2, 3, 4, 6, 8, 9, 12)]
        + list(ctx.model.named_submodules.values())
    ))
    count = 0
    for N in candidates:
        if not N.is_proper:
            continue
        lhs = in_primary_spectrum(N, ctx.bound)
        r = graded_radical(N, ctx.bound)
        rhs = r.status == "submodule" and is_graded_prime(r.submodule)
        if lhs != rhs:
            _fail("membership equivalence fails", N)
        count += 1
    return count, f"{count} submodules tested"


def check_P3_1(ctx: Context):
    ctx.require_finite()
    sp = ctx.pspec
    base_masks = [m for _, m in sp.base]
    count = 0
    for c in sp.closed_masks:
        u = c ^ sp.full_mask
        acc = 0
        for m in base_masks:
            if m & u == m:
                acc |= m
        if acc != u:
            _fail("an open set is not a union of basic opens", sp.witnesses[c])
        count += 1
    return count, f"{count} opens generated by {len(base_masks)} basic sets"


def check_P3_2(ctx: Context):
    ctx.require_finite()
    sp = ctx.pspec
    ring = ctx.module.ring
    rr = ctx.reduced
    rs = ctx.ring_space
    images = ctx.rho.images
    count = 0
    for r in ctx.scalar_reps:
        s_r = basic_open(sp, r)
        # (1) the preimage of the reduced basic open is the module basic open
        d_r = ring_basic_open(rs, rr.reduce_ideal(ring.ideal(r).plus(rr.ann)).gen)
        target = set(d_r.members())
        preim = sum(1 << i for i, img in enumerate(images) if img in target)
        if preim != s_r.mask:
            _fail("preimage of the reduced basic open differs", r)
        # (2) image inside the reduced basic open, equal when surjective
        img_mask = 0
        for i in s_r.indices():
            img_mask |= 1 << rs.index_of(images[i])
        if img_mask & ~d_r.mask:
            _fail("image escapes the reduced basic open", r)
        if ctx.rho.surjective.is_true and img_mask != d_r.mask:
            _fail("image equality fails despite surjectivity", r)
        # (4)(5) nilpotents and units
        if ring.is_nilpotent(r) and not s_r.is_empty:
            _fail("nilpotent scalar gave a nonempty basic open", r)
        if ring.is_unit(r) and not s_r.is_full:
            _fail("unit scalar did not give the full space", r)
        count += 4
    for r in ctx.scalar_reps:
        for t in ctx.scalar_reps:
            if basic_open(sp, r).intersect(basic_open(sp, t)).mask != basic_open(sp, r * t).mask:
                _fail("multiplicativity of basic opens fails", (r, t))
            count += 1
    return count, f"{count} instantiations"


def check_E3_3(ctx: Context):
    M = ctx.module
    ring = M.ring
    matched = False
    count = 0
    if ring.is_field and ctx.finite:
        rep = analyze_space(ctx.pspec)
        if not rep.trivial_topology:
            _fail("graded field did not give the trivial topology")
        matched = True
        count += 1
    if ring.modulus == 8 and ctx.finite and M.factors == ((8, (0,)),):
        sp = ctx.pspec
        if len(sp.points) != 3:
            _fail("the primary spectrum should have three points")
        for r in (1, 3, 5, 7):
            if not basic_open(sp, r).is_full:
                _fail("unit scalar basic open is not full", r)
        for r in (0, 2, 4, 6):
            if not basic_open(sp, r).is_empty:
                _fail("nilpotent scalar basic open is not empty", r)
        if not analyze_space(sp).trivial_topology:
            _fail("topology is not trivial")
        if ring.is_field:
            _fail("this ring must not be a graded field")
        matched = True
        count += 3
    if not matched:
        raise Skip("binds to graded-field instances and the Z8 instance")
    return count, "trivial topology confirmed"


def check_T3_4(ctx: Context):
    ctx.require_finite()
    if not ctx.rho.surjective.is_true:
        raise Skip("natural map not surjective")
    sp = ctx.pspec
    base_masks = [m for _, m in sp.base]
    count = 0
    targets = [sp.full_mask] + [m for m in base_masks]
    for target in targets:
        if not is_quasi_compact(sp, target):
            _fail("a basic open is not quasi-compact")
        count += 1
    # covers by subfamilies of the base, exhaustively or sampled
    n = len(base_masks)
    if n <= SUBSET_EXHAUSTIVE_LIMIT:
        families = range(1 << n)
    else:
        rng = random.Random(ctx.seed)
        families = (rng.randrange(1 << n) for _ in range(SUBSET_SAMPLES))
    from .topology import _finite_subcover_exists

    for fam_mask in families:
        fam = [base_masks[i] for i in range(n) if fam_mask >> i & 1]
        union = 0
        for m in fam:
            union |= m
        for target in targets:
            if target & ~union == 0 and target:
                if not _finite_subcover_exists(target, fam):
                    _fail("a basic-open cover admitted no finite subcover")
                count += 1
    return count, f"{count} covers checked"


def check_T3_5(ctx: Context):
    ctx.require_finite()
    if not ctx.rho.surjective.is_true:
        raise Skip("natural map not surjective")
    sp = ctx.pspec
    opens = [m ^ sp.full_mask for m in sp.closed_masks]
    qc = [u for u in opens if is_quasi_compact(sp, u)]
    opens_set = set(opens)
    count = 0
    for a in qc:
        for b in qc:
            inter = a & b
            if inter not in opens_set or not is_quasi_compact(sp, inter):
                _fail("quasi-compact opens are not closed under intersection")
            count += 1
    for u in opens:
        acc = 0
        for m in qc:
            if m & u == m:
                acc |= m
        if acc != u:
            _fail("quasi-compact opens do not form a base")
        count += 1
    return count, f"{count} instantiations"


def check_P4_1(ctx: Context):
    ctx.require_finite()
    sp = ctx.pspec
    count = 0
    for mask in ctx.subset_masks(sp) + ctx.named_subset_masks(sp):
        Y = sp.point_set(mask)
        via_eta = variety(sp, radical_core(Y)).mask
        via_lattice = smallest_closed_superset(Y).mask
        if via_eta != via_lattice:
            _fail("closure routes disagree", mask)
        count += 1
    return count, f"{count} subsets"


def check_T4_2(ctx: Context):
    ctx.require_finite()
    sp = ctx.pspec
    count = 0
    for Q in sp.points:
        if not is_irreducible_subset(sp, variety(sp, Q).mask):
            _fail("a point variety is not irreducible", Q)
        count += 1
    if ctx.module.zero_submodule in set(sp.points):
        if not is_irreducible_subset(sp, sp.full_mask):
            _fail("zero is a point but the space is not irreducible")
        count += 1
    return count, f"{count} varieties"


def check_L4_3(ctx: Context):
    ctx.require_finite()
    rs = ctx.ring_space
    count = 0
    for mask in ctx.subset_masks(rs):
        if mask == 0:
            continue  # nonempty subsets only, by the stated convention
        irr = is_irreducible_subset(rs, mask)
        meet_prime = ideal_core(rs.point_set(mask)).is_prime
        if irr != meet_prime:
            _fail("irreducibility and primeness of the meet disagree", mask)
        count += 1
    return count, f"{count} ring-spectrum subsets"


def check_T4_4(ctx: Context):
    ctx.require_finite()
    sp = ctx.pspec
    count = 0
    for mask in ctx.subset_masks(sp) + ctx.named_subset_masks(sp):
        if mask == 0:
            continue
        Y = sp.point_set(mask)
        eta = radical_core(Y)
        if eta.is_proper and is_graded_primary(eta):
            if not is_irreducible_subset(sp, mask):
                _fail("primary radical core but reducible subset", mask)
            count += 1
        if is_irreducible_subset(sp, mask):
            meet = None
            for i in Y.indices():
                c = sp.rad_colons[i]
                meet = c if meet is None else meet.intersect(c)
            if meet != eta.colon():
                _fail("colon of the core differs from the meet of colons", mask)
            if not eta.colon().is_prime:
                _fail("irreducible subset with non-prime core colon", mask)
            count += 1
    return count, f"{count} subsets"


def check_T4_5(ctx: Context):
    ctx.require_finite()
    if not ctx.rho.surjective.is_true:
        raise Skip("natural map not surjective")
    sp = ctx.pspec
    point_varieties = {variety(sp, Q).mask for Q in sp.points}
    closures = specialization_closures(sp)
    count = 0
    for c in sp.closed_masks:
        irr = is_irreducible_subset(sp, c)
        if irr != (c in point_varieties):
            _fail("irreducible closed sets are not exactly point varieties", c)
        if irr:
            if not any(closures[i] == c for i in range(len(sp.points)) if c >> i & 1):
                _fail("an irreducible closed set has no generic point", c)
        count += 1
    return count, f"{count} closed sets"


def _minimal_primes(ring_space):
    out = []
    for i, p in enumerate(ring_space.points):
        if not any(q != p and p.contains(q) for q in ring_space.points):
            out.append(p)
    return out


def check_T4_6(ctx: Context):
    ctx.require_finite()
    sp = ctx.pspec
    rep = analyze_space(sp)
    components = set(rep.components)
    minimal = set(_minimal_primes(ctx.ring_space))
    count = 0
    for i, Q in enumerate(sp.points):
        is_min = ctx.rho.images[i] in minimal
        is_comp = variety(sp, Q).mask in components
        if is_min and not is_comp:
            _fail("minimal image but the variety is not a component", Q)
        if ctx.rho.surjective.is_true and is_comp and not is_min:
            _fail("component whose image is not minimal", Q)
        count += 1
    return count, f"{count} points"


def check_C4_7(ctx: Context):
    ctx.require_finite()
    if not ctx.rho.surjective.is_true:
        raise Skip("natural map not surjective")
    sp = ctx.pspec
    rs = ctx.ring_space
    minimal = set(_minimal_primes(rs))
    K = [i for i in range(len(sp.points)) if ctx.rho.images[i] in minimal]
    comp = set(analyze_space(sp).components)
    varieties = {variety(sp, sp.points[i]).mask for i in K}
    if varieties != comp:
        _fail("component family differs from the minimal-fiber varieties")
    union = 0
    for i in K:
        union |= variety(sp, sp.points[i]).mask
    if union != sp.full_mask:
        _fail("point varieties over minimal primes do not cover")
    ring_union = 0
    rr = ctx.reduced
    for i in K:
        ring_union |= ring_variety(rs, rr.reduce_ideal(sp.points[i].colon())).mask
    if ring_union != rs.full_mask:
        _fail("reduced ring spectrum is not covered by the colon varieties")
    ss = ctx.spec
    spec_union = 0
    for i in K:
        spec_union |= variety(ss, sp.points[i]).mask
    if spec_union != ss.full_mask:
        _fail("prime spectrum is not covered")
    count = 4
    if ctx.module.zero_submodule in set(ss.points):
        if comp != {sp.full_mask}:
            _fail("zero is prime but the space has several components")
        count += 1
    return count, "cover identities hold"


def check_P4_8(ctx: Context):
    ctx.require_finite()
    if ctx.module.ring.modulus != 0:
        raise Skip("stated for modules over a graded principal ideal domain")
    mult = is_multiplication(ctx.module)
    if mult.is_unknown:
        raise Skip("multiplication status unknown")
    if not mult.is_true:
        return 0, "hypothesis fails (not a multiplication module)"
    sp = ctx.pspec
    count = 0
    for mask in ctx.subset_masks(sp) + ctx.named_subset_masks(sp):
        if mask == 0:
            continue
        Y = sp.point_set(mask)
        eta = radical_core(Y)
        if eta.is_zero or not eta.is_proper or not is_graded_primary(eta):
            continue
        fibers = {sp.rad_colons[i] for i in Y.indices()}
        if len(fibers) != 1:
            _fail("subset spreads over several fibers", mask)
        p = next(iter(fibers))
        if not p.is_maximal:
            _fail("fiber prime is not maximal", mask)
        count += 1
    return count, f"{count} qualifying subsets"


def check_P4_9(ctx: Context):
    ctx.require_finite()
    if not analyze_space(ctx.pspec).t1:
        return 0, "hypothesis fails (not a T1 space)"
    primary = list(ctx.pspec.points)
    prime = spectrum_points(ctx.module, "prime", ctx.bound)
    maximal = spectrum_points(ctx.module, "maximal", ctx.bound)
    if not (primary == prime == maximal):
        _fail("the three spectra differ under T1")
    return 1, f"all three spectra equal ({len(primary)} points)"


def check_T4_10(ctx: Context):
    ctx.require_finite()
    if not ctx.rho.surjective.is_true:
        raise Skip("natural map not surjective")
    rep = analyze_space(ctx.pspec)
    if rep.spectral != rep.t0:
        _fail(f"spectral={rep.spectral} but t0={rep.t0}")
    return 1, f"both {rep.t0}"


def check_T4_11(ctx: Context):
    ctx.require_finite()
    if not ctx.rho.surjective.is_true:
        raise Skip("natural map not surjective")
    sp = ctx.pspec
    rep = analyze_space(sp)
    t0 = rep.t0
    separates = all(
        variety(sp, sp.points[i]).mask != variety(sp, sp.points[j]).mask
        for i in range(len(sp.points))
        for j in range(i + 1, len(sp.points))
    )
    injective = ctx.rho.injective.is_true
    fibers_small = all(mask.bit_count() <= 1 for _, mask in ctx.rho.fibers)
    spectral = rep.spectral
    values = {t0, separates, injective, fibers_small, spectral}
    if len(values) != 1:
        _fail(
            f"five statements disagree: t0={t0}, separates={separates}, "
            f"injective={injective}, fibers={fibers_small}, spectral={spectral}"
        )
    return 5, f"all five equal {t0}"


def check_EX1_4Z(ctx: Context):
    M = ctx.module
    if not (M.ring.modulus == 0 and len(M.factors) == 1 and M.factors[0][0] == 0):
        raise Skip("binds to the rank-one free instance over the integers")
    four = M.submodule([(4,)])
    if not in_primary_spectrum(four, ctx.bound):
        _fail("4M should lie in the primary spectrum")
    if is_graded_prime(four):
        _fail("4M should not be graded prime")
    return 2, "primary spectrum strictly contains the prime spectrum here"


def check_EX4_2Z6(ctx: Context):
    M = ctx.module
    if not (M.ring.modulus == 6 and M.factors == ((6, (0,) * len(M.group.cyclic_orders)),)):
        raise Skip("binds to the Z6 instance")
    sp = ctx.pspec
    sets = [frozenset(q.element_set()) for q in sp.points]
    want = [frozenset({(0,), (3,)}), frozenset({(0,), (2,), (4,)})]
    if sorted(sets, key=sorted) != sorted(want, key=sorted):
        _fail("primary spectrum points differ from the worked values")
    n3, n2 = M.submodule([(3,)]), M.submodule([(2,)])
    if variety(sp, n3).members() != [n3] or variety(sp, n2).members() != [n2]:
        _fail("the two varieties differ from the worked values")
    if variety(sp, M.zero_submodule).mask != sp.full_mask:
        _fail("the variety of zero is not the whole space")
    if is_irreducible_subset(sp, sp.full_mask):
        _fail("the space should not be irreducible")
    return 4, "worked example reproduced"


def check_selftest_fail(ctx: Context):
    _fail("deliberate self-test failure (exit-code exercise)")


@dataclass(frozen=True)
class Check:
    check_id: str
    title: str
    fn: object


CATALOG: tuple[Check, ...] = (
    Check("T2.1", "laws of the radical-containment varieties", check_T2_1),
    Check("T2.2", "multiplication modules carry the quasi topology", check_T2_2),
    Check("P2.3", "scaled-variety union laws on multiplication modules", check_P2_3),
    Check("T2.4", "closed-set axioms for the colon varieties", check_T2_4),
    Check("P2.5", "variety of the radical under the stated hypotheses", check_P2_5),
    Check("L2.6", "subspace and colon reformulation identities", check_L2_6),
    Check("C2.7", "the quasi topology restricts to the prime spectrum", check_C2_7),
    Check("P2.8", "separation, fibers and injectivity are equivalent", check_P2_8),
    Check("C2.9", "singleton fibers force a bijection", check_C2_9),
    Check("P2.10", "preimage identity (continuity of the natural map)", check_P2_10),
    Check("P2.11", "surjective natural maps are open and closed", check_P2_11),
    Check("C2.12", "bijective iff homeomorphism", check_C2_12),
    Check("T2.13", "connectedness transfers along the natural maps", check_T2_13),
    Check("L2.14", "primary points transport along epimorphisms", check_L2_14),
    Check("T2.15", "induced spectrum maps are injective and continuous", check_T2_15),
    Check("C2.16", "isomorphisms induce homeomorphisms", check_C2_16),
    Check("T2.17", "membership via the radical on cancellation modules", check_T2_17),
    Check("P3.1", "the scalar opens form a base", check_P3_1),
    Check("P3.2", "behavior of the scalar opens", check_P3_2),
    Check("E3.3", "trivial-topology instances", check_E3_3),
    Check("T3.4", "basic opens are quasi-compact", check_T3_4),
    Check("T3.5", "quasi-compact opens form a multiplicative base", check_T3_5),
    Check("P4.1", "closure equals the variety of the radical core", check_P4_1),
    Check("T4.2", "point varieties are irreducible", check_T4_2),
    Check("L4.3", "irreducible ring subsets have prime meets", check_L4_3),
    Check("T4.4", "irreducibility via the radical core", check_T4_4),
    Check("T4.5", "irreducible closed sets have generic points", check_T4_5),
    Check("T4.6", "components come from minimal primes", check_T4_6),
    Check("C4.7", "components cover the spectra", check_C4_7),
    Check("P4.8", "subsets with primary core sit inside one fiber", check_P4_8),
    Check("P4.9", "T1 collapses the three spectra", check_P4_9),
    Check("T4.10", "spectral iff T0 under surjectivity", check_T4_10),
    Check("T4.11", "the five-way separation equivalence", check_T4_11),
    Check("EX1.4Z", "the integer instance separating primary from prime", check_EX1_4Z),
    Check("CE2.1", "strictness of the union inclusion (rank two)", check_CE2_1),
    Check("EX4.2Z6", "the Z6 instance and its reducible spectrum", check_EX4_2Z6),
)

ROSTER: tuple[str, ...] = tuple(c.check_id for c in CATALOG)

SELFTEST = Check("selftest.fail", "deliberately failing self-test", check_selftest_fail)


def run_checks(
    model: Model,
    selection="all",
    instance: str = "model",
    bound: int = DEFAULT_ENUM_BOUND,
    seed: int = 0,
) -> list[CheckResult]:
    """Run the selected checks against one instance.  The selection is
    "all", one check id, or a list of ids; unknown ids raise.  The self-test
    id runs only when named explicitly."""
    by_id = {c.check_id: c for c in CATALOG}
    if selection == "all":
        chosen = list(CATALOG)
    else:
        if isinstance(selection, str):
            selection = [selection]
        chosen = []
        for cid in selection:
            if cid == SELFTEST.check_id:
                chosen.append(SELFTEST)
            elif cid in by_id:
                chosen.append(by_id[cid])
            else:
                raise UnknownCheckError(f"unknown check id {cid!r}")
    ctx = Context(model, instance, bound, seed)
    results = []
    for check in chosen:
        start = time.perf_counter()
        try:
            count, detail = check.fn(ctx)
            status, vacuous, ce = "pass", count == 0, None
        except Skip as s:
            status, vacuous, detail, ce = "skip", False, s.reason, None
        except CheckFailure as f:
            status, vacuous, detail, ce = "fail", False, f.message, f.counterexample
        elapsed = time.perf_counter() - start
        results.append(
            CheckResult(
                check_id=check.check_id,
                status=status,
                instance=instance,
                detail=detail,
                vacuous=vacuous,
                counterexample=ce,
                elapsed=elapsed,
            )
        )
    return results
