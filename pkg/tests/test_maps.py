import pytest

from gpspec.algebra import (
    BaseRing,
    GradedModule,
    GradingGroup,
    enumerate_submodules,
    quotient_module,
)
from gpspec.maps import (
    ComposedMap,
    InducedSpectrumMap,
    LazyRingError,
    PermutationMap,
    analyze_natural_map,
    identity_map,
    primary_point_image,
    prime_point_image,
    reduced_ring,
)
from gpspec.spectra import in_primary_spectrum, spectrum_points
from gpspec.topology import analyze_space

Z = BaseRing(0)
Z2G = GradingGroup((2,))


def zmod(n, ring=None):
    ring = ring or BaseRing(n)
    return GradedModule(ring, Z2G, [(n, (0,))])


# -- reduced ring -------------------------------------------------------------


def test_reduced_ring_presentations():
    rr = reduced_ring(zmod(8))
    assert rr.ring == BaseRing(8)  # annihilator of Z_8 over Z_8 is zero
    rr2 = reduced_ring(GradedModule(Z, Z2G, [(4, (0,)), (6, (1,))]))
    assert rr2.ring == BaseRing(12)
    rr3 = reduced_ring(GradedModule(Z, Z2G, [(0, (0,))]))
    assert rr3.is_lazy and rr3.ring == Z


def test_reduced_ring_ideal_correspondence():
    M = GradedModule(Z, Z2G, [(4, (0,)), (6, (1,))])
    rr = reduced_ring(M)
    # ideals of Z containing (12) correspond to ideals of Z_12, order-preserving
    divisors_of_12 = [1, 2, 3, 4, 6, 12]
    reduced = [rr.reduce_ideal(Z.ideal(d)) for d in divisors_of_12]
    assert len(set(reduced)) == len(reduced)
    for a in divisors_of_12:
        for b in divisors_of_12:
            contains_src = Z.ideal(a).contains(Z.ideal(b))
            contains_red = rr.reduce_ideal(Z.ideal(a)).contains(rr.reduce_ideal(Z.ideal(b)))
            assert contains_src == contains_red
    for d in divisors_of_12:
        assert rr.lift_ideal(rr.reduce_ideal(Z.ideal(d))) == Z.ideal(d)
    with pytest.raises(Exception):
        rr.reduce_ideal(Z.ideal(5))  # does not contain the annihilator


# -- pointwise natural images ---------------------------------------------------


def test_point_images():
    M6 = zmod(6)
    rr = reduced_ring(M6)
    assert primary_point_image(M6.submodule([(2,)]), rr).gen == 2
    assert primary_point_image(M6.submodule([(3,)]), rr).gen == 3
    M8 = zmod(8)
    assert primary_point_image(M8.submodule([(4,)])).gen == 2
    # lazy mode over Z still answers pointwise
    MZ = GradedModule(Z, Z2G, [(0, (0,))])
    assert primary_point_image(MZ.submodule([(4,)])) == Z.ideal(2)


def test_phi_agrees_with_rho_on_primes():
    for M in (zmod(6), zmod(8), zmod(12), GradedModule(Z, Z2G, [(2, (0,)), (4, (1,))])):
        rr = reduced_ring(M)
        for P in spectrum_points(M, "prime"):
            assert prime_point_image(P, rr) == primary_point_image(P, rr)


# -- full analyses ---------------------------------------------------------------


def test_analyze_rho_z6():
    res = analyze_natural_map(zmod(6))
    assert res.injective.is_true and res.surjective.is_true
    assert res.continuity_ok
    assert res.image_identities_ok
    assert res.homeomorphism.is_true
    fiber_sizes = {p.gen: mask.bit_count() for p, mask in res.fibers}
    assert fiber_sizes == {2: 1, 3: 1}


def test_analyze_rho_z8():
    res = analyze_natural_map(zmod(8))
    assert res.surjective.is_true
    assert res.injective.is_false
    assert res.continuity_ok
    (p, mask), = res.fibers
    assert p.gen == 2 and mask.bit_count() == 3
    # not bijective, hence not a homeomorphism
    assert res.homeomorphism.is_false


def test_analyze_lazy_mode_errors():
    with pytest.raises(LazyRingError):
        analyze_natural_map(GradedModule(Z, Z2G, [(0, (0,))]))


def test_injectivity_equivalences():
    # the three-way equivalence: point varieties separate points iff all
    # fibers have at most one point iff the natural map is injective
    for M in (zmod(6), zmod(8), zmod(12), zmod(30),
              GradedModule(Z, Z2G, [(2, (0,)), (4, (1,))])):
        res = analyze_natural_map(M)
        sp = res.space
        from gpspec.topology import variety

        distinct = all(
            variety(sp, sp.points[i]).mask != variety(sp, sp.points[j]).mask
            for i in range(len(sp.points))
            for j in range(i + 1, len(sp.points))
        )
        fibers_small = all(mask.bit_count() <= 1 for _, mask in res.fibers)
        assert distinct == fibers_small == res.injective.is_true
        if all(mask.bit_count() == 1 for _, mask in res.fibers):
            assert res.injective.is_true and res.surjective.is_true


def test_connectedness_transfer():
    # with the natural map surjective, connectedness of the primary spectrum
    # and of the reduced ring spectrum agree
    for M in (zmod(6), zmod(8), zmod(12), zmod(30)):
        res = analyze_natural_map(M)
        if res.surjective.is_true:
            a = analyze_space(res.space).connected
            b = analyze_space(res.ring_space).connected
            assert a == b


# -- induced spectrum maps -------------------------------------------------------


def test_induced_map_projection_z_to_z4():
    MZ = GradedModule(Z, Z2G, [(0, (0,))])
    K = MZ.submodule([(4,)])
    Q, proj = quotient_module(MZ, K)
    pi = InducedSpectrumMap(proj)
    two_bar = Q.submodule([(2,)])
    pulled = pi.apply(two_bar)
    assert pulled == MZ.submodule([(2,)])
    assert in_primary_spectrum(pulled)


def test_induced_map_z8_quotient():
    M8 = zmod(8)
    K = M8.submodule([(4,)])
    Q, proj = quotient_module(M8, K)  # isomorphic to Z_4
    pi = InducedSpectrumMap(proj)
    pulled = pi.apply(Q.zero_submodule)
    assert pulled == K
    assert in_primary_spectrum(pulled)
    res = pi.analyze()
    assert res.injective and res.continuity_ok


def test_induced_map_identity_homeo():
    M = zmod(6)
    pi = InducedSpectrumMap(identity_map(M))
    res = pi.analyze()
    assert res.injective and res.surjective and res.continuity_ok
    assert res.homeomorphism.is_true


def test_induced_map_push():
    M8 = zmod(8)
    K = M8.submodule([(4,)])
    _, proj = quotient_module(M8, K)
    pi = InducedSpectrumMap(proj)
    pushed = pi.push(M8.submodule([(2,)]))
    assert in_primary_spectrum(pushed)
    with pytest.raises(Exception):
        pi.push(M8.zero_submodule)  # does not contain the kernel


def test_permutation_map_swap():
    M = GradedModule(Z, Z2G, [(2, (0,)), (2, (0,))])
    swap = PermutationMap(M, (1, 0))
    assert swap.target == M
    assert swap.apply((1, 0)) == (0, 1)
    N = M.submodule([(1, 0)])
    assert swap.image_submodule(N) == M.submodule([(0, 1)])
    assert swap.preimage_submodule(N) == M.submodule([(0, 1)])
    pi = InducedSpectrumMap(swap)
    res = pi.analyze()
    assert res.homeomorphism.is_true


def test_permutation_map_relists_factors():
    M = GradedModule(Z, Z2G, [(2, (0,)), (4, (1,))])
    relist = PermutationMap(M, (1, 0))
    # the target presentation keeps each factor's (order, degree)
    assert relist.target.factors == ((4, (1,)), (2, (0,)))
    assert InducedSpectrumMap(relist).analyze().homeomorphism.is_true
    with pytest.raises(Exception):
        PermutationMap(M, (0, 0))  # not a permutation


def test_composed_map():
    M = GradedModule(Z, Z2G, [(4, (0,)), (4, (0,))])
    swap = PermutationMap(M, (1, 0))
    K = M.submodule([(2, 0)])
    _, proj = quotient_module(M, K)
    comp = ComposedMap(swap, proj)
    assert comp.kernel() == swap.preimage_submodule(K)
    for v in M.elements():
        assert comp.apply(v) == proj.apply(swap.apply(v))
    for N2 in enumerate_submodules(comp.target):
        assert comp.preimage_submodule(N2) == swap.preimage_submodule(
            proj.preimage_submodule(N2)
        )


def test_isomorphisms_induce_homeomorphisms():
    # quotient by zero and factor swaps are isomorphisms
    for M in (zmod(6), GradedModule(Z, Z2G, [(3, (0,)), (3, (0,))])):
        _, proj = quotient_module(M, M.zero_submodule)
        assert InducedSpectrumMap(proj).analyze().homeomorphism.is_true
