import pytest

from zdgraph import (
    Ideal,
    NoAnnihilatingIdeals,
    PlaceStatus,
    SquarefreeModulus,
    TopSet,
    bourbaki_primes,
    build_ring,
    closure,
    cozero_set,
    fixed_place_status,
    interior,
    is_dense,
    is_sz_ideal,
    kernel,
    maximal_annihilating,
    min_primes,
    prime_annihilating,
    sz_closure,
    zero_set,
)
from zdgraph.rings import annihilator_element, enumerate_ideals
from zdgraph.spectrum import base_open_sets, is_isolated_point, is_singleton, whole_space


def test_min_primes_are_coordinate_vanishing(z30):
    mps = min_primes(z30)
    assert [p.index for p in mps] == [0, 1, 2]
    assert mps[0].ideal == Ideal(frozenset({1, 2}))
    assert [p.render(z30) for p in mps] == ["(2)", "(3)", "(5)"]
    # each minimal prime is the annihilator of the matching idempotent
    for p in mps:
        assert annihilator_element(z30, z30.idempotent(p.index)) == p.ideal


def test_zero_and_cozero_partition(z30):
    x = z30.from_residue(10)  # support {1}
    zs = zero_set(z30, x)
    cz = cozero_set(z30, x)
    assert zs.members == frozenset({0, 2})
    assert cz.members == frozenset({1})
    assert zs.union(cz).is_full()
    assert zs.intersect(cz).is_empty()


def test_zero_set_relative_to_subspace(z30):
    y = TopSet(frozenset({0, 1}), 3)
    x = z30.from_residue(10)
    assert zero_set(z30, x, within=y).members == frozenset({0})
    assert cozero_set(z30, x, within=y).members == frozenset({1})


def test_topology_is_discrete(z30):
    # every subset is a base open set, so interior and closure are trivial
    space = whole_space(z30)
    opens = {o.members for o in base_open_sets(z30)}
    assert frozenset({0}) in opens and frozenset({0, 2}) in opens
    a = TopSet(frozenset({1, 2}), 3)
    assert interior(z30, a).members == a.members
    assert closure(z30, a).members == a.members
    assert is_dense(z30, space)
    assert not is_dense(z30, a)
    for i in range(3):
        assert is_isolated_point(z30, i)


def test_singletons():
    assert is_singleton(TopSet(frozenset({2}), 3))
    assert not is_singleton(TopSet(frozenset(), 3))
    assert not is_singleton(TopSet(frozenset({0, 1}), 3))


def test_kernel_is_support_complement(z30):
    a = TopSet(frozenset({0, 2}), 3)  # hull of these two primes
    assert kernel(z30, a) == Ideal(frozenset({1}))
    assert kernel(z30, TopSet(frozenset(), 3)) == Ideal(frozenset({0, 1, 2}))
    assert kernel(z30, whole_space(z30)) == Ideal(frozenset())


def test_bourbaki_primes_and_witnesses(z30):
    bs = bourbaki_primes(z30)
    assert [p.ideal for p in bs.primes] == [p.ideal for p in min_primes(z30)]
    for prime, witness in zip(bs.primes, bs.witnesses):
        assert annihilator_element(z30, witness) == prime.ideal
    # in Z30 the witnesses are the familiar idempotents 15, 10, 6
    assert [str(w) for w in bs.witnesses] == ["15", "10", "6"]


def test_fixed_place(z30):
    status, kern = fixed_place_status(z30)
    assert status is PlaceStatus.FIXED_PLACE
    assert kern == Ideal(frozenset())
    assert str(PlaceStatus.FIXED_PLACE) == "PlaceStatus.FIXED_PLACE" or status.value == "FixedPlace"


def test_fixed_place_for_fields():
    f5 = build_ring(SquarefreeModulus(5))
    status, kern = fixed_place_status(f5)
    assert status is PlaceStatus.FIXED_PLACE
    assert kern == Ideal(frozenset())


def test_sz_closure_is_identity(z30):
    for ideal in enumerate_ideals(z30):
        assert sz_closure(z30, ideal) == ideal
        assert is_sz_ideal(z30, ideal)


def test_maximal_annihilating_are_min_primes(z30):
    maxi = maximal_annihilating(z30)
    assert {i.mask for i in maxi} == {p.ideal.mask for p in min_primes(z30)}
    assert {i.mask for i in prime_annihilating(z30)} == {i.mask for i in maxi}


def test_maximal_annihilating_rejects_fields():
    f7 = build_ring(SquarefreeModulus(7))
    with pytest.raises(NoAnnihilatingIdeals):
        maximal_annihilating(f7)


def test_spectrum_sets_coincide_on_corpus(corpus):
    for ring in corpus:
        expected = {p.ideal.mask for p in min_primes(ring)}
        assert {i.mask for i in maximal_annihilating(ring)} == expected
        assert {i.mask for i in prime_annihilating(ring)} == expected
        assert {p.ideal.mask for p in bourbaki_primes(ring).primes} == expected
