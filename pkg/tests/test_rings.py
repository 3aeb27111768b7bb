import pytest

from zdgraph import (
    Element,
    Ideal,
    NotSquarefree,
    PrimeFactors,
    Ring,
    RingConstructionError,
    SquarefreeModulus,
    TooManyFactors,
    annihilating_ideals,
    annihilator_element,
    annihilator_ideal,
    build_ring,
    enumerate_ideals,
    factor_squarefree,
    ideal_algebra,
    ideal_contains,
    ideal_product,
    ideal_sum,
    is_annihilating,
    principal_ideal,
)
from zdgraph.rings import elements_of_ideal, ideal_kind, indices_of, mask_of, render_support


def test_factor_squarefree_basics():
    assert factor_squarefree(30) == [2, 3, 5]
    assert factor_squarefree(2) == [2]
    assert factor_squarefree(105) == [3, 5, 7]
    assert factor_squarefree(462) == [2, 3, 7, 11]


def test_factor_squarefree_rejects_squares():
    with pytest.raises(NotSquarefree) as exc:
        factor_squarefree(12)
    assert exc.value.repeated_prime == 2
    with pytest.raises(NotSquarefree):
        factor_squarefree(45)  # 3^2 * 5
    with pytest.raises(RingConstructionError):
        factor_squarefree(1)
    with pytest.raises(RingConstructionError):
        factor_squarefree(0)


def test_mask_helpers():
    assert mask_of([0, 2]) == 0b101
    assert indices_of(0b101) == frozenset({0, 2})
    assert render_support(frozenset({0, 2})) == "{1,3}"
    assert render_support(frozenset()) == "{}"


def test_build_from_modulus(z30):
    assert z30.qs == (2, 3, 5)
    assert z30.size == 30
    assert z30.modulus == 30
    assert z30.k == 3
    assert not z30.is_field


def test_build_from_primes():
    r = build_ring(PrimeFactors((5, 3)))
    # user ordering is preserved for pure products
    assert r.qs == (5, 3)
    assert r.modulus is None
    with pytest.raises(RingConstructionError):
        build_ring(PrimeFactors((4,)))
    with pytest.raises(RingConstructionError):
        build_ring(PrimeFactors(()))


def test_factor_cap():
    with pytest.raises(TooManyFactors):
        build_ring(PrimeFactors((2,) * 21))
    with pytest.raises(TooManyFactors):
        build_ring(PrimeFactors((2, 2, 2)), max_factors=2)


def test_residue_labels_round_trip(z30):
    for x in range(30):
        e = z30.from_residue(x)
        assert str(e) == str(x)
    # CRT coordinates of familiar residues
    assert z30.from_residue(15).coords == (1, 0, 0)
    assert z30.from_residue(10).coords == (0, 1, 0)
    assert z30.from_residue(6).coords == (0, 0, 1)
    assert z30.from_residue(2).coords == (0, 2, 2)
    assert z30.from_residue(3).coords == (1, 0, 3)


def test_arithmetic_matches_residues(z30):
    for x in (0, 1, 2, 7, 15, 29):
        for y in (0, 1, 6, 10, 28):
            a, b = z30.from_residue(x), z30.from_residue(y)
            assert z30.add(a, b) == z30.from_residue((x + y) % 30)
            assert z30.mul(a, b) == z30.from_residue((x * y) % 30)
            assert z30.neg(a) == z30.from_residue((-x) % 30)


def test_zero_divisors_and_units(z30):
    assert z30.is_zero_divisor(z30.zero())
    assert z30.is_zero_divisor(z30.from_residue(15))
    assert not z30.is_zero_divisor(z30.from_residue(7))
    assert z30.is_unit(z30.from_residue(7))
    assert not z30.is_unit(z30.from_residue(10))
    divisors = [x for x in range(1, 30) if z30.is_zero_divisor(z30.from_residue(x))]
    assert len(divisors) == 21  # 30 - phi(30) - 1


def test_supports(z30):
    assert z30.from_residue(15).support == frozenset({0})
    assert z30.from_residue(2).support == frozenset({1, 2})
    assert z30.from_residue(0).support == frozenset()
    assert z30.from_residue(1).support == frozenset({0, 1, 2})


def test_elements_with_support_is_the_class(z30):
    cls = list(z30.elements_with_support(0b110))  # nonzero mod 3 and mod 5, zero mod 2
    assert len(cls) == z30.class_size(0b110) == 2 * 4
    for e in cls:
        assert e.support_mask == 0b110
    assert len(set(cls)) == len(cls)


def test_annihilators(z30):
    a = z30.from_residue(15)
    assert annihilator_element(z30, a) == Ideal(frozenset({1, 2}))
    ideal = Ideal(frozenset({0, 1}))
    assert annihilator_ideal(z30, ideal) == Ideal(frozenset({2}))
    # Ann(Ann(I)) = I for ideals of these rings
    assert annihilator_ideal(z30, annihilator_ideal(z30, ideal)) == ideal


def test_principal_ideal(z30):
    assert principal_ideal(z30, z30.from_residue(2)) == Ideal(frozenset({1, 2}))
    assert principal_ideal(z30, z30.zero()) == Ideal(frozenset())


def test_ideal_kinds(z30):
    assert ideal_kind(z30, Ideal(frozenset())) == "zero"
    assert ideal_kind(z30, Ideal(frozenset({0, 1, 2}))) == "improper"
    assert ideal_kind(z30, Ideal(frozenset({0}))) == "annihilating"
    assert is_annihilating(z30, Ideal(frozenset({1, 2})))
    assert not is_annihilating(z30, Ideal(frozenset({0, 1, 2})))


def test_ideal_enumeration(z30):
    all_ideals = enumerate_ideals(z30)
    assert len(all_ideals) == 8
    ann = annihilating_ideals(z30)
    assert len(ann) == 6
    assert Ideal(frozenset()) not in ann
    assert Ideal(frozenset({0, 1, 2})) not in ann


def test_ideal_lattice_operations(z30):
    a = Ideal(frozenset({0, 1}))
    b = Ideal(frozenset({1, 2}))
    assert ideal_product(z30, a, b) == Ideal(frozenset({1}))
    assert ideal_sum(z30, a, b) == Ideal(frozenset({0, 1, 2}))
    assert ideal_contains(a, Ideal(frozenset({0})))
    assert not ideal_contains(Ideal(frozenset({0})), a)
    alg = ideal_algebra(z30, a, b)
    assert alg.product == Ideal(frozenset({1}))
    assert alg.sum == Ideal(frozenset({0, 1, 2}))


def test_ideal_product_matches_element_products(z30):
    # the support rule reproduces literal multiplication of ideal elements
    a = Ideal(frozenset({0, 1}))
    b = Ideal(frozenset({2}))
    assert ideal_product(z30, a, b) == Ideal(frozenset())
    for x in elements_of_ideal(z30, a):
        for y in elements_of_ideal(z30, b):
            assert z30.mul(x, y) == z30.zero()


def test_ideal_render_uses_generators_for_moduli(z30):
    assert Ideal(frozenset({1, 2})).render(z30) == "(2)"
    assert Ideal(frozenset({0, 2})).render(z30) == "(3)"
    assert Ideal(frozenset({0, 1})).render(z30) == "(5)"
    plain = build_ring(PrimeFactors((2, 3, 5)))
    assert Ideal(frozenset({0, 1})).render(plain) == "I{1,2}"


def test_field_ring():
    f7 = build_ring(SquarefreeModulus(7))
    assert f7.is_field
    assert f7.k == 1
    assert annihilating_ideals(f7) == []
