"""Randomized invariants over small rings.

These complement the frozen-value tests: instead of pinning specific
outputs they assert relations that must hold for every ring in scope.
"""

import json
import math
from functools import reduce

from hypothesis import given, settings
from hypothesis import strategies as st

from zdgraph import (
    AG,
    GAMMA,
    PrimeFactors,
    SquarefreeModulus,
    Vertex,
    build_ag,
    build_gamma,
    build_ring,
    distance,
    domination,
    girth_through,
    sz_closure,
    vertex_element,
)
from zdgraph.rings import (
    annihilator_element,
    annihilator_ideal,
    enumerate_ideals,
    factor_squarefree,
)
from zdgraph.spectrum import cozero_set, zero_set
from zdgraph.tables import (
    decompose_table_ring,
    product_tables,
    table_from_json,
    table_to_json,
)

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)

prime_lists = st.lists(st.sampled_from(SMALL_PRIMES), min_size=2, max_size=4)
distinct_prime_sets = st.lists(
    st.sampled_from(SMALL_PRIMES), min_size=2, max_size=4, unique=True
)


def product(xs):
    return reduce(lambda a, b: a * b, xs, 1)


@st.composite
def rings(draw):
    return build_ring(PrimeFactors(tuple(draw(prime_lists))))


@st.composite
def ring_and_masks(draw, count=2):
    ring = draw(rings())
    full = (1 << ring.k) - 1
    masks = [draw(st.integers(min_value=1, max_value=full - 1)) for _ in range(count)]
    return (ring, *masks)


@given(ps=distinct_prime_sets)
def test_factorization_roundtrip(ps):
    n = product(ps)
    qs = factor_squarefree(n)
    assert sorted(qs) == sorted(ps)
    assert product(qs) == n


@given(ps=distinct_prime_sets, a=st.integers(0, 10_000), b=st.integers(0, 10_000))
def test_crt_arithmetic_matches_residues(ps, a, b):
    n = product(ps)
    ring = build_ring(SquarefreeModulus(n))
    x, y = ring.from_residue(a % n), ring.from_residue(b % n)
    assert str(ring.add(x, y)) == str((a + b) % n)
    assert str(ring.mul(x, y)) == str((a * b) % n)


@given(data=ring_and_masks())
def test_support_disjointness_is_zero_product(data):
    ring, mu, mv = data
    x = next(iter(ring.elements_with_support(mu)))
    y = next(iter(ring.elements_with_support(mv)))
    assert (ring.mul(x, y) == ring.zero()) == (mu & mv == 0)


@given(data=ring_and_masks(count=1))
def test_double_annihilator_is_identity(data):
    ring, mask = data
    for ideal in enumerate_ideals(ring):
        assert annihilator_ideal(ring, annihilator_ideal(ring, ideal)) == ideal
    x = next(iter(ring.elements_with_support(mask)))
    ann = annihilator_element(ring, x)
    assert ann.mask == ((1 << ring.k) - 1) ^ mask


@given(data=ring_and_masks(count=3))
def test_distance_triangle_inequality(data):
    ring, ma, mb, mc = data
    G = build_gamma(ring)
    a, b, c = Vertex(ma), Vertex(mb), Vertex(mc)
    dab = distance(G, a, b)
    dbc = distance(G, b, c)
    dac = distance(G, a, c)
    assert dac <= dab + dbc
    assert dab == distance(G, b, a)


@given(data=ring_and_masks())
def test_girth_symmetry_and_witness(data):
    ring, mu, mv = data
    G = build_gamma(ring)
    if mu == mv:
        if G.weight(mu) < 2:
            return  # lone vertex in its class, no distinct pair to test
        u, v = Vertex(mu, 0), Vertex(mu, 1)
    else:
        u, v = Vertex(mu), Vertex(mv)
    res = girth_through(G, u, v)
    swapped = girth_through(G, v, u)
    assert res.length == swapped.length
    if math.isinf(res.length):
        assert res.cycle is None
        return
    cycle = res.cycle
    assert len(cycle) == int(res.length)
    assert len(set(cycle)) == len(cycle)
    assert u in cycle and v in cycle
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        assert a.mask & b.mask == 0


@given(ring=rings(), kind=st.sampled_from([GAMMA, AG]))
@settings(max_examples=40)
def test_domination_bounds_and_witness(ring, kind):
    G = build_gamma(ring) if kind == GAMMA else build_ag(ring)
    plain = domination(G)
    tot = domination(G, total=True)
    assert plain.size <= tot.size <= 2 * plain.size
    assert plain.certified and tot.certified
    assert len(plain.witness) == plain.size
    assert len(tot.witness) == tot.size


@given(data=ring_and_masks(count=1))
def test_zero_cozero_partition(data):
    ring, mask = data
    x = next(iter(ring.elements_with_support(mask)))
    zs, cz = zero_set(ring, x), cozero_set(ring, x)
    assert zs.union(cz).is_full()
    assert zs.intersect(cz).is_empty()
    assert cz.members == frozenset(i for i in range(ring.k) if mask >> i & 1)


@given(ring=rings())
@settings(max_examples=40)
def test_closure_operator_is_identity(ring):
    for ideal in enumerate_ideals(ring):
        assert sz_closure(ring, ideal) == ideal


@given(ps=st.lists(st.sampled_from((2, 3, 5)), min_size=2, max_size=3))
@settings(max_examples=25)
def test_table_json_roundtrip_and_decompose(ps):
    tables = product_tables(tuple(ps))
    doc = table_to_json(tables)
    back = table_from_json(doc)
    assert back.add == tables.add and back.mul == tables.mul
    ring = decompose_table_ring(back)
    assert sorted(ring.qs) == sorted(ps)
    # a second serialization of the parsed object round trips unchanged
    assert table_to_json(back) == doc


@given(data=ring_and_masks(count=1))
def test_vertex_element_decode_round_trip(data):
    ring, mask = data
    G = build_gamma(ring)
    for copy in range(min(3, G.weight(mask))):
        v = Vertex(mask, copy)
        x = vertex_element(ring, v)
        from zdgraph import gamma_vertex

        assert gamma_vertex(ring, x) == v


def test_json_report_render_has_no_floats():
    # infinity must serialize as a string, never as a bare float
    from zdgraph.verify import _render

    assert _render(math.inf) == "Infinite"
    assert _render({1: math.inf}) == {"1": "Infinite"}
    assert json.dumps(_render((math.inf, 3))) == '["Infinite", 3]'
