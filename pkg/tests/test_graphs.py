import math

import pytest

from zdgraph import (
    AG,
    GAMMA,
    Disconnected,
    EmptyGraph,
    Infinite,
    PrimeFactors,
    SquarefreeModulus,
    TooManyFactors,
    Vertex,
    ag_vertex,
    build_ag,
    build_gamma,
    build_ring,
    common_neighbor,
    degree,
    diameter,
    distance,
    domination,
    eccentricity,
    gamma_vertex,
    girth_through,
    is_pendant,
    is_triangle_vertex,
    is_triangulated,
    orthogonal,
    radius,
    retract_check,
    vertex_element,
    vertex_label,
)
from zdgraph.rings import Ideal


def gv(ring, residue):
    return gamma_vertex(ring, ring.from_residue(residue))


class TestConstruction:
    def test_rejects_fields(self):
        f7 = build_ring(SquarefreeModulus(7))
        with pytest.raises(EmptyGraph):
            build_gamma(f7)
        with pytest.raises(EmptyGraph):
            build_ag(f7)

    def test_factor_cap(self, z30):
        with pytest.raises(TooManyFactors):
            build_gamma(z30, max_factors=2)

    def test_vertex_and_edge_counts(self, z30):
        G = build_gamma(z30)
        A = build_ag(z30)
        assert (G.vertex_count(), G.edge_count()) == (21, 38)
        assert (A.vertex_count(), A.edge_count()) == (6, 6)
        # six proper nonzero supports over three coordinates
        assert len(G.classes) == 6
        assert G.weight(0b001) == 1 and G.weight(0b110) == 8
        assert all(A.weight(m) == 1 for m in A.classes)

    def test_vertex_roundtrip(self, z30):
        G = build_gamma(z30)
        for residue in (2, 3, 5, 6, 10, 15, 12, 24, 25):
            v = gv(z30, residue)
            assert G.check_vertex(v) is None
            assert int(str(vertex_element(z30, v))) == residue

    def test_vertex_render(self):
        assert Vertex(0b101).render() == "S={1,3}"
        assert Vertex(0b101, 2).render() == "S={1,3}#2"

    def test_ag_vertices_are_supports(self, z30, f2_4):
        v = ag_vertex(z30, Ideal(frozenset({0, 2})))
        assert v == Vertex(0b101)
        # modulus rings label ideals by a principal generator,
        # pure products fall back to the support form
        assert vertex_label(build_ag(z30), v) == "(3)"
        assert vertex_label(build_ag(f2_4), v) == "I{1,3}"

    def test_check_vertex_rejects_bad_copies(self, z30):
        A = build_ag(z30)
        with pytest.raises(Exception):
            A.check_vertex(Vertex(0b001, copy=1))


class TestDistance:
    def test_frozen_distances(self, z30):
        G = build_gamma(z30)
        assert distance(G, gv(z30, 6), gv(z30, 10)) == 1
        assert distance(G, gv(z30, 2), gv(z30, 15)) == 1
        assert distance(G, gv(z30, 2), gv(z30, 3)) == 3
        assert distance(G, gv(z30, 2), gv(z30, 2)) == 0

    def test_same_class_distance_is_two(self, z30):
        G = build_gamma(z30)
        u, v = gv(z30, 6), gv(z30, 12)
        assert u.mask == v.mask and u.copy != v.copy
        assert distance(G, u, v) == 2

    def test_k2_same_class_disconnected_when_weight_one(self):
        ring = build_ring(PrimeFactors((2, 2)))
        G = build_gamma(ring)
        # each class has a single vertex, so no same-class pair exists;
        # cross pairs are adjacent
        assert distance(G, Vertex(0b01), Vertex(0b10)) == 1

    def test_ag_distances(self, z30):
        A = build_ag(z30)
        assert distance(A, Vertex(0b001), Vertex(0b110)) == 1
        assert distance(A, Vertex(0b001), Vertex(0b011)) == 2
        assert distance(A, Vertex(0b011), Vertex(0b110)) == 3


class TestEccentricity:
    def test_frozen_eccentricities(self, z30):
        G = build_gamma(z30)
        assert eccentricity(G, gv(z30, 15)) == 2
        assert eccentricity(G, gv(z30, 2)) == 3

    def test_radius_and_diameter(self, z30, z6, f33):
        assert radius(build_gamma(z30)) == 2
        assert diameter(build_gamma(z30)) == 3
        assert radius(build_gamma(z6)) == 1
        assert radius(build_gamma(f33)) == 2
        assert radius(build_ag(z30)) == 2

    def test_every_vertex_two_or_three(self, z105):
        from zdgraph import class_eccentricity

        G = build_gamma(z105)
        for mask in G.classes:
            e = class_eccentricity(G, mask)
            assert e == (2 if bin(mask).count("1") == 1 else 3)


class TestLocalStructure:
    def test_degree_and_pendant(self, z30):
        G = build_gamma(z30)
        assert degree(G, gv(z30, 15)) == 14
        assert degree(G, gv(z30, 2)) == 1
        assert is_pendant(G, gv(z30, 2))
        assert not is_pendant(G, gv(z30, 15))

    def test_ag_degree(self, z30):
        A = build_ag(z30)
        assert degree(A, Vertex(0b011)) == 1  # only I{3} annihilates it
        assert degree(A, Vertex(0b001)) == 3

    def test_triangle_vertices(self, z30):
        G = build_gamma(z30)
        on, witness = is_triangle_vertex(G, gv(z30, 15))
        assert on and witness is not None
        u, w = witness
        assert u.mask & w.mask == 0  # the two partners are themselves adjacent
        off, none = is_triangle_vertex(G, gv(z30, 2))
        assert not off and none is None

    def test_not_triangulated(self, corpus):
        for ring in corpus:
            for build in (build_gamma, build_ag):
                flag, witness = is_triangulated(build(ring))
                assert not flag
                assert witness is not None

    def test_orthogonal(self, z30):
        G = build_gamma(z30)
        assert orthogonal(G, gv(z30, 2), gv(z30, 15))
        assert not orthogonal(G, gv(z30, 6), gv(z30, 10))
        assert not orthogonal(G, gv(z30, 6), gv(z30, 12))

    def test_common_neighbor(self, z30):
        G = build_gamma(z30)
        cn = common_neighbor(G, gv(z30, 6), gv(z30, 12))
        assert cn is not None
        assert cn.mask & gv(z30, 6).mask == 0
        assert common_neighbor(G, gv(z30, 2), gv(z30, 3)) is None


class TestGirth:
    def test_frozen_girths_z105(self, z105):
        G = build_gamma(z105)
        assert girth_through(G, gv(z105, 35), gv(z105, 21)).length == 3
        assert girth_through(G, gv(z105, 3), gv(z105, 5)).length == 6

    def test_pentagon_in_z210(self, z210):
        G = build_gamma(z210)
        res = girth_through(G, gv(z210, 14), gv(z210, 6))
        assert res.length == 5
        labels = [vertex_label(G, v) for v in res.cycle]
        assert len(labels) == 5 and len(set(labels)) == 5
        # consecutive cycle members must multiply to zero
        ring = z210
        elems = [ring.from_residue(int(s)) for s in labels]
        for a, b in zip(elems, elems[1:] + elems[:1]):
            assert ring.mul(a, b) == ring.zero()

    def test_pentagon_in_ideal_graph(self, f2_4):
        A = build_ag(f2_4)
        res = girth_through(A, Vertex(0b0110), Vertex(0b0101))
        assert res.length == 5
        assert not res.escalated

    def test_no_cycle_in_k2(self):
        ring = build_ring(PrimeFactors((2, 2)))
        G = build_gamma(ring)
        res = girth_through(G, Vertex(0b01), Vertex(0b10))
        assert math.isinf(res.length)
        assert res.cycle is None

    def test_cycle_is_frozen_length_everywhere(self, z105):
        G = build_gamma(z105)
        masks = G.classes
        for s in masks:
            for t in masks:
                if s >= t:
                    continue
                res = girth_through(G, Vertex(s), Vertex(t))
                if not math.isinf(res.length):
                    assert len(res.cycle) == int(res.length)


class TestDomination:
    def test_frozen_sizes(self, z6, z30, f33):
        assert domination(build_gamma(z6)).size == 1
        assert domination(build_gamma(z6), total=True).size == 2
        assert domination(build_gamma(f33)).size == 2
        assert domination(build_gamma(z30), total=True).size == 3
        assert domination(build_ag(z30)).size == 3
        assert domination(build_ag(z30), total=True).size == 3

    def test_witnesses_are_valid_and_certified(self, z30):
        G = build_gamma(z30)
        res = domination(G, total=True)
        assert res.certified
        labels = sorted(vertex_label(G, v) for v in res.witness)
        assert labels == ["10", "15", "6"]
        assert len(res.witness) == res.size

    def test_singleton_dominator_in_z6(self, z6):
        G = build_gamma(z6)
        res = domination(G)
        assert vertex_label(G, res.witness[0]) == "3"

    def test_bound_chain(self, corpus):
        for ring in corpus:
            if len(ring.qs) < 2:
                continue
            for build in (build_gamma, build_ag):
                g = build(ring)
                d = domination(g).size
                dt = domination(g, total=True).size
                assert d <= dt <= 2 * d


class TestRetract:
    def test_retract_on_corpus(self, corpus):
        for ring in corpus:
            rep = retract_check(ring)
            assert rep.is_identity
            assert rep.preserves_adjacency
            assert rep.image_is_fixed
            assert rep.is_retraction
            assert rep.failures == ()

    def test_disconnected_error_type(self):
        assert issubclass(Disconnected, Exception)
