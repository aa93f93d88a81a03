from fractions import Fraction as Fr
from itertools import product

import pytest
from hypothesis import given, strategies as st

from geomitosis import polykernel as pk
from geomitosis.errors import CapacityError, DomainError, FormatError, NotAdmissibleError


def pts(*rows):
    return sorted(tuple(Fr(x) for x in r) for r in rows)


def fflv():
    return pk.HPolytope.from_rows(3, [
        ((-1, 0, 0), 0, "Q2"),      # x1 >= 0
        ((1, 0, 0), 1, "P2"),       # x1 <= 1
        ((0, 0, -1), 0, "P1"),      # x3 >= 0
        ((0, 0, 1), 1, "Q1"),       # x3 <= 1
        ((0, -1, 0), 0, "x2>=0"),
        ((1, 1, 1), 2, "sum"),
    ])


def triangle_P():
    return pk.HPolytope.from_rows(2, [((1, 0), 1), ((0, 1), 1), ((-1, -1), -1)])


def triangle_Q():
    return pk.HPolytope.from_rows(2, [((-1, 0), 0), ((0, -1), 0), ((1, 1), 1)])


def test_interval():
    H = pk.HPolytope.from_rows(1, [((1,), 3), ((-1,), -1)])
    assert pk.vertices(H) == pts((1,), (3,))
    assert pk.euler_characteristic(H) == 1


def test_fflv_vertices():
    # x1, x3 in {0, 1} and x2 at either end of its range
    want = pts((0, 0, 0), (0, 2, 0), (1, 0, 0), (1, 1, 0), (0, 0, 1), (0, 1, 1), (1, 0, 1))
    assert pk.vertices(fflv()) == want
    H = fflv()
    assert pk.is_cayley_decomposition(H, "P1", "Q1")
    assert pk.is_cayley_decomposition(H, "P2", "Q2")
    assert not pk.is_cayley_decomposition(H, "P1", "P2")


def test_fflv_first_split():
    H = fflv()
    v = (1, 1, 0)
    F = pk.face_of(H, ["P1", "sum"])
    assert pk.face_vertices(H, F) == pts((0, 2, 0), (1, 1, 0))
    out = pk.geometric_mitosis(H, "P1", "Q1", v, F)
    assert len(out) == 2
    assert set(out) == {pk.face_of(H, ["sum"]), pk.face_of(H, ["P2"])}


def test_offspring_cannot_be_split_again():
    H = fflv()
    F = pk.face_of(H, ["P1", "sum"])
    for E in pk.geometric_mitosis(H, "P1", "Q1", (1, 1, 0), F):
        assert not E.vertex_ids <= pk.face_of(H, ["P1"]).vertex_ids
        with pytest.raises(DomainError):
            pk.geometric_mitosis(H, "P1", "Q1", (1, 1, 0), E)


def test_euler_characteristic_examples():
    assert pk.euler_characteristic(fflv()) == 1
    assert pk.euler_characteristic(pk.cayley_sum(triangle_P(), triangle_Q())) == 1


def test_fflv_second_split_single_offspring():
    H = fflv()
    v = (1, 1, 0)
    P2 = pk.face_of(H, ["P2"])
    seen = 0
    for F in pk.faces_through(H, v, within=P2):
        if pk.is_admissible(H, "P2", F):
            seen += 1
            assert len(pk.geometric_mitosis(H, "P2", "Q2", v, F)) == 1
    assert seen > 0


def test_fflv_is_a_cayley_sum():
    # x3 is the Cayley coordinate: P = {x3 = 0} slice and Q = {x3 = 1} slice
    P = pk.HPolytope.from_rows(2, [((-1, 0), 0), ((1, 0), 1), ((0, -1), 0), ((1, 1), 2)])
    Q = pk.HPolytope.from_rows(2, [((-1, 0), 0), ((1, 0), 1), ((0, -1), 0), ((1, 1), 1)])
    assert pk.canonical_form(pk.cayley_sum(P, Q)) == pk.canonical_form(fflv())


def test_example_cayley_of_two_triangles():
    D = pk.cayley_sum(triangle_P(), triangle_Q())
    # octahedron: 0/1 points with one or two ones
    assert pk.vertices(D) == pts(*[p for p in product((0, 1), repeat=3) if 1 <= sum(p) <= 2])
    corrected = pk.HPolytope.from_rows(3, [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1),
                                           ((-1, 0, 0), 0), ((0, -1, 0), 0), ((0, 0, -1), 0),
                                           ((1, 1, 1), 2), ((-1, -1, -1), -1)])
    assert pk.canonical_form(D) == pk.canonical_form(corrected)
    assert len(pk.facets(D)) == 8


def test_example_literal_description_is_not_the_cayley_sum():
    literal = pk.HPolytope.from_rows(3, [((1, 0, 0), 1), ((0, 1, 0), 1), ((0, 0, 1), 1),
                                         ((1, 1, 1), 2), ((-1, -1, -1), -1)])
    # two coordinates at 1 and the sum at 1 or at 2
    want = pts((1, 1, -1), (1, -1, 1), (-1, 1, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1))
    assert pk.vertices(literal) == want
    assert pk.canonical_form(literal) != pk.canonical_form(pk.cayley_sum(triangle_P(), triangle_Q()))


def test_example_admissibility():
    D = pk.cayley_sum(triangle_P(), triangle_Q())
    P = pk.face_of(D, ["P"])
    assert P.dim == 2
    assert pk.is_admissible(D, "P", P)
    assert pk.expand(D, "P", P) == pk.whole(D)
    faces = pk.faces_containing(D, P) + [f for f in pk.all_faces(D) if f.vertex_ids < P.vertex_ids]
    edges = [f for f in faces if f.dim == 1 and f.vertex_ids <= P.vertex_ids]
    verts = [f for f in faces if f.dim == 0 and f.vertex_ids <= P.vertex_ids]
    assert len(edges) == 3 and len(verts) == 3
    assert all(pk.is_admissible(D, "P", e) for e in edges)
    assert not any(pk.is_admissible(D, "P", v) for v in verts)
    with pytest.raises(NotAdmissibleError):
        pk.geometric_mitosis(D, "P", "Q", pk.face_vertices(D, verts[0])[0], verts[0])


def test_segments_give_square():
    seg = pk.HPolytope.from_rows(1, [((1,), 1), ((-1,), 0)])
    sq = pk.cayley_sum(seg, seg)
    assert pk.vertices(sq) == pts((0, 0), (0, 1), (1, 0), (1, 1))


def test_faces_through_counts():
    cube = pk.HPolytope.from_rows(3, [(e, 1) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))] +
                                  [(tuple(-x for x in e), 0) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))])
    # a simple vertex of a 3-polytope lies on 2^3 faces
    assert len(pk.faces_through(cube, (0, 0, 0))) == 8
    assert len(pk.all_faces(cube)) == 26 + 1
    assert pk.euler_characteristic(cube) == 1


def test_errors():
    with pytest.raises(CapacityError):
        pk.vertices(pk.HPolytope.from_rows(1, [((1,), 1)]))
    big = pk.HPolytope.from_rows(13, [(tuple(int(i == k) for i in range(13)), 1) for k in range(13)] +
                                 [((-1,) * 13, 0)])
    with pytest.raises(CapacityError):
        pk.vertices(big)
    with pytest.raises(DomainError):
        pk.vertices(pk.HPolytope.from_rows(1, [((1,), 0), ((-1,), -1)]))
    with pytest.raises(DomainError):
        pk.HPolytope.from_rows(2, [((1,), 0)])
    with pytest.raises(DomainError):
        pk.vertex_index(fflv(), (5, 5, 5))
    with pytest.raises(FormatError):
        pk.HPolytope.from_json("{")
    with pytest.raises(DomainError):
        pk.convex_hull([(0, 0), (1, 1)])


def test_row_normalisation():
    H = pk.HPolytope.from_rows(2, [((Fr(1, 2), Fr(1, 3)), Fr(5, 6))])
    assert H.rows[0].a == (3, 2) and H.rows[0].b == 5
    H = pk.HPolytope.from_rows(1, [((-2,), -4)])
    assert H.rows[0].a == (-1,) and H.rows[0].b == -2


def test_json_roundtrip():
    H = fflv()
    assert pk.HPolytope.from_json(H.to_json()) == H


def monotone_chain(points):
    """Strict convex hull vertices in the plane (independent oracle)."""
    P = sorted(set(points))
    if len(P) <= 2:
        return P

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in P:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(P):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return sorted(lower[:-1] + upper[:-1])


coords = st.integers(-4, 4)


@given(st.lists(st.tuples(coords, coords), min_size=3, max_size=10))
def test_hull_matches_monotone_chain(points):
    P = [tuple(Fr(x) for x in p) for p in points]
    if pk.affine_dim(P) < 2:
        return
    H = pk.convex_hull(P)
    assert pk.vertices(H) == monotone_chain(P)
    assert pk.euler_characteristic(H) == 1


@given(st.lists(st.tuples(coords, coords, coords), min_size=4, max_size=9))
def test_hull_3d_properties(points):
    P = [tuple(Fr(x) for x in p) for p in points]
    if pk.affine_dim(P) < 3:
        return
    H = pk.convex_hull(P)
    assert all(H.contains(p) for p in P)
    V = pk.vertices(H)
    assert set(V) <= set(P)
    assert pk.euler_characteristic(H) == 1
    # hull of the vertices is the same polytope
    assert pk.canonical_form(pk.convex_hull(V)) == pk.canonical_form(H)
    faces = pk.all_faces(H)
    nv = sum(f.dim == 0 for f in faces)
    ne = sum(f.dim == 1 for f in faces)
    nf = sum(f.dim == 2 for f in faces)
    assert nv - ne + nf == 2


@given(st.lists(st.tuples(coords, coords), min_size=3, max_size=6),
       st.lists(st.tuples(coords, coords), min_size=3, max_size=6))
def test_cayley_sum_structure(a, b):
    A = [tuple(Fr(x) for x in p) for p in a]
    B = [tuple(Fr(x) for x in p) for p in b]
    if pk.affine_dim(A) < 2 or pk.affine_dim(B) < 2:
        return
    P, Q = pk.convex_hull(A), pk.convex_hull(B)
    D = pk.cayley_sum(P, Q)
    assert pk.is_cayley_decomposition(D, "P", "Q")
    assert pk.face_of(D, ["P"]).dim == 2 and pk.face_of(D, ["Q"]).dim == 2
    want = [v + (Fr(0),) for v in pk.vertices(P)] + [v + (Fr(1),) for v in pk.vertices(Q)]
    assert pk.vertices(D) == sorted(want)
    # the whole facet P is admissible and expands to the polytope
    assert pk.expand(D, "P", pk.face_of(D, ["P"])) == pk.whole(D)
