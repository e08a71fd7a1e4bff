"""The two-dimensional additivity complex over the unit square."""

from collections import Counter
from fractions import Fraction

import pytest

from groupcut.exactnum import QNum
from groupcut.pwl import PwlFunction
from groupcut.complex2d import (Complex2D, Face2D, Interval, ccw_hull_order,
                                centroid, make_face, n_f, polygon_vertices)

H = Fraction(1, 2)


def half_complex() -> Complex2D:
    fn = PwlFunction.continuous_from_values([(0, 0), (H, 1)], H)
    return Complex2D(fn.breakpoints)


def test_interval_normalizes_and_validates():
    iv = Interval(0, H)
    assert iv.a == QNum(0) and iv.b == QNum(H)
    assert Interval(H, H).is_point
    with pytest.raises(ValueError):
        Interval(H, 0)


def test_face_counts_for_half_grid():
    cx = half_complex()
    counts = Counter(f.dim for f in cx.faces)
    assert len(cx.faces) == 33
    assert counts == {0: 9, 1: 16, 2: 8}


def test_vertices_are_exact_and_in_box():
    cx = half_complex()
    for face in cx.faces:
        assert len(face.vertices) == {0: 1, 1: 2}.get(face.dim, 3)
        for (u, v) in face.vertices:
            assert QNum(0) <= u <= 1
            assert QNum(0) <= v <= 1
            assert face.I.a <= u <= face.I.b
            assert face.J.a <= v <= face.J.b
            assert face.K.a <= u + v <= face.K.b


def test_polygon_vertices_triangle():
    verts = polygon_vertices(Interval(0, H), Interval(0, H), Interval(0, H))
    assert set(verts) == {(QNum(0), QNum(0)), (QNum(0), QNum(H)),
                          (QNum(H), QNum(0))}


def test_make_face_empty_cases():
    # x + y can never reach 3/2 inside [0,1/2]^2
    assert make_face(Interval(0, H), Interval(0, H),
                     Interval(Fraction(3, 2), 2)) is None
    point = make_face(Interval(H, H), Interval(H, H), Interval(1, 1))
    assert point is not None and point.dim == 0


def test_find_face():
    cx = half_complex()
    f = cx.find_face(Interval(0, H), Interval(0, H), Interval(0, H))
    assert f.dim == 2
    with pytest.raises(ValueError):
        cx.find_face(Interval(0, H), Interval(0, H), Interval(Fraction(3, 2),
                                                              2))
    with pytest.raises(ValueError):
        cx.find_face(Interval(0, Fraction(1, 4)), Interval(0, H),
                     Interval(0, H))  # not cells of this complex


def test_face_of_point():
    cx = half_complex()
    f = cx.face_of_point(Fraction(1, 8), Fraction(1, 8))
    assert f.dim == 2
    assert f.label() == "F([0, 1/2], [0, 1/2], [0, 1/2])"
    g = cx.face_of_point(Fraction(1, 4), Fraction(1, 4))
    assert g.dim == 1  # on the diagonal x + y = 1/2
    h = cx.face_of_point(H, H)
    assert h.dim == 0
    assert h.vertices == ((QNum(H), QNum(H)),)


def test_faces_partition_vertices_consistently():
    cx = half_complex()
    # face lookup of each face's own centroid returns that face
    for face in cx.faces:
        cu, cv = centroid(face.vertices)
        again = cx.face_of_point(cu, cv)
        assert again.triple_key == face.triple_key


def test_determinism():
    a, b = half_complex(), half_complex()
    assert [f.triple_key for f in a.faces] == [f.triple_key for f in b.faces]
    assert [f.vertices for f in a.faces] == [f.vertices for f in b.faces]


def test_n_f():
    specials = ((QNum(Fraction(1, 4)), QNum(Fraction(3, 8))),)
    face = make_face(Interval(0, H), Interval(0, H), Interval(0, H))
    assert n_f(face, ()) == 0
    assert n_f(face, specials) == 3  # all three projections overlap
    two = make_face(Interval(0, H), Interval(0, H), Interval(H, 1))
    assert n_f(two, specials) == 2  # the sum projection stays clear
    pt = make_face(Interval(H, H), Interval(H, H), Interval(1, 1))
    assert n_f(pt, specials) == 0
    # the sum projection is tested against the shifted interval too
    hi = make_face(Interval(Fraction(7, 8), 1), Interval(Fraction(3, 8), H),
                   Interval(Fraction(5, 4), Fraction(11, 8)))
    assert hi is not None
    assert n_f(hi, specials) >= 1


def test_ccw_hull_order():
    pts = [(QNum(0), QNum(0)), (QNum(1), QNum(1)), (QNum(1), QNum(0)),
           (QNum(0), QNum(1))]
    hull = ccw_hull_order(pts)
    assert len(hull) == 4
    # consecutive cross products all positive: counterclockwise convex walk
    for i in range(4):
        o, a, b = hull[i], hull[(i + 1) % 4], hull[(i + 2) % 4]
        cross = ((a[0] - o[0]) * (b[1] - o[1])
                 - (a[1] - o[1]) * (b[0] - o[0]))
        assert cross > 0


def test_kzh_complex_size():
    from groupcut.catalog import kzh_function
    from groupcut.additivity import get_complex
    cx = get_complex(kzh_function())
    counts = Counter(f.dim for f in cx.faces)
    assert len(cx.faces) == 18155
    assert counts == {0: 4479, 1: 9077, 2: 4599}
