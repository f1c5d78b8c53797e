import pytest

from dwfnet import GF2m, PhaseSpace, Point
from dwfnet.errors import ValidationError


def space(m):
    return PhaseSpace(GF2m(m))


def test_striation_count_and_sizes():
    for m in [1, 2, 3]:
        ps = space(m)
        n = ps.field.order
        assert len(ps.striations) == n + 1
        for st in ps.striations:
            assert len(st.lines) == n
            for line in st.lines:
                assert len(line.points) == n


def test_n2_counts():
    ps = space(1)
    assert len(ps.striations) == 3
    assert sum(len(st.lines) for st in ps.striations) == 6


def test_canonical_direction_order():
    # vertical (0,1), horizontal (1,0), then (1, omega^k) with k increasing
    ps = space(2)
    assert ps.directions == ((0, 1), (1, 0), (1, 1), (1, 2), (1, 3))
    ps = space(1)
    assert ps.directions == ((0, 1), (1, 0), (1, 1))


def test_line_partition():
    # each striation is a partition of the N^2 points
    for m in [1, 2]:
        ps = space(m)
        n = ps.field.order
        all_pts = {(pt.q, pt.p) for pt in ps.points}
        for st in ps.striations:
            covered = [(pt.q, pt.p) for line in st.lines for pt in line.points]
            assert len(covered) == n * n
            assert set(covered) == all_pts


def test_two_lines_same_striation_disjoint():
    ps = space(2)
    for st in ps.striations:
        for i, la in enumerate(st.lines):
            for lb in st.lines[i + 1 :]:
                shared = set(la.points) & set(lb.points)
                assert not shared


def test_lines_through_point():
    # N+1 lines through any point, one per striation
    for m in [1, 2]:
        ps = space(m)
        for pt in ps.points:
            through = ps.lines_through(pt)
            assert len(through) == ps.field.order + 1
            assert sorted(l.striation_id for l in through) == list(
                range(ps.field.order + 1)
            )


def test_ray_contains_origin():
    for m in [1, 2, 3]:
        ps = space(m)
        origin = Point(0, 0)
        for st in ps.striations:
            assert origin in st.ray


def test_ray_is_generated_by_direction():
    # the ray of striation (a, b) is exactly {s*(a,b) : s in field}
    for m in [1, 2]:
        ps = space(m)
        f = ps.field
        for st in ps.striations:
            expected = {(f.mul(s, st.a), f.mul(s, st.b)) for s in f.elements()}
            assert {(pt.q, pt.p) for pt in st.ray.points} == expected


def test_translate_point_gf4():
    ps = space(2)
    # (1, 0) shifted by (omega, omega^2) lands on (omega^2, omega^2)
    out = ps.translate_point(Point(1, 0), Point(2, 3))
    assert (out.q, out.p) == (3, 3)


def test_translation_permutes_each_striation():
    ps = space(2)
    for st in ps.striations:
        for beta in ps.points:
            images = set()
            for line in st.lines:
                pts = [ps.translate_point(pt, beta) for pt in line.points]
                offs = {ps.line_offset(st.striation_id, pt) for pt in pts}
                assert len(offs) == 1
                images.add(offs.pop())
            assert images == set(range(ps.field.order))


def test_point_index_rowmajor():
    ps = space(2)
    assert Point(0, 0).index(4) == 0
    assert Point(0, 1).index(4) == 1
    assert Point(1, 0).index(4) == 4
    assert Point(3, 3).index(4) == 15
    idx = [pt.index(4) for pt in ps.points]
    assert sorted(idx) == list(range(16))


def test_representative_shift_lands_on_line():
    for m in [1, 2]:
        ps = space(m)
        for st in ps.striations:
            for c in range(ps.field.order):
                line = st.lines[c]
                shift = ps.representative_shift(st.striation_id, c)
                assert shift in line
                # shifting the ray by it reproduces the line
                shifted = {
                    (p2.q, p2.p)
                    for p2 in (
                        ps.translate_point(pt, shift) for pt in st.ray.points
                    )
                }
                assert shifted == {(pt.q, pt.p) for pt in line.points}


def test_line_offset_matches_membership():
    ps = space(2)
    for st in ps.striations:
        for pt in ps.points:
            c = ps.line_offset(st.striation_id, pt)
            assert pt in st.lines[c]
