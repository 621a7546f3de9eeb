import random
from fractions import Fraction

import pytest

from heronlattice.simplex import (
    EdgeHexad,
    EdgeTriple,
    ImproperSimplexError,
    NotATriangleError,
    NotHeronianError,
    all_permutations,
    canonical_hexad,
    classify_symmetry,
    cm_area_sq,
    cm_volume_det,
    cot_half_angle,
    format_permutation,
    hero_area_sq16,
    is_heronian,
    is_proper,
    parse_permutation,
    tetrahedron_volume,
)

FIRST = EdgeHexad.of(2431, 2375, 1044, 2296, 2175, 1479)


def test_parse_and_format():
    h = EdgeHexad.parse("2431,2375,1044,2296,2175,1479")
    assert h == FIRST
    assert str(h) == "2431,2375,1044,2296,2175,1479"
    assert EdgeTriple.parse("[3, 4, 5]") == EdgeTriple.of(3, 4, 5)
    with pytest.raises(ValueError):
        EdgeHexad.parse("1,2,3")
    with pytest.raises(ValueError):
        EdgeTriple.of(0, 1, 1)


def test_permutations_round_trip():
    perm = parse_permutation("QRPS", 4)
    assert perm == (1, 2, 0, 3)
    assert format_permutation(perm) == "QRPS"
    assert all_permutations(4)[0] == (0, 1, 2, 3)
    with pytest.raises(ValueError):
        parse_permutation("QQPS", 4)


def test_permuted_edges():
    posed = FIRST.permuted(parse_permutation("QRPS", 4))
    assert posed.edges[:3] == (1044, 2431, 2375)
    assert sorted(posed.edges) == sorted(FIRST.edges)


def test_faces_in_sequential_order():
    faces = EdgeHexad.of(117, 84, 51, 80, 53, 52).faces()
    assert [f.edges for f in faces] == [(117, 84, 51), (117, 80, 53), (84, 80, 52), (51, 53, 52)]


def test_hero_examples():
    assert hero_area_sq16(EdgeTriple.of(3, 4, 5)) == 576
    assert hero_area_sq16(EdgeTriple.of(30, 29, 5)) == 82944
    assert hero_area_sq16(EdgeTriple.of(1, 1, 1)) == 3
    assert hero_area_sq16(EdgeTriple.of(1, 1, 2)) == 0
    with pytest.raises(NotATriangleError, match="not a triangle"):
        hero_area_sq16(EdgeTriple.of(1, 2, 5))


def test_bordered_determinant_examples():
    assert cm_area_sq(EdgeTriple.of(3, 4, 5)) == 576
    assert cm_area_sq(EdgeTriple.of(1, 1, 2)) == 0


@pytest.mark.slow
def test_bordered_determinant_matches_hero():
    rng = random.Random(3)
    for _ in range(10_000):
        a, b = rng.randint(1, 200), rng.randint(1, 200)
        c = rng.randint(abs(a - b), a + b) or 1
        t = EdgeTriple.of(a, b, c)
        assert cm_area_sq(t) == hero_area_sq16(t)


def test_volume_determinant():
    # e = 458211600 from the axial pose of the QRPS relabeling
    assert cm_volume_det(FIRST) == 288 * 458211600**2
    flat = EdgeHexad.of(3, 4, 5, 5, 4, 3)
    assert cm_volume_det(flat) == 0
    assert tetrahedron_volume(flat) == 0
    assert not is_proper(flat)


@pytest.mark.parametrize(
    "edges, expected",
    [
        ((117, 84, 51, 80, 53, 52), True),
        ((1, 1, 1, 1, 1, 1), False),
        ((203, 195, 148, 148, 195, 203), True),
        ((160, 153, 25, 120, 56, 39), True),
        ((2431, 2375, 1044, 2296, 2175, 1479), True),
        ((1, 1, 5, 1, 1, 1), False),
    ],
)
def test_is_heronian(edges, expected):
    assert is_heronian(EdgeHexad(edges)) is expected


def test_canonical_hexad_is_lexicographic_maximum():
    h = EdgeHexad.of(51, 84, 117, 53, 80, 52)
    canon, perm = canonical_hexad(h)
    assert canon == EdgeHexad.of(117, 84, 51, 52, 80, 53)
    assert h.permuted(perm) == canon
    assert canonical_hexad(canon) == (canon, (0, 1, 2, 3))


def test_canonical_hexad_restores_relabelings():
    base = EdgeHexad.of(117, 84, 51, 80, 53, 52)
    for perm in all_permutations(4):
        assert canonical_hexad(base.permuted(perm))[0] == base


@pytest.mark.parametrize(
    "edges, tag, count",
    [
        ((117, 84, 51, 80, 53, 52), "scalene", 1),
        ((680, 680, 208, 615, 185, 185), "semi-isosceles", 2),
        ((1073, 1073, 990, 896, 1073, 1073), "isosceles", 4),
        ((990, 901, 793, 793, 901, 308), "semi-isohedral", 2),
        ((203, 195, 148, 148, 195, 203), "isohedral", 4),
        ((2, 1, 1, 1, 1, 2), "isohedral-isosceles", 8),
        ((2, 2, 2, 3, 3, 3), "equilateral", 6),
        ((5, 5, 5, 5, 5, 5), "regular", 24),
    ],
)
def test_classify_symmetry(edges, tag, count):
    cls = classify_symmetry(EdgeHexad(edges))
    assert (cls.tag, cls.isomorph_count) == (tag, count)


def test_cot_half_angle():
    t = EdgeTriple.of(3, 4, 5)
    assert cot_half_angle(t, "P") == 1
    assert cot_half_angle(t, "R") == 3
    assert cot_half_angle(t, 1) == 2
    assert cot_half_angle(EdgeTriple.of(13, 14, 15), "P") == Fraction(3, 2)


def test_cot_half_angle_rejects_bad_triangles():
    with pytest.raises(ImproperSimplexError):
        cot_half_angle(EdgeTriple.of(1, 1, 2), "P")
    with pytest.raises(NotHeronianError):
        cot_half_angle(EdgeTriple.of(1, 1, 1), "P")
