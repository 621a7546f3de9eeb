import math
import random

import pytest

from heronlattice.canonical import (
    canonical_points,
    is_axial_embedding,
    strong_canonical,
    weak_canonical,
)
from heronlattice.embed import (
    EmbeddingError,
    EvenDenominatorError,
    LatticeEmbedding,
    embed_points_z3,
    embed_step_z3,
    embed_tetra_z3,
    embed_triangle_via_z3,
    embed_triangle_z2,
    gcd_embedding_family,
    rotate_point_z3,
    verify_embedding,
)
from heronlattice.pose import axial_pose
from heronlattice.quaternion import UNITS, Quat, associated, quat_gcd
from heronlattice.simplex import EdgeHexad, EdgeTriple, all_permutations, parse_permutation

FIRST = EdgeHexad.of(2431, 2375, 1044, 2296, 2175, 1479)
ISOHEDRAL = EdgeHexad.of(8484, 6625, 6409, 6409, 6625, 8484)
HALF_TURNS = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]


def _up_to_half_turn(points, expected):
    return any(
        [tuple(s * c for s, c in zip(signs, p)) for p in points] == list(expected)
        for signs in HALF_TURNS
    )


def test_rotate_point_examples():
    x = Quat(-5, 0, 0, 2)
    assert rotate_point_z3(x, Quat(29, 18876, 67925, 0)) == Quat(1, -1144, 2145, 0)
    assert rotate_point_z3(x, Quat(1, 1044, 0, 0)) == Quat(1, 756, 720, 0)
    with pytest.raises(ValueError):
        rotate_point_z3(Quat(0), Quat(1, 1, 0, 0))


def test_first_step_of_first_example():
    pose = axial_pose(FIRST, parse_permutation("QRPS", 4))
    points, rotor = embed_step_z3(pose.vertices, 2)
    assert associated(rotor, Quat(-5, 0, 0, 2), "left")
    assert points == [
        Quat(1, 0, 0, 0),
        Quat(1, 756, 720, 0),
        Quat(1, -1144, 2145, 0),
        Quat(13, 10440, 21837, 14616),
    ]


def test_first_example_end_to_end():
    e = embed_tetra_z3(FIRST, parse_permutation("QRPS", 4))
    assert verify_embedding(e)
    assert len(e.rotors) == 2
    assert associated(e.rotors[1], Quat(-2, 2, 2, 1), "left")
    raw = [(0, 0, 0), (396, 864, 432), (396, -561, 2332), (1740, 783, 1044)]
    assert _up_to_half_turn(e.points(), raw)
    assert strong_canonical(e).vertices == (
        (0, 0, 396),
        (561, 2332, 0),
        (1344, 1288, 1740),
        (1425, 1900, 396),
    )
    assert weak_canonical(e).vertices == strong_canonical(e).vertices


def test_second_example_canonical():
    e = embed_tetra_z3(FIRST, parse_permutation("PQSR", 4))
    assert strong_canonical(e).vertices == (
        (0, 0, 396),
        (224, 1848, 1740),
        (665, 2280, 396),
        (1529, 1848, 0),
    )


def test_isohedral_example_needs_one_rotor():
    e = embed_tetra_z3(ISOHEDRAL, parse_permutation("PRQS", 4))
    assert len(e.rotors) == 1
    assert associated(e.rotors[0], Quat(0, -1, -2, 0), "left")
    assert strong_canonical(e).vertices == (
        (0, 0, 1401),
        (0, 3016, 7056),
        (0, 8316, 3081),
        (4368, 4780, 0),
    )


@pytest.mark.parametrize(
    "edges, size",
    [
        ((2431, 2375, 1044, 2296, 2175, 1479), 2),
        ((1073, 975, 448, 495, 952, 840), 2),
        ((1360, 1092, 548, 975, 865, 663), 3),
        ((45100, 43911, 6929, 34476, 40544, 36975), 4),
    ],
)
def test_gcd_family_sizes(edges, size):
    assert len(gcd_embedding_family(EdgeHexad(edges))) == size


def test_isohedral_family_one_strong_four_weak():
    assert len(gcd_embedding_family(ISOHEDRAL, "strong")) == 1
    assert len(gcd_embedding_family(ISOHEDRAL, "weak")) == 4


def test_family_is_independent_of_jobs():
    assert gcd_embedding_family(FIRST, jobs=2) == gcd_embedding_family(FIRST)


def test_embed_points_translates_first_point():
    pose = axial_pose(FIRST, parse_permutation("QRPS", 4))
    shifted = [
        Quat(v.s, v.p + 5 * v.s, v.q + 5 * v.s, v.r + 5 * v.s) for v in pose.vertices
    ]
    points, rotors = embed_points_z3(shifted)
    expected = embed_tetra_z3(FIRST, parse_permutation("QRPS", 4))
    assert tuple(points) == expected.vertices
    assert rotors == expected.rotors


def test_step_rejects_even_and_unembedded_points():
    with pytest.raises(EvenDenominatorError):
        embed_step_z3([Quat(1), Quat(2, 1, 0, 0)], 1)
    with pytest.raises(EmbeddingError):
        embed_step_z3([Quat(3, 1, 0, 0), Quat(5, 3, 4, 0)], 1)
    points, rotor = embed_step_z3([Quat(1), Quat(1, 3, 4, 0)], 1)
    assert rotor == Quat(1)


def test_step_leaves_later_rational_vertices_alone():
    pose = axial_pose(FIRST, parse_permutation("QRPS", 4))
    assert [v.s for v in pose.vertices] == [1, 1, 29, 13]
    points, _ = embed_step_z3(pose.vertices, 2)
    assert [v.s for v in points] == [1, 1, 1, 13]
    points, _ = embed_step_z3(points, 3)
    assert all(v.s == 1 for v in points)
    with pytest.raises(EmbeddingError):
        embed_step_z3(pose.vertices, 3)


def test_triangle_z2_known_embedding():
    e = embed_triangle_z2(EdgeTriple.of(30, 29, 5))
    assert e.points() == ((0, 0), (18, -24), (21, -20))
    assert verify_embedding(e)


def test_triangle_z2_and_via_z3_agree():
    for edges in [(30, 29, 5), (3, 4, 5), (13, 14, 15), (25, 25, 14), (17, 10, 9)]:
        t = EdgeTriple(edges)
        z2 = embed_triangle_z2(t)
        z3 = embed_triangle_via_z3(t)
        assert verify_embedding(z2) and verify_embedding(z3)
        assert all(v.r == 0 for v in z3.vertices)
        assert strong_canonical(z2) == strong_canonical(z3)


def test_verify_rejects_wrong_vertices():
    good = embed_tetra_z3(FIRST)
    bad = LatticeEmbedding(
        good.vertices[:3] + (Quat(1, 1, 1, 1),), FIRST, good.permutation
    )
    assert not verify_embedding(bad)
    assert canonical_points(good.points()) == strong_canonical(good)


def test_canonical_form_ignores_the_rotor_associate():
    for perm in all_permutations(4):
        pose = axial_pose(FIRST, perm)
        expected = strong_canonical(embed_tetra_z3(FIRST, perm))
        pending = [i for i, v in enumerate(pose.vertices) if v.s != 1]
        if not pending:
            continue
        pivot = pose.vertices[pending[0]]
        rotor = quat_gcd(pivot, Quat(pivot.s), "left")
        for unit in UNITS:
            turned = [rotate_point_z3(rotor * unit, v) for v in pose.vertices]
            points, _ = embed_points_z3(turned)
            assert canonical_points([v.vector for v in points]) == expected


def _random_heronian_triangle(rng):
    # every Heronian triangle is a multiple of one of these
    while True:
        m, n, k = rng.randint(1, 15), rng.randint(1, 15), rng.randint(1, 15)
        if m * n <= k * k:
            continue
        sides = [n * (m * m + k * k), m * (n * n + k * k), (m + n) * (m * n - k * k)]
        g = math.gcd(*sides)
        rng.shuffle(sides)
        return EdgeTriple(tuple(s // g for s in sides))


@pytest.mark.slow
def test_randomized_triangle_paths_agree():
    rng = random.Random(14)
    perms = all_permutations(3)
    for _ in range(10_000):
        t = _random_heronian_triangle(rng)
        perm = rng.choice(perms)
        z2 = embed_triangle_z2(t, perm)
        z3 = embed_triangle_via_z3(t, perm)
        assert verify_embedding(z2) and verify_embedding(z3)
        assert strong_canonical(z2) == strong_canonical(z3)


SMALLEST = EdgeHexad.of(117, 84, 51, 80, 53, 52)
NO_AXIAL = EdgeHexad.of(160, 153, 25, 120, 56, 39)


def test_axial_pose_on_the_lattice():
    integral = [
        perm
        for perm in all_permutations(4)
        if all(v.s == 1 for v in axial_pose(SMALLEST, perm).vertices)
    ]
    assert integral
    e = embed_tetra_z3(SMALLEST, integral[0])
    assert e.rotors == ()
    assert is_axial_embedding(strong_canonical(e))
    for perm in all_permutations(4):
        assert any(v.s != 1 for v in axial_pose(NO_AXIAL, perm).vertices)
        assert not is_axial_embedding(strong_canonical(embed_tetra_z3(NO_AXIAL, perm)))
