import itertools
import random

from heronlattice.canonical import (
    CanonicalEmbedding,
    apply_isometry,
    canonical_points,
    cube_rotors,
    is_axial_embedding,
    lattice_isometries,
    normalize_translation,
    rotor_matrix,
)

RAW_FIRST = [(0, 0, 0), (396, 864, 432), (396, -561, 2332), (1740, 783, 1044)]
CANON_FIRST = ((0, 0, 396), (561, 2332, 0), (1344, 1288, 1740), (1425, 1900, 396))


def test_normalize_translation():
    assert normalize_translation([(-1, 5, 0), (3, 5, 2)]) == ((0, 0, 0), (4, 0, 2))
    assert normalize_translation([]) == ()


def test_isometry_counts():
    assert len(lattice_isometries(3)) == 48
    assert len(lattice_isometries(2)) == 8


def test_strong_canonical_of_first_example():
    form = canonical_points(RAW_FIRST)
    assert form.vertices == CANON_FIRST
    assert form.to_lines()[0] == "[1,0,0,396]"


def test_canonical_is_invariant_under_isometries_and_translations():
    for index, isometry in enumerate(lattice_isometries(3)):
        shift = (index, -3 * index, 7)
        moved = [
            tuple(c + s for c, s in zip(apply_isometry(isometry, p), shift)) for p in RAW_FIRST
        ]
        assert canonical_points(moved).vertices == CANON_FIRST


def test_strong_ignores_vertex_order_but_weak_keeps_labels():
    shuffled = [RAW_FIRST[i] for i in (2, 0, 3, 1)]
    assert canonical_points(shuffled).vertices == CANON_FIRST
    weak_a = canonical_points(RAW_FIRST, (0, 1, 2, 3), "weak")
    weak_b = canonical_points(shuffled, (2, 0, 3, 1), "weak")
    assert weak_a == weak_b
    assert weak_a.vertices == CANON_FIRST
    relabelled = canonical_points(RAW_FIRST, (1, 0, 2, 3), "weak")
    assert relabelled != weak_a


def test_canonical_is_idempotent():
    form = canonical_points(RAW_FIRST)
    assert canonical_points(form.vertices) == form


def test_distances_are_preserved():
    form = canonical_points(RAW_FIRST)

    def dists(points):
        return sorted(
            sum((x - y) ** 2 for x, y in zip(a, b))
            for a, b in itertools.combinations(points, 2)
        )

    assert dists(form.vertices) == dists(RAW_FIRST)


def _as_isometry(matrix):
    axes, signs = [], []
    for row in matrix:
        (col,) = [c for c, v in enumerate(row) if v != 0]
        assert abs(row[col]) == 1
        axes.append(col)
        signs.append(int(row[col]))
    return tuple(axes), tuple(signs)


def test_cube_rotors_give_the_48_lattice_isometries():
    rotors = cube_rotors()
    assert len(rotors) == 24
    rotations = {_as_isometry(rotor_matrix(x)) for x in rotors}
    assert len(rotations) == 24
    reflected = {(axes, tuple(-s for s in signs)) for axes, signs in rotations}
    assert rotations | reflected == set(lattice_isometries(3))


def test_canonical_embedding_quats_for_triangles():
    form = CanonicalEmbedding(((0, 0), (3, 4)))
    assert [list(q) for q in form.to_quats()] == [[1, 0, 0, 0], [1, 3, 4, 0]]


def _random_points(rng, count=4, dim=3, span=20):
    points = set()
    while len(points) < count:
        points.add(tuple(rng.randint(-span, span) for _ in range(dim)))
    return list(points)


def test_randomized_canonical_invariance():
    rng = random.Random(48)
    isometries = lattice_isometries(3)
    for _ in range(10_000):
        points = _random_points(rng)
        labels = list(range(len(points)))
        isometry = rng.choice(isometries)
        shift = tuple(rng.randint(-50, 50) for _ in range(3))
        moved = [
            tuple(c + s for c, s in zip(apply_isometry(isometry, p), shift)) for p in points
        ]
        order = list(range(len(points)))
        rng.shuffle(order)

        strong = canonical_points(points)
        assert canonical_points(strong.vertices) == strong
        assert canonical_points(moved) == strong
        assert canonical_points([points[i] for i in order]) == strong

        weak = canonical_points(points, labels, "weak")
        assert weak.vertices == strong.vertices
        assert (
            canonical_points([moved[i] for i in order], [labels[i] for i in order], "weak")
            == weak
        )


def test_is_axial_embedding():
    assert is_axial_embedding(canonical_points([(0, 0), (14, 0), (9, 12)]))
    assert not is_axial_embedding(canonical_points([(0, 0), (18, -24), (21, -20)]))
    axial = [(0, 0, 0), (0, 0, 5), (3, 0, 4), (1, 2, 3)]
    assert is_axial_embedding(canonical_points(axial))
    rng = random.Random(5)
    for isometry in lattice_isometries(3):
        shift = tuple(rng.randint(-9, 9) for _ in range(3))
        moved = [
            tuple(c + s for c, s in zip(apply_isometry(isometry, p), shift)) for p in axial
        ]
        assert is_axial_embedding(canonical_points(moved))
    assert not is_axial_embedding(canonical_points(RAW_FIRST))
