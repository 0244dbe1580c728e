import json
import math
import os

import pytest

import barcode_strata as bs

DATA = os.environ.get("BARCODE_STRATA_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def worked_example():
    return bs.Barcode([(1, 10), (2, 5), (4, 5), (4, 7)])


def test_permutations():
    p = bs.Permutation([4, 1, 3, 2])
    assert p.one_line == [4, 1, 3, 2]
    assert p.inversions() == 4
    assert p.descents() == 2
    assert (p * p.inverse()) == bs.Permutation.identity(4)
    assert bs.Permutation([2, 3, 1]).act([10.0, 20.0, 30.0]) == [30.0, 10.0, 20.0]


def test_worked_example_invariants():
    b = worked_example()
    assert bs.birth_permutation(b).one_line == [1, 2, 3, 4]
    assert bs.death_permutation(b).one_line == [2, 3, 4, 1]
    assert not bs.is_strict(b)

    pb, pd = bs.parabolics(b)
    assert pb.generators == [3]
    assert pd.generators == [1]

    dc = bs.double_coset(b)
    assert dc.rep.one_line == [2, 3, 4, 1]
    assert sorted(e.one_line for e in dc.elements()) == [
        [2, 3, 4, 1],
        [2, 4, 3, 1],
        [3, 2, 4, 1],
        [4, 2, 3, 1],
    ]

    with pytest.raises(Exception):
        bs.barcode_permutation(b)


def test_strict_sigma():
    b = bs.Barcode([(3, 4), (1, 7), (0, 5), (2, 6)])
    assert bs.is_strict(b)
    assert bs.barcode_permutation(b).one_line == [4, 1, 3, 2]


def test_coordinates_roundtrip():
    b = worked_example()
    coords = bs.coxeter_coordinates(b)
    assert coords["mean_birth"] == pytest.approx(2.75)
    assert coords["mean_death"] == pytest.approx(6.75)
    assert coords["dev_birth"] == pytest.approx(math.sqrt(6.75))
    assert coords["dev_death"] == pytest.approx(math.sqrt(16.75))

    mean, radius = bs.project([1.0, 2.0, 4.0, 4.0])
    assert mean == pytest.approx(2.75)
    assert radius == pytest.approx(math.sqrt(6.75))

    face = bs.face_of([5.0, 1.0, 2.0])
    assert face.rep.one_line == [2, 3, 1]
    assert face.subgroup.generators == []


def test_stratum_and_order():
    b = worked_example()
    s = bs.stratum_of(b)
    assert s.left.generators == [3]
    assert s.right.generators == [1]
    assert bs.contains(s, b)
    bottom = bs.MarkedDoubleCoset(
        bs.ParabolicSubgroup(4, [1, 2, 3]),
        bs.Permutation.identity(4),
        bs.ParabolicSubgroup(4, [1, 2, 3]),
    )
    assert bs.q_leq(bottom, s)
    assert bs.contains(bottom, b)


def test_distances():
    a = bs.Barcode([(0, 1)])
    b = bs.Barcode([(2, 5)])
    d, matching = bs.modified_bottleneck(a, b)
    assert d == 4.0
    assert matching.one_line == [1]

    d2, _ = bs.modified_wasserstein(a, b)
    assert d2 == pytest.approx(math.sqrt(20.0))

    assert bs.quotient_distance(a, b, "linf") == 4.0
    assert bs.quotient_distance(a, b, "l2") == pytest.approx(math.sqrt(20.0), rel=1e-12)

    x = bs.random_barcode(5, seed=11)
    y = bs.random_barcode(5, seed=12)
    db, _ = bs.modified_bottleneck(x, y)
    assert db == bs.quotient_distance(x, y, "linf")

    m = bs.distance_matrix([x, y, x], "linf")
    assert m[0][2] == 0.0
    assert m[0][1] == db == m[1][0]


def test_complex_enumeration():
    faces = bs.enumerate_complex(4)
    dims = [f["dim"] for f in faces]
    assert dims.count(2) == 24
    assert dims.count(1) == 36
    assert dims.count(0) == 14

    chambers, adjacency = bs.chamber_graph(3)
    assert len(chambers) == 6
    assert all(len(nb) == 2 for nb in adjacency)


def test_file_io_and_analyze():
    b = bs.read_barcode(os.path.join(DATA, "example_a.csv"))
    assert b.n == 4
    report = json.loads(bs.analyze(b, enumerate_dc=True))
    assert report["P_b"] == [3]
    assert report["P_d"] == [1]
    assert report["double_coset_rep"] == [2, 3, 4, 1]
    assert report["strict"] is False
    assert len(report["double_coset_elements"]) == 4

    with pytest.raises(ValueError):
        bs.parse_barcode("3,2\n", "csv")
