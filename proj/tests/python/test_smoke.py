import json

import pytest

import pathcat as pc


def test_generators_and_homs():
    neck = pc.necklace(3)
    assert len(neck.vertices) == 7
    reps = pc.hom_classes(neck, 0, 6)
    assert len(reps) == 8
    assert pc.hom_count(neck, 0, 6) == 8

    cube = pc.hypercube(2)
    tri = pc.triangulate_sk2(cube)
    top = tri.label_of([1, 2])
    assert len(pc.hom_classes(tri.complex, 0, top)) == 1


def test_swiss_flag_count():
    flag = pc.swiss_flag()
    tri = pc.triangulate_sk2(flag)
    init, term = tri.label_of([]), tri.label_of([1, 2, 3, 4, 5, 6])
    assert len(pc.hom_classes(tri.complex, init, term)) == 2
    assert pc.frontier_hom_count(flag, 3, [], [1, 2, 3, 4, 5, 6]) == 2


def test_reductions():
    flag = pc.swiss_flag()
    assert len(pc.corners(flag)) == 8
    reduced, removed, iterations = pc.corner_reduce(flag, [[], [1, 2, 3, 4, 5, 6]])
    assert iterations == len(removed) > 0
    tri = pc.triangulate_sk2(reduced)
    init, term = tri.label_of([]), tri.label_of([1, 2, 3, 4, 5, 6])
    assert len(pc.hom_classes(tri.complex, init, term)) == 2

    zig = pc.zigzag()
    core, removed, _ = pc.minimal_path_subcomplex(zig, 1, 3)
    assert core.edges == []
    assert "2" in removed


def test_refine():
    alpha = pc.PosetMono(1, 2, [], [[1, 2]])
    assert pc.refine(pc.hypercube(1), alpha) == pc.hypercube(2)
    with pytest.raises(ValueError):
        pc.PosetMono(2, 2, [], [[1, 2], [2]])


def test_json_round_trip():
    flag = pc.swiss_flag()
    text = pc.dumps(flag)
    assert json.loads(text)["type"] == "cubical"
    assert pc.loads(text) == flag


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        pc.hypercube(0)
    with pytest.raises(ValueError):
        pc.hom_count(pc.necklace(1), 0, 99)
