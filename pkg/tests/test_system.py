import json
import math

import pytest

from coxword.system import (
    INF,
    InvalidMatrix,
    InvalidStar,
    NotStarInvariant,
    TypeLabel,
    classify_twisted_type,
    load_system,
    make_system,
    registry_system,
    resolve_system,
    restrict_system,
    save_system,
)


def test_matrix_validation():
    with pytest.raises(InvalidMatrix):
        make_system([], ())
    with pytest.raises(InvalidMatrix):
        make_system([[1, 3]], (0,))
    with pytest.raises(InvalidMatrix):
        make_system([[2, 3], [3, 1]], (0, 1))
    with pytest.raises(InvalidMatrix):
        make_system([[1, 3], [4, 1]], (0, 1))
    with pytest.raises(InvalidMatrix):
        make_system([[1, 1], [1, 1]], (0, 1))


def test_star_validation():
    with pytest.raises(InvalidStar):
        make_system([[1, 3], [3, 1]], (0, 0))
    # star must preserve the matrix
    mat = [[1, 3, 2], [3, 1, 4], [2, 4, 1]]
    with pytest.raises(InvalidStar):
        make_system(mat, (2, 1, 0))
    make_system(mat, (0, 1, 2))


def test_infinity_encoding():
    system = make_system([[1, 0], [0, 1]], (0, 1))
    assert system.m(0, 1) is INF
    assert math.isinf(system.m(0, 1))
    assert system.to_json()["matrix"] == [[1, 0], [0, 1]]


def test_json_roundtrip(tmp_path):
    system = registry_system("BC3")
    path = tmp_path / "bc3.json"
    save_system(system, path)
    again = load_system(path)
    assert again.matrix == system.matrix
    assert again.star == system.star


def test_registry():
    a3 = registry_system("A3")
    assert a3.rank == 3 and a3.backend == "perm" and a3.perm_n == 4
    assert registry_system("2A3").star == (2, 1, 0)
    assert registry_system("I2(7)").m(0, 1) == 7
    assert registry_system("2I2(4)").star == (1, 0)
    aff = registry_system("affA2")
    assert aff.rank == 3 and aff.affine
    assert aff.m(0, 2) == 3
    with pytest.raises(KeyError):
        registry_system("E8")
    with pytest.raises(KeyError):
        resolve_system("not-a-name-or-file")


def test_restrict_system():
    bc3 = registry_system("BC3")
    sub, mapping = restrict_system(bc3, (0, 1))
    assert mapping == (0, 1)
    assert sub.m(0, 1) == 4
    a3twist = registry_system("2A3")
    with pytest.raises(NotStarInvariant):
        restrict_system(a3twist, (0, 1))
    sub, mapping = restrict_system(a3twist, (0, 2))
    assert sub.star == (1, 0)


def test_classification():
    label, labelings = classify_twisted_type(registry_system("2A3"), (0, 1, 2))
    assert label == TypeLabel("2A3")
    assert labelings
    label, _ = classify_twisted_type(registry_system("BC3"), (0, 1, 2))
    assert label.kind == "BC3"
    label, _ = classify_twisted_type(registry_system("D4"), (0, 1, 2, 3))
    assert label.kind == "D4"
    label, _ = classify_twisted_type(registry_system("H3"), (0, 1, 2))
    assert label.kind == "H3"
    label, _ = classify_twisted_type(registry_system("A3"), (0, 1, 2))
    assert label.kind == "other"
    label, _ = classify_twisted_type(registry_system("2I2(3)"), (0, 1))
    assert label == TypeLabel("2I2", 3)
    label, _ = classify_twisted_type(registry_system("A3"), (0,))
    assert label == TypeLabel("A1")


def test_d4_labelings_use_the_central_node():
    d4 = registry_system("D4")
    _, labelings = classify_twisted_type(d4, (0, 1, 2, 3))
    for lab in labelings:
        # letter "c" must land on the degree-three generator
        assert lab["c"] == 1


def test_equality_and_caches():
    a = registry_system("I2(5)")
    b = registry_system("I2(5)")
    assert a == b and hash(a) == hash(b)
    d = a.cache("scratch")
    d["x"] = 1
    assert a.cache("scratch")["x"] == 1
    a.trim_caches(0)
    assert not a.cache("scratch")
