"""
Tests for path collections, colorings and tour validation.
FILE: tests/test_validation.py
"""

import pytest

from core.errors import NotPathCollection
from core.graph_data import Color, Instance
from utils.validation import (
    color_class_edges, is_path_collection, monochromatic_cycles, path_collection_problems,
    require_path_collection, validate_tour, validate_two_path_coloring,
)


def test_path_collections(doubled_pentagon):
    assert is_path_collection(doubled_pentagon, [])
    assert is_path_collection(doubled_pentagon, [0, 1, 2, 3])
    assert not is_path_collection(doubled_pentagon, [0, 1, 2, 3, 4])
    assert path_collection_problems(doubled_pentagon, [0, 5]) == ["edge 5 closes a cycle"]
    assert "vertex 1 has degree 3" in path_collection_problems(doubled_pentagon, [0, 1, 5])


def test_require_path_collection(doubled_pentagon):
    require_path_collection(doubled_pentagon, [0, 2])
    with pytest.raises(NotPathCollection) as info:
        require_path_collection(doubled_pentagon, [0, 5], label="Red")
    assert str(info.value).startswith("Red")
    assert info.value.details['problems']


def test_two_path_coloring(doubled_pentagon):
    colors = {e: Color.RED for e in range(5)}
    colors.update({e: Color.BLUE for e in range(5, 10)})
    report = validate_two_path_coloring(doubled_pentagon, colors)
    assert not report.passed
    assert report.checks == {'red': False, 'blue': False}

    report = validate_two_path_coloring(doubled_pentagon, colors, removed={0, 5})
    assert report.passed

    del colors[3]
    report = validate_two_path_coloring(doubled_pentagon, colors, removed={0, 5})
    assert not report.passed
    assert "without a color" in report.failures[0]


def test_color_class_edges_skips_removed(doubled_pentagon):
    colors = {0: Color.RED, 1: Color.RED, 2: Color.BLUE, 99: Color.RED}
    assert color_class_edges(doubled_pentagon, colors, Color.RED, removed={1}) == [0]


def test_monochromatic_cycles(doubled_pentagon):
    assert monochromatic_cycles(doubled_pentagon, range(5)) == [[0, 1, 2, 3, 4]]
    assert monochromatic_cycles(doubled_pentagon, [0, 5]) == [[0, 5]]
    assert monochromatic_cycles(doubled_pentagon, [0, 1, 2]) == []


def test_validate_tour(pentagon_instance):
    assert validate_tour(pentagon_instance, [0, 1, 2, 3, 4], 15).passed
    assert not validate_tour(pentagon_instance, [0, 1, 2, 3, 4], 14).passed
    assert not validate_tour(pentagon_instance, [0, 1, 2, 3]).passed
    assert not validate_tour(pentagon_instance, [0, 1, 1, 3, 4]).passed


def test_validate_two_vertex_tour():
    inst = Instance.from_pairs(2, {(0, 1): 3})
    assert validate_tour(inst, [0, 1], 6).passed
