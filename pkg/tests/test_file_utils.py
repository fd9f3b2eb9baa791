"""
Tests for the instance text format, the generator and the JSON helpers.
FILE: tests/test_file_utils.py
"""

from fractions import Fraction

import pytest

from core.errors import InstanceFormatError, MaxTSPError
from utils.file_utils import (
    format_instance, generate_instance, instance_files, iter_instances,
    parse_instance, read_instance, write_instance,
)
from utils.json_utils import dumps, read_json, write_json_atomic


def test_parse_instance_reads_decimals():
    inst = parse_instance("3\n0 1.5 2\n1.5 0 0.25\n2 0.25 0\n")
    assert inst.n == 3
    assert inst.w(0, 1) == Fraction(3, 2)
    assert inst.w(1, 2) == Fraction(1, 4)


def test_parse_instance_ignores_blank_lines():
    inst = parse_instance("\n2\n\n0 4\n4 0\n\n")
    assert inst.w(0, 1) == 4


@pytest.mark.parametrize("text", [
    "",
    "two\n0 1\n1 0\n",
    "1\n0\n",
    "3\n0 1 1\n1 0 1\n",
    "2\n0 1 2\n1 0\n",
    "2\n0 1\n2 0\n",
    "2\n0 -1\n-1 0\n",
    "2\n0 x\nx 0\n",
])
def test_parse_instance_rejects_malformed_text(text):
    with pytest.raises(InstanceFormatError):
        parse_instance(text)


def test_format_instance_round_trip():
    text = "3\n0 1.5 2\n1.5 0 1/3\n2 1/3 0\n"
    assert format_instance(parse_instance(text)) == text


def test_write_and_read_instance(tmp_path):
    inst = generate_instance(6, 50, seed=3)
    path = write_instance(inst, tmp_path / "nested" / "six.tsp")
    assert read_instance(path) == inst
    assert not (tmp_path / "nested" / "six.tsp.tmp").exists()


def test_read_instance_missing_file(tmp_path):
    with pytest.raises(InstanceFormatError):
        read_instance(tmp_path / "absent.tsp")


def test_read_instance_rejects_non_finite_weights(tmp_path):
    path = tmp_path / "inf.tsp"
    path.write_text("2\n0 inf\ninf 0\n", encoding='utf-8')
    with pytest.raises(InstanceFormatError):
        read_instance(path)


def test_read_instance_rejects_undecodable_bytes(tmp_path):
    path = tmp_path / "binary.tsp"
    path.write_bytes(b"2\n0 1\n1 \xff\n")
    with pytest.raises(InstanceFormatError, match="UTF-8"):
        read_instance(path)


def test_generate_instance_is_seeded():
    first = generate_instance(8, 100, seed=1)
    assert first == generate_instance(8, 100, seed=1)
    assert first != generate_instance(8, 100, seed=2)
    assert all(0 <= first.w(u, v) <= 100 for u, v in first.pairs())


def test_generate_instance_rejects_bad_arguments():
    with pytest.raises(MaxTSPError):
        generate_instance(1, 10, seed=0)
    with pytest.raises(MaxTSPError):
        generate_instance(5, -1, seed=0)


def test_instance_files_sorted(tmp_path):
    for name in ("b.tsp", "a.txt", "notes.md"):
        (tmp_path / name).write_text("2\n0 1\n1 0\n", encoding='utf-8')
    assert [p.name for p in instance_files(tmp_path)] == ["a.txt", "b.tsp"]
    assert [inst.n for _, inst in iter_instances(tmp_path)] == [2, 2]


def test_instance_files_requires_directory(tmp_path):
    with pytest.raises(InstanceFormatError):
        instance_files(tmp_path / "missing")


def test_json_helpers(tmp_path):
    data = {'b': 1, 'a': ["x", None]}
    text = dumps(data)
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')
    path = write_json_atomic(tmp_path / "out" / "report.json", data)
    assert read_json(path) == data
    assert path.read_text(encoding='utf-8') == text
