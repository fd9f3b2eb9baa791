"""
Instance files: the plain-text matrix format plus a seeded random generator.
FILE: src/utils/file_utils.py

Line 1 holds n; the next n lines hold n whitespace-separated nonnegative
decimal weights each (the full symmetric matrix).
"""

from pathlib import Path
from typing import Iterator, List, Union
import logging
import random

from core.errors import InstanceFormatError, MaxTSPError
from core.graph_data import Instance, format_weight, to_weight

logger = logging.getLogger(__name__)

INSTANCE_SUFFIX = '.tsp'


def parse_instance(text: str) -> Instance:
    """Parse the text format into an Instance; blank lines are ignored"""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines:
        raise InstanceFormatError("Instance text is empty")

    header = lines[0].split()
    if len(header) != 1:
        raise InstanceFormatError(f"First line must hold n alone, got {lines[0]!r}")
    try:
        n = int(header[0])
    except ValueError as e:
        raise InstanceFormatError(f"n is not an integer: {header[0]!r}") from e
    if n < 2:
        raise InstanceFormatError(f"Instance needs at least 2 vertices, got {n}")

    rows = lines[1:]
    if len(rows) != n:
        raise InstanceFormatError(f"Expected {n} matrix rows, got {len(rows)}")

    matrix = []
    for i, line in enumerate(rows):
        tokens = line.split()
        if len(tokens) != n:
            raise InstanceFormatError(f"Row {i} has {len(tokens)} entries, expected {n}")
        matrix.append([to_weight(token) for token in tokens])
    # Instance validates diagonal, sign and symmetry
    return Instance.from_rows(matrix)


def format_instance(instance: Instance) -> str:
    lines = [str(instance.n)]
    for row in instance.weights:
        lines.append(' '.join(format_weight(x) for x in row))
    return '\n'.join(lines) + '\n'


def read_instance(path: Union[str, Path]) -> Instance:
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise InstanceFormatError(f"Cannot read instance file {path}: {e}") from e
    except UnicodeDecodeError as e:
        raise InstanceFormatError(f"Instance file {path} is not UTF-8 text: {e.reason} at byte {e.start}") from e
    instance = parse_instance(text)
    logger.debug("Read instance %s (n = %d)", path, instance.n)
    return instance


def write_instance(instance: Instance, path: Union[str, Path]) -> Path:
    """Write atomically through a temp file next to the target"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    temp_file = path.with_suffix(path.suffix + '.tmp')
    temp_file.write_text(format_instance(instance), encoding='utf-8')
    temp_file.replace(path)
    logger.debug("Wrote instance %s (n = %d)", path, instance.n)
    return path


def generate_instance(n: int, max_w: int, seed: int) -> Instance:
    """Complete graph with integer weights drawn uniformly from [0, max_w]"""
    if n < 2:
        raise MaxTSPError(f"Generator needs n >= 2, got {n}")
    if max_w < 0:
        raise MaxTSPError(f"max_w must be nonnegative, got {max_w}")
    rng = random.Random(seed)
    weights = {}
    for u in range(n):
        for v in range(u + 1, n):
            weights[(u, v)] = rng.randint(0, max_w)
    return Instance.from_pairs(n, weights)


def instance_files(directory: Union[str, Path]) -> List[Path]:
    """Instance files of a benchmark directory in name order"""
    directory = Path(directory)
    if not directory.is_dir():
        raise InstanceFormatError(f"Not a directory: {directory}")
    return sorted(p for p in directory.iterdir() if p.is_file() and p.suffix in (INSTANCE_SUFFIX, '.txt'))


def iter_instances(directory: Union[str, Path]) -> Iterator[tuple]:
    for path in instance_files(directory):
        yield path, read_instance(path)


__all__ = [
    'INSTANCE_SUFFIX',
    'parse_instance',
    'format_instance',
    'read_instance',
    'write_instance',
    'generate_instance',
    'instance_files',
    'iter_instances',
]
