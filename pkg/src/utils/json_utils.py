"""
JSON helpers for certificates and benchmark reports.
FILE: src/utils/json_utils.py
"""

from pathlib import Path
from typing import Any, Union
import json
import logging

logger = logging.getLogger(__name__)


def dumps(data: Any) -> str:
    """Canonical text: sorted keys, two-space indent, trailing newline"""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + '\n'


def write_json_atomic(path: Union[str, Path], data: Any) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    temp_file = path.with_suffix(path.suffix + '.tmp')
    try:
        with open(temp_file, 'w', encoding='utf-8') as f:
            f.write(dumps(data))
        temp_file.replace(path)
    except OSError as e:
        logger.error("Failed to write %s: %s", path, e)
        if temp_file.exists():
            temp_file.unlink()
        raise
    return path


def read_json(path: Union[str, Path]) -> Any:
    with open(Path(path), 'r', encoding='utf-8') as f:
        return json.load(f)


__all__ = ['dumps', 'write_json_atomic', 'read_json']
