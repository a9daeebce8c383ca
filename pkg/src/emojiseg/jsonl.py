"""JSONL reading with line-numbered errors."""
from __future__ import annotations

import json
from typing import IO, Iterable, Iterator


class DataError(ValueError):
    """Bad input record; the message names the source and line."""

    def __init__(self, message: str, source: str = "<input>", line: int | None = None):
        where = source if line is None else f"{source}:{line}"
        super().__init__(f"{where}: {message}")
        self.source = source
        self.line = line


def read_jsonl(lines: Iterable[str], source: str = "<input>") -> Iterator[tuple[int, dict]]:
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DataError(f"invalid JSON ({exc.msg})", source, lineno) from None
        if not isinstance(obj, dict):
            raise DataError("expected a JSON object", source, lineno)
        yield lineno, obj


def require(obj: dict, key: str, kind: type | tuple, source: str, line: int):
    if key not in obj:
        raise DataError(f"missing field {key!r}", source, line)
    value = obj[key]
    if not isinstance(value, kind):
        raise DataError(f"field {key!r} has the wrong type", source, line)
    return value


def dump(obj, fh: IO[str]) -> None:
    fh.write(json.dumps(obj, ensure_ascii=False, sort_keys=False))
    fh.write("\n")
