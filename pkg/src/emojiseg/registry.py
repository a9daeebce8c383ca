"""Code point classification for emoji-related characters.

A :class:`Registry` maps disjoint, sorted code point ranges to a
:class:`CodePointClass`; anything outside the ranges is ``NON_EMOJI``.  The
bundled snapshot lives in ``data/emoji_properties.txt``.
"""
from __future__ import annotations

import bisect
import enum
import os
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

MAX_CODE_POINT = 0x10FFFF

SKIN_TONES = (0x1F3FB, 0x1F3FC, 0x1F3FD, 0x1F3FE, 0x1F3FF)
TONE_NAMES = {
    0x1F3FB: "light",
    0x1F3FC: "medium-light",
    0x1F3FD: "medium",
    0x1F3FE: "medium-dark",
    0x1F3FF: "dark",
}
ZWJ = 0x200D
VS_EMOJI = 0xFE0F
VS_TEXT = 0xFE0E


class CodePointClass(enum.Enum):
    EMOJI_BASE = "EmojiBase"
    TONE_CAPABLE_BASE = "ToneCapableBase"
    SKIN_TONE_MODIFIER = "SkinToneModifier"
    ZERO_WIDTH_JOINER = "ZeroWidthJoiner"
    VARIATION_SELECTOR_EMOJI = "VariationSelectorEmoji"
    VARIATION_SELECTOR_TEXT = "VariationSelectorText"
    REGIONAL_INDICATOR = "RegionalIndicator"
    KEYCAP_BASE = "KeycapBase"
    COMBINING_KEYCAP = "CombiningKeycap"
    TAG_CHAR = "TagChar"
    TAG_TERMINATOR = "TagTerminator"
    NON_EMOJI = "NonEmoji"

    @property
    def is_base(self) -> bool:
        """True for classes that can head an emoji unit (tone-capable included)."""
        return self in (CodePointClass.EMOJI_BASE, CodePointClass.TONE_CAPABLE_BASE)

    @property
    def is_selector(self) -> bool:
        return self in (
            CodePointClass.VARIATION_SELECTOR_EMOJI,
            CodePointClass.VARIATION_SELECTOR_TEXT,
        )


class RegistryError(ValueError):
    """Malformed emoji-property data; ``lines`` holds the offending line numbers."""

    def __init__(self, message: str, lines: tuple[int, ...]):
        where = ", ".join(str(n) for n in lines)
        super().__init__(f"line {where}: {message}")
        self.lines = lines


_LINE = re.compile(r"^([0-9A-Fa-f]{1,6})(?:\.\.([0-9A-Fa-f]{1,6}))?\t([A-Z_]+)\s*$")
_VERSION = re.compile(r"^#\s*Version:\s*(\S+)")


@dataclass(frozen=True)
class Registry:
    starts: tuple[int, ...]
    ends: tuple[int, ...]
    classes: tuple[CodePointClass, ...]
    version: str = "unknown"

    def classify(self, cp: int) -> CodePointClass:
        i = bisect.bisect_right(self.starts, cp) - 1
        if i >= 0 and cp <= self.ends[i]:
            return self.classes[i]
        return CodePointClass.NON_EMOJI

    def code_points(self, cls: CodePointClass) -> list[int]:
        """Every code point assigned to ``cls`` (not meaningful for NON_EMOJI)."""
        out = []
        for lo, hi, c in zip(self.starts, self.ends, self.classes):
            if c is cls:
                out.extend(range(lo, hi + 1))
        return out

    def __len__(self) -> int:
        return len(self.starts)


def load_registry(data: str) -> Registry:
    """Parse emoji-property file content into a :class:`Registry`.

    Records are ``HEX..HEX<TAB>CLASS`` or ``HEX<TAB>CLASS``; ``#`` lines are
    comments, and a ``# Version: X`` comment sets the snapshot version.
    """
    version = "unknown"
    records = []
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        if line.lstrip().startswith("#"):
            m = _VERSION.match(line.strip())
            if m:
                version = m.group(1)
            continue
        m = _LINE.match(line)
        if not m:
            raise RegistryError(f"malformed record {line!r}", (lineno,))
        lo = int(m.group(1), 16)
        hi = int(m.group(2), 16) if m.group(2) else lo
        if hi < lo or hi > MAX_CODE_POINT:
            raise RegistryError(f"invalid range {line!r}", (lineno,))
        try:
            cls = CodePointClass[m.group(3)]
        except KeyError:
            raise RegistryError(f"unknown class {m.group(3)!r}", (lineno,)) from None
        if cls is CodePointClass.NON_EMOJI:
            raise RegistryError("NON_EMOJI is implicit and cannot be assigned", (lineno,))
        records.append((lo, hi, cls, lineno))

    records.sort(key=lambda r: (r[0], r[1]))
    for prev, cur in zip(records, records[1:]):
        if cur[0] <= prev[1]:
            raise RegistryError("overlapping ranges", tuple(sorted((prev[3], cur[3]))))

    return Registry(
        starts=tuple(r[0] for r in records),
        ends=tuple(r[1] for r in records),
        classes=tuple(r[2] for r in records),
        version=version,
    )


def read_registry(path: str | os.PathLike) -> Registry:
    with open(path, encoding="utf-8") as fh:
        return load_registry(fh.read())


@lru_cache(maxsize=1)
def default_registry() -> Registry:
    """The bundled snapshot, or the file named by ``EMOJISEG_REGISTRY``."""
    override = os.environ.get("EMOJISEG_REGISTRY")
    if override:
        return read_registry(override)
    text = resources.files("emojiseg.data").joinpath("emoji_properties.txt").read_text("utf-8")
    return load_registry(text)


def classify(registry: Registry, cp: int) -> CodePointClass:
    return registry.classify(cp)


def plane_of(cp: int) -> int:
    if not 0 <= cp <= MAX_CODE_POINT:
        raise ValueError(f"not a code point: {cp:#x}")
    return cp >> 16


def fmt_cp(cp: int) -> str:
    return f"U+{cp:04X}"
