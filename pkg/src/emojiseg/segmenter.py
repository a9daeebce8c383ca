"""Greedy leftmost-longest parsing of emoji code point runs.

Grammar, tried at each position with the longest match winning::

    sequence      := flag | keycap | tag | zwj | unit | lone_modifier
    zwj           := unit (ZWJ unit)+
    unit          := base selector? tone?      (tone only after a tone-capable base)
    flag          := RI RI
    keycap        := keycap_base selector? U+20E3
    tag           := base tag_char+ tag_terminator
    lone_modifier := tone

A code point that starts none of these (a dangling joiner or selector, a
stray tag character, a keycap base without U+20E3) becomes a one-element
``BASIC`` sequence with ``degenerate=True``; parsing never fails.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .registry import SKIN_TONES, CodePointClass as C, Registry, fmt_cp, plane_of


class SequenceKind(enum.Enum):
    BASIC = "Basic"
    MODIFIER_SEQUENCE = "ModifierSequence"
    ZWJ_SEQUENCE = "ZwjSequence"
    FLAG_SEQUENCE = "FlagSequence"
    KEYCAP_SEQUENCE = "KeycapSequence"
    TAG_SEQUENCE = "TagSequence"
    STANDALONE_MODIFIER = "StandaloneModifier"


@dataclass(frozen=True)
class EmojiSequence:
    codepoints: tuple[int, ...]
    kind: SequenceKind
    degenerate: bool = False

    @property
    def skin_tones(self) -> tuple[int, ...]:
        return tuple(cp for cp in self.codepoints if cp in SKIN_TONES)

    @property
    def max_plane(self) -> int:
        return max(plane_of(cp) for cp in self.codepoints)

    @property
    def text(self) -> str:
        return "".join(map(chr, self.codepoints))

    def describe(self) -> str:
        return " ".join(fmt_cp(cp) for cp in self.codepoints)


class NotToneCapable(ValueError):
    pass


class InvalidTone(ValueError):
    pass


def _unit_end(classes: Sequence[C], i: int) -> int:
    """End of the unit headed by the base at ``i``."""
    n = len(classes)
    j = i + 1
    if j < n and classes[j].is_selector:
        j += 1
    if classes[i] is C.TONE_CAPABLE_BASE and j < n and classes[j] is C.SKIN_TONE_MODIFIER:
        j += 1
    return j


def _match_at(classes: Sequence[C], i: int) -> tuple[int, SequenceKind] | None:
    """Longest sequence starting at ``i`` as ``(end, kind)``, or None."""
    n = len(classes)
    c = classes[i]

    if c is C.REGIONAL_INDICATOR:
        if i + 1 < n and classes[i + 1] is C.REGIONAL_INDICATOR:
            return i + 2, SequenceKind.FLAG_SEQUENCE
        return i + 1, SequenceKind.BASIC

    if c is C.KEYCAP_BASE:
        j = i + 1
        if j < n and classes[j].is_selector:
            j += 1
        if j < n and classes[j] is C.COMBINING_KEYCAP:
            return j + 1, SequenceKind.KEYCAP_SEQUENCE
        return None

    if c is C.SKIN_TONE_MODIFIER:
        return i + 1, SequenceKind.STANDALONE_MODIFIER

    if not c.is_base:
        return None

    best = None
    j = i + 1
    while j < n and classes[j] is C.TAG_CHAR:
        j += 1
    if j > i + 1 and j < n and classes[j] is C.TAG_TERMINATOR:
        best = (j + 1, SequenceKind.TAG_SEQUENCE)

    end = _unit_end(classes, i)
    kind = SequenceKind.MODIFIER_SEQUENCE if classes[end - 1] is C.SKIN_TONE_MODIFIER else SequenceKind.BASIC
    while end + 1 < n and classes[end] is C.ZERO_WIDTH_JOINER and classes[end + 1].is_base:
        end = _unit_end(classes, end + 1)
        kind = SequenceKind.ZWJ_SEQUENCE

    if best is None or end > best[0]:
        best = (end, kind)
    return best


def segment_emoji_run(registry: Registry, cps: Sequence[int]) -> list[EmojiSequence]:
    """Split an emoji-related code point run into complete sequences."""
    classes = [registry.classify(cp) for cp in cps]
    out = []
    i = 0
    while i < len(cps):
        m = _match_at(classes, i)
        if m is None:
            out.append(EmojiSequence((cps[i],), SequenceKind.BASIC, degenerate=True))
            i += 1
            continue
        end, kind = m
        out.append(EmojiSequence(tuple(cps[i:end]), kind))
        i = end
    return out


def segment_text(registry: Registry, text: str) -> list[EmojiSequence]:
    return segment_emoji_run(registry, [ord(ch) for ch in text])


def sequence_kind(seq: EmojiSequence) -> SequenceKind:
    return seq.kind


def apply_skin_tone(registry: Registry, seq: EmojiSequence, tone: int) -> EmojiSequence:
    """Return ``base + tone`` for a basic sequence whose base is tone-capable.

    Any presentation selector after the base is dropped, as modifier
    sequences do not carry one.
    """
    if tone not in SKIN_TONES:
        raise InvalidTone(f"{fmt_cp(tone)} is not a skin tone modifier")
    base = seq.codepoints[0]
    if seq.kind is not SequenceKind.BASIC or registry.classify(base) is not C.TONE_CAPABLE_BASE:
        raise NotToneCapable(f"{seq.describe()} does not accept a skin tone")
    return EmojiSequence((base, tone), SequenceKind.MODIFIER_SEQUENCE)


def strip_skin_tones(registry: Registry, seq: EmojiSequence) -> EmojiSequence:
    """Remove every skin tone modifier and recompute the kind.

    A standalone modifier has nothing left once stripped and is returned
    unchanged.
    """
    if seq.kind is SequenceKind.STANDALONE_MODIFIER or not seq.skin_tones:
        return seq
    rest = [cp for cp in seq.codepoints if cp not in SKIN_TONES]
    parsed = segment_emoji_run(registry, rest)
    if len(parsed) == 1:
        return parsed[0]
    return EmojiSequence(tuple(rest), seq.kind, degenerate=True)
