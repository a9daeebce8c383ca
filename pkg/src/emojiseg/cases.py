"""Emoji-use case labels per tweet and corpus-level counts."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .registry import SKIN_TONES, TONE_NAMES, Registry
from .segmenter import SequenceKind
from .tokenizer import Token, TokenKind, tokenize

FLAG_NAMES = (
    "single_emoji_spaced",
    "single_emoji_unspaced",
    "multi_positions",
    "multi_spaced",
    "multi_cluster",
    "skin_tone_present",
    "bmp_emoji_present",
    "non_bmp_emoji_present",
    "zwj_present",
)


@dataclass(frozen=True)
class CaseLabels:
    single_emoji_spaced: bool = False
    single_emoji_unspaced: bool = False
    multi_positions: bool = False
    multi_spaced: bool = False
    multi_cluster: bool = False
    skin_tone_present: bool = False
    bmp_emoji_present: bool = False
    non_bmp_emoji_present: bool = False
    zwj_present: bool = False
    emoji_count: int = 0
    tone_counts: dict[int, int] = field(default_factory=lambda: dict.fromkeys(SKIN_TONES, 0))

    @property
    def flags(self) -> list[str]:
        return [name for name in FLAG_NAMES if getattr(self, name)]

    @property
    def single(self) -> bool:
        return self.emoji_count == 1

    @property
    def multiple(self) -> bool:
        return self.emoji_count >= 2

    def to_json(self) -> dict:
        return {
            "flags": self.flags,
            "emoji_count": self.emoji_count,
            "tone_counts": {TONE_NAMES[t]: c for t, c in self.tone_counts.items()},
        }


def _counted(tok: Token) -> bool:
    # free-standing tone swatches mark skin tone use but are not emojis themselves
    return tok.kind is TokenKind.EMOJI and tok.emoji.kind is not SequenceKind.STANDALONE_MODIFIER


def _delimited(text: str, tok: Token) -> bool:
    i, j = tok.char_span
    return (i == 0 or text[i - 1].isspace()) and (j == len(text) or text[j].isspace())


def classify(registry: Registry, text: str) -> CaseLabels:
    tokens = tokenize(registry, text)
    emoji_tokens = [t for t in tokens if t.kind is TokenKind.EMOJI]
    counted = [t for t in emoji_tokens if _counted(t)]

    tone_counts = dict.fromkeys(SKIN_TONES, 0)
    for tok in emoji_tokens:
        for tone in tok.emoji.skin_tones:
            tone_counts[tone] += 1

    n = len(counted)
    spaced = all(_delimited(text, t) for t in counted)
    positions = spaced_pair = cluster = False
    for a, b in zip(counted, counted[1:]):
        gap = text[a.char_span[1]:b.char_span[0]]
        if not gap:
            cluster = True
        elif gap.isspace():
            spaced_pair = True
        else:
            positions = True

    return CaseLabels(
        single_emoji_spaced=n == 1 and spaced,
        single_emoji_unspaced=n == 1 and not spaced,
        multi_positions=n >= 2 and positions,
        multi_spaced=n >= 2 and spaced_pair,
        multi_cluster=n >= 2 and cluster,
        skin_tone_present=any(tone_counts.values()),
        bmp_emoji_present=any(t.emoji.max_plane == 0 for t in counted),
        non_bmp_emoji_present=any(t.emoji.max_plane > 0 for t in counted),
        zwj_present=any(t.emoji.kind is SequenceKind.ZWJ_SEQUENCE for t in counted),
        emoji_count=n,
        tone_counts=tone_counts,
    )


@dataclass
class StatsReport:
    total: int = 0
    emoji_tweets: int = 0
    single: int = 0
    multiple: int = 0
    skin_tone: int = 0
    zwj: int = 0
    per_tone: dict[int, int] = field(default_factory=lambda: dict.fromkeys(SKIN_TONES, 0))
    seen: set[str] = field(default_factory=set, repr=False)

    @property
    def unique(self) -> int:
        return len(self.seen)

    def add(self, text: str, labels: CaseLabels) -> None:
        self.total += 1
        self.seen.add(text)
        self.emoji_tweets += labels.emoji_count > 0
        self.single += labels.single
        self.multiple += labels.multiple
        self.skin_tone += labels.skin_tone_present
        self.zwj += labels.zwj_present
        for tone, count in labels.tone_counts.items():
            self.per_tone[tone] += count > 0

    def merge(self, other: StatsReport) -> StatsReport:
        return StatsReport(
            total=self.total + other.total,
            emoji_tweets=self.emoji_tweets + other.emoji_tweets,
            single=self.single + other.single,
            multiple=self.multiple + other.multiple,
            skin_tone=self.skin_tone + other.skin_tone,
            zwj=self.zwj + other.zwj,
            per_tone={t: self.per_tone[t] + other.per_tone[t] for t in SKIN_TONES},
            seen=self.seen | other.seen,
        )

    def pct(self, count: int) -> float:
        return 100.0 * count / self.total if self.total else 0.0

    def rows(self) -> list[tuple[str, int]]:
        rows = [
            ("Total", self.total),
            ("Unique", self.unique),
            ("Only single emoji", self.single),
            ("Multiple emojis", self.multiple),
            ("Emoji skin tone modifiers", self.skin_tone),
        ]
        for tone in SKIN_TONES:
            label = TONE_NAMES[tone].replace("-", " ").title()
            rows.append((f"{label} Skin Tone emojis", self.per_tone[tone]))
        rows.append(("Zero Width Joiner (ZWJ) emojis", self.zwj))
        return rows

    def to_json(self) -> dict:
        counts = {
            "total": self.total,
            "unique": self.unique,
            "emoji_tweets": self.emoji_tweets,
            "single": self.single,
            "multiple": self.multiple,
            "skin_tone": self.skin_tone,
            "zwj": self.zwj,
        }
        counts.update({f"tone_{TONE_NAMES[t]}": self.per_tone[t] for t in SKIN_TONES})
        return {
            "counts": counts,
            "percent": {k: round(self.pct(v), 2) for k, v in counts.items()},
        }

    def render_table(self) -> str:
        rows = self.rows()
        width = max(len(r[0]) for r in rows)
        lines = [f"{'Tweets':<{width}}  {'Count':>10}  {'%':>7}"]
        for label, count in rows:
            lines.append(f"{label:<{width}}  {count:>10}  {self.pct(count):>7.2f}")
        return "\n".join(lines)


def corpus_stats(registry: Registry, texts: Iterable[str]) -> StatsReport:
    report = StatsReport()
    for text in texts:
        report.add(text, classify(registry, text))
    return report
