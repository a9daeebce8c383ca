"""Lexicon-based emoji polarity combined with a text polarity score."""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Callable, Iterable, Mapping

from .registry import SKIN_TONES, VS_EMOJI, VS_TEXT, Registry
from .segmenter import EmojiSequence, SequenceKind, segment_text
from .tokenizer import TokenKind, tokenize

SUM_TOLERANCE = 1e-6


class Polarity(enum.Enum):
    NEGATIVE = "Negative"
    NEUTRAL = "Neutral"
    POSITIVE = "Positive"


class LexiconError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class LexiconEntry:
    emoji: tuple[int, ...]
    p_neg: float
    p_neut: float
    p_pos: float

    @property
    def score(self) -> float:
        return self.p_pos - self.p_neg


Lexicon = Mapping[tuple[int, ...], LexiconEntry]


def lexicon_key(codepoints: Iterable[int]) -> tuple[int, ...]:
    """Skin tones and presentation selectors do not change an emoji's entry."""
    return tuple(cp for cp in codepoints if cp not in SKIN_TONES and cp not in (VS_EMOJI, VS_TEXT))


def load_lexicon(data: str) -> dict[tuple[int, ...], LexiconEntry]:
    lexicon = {}
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise LexiconError(f"expected 4 tab-separated fields, got {len(parts)}", lineno)
        emoji, *fields = parts
        try:
            p_neg, p_neut, p_pos = (float(f) for f in fields)
        except ValueError:
            raise LexiconError(f"malformed fractions {fields!r}", lineno) from None
        if not all(0.0 <= p <= 1.0 for p in (p_neg, p_neut, p_pos)):
            raise LexiconError("fractions must lie in [0, 1]", lineno)
        if abs(p_neg + p_neut + p_pos - 1.0) > SUM_TOLERANCE:
            raise LexiconError(f"fractions sum to {p_neg + p_neut + p_pos:.6f}, not 1", lineno)
        key = lexicon_key(ord(ch) for ch in emoji.strip())
        if not key:
            raise LexiconError("empty emoji field", lineno)
        if key in lexicon:
            raise LexiconError(f"duplicate emoji {emoji!r}", lineno)
        lexicon[key] = LexiconEntry(key, p_neg, p_neut, p_pos)
    return lexicon


def read_lexicon(path: str | os.PathLike) -> dict[tuple[int, ...], LexiconEntry]:
    with open(path, encoding="utf-8") as fh:
        return load_lexicon(fh.read())


@lru_cache(maxsize=1)
def default_lexicon() -> dict[tuple[int, ...], LexiconEntry]:
    return load_lexicon(resources.files("emojiseg.data").joinpath("emoji_sentiment.tsv").read_text("utf-8"))


def emoji_polarity(lexicon: Lexicon, seq: EmojiSequence) -> float:
    entry = lexicon.get(lexicon_key(seq.codepoints))
    return entry.score if entry else 0.0


# deliberately small: enough to give clearly polar sentences a direction
WORD_VALENCE = {
    "love": 0.6, "like": 0.3, "good": 0.5, "great": 0.6, "happy": 0.6, "awesome": 0.7,
    "best": 0.6, "nice": 0.4, "amazing": 0.7, "excellent": 0.7, "wonderful": 0.7,
    "fun": 0.5, "glad": 0.5, "beautiful": 0.6, "excited": 0.6, "enjoy": 0.5, "thanks": 0.4,
    "hate": -0.7, "bad": -0.5, "sad": -0.6, "terrible": -0.7, "awful": -0.7, "worst": -0.7,
    "angry": -0.6, "expired": -0.5, "broken": -0.5, "sick": -0.5, "annoying": -0.5,
    "disappointed": -0.6, "failed": -0.5, "horrible": -0.7, "cancelled": -0.4, "lost": -0.4,
}


def word_valence_score(registry: Registry, text: str) -> float:
    """Mean valence of the known words in ``text``; 0 when none are known."""
    vals = [
        WORD_VALENCE[t.text.lower()]
        for t in tokenize(registry, text)
        if t.kind is TokenKind.WORD and t.text.lower() in WORD_VALENCE
    ]
    return sum(vals) / len(vals) if vals else 0.0


def clamp(x: float) -> float:
    return max(-1.0, min(1.0, x))


def polarity_of(score: float, threshold: float = 0.1) -> Polarity:
    if score >= threshold:
        return Polarity.POSITIVE
    if score <= -threshold:
        return Polarity.NEGATIVE
    return Polarity.NEUTRAL


@dataclass(frozen=True)
class SentimentResult:
    text_score: float
    emoji_score: float
    combined_score: float
    polarity: Polarity
    emoji_count: int

    def to_json(self) -> dict:
        return {
            "text_score": round(self.text_score, 6),
            "emoji_score": round(self.emoji_score, 6),
            "combined_score": round(self.combined_score, 6),
            "polarity": self.polarity.value,
        }


def analyze(
    registry: Registry,
    lexicon: Lexicon,
    text: str,
    w_text: float = 1.0,
    w_emoji: float = 1.0,
    text_scorer: Callable[[Registry, str], float] = word_valence_score,
    threshold: float = 0.1,
) -> SentimentResult:
    if w_text < 0 or w_emoji < 0:
        raise ValueError("weights must be non-negative")
    emojis = [
        t.emoji for t in tokenize(registry, text)
        if t.kind is TokenKind.EMOJI and t.emoji.kind is not SequenceKind.STANDALONE_MODIFIER
    ]
    text_score = clamp(text_scorer(registry, text))
    emoji_score = sum(emoji_polarity(lexicon, e) for e in emojis) / len(emojis) if emojis else 0.0
    combined = clamp(w_text * text_score + w_emoji * emoji_score)
    return SentimentResult(text_score, emoji_score, combined, polarity_of(combined, threshold), len(emojis))


def lookup(registry: Registry, lexicon: Lexicon, emoji: str) -> float:
    """Score for an emoji given as a string (first sequence only)."""
    seqs = segment_text(registry, emoji)
    return emoji_polarity(lexicon, seqs[0]) if seqs else 0.0
