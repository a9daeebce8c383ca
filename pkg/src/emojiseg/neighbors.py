"""Nearest-neighbour queries over pre-trained token vectors."""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from .registry import Registry
from .segmenter import EmojiSequence, SequenceKind
from .tokenizer import TokenKind, tokenize


class EmbeddingError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnknownToken(KeyError):
    def __str__(self):
        return f"token {self.args[0]!r} is not in the embedding table"


class NotToned(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class EmbeddingTable:
    tokens: tuple[str, ...]
    vectors: np.ndarray  # (count, dim), rows as loaded

    def __post_init__(self):
        norms = np.linalg.norm(self.vectors, axis=1, keepdims=True)
        object.__setattr__(self, "_unit", self.vectors / norms)
        object.__setattr__(self, "_index", {t: i for i, t in enumerate(self.tokens)})

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def __contains__(self, token: str) -> bool:
        return token in self._index

    def __len__(self) -> int:
        return len(self.tokens)

    def vector(self, token: str) -> np.ndarray:
        if token not in self._index:
            raise UnknownToken(token)
        return self.vectors[self._index[token]]

    def similarities(self, token: str) -> np.ndarray:
        if token not in self._index:
            raise UnknownToken(token)
        sims = self._unit @ self._unit[self._index[token]]
        return np.clip(sims, -1.0, 1.0)


def load_embeddings(data: str) -> EmbeddingTable:
    """Parse the word2vec text format: ``count dim`` header, then ``token v1 .. vd`` rows."""
    lines = [(n, line) for n, line in enumerate(data.splitlines(), start=1) if line.strip()]
    if not lines:
        raise EmbeddingError("missing 'count dimension' header", 1)
    head_no, head = lines[0]
    try:
        count, dim = (int(x) for x in head.split())
    except ValueError:
        raise EmbeddingError(f"bad header {head!r}", head_no) from None
    if dim < 1:
        raise EmbeddingError("dimension must be positive", head_no)

    tokens, rows, seen = [], [], set()
    for lineno, line in lines[1:]:
        parts = line.rstrip().split(" ")
        token, values = parts[0], parts[1:]
        if len(values) != dim:
            raise EmbeddingError(f"token {token!r} has {len(values)} components, expected {dim}", lineno)
        if token in seen:
            raise EmbeddingError(f"duplicate token {token!r}", lineno)
        try:
            vec = [float(v) for v in values]
        except ValueError:
            raise EmbeddingError(f"non-numeric component for {token!r}", lineno) from None
        if not any(vec):
            raise EmbeddingError(f"zero vector for {token!r}", lineno)
        seen.add(token)
        tokens.append(token)
        rows.append(vec)
    if len(tokens) != count:
        raise EmbeddingError(f"header promises {count} rows, found {len(tokens)}", head_no)
    return EmbeddingTable(tuple(tokens), np.asarray(rows, dtype=np.float64).reshape(len(rows), dim))


def read_embeddings(path: str | os.PathLike) -> EmbeddingTable:
    with open(path, encoding="utf-8") as fh:
        return load_embeddings(fh.read())


@lru_cache(maxsize=1)
def fixture_embeddings() -> EmbeddingTable:
    """Small hand-built table bundled for tests and demos."""
    return load_embeddings(resources.files("emojiseg.data").joinpath("fixture_embeddings.txt").read_text("utf-8"))


def as_emoji(registry: Registry, token: str) -> EmojiSequence | None:
    """The token's emoji sequence if the whole token is exactly one sequence."""
    toks = tokenize(registry, token)
    if len(toks) == 1 and toks[0].kind is TokenKind.EMOJI and toks[0].text == token:
        return toks[0].emoji
    return None


def nearest(
    table: EmbeddingTable,
    token: str,
    k: int,
    emoji_only: bool = False,
    registry: Registry | None = None,
) -> list[tuple[str, float]]:
    """Top-``k`` tokens by cosine similarity, the query excluded; ties go to the smaller token."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if emoji_only and registry is None:
        raise ValueError("emoji_only filtering needs a registry")
    sims = table.similarities(token)
    ranked = sorted(
        ((t, float(s)) for t, s in zip(table.tokens, sims) if t != token),
        key=lambda pair: (-pair[1], pair[0]),
    )
    if emoji_only:
        ranked = [(t, s) for t, s in ranked if as_emoji(registry, t) is not None]
    return ranked[:k]


def skin_tone_consistency(table: EmbeddingTable, registry: Registry, token: str, k: int) -> float:
    """Share of the top-``k`` emoji neighbours whose set of skin tones equals the query's."""
    if token not in table:
        raise UnknownToken(token)
    seq = as_emoji(registry, token)
    if seq is None or seq.kind is SequenceKind.STANDALONE_MODIFIER or not seq.skin_tones:
        raise NotToned(f"{token!r} is not a toned emoji")
    want = set(seq.skin_tones)
    hits = nearest(table, token, k, emoji_only=True, registry=registry)
    if not hits:
        return 0.0
    same = sum(set(as_emoji(registry, t).skin_tones) == want for t, _ in hits)
    return same / k
