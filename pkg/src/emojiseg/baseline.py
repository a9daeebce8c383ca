"""Reference annotators: emoji-aware retokenization and a lexicon POS baseline."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Mapping, Sequence

from .harness import CoarsePos, Tagset
from .registry import ZWJ, Registry
from .segmenter import EmojiSequence, segment_text
from .sentiment import lexicon_key
from .tokenizer import TokenKind, split_emoji_runs, tokenize

_TAG_FOR = {
    Tagset.PENN: {
        CoarsePos.NOUN: "NN",
        CoarsePos.ADJECTIVE: "JJ",
        CoarsePos.VERB: "VB",
        CoarsePos.ADVERB: "RB",
        CoarsePos.PUNCTUATION: ".",
    },
    Tagset.UPOS: {
        CoarsePos.NOUN: "NOUN",
        CoarsePos.ADJECTIVE: "ADJ",
        CoarsePos.VERB: "VERB",
        CoarsePos.ADVERB: "ADV",
        CoarsePos.PUNCTUATION: "PUNCT",
    },
}


def tag_for(tagset: Tagset | str, pos: CoarsePos) -> str:
    return _TAG_FOR[Tagset(tagset)][pos]


@dataclass(frozen=True)
class PosLexicon:
    entries: Mapping[tuple[int, ...], CoarsePos] = field(default_factory=dict)
    default_class: CoarsePos = CoarsePos.NOUN


def load_pos_lexicon(data: str, default_class: CoarsePos = CoarsePos.NOUN) -> PosLexicon:
    """Parse ``emoji<TAB>CLASS`` lines; CLASS is a coarse tag name such as ``Punctuation``."""
    entries = {}
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected emoji<TAB>CLASS")
        emoji, name = parts
        try:
            pos = CoarsePos(name.strip())
        except ValueError:
            raise ValueError(f"line {lineno}: unknown class {name!r}") from None
        if pos is CoarsePos.OTHER:
            raise ValueError(f"line {lineno}: Other cannot be assigned")
        key = lexicon_key(ord(ch) for ch in emoji)
        if key in entries:
            raise ValueError(f"line {lineno}: duplicate emoji {emoji!r}")
        entries[key] = pos
    return PosLexicon(entries, default_class)


def read_pos_lexicon(path: str | os.PathLike) -> PosLexicon:
    with open(path, encoding="utf-8") as fh:
        return load_pos_lexicon(fh.read())


@lru_cache(maxsize=1)
def default_pos_lexicon() -> PosLexicon:
    return load_pos_lexicon(resources.files("emojiseg.data").joinpath("emoji_pos.tsv").read_text("utf-8"))


def heuristic_emoji_pos(lexicon: PosLexicon, seq: EmojiSequence) -> CoarsePos:
    key = lexicon_key(seq.codepoints)
    if key in lexicon.entries:
        return lexicon.entries[key]
    if ZWJ in key:
        head = key[: key.index(ZWJ)]
        if head in lexicon.entries:
            return lexicon.entries[head]
    return lexicon.default_class


def retokenize(registry: Registry, tokens: Sequence[str]) -> list[str]:
    """Split tokens that mix emoji and other material; plain text passes through."""
    out = []
    for tok in tokens:
        for is_emoji, chunk in split_emoji_runs(registry, tok):
            if is_emoji:
                out.extend(seq.text for seq in segment_text(registry, chunk))
            else:
                out.extend(chunk.split())
    return out


def _single_emoji(registry: Registry, text: str) -> EmojiSequence | None:
    toks = tokenize(registry, text)
    if len(toks) == 1 and toks[0].kind is TokenKind.EMOJI:
        return toks[0].emoji
    return None


def tag_tokens(
    registry: Registry,
    tokens: Sequence[str],
    lexicon: PosLexicon | None = None,
    tagset: Tagset | str = Tagset.PENN,
) -> list[tuple[str, str]]:
    """Baseline tagger: emojis via the lexicon, punctuation as such, everything else a noun."""
    lexicon = lexicon or default_pos_lexicon()
    out = []
    for tok in tokens:
        seq = _single_emoji(registry, tok)
        if seq is not None:
            pos = heuristic_emoji_pos(lexicon, seq)
        elif all(t.kind is TokenKind.PUNCT for t in tokenize(registry, tok)):
            pos = CoarsePos.PUNCTUATION
        else:
            pos = CoarsePos.NOUN
        out.append((tok, tag_for(tagset, pos)))
    return out


def retokenize_tagged(
    registry: Registry,
    tagged: Sequence[tuple[str, str]],
    lexicon: PosLexicon | None = None,
    tagset: Tagset | str = Tagset.PENN,
) -> list[tuple[str, str]]:
    """Apply :func:`retokenize` to another tool's tagged output.

    Text pieces of a split token keep the tool's tag; emoji pieces are tagged
    by the lexicon baseline.  Unsplit tokens are left alone.
    """
    lexicon = lexicon or default_pos_lexicon()
    out = []
    for text, tag in tagged:
        pieces = retokenize(registry, [text])
        if pieces == [text]:
            out.append((text, tag))
            continue
        for piece in pieces:
            seq = _single_emoji(registry, piece)
            out.append((piece, tag if seq is None else tag_for(tagset, heuristic_emoji_pos(lexicon, seq))))
    return out
