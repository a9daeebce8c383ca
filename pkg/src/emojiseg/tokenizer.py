"""Tweet tokenizer that keeps emoji sequences intact.

Token spans are half-open UTF-8 byte offsets into the input; ``char_span``
gives the same interval in code points for callers working on ``str``.
"""
from __future__ import annotations

import enum
import re
import unicodedata
from dataclasses import dataclass
from typing import Iterable, Sequence

from .registry import CodePointClass as C, Registry
from .segmenter import EmojiSequence, segment_emoji_run


class TokenKind(enum.Enum):
    WORD = "Word"
    EMOJI = "Emoji"
    HASHTAG = "Hashtag"
    MENTION = "Mention"
    URL = "Url"
    NUMBER = "Number"
    PUNCT = "Punct"


@dataclass(frozen=True)
class Token:
    text: str
    kind: TokenKind
    span: tuple[int, int]
    char_span: tuple[int, int]
    emoji: EmojiSequence | None = None

    @property
    def start(self) -> int:
        return self.span[0]

    @property
    def end(self) -> int:
        return self.span[1]

    def to_json(self) -> dict:
        return {"text": self.text, "kind": self.kind.value, "start": self.start, "end": self.end}


@dataclass(frozen=True)
class NormalizeOptions:
    drop_punct: bool = True
    hashtag_lenient: bool = True
    # mentions get the same treatment as hashtags; not part of the original protocol
    mention_lenient: bool = True


_URL = re.compile(r"https?://|www\.", re.I)
_NUMBER = re.compile(r"\d+(?:[.,:]\d+)*")
_APOSTROPHES = "'’"
_INNER_JOINERS = "\u200c\u200d"

# code points that may continue an emoji run once one has started
_RUN_CONTINUE = frozenset({
    C.EMOJI_BASE,
    C.TONE_CAPABLE_BASE,
    C.SKIN_TONE_MODIFIER,
    C.REGIONAL_INDICATOR,
    C.ZERO_WIDTH_JOINER,
    C.VARIATION_SELECTOR_EMOJI,
    C.VARIATION_SELECTOR_TEXT,
    C.TAG_CHAR,
    C.TAG_TERMINATOR,
    C.COMBINING_KEYCAP,
})
_RUN_START = frozenset({
    C.EMOJI_BASE,
    C.TONE_CAPABLE_BASE,
    C.SKIN_TONE_MODIFIER,
    C.REGIONAL_INDICATOR,
})


def _is_word_char(ch: str) -> bool:
    return unicodedata.category(ch)[0] in "LNM"


class _Scanner:
    def __init__(self, registry: Registry, text: str):
        self.text = text
        self.n = len(text)
        self.classes = [registry.classify(ord(ch)) for ch in text]
        self.registry = registry

    def keycap_len(self, i: int) -> int:
        """Length of a complete keycap sequence at ``i``, else 0."""
        if self.classes[i] is not C.KEYCAP_BASE:
            return 0
        j = i + 1
        if j < self.n and self.classes[j].is_selector:
            j += 1
        if j < self.n and self.classes[j] is C.COMBINING_KEYCAP:
            return j + 1 - i
        return 0

    def emoji_start(self, i: int) -> bool:
        return self.classes[i] in _RUN_START or self.keycap_len(i) > 0

    def emoji_run_end(self, i: int) -> int:
        j = i
        while j < self.n:
            k = self.keycap_len(j)
            if k:
                j += k
            elif self.classes[j] in _RUN_CONTINUE:
                j += 1
            else:
                break
        return j

    def word_end(self, i: int, extra: str = "") -> int:
        text, n = self.text, self.n
        j = i
        while j < n:
            ch = text[j]
            if j > i and self.emoji_start(j):
                break
            if _is_word_char(ch) or ch in extra:
                j += 1
            elif ch in _APOSTROPHES or ch in _INNER_JOINERS:
                if j > i and j + 1 < n and _is_word_char(text[j + 1]) and not self.emoji_start(j + 1):
                    j += 1
                else:
                    break
            else:
                break
        return j

    def url_end(self, i: int) -> int:
        j = i
        while j < self.n and not self.text[j].isspace() and not (j > i and self.emoji_start(j)):
            j += 1
        return j


def tokenize(registry: Registry, text: str) -> list[Token]:
    sc = _Scanner(registry, text)
    n = len(text)
    # byte offset of every code point boundary
    offsets = [0] * (n + 1)
    for k, ch in enumerate(text):
        offsets[k + 1] = offsets[k] + len(ch.encode("utf-8", "surrogatepass"))

    tokens: list[Token] = []

    def emit(i, j, kind, emoji=None):
        tokens.append(Token(text[i:j], kind, (offsets[i], offsets[j]), (i, j), emoji))

    i = 0
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue

        if sc.emoji_start(i):
            j = sc.emoji_run_end(i)
            k = i
            for seq in segment_emoji_run(registry, [ord(c) for c in text[i:j]]):
                m = k + len(seq.codepoints)
                if seq.degenerate:
                    emit(k, m, TokenKind.PUNCT)
                else:
                    emit(k, m, TokenKind.EMOJI, seq)
                k = m
            i = j
            continue

        after_word = i > 0 and _is_word_char(text[i - 1])

        if not after_word and _URL.match(text, i):
            j = sc.url_end(i)
            emit(i, j, TokenKind.URL)
            i = j
            continue

        if ch in "#@" and not after_word and i + 1 < n:
            j = sc.word_end(i + 1, extra="_")
            if j > i + 1:
                emit(i, j, TokenKind.HASHTAG if ch == "#" else TokenKind.MENTION)
                i = j
                continue

        if _is_word_char(ch):
            j = sc.word_end(i)
            if text[i:j].isdecimal():
                # a number never swallows a keycap that follows it
                m = _NUMBER.match(text, i)
                j = next((k for k in range(i + 1, m.end()) if sc.emoji_start(k)), m.end())
                while text[j - 1] in ".,:":
                    j -= 1
                emit(i, j, TokenKind.NUMBER)
            else:
                emit(i, j, TokenKind.WORD)
            i = j
            continue

        j = i + 1
        while j < n and text[j] == ch and not sc.emoji_start(j):
            j += 1
        emit(i, j, TokenKind.PUNCT)
        i = j
    return tokens


def _canonical(token_text: str, kind: TokenKind, options: NormalizeOptions) -> str:
    if kind is TokenKind.HASHTAG and options.hashtag_lenient:
        return token_text[1:]
    if kind is TokenKind.MENTION and options.mention_lenient:
        return token_text[1:]
    return token_text


def normalize_tokens(tokens: Iterable[Token], options: NormalizeOptions = NormalizeOptions()) -> list[str]:
    out = []
    for tok in tokens:
        if options.drop_punct and tok.kind is TokenKind.PUNCT:
            continue
        out.append(_canonical(tok.text, tok.kind, options))
    return out


def normalize_strings(
    registry: Registry, strings: Sequence[str], options: NormalizeOptions = NormalizeOptions()
) -> list[str]:
    """Normalize bare token strings, e.g. another tool's output or gold tokens.

    A string is punctuation when everything it tokenizes into is
    punctuation; a string that tokenizes to a single hashtag or mention is
    reduced like one.
    """
    out = []
    for s in strings:
        toks = tokenize(registry, s)
        if not toks:
            continue
        if options.drop_punct and all(t.kind is TokenKind.PUNCT for t in toks):
            continue
        if len(toks) == 1 and toks[0].text == s.strip():
            out.append(_canonical(toks[0].text, toks[0].kind, options))
        else:
            out.append(s)
    return out


def split_emoji_runs(registry: Registry, text: str) -> list[tuple[bool, str]]:
    """Cut ``text`` into alternating ``(is_emoji_run, chunk)`` pieces."""
    sc = _Scanner(registry, text)
    out = []
    i = last = 0
    while i < sc.n:
        if sc.emoji_start(i):
            if last < i:
                out.append((False, text[last:i]))
            j = sc.emoji_run_end(i)
            out.append((True, text[i:j]))
            i = last = j
        else:
            i += 1
    if last < sc.n:
        out.append((False, text[last:]))
    return out
