"""Conformance scoring for tokenization, emoji POS tags and sentiment.

Every suite is scored all-or-nothing per example and reported as a
success percentage per category plus a size-weighted average.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .jsonl import DataError, read_jsonl, require
from .registry import Registry
from .sentiment import Polarity
from .tokenizer import NormalizeOptions, normalize_strings

CASES = ("Case1", "Case2", "Case3", "Case4", "Case5", "Case6")
CASE_LABELS = {
    "Case1": "Single Emoji",
    "Case2": "Multi Emoji",
    "Case3": "Skin Tone Emoji",
    "Case4": "BMP Plane 0",
    "Case5": "non-BMP Other Planes",
    "Case6": "Zero Width Joiner",
}
# the five columns of the support overview and the cases they summarize
MATRIX_COLUMNS = {"SE": "Case1", "GE": "Case2", "STE": "Case3", "BMP": "Case4", "ZWJ": "Case6"}
MATRIX_FOOTER = (
    "A category is marked supported when its success percentage reaches the threshold. "
    "No single threshold reproduces the hand-marked reference overview exactly: a ZWJ score of 40 is "
    "marked unsupported there while a skin-tone score of 38 is marked supported, and "
    "BMP scores of 30 and 40 are marked supported."
)

SENTIMENT_CONDITIONS = ("NS", "PosEmoji", "NegEmoji")


class MissingPrediction(KeyError):
    def __str__(self):
        return f"no prediction for example {self.args[0]!r}"


class UnknownTag(ValueError):
    pass


class CoarsePos(enum.Enum):
    NOUN = "Noun"
    ADJECTIVE = "Adjective"
    VERB = "Verb"
    ADVERB = "Adverb"
    PUNCTUATION = "Punctuation"
    OTHER = "Other"


GOLD_POS = (CoarsePos.NOUN, CoarsePos.ADJECTIVE, CoarsePos.VERB, CoarsePos.ADVERB, CoarsePos.PUNCTUATION)


class Tagset(enum.Enum):
    PENN = "PennTreebank"
    UPOS = "UniversalPOS"


PENN_TAGS = frozenset(
    "CC CD DT EX FW IN JJ JJR JJS LS MD NN NNS NNP NNPS PDT POS PRP PRP$ RB RBR RBS RP "
    "SYM TO UH VB VBD VBG VBN VBP VBZ WDT WP WP$ WRB ADD AFX GW HYPH NFP XX $ # "
    ". , : `` '' -LRB- -RRB- ( ) -NONE-".split()
)
PENN_PUNCT = frozenset(". , : `` '' -LRB- -RRB- ( ) HYPH NFP".split())
UPOS_TAGS = frozenset(
    "ADJ ADP ADV AUX CCONJ DET INTJ NOUN NUM PART PRON PROPN PUNCT SCONJ SYM VERB X".split()
)
_UPOS_COARSE = {
    "NOUN": CoarsePos.NOUN,
    "PROPN": CoarsePos.NOUN,
    "ADJ": CoarsePos.ADJECTIVE,
    "VERB": CoarsePos.VERB,
    "AUX": CoarsePos.VERB,
    "ADV": CoarsePos.ADVERB,
    "PUNCT": CoarsePos.PUNCTUATION,
}


def map_to_coarse(tagset: Tagset | str, tag: str) -> CoarsePos:
    tagset = Tagset(tagset)
    if tagset is Tagset.PENN:
        if tag not in PENN_TAGS:
            raise UnknownTag(f"{tag!r} is not a {tagset.value} tag")
        if tag.startswith("NN"):
            return CoarsePos.NOUN
        if tag.startswith("JJ"):
            return CoarsePos.ADJECTIVE
        if tag.startswith("VB"):
            return CoarsePos.VERB
        if tag.startswith("RB"):
            return CoarsePos.ADVERB
        if tag in PENN_PUNCT:
            return CoarsePos.PUNCTUATION
        return CoarsePos.OTHER
    if tag not in UPOS_TAGS:
        raise UnknownTag(f"{tag!r} is not a {tagset.value} tag")
    return _UPOS_COARSE.get(tag, CoarsePos.OTHER)


@dataclass
class Report:
    """Per-category pass counts for one system on one suite."""

    categories: tuple[str, ...]
    counts: dict[str, int] = field(default_factory=dict)
    passes: dict[str, int] = field(default_factory=dict)
    failed: list[str] = field(default_factory=list)
    flagged: list[str] = field(default_factory=list)

    def __post_init__(self):
        for c in self.categories:
            self.counts.setdefault(c, 0)
            self.passes.setdefault(c, 0)

    def record(self, category: str, ok: bool, ident: str) -> None:
        self.counts[category] += 1
        self.passes[category] += ok
        if not ok:
            self.failed.append(ident)

    def pct(self, category: str) -> float:
        n = self.counts[category]
        return round(100.0 * self.passes[category] / n, 1) if n else 0.0

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def average(self) -> float:
        """Exact pass ratio over all examples; rounded only for display."""
        total = self.total
        return 100.0 * sum(self.passes.values()) / total if total else 0.0

    @classmethod
    def from_json(cls, obj: Mapping) -> "Report":
        cats = obj["categories"]
        return cls(
            tuple(cats),
            {c: int(v["count"]) for c, v in cats.items()},
            {c: int(v["passed"]) for c, v in cats.items()},
            list(obj.get("failed", [])),
            list(obj.get("flagged", [])),
        )

    def to_json(self) -> dict:
        return {
            "categories": {
                c: {"count": self.counts[c], "passed": self.passes[c], "pct": self.pct(c)}
                for c in self.categories
            },
            "average": round(self.average, 1),
            "total": self.total,
            "failed": list(self.failed),
            "flagged": list(self.flagged),
        }


def render_reports(reports: Mapping[str, Report], labels: Mapping[str, str] | None = None) -> str:
    """Aligned table: one row per system, one column per category plus the average."""
    first = next(iter(reports.values()))
    heads = [labels.get(c, c) if labels else c for c in first.categories] + ["Average"]
    name_w = max([len("Tools")] + [len(n) for n in reports])
    widths = [max(len(h), 5) for h in heads]
    lines = ["  ".join([f"{'Tools':<{name_w}}"] + [f"{h:>{w}}" for h, w in zip(heads, widths)])]
    for name, rep in reports.items():
        cells = [rep.pct(c) for c in rep.categories] + [rep.average]
        lines.append("  ".join([f"{name:<{name_w}}"] + [f"{v:>{w}.1f}" for v, w in zip(cells, widths)]))
    return "\n".join(lines)


# -- tokenization -----------------------------------------------------------

@dataclass(frozen=True)
class GoldTokenExample:
    id: str
    text: str
    gold_tokens: tuple[str, ...]
    case: str


def load_gold_tokens(lines: Iterable[str], source: str = "<gold>") -> list[GoldTokenExample]:
    out, seen = [], set()
    for lineno, obj in read_jsonl(lines, source):
        ident = str(require(obj, "id", (str, int), source, lineno))
        if ident in seen:
            raise DataError(f"duplicate id {ident!r}", source, lineno)
        seen.add(ident)
        case = require(obj, "case", str, source, lineno)
        if case not in CASES:
            raise DataError(f"unknown case {case!r}", source, lineno)
        text = require(obj, "text", str, source, lineno)
        gold = require(obj, "gold_tokens", list, source, lineno)
        if text.strip() and not gold:
            raise DataError("gold_tokens is empty for non-empty text", source, lineno)
        out.append(GoldTokenExample(ident, text, tuple(map(str, gold)), case))
    return out


def load_token_predictions(lines: Iterable[str], source: str = "<pred>") -> dict[str, list[str]]:
    """Read ``{"id", "tokens"}`` records; tokens may be strings or ``{"text": ...}`` objects."""
    out = {}
    for lineno, obj in read_jsonl(lines, source):
        ident = str(require(obj, "id", (str, int), source, lineno))
        if ident in out:
            raise DataError(f"duplicate id {ident!r}", source, lineno)
        # a gold file doubles as a prediction file
        key = "tokens" if "tokens" in obj or "gold_tokens" not in obj else "gold_tokens"
        toks = require(obj, key, list, source, lineno)
        out[ident] = [t["text"] if isinstance(t, dict) else str(t) for t in toks]
    return out


def score_tokens(
    registry: Registry,
    golds: Sequence[GoldTokenExample],
    preds: Mapping[str, Sequence[str]],
    options: NormalizeOptions = NormalizeOptions(),
) -> Report:
    report = Report(CASES)
    for ex in golds:
        if ex.id not in preds:
            raise MissingPrediction(ex.id)
        want = normalize_strings(registry, ex.gold_tokens, options)
        got = normalize_strings(registry, preds[ex.id], options)
        report.record(ex.case, got == want, ex.id)
    return report


# -- part of speech ---------------------------------------------------------

@dataclass(frozen=True)
class PosTarget:
    text: str
    occurrence: int
    gold: CoarsePos


@dataclass(frozen=True)
class GoldPosExample:
    id: str
    text: str
    targets: tuple[PosTarget, ...]


def load_gold_pos(lines: Iterable[str], source: str = "<gold>") -> list[GoldPosExample]:
    out, seen = [], set()
    for lineno, obj in read_jsonl(lines, source):
        ident = str(require(obj, "id", (str, int), source, lineno))
        if ident in seen:
            raise DataError(f"duplicate id {ident!r}", source, lineno)
        seen.add(ident)
        targets = []
        for t in require(obj, "targets", list, source, lineno):
            try:
                gold = CoarsePos(t["gold"])
                targets.append(PosTarget(t["text"], int(t.get("occurrence", 0)), gold))
            except (KeyError, TypeError, ValueError):
                raise DataError(f"bad target {t!r}", source, lineno) from None
            if gold is CoarsePos.OTHER:
                raise DataError("Other is not a gold class", source, lineno)
        out.append(GoldPosExample(ident, require(obj, "text", str, source, lineno), tuple(targets)))
    return out


def load_pos_predictions(lines: Iterable[str], source: str = "<pred>") -> tuple[Tagset, dict[str, list[tuple[str, str]]]]:
    """Read a tagged prediction file: a ``{"tagset": ...}`` header, then ``{"id", "tagged"}`` records."""
    tagset = None
    out = {}
    for lineno, obj in read_jsonl(lines, source):
        if tagset is None:
            try:
                tagset = Tagset(obj.get("tagset"))
            except ValueError:
                raise DataError("first record must be a {\"tagset\": ...} header", source, lineno) from None
            continue
        ident = str(require(obj, "id", (str, int), source, lineno))
        if ident in out:
            raise DataError(f"duplicate id {ident!r}", source, lineno)
        tagged = require(obj, "tagged", list, source, lineno)
        try:
            out[ident] = [(t["text"], t["tag"]) for t in tagged]
        except (KeyError, TypeError):
            raise DataError("tagged entries need 'text' and 'tag'", source, lineno) from None
    if tagset is None:
        raise DataError("missing tagset header", source)
    return tagset, out


def _locate(tagged: Sequence[tuple[str, str]], target: PosTarget) -> str | None:
    """Tag of the predicted token holding the target's n-th occurrence."""
    seen = 0
    for text, tag in tagged:
        hits = text.count(target.text)
        if seen + hits > target.occurrence:
            return tag
        seen += hits
    return None


def score_pos(
    golds: Sequence[GoldPosExample],
    preds: Mapping[str, Sequence[tuple[str, str]]],
    tagset: Tagset | str,
) -> Report:
    report = Report(tuple(c.value for c in GOLD_POS))
    for ex in golds:
        if ex.id not in preds:
            raise MissingPrediction(ex.id)
        for target in ex.targets:
            tag = _locate(preds[ex.id], target)
            ident = f"{ex.id}:{target.text}#{target.occurrence}"
            if tag is None:
                report.flagged.append(ident)
                ok = False
            else:
                ok = map_to_coarse(tagset, tag) is target.gold
            report.record(target.gold.value, ok, ident)
    return report


# -- sentiment --------------------------------------------------------------

@dataclass(frozen=True)
class SentimentExample:
    id: str
    text: str
    condition: str
    gold: Polarity


def load_sentiment_suite(lines: Iterable[str], source: str = "<gold>") -> list[SentimentExample]:
    out, seen = [], set()
    for lineno, obj in read_jsonl(lines, source):
        ident = str(require(obj, "id", (str, int), source, lineno))
        if ident in seen:
            raise DataError(f"duplicate id {ident!r}", source, lineno)
        seen.add(ident)
        cond = require(obj, "condition", str, source, lineno)
        if cond not in SENTIMENT_CONDITIONS:
            raise DataError(f"unknown condition {cond!r}", source, lineno)
        try:
            gold = Polarity(require(obj, "gold", str, source, lineno))
        except ValueError:
            raise DataError(f"unknown polarity {obj['gold']!r}", source, lineno) from None
        out.append(SentimentExample(ident, obj.get("text", ""), cond, gold))
    return out


def load_polarity_predictions(lines: Iterable[str], source: str = "<pred>") -> dict[str, Polarity]:
    out = {}
    for lineno, obj in read_jsonl(lines, source):
        ident = str(require(obj, "id", (str, int), source, lineno))
        try:
            out[ident] = Polarity(require(obj, "polarity", str, source, lineno))
        except ValueError:
            raise DataError(f"unknown polarity {obj['polarity']!r}", source, lineno) from None
    return out


def score_sentiment(examples: Sequence[SentimentExample], preds: Mapping[str, Polarity]) -> Report:
    report = Report(SENTIMENT_CONDITIONS)
    for ex in examples:
        if ex.id not in preds:
            raise MissingPrediction(ex.id)
        report.record(ex.condition, preds[ex.id] is ex.gold, ex.id)
    return report


# -- support overview -------------------------------------------------------

def render_support_matrix(
    reports: Mapping[str, Report],
    threshold: float = 50.0,
    columns: Mapping[str, str] | None = None,
) -> dict[str, dict[str, bool]]:
    """Mark each (system, column) supported iff its category pct >= threshold."""
    matrix = {}
    for name, rep in reports.items():
        cols = columns or {c: c for c in rep.categories}
        matrix[name] = {col: rep.pct(cat) >= threshold for col, cat in cols.items()}
    return matrix


def render_matrix_table(matrix: Mapping[str, Mapping[str, bool]], footer: str = MATRIX_FOOTER) -> str:
    cols = list(next(iter(matrix.values())))
    name_w = max([len("Tools")] + [len(n) for n in matrix])
    widths = [max(len(c), 3) for c in cols]
    lines = ["  ".join([f"{'Tools':<{name_w}}"] + [f"{c:>{w}}" for c, w in zip(cols, widths)])]
    for name, row in matrix.items():
        marks = ["✓" if row[c] else "✗" for c in cols]
        lines.append("  ".join([f"{name:<{name_w}}"] + [f"{m:>{w}}" for m, w in zip(marks, widths)]))
    if footer:
        lines += ["", footer]
    return "\n".join(lines)
