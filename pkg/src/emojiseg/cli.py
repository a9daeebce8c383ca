"""Command-line front end: ``emojiseg <subcommand> [options]``.

Data flows as UTF-8 JSONL on stdin/stdout unless ``--in``/``--out`` are
given.  Exit status: 0 on success, 1 on bad input (the message names the
file and line), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import io
import os
import sys
from dataclasses import dataclass, field
from typing import IO, Iterator, Sequence

from . import baseline, cases, harness, neighbors, sentiment
from .jsonl import DataError, dump, read_jsonl
from .registry import Registry, RegistryError, default_registry, read_registry
from .segmenter import segment_emoji_run
from .tokenizer import NormalizeOptions, tokenize, split_emoji_runs

ENV_REGISTRY = "EMOJISEG_REGISTRY"


@dataclass(frozen=True)
class Config:
    """Resolved settings; flags win over the environment, which wins over defaults."""

    registry_path: str | None = None
    lexicon_path: str | None = None
    pos_lexicon_path: str | None = None
    embeddings_path: str | None = None
    normalize: NormalizeOptions = field(default_factory=NormalizeOptions)
    w_text: float = 1.0
    w_emoji: float = 1.0
    threshold: float = 0.1

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> Config:
        return cls(
            registry_path=args.registry or os.environ.get(ENV_REGISTRY) or None,
            lexicon_path=getattr(args, "lexicon", None),
            pos_lexicon_path=getattr(args, "pos_lexicon", None),
            embeddings_path=getattr(args, "embeddings", None),
            normalize=NormalizeOptions(
                hashtag_lenient=not getattr(args, "strict_hashtags", False),
                mention_lenient=not getattr(args, "strict_mentions", False),
            ),
            w_text=getattr(args, "w_text", 1.0),
            w_emoji=getattr(args, "w_emoji", 1.0),
            threshold=getattr(args, "polarity_threshold", 0.1),
        )

    def registry(self) -> Registry:
        if self.registry_path is None:
            return default_registry()
        return _loading(self.registry_path, read_registry)

    def lexicon(self):
        if self.lexicon_path is None:
            return sentiment.default_lexicon()
        return _loading(self.lexicon_path, sentiment.read_lexicon)

    def pos_lexicon(self):
        if self.pos_lexicon_path is None:
            return baseline.default_pos_lexicon()
        return _loading(self.pos_lexicon_path, baseline.read_pos_lexicon)

    def embeddings(self):
        if self.embeddings_path is None:
            return neighbors.fixture_embeddings()
        return _loading(self.embeddings_path, neighbors.read_embeddings)


def _loading(path, loader):
    """Run ``loader(path)``, re-raising format problems as a DataError naming the file."""
    try:
        return loader(path)
    except RegistryError as exc:
        line = exc.lines[0] if exc.lines else None
        raise DataError(str(exc), path, line) from None
    except (sentiment.LexiconError, neighbors.EmbeddingError) as exc:
        raise DataError(str(exc).split(": ", 1)[-1], path, exc.line) from None
    except ValueError as exc:
        raise DataError(str(exc), path) from None


# -- I/O helpers --------------------------------------------------------------

def _open_in(path: str | None) -> tuple[IO[str], str]:
    if path is None or path == "-":
        stream = io.TextIOWrapper(sys.stdin.buffer, encoding="utf-8") if hasattr(sys.stdin, "buffer") else sys.stdin
        return stream, "<stdin>"
    return open(path, encoding="utf-8"), path


def _read_lines(path: str | None) -> tuple[list[str], str]:
    fh, name = _open_in(path)
    try:
        return fh.read().splitlines(), name
    except UnicodeDecodeError as exc:
        raise DataError(f"not valid UTF-8 ({exc.reason})", name) from None
    finally:
        if fh is not sys.stdin and path not in (None, "-"):
            fh.close()


def _text_records(path: str | None) -> Iterator[tuple[object, str]]:
    """Yield ``(id, text)`` from JSONL ``{"id","text"}`` or plain lines (id = line number)."""
    lines, name = _read_lines(path)
    first = next((ln for ln in lines if ln.strip()), "")
    if first.lstrip().startswith("{"):
        for lineno, obj in read_jsonl(lines, name):
            text = obj.get("text")
            if not isinstance(text, str):
                raise DataError("missing field 'text'", name, lineno)
            yield obj.get("id", lineno), text
    else:
        for lineno, line in enumerate(lines, start=1):
            if line.strip():
                yield lineno, line


class _Output:
    def __init__(self, path: str | None):
        self.path = path
        self.buf = io.StringIO()

    def record(self, obj) -> None:
        dump(obj, self.buf)

    def text(self, s: str) -> None:
        self.buf.write(s if s.endswith("\n") else s + "\n")

    def flush(self) -> None:
        data = self.buf.getvalue()
        if self.path and self.path != "-":
            with open(self.path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(data)
        else:
            out = sys.stdout
            if hasattr(out, "buffer"):
                out.flush()
                out.buffer.write(data.encode("utf-8"))
                out.buffer.flush()
            else:
                out.write(data)


def _read_file(path: str, loader):
    lines, name = _read_lines(path)
    return loader(lines, name)


# -- subcommands ----------------------------------------------------------------

def cmd_tokenize(cfg: Config, args, out: _Output) -> None:
    reg = cfg.registry()
    for ident, text in _text_records(args.input):
        toks = tokenize(reg, text)
        if args.format == "table":
            out.text(f"{ident}\t" + " | ".join(f"{t.text}/{t.kind.value}" for t in toks))
        else:
            out.record({"id": ident, "tokens": [t.to_json() for t in toks]})


def cmd_segment(cfg: Config, args, out: _Output) -> None:
    reg = cfg.registry()
    for ident, text in _text_records(args.input):
        seqs = [
            seq
            for is_emoji, chunk in split_emoji_runs(reg, text) if is_emoji
            for seq in segment_emoji_run(reg, [ord(c) for c in chunk])
        ]
        if args.format == "table":
            for seq in seqs:
                flag = " (degenerate)" if seq.degenerate else ""
                out.text(f"{ident}\t{seq.describe()}\t{seq.kind.value}{flag}")
        else:
            out.record({"id": ident, "sequences": [
                {"text": s.text, "codepoints": s.describe(), "kind": s.kind.value, "degenerate": s.degenerate}
                for s in seqs
            ]})


def cmd_classify(cfg: Config, args, out: _Output) -> None:
    reg = cfg.registry()
    for ident, text in _text_records(args.input):
        out.record({"id": ident, **cases.classify(reg, text).to_json()})


def cmd_stats(cfg: Config, args, out: _Output) -> None:
    report = cases.corpus_stats(cfg.registry(), (text for _, text in _text_records(args.input)))
    if args.format == "table":
        out.text(report.render_table())
    else:
        out.record(report.to_json())


def _emit_report(out: _Output, args, report: harness.Report, labels=None) -> None:
    if args.format == "table":
        out.text(harness.render_reports({args.name: report}, labels))
    else:
        out.record({"system": args.name, **report.to_json()})


def cmd_score_tokens(cfg: Config, args, out: _Output) -> None:
    reg = cfg.registry()
    golds = _read_file(args.gold, harness.load_gold_tokens)
    preds = _read_file(args.pred, harness.load_token_predictions)
    _emit_report(out, args, harness.score_tokens(reg, golds, preds, cfg.normalize), harness.CASE_LABELS)


def cmd_score_pos(cfg: Config, args, out: _Output) -> None:
    golds = _read_file(args.gold, harness.load_gold_pos)
    tagset, preds = _read_file(args.pred, harness.load_pos_predictions)
    if args.retokenize:
        reg, lex = cfg.registry(), cfg.pos_lexicon()
        preds = {k: baseline.retokenize_tagged(reg, v, lex, tagset) for k, v in preds.items()}
    _emit_report(out, args, harness.score_pos(golds, preds, tagset))


def cmd_score_sentiment(cfg: Config, args, out: _Output) -> None:
    examples = _read_file(args.gold, harness.load_sentiment_suite)
    if args.pred:
        preds = _read_file(args.pred, harness.load_polarity_predictions)
    else:
        reg, lex = cfg.registry(), cfg.lexicon()
        preds = {
            ex.id: sentiment.analyze(reg, lex, ex.text, cfg.w_text, cfg.w_emoji, threshold=cfg.threshold).polarity
            for ex in examples
        }
    _emit_report(out, args, harness.score_sentiment(examples, preds))


def cmd_pos_baseline(cfg: Config, args, out: _Output) -> None:
    reg = cfg.registry()
    lex = baseline.PosLexicon() if args.default_only else cfg.pos_lexicon()
    lines, name = _read_lines(args.input)
    out.record({"tagset": args.tagset})
    for lineno, obj in read_jsonl(lines, name):
        ident = obj.get("id", lineno)
        if "tokens" in obj:
            toks = obj["tokens"]
            if not isinstance(toks, list):
                raise DataError("field 'tokens' has the wrong type", name, lineno)
            texts = [t["text"] if isinstance(t, dict) and "text" in t else str(t) for t in toks]
        elif isinstance(obj.get("text"), str):
            texts = [t.text for t in tokenize(reg, obj["text"])]
        else:
            raise DataError("record needs 'tokens' or 'text'", name, lineno)
        tagged = baseline.tag_tokens(reg, texts, lex, args.tagset)
        out.record({"id": ident, "tagged": [{"text": t, "tag": g} for t, g in tagged]})


def cmd_sentiment(cfg: Config, args, out: _Output) -> None:
    reg, lex = cfg.registry(), cfg.lexicon()
    for ident, text in _text_records(args.input):
        res = sentiment.analyze(reg, lex, text, cfg.w_text, cfg.w_emoji, threshold=cfg.threshold)
        if args.format == "table":
            out.text(f"{ident}\t{res.polarity.value}\t{res.combined_score:+.3f}\t{text}")
        else:
            out.record({"id": ident, **res.to_json()})


def cmd_matrix(cfg: Config, args, out: _Output) -> None:
    reports = {}
    for spec in args.report:
        name, sep, path = spec.partition("=")
        if not sep or not name or not path:
            raise _Usage(f"--report expects NAME=PATH, got {spec!r}")
        lines, src = _read_lines(path)
        recs = list(read_jsonl(lines, src))
        if len(recs) != 1:
            raise DataError("expected exactly one report record", src)
        lineno, obj = recs[0]
        try:
            reports[name] = harness.Report.from_json(obj)
        except (KeyError, TypeError, ValueError, AttributeError):
            raise DataError("not a score report", src, lineno) from None
    columns = harness.MATRIX_COLUMNS
    for name, rep in reports.items():
        missing = [c for c in columns.values() if c not in rep.categories]
        if missing:
            raise DataError(f"report {name!r} lacks categories {missing}", name)
    matrix = harness.render_support_matrix(reports, args.threshold, columns)
    if args.format == "table":
        out.text(harness.render_matrix_table(matrix))
    else:
        for name, row in matrix.items():
            out.record({"system": name, **row})


def cmd_neighbors(cfg: Config, args, out: _Output) -> None:
    reg, table = cfg.registry(), cfg.embeddings()
    hits = neighbors.nearest(table, args.token, args.k, emoji_only=args.emoji_only, registry=reg)
    try:
        consistency = neighbors.skin_tone_consistency(table, reg, args.token, args.k)
    except neighbors.NotToned:
        consistency = None
    if args.format == "table":
        for rank, (tok, cos) in enumerate(hits, start=1):
            out.text(f"{rank}\t{tok}\t{cos:.4f}")
        if consistency is not None:
            out.text(f"skin tone consistency@{args.k}: {consistency:.2f}")
    else:
        out.record({
            "token": args.token,
            "neighbors": [{"token": t, "cosine": round(c, 6)} for t, c in hits],
            "skin_tone_consistency": consistency,
        })


# -- argument parsing -----------------------------------------------------------

class _Usage(Exception):
    pass


def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _weight(s: str) -> float:
    v = float(s)
    if v < 0:
        raise argparse.ArgumentTypeError("weights must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--registry", metavar="PATH", default=None,
                        help=f"code point registry file (default: ${ENV_REGISTRY}, else the bundled snapshot)")
    common.add_argument("--in", dest="input", metavar="PATH", default=None, help="input file (default: stdin)")
    common.add_argument("--out", dest="output", metavar="PATH", default=None, help="output file (default: stdout)")
    common.add_argument("--format", choices=("json", "table"), default="json", help="output view (default: json)")

    parser = argparse.ArgumentParser(prog="emojiseg", description="Emoji-aware tokenization and evaluation tools.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help, description=help)
        p.set_defaults(func=func)
        return p

    add("tokenize", cmd_tokenize, "tokenize lines or {id,text} records")
    add("segment", cmd_segment, "show the emoji sequences found in each input line")
    add("classify", cmd_classify, "label each tweet with its emoji-use cases")
    add("stats", cmd_stats, "corpus statistics over emoji-use cases")

    p = add("score-tokens", cmd_score_tokens, "score token predictions against a gold suite")
    p.add_argument("--gold", required=True, metavar="PATH")
    p.add_argument("--pred", required=True, metavar="PATH")
    p.add_argument("--name", default="system", help="row label in the report (default: system)")
    p.add_argument("--strict-hashtags", action="store_true", help="require the # of hashtags to match")
    p.add_argument("--strict-mentions", action="store_true", help="require the @ of mentions to match")

    p = add("score-pos", cmd_score_pos, "score tagged predictions against a POS gold suite")
    p.add_argument("--gold", required=True, metavar="PATH")
    p.add_argument("--pred", required=True, metavar="PATH")
    p.add_argument("--name", default="system", help="row label in the report (default: system)")
    p.add_argument("--retokenize", action="store_true", help="split merged emoji tokens before scoring")
    p.add_argument("--pos-lexicon", metavar="PATH", default=None, help="emoji POS lexicon used by --retokenize")

    p = add("score-sentiment", cmd_score_sentiment, "score polarity predictions against a sentiment suite")
    p.add_argument("--gold", required=True, metavar="PATH")
    p.add_argument("--pred", metavar="PATH", default=None,
                   help="polarity predictions (default: run the built-in analyzer)")
    p.add_argument("--name", default="system", help="row label in the report (default: system)")
    _sentiment_flags(p)

    p = add("pos-baseline", cmd_pos_baseline, "tag tokenized records with the lexicon baseline")
    p.add_argument("--tagset", choices=[t.value for t in harness.Tagset], default=harness.Tagset.PENN.value)
    p.add_argument("--default-only", action="store_true", help="tag every emoji with the default class")
    p.add_argument("--pos-lexicon", metavar="PATH", default=None, help="emoji POS lexicon TSV")

    p = add("sentiment", cmd_sentiment, "text + emoji polarity for each record")
    _sentiment_flags(p)

    p = add("matrix", cmd_matrix, "support overview from token score reports")
    p.add_argument("--report", action="append", required=True, metavar="NAME=PATH",
                   help="score-tokens JSON report for one system (repeatable)")
    p.add_argument("--threshold", type=float, default=50.0, help="minimum pct counted as support (default: 50)")

    p = add("neighbors", cmd_neighbors, "nearest neighbours of a token in an embedding table")
    p.add_argument("--token", required=True)
    p.add_argument("--k", type=_positive_int, default=5, help="number of neighbours (default: 5)")
    p.add_argument("--emoji-only", action="store_true", help="only return single-emoji tokens")
    p.add_argument("--embeddings", metavar="PATH", default=None,
                   help="word2vec-style text table (default: bundled fixture)")
    return parser


def _sentiment_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--w-text", type=_weight, default=1.0, help="weight of the text score (default: 1)")
    p.add_argument("--w-emoji", type=_weight, default=1.0, help="weight of the emoji score (default: 1)")
    p.add_argument("--lexicon", metavar="PATH", default=None, help="emoji sentiment lexicon TSV")
    p.add_argument("--polarity-threshold", type=float, default=0.1,
                   help="|score| at which a polarity is assigned (default: 0.1)")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    out = _Output(args.output)
    try:
        args.func(Config.from_args(args), args, out)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"emojiseg: error: {exc}", file=sys.stderr)
        return 2
    except DataError as exc:
        print(f"emojiseg: {exc}", file=sys.stderr)
        return 1
    except harness.MissingPrediction as exc:
        print(f"emojiseg: {args.pred}: no prediction for id {exc.args[0]!r}", file=sys.stderr)
        return 1
    except harness.UnknownTag as exc:
        print(f"emojiseg: {args.pred}: {exc}", file=sys.stderr)
        return 1
    except neighbors.UnknownToken as exc:
        print(f"emojiseg: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"emojiseg: {exc.filename or ''}: {exc.strerror or exc}", file=sys.stderr)
        return 1
    out.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
