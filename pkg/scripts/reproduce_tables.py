"""Run every bundled suite and print the result tables.

    python3 scripts/reproduce_tables.py
"""
from importlib import resources

from emojiseg import default_registry, tokenize
from emojiseg.baseline import default_pos_lexicon, retokenize_tagged, tag_tokens, PosLexicon
from emojiseg.harness import (
    CASE_LABELS, MATRIX_COLUMNS, SENTIMENT_CONDITIONS, Tagset, load_gold_pos, load_gold_tokens,
    load_pos_predictions, load_sentiment_suite, render_matrix_table, render_reports,
    render_support_matrix, score_pos, score_sentiment, score_tokens,
)
from emojiseg.neighbors import fixture_embeddings, nearest, skin_tone_consistency
from emojiseg.sentiment import analyze, default_lexicon
import json

SUITES = resources.files("emojiseg.data").joinpath("suites")


def suite(name):
    return SUITES.joinpath(name).read_text("utf-8").splitlines()


def section(title):
    print(f"\n== {title} ==")


def main():
    reg = default_registry()

    section("tokenization suite")
    golds = load_gold_tokens(suite("tokens_gold.jsonl"))
    reports = {
        "emojiseg": score_tokens(reg, golds, {g.id: [t.text for t in tokenize(reg, g.text)] for g in golds}),
        "whitespace": score_tokens(reg, golds, {g.id: g.text.split() for g in golds}),
    }
    print(render_reports(reports, CASE_LABELS))
    section("support overview (threshold 50)")
    print(render_matrix_table(render_support_matrix(reports, 50.0, MATRIX_COLUMNS)))

    section("POS suite")
    pos_golds = load_gold_pos(suite("pos_gold.jsonl"))
    noun_only = PosLexicon({}, default_pos_lexicon().default_class)
    pos_reports = {}
    for name, lex in (("default-noun", noun_only), ("lexicon", default_pos_lexicon())):
        preds = {g.id: tag_tokens(reg, [t.text for t in tokenize(reg, g.text)], lex) for g in pos_golds}
        pos_reports[name] = score_pos(pos_golds, preds, Tagset.PENN)
    for tool in ("whitespace", "phrase"):
        tagset, preds = load_pos_predictions(suite(f"pos_pred_{tool}.jsonl"))
        pos_reports[tool] = score_pos(pos_golds, preds, tagset)
        retok = {k: retokenize_tagged(reg, v, tagset=tagset) for k, v in preds.items()}
        pos_reports[f"{tool}+retok"] = score_pos(pos_golds, retok, tagset)
    print(render_reports(pos_reports))

    section("sentiment suite")
    sent = load_sentiment_suite(suite("sentiment_gold.jsonl"))
    lex = default_lexicon()
    sent_reports = {
        name: score_sentiment(sent, {ex.id: analyze(reg, lex, ex.text, w_emoji=w).polarity for ex in sent})
        for name, w in (("text only", 0.0), ("text+emoji", 1.0))
    }
    print(render_reports(sent_reports))

    section("polarity by signal")
    print(f"{'text':<40}  {'text':>8}  {'emoji':>8}  {'both':>8}  gold")
    for line in suite("table6.jsonl"):
        row = json.loads(line)
        only_text = analyze(reg, lex, row["text"], w_emoji=0.0).polarity.value
        only_emoji = analyze(reg, lex, row["text"], w_text=0.0).polarity.value
        both = analyze(reg, lex, row["text"]).polarity.value
        print(f"{row['text']:<40}  {only_text:>8}  {only_emoji:>8}  {both:>8}  {row['text_emoji']}")

    section("embedding neighbours (fixture table)")
    table = fixture_embeddings()
    for tone in "🏻🏼🏽🏾🏿":
        q = "👏" + tone
        hits = " ".join(t for t, _ in nearest(table, q, 5, emoji_only=True, registry=reg))
        print(f"{q}  consistency@5={skin_tone_consistency(table, reg, q, 5):.1f}  {hits}")


if __name__ == "__main__":
    main()
