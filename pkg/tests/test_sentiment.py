import json

import pytest
from hypothesis import given, strategies as st

from emojiseg import default_registry
from emojiseg.harness import load_sentiment_suite, score_sentiment
from emojiseg.segmenter import segment_text
from emojiseg.sentiment import (
    LexiconError,
    Polarity,
    analyze,
    clamp,
    default_lexicon,
    emoji_polarity,
    lexicon_key,
    load_lexicon,
    lookup,
    polarity_of,
    word_valence_score,
)

# raw occurrence counts (negative, neutral, positive) from the Emoji Sentiment Ranking v1.0
RAW_COUNTS = {"😍": (329, 1390, 4640), "😞": (255, 85, 192)}


def test_row_score():
    lex = load_lexicon("😍\t0.05\t0.15\t0.80\n")
    assert lex[lexicon_key(map(ord, "😍"))].score == pytest.approx(0.75)


def test_bad_sum_rejected():
    with pytest.raises(LexiconError) as err:
        load_lexicon("# c\n😍\t0.05\t0.05\t0.80\n")
    assert err.value.line == 2


@pytest.mark.parametrize("data", ["😍\t0.1\t0.9\n", "😍\tx\t0.1\t0.9\n", "😍\t-0.1\t0.2\t0.9\n",
                                  "😍\t0.1\t0.1\t0.8\n😍️\t0.1\t0.1\t0.8\n"])
def test_malformed_rows(data):
    with pytest.raises(LexiconError):
        load_lexicon(data)


def test_empty_lexicon_scores_zero(reg):
    assert load_lexicon("") == {}
    assert emoji_polarity({}, segment_text(reg, "😍")[0]) == 0.0


def test_bundled_rows_consistent():
    for entry in default_lexicon().values():
        assert abs(entry.p_neg + entry.p_neut + entry.p_pos - 1) <= 1e-6
        assert entry.score == entry.p_pos - entry.p_neg
        assert -1 <= entry.score <= 1


@pytest.mark.parametrize("emoji", RAW_COUNTS)
def test_bundled_rows_match_raw_counts(reg, emoji):
    neg, neu, pos = RAW_COUNTS[emoji]
    total = neg + neu + pos
    score = lookup(reg, default_lexicon(), emoji)
    assert score == pytest.approx(pos / total - neg / total, abs=2e-6)


def test_known_scores(reg):
    lex = default_lexicon()
    assert lookup(reg, lex, "😍") > 0.1
    assert lookup(reg, lex, "😞") < -0.1
    assert lookup(reg, lex, "🫠") == 0.0


def test_tone_and_selector_do_not_change_entry(reg):
    lex = default_lexicon()
    assert lookup(reg, lex, "👍") == lookup(reg, lex, "👍🏿") != 0
    assert lookup(reg, lex, "❤️") == lookup(reg, lex, "❤") != 0


@pytest.mark.parametrize("score, pol", [(0.1, Polarity.POSITIVE), (-0.1, Polarity.NEGATIVE),
                                        (0.0999, Polarity.NEUTRAL), (-0.0999, Polarity.NEUTRAL),
                                        (1.0, Polarity.POSITIVE), (-1.0, Polarity.NEGATIVE)])
def test_threshold_boundaries(score, pol):
    assert polarity_of(score) is pol


def test_examples(reg):
    lex = default_lexicon()
    assert analyze(reg, lex, "I'll explain it later 😍").polarity is Polarity.POSITIVE
    r = analyze(reg, lex, "My driver license is expired by little over a month 😞")
    assert r.polarity is Polarity.NEGATIVE and r.text_score < 0


def test_negative_weights_rejected(reg):
    with pytest.raises(ValueError):
        analyze(reg, default_lexicon(), "x", w_text=-1)


def test_swatches_ignored(reg):
    r = analyze(reg, default_lexicon(), "colors 🏻 🏿")
    assert r.emoji_count == 0 and r.emoji_score == 0.0


def test_table6(reg, suites):
    lex = default_lexicon()
    for line in open(suites / "table6.jsonl", encoding="utf-8"):
        ex = json.loads(line)
        assert analyze(reg, lex, ex["text"], 1, 0).polarity.value == ex["only_text"]
        assert analyze(reg, lex, ex["text"], 0, 1).polarity.value == ex["only_emoji"]
        assert analyze(reg, lex, ex["text"]).polarity.value == ex["text_emoji"]


def test_table5_failure_pattern(reg, suites):
    ex = load_sentiment_suite(open(suites / "sentiment_gold.jsonl", encoding="utf-8"))
    lex = default_lexicon()
    text_only = score_sentiment(ex, {e.id: analyze(reg, lex, e.text, 1, 0).polarity for e in ex})
    assert [text_only.pct(c) for c in text_only.categories] == [100.0, 0.0, 0.0]
    both = score_sentiment(ex, {e.id: analyze(reg, lex, e.text).polarity for e in ex})
    assert [both.pct(c) for c in both.categories] == [100.0, 100.0, 100.0]


# -- properties ---------------------------------------------------------------------

SENTENCES = ["I'll explain it later", "we love it", "this is awful", "the bus is late", ""]
LEX_EMOJIS = sorted({"".join(map(chr, k)) for k in default_lexicon() if len(k) == 1})


@given(st.sampled_from(SENTENCES), st.floats(0, 3), st.floats(0, 3))
def test_emoji_free_text(text, wt, we):
    reg = default_registry()
    r = analyze(reg, default_lexicon(), text, wt, we)
    assert r.combined_score == clamp(wt * word_valence_score(reg, text))


@given(st.sampled_from(SENTENCES), st.sampled_from(LEX_EMOJIS), st.sampled_from(LEX_EMOJIS), st.floats(0.01, 3))
def test_monotone_in_emoji_score(text, a, b, we):
    reg, lex = default_registry(), default_lexicon()
    if lookup(reg, lex, a) > lookup(reg, lex, b):
        a, b = b, a
    lo = analyze(reg, lex, f"{text} {a}", 1, we).combined_score
    hi = analyze(reg, lex, f"{text} {b}", 1, we).combined_score
    assert hi >= lo


@given(st.sampled_from(SENTENCES), st.sampled_from(["👍", "👏", "🙏", "✌", "👋", "💪"]),
       st.sampled_from(["🏻", "🏼", "🏽", "🏾", "🏿"]))
def test_tone_invariance(text, base, tone):
    reg, lex = default_registry(), default_lexicon()
    assert analyze(reg, lex, f"{text} {base}{tone}") == analyze(reg, lex, f"{text} {base}")


@given(st.floats(-1, 1))
def test_thresholds_partition(score):
    pol = polarity_of(score)
    assert (pol is Polarity.POSITIVE) == (score >= 0.1)
    assert (pol is Polarity.NEGATIVE) == (score <= -0.1)
