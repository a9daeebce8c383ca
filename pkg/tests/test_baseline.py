import pytest
from hypothesis import given, strategies as st

from emojiseg import default_registry, tokenize
from emojiseg.baseline import (
    PosLexicon,
    default_pos_lexicon,
    heuristic_emoji_pos,
    load_pos_lexicon,
    retokenize,
    retokenize_tagged,
    tag_for,
    tag_tokens,
)
from emojiseg.harness import CoarsePos, load_gold_pos, load_pos_predictions, score_pos
from emojiseg.registry import SKIN_TONES
from emojiseg.segmenter import segment_text


def seq(reg, text):
    (s,) = segment_text(reg, text)
    return s


def test_retokenize_examples(reg):
    assert retokenize(reg, ["? 🌟 🤖"]) == ["?", "🌟", "🤖"]
    assert retokenize(reg, ["love❤️"]) == ["love", "❤️"]
    assert retokenize(reg, ["hello", "world"]) == ["hello", "world"]
    assert retokenize(reg, ["🤔🤔", "🐱...."]) == ["🤔", "🤔", "🐱", "...."]


def test_heuristic_classes(reg):
    lex = default_pos_lexicon()
    assert heuristic_emoji_pos(lex, seq(reg, "🐶")) is CoarsePos.NOUN
    assert heuristic_emoji_pos(lex, seq(reg, "‼")) is CoarsePos.PUNCTUATION
    assert heuristic_emoji_pos(lex, seq(reg, "‼️")) is CoarsePos.PUNCTUATION
    assert heuristic_emoji_pos(lex, seq(reg, "📈")) is CoarsePos.NOUN


def test_zwj_head_lookup(reg):
    lex = load_pos_lexicon("❓\tPunctuation\n👩\tVerb\n")
    assert heuristic_emoji_pos(lex, seq(reg, "👩‍⚕️")) is CoarsePos.VERB
    assert heuristic_emoji_pos(PosLexicon(), seq(reg, "👩‍⚕️")) is CoarsePos.NOUN


def test_lexicon_errors():
    with pytest.raises(ValueError, match="line 2"):
        load_pos_lexicon("‼\tPunctuation\n❓\tShouting\n")
    with pytest.raises(ValueError, match="duplicate"):
        load_pos_lexicon("‼\tPunctuation\n‼️\tNoun\n")
    with pytest.raises(ValueError, match="Other"):
        load_pos_lexicon("‼\tOther\n")


def test_tag_tokens(reg):
    tagged = tag_tokens(reg, ["I", "‼️", "🐶", "!!", "😍"])
    assert tagged == [("I", "NN"), ("‼️", "."), ("🐶", "NN"), ("!!", "."), ("😍", "NN")]
    upos = tag_tokens(reg, ["‼️", "🐶"], tagset="UniversalPOS")
    assert upos == [("‼️", "PUNCT"), ("🐶", "NOUN")]
    assert tag_for("UniversalPOS", CoarsePos.ADVERB) == "ADV"


def test_default_noun_baseline(reg, suites):
    golds = load_gold_pos(open(suites / "pos_gold.jsonl", encoding="utf-8"))
    preds = {g.id: tag_tokens(reg, [t.text for t in tokenize(reg, g.text)], PosLexicon()) for g in golds}
    rep = score_pos(golds, preds, "PennTreebank")
    assert [rep.pct(c) for c in rep.categories] == [100.0, 0.0, 0.0, 0.0, 0.0]
    assert round(rep.average, 1) == 26.1


def test_lexicon_baseline_adds_punctuation(reg, suites):
    golds = load_gold_pos(open(suites / "pos_gold.jsonl", encoding="utf-8"))
    preds = {g.id: tag_tokens(reg, [t.text for t in tokenize(reg, g.text)]) for g in golds}
    rep = score_pos(golds, preds, "PennTreebank")
    assert rep.pct("Punctuation") == 100.0 and rep.pct("Adverb") == 0.0


@pytest.mark.parametrize("tool", ["whitespace", "phrase"])
def test_retokenize_uplift(reg, suites, tool):
    golds = load_gold_pos(open(suites / "pos_gold.jsonl", encoding="utf-8"))
    tagset, preds = load_pos_predictions(open(suites / f"pos_pred_{tool}.jsonl", encoding="utf-8"))
    before = score_pos(golds, preds, tagset).average
    after = score_pos(golds, {k: retokenize_tagged(reg, v) for k, v in preds.items()}, tagset).average
    assert after > before


def test_retokenize_tagged_keeps_text_tags(reg):
    out = retokenize_tagged(reg, [("is", "VBZ"), ("love❤️", "VB"), ("?🌟", "NNS")])
    assert out == [("is", "VBZ"), ("love", "VB"), ("❤️", "NN"), ("?", "NNS"), ("🌟", "NN")]


token_text = st.lists(
    st.sampled_from(["love", "❤️", "😂", "👍🏽", "?", "!!", " ", "🤔🤔", "👨‍👩‍👧‍👦", "word", "#tag", "🐱...."]),
    max_size=6,
).map("".join)


@given(st.lists(token_text, max_size=6))
def test_retokenize_idempotent_and_content_preserving(tokens):
    reg = default_registry()
    once = retokenize(reg, tokens)
    assert retokenize(reg, once) == once
    squash = lambda toks: "".join("".join(t.split()) for t in toks)
    assert squash(once) == squash(tokens)


@given(st.sampled_from(["👍", "👏", "✌", "🙏", "👋", "🧒"]), st.sampled_from(SKIN_TONES))
def test_tone_invariance(base, tone):
    reg = default_registry()
    lex = load_pos_lexicon(f"{base}\tVerb\n")
    assert heuristic_emoji_pos(lex, seq(reg, base + chr(tone))) is heuristic_emoji_pos(lex, seq(reg, base))
