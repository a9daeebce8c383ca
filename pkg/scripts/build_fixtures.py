#!/usr/bin/env python3
"""Regenerate the bundled evaluation suites and the fixture embedding table.

Token golds are written as piece lists: a piece prefixed with ``~`` is glued
to the previous one, every other piece is preceded by one space.  The text
is the joined pieces, the gold tokens the pieces themselves, so the gold
never depends on the tokenizer under test.

    python scripts/build_fixtures.py src/emojiseg/data
"""
import argparse
import json
import os

TONES = ["\U0001F3FB", "\U0001F3FC", "\U0001F3FD", "\U0001F3FE", "\U0001F3FF"]
ZWJ = "‍"
VS16 = "️"

# --- tokenization suite ------------------------------------------------------

CASE1 = [
    ["Emojis", "😊", "are", "a", "new", "way", "of", "expressing", "emotions", "~!", "#emoji"],
    ["Emojis", "~😊", "~are", "a", "new", "way", "of", "expressing", "emotions", "~!", "#emoji"],
    ["Good", "morning", "everyone", "~☀️"],
    ["@jenny_k", "thanks", "for", "the", "tickets", "~🎉", "see", "you", "tonight"],
    ["Just", "finished", "my", "first", "marathon", "🏃", "https://t.co/xY12abC"],
    ["😂", "this", "is", "exactly", "what", "happened", "at", "work", "today"],
    ["Can't", "believe", "it's", "already", "Friday", "~😴"],
    ["New", "blog", "post", "is", "up", "👉", "www.example.com/blog"],
    ["We", "won", "the", "game", "3", "~-", "~1", "⚽", "#matchday"],
    ["Coffee", "first", "~,", "questions", "later", "~☕️"],
]

CASE2 = [
    ["Emojis", "😄", "are", "a", "new", "way", "for", "expressing", "emotions", "😄", "~!", "#emoji"],
    ["Another", "example", "is", "having", "multiple", "emojis", "😄", "😄", "😄", "😄",
     "together", "in", "a", "tweet", "~."],
    ["This", "gets", "a", "little", "complicated", "when", "having", "multiple", "emojis",
     "😄", "~😄", "~😄", "~😄", "in", "a", "tweet", "without", "having", "any", "spaces", "in",
     "between", "emojis", "~."],
    ["When", "armed", "with", "this", "everything", "gets", "a", "clean", "🤪", "~🤪", "~🤪", "~🤪",
     "including", "the", "neighbours", "car", "🚗", "~👍", "~🤪", "ooops", "#foambath",
     "#jetwashing", "~-", "~fun", "#happydays", "#everythingclean"],
    ["Yahoooooo", "~!", "🤩", "~🤩", "~🤩", "~🤩", "we", "are", "going", "to", "the", "finals"],
    ["funnnn", "day", "at", "the", "beach", "🌊", "~🏖️", "~😎"],
    ["@mike_d", "happy", "birthday", "🎂", "~🎈", "have", "a", "great", "one", "🎉"],
    ["I", "❤️", "pizza", "🍕", "and", "I'm", "not", "sorry"],
    ["🔥", "~🔥", "new", "track", "out", "now", "🎶", "https://t.co/a1B2c3"],
    ["so", "tired", "~😴", "~😴", "but", "still", "going", "~💪"],
]


def _rot(i):
    return TONES[i:] + TONES[:i]


def case3_examples():
    out = []
    for i, tone in enumerate(TONES):
        out += [
            ["I'm", "the", "Face", "with", "Tears", "of", "Joy", "emoji", "😂", "~.", "How", "do",
             "you", "like", "👍" + tone, "me", "~?"],
            ["We", "are", "all", "same", *("🧒" + t for t in _rot(i)), "but", "different", "in",
             "skin", "colors", "~!"],
            ["Checking", "a", "long", "sequence", "of", "emojis", "😄", *["~😄"] * 6, "and", "skin",
             "tones", *_rot(i), "~."],
            ["Thank", "you", "so", "much", "~🙏" + tone],
            ["👋" + tone, "hello", "from", "the", "other", "side"],
            ["Great", "job", "team", "~👏" + tone, "~👏" + tone, "~👏" + tone],
            ["@coach_b", "see", "you", "at", "practice", "💪" + tone, "#grind"],
            ["Raise", "your", "hand", "if", "you're", "tired", "of", "meetings", "~🙋" + tone],
            ["✌" + tone, "~peace", "out", "~,", "see", "you", "next", "week"],
            ["Nice", "one", "👌" + tone, "😂", "~😂"],
        ]
    return out


CASE4 = [
    ["Sending", "love", "to", "everyone", "❤️", "stay", "safe"],
    ["Sunny", "day", "~☀️", "perfect", "for", "a", "walk"],
    ["Don't", "forget", "your", "umbrella", "☔", "it's", "pouring"],
    ["Check", "✅", "done", "with", "exams"],
    ["Match", "day", "⚽", "~⚽", "let's", "go"],
    ["Time", "flies", "⌛", "when", "you're", "having", "fun"],
    ["✨", "new", "week", "new", "goals", "✨"],
    ["I'm", "on", "my", "third", "cup", "~☕", "already"],
    ["That", "was", "fast", "⚡", "~⚡", "~⚡"],
    ["Rate", "it", "5", "⭐", "#review"],
]

CASE5 = [
    ["Movie", "night", "🍿", "~🎬", "with", "the", "crew"],
    ["Our", "puppy", "~🐶", "learned", "a", "new", "trick", "today"],
    ["Exam", "results", "are", "out", "📚", "wish", "me", "luck", "🍀"],
    ["This", "song", "is", "on", "repeat", "🎧", "#nowplaying"],
    ["Off", "to", "Paris", "🇫🇷", "for", "the", "weekend"],
    ["Pizza", "party", "at", "8", "🍕", "@sam_r", "bring", "drinks"],
    ["Level", "up", "🎮", "finally", "beat", "the", "boss"],
    ["🚀", "launching", "our", "new", "app", "today", "https://t.co/launch42"],
    ["Rainy", "days", "and", "🌧️", "tea"],
    ["Happy", "Halloween", "~🎃", "~👻"],
]

CASE6 = [
    ["Family", "time", "is", "the", "best", "👨‍👩‍👧‍👦"],
    ["Proud", "of", "my", "sister", "👩‍🎓", "graduating", "today"],
    ["👨‍💻", "coding", "all", "night", "again"],
    ["Love", "is", "love", "🏳️‍🌈", "#pride"],
    ["Our", "new", "doctor", "~👩🏽‍⚕️", "is", "amazing"],
    ["Happy", "fathers", "day", "👨‍👧", "❤️"],
    ["Pirates", "ahoy", "🏴‍☠️", "#halloween"],
    ["Heart", "on", "fire", "❤️‍🔥", "tonight"],
    ["Mum", "and", "dad", "👩‍❤️‍👨", "married", "30", "years", "today"],
    ["Race", "day", "🏃‍♀️", "~🏁"],
]


def assemble(pieces):
    text, gold = "", []
    for p in pieces:
        glued = p.startswith("~")
        p = p[1:] if glued else p
        text += p if glued or not text else " " + p
        gold.append(p)
    return text, gold


def token_suite():
    cases = [
        ("Case1", CASE1), ("Case2", CASE2), ("Case3", case3_examples()),
        ("Case4", CASE4), ("Case5", CASE5), ("Case6", CASE6),
    ]
    rows = []
    for case, examples in cases:
        for n, pieces in enumerate(examples, start=1):
            text, gold = assemble(pieces)
            rows.append({"id": f"{case.lower()}-{n:02d}", "text": text, "case": case, "gold_tokens": gold})
    return rows


# --- part-of-speech suite -----------------------------------------------------

POS = [
    ("She kept her 🐶 dog but had to sell her 🐱....", "🐶", 0, "Noun"),
    ("She kept her 🐶 but had to sell her 🐱....", "🐱", 0, "Noun"),
    ("Just bought a new 🚗 and I can't stop driving it", "🚗", 0, "Noun"),
    ("Grabbing some 🍕 with the team tonight", "🍕", 0, "Noun"),
    ("My 📱 died right before the concert", "📱", 0, "Noun"),
    ("Who wants to go to the 🏖️ this weekend?", "🏖️", 0, "Noun"),
    ("Yes, she is 😍 and I like it", "😍", 0, "Adjective"),
    ("This weather is so 🔥 today", "🔥", 0, "Adjective"),
    ("Feeling 😴 after that long shift", "😴", 0, "Adjective"),
    ("The new album is 💯", "💯", 0, "Adjective"),
    ("You look 😎 in that jacket", "😎", 0, "Adjective"),
    ("I love❤️ pizza more than anything", "❤️", 0, "Verb"),
    ("Can't wait to 🏃 tomorrow morning", "🏃", 0, "Verb"),
    ("Let's 🍻 to that", "🍻", 0, "Verb"),
    ("We 🙏 for a quick recovery", "🙏", 0, "Verb"),
    ("My Credit Score Went 📈 7 Points 🙌", "📈", 0, "Adverb"),
    ("Prices went 📉 overnight", "📉", 0, "Adverb"),
    ("He drove 🐢 all the way home", "🐢", 0, "Adverb"),
    ("The package arrived ⏰ as promised", "⏰", 0, "Adverb"),
    ("I MADE A PICTURE ‼️ What do you think ❓ 🌟 🤖", "‼️", 0, "Punctuation"),
    ("I MADE A PICTURE ‼️ What do you think ❓ 🌟 🤖", "❓", 0, "Punctuation"),
    ("Are you serious❓❓", "❓", 1, "Punctuation"),
    ("We did it‼️ Champions again", "‼️", 0, "Punctuation"),
]


def pos_suite():
    return [
        {"id": f"pos-{n:02d}", "text": text, "targets": [{"text": t, "occurrence": k, "gold": g}]}
        for n, (text, t, k, g) in enumerate(POS, start=1)
    ]


def _has_letters(s):
    return any(ch.isalpha() for ch in s)


def whitespace_tool(text):
    """Simulated tagger behind a whitespace tokenizer: merged tokens keep a word tag."""
    tagged = []
    for tok in text.split():
        # an emoji glued to trailing punctuation ("🐱....") is tagged as punctuation
        glued_punct = not _has_letters(tok) and tok.rstrip(".!?") not in ("", tok)
        tagged.append({"text": tok, "tag": "." if glued_punct else "NN"})
    return tagged


def phrase_tool(text):
    """Simulated tagger that merges runs of letter-free tokens into one ("? 🌟 🤖")."""
    merged = []
    for tok in text.split():
        if merged and not _has_letters(tok) and not _has_letters(merged[-1]):
            merged[-1] += " " + tok
        else:
            merged.append(tok)
    return [{"text": t, "tag": "NNS" if " " in t else ("JJ" if _has_letters(t) else "NN")} for t in merged]


# --- sentiment suites -------------------------------------------------------------

SIGNAL_ROWS = [
    ("They decided to release it 🗨️", "Neutral", "Negative", "Negative"),
    ("They decided to release it 😞", "Neutral", "Negative", "Negative"),
    ("Let's go for it 🦄", "Neutral", "Positive", "Positive"),
    ("My driver license is expired by little over a month 😞", "Negative", "Negative", "Negative"),
    ("They are going to start a direct flight soon 😞", "Neutral", "Negative", "Negative"),
    ("They are going to start a direct flight soon 😍", "Neutral", "Positive", "Positive"),
    ("I'll explain it later 😍", "Neutral", "Positive", "Positive"),
]

NEUTRAL = [
    "I'll explain it later",
    "They decided to release it",
    "Let's go for it",
    "They are going to start a direct flight soon",
    "The meeting was moved to Thursday",
    "She is taking the train to work",
    "We are painting the kitchen this weekend",
    "He just got a new phone",
    "The store opens at nine",
    "I am reading the report now",
]
POSITIVE_EMOJIS = ["😍", "😊", "🦄", "❤️", "👏", "🎉", "😁", "💕", "🙌", "😘"]
NEGATIVE_EMOJIS = ["😞", "😒", "😡", "💔", "🙄", "😠", "😩", "😔", "😤", "👎"]


def sentiment_suite():
    rows = []
    for n, sentence in enumerate(NEUTRAL, start=1):
        rows.append({"id": f"s{n:02d}-ns", "text": sentence, "condition": "NS", "gold": "Neutral"})
        rows.append({"id": f"s{n:02d}-pos", "text": f"{sentence} {POSITIVE_EMOJIS[n - 1]}",
                     "condition": "PosEmoji", "gold": "Positive"})
        rows.append({"id": f"s{n:02d}-neg", "text": f"{sentence} {NEGATIVE_EMOJIS[n - 1]}",
                     "condition": "NegEmoji", "gold": "Negative"})
    return rows


# --- fixture embeddings ---------------------------------------------------------

GESTURES = ["👍", "🙌", "💪", "🙏", "✌"]
FAMILIES = ["👨‍👩‍👧‍👦", "👨‍👩‍👧", "👩‍👩‍👦", "👨‍👨‍👧", "👩‍👧‍👦"]
DIM = 12  # 0-4 tone axes, 5 untoned, 6 gesture, 7 family, 8 zwj, 9-11 item noise


def _vec(**axes):
    v = [0.0] * DIM
    for k, x in axes.items():
        v[int(k[1:])] = x
    return v


def embedding_rows():
    rows = []
    rows.append(("👏", _vec(a5=1.0, a6=0.7, a9=0.05)))
    for i, tone in enumerate(TONES):
        rows.append(("👏" + tone, _vec(**{f"a{i}": 1.0, "a6": 0.7, "a10": 0.05})))
    for g, base in enumerate(GESTURES):
        rows.append((base, _vec(a5=1.0, a6=0.6, **{f"a{9 + g % 3}": 0.1 + 0.02 * g})))
        for i, tone in enumerate(TONES):
            v = _vec(**{f"a{i}": 1.0, "a6": 0.6, f"a{9 + g % 3}": 0.1 + 0.02 * g})
            rows.append((base + tone, v))
    weak = {("✌", 1), ("✌", 2)}
    leak = {("🙌", 2): 1, ("👍", 3): 2}
    out = []
    for token, v in rows:
        for (base, i), src in leak.items():
            if token == base + TONES[i]:
                v[src] = 0.85  # strong pull towards a neighbouring tone
        for base, i in weak:
            if token == base + TONES[i]:
                v[i] = 0.4
                v[11] = 0.6
        out.append((token, v))
    for f, fam in enumerate(FAMILIES):
        out.append((fam, _vec(a7=1.0, a8=0.8, **{f"a{9 + f % 3}": 0.05 * (f + 1)})))
    out.append(("👪", _vec(a7=1.0, a8=0.1, a11=0.2)))
    out.append(("applause", _vec(a6=1.0, a9=0.3)))
    out.append(("family", _vec(a7=1.0, a10=0.3)))
    out.append(("bravo", _vec(a6=0.9, a5=0.5, a9=0.3)))
    return out


def write_jsonl(path, rows, header=None):
    with open(path, "w", encoding="utf-8") as fh:
        if header is not None:
            fh.write(json.dumps(header, ensure_ascii=False) + "\n")
        for row in rows:
            fh.write(json.dumps(row, ensure_ascii=False) + "\n")


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("datadir")
    args = parser.parse_args(argv)
    suites = os.path.join(args.datadir, "suites")
    os.makedirs(suites, exist_ok=True)

    write_jsonl(os.path.join(suites, "tokens_gold.jsonl"), token_suite())
    pos = pos_suite()
    write_jsonl(os.path.join(suites, "pos_gold.jsonl"), pos)
    for name, tool in (("whitespace", whitespace_tool), ("phrase", phrase_tool)):
        write_jsonl(
            os.path.join(suites, f"pos_pred_{name}.jsonl"),
            [{"id": ex["id"], "tagged": tool(ex["text"])} for ex in pos],
            header={"tagset": "PennTreebank"},
        )
    write_jsonl(os.path.join(suites, "sentiment_gold.jsonl"), sentiment_suite())
    write_jsonl(
        os.path.join(suites, "table6.jsonl"),
        [{"id": f"t6-{n}", "text": t, "only_text": a, "only_emoji": b, "text_emoji": c}
         for n, (t, a, b, c) in enumerate(SIGNAL_ROWS, start=1)],
    )

    rows = embedding_rows()
    with open(os.path.join(args.datadir, "fixture_embeddings.txt"), "w", encoding="utf-8") as fh:
        fh.write(f"{len(rows)} {DIM}\n")
        for token, v in rows:
            fh.write(token + " " + " ".join(f"{x:g}" for x in v) + "\n")


if __name__ == "__main__":
    main()
