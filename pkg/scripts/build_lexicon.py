#!/usr/bin/env python3
"""Regenerate the bundled emoji sentiment lexicon.

Fractions come from the Emoji Sentiment Ranking v1.0 CSV (Kralj Novak et al.,
2015; columns Emoji, Occurrences, Negative, Neutral, Positive).  A handful of
emojis used in the fixtures postdate that ranking; they are appended in a
separate, hand-set block.

    python scripts/build_lexicon.py Emoji_Sentiment_Data_v1.0.csv \
        > src/emojiseg/data/emoji_sentiment.tsv
"""
import argparse
import csv
import sys

SELECTED = (
    "😂 ❤ ♥ 😍 😭 😘 😊 👌 💕 👏 😁 ☺ 👍 😩 🙏 ✌ 😏 😉 🙌 🙈 💪 😄 😒 💃 💖 😃 "
    "😔 😱 🎉 😜 🌸 💜 💙 ✨ 😳 💗 ☀ 😡 😎 😢 💋 😋 😴 🎶 💞 😌 🔥 💯 💛 ⚽ "
    "😞 😠 💔 😤 🐶 🐱 🌟 📈 🚗 ❓ ❔ ❗ ☕ ⭐ ✅ 😆 😀 😑 😕 😣 😫 👎 😖 🌹 🎂 "
    "😅 😐 😷 👋 🏃 🍕 👦 👧 👨 👩 🎈 🙋"
).split()

# not in the v1.0 ranking: (p_neg, p_neut, p_pos) set by hand
SUPPLEMENT = {
    "🗨": (0.40, 0.40, 0.20),
    "🦄": (0.05, 0.35, 0.60),
    "🙄": (0.55, 0.35, 0.10),
    "🤩": (0.03, 0.17, 0.80),
    "🤔": (0.20, 0.60, 0.20),
    "🤪": (0.10, 0.30, 0.60),
    "🤖": (0.10, 0.70, 0.20),
    "‼": (0.15, 0.55, 0.30),
    "🧒": (0.10, 0.60, 0.30),
}


def fractions(neg, neu, pos):
    total = neg + neu + pos
    p_neg = round(neg / total, 6)
    p_pos = round(pos / total, 6)
    return p_neg, round(1.0 - p_neg - p_pos, 6), p_pos


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("csv", help="Emoji_Sentiment_Data_v1.0.csv")
    args = parser.parse_args(argv)

    with open(args.csv, encoding="utf-8") as fh:
        rows = {r["Emoji"]: r for r in csv.DictReader(fh)}

    w = sys.stdout.write
    w("# Emoji sentiment lexicon: emoji<TAB>p_neg<TAB>p_neut<TAB>p_pos\n")
    w("# Source: Emoji Sentiment Ranking v1.0 (Kralj Novak, Smailovic, Sluban, Mozetic 2015),\n")
    w("# CC BY-SA 4.0. Fractions are occurrence counts over total occurrences.\n")
    for emoji in SELECTED:
        r = rows[emoji]
        p = fractions(int(r["Negative"]), int(r["Neutral"]), int(r["Positive"]))
        w(f"{emoji}\t{p[0]:.6f}\t{p[1]:.6f}\t{p[2]:.6f}\n")
    w("# Supplementary entries absent from the v1.0 ranking; fractions set by hand.\n")
    for emoji, p in SUPPLEMENT.items():
        if emoji in rows:
            raise SystemExit(f"{emoji} is in the ranking; drop it from SUPPLEMENT")
        w(f"{emoji}\t{p[0]:.6f}\t{p[1]:.6f}\t{p[2]:.6f}\n")


if __name__ == "__main__":
    main()
