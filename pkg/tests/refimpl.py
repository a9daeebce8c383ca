"""Independent reference implementations used as test oracles.

The segmentation oracle rewrites a code point run as a string of class
letters and tries every end position against one regular expression per
sequence kind, keeping the longest full match.  It shares nothing with the
production matcher beyond the registry lookup.
"""
import random
import re

from emojiseg.registry import CodePointClass as C

LETTER = {
    C.EMOJI_BASE: "B",
    C.TONE_CAPABLE_BASE: "T",
    C.SKIN_TONE_MODIFIER: "M",
    C.REGIONAL_INDICATOR: "R",
    C.ZERO_WIDTH_JOINER: "Z",
    C.VARIATION_SELECTOR_EMOJI: "V",
    C.VARIATION_SELECTOR_TEXT: "V",
    C.KEYCAP_BASE: "K",
    C.COMBINING_KEYCAP: "C",
    C.TAG_CHAR: "G",
    C.TAG_TERMINATOR: "X",
    C.NON_EMOJI: "N",
}

_UNIT = r"(?:BV?|TV?M?)"
GRAMMAR = [
    ("FlagSequence", re.compile(r"RR")),
    ("KeycapSequence", re.compile(r"KV?C")),
    ("TagSequence", re.compile(r"[BT]G+X")),
    ("ZwjSequence", re.compile(rf"{_UNIT}(?:Z{_UNIT})+")),
    ("ModifierSequence", re.compile(r"TV?M")),
    ("Basic", re.compile(r"BV?|TV?|R")),
    ("StandaloneModifier", re.compile(r"M")),
]


def kind_of(letters):
    for kind, rx in GRAMMAR:
        if rx.fullmatch(letters):
            return kind
    return None


def oracle_segment(registry, cps):
    """[(codepoints, kind or None)] where None marks a degenerate single code point."""
    letters = "".join(LETTER[registry.classify(cp)] for cp in cps)
    out, i = [], 0
    while i < len(cps):
        for end in range(len(cps), i, -1):
            kind = kind_of(letters[i:end])
            if kind:
                out.append((tuple(cps[i:end]), kind))
                i = end
                break
        else:
            out.append(((cps[i],), None))
            i += 1
    return out


# a few code points per class, enough to hit every grammar branch
POOL = {
    "B": [0x1F600, 0x1F604, 0x2764, 0x1F308, 0x1F3F4, 0x2640, 0x1F525, 0x263A],
    "T": [0x1F44D, 0x1F469, 0x1F468, 0x1F9D2, 0x270C, 0x1F44F],
    "M": [0x1F3FB, 0x1F3FC, 0x1F3FD, 0x1F3FE, 0x1F3FF],
    "R": [0x1F1E6, 0x1F1EB, 0x1F1F7, 0x1F1FA],
    "Z": [0x200D],
    "V": [0xFE0F, 0xFE0E],
    "K": [0x23, 0x2A, 0x30, 0x37],
    "C": [0x20E3],
    "G": [0xE0067, 0xE0062, 0xE0065, 0xE006E],
    "X": [0xE007F],
}
WEIGHTS = {"B": 4, "T": 4, "M": 3, "R": 2, "Z": 4, "V": 3, "K": 1, "C": 1, "G": 2, "X": 1}


def random_run(rng: random.Random, max_len: int = 12):
    letters = list(WEIGHTS)
    weights = list(WEIGHTS.values())
    n = rng.randint(1, max_len)
    return [rng.choice(POOL[rng.choices(letters, weights)[0]]) for _ in range(n)]


# -- synthetic tweets with labels known by construction -------------------------

# (text, max plane, skin tones, is zwj)
EMOJI_ITEMS = [
    ("😊", 1, (), False), ("😄", 1, (), False), ("🤪", 1, (), False), ("🚗", 1, (), False),
    ("❤️", 0, (), False), ("☀️", 0, (), False), ("⚽", 0, (), False), ("✨", 0, (), False),
    ("☕", 0, (), False), ("🇫🇷", 1, (), False), ("#️⃣", 0, (), False),
    ("👍🏻", 1, (0x1F3FB,), False), ("👏🏼", 1, (0x1F3FC,), False), ("✌🏽", 1, (0x1F3FD,), False),
    ("🙏🏾", 1, (0x1F3FE,), False), ("👋🏿", 1, (0x1F3FF,), False),
    ("👨‍👩‍👧‍👦", 1, (), True), ("🏳️‍🌈", 1, (), True), ("❤️‍🔥", 1, (), True),
    ("👩🏽‍⚕️", 1, (0x1F3FD,), True), ("👩🏻‍🤝‍👨🏿", 1, (0x1F3FB, 0x1F3FF), True),
]
SWATCHES = ["🏻", "🏼", "🏽", "🏾", "🏿"]
WORDS = ["good", "morning", "friends", "today", "is", "great", "we", "won", "the", "game", "#fun", "@pal", "ok!"]


def synth_tweet(rng: random.Random):
    """Return ``(text, truth)``; truth mirrors :class:`CaseLabels` fields plus tone presence."""
    n_emoji = rng.choices([0, 1, 2, 3, 4], [3, 4, 3, 2, 1])[0]
    parts = [("w", rng.choice(WORDS)) for _ in range(rng.randint(0, 5))]
    for _ in range(n_emoji):
        parts.insert(rng.randint(0, len(parts)), ("e", rng.choice(EMOJI_ITEMS)))
    text, seps = "", []
    for k, (kind, val) in enumerate(parts):
        piece = val if kind == "w" else val[0]
        if k:
            prev = parts[k - 1][0]
            sep = " " if prev == "w" and kind == "w" else rng.choice(["", " "])
            seps.append(sep)
            text += sep
        text += piece
    tones = [t for kind, val in parts if kind == "e" for t in val[2]]
    if rng.random() < 0.1:
        sw = rng.choice(SWATCHES)
        text += " " + sw
        tones.append(0x1F3FB + SWATCHES.index(sw))

    emoji_idx = [k for k, (kind, _) in enumerate(parts) if kind == "e"]
    cluster = spaced = positions = False
    for a, b in zip(emoji_idx, emoji_idx[1:]):
        if b == a + 1:
            if seps[a] == "":
                cluster = True
            else:
                spaced = True
        else:
            positions = True

    def free(k):
        left = k == 0 or seps[k - 1] == " "
        right = k == len(parts) - 1 or seps[k] == " "
        return left and right

    items = [parts[k][1] for k in emoji_idx]
    n = len(items)
    truth = {
        "emoji_count": n,
        "single_emoji_spaced": n == 1 and free(emoji_idx[0]),
        "single_emoji_unspaced": n == 1 and not free(emoji_idx[0]),
        "multi_cluster": n >= 2 and cluster,
        "multi_spaced": n >= 2 and spaced,
        "multi_positions": n >= 2 and positions,
        "bmp_emoji_present": any(it[1] == 0 for it in items),
        "non_bmp_emoji_present": any(it[1] > 0 for it in items),
        "zwj_present": any(it[3] for it in items),
        "skin_tone_present": bool(tones),
        "tones": set(tones),
    }
    return text, truth
