#!/usr/bin/env python3
"""Regenerate the bundled emoji-property snapshot.

The source is a ``property_bool.rs`` table file as produced by ``ucd-generate``
(shipped with the ``regex-syntax`` crate), which carries the Unicode
emoji-data properties as ``(char, char)`` range literals.

    python scripts/build_registry.py path/to/property_bool.rs \
        > src/emojiseg/data/emoji_properties.txt
"""
import argparse
import re
import sys

TABLE = re.compile(r"pub const (\w+): &'static \[\(char, char\)\] = &\[(.*?)\];", re.S)
CHAR = r"'(\\u\{[0-9a-fA-F]+\}|\\.|[^'])'"
PAIR = re.compile(r"\(" + CHAR + r",\s*" + CHAR + r"\)")
VERSION = re.compile(r"Unicode version: (\d+(?:\.\d+)*)")

NEEDED = ("EMOJI", "EMOJI_MODIFIER", "EMOJI_MODIFIER_BASE", "REGIONAL_INDICATOR")


def _char(lit):
    if lit.startswith("\\u{"):
        return int(lit[3:-1], 16)
    if lit.startswith("\\"):
        return ord({"n": "\n", "t": "\t", "r": "\r", "0": "\0"}.get(lit[1], lit[1]))
    return ord(lit)


def parse_tables(source):
    tables = {}
    for name, body in TABLE.findall(source):
        if name in NEEDED:
            tables[name] = [(_char(a), _char(b)) for a, b in PAIR.findall(body)]
    missing = set(NEEDED) - set(tables)
    if missing:
        raise SystemExit(f"source lacks tables: {sorted(missing)}")
    return tables


def classify_all(tables):
    classes = {}

    def put(lo, hi, name):
        for cp in range(lo, hi + 1):
            classes[cp] = name

    for lo, hi in tables["EMOJI"]:
        put(lo, hi, "EMOJI_BASE")
    for lo, hi in tables["EMOJI_MODIFIER_BASE"]:
        put(lo, hi, "TONE_CAPABLE_BASE")
    for lo, hi in tables["EMOJI_MODIFIER"]:
        put(lo, hi, "SKIN_TONE_MODIFIER")
    for lo, hi in tables["REGIONAL_INDICATOR"]:
        put(lo, hi, "REGIONAL_INDICATOR")
    # keycap bases are Emoji=Yes in emoji-data but only form emoji with U+20E3
    for cp in (0x23, 0x2A, *range(0x30, 0x3A)):
        classes[cp] = "KEYCAP_BASE"
    put(0x200D, 0x200D, "ZERO_WIDTH_JOINER")
    put(0xFE0F, 0xFE0F, "VARIATION_SELECTOR_EMOJI")
    put(0xFE0E, 0xFE0E, "VARIATION_SELECTOR_TEXT")
    put(0x20E3, 0x20E3, "COMBINING_KEYCAP")
    put(0xE0020, 0xE007E, "TAG_CHAR")
    put(0xE007F, 0xE007F, "TAG_TERMINATOR")
    return classes


def merged_ranges(classes):
    out = []
    for cp in sorted(classes):
        name = classes[cp]
        if out and out[-1][2] == name and out[-1][1] == cp - 1:
            out[-1][1] = cp
        else:
            out.append([cp, cp, name])
    return out


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("source", help="ucd-generate property_bool.rs file")
    args = parser.parse_args(argv)

    with open(args.source, encoding="utf-8") as fh:
        source = fh.read()
    m = VERSION.search(source)
    version = m.group(1) if m else "unknown"

    ranges = merged_ranges(classify_all(parse_tables(source)))
    w = sys.stdout.write
    w("# Emoji code point classes for the emojiseg registry.\n")
    w(f"# Version: {version}\n")
    w("# Derived from the Unicode emoji-data properties Emoji, Emoji_Modifier,\n")
    w("# Emoji_Modifier_Base and Regional_Indicator, plus the fixed joiner,\n")
    w("# selector, keycap and tag code points. Generated by scripts/build_registry.py.\n")
    w("# Format: HEX..HEX<TAB>CLASS or HEX<TAB>CLASS\n")
    for lo, hi, name in ranges:
        key = f"{lo:04X}" if lo == hi else f"{lo:04X}..{hi:04X}"
        w(f"{key}\t{name}\n")


if __name__ == "__main__":
    main()
