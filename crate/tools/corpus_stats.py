"""Token statistics of an Urdu-script corpus, computed without the engine.

Tokens are maximal runs between whitespace, ASCII punctuation and Arabic
punctuation. A diacritic is any combining Arabic mark (U+064B..U+065F,
U+0670).
"""
import string
import sys
from collections import Counter

ARABIC_PUNCT = set("،؍؛؟٪٫٬۔")
SEPARATORS = set(string.punctuation) | ARABIC_PUNCT


def tokens(text):
    word = []
    for c in text:
        if c.isspace() or c in SEPARATORS:
            if word:
                yield "".join(word)
                word = []
        else:
            word.append(c)
    if word:
        yield "".join(word)


def has_mark(w):
    return any("ً" <= c <= "ٟ" or c == "ٰ" for c in w)


def main(path):
    counts = Counter(tokens(open(path, encoding="utf-8").read()))
    marked = {w: n for w, n in counts.items() if has_mark(w)}
    print(f"tokens\t{sum(counts.values())}")
    print(f"unique\t{len(counts)}")
    print(f"diacritic_tokens\t{sum(marked.values())}")
    print(f"diacritic_unique\t{len(marked)}")


if __name__ == "__main__":
    main(sys.argv[1])
