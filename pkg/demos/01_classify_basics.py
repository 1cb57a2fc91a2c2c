"""Classifying surfaces from their polygon edge words.

A compact surface can be presented as a polygon whose edges are labeled
and glued in pairs.  Reading the labels around the boundary gives an
edge word; `classify` reduces that word to the surface it presents.
"""

from surfword import classify, parse

FAMOUS = [
    ("", "empty word: the sphere"),
    ("a a'", "a bigon glued shut: still the sphere"),
    ("a a", "the projective plane"),
    ("a b a' b'", "the torus"),
    ("a b a' b", "the Klein bottle"),
    ("a a b b", "two crosscaps: the Klein bottle again"),
    ("a b c a' b' c'", "a hexagon that folds into the torus"),
    ("a a b b c c", "three crosscaps"),
]


def main() -> None:
    for text, comment in FAMOUS:
        form = classify(parse(text))
        print(f"{text!r:22} {form.describe():45} ({comment})")

    print()
    print("Equal normal forms mean homeomorphic surfaces:")
    klein_one = classify(parse("a b a' b"))
    klein_two = classify(parse("a a b b"))
    print(f"  a b a' b  -> {klein_one}")
    print(f"  a a b b   -> {klein_two}")
    print(f"  same surface: {klein_one == klein_two}")


if __name__ == "__main__":
    main()
