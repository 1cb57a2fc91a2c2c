"""Surfaces with boundary: single letters are free edges.

A label that occurs once is an unglued polygon edge and stays on the
surface boundary.  Normalization merges runs of free edges, removes
pairs that enclose nothing, and hives off one hole per pair that frames
a single letter.  canonical_word() builds the standard presentation for
any normal form, bounded or not.
"""

from surfword import NormalForm, canonical_word, classify, normalize, parse

FIXTURES = [
    ("x", "disk"),
    ("x y z", "still a disk: adjacent free edges merge"),
    ("a x a", "Moebius band"),
    ("a x a' y", "annulus"),
    ("a b a' b' x", "torus with one hole"),
]


def main() -> None:
    for text, name in FIXTURES:
        print(f"{text!r:16} {classify(parse(text)).describe():48} ({name})")

    print()
    word = parse("a x a' y")
    form, trace = normalize(word)
    print(f"how {word} becomes {form}:")
    for step in trace:
        print(f"  {step.describe()}")
    print("  (the leftover single letter stands for the second hole)")

    print()
    print("standard words for bounded forms:")
    for form in (
        NormalForm("sphere", 0, 2),
        NormalForm("orientable", 1, 1),
        NormalForm("nonorientable", 2, 3),
    ):
        print(f"  {form.describe():52} {canonical_word(form)}")


if __name__ == "__main__":
    main()
