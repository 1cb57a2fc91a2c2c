"""The rewrite rules, one by one.

Every rule rewrites a word into another word presenting the same
surface.  Each is a pure function raising NotApplicable when its
pattern is absent, so a failed match can never corrupt a word.
"""

from surfword import (
    NotApplicable,
    cancel,
    fold_concord,
    glue_singles,
    interleave_to_handle,
    parse,
    slide_block,
    transpose_discord,
)


def show(title: str, before: str, after) -> None:
    print(f"{title:24} {before!r:20} -> {after.render()!r}")


def main() -> None:
    show("cancel", "x a a' y", cancel(parse("x a a' y"), 1))
    show("transpose_discord", "a x y a'", transpose_discord(parse("a x y a'"), "a", 2))
    show("fold_concord", "a b a' b", fold_concord(parse("a b a' b"), "b"))
    show("slide_block", "a a c d", slide_block(parse("a a c d"), 0, 3))
    show(
        "interleave_to_handle",
        "a c b a' c' b'",
        interleave_to_handle(parse("a c b a' c' b'"), "a", "b"),
    )
    show("glue_singles", "x y", glue_singles(parse("x y"), 0))

    print()
    print("A rule refuses sites where its pattern does not hold:")
    try:
        cancel(parse("a a"), 0)
    except NotApplicable as exc:
        print(f"  cancel on a concord pair: {exc}")
    try:
        interleave_to_handle(parse("a a' b b'"), "a", "b")
    except NotApplicable as exc:
        print(f"  interleave without interleaving: {exc}")


if __name__ == "__main__":
    main()
