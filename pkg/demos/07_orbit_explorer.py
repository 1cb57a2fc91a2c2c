"""Exploring the reach of the rewrite rules by breadth-first search.

bfs_orbit collects every word reachable from a start word, up to
rotation and inversion.  No rule lengthens a word, so the search is
finite; all members must present the same surface, which makes orbits a
strong consistency check on the whole rule set.
"""

from surfword import bfs_orbit, classify, parse


def explore(text: str) -> None:
    word = parse(text)
    orbit = bfs_orbit(word, max_length=8, max_states=5_000)
    members = sorted(orbit, key=lambda w: (len(w), w.render()))
    print(f"orbit of {text!r}: {len(orbit)} words (truncated={orbit.truncated})")
    for member in members:
        print(f"  {member.render()!r:24} {classify(member).describe()}")
    print()


def main() -> None:
    explore("a a'")
    explore("a b a b")
    explore("a x a' y")

    # the projective-plane square reaches its two-letter form
    orbit = bfs_orbit(parse("a b a b"))
    print("a b a b reaches the crosscap word a a b' b:", parse("a a b' b") in orbit)


if __name__ == "__main__":
    main()
