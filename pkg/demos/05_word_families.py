"""Three classical word families and where they land.

Family iii reads a1..an an..a1, family iv reads
a1..a(n-1) an a1'..a(n-1)' an, and both give the nonorientable surface
of genus n.  Family v reads a1..an a1'..an' and gives the orientable
surface of genus n // 2, collapsing to the sphere at n = 1.
"""

from surfword import classify, family_iii, family_iv, family_v


def main() -> None:
    for n in range(1, 7):
        print(f"n = {n}")
        for name, word in (
            ("iii", family_iii(n)),
            ("iv ", family_iv(n)),
            ("v  ", family_v(n)),
        ):
            print(f"  {name} {word.render():44} => {classify(word).describe()}")
        print()


if __name__ == "__main__":
    main()
