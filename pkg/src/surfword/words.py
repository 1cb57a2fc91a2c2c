"""Cyclic edge words of combinatorial surface polygons.

A compact surface can be presented as a polygon with labeled, directed
edges that are glued in pairs.  Reading the labels around the polygon
boundary yields an *edge word* in which every label appears exactly once
or exactly twice: twice for a glued pair of edges, once for a free edge
that remains on the surface boundary.  A trailing apostrophe marks an
edge traversed against its direction, so the torus is ``a b a' b'`` and
the projective plane is ``a a``.

Words are immutable values with cyclic reading semantics: rotating a
word, or inverting it (reading backwards with all directions flipped),
presents the same polygon.  Two occurrences of a paired label either
point the same way around the polygon (*concord*, equal inversion
flags) or opposite ways (*discord*).  Concord pairs are exactly what
makes a surface nonorientable.

Grammar accepted by :meth:`Word.parse`:

    WORD    := TOKEN (WS+ TOKEN)* | COMPACT | ""
    TOKEN   := NAME APOS?
    NAME    := [a-z][0-9]*
    COMPACT := (LETTER APOS?)+          with LETTER := [a-z]

The compact form (no whitespace at all, as in ``aba'b'``) is only
available while every label is a single character.  Rendering always
produces the whitespace separated form.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from string import ascii_lowercase
from typing import Iterator

__all__ = [
    "CONCORD",
    "DISCORD",
    "SINGLE",
    "MultiplicityError",
    "PairEntry",
    "PairingTable",
    "SignedLetter",
    "Word",
    "WordSyntaxError",
    "fresh_label",
    "label_sequence",
    "parse",
]

SINGLE = "single"
CONCORD = "concord"
DISCORD = "discord"

_NAME_RE = re.compile(r"[a-z][0-9]*")
_TOKEN_RE = re.compile(r"[a-z][0-9]*'?")
_COMPACT_RE = re.compile(r"(?:[a-z]'?)+")
_COMPACT_SPLIT_RE = re.compile(r"[a-z]'?")


class WordSyntaxError(ValueError):
    """Raised for text that does not conform to the word grammar."""


class MultiplicityError(ValueError):
    """Raised when some label occurs more than twice in a word."""


@dataclass(frozen=True, slots=True)
class SignedLetter:
    """An edge label together with a direction flag.

    ``inverted=True`` means the edge is traversed against its own
    direction and renders with a trailing apostrophe.

    >>> SignedLetter("a", True).token()
    "a'"
    """

    label: str
    inverted: bool = False

    def __post_init__(self) -> None:
        if not _NAME_RE.fullmatch(self.label):
            raise WordSyntaxError(f"bad edge label {self.label!r}")

    def inverse(self) -> "SignedLetter":
        return SignedLetter(self.label, not self.inverted)

    def token(self) -> str:
        return self.label + ("'" if self.inverted else "")

    def __str__(self) -> str:
        return self.token()


@dataclass(frozen=True, slots=True)
class PairEntry:
    """Occurrence data for one label: positions and pairing character."""

    label: str
    positions: tuple[int, ...]
    character: str


class PairingTable:
    """Per-label occurrence data for a word, in first-occurrence order.

    ``character(label)`` is one of :data:`SINGLE`, :data:`CONCORD` or
    :data:`DISCORD`.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries: dict[str, PairEntry]):
        self._entries = dict(entries)

    def __getitem__(self, label: str) -> PairEntry:
        return self._entries[label]

    def __contains__(self, label: str) -> bool:
        return label in self._entries

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PairingTable):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self) -> str:
        items = ", ".join(f"{e.label}: {e.character}@{e.positions}" for e in self.entries())
        return f"<PairingTable {items}>"

    def labels(self) -> tuple[str, ...]:
        return tuple(self._entries)

    def entries(self) -> tuple[PairEntry, ...]:
        return tuple(self._entries.values())

    def positions(self, label: str) -> tuple[int, ...]:
        return self._entries[label].positions

    def character(self, label: str) -> str:
        return self._entries[label].character

    def with_character(self, character: str) -> tuple[str, ...]:
        return tuple(label for label, e in self._entries.items() if e.character == character)

    def has_concord(self) -> bool:
        return any(e.character == CONCORD for e in self._entries.values())

    def interleaved(self, first: str, second: str) -> bool:
        """True when the two pairs alternate around the cycle.

        Non-pair labels never interleave.  Alternation is checked on
        stored positions, which is equivalent to the cyclic statement.
        """
        if first == second:
            return False
        a = self._entries[first]
        b = self._entries[second]
        if len(a.positions) != 2 or len(b.positions) != 2:
            return False
        i, j = a.positions
        k1, k2 = b.positions
        return (i < k1 < j) != (i < k2 < j)


def _tokenize(text: str) -> list[str]:
    stripped = text.strip()
    if not stripped:
        return []
    if any(ch.isspace() for ch in stripped):
        tokens = stripped.split()
        for tok in tokens:
            if not _TOKEN_RE.fullmatch(tok):
                raise WordSyntaxError(f"bad token {tok!r}")
        return tokens
    if _TOKEN_RE.fullmatch(stripped):
        return [stripped]
    if _COMPACT_RE.fullmatch(stripped):
        return _COMPACT_SPLIT_RE.findall(stripped)
    raise WordSyntaxError(f"bad token {stripped!r}")


@dataclass(frozen=True, slots=True)
class Word:
    """An edge word: an immutable sequence of signed letters.

    Equality and hashing are elementwise on the stored sequence; use
    :meth:`cyclic_equal` for equality as cyclic words.

    >>> Word.parse("aba'b'").render()
    "a b a' b'"
    >>> len(Word.parse("a1 a1"))
    2
    >>> Word.parse("a b").cyclic_equal(Word.parse("b a"))
    True
    """

    letters: tuple[SignedLetter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        counts: dict[str, int] = {}
        for letter in self.letters:
            counts[letter.label] = counts.get(letter.label, 0) + 1
        bad = sorted(label for label, c in counts.items() if c > 2)
        if bad:
            raise MultiplicityError(f"labels occur more than twice: {', '.join(bad)}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        tokens = _tokenize(text)
        return cls(tuple(SignedLetter(t.rstrip("'"), t.endswith("'")) for t in tokens))

    def render(self) -> str:
        return " ".join(letter.token() for letter in self.letters)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Word({self.render()!r})"

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[SignedLetter]:
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index])
        return self.letters[index]

    def labels(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for letter in self.letters:
            seen.setdefault(letter.label)
        return tuple(seen)

    def rotate(self, k: int) -> "Word":
        """Cyclic left rotation by ``k`` positions.

        >>> str(Word.parse("a b a' b'").rotate(1))
        "b a' b' a"
        """
        n = len(self.letters)
        if n == 0:
            return self
        k %= n
        return Word(self.letters[k:] + self.letters[:k])

    def invert(self) -> "Word":
        """Reverse the reading direction: reverse order, flip all flags.

        >>> str(Word.parse("a b").invert())
        "b' a'"
        """
        return Word(tuple(letter.inverse() for letter in reversed(self.letters)))

    def pairing(self) -> PairingTable:
        positions: dict[str, list[int]] = {}
        for idx, letter in enumerate(self.letters):
            positions.setdefault(letter.label, []).append(idx)
        entries: dict[str, PairEntry] = {}
        for label, where in positions.items():
            if len(where) == 1:
                character = SINGLE
            elif self.letters[where[0]].inverted == self.letters[where[1]].inverted:
                character = CONCORD
            else:
                character = DISCORD
            entries[label] = PairEntry(label, tuple(where), character)
        return PairingTable(entries)

    def canonical_key(self, up_to_relabel: bool = False) -> tuple:
        """A key equal for two words iff they are cyclically equal."""
        return _canonical_key(self, bool(up_to_relabel))

    def cyclic_equal(self, other: "Word", up_to_relabel: bool = False) -> bool:
        """Equality up to rotation and inversion, optionally up to a
        direction-preserving bijective relabeling.

        >>> Word.parse("a a").cyclic_equal(Word.parse("b b"))
        False
        >>> Word.parse("a a").cyclic_equal(Word.parse("b b"), up_to_relabel=True)
        True
        """
        if len(self) != len(other):
            return False
        flag = bool(up_to_relabel)
        return _canonical_key(self, flag) == _canonical_key(other, flag)


@lru_cache(maxsize=None)
def _canonical_key(word: Word, up_to_relabel: bool) -> tuple:
    n = len(word)
    if n == 0:
        return ()
    best = None
    for base in (word.letters, word.invert().letters):
        for r in range(n):
            rot = base[r:] + base[:r]
            if up_to_relabel:
                ids: dict[str, int] = {}
                enc = tuple((ids.setdefault(l.label, len(ids)), l.inverted) for l in rot)
            else:
                enc = tuple((l.label, l.inverted) for l in rot)
            if best is None or enc < best:
                best = enc
    return best


def parse(text: str) -> Word:
    """Parse ``text`` into a :class:`Word` (see module grammar)."""
    return Word.parse(text)


def label_sequence() -> Iterator[str]:
    """Yield ``a .. z, a1 .. z1, a2 ..``: the label naming sequence."""
    for suffix in itertools.count():
        tail = "" if suffix == 0 else str(suffix)
        for ch in ascii_lowercase:
            yield ch + tail


def fresh_label(word: Word) -> str:
    """First label from :func:`label_sequence` unused in ``word``."""
    used = {letter.label for letter in word}
    for candidate in label_sequence():
        if candidate not in used:
            return candidate
    raise AssertionError("unreachable")
