"""Reduced words in the free product (R/Z) * (R/Z).

Letters are ``(axis, value)`` pairs with ``axis`` in ``{"H", "V"}`` and an
exact rational value (see ``rational``).  With the default modulus of 1 the
values are residues in ``[0, 1)``; passing ``modulus=None`` gives the free
product R * R, which is useful for checking path identities before
anything is thrown away mod 1.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from .rational import RAT_TYPES, Rat
from typing import Iterable, Optional, Sequence, Tuple

H = "H"
V = "V"
AXES = (H, V)

Letter = Tuple[str, Rat]


def as_rat(value) -> Rat:
    """Exact rational from an int, a rational or a ``"p/q"`` string.

    Floats are refused: they would silently bring rounding into an exact
    computation.
    """
    if isinstance(value, RAT_TYPES):
        return Rat(value)
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, int):
        return Rat(value)
    if isinstance(value, str):
        text = value.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
            raise ValueError(f"not an exact rational: {value!r}")
        return Rat(text)
    raise TypeError(f"unsupported numeric type {type(value).__name__}: {value!r}")


def fmt_rat(q: Rat) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _norm(value: Rat, modulus: Optional[Rat]) -> Rat:
    return value % modulus if modulus is not None else value


@dataclass(frozen=True)
class GroupWord:
    letters: Tuple[Letter, ...] = ()
    modulus: Optional[Rat] = Rat(1)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def append(self, axis: str, value) -> "GroupWord":
        return reduce([(axis, value)], modulus=self.modulus, start=self)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return concat(self, other)

    def inverse(self) -> "GroupWord":
        return invert(self)

    def last(self) -> Optional[Letter]:
        return self.letters[-1] if self.letters else None

    def __str__(self) -> str:
        return format_word(self)


def reduce(
    raw: Iterable[Tuple[str, object]],
    modulus: Optional[Rat] = Rat(1),
    start: Optional[GroupWord] = None,
) -> GroupWord:
    """Normal form of a product of letters, merging on the fly.

    Same-axis neighbours are added, zero letters disappear, and the
    merge can cascade backwards through the word.
    """
    stack = list(start.letters) if start is not None else []
    for axis, value in raw:
        if axis not in AXES:
            raise ValueError(f"bad axis {axis!r}")
        q = _norm(as_rat(value), modulus)
        if stack and stack[-1][0] == axis:
            q = _norm(stack.pop()[1] + q, modulus)
        if q != 0:
            stack.append((axis, q))
    return GroupWord(tuple(stack), modulus)


def concat(a: GroupWord, b: GroupWord) -> GroupWord:
    return reduce(b.letters, modulus=a.modulus, start=a)


def invert(w: GroupWord) -> GroupWord:
    return reduce(((ax, -q) for ax, q in reversed(w.letters)), modulus=w.modulus)


def word_length(w: GroupWord) -> int:
    return len(w.letters)


def distance(x: GroupWord, y: GroupWord) -> int:
    """Word metric: length of the reduced form of ``x * y^-1``."""
    return word_length(concat(x, invert(y)))


def basepoint(k: int, beta=Rat(1, 2)) -> GroupWord:
    """The far-away reference word ``(h(-beta) v(-beta))^k``."""
    beta = as_rat(beta) % 1
    if beta == 0:
        raise ValueError("basepoint residue must be nonzero mod 1")
    if k < 1:
        raise ValueError("k must be positive")
    return reduce([(H, -beta), (V, -beta)] * k)


def identity(modulus: Optional[Rat] = Rat(1)) -> GroupWord:
    return GroupWord((), modulus)


_LETTER_RE = re.compile(r"\s*([hvHV])\(\s*([+-]?\d+(?:/\d+)?)\s*\)\s*")


def parse_word(text: str, modulus: Optional[Rat] = Rat(1)) -> GroupWord:
    """Parse ``h(1/3) v(-1/2) h(2)``; ``e`` or an empty string is the identity."""
    text = text.strip()
    if text in ("", "e"):
        return identity(modulus)
    raw = []
    pos = 0
    while pos < len(text):
        m = _LETTER_RE.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse word at {text[pos:]!r}")
        raw.append((m.group(1).upper(), Rat(m.group(2))))
        pos = m.end()
    return reduce(raw, modulus=modulus)


def parse_raw(text: str) -> list:
    """Parse a letter sequence without reducing it."""
    text = text.strip()
    if text in ("", "e"):
        return []
    out = []
    pos = 0
    while pos < len(text):
        m = _LETTER_RE.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse word at {text[pos:]!r}")
        out.append((m.group(1).upper(), Rat(m.group(2))))
        pos = m.end()
    return out


def format_word(w: GroupWord) -> str:
    if not w.letters:
        return "e"
    return " ".join(f"{ax.lower()}({fmt_rat(q)})" for ax, q in w.letters)


def commutator(t1, t2) -> list:
    """Raw boundary path of a ``t1 x t2`` rectangle from its lower-left corner."""
    t1, t2 = as_rat(t1), as_rat(t2)
    return [(H, t1), (V, t2), (H, -t1), (V, -t2)]
