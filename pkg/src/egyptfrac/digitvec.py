"""Finite-support digit vectors over Z2 = {0, 1} and Z3 = {-1, 0, 1}.

Entry ``j`` (1-based) is stored at ``digits[j - 1]``.  Trailing zeros are
trimmed on construction so that structural equality is value equality.
Addition is componentwise with no carry between indices: mod 2 for
:class:`DigitVec2`, balanced mod 3 for :class:`DigitVec3`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import ClassVar, Iterator, Union

from .errors import DomainError, ParseError

__all__ = [
    "DigitVec",
    "DigitVec2",
    "DigitVec3",
    "agreement",
    "balanced_mod3",
    "is_disjoint",
    "vec_add2",
    "vec_add3",
    "vec_scale3",
]


def balanced_mod3(n: int) -> int:
    """Reduce an integer to its representative in {-1, 0, 1}."""
    r = n % 3
    return -1 if r == 2 else r


@dataclass(frozen=True)
class DigitVec:
    digits: tuple[int, ...] = ()

    BASE: ClassVar[int] = 0
    ALPHABET: ClassVar[frozenset[int]] = frozenset()
    SYMBOLS: ClassVar[dict[int, str]] = {}

    def __post_init__(self):
        ds = tuple(int(d) for d in self.digits)
        for pos, d in enumerate(ds, start=1):
            if d not in self.ALPHABET:
                raise DomainError(
                    f"digit {d} at index {pos} not in {sorted(self.ALPHABET)}"
                )
        end = len(ds)
        while end and ds[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "digits", ds[:end])

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __getitem__(self, j: int) -> int:
        """Entry at 1-based index ``j``; zero beyond the stored support."""
        if j < 1:
            raise IndexError("digit indices start at 1")
        return self.digits[j - 1] if j <= len(self.digits) else 0

    def support(self) -> list[int]:
        return [j for j, d in enumerate(self.digits, start=1) if d]

    def is_zero(self) -> bool:
        return not self.digits

    def __str__(self) -> str:
        return "".join(self.SYMBOLS[d] for d in self.digits)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.digits!r})"

    @classmethod
    def parse(cls, text: str) -> "DigitVec":
        inverse = {s: d for d, s in cls.SYMBOLS.items()}
        out = []
        for pos, ch in enumerate(text):
            if ch not in inverse:
                raise ParseError(f"invalid base-{cls.BASE} digit {ch!r}", text, pos)
            out.append(inverse[ch])
        return cls(tuple(out))

    @classmethod
    def enumerate(cls, length: int) -> Iterator["DigitVec"]:
        """All vectors supported in 1..length, in lexicographic digit order."""
        for ds in product(sorted(cls.ALPHABET), repeat=length):
            yield cls(ds)


class DigitVec2(DigitVec):
    BASE = 2
    ALPHABET = frozenset({0, 1})
    SYMBOLS = {0: "0", 1: "1"}

    def __add__(self, other: "DigitVec2") -> "DigitVec2":
        return vec_add2(self, other)


class DigitVec3(DigitVec):
    BASE = 3
    ALPHABET = frozenset({-1, 0, 1})
    SYMBOLS = {-1: "T", 0: "0", 1: "1"}

    def __add__(self, other: "DigitVec3") -> "DigitVec3":
        return vec_add3(self, other)

    def __neg__(self) -> "DigitVec3":
        return vec_scale3(-1, self)


AnyDigitVec = Union[DigitVec2, DigitVec3]


def _pairs(x: DigitVec, y: DigitVec):
    n = max(len(x), len(y))
    return zip(x.digits + (0,) * (n - len(x)), y.digits + (0,) * (n - len(y)))


def _same_alphabet(x: DigitVec, y: DigitVec) -> None:
    if type(x) is not type(y):
        raise DomainError(
            f"mixed alphabets: {type(x).__name__} and {type(y).__name__}"
        )


def vec_add2(x: DigitVec2, y: DigitVec2) -> DigitVec2:
    return DigitVec2(tuple((a + b) % 2 for a, b in _pairs(x, y)))


def vec_add3(x: DigitVec3, y: DigitVec3) -> DigitVec3:
    return DigitVec3(tuple(balanced_mod3(a + b) for a, b in _pairs(x, y)))


def vec_scale3(c: int, x: DigitVec3) -> DigitVec3:
    if c not in (-1, 0, 1):
        raise DomainError(f"scalar {c} not in Z3")
    return DigitVec3(tuple(c * d for d in x.digits))


def agreement(x: AnyDigitVec, y: AnyDigitVec) -> AnyDigitVec:
    """Vector marking the indices where both inputs carry the same nonzero digit."""
    _same_alphabet(x, y)
    return type(x)(tuple(a if a == b else 0 for a, b in _pairs(x, y)))


def is_disjoint(x: AnyDigitVec, y: AnyDigitVec) -> bool:
    _same_alphabet(x, y)
    return all(a * b == 0 for a, b in _pairs(x, y))
