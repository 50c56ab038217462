"""Binary and balanced-ternary positional numerals.

Fractional digit strings share :mod:`digitvec`'s indexing: digit ``j`` has
weight ``base**-j``.  Integer parts are kept least-significant first.
Expansions that end in a repeating digit are held symbolically as a finite
prefix plus one tail digit, never as floats.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Optional, Sequence, Union

from .digitvec import AnyDigitVec, DigitVec, DigitVec2, DigitVec3
from .errors import DomainError, NotFinitelyRepresentableError, ParseError
from .exact import Rational

__all__ = [
    "Expansion",
    "NumeralString",
    "balanced_ternary_to_int",
    "dual_representations",
    "format_numeral",
    "frac_value",
    "int_to_balanced_ternary",
    "parse_numeral",
    "value_to_digits",
]

_VEC = {2: DigitVec2, 3: DigitVec3}
_SYMBOL = {2: {0: "0", 1: "1"}, 3: {-1: "T", 0: "0", 1: "1"}}


def _check_base(base: int) -> None:
    if base not in _VEC:
        raise DomainError(f"base must be 2 or 3 (balanced), got {base}")


def int_to_balanced_ternary(n: int) -> tuple[int, ...]:
    """Digits of ``n`` in balanced ternary, least significant first."""
    out = []
    while n != 0:
        r = n % 3  # Python's % is already in {0, 1, 2} for negative n
        d = -1 if r == 2 else r
        out.append(d)
        n = (n - d) // 3
    return tuple(out)


def balanced_ternary_to_int(digits: Sequence[int]) -> int:
    value = 0
    for pos in range(len(digits) - 1, -1, -1):
        d = digits[pos]
        if d not in (-1, 0, 1):
            raise ParseError(f"invalid balanced-ternary digit {d!r}", position=pos)
        value = 3 * value + d
    return value


def _int_to_binary(n: int) -> tuple[int, ...]:
    if n < 0:
        raise DomainError("binary integer part must be non-negative")
    out = []
    while n:
        out.append(n & 1)
        n >>= 1
    return tuple(out)


def frac_value(v: Union[AnyDigitVec, Sequence[int]], base: Optional[int] = None) -> Rational:
    """Exact value of ``[0.v1 v2 ...]_base``."""
    if base is None:
        if not isinstance(v, DigitVec):
            raise DomainError("base is required for a bare digit sequence")
        base = v.BASE
    _check_base(base)
    digits = v.digits if isinstance(v, DigitVec) else tuple(v)
    num = 0
    for d in digits:
        num = num * base + d
    return Fraction(num, base ** len(digits))


def value_to_digits(x: Rational, base: int, max_len: int = 64) -> AnyDigitVec:
    """The finite expansion of ``x``; base 2 needs x in [0, 1), base 3 x in [-1/2, 1/2]."""
    _check_base(base)
    x = Fraction(x)
    if base == 2 and not 0 <= x < 1:
        raise DomainError(f"{x} outside [0, 1)")
    if base == 3 and not -Fraction(1, 2) <= x <= Fraction(1, 2):
        raise DomainError(f"{x} outside [-1/2, 1/2]")
    out = []
    while x:
        if len(out) == max_len:
            raise NotFinitelyRepresentableError(
                f"no finite base-{base} expansion within {max_len} digits"
            )
        x *= base
        if base == 2:
            d = 1 if x >= 1 else 0
        else:
            d = 1 if x > Fraction(1, 2) else (-1 if x < -Fraction(1, 2) else 0)
            # 3x = +-1/2 only for non-triadic x; either choice loops until max_len
        out.append(d)
        x -= d
    return _VEC[base](tuple(out))


@dataclass(frozen=True)
class Expansion:
    """``[0.prefix tail tail tail ...]``; ``tail == 0`` means the expansion terminates."""

    base: int
    prefix: tuple[int, ...]
    tail: int = 0

    def digit(self, j: int) -> int:
        return self.prefix[j - 1] if j <= len(self.prefix) else self.tail

    def digits(self, n: int) -> tuple[int, ...]:
        """First ``n`` digits (the repeating tail is expanded as needed)."""
        return tuple(self.digit(j) for j in range(1, n + 1))

    @property
    def finite(self) -> bool:
        return self.tail == 0

    def value(self) -> Rational:
        head = frac_value(self.prefix, self.base)
        # sum_{j>k} t * b^-j = t * b^-k / (b - 1)
        return head + Fraction(self.tail, (self.base - 1) * self.base ** len(self.prefix))

    def __str__(self) -> str:
        sym = _SYMBOL[self.base]
        body = "".join(sym[d] for d in self.prefix)
        if self.tail:
            body += f"({sym[self.tail]})"
        if not body:
            return f"[0]_{self.base}"
        return f"[0.{body}]_{self.base}"


def dual_representations(
    v: Union[AnyDigitVec, Rational], base: Optional[int] = None
) -> list[Expansion]:
    """Every expansion of a value whose digits are eventually constant.

    Accepts a finite digit vector or a Rational.  The terminating expansion,
    when there is one, comes first.  In base 2 the alternative ends in 1s.
    In balanced base 3 a terminating expansion is the only one; values
    with denominator 2*3^k instead have two, ending in 1s and in -1s.
    """
    if isinstance(v, DigitVec):
        base = v.BASE if base is None else base
        x = frac_value(v)
    else:
        if base is None:
            raise DomainError("base is required when passing a Rational")
        x = Fraction(v)
    _check_base(base)
    return list(_duals(x, base))


@lru_cache(maxsize=1 << 14)
def _duals(x: Fraction, base: int) -> tuple[Expansion, ...]:
    out: list[Expansion] = []
    den = x.denominator
    k = den.bit_length() - 1 if base == 2 else 0
    if base == 2:
        if not 0 <= x <= 1:
            raise DomainError(f"{x} outside [0, 1]")
        if den != 1 << k:
            return tuple(out)
        if x < 1:
            out.append(Expansion(2, value_to_digits(x, 2, k).digits))
        if x > 0:
            # drop the last 1 and let an infinite run of 1s make up for it
            head = x - Fraction(1, den)
            out.append(Expansion(2, _pad(value_to_digits(head, 2, k).digits, k), 1))
        return tuple(out)
    if not -Fraction(1, 2) <= x <= Fraction(1, 2):
        raise DomainError(f"{x} outside [-1/2, 1/2]")
    while den % 3 == 0:
        den //= 3
        k += 1
    if den == 1:
        return (Expansion(3, value_to_digits(x, 3, k).digits),)
    if den != 2:
        return tuple(out)
    for tail in (1, -1):
        head = x - Fraction(tail, 2 * 3**k)
        scaled = head * 3**k
        if abs(scaled) <= Fraction(3**k - 1, 2):
            ds = _pad(value_to_digits(head, 3, k).digits, k)
            out.append(Expansion(3, ds, tail))
    return tuple(out)


def _trim(ds: tuple[int, ...]) -> tuple[int, ...]:
    end = len(ds)
    while end and ds[end - 1] == 0:
        end -= 1
    return ds[:end]


def _pad(ds: tuple[int, ...], k: int) -> tuple[int, ...]:
    return ds + (0,) * (k - len(ds))


@dataclass(frozen=True)
class NumeralString:
    """``[a_k ... a_0 . f_1 f_2 ...]_base`` with ``int_digits`` least significant first."""

    base: int
    int_digits: tuple[int, ...] = ()
    frac_digits: tuple[int, ...] = ()

    def __post_init__(self):
        _check_base(self.base)
        allowed = set(_SYMBOL[self.base])
        for d in self.int_digits + self.frac_digits:
            if d not in allowed:
                raise DomainError(f"digit {d} not allowed in base {self.base}")
        object.__setattr__(self, "int_digits", _trim(tuple(self.int_digits)))
        object.__setattr__(self, "frac_digits", _trim(tuple(self.frac_digits)))

    def value(self) -> Rational:
        whole = 0
        for d in reversed(self.int_digits):
            whole = whole * self.base + d
        return whole + frac_value(self.frac_digits, self.base)

    @classmethod
    def from_value(cls, x: Rational, base: int, max_len: int = 64) -> "NumeralString":
        """Finite numeral for ``x``; the integer part absorbs what the fraction cannot."""
        _check_base(base)
        x = Fraction(x)
        if base == 2:
            whole = x.numerator // x.denominator
            return cls(2, _int_to_binary(whole), value_to_digits(x - whole, 2, max_len).digits)
        whole = round(x)  # leaves a remainder in [-1/2, 1/2]
        return cls(
            3,
            int_to_balanced_ternary(whole),
            value_to_digits(x - whole, 3, max_len).digits,
        )


_NUMERAL_RE = re.compile(r"\[([01T]*)(?:\.([01T]*))?\]_([23])")


def parse_numeral(text: str) -> NumeralString:
    s = text.strip()
    if not s.startswith("["):
        raise ParseError("numeral must start with '['", text, 0)
    close = s.find("]")
    if close < 0:
        raise ParseError("missing ']'", text, len(s))
    m = _NUMERAL_RE.fullmatch(s)
    if m is None:
        if not s[close + 1 :].startswith("_") or s[close + 2 :] not in ("2", "3"):
            raise ParseError("expected '_2' or '_3' after ']'", text, close + 1)
        for pos in range(1, close):
            if s[pos] not in "01T.":
                raise ParseError(f"invalid digit {s[pos]!r}", text, pos)
        raise ParseError("more than one '.'", text, s.index(".", s.index(".") + 1))
    int_part, frac_part, base_s = m.groups()
    base = int(base_s)
    if not int_part and frac_part is None:
        raise ParseError("no digits", text, 1)
    if frac_part is not None and not frac_part:
        raise ParseError("no digits after '.'", text, close)
    inverse = {c: d for d, c in _SYMBOL[base].items()}
    for pos, ch in enumerate(int_part + "." + (frac_part or ""), start=1):
        if ch != "." and ch not in inverse:
            raise ParseError(f"digit {ch!r} not allowed in base {base}", text, pos)
    ints = tuple(inverse[c] for c in reversed(int_part))
    fracs = tuple(inverse[c] for c in (frac_part or ""))
    return NumeralString(base, ints, fracs)


def format_numeral(n: NumeralString) -> str:
    sym = _SYMBOL[n.base]
    whole = "".join(sym[d] for d in reversed(n.int_digits)) or "0"
    text = whole
    if n.frac_digits:
        text += "." + "".join(sym[d] for d in n.frac_digits)
    return f"[{text}]_{n.base}"
