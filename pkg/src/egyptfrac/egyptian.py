"""Egyptian fractions: sets of distinct signed unit fractions.

A term at index ``j`` stands for ``coefficient / (j + 1)``, so index 1 is the
unit fraction 1/2.  This is the same indexing digit vectors use, which makes
``from_digits`` a literal relabelling.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .digitvec import AnyDigitVec, DigitVec2, DigitVec3, agreement, vec_add2, vec_add3
from .errors import DomainError, ParseError, PreconditionError, ResourceLimitError
from .exact import Rational, format_rational

__all__ = [
    "EgyptianFraction",
    "LinearityReport",
    "MAX_REWRITE_STEPS",
    "add_disjoint",
    "add_general",
    "check_linear_z2",
    "check_linear_z3",
    "disjointify",
    "fib_split",
    "from_digits",
    "greedy_expand",
    "is_equivalent",
    "sigma",
    "sub_disjoint",
    "sub_general",
    "to_digits",
]

MAX_REWRITE_STEPS = 10_000


@dataclass(frozen=True)
class EgyptianFraction:
    """Terms as ``(index, coefficient)`` pairs, ascending by index.

    ``signed`` must be set for any negative coefficient to be accepted.
    """

    terms: tuple[tuple[int, int], ...] = ()
    signed: bool = False

    def __post_init__(self):
        seen = {}
        for j, c in self.terms:
            j, c = int(j), int(c)
            if j < 1:
                raise DomainError(f"index {j} < 1 (denominator must be >= 2)")
            if c not in (-1, 0, 1):
                raise DomainError(f"coefficient {c} at index {j} not in {{-1, 0, 1}}")
            if c == -1 and not self.signed:
                raise DomainError("negative term in a standard Egyptian fraction")
            if j in seen:
                raise DomainError(f"duplicate unit fraction 1/{j + 1}")
            seen[j] = c
        object.__setattr__(
            self, "terms", tuple(sorted((j, c) for j, c in seen.items() if c))
        )

    @classmethod
    def from_denominators(
        cls, denominators: Mapping[int, int] | Iterable[int], signed: Optional[bool] = None
    ) -> "EgyptianFraction":
        """Build from ``{n: coefficient}`` or an iterable of positive denominators."""
        if isinstance(denominators, Mapping):
            items = dict(denominators)
        else:
            items = {}
            for n in denominators:
                if n in items:
                    raise DomainError(f"duplicate unit fraction 1/{n}")
                items[n] = 1
        if signed is None:
            signed = any(c < 0 for c in items.values())
        return cls(tuple((n - 1, c) for n, c in items.items()), signed)

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self.terms)

    def denominators(self) -> dict[int, int]:
        return {j + 1: c for j, c in self.terms}

    def has_negative(self) -> bool:
        return any(c < 0 for _, c in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __neg__(self) -> "EgyptianFraction":
        return EgyptianFraction(tuple((j, -c) for j, c in self.terms), True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, (j, c) in enumerate(self.terms):
            unit = f"1/{j + 1}"
            if k == 0:
                parts.append(unit if c > 0 else f"-{unit}")
            else:
                parts.append(f"+ {unit}" if c > 0 else f"- {unit}")
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "EgyptianFraction":
        """Parse ``"1/5+1/20-1/30"``; whitespace is ignored, ``"0"`` is empty."""
        s = re.sub(r"\s+", "", text)
        if s == "0":
            return cls()
        if not s:
            raise ParseError("empty Egyptian fraction", text, 0)
        pos = 0
        terms: dict[int, int] = {}
        term_re = re.compile(r"([+-]?)1/(\d+)")
        while pos < len(s):
            m = term_re.match(s, pos)
            if m is None or (pos > 0 and not m.group(1)):
                raise ParseError("expected a unit fraction '1/n'", s, pos)
            n = int(m.group(2))
            if n < 2:
                raise ParseError(f"denominator {n} < 2", s, m.start(2))
            if n in terms:
                raise ParseError(f"repeated denominator {n}", s, m.start(2))
            terms[n] = -1 if m.group(1) == "-" else 1
            pos = m.end()
        return cls.from_denominators(terms)


def from_digits(v: AnyDigitVec) -> EgyptianFraction:
    return EgyptianFraction(
        tuple((j, d) for j, d in enumerate(v.digits, start=1)),
        signed=isinstance(v, DigitVec3),
    )


def to_digits(e: EgyptianFraction, base: Optional[int] = None) -> AnyDigitVec:
    """Inverse of :func:`from_digits`."""
    if base is None:
        base = 3 if e.signed else 2
    if base == 2 and e.has_negative():
        raise DomainError("signed fraction has no Z2 digit vector")
    length = e.terms[-1][0] if e.terms else 0
    coeffs = e.coefficients
    ds = tuple(coeffs.get(j, 0) for j in range(1, length + 1))
    return DigitVec2(ds) if base == 2 else DigitVec3(ds)


def sigma(e: EgyptianFraction) -> Rational:
    return sum((Fraction(c, j + 1) for j, c in e.terms), Fraction(0))


def fib_split(k: int) -> EgyptianFraction:
    """2/(2k+1) = 1/(k+1) + 1/((k+1)(2k+1))."""
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    return EgyptianFraction.from_denominators([k + 1, (k + 1) * (2 * k + 1)])


def greedy_expand(x: Rational) -> EgyptianFraction:
    """Fibonacci's greedy expansion of a proper fraction."""
    x = Fraction(x)
    if not 0 < x < 1:
        raise DomainError(f"greedy expansion needs 0 < p/q < 1, got {x}")
    dens = []
    while x:
        p, q = x.numerator, x.denominator
        n = -(-q // p)
        dens.append(n)
        x -= Fraction(1, n)
    return EgyptianFraction.from_denominators(dens)


def _require_disjoint(x: EgyptianFraction, y: EgyptianFraction) -> None:
    clash = sorted(set(x.coefficients) & set(y.coefficients))
    if clash:
        raise PreconditionError(
            "supports overlap at denominators " + ", ".join(str(j + 1) for j in clash)
        )


def add_disjoint(x: EgyptianFraction, y: EgyptianFraction) -> EgyptianFraction:
    _require_disjoint(x, y)
    return EgyptianFraction(x.terms + y.terms, x.signed or y.signed)


def sub_disjoint(x: EgyptianFraction, y: EgyptianFraction) -> EgyptianFraction:
    _require_disjoint(x, y)
    return EgyptianFraction(x.terms + (-y).terms, True)


def _spread(counts: Counter) -> dict[int, int]:
    """Keep one copy of every term and re-expand the surplus over unused denominators.

    Greedy with exclusion: take the smallest unused n with 1/n <= remainder.
    The chosen n strictly increase, and past the largest used index this is
    the ordinary greedy algorithm, so it terminates.
    """
    out = {n: (1 if c > 0 else -1) for n, c in counts.items() if c}
    used = set(out)
    for s in (1, -1):
        rest = sum((Fraction(s * c - 1, n) for n, c in counts.items() if s * c > 1), Fraction(0))
        n = 2
        while rest:
            n = max(n, -(-rest.denominator // rest.numerator))
            while n in used:
                n += 1
            out[n] = s
            used.add(n)
            rest -= Fraction(1, n)
    return out


def _normalize(counts: Counter, what: str) -> dict[int, int]:
    """Rewrite a multiset of signed unit fractions until every coefficient is +-1.

    ``counts`` maps denominator -> net integer coefficient.  A doubled term
    2/n becomes 1/(n/2) for even n and the Fibonacci split for odd n; 2/2
    uses the splitting identity 1/2 = 1/3 + 1/6 on one copy.  Totals of 1 or
    more can make these rules cycle; on the first repeated state the surplus
    is handed to :func:`_spread` instead.
    """
    counts = Counter({n: c for n, c in counts.items() if c})
    seen = set()
    for _ in range(MAX_REWRITE_STEPS):
        heavy = [n for n, c in counts.items() if abs(c) >= 2]
        if not heavy:
            return dict(counts)
        state = frozenset(counts.items())
        if state in seen:
            return _spread(counts)
        seen.add(state)
        n = min(heavy)
        s = 1 if counts[n] > 0 else -1
        if n == 2:
            counts[n] -= s
            counts[n + 1] += s
            counts[n * (n + 1)] += s
        elif n % 2 == 0:
            counts[n] -= 2 * s
            counts[n // 2] += s
        else:
            k = (n - 1) // 2
            counts[n] -= 2 * s
            counts[k + 1] += s
            counts[(k + 1) * n] += s
        counts = Counter({m: c for m, c in counts.items() if c})
    raise ResourceLimitError(
        f"{what}: no distinct-term form within {MAX_REWRITE_STEPS} rewrites",
        partial=dict(counts),
    )


def add_general(x: EgyptianFraction, y: EgyptianFraction) -> EgyptianFraction:
    if x.has_negative() or y.has_negative():
        raise DomainError("add_general takes standard fractions; use sub_general")
    counts = Counter(x.denominators())
    counts.update(y.denominators())
    return EgyptianFraction.from_denominators(_normalize(counts, "add_general"), False)


def sub_general(x: EgyptianFraction, y: EgyptianFraction) -> EgyptianFraction:
    counts = Counter(x.denominators())
    counts.subtract(y.denominators())
    return EgyptianFraction.from_denominators(_normalize(counts, "sub_general"), True)


def is_equivalent(x: EgyptianFraction, y: EgyptianFraction) -> bool:
    return sigma(x) == sigma(y)


def disjointify(
    x: EgyptianFraction, y: EgyptianFraction, max_steps: int = MAX_REWRITE_STEPS
) -> tuple[EgyptianFraction, EgyptianFraction]:
    """Re-expand ``y`` by repeated splitting until it shares no term with ``x``."""
    if x.has_negative() or y.has_negative():
        raise DomainError("disjointify takes standard fractions")
    taken = set(x.denominators())
    ys = Counter(y.denominators())
    for _ in range(max_steps):
        bad = [n for n, c in ys.items() if c and (c > 1 or n in taken)]
        if not bad:
            return x, EgyptianFraction.from_denominators(dict(ys), False)
        n = min(bad)
        ys[n] -= 1
        ys[n + 1] += 1
        ys[n * (n + 1)] += 1
        ys = Counter({m: c for m, c in ys.items() if c})
    raise ResourceLimitError(
        f"disjointify: still overlapping after {max_steps} splits", partial=dict(ys)
    )


@dataclass(frozen=True)
class LinearityReport:
    """Outcome of comparing sigma(h(x)) + sigma(h(y)) with sigma(h(x + y))."""

    lhs: Rational
    rhs: Rational
    z: AnyDigitVec
    linear: bool
    sigma_z: Optional[Rational] = field(default=None)

    def lines(self) -> list[str]:
        z = "(" + ",".join(str(d) for d in self.z.digits) + ")"
        out = [
            f"lhs={format_rational(self.lhs)}",
            f"rhs={format_rational(self.rhs)}",
            f"z={z}",
        ]
        if self.sigma_z is not None:
            out.append(f"sigma_z={format_rational(self.sigma_z)}")
        out.append(f"linear={'yes' if self.linear else 'no'}")
        return out


def check_linear_z2(x: DigitVec2, y: DigitVec2) -> LinearityReport:
    lhs = sigma(from_digits(x)) + sigma(from_digits(y))
    rhs = sigma(from_digits(vec_add2(x, y)))
    return LinearityReport(lhs, rhs, agreement(x, y), lhs == rhs)


def check_linear_z3(x: DigitVec3, y: DigitVec3) -> LinearityReport:
    lhs = sigma(from_digits(x)) + sigma(from_digits(y))
    rhs = sigma(from_digits(vec_add3(x, y)))
    z = agreement(x, y)
    return LinearityReport(lhs, rhs, z, lhs == rhs, sigma(from_digits(z)))
