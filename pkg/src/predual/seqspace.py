"""Eventually-constant rational sequences and the l1 / l_inf / c0 operations on them."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import as_rational


class SpaceTag(enum.Enum):
    L1 = "l1"
    LINF = "linf"
    C0 = "c0"


class DomainError(ValueError):
    """An operation was applied outside the sequence space it is defined on."""


@dataclass(frozen=True)
class EcSeq:
    """Sequence equal to ``prefix[k]`` for ``k < len(prefix)`` and ``tail`` afterwards.

    Always stored canonically: trailing prefix entries equal to the tail are
    folded into it, so ``len(prefix)`` is the minimal cut-off.
    """

    prefix: tuple[Fraction, ...] = ()
    tail: Fraction = Fraction(0)

    def __post_init__(self):
        tail = as_rational(self.tail)
        prefix = [as_rational(v) for v in self.prefix]
        while prefix and prefix[-1] == tail:
            prefix.pop()
        object.__setattr__(self, "prefix", tuple(prefix))
        object.__setattr__(self, "tail", tail)

    @classmethod
    def zero(cls) -> "EcSeq":
        return cls()

    @classmethod
    def unit(cls, k: int) -> "EcSeq":
        """Standard basis vector e_k."""
        return cls((0,) * k + (1,), 0)

    @classmethod
    def constant(cls, value) -> "EcSeq":
        return cls((), value)

    @property
    def cutoff(self) -> int:
        """Index from which the sequence equals its tail."""
        return len(self.prefix)

    def entry(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError("sequence indices start at 0")
        return self.prefix[k] if k < len(self.prefix) else self.tail

    def expanded_prefix(self, n: int) -> list[Fraction]:
        """Entries ``0..n-1`` (``n`` may be less than the cutoff)."""
        return [self.entry(k) for k in range(n)]

    def classes(self, L: int) -> list[Fraction]:
        """Coordinate-class vector ``(entry 0, ..., entry L-1, tail)``; needs ``L >= cutoff``."""
        if L < self.cutoff:
            raise ValueError(f"chart width {L} is below the cutoff {self.cutoff}")
        return self.expanded_prefix(L) + [self.tail]

    @classmethod
    def from_classes(cls, values: Sequence[Fraction]) -> "EcSeq":
        return cls(tuple(values[:-1]), values[-1])

    @property
    def is_finite_support(self) -> bool:
        return self.tail == 0

    def __neg__(self) -> "EcSeq":
        return EcSeq(tuple(-v for v in self.prefix), -self.tail)

    def __add__(self, other: "EcSeq") -> "EcSeq":
        return lin_comb([1, 1], [self, other])

    def __sub__(self, other: "EcSeq") -> "EcSeq":
        return lin_comb([1, -1], [self, other])

    def scale(self, a) -> "EcSeq":
        a = as_rational(a)
        return EcSeq(tuple(a * v for v in self.prefix), a * self.tail)

    def __repr__(self) -> str:
        body = ", ".join(str(v) for v in self.prefix)
        return f"EcSeq([{body} | {self.tail}])"


def canonicalize(prefix: Iterable, tail) -> EcSeq:
    return EcSeq(tuple(prefix), tail)


def is_member(f: EcSeq, space: SpaceTag) -> bool:
    # Zero tail means finite support, which is both summable and null.
    if space is SpaceTag.LINF:
        return True
    return f.tail == 0


def _require_finite_support(x: EcSeq, what: str) -> None:
    if x.tail != 0:
        raise DomainError(f"{what} needs a finite-support sequence, got tail {x.tail}")


def pair(x: EcSeq, f: EcSeq) -> Fraction:
    """<x, f> = sum_k f_k x_k for finite-support ``x``."""
    _require_finite_support(x, "pairing")
    return sum((v * f.entry(k) for k, v in enumerate(x.prefix) if v), Fraction(0))


def sup_norm(f: EcSeq) -> Fraction:
    return max([abs(v) for v in f.prefix] + [abs(f.tail)])


def l1_norm(x: EcSeq) -> Fraction:
    _require_finite_support(x, "l1 norm")
    return sum((abs(v) for v in x.prefix), Fraction(0))


def lin_comb(coeffs: Sequence, seqs: Sequence[EcSeq]) -> EcSeq:
    """Canonical sum_i coeffs[i] * seqs[i]."""
    if len(coeffs) != len(seqs):
        raise ValueError(f"{len(coeffs)} coefficients for {len(seqs)} sequences")
    coeffs = [as_rational(c) for c in coeffs]
    L = max((s.cutoff for s in seqs), default=0)
    prefix = [Fraction(0)] * L
    tail = Fraction(0)
    for c, s in zip(coeffs, seqs):
        if not c:
            continue
        for k in range(L):
            prefix[k] += c * s.entry(k)
        tail += c * s.tail
    return EcSeq(tuple(prefix), tail)
