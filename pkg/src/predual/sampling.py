"""Seeded generators of small random rational instances."""

from __future__ import annotations

import random
from fractions import Fraction

from .seqspace import EcSeq
from .span import SubspaceKernel


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_ecseq(rng: random.Random, max_prefix: int = 6, bound: int = 9, zero_tail: bool = False) -> EcSeq:
    n = rng.randint(0, max_prefix)
    prefix = tuple(random_rational(rng, bound) for _ in range(n))
    tail = Fraction(0) if zero_tail else random_rational(rng, bound)
    return EcSeq(prefix, tail)


def random_point(rng: random.Random, max_prefix: int = 6, bound: int = 9) -> EcSeq:
    return random_ecseq(rng, max_prefix, bound, zero_tail=True)


def random_kernel(
    rng: random.Random,
    max_constraints: int = 4,
    max_prefix: int = 6,
    bound: int = 9,
    zero_tails: bool = False,
) -> SubspaceKernel:
    k = rng.randint(0, max_constraints)
    return SubspaceKernel.of(random_ecseq(rng, max_prefix, bound, zero_tails) for _ in range(k))


def random_instance(rng: random.Random, zero_tails: bool = False, **kw) -> tuple[EcSeq, SubspaceKernel]:
    S = random_kernel(rng, zero_tails=zero_tails, **kw)
    y = random_point(rng, kw.get("max_prefix", 6), kw.get("bound", 9))
    return y, S
