"""Hilbert series of S/I by pivot splitting.

For a monomial pivot p the exact sequence

    0 -> S/(I : p)(-deg p) -> S/I -> S/(I + (p)) -> 0

gives  K(I) = K(I + (p)) + t^deg(p) K(I : p)  for the numerator K over the
fixed denominator (1 - t)^n.  The numerator does not depend on variables
outside the support of I, so subproblems are memoized on a compressed key.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .ideal import MonomialIdeal, minimalize, mono_gcd, mono_quotient

Poly = tuple[int, ...]

PIVOT_STRATEGIES = ("max_count", "min_index", "gcd", "random")


def _trim(p) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def poly_sub(a: Poly, b: Poly) -> Poly:
    return poly_add(a, tuple(-c for c in b))


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_shift(a: Poly, k: int) -> Poly:
    return (0,) * k + a if a else ()


def one_minus_t_power(k: int) -> Poly:
    return tuple((-1) ** i * comb(k, i) for i in range(k + 1))


def divide_one_minus_t(p: Poly) -> Poly:
    """Exact quotient p / (1 - t); requires p(1) == 0."""
    # p = (1 - t) q  =>  q_i = sum_{k <= i} p_k
    q, acc = [], 0
    for c in p[:-1]:
        acc += c
        q.append(acc)
    if acc + (p[-1] if p else 0) != 0:
        raise ArithmeticError("(1 - t) does not divide the polynomial")
    return _trim(q)


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(t) / (1 - t)^denom_power``; coefficient of t^k at index k."""

    numerator: Poly
    denom_power: int

    def __post_init__(self):
        object.__setattr__(self, "numerator", _trim(int(c) for c in self.numerator))

    def reduced(self) -> HilbertSeries:
        num, d = self.numerator, self.denom_power
        while d > 0 and num and sum(num) == 0:
            num = divide_one_minus_t(num)
            d -= 1
        return HilbertSeries(num, d)

    def is_reduced(self) -> bool:
        return self.denom_power == 0 or sum(self.numerator) != 0

    def with_denominator(self, d: int) -> HilbertSeries:
        """Same series rewritten over (1 - t)^d, d >= denom_power."""
        if d < self.denom_power:
            raise ValueError("cannot lower the denominator power")
        return HilbertSeries(
            poly_mul(self.numerator, one_minus_t_power(d - self.denom_power)), d
        )

    def __add__(self, other: HilbertSeries) -> HilbertSeries:
        d = max(self.denom_power, other.denom_power)
        a, b = self.with_denominator(d), other.with_denominator(d)
        return HilbertSeries(poly_add(a.numerator, b.numerator), d).reduced()

    def __mul__(self, other: HilbertSeries) -> HilbertSeries:
        return HilbertSeries(
            poly_mul(self.numerator, other.numerator),
            self.denom_power + other.denom_power,
        ).reduced()

    def shift(self, k: int) -> HilbertSeries:
        return HilbertSeries(poly_shift(self.numerator, k), self.denom_power)

    @property
    def h_degree(self) -> int:
        return len(self.reduced().numerator) - 1

    def expand(self, d_max: int) -> list[int]:
        """Power series coefficients for t^0 .. t^d_max."""
        d = self.denom_power
        out = []
        for k in range(d_max + 1):
            if d == 0:
                out.append(self.numerator[k] if k < len(self.numerator) else 0)
                continue
            total = 0
            for i, h in enumerate(self.numerator[: k + 1]):
                total += h * comb(k - i + d - 1, d - 1)
            out.append(total)
        return out

    def to_json(self) -> dict:
        return {"numerator": list(self.numerator), "denom_power": self.denom_power}

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.numerator):
            if c == 0:
                continue
            mon = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
            coef = "" if abs(c) == 1 and i else str(abs(c))
            body = mon if not coef else (coef if i == 0 else f"{coef}*{mon}")
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            num = "0"
        else:
            num = ("-" if terms[0][0] == "-" else "") + terms[0][1]
            num += "".join(f" {s} {b}" for s, b in terms[1:])
        return f"({num}) / (1 - t)^{self.denom_power}"


def _compress(gens) -> tuple:
    """Drop unused variables and sort the columns; the numerator is invariant under both."""
    if not gens:
        return ()
    cols = [c for c in zip(*gens) if any(c)]
    if not cols:
        return ((),)  # unit ideal
    cols.sort()
    return minimalize(zip(*cols))


def _disjoint_supports(gens) -> bool:
    used = [False] * len(gens[0])
    for g in gens:
        for j, e in enumerate(g):
            if e:
                if used[j]:
                    return False
                used[j] = True
    return True


def _pivot(gens, strategy: str):
    n = len(gens[0])
    counts = [sum(1 for g in gens if g[j]) for j in range(n)]
    shared = [j for j in range(n) if counts[j] >= 2]
    if strategy == "max_count":
        j = max(shared, key=lambda k: (counts[k], -k))
    elif strategy == "min_index":
        j = shared[0]
    elif strategy == "random":
        j = random.Random(hash(gens)).choice(shared)
    elif strategy == "gcd":
        for a in range(len(gens)):
            for b in range(a + 1, len(gens)):
                p = mono_gcd(gens[a], gens[b])
                if any(p):
                    return p
        raise AssertionError("no two generators share a variable")
    else:
        raise ValueError(f"unknown pivot strategy {strategy!r}")
    return tuple(1 if k == j else 0 for k in range(n))


@lru_cache(maxsize=1 << 18)
def _numerator(gens: tuple, strategy: str) -> Poly:
    if not gens:
        return (1,)
    if any(not any(g) for g in gens):
        return ()
    if _disjoint_supports(gens):
        out: Poly = (1,)
        for g in gens:
            out = poly_mul(out, poly_sub((1,), poly_shift((1,), sum(g))))
        return out
    p = _pivot(gens, strategy)
    plus = _compress(gens + (p,))
    colon = _compress(tuple(mono_quotient(g, p) for g in gens))
    return poly_add(
        _numerator(plus, strategy), poly_shift(_numerator(colon, strategy), sum(p))
    )


def k_polynomial(I: MonomialIdeal, pivot: str = "max_count") -> Poly:
    """Numerator of H_{S/I} over (1 - t)^n, unreduced (zero for the unit ideal)."""
    return _numerator(_compress(I.gens), pivot)


def hilbert_series(I: MonomialIdeal, pivot: str = "max_count") -> HilbertSeries:
    I.require_proper()
    return HilbertSeries(k_polynomial(I, pivot), I.num_vars).reduced()


def h_polynomial(I: MonomialIdeal) -> tuple[list[int], int]:
    h = hilbert_series(I).numerator
    return list(h), len(h) - 1


def krull_dim(I: MonomialIdeal) -> int:
    return hilbert_series(I).denom_power


def hilbert_function_prefix(I: MonomialIdeal, d_max: int) -> list[int]:
    return hilbert_series(I).expand(d_max)


def clear_cache() -> None:
    _numerator.cache_clear()
