"""Monomials and monomial ideals over a named polynomial ring.

A monomial is a plain tuple of nonnegative exponents, one per ring variable.
A :class:`MonomialIdeal` always stores its unique minimal generating set in a
fixed canonical order, so two ideals are equal exactly when their dataclass
fields are equal.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Monomial = tuple[int, ...]

_BAD_NAME = re.compile(r"[\s^*(),]")


class IdealError(ValueError):
    """Base class for errors raised by ideal operations."""


class DimensionError(IdealError):
    pass


class RingMismatchError(IdealError):
    pass


class DisjointnessError(IdealError):
    pass


class UnitIdealError(IdealError):
    """Raised when an invariant is requested for the unit ideal."""


class MonomialSyntaxError(IdealError):
    def __init__(self, message: str, column: int | None = None):
        self.column = column
        if column is not None:
            message = f"{message} (column {column})"
        super().__init__(message)


@dataclass(frozen=True)
class RingContext:
    var_names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.var_names)
        object.__setattr__(self, "var_names", names)
        if not names:
            raise DimensionError("a ring needs at least one variable")
        for name in names:
            if not name or _BAD_NAME.search(name) or name.isdigit():
                raise IdealError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise IdealError(f"duplicate variable names in {names}")

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> RingContext:
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    @property
    def num_vars(self) -> int:
        return len(self.var_names)

    def index(self, name: str) -> int:
        try:
            return self.var_names.index(name)
        except ValueError:
            raise IdealError(f"unknown variable {name!r}") from None

    def monomial(self, *names: str) -> Monomial:
        """Squarefree-or-not monomial from variable names (repeats raise the power)."""
        exps = [0] * self.num_vars
        for name in names:
            exps[self.index(name)] += 1
        return tuple(exps)

    def variable(self, name: str) -> Monomial:
        return self.monomial(name)

    def unit(self) -> Monomial:
        return (0,) * self.num_vars

    def parse_monomial(self, text: str) -> Monomial:
        return parse_monomial(self, text)

    def format_monomial(self, m: Monomial) -> str:
        return format_monomial(self, m)


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_quotient(a: Monomial, b: Monomial) -> Monomial:
    """a / gcd(a, b)."""
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def canonical_key(m: Monomial):
    # degree ascending, then lexicographically larger exponent vectors first
    return (sum(m), tuple(-e for e in m))


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Minimal generators of the ideal spanned by ``gens``, canonically sorted."""
    kept: list[Monomial] = []
    for g in sorted(set(gens), key=canonical_key):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its canonical minimal generators.

    Build instances with :func:`make_ideal`; the constructor trusts its input.
    """

    ring: RingContext
    gens: tuple[Monomial, ...]

    @property
    def num_vars(self) -> int:
        return self.ring.num_vars

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(degree(g) == 0 for g in self.gens)

    def require_proper(self) -> None:
        if self.is_unit():
            raise UnitIdealError("the unit ideal has no quotient invariants")

    def support(self) -> list[int]:
        """Indices of variables occurring in some generator."""
        return [j for j in range(self.num_vars) if any(g[j] for g in self.gens)]

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_product(self, other)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(format_monomial(self.ring, g) for g in self.gens) + ")"


def make_ideal(ring: RingContext, raw_gens: Iterable[Monomial]) -> MonomialIdeal:
    gens = []
    for g in raw_gens:
        g = tuple(int(e) for e in g)
        if len(g) != ring.num_vars:
            raise DimensionError(
                f"monomial has {len(g)} exponents, ring has {ring.num_vars} variables"
            )
        if any(e < 0 for e in g):
            raise IdealError(f"negative exponent in {g}")
        gens.append(g)
    return MonomialIdeal(ring, minimalize(gens))


def ideal_from_strings(ring: RingContext, gens: Iterable[str]) -> MonomialIdeal:
    return make_ideal(ring, (parse_monomial(ring, s) for s in gens))


def zero_ideal(ring: RingContext) -> MonomialIdeal:
    return MonomialIdeal(ring, ())


def variables_ideal(ring: RingContext, names: Iterable[str]) -> MonomialIdeal:
    return make_ideal(ring, (ring.variable(v) for v in names))


def _same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.ring != J.ring:
        raise RingMismatchError(f"{I.ring.var_names} != {J.ring.var_names}")


def _check_monomial(I: MonomialIdeal, m: Monomial) -> None:
    if len(m) != I.num_vars:
        raise RingMismatchError(
            f"monomial has {len(m)} exponents, ring has {I.num_vars} variables"
        )


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    _check_monomial(I, m)
    return any(divides(g, m) for g in I.gens)


def colon_by_monomial(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    _check_monomial(I, m)
    return MonomialIdeal(I.ring, minimalize(mono_quotient(g, m) for g in I.gens))


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ring, minimalize(I.gens + J.gens))


def ideal_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I, J)
    return MonomialIdeal(I.ring, minimalize(mono_mul(a, b) for a in I.gens for b in J.gens))


def extend_ring(I: MonomialIdeal, ring: RingContext) -> MonomialIdeal:
    """Regard ``I`` as an ideal of a larger ring, matching variables by name."""
    positions = [ring.index(name) for name in I.ring.var_names]
    gens = []
    for g in I.gens:
        exps = [0] * ring.num_vars
        for p, e in zip(positions, g):
            exps[p] = e
        gens.append(tuple(exps))
    return MonomialIdeal(ring, minimalize(gens))


def embed_tensor(
    I1: MonomialIdeal, I2: MonomialIdeal
) -> tuple[RingContext, MonomialIdeal, MonomialIdeal]:
    """Both ideals inside the tensor product ring with concatenated variables."""
    clash = set(I1.ring.var_names) & set(I2.ring.var_names)
    if clash:
        raise DisjointnessError(f"shared variable names: {sorted(clash)}")
    ring = RingContext(I1.ring.var_names + I2.ring.var_names)
    return ring, extend_ring(I1, ring), extend_ring(I2, ring)


def polarize(I: MonomialIdeal) -> MonomialIdeal:
    """Squarefree polarization; ``x`` with top exponent k becomes ``x#1 .. x#k``.

    Variables absent from every generator are dropped.
    """
    I.require_proper()
    tops = [max((g[j] for g in I.gens), default=0) for j in range(I.num_vars)]
    names: list[str] = []
    offsets: list[int] = []
    for name, k in zip(I.ring.var_names, tops):
        offsets.append(len(names))
        names.extend(f"{name}#{t}" for t in range(1, k + 1))
    if not names:
        # zero ideal: keep a one-variable ring so the context stays valid
        return MonomialIdeal(RingContext((f"{I.ring.var_names[0]}#1",)), ())
    ring = RingContext(tuple(names))
    gens = []
    for g in I.gens:
        exps = [0] * len(names)
        for j, e in enumerate(g):
            for t in range(e):
                exps[offsets[j] + t] = 1
        gens.append(tuple(exps))
    return MonomialIdeal(ring, minimalize(gens))


def is_squarefree(I: MonomialIdeal) -> bool:
    return all(e <= 1 for g in I.gens for e in g)


def is_strongly_stable(I: MonomialIdeal) -> bool:
    for u in I.gens:
        for i, e in enumerate(u):
            if not e:
                continue
            for j in range(i):
                v = list(u)
                v[i] -= 1
                v[j] += 1
                if not contains(I, tuple(v)):
                    return False
    return True


def is_squarefree_lexsegment(I: MonomialIdeal) -> bool:
    """Squarefree and, in each degree, the squarefree members form a lex-initial segment."""
    if not is_squarefree(I):
        return False
    if not I.gens:
        return True
    n = I.num_vars
    for d in range(min(degree(g) for g in I.gens), n + 1):
        # combinations come out in decreasing lex order for x1 > x2 > ... > xn
        seen_gap = False
        for combo in itertools.combinations(range(n), d):
            m = tuple(1 if j in combo else 0 for j in range(n))
            if contains(I, m):
                if seen_gap:
                    return False
            else:
                seen_gap = True
    return True


def parse_monomial(ring: RingContext, text: str) -> Monomial:
    """Parse ``term ("*" term)*`` with ``term = name ("^" int)?``; ``1`` is the unit."""
    compact = "".join(text.split())
    if not compact:
        raise MonomialSyntaxError("empty monomial", 1)
    if compact == "1":
        return ring.unit()
    exps = [0] * ring.num_vars
    col = 1
    for term in compact.split("*"):
        if not term:
            raise MonomialSyntaxError("empty factor", col)
        name, caret, power = term.partition("^")
        if caret:
            if not power.isdigit() or int(power) < 1:
                raise MonomialSyntaxError(f"bad exponent {power!r}", col + len(name) + 1)
            e = int(power)
        else:
            e = 1
        if name not in ring.var_names:
            raise MonomialSyntaxError(f"unknown variable {name!r}", col)
        exps[ring.var_names.index(name)] += e
        col += len(term) + 1
    return tuple(exps)


def format_monomial(ring: RingContext, m: Monomial) -> str:
    parts = []
    for name, e in zip(ring.var_names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"
