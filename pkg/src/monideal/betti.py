"""Graded Betti numbers of S/I from Hochster's formula, and the invariants they carry.

    beta_{i,j}(S/I) = sum over |W| = j of dim H~_{j-i-1}(Delta|_W)

where Delta is the Stanley-Reisner complex of the (polarized) ideal.  An induced
subcomplex with a vertex lying in no minimal non-face is a cone, so only vertex
sets W that are unions of generator supports are visited.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .hilbert import hilbert_series
from .ideal import MonomialIdeal, UnitIdealError, is_squarefree, polarize
from .linalg import sparse_rank


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices ``0 .. num_vertices-1`` given by its facets.

    ``facets == ()`` is the void complex; ``facets == (frozenset(),)`` is {emptyset}.
    """

    num_vertices: int
    facets: tuple[frozenset[int], ...]

    @classmethod
    def from_faces(cls, num_vertices: int, faces) -> SimplicialComplex:
        faces = {frozenset(f) for f in faces}
        for f in faces:
            if any(v < 0 or v >= num_vertices for v in f):
                raise ComplexError(f"face {sorted(f)} has a vertex out of range")
        facets = [f for f in faces if not any(f < g for g in faces)]
        facets.sort(key=lambda f: (-len(f), sorted(f)))
        return cls(num_vertices, tuple(facets))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def faces(self) -> set[frozenset[int]]:
        out: set[frozenset[int]] = set()
        for facet in self.facets:
            for k in range(len(facet) + 1):
                out.update(frozenset(c) for c in combinations(sorted(facet), k))
        return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _homology_of_faces(faces: list[int], char: int) -> list[int]:
    """Reduced homology dims H~_{-1}, H~_0, ... of the complex with the given face masks."""
    if not faces:
        return []
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(bin(f).count("1") - 1, []).append(f)
    top = max(by_dim)
    index = {k: {f: i for i, f in enumerate(fs)} for k, fs in by_dim.items()}
    ranks = {}
    for k in range(0, top + 1):
        lower = index[k - 1]
        rows = []
        for f in by_dim.get(k, ()):
            row = {}
            for pos, v in enumerate(_bits(f)):
                row[lower[f ^ (1 << v)]] = -1 if pos % 2 else 1
            rows.append(row)
        ranks[k] = sparse_rank(rows, char)
    return [
        len(by_dim.get(k, ())) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        for k in range(-1, top + 1)
    ]


def _induced_faces(vertex_mask: int, nonfaces: list[int]) -> list[int]:
    """Faces of the complex on ``vertex_mask`` whose minimal non-faces are ``nonfaces``."""
    faces = [0]
    for v in _bits(vertex_mask):
        b = 1 << v
        blocking = [g for g in nonfaces if g & b]
        grown = []
        for f in faces:
            fb = f | b
            if not any(g & ~fb == 0 for g in blocking):
                grown.append(fb)
        faces.extend(grown)
    return faces


def _to_masks(I: MonomialIdeal) -> list[int]:
    return [sum(1 << j for j, e in enumerate(g) if e) for g in I.gens]


def stanley_reisner_complex(I: MonomialIdeal) -> SimplicialComplex:
    if not is_squarefree(I):
        raise ComplexError("the Stanley-Reisner complex needs a squarefree ideal")
    I.require_proper()
    n = I.num_vars
    faces = _induced_faces((1 << n) - 1, _to_masks(I))
    return SimplicialComplex.from_faces(n, (list(_bits(f)) for f in faces))


def reduced_homology_dims(C: SimplicialComplex, char: int = 0) -> list[int]:
    """dim H~_k(C) for k = -1 .. dim C over Q (char 0) or F_char."""
    masks = [sum(1 << v for v in f) for f in C.faces()]
    dims = _homology_of_faces(masks, char)
    return dims


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``{(i, j): beta_ij}``, zeros omitted.

    ``quotient`` tables describe S/I (with beta_00 = 1); otherwise the module I.
    """

    entries: dict = field(hash=False)
    num_vars: int
    quotient: bool = True

    def __post_init__(self):
        clean = {(int(i), int(j)): int(b) for (i, j), b in self.entries.items() if b}
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def depth(self) -> int:
        return self.num_vars - self.pd

    def total(self, i: int) -> int:
        return sum(b for (k, _), b in self.entries.items() if k == i)

    def to_ideal(self) -> BettiTable:
        """Table of the ideal I read off from the table of S/I."""
        if not self.quotient:
            return self
        shifted = {(i - 1, j): b for (i, j), b in self.entries.items() if i > 0}
        return BettiTable(shifted, self.num_vars, quotient=False)

    def is_pure(self) -> bool:
        degs: dict[int, set[int]] = {}
        for i, j in self.entries:
            degs.setdefault(i, set()).add(j)
        return all(len(js) == 1 for i, js in degs.items() if i >= 1 or not self.quotient)

    def to_json(self) -> dict:
        return {
            "entries": [[i, j, b] for (i, j), b in self.entries.items()],
            "reg": self.reg,
            "pd": self.pd,
            "depth": self.depth,
        }

    def format(self) -> str:
        """Macaulay2-style diagram: rows j - i, columns i."""
        if not self.entries:
            return "(empty)"
        cols = range(0, self.pd + 1)
        rows = range(min(j - i for i, j in self.entries), self.reg + 1)
        cells = [[str(self[(i, i + r)]) if self[(i, i + r)] else "." for i in cols] for r in rows]
        width = max(len(c) for row in cells for c in row)
        width = max(width, len(str(self.pd)))
        lines = ["     " + " ".join(str(i).rjust(width) for i in cols)]
        for r, row in zip(rows, cells):
            lines.append(f"{r:>3}: " + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)


def _union_closure(masks: list[int]) -> set[int]:
    seen = {0}
    for g in masks:
        seen |= {s | g for s in seen}
    return seen


def _minimal(masks) -> frozenset[int]:
    kept: list[int] = []
    for g in sorted(set(masks), key=lambda m: bin(m).count("1")):
        if not any(h & ~g == 0 for h in kept):
            kept.append(g)
    return frozenset(kept)


def _union(masks) -> int:
    out = 0
    for g in masks:
        out |= g
    return out


def _reduced_homology(vmask: int, nonfaces: frozenset[int], char: int, memo: dict) -> dict[int, int]:
    """Nonzero dims of H~_k for the complex on ``vmask`` with minimal non-faces ``nonfaces``.

    Uses star/link gluing: a vertex whose link is a cone can be deleted, and if the
    deletion is a cone the complex is the suspension of the link.
    """
    key = (vmask, nonfaces)
    if key in memo:
        return memo[key]
    singles = [g for g in nonfaces if g & (g - 1) == 0]
    if singles:
        vmask &= ~_union(singles)
        nonfaces = nonfaces.difference(singles)
    if not vmask:
        out = {-1: 1}
    elif vmask & ~_union(nonfaces):
        out = {}
    else:
        out = None
        for v in _bits(vmask):
            b = 1 << v
            rest = vmask & ~b
            deletion = frozenset(g for g in nonfaces if not g & b)
            link = _minimal(g & ~b for g in nonfaces)
            if rest & ~_union(link):
                out = _reduced_homology(rest, deletion, char, memo)
                break
            if rest & ~_union(deletion):
                out = {k + 1: d for k, d in _reduced_homology(rest, link, char, memo).items()}
                break
        if out is None:
            dims = _homology_of_faces(_induced_faces(vmask, list(nonfaces)), char)
            out = {k: d for k, d in enumerate(dims, start=-1) if d}
    memo[key] = out
    return out


@lru_cache(maxsize=4096)
def betti_table(I: MonomialIdeal, char: int = 0) -> BettiTable:
    """Graded Betti table of S/I over a field of characteristic ``char``."""
    I.require_proper()
    J = I if is_squarefree(I) else polarize(I)
    masks = _to_masks(J)
    memo: dict = {}
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for sigma in _union_closure(masks):
        if not sigma:
            continue
        inside = frozenset(g for g in masks if g & ~sigma == 0)
        j = bin(sigma).count("1")
        for k, h in _reduced_homology(sigma, inside, char, memo).items():
            key = (j - k - 1, j)
            entries[key] = entries.get(key, 0) + h
    return BettiTable(entries, I.num_vars)


def direct_betti_table(I: MonomialIdeal, char: int = 0) -> BettiTable:
    """Hochster sweep with plain boundary-rank homology for every induced subcomplex."""
    I.require_proper()
    J = I if is_squarefree(I) else polarize(I)
    masks = _to_masks(J)
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for sigma in _union_closure(masks):
        if not sigma:
            continue
        inside = [g for g in masks if g & ~sigma == 0]
        dims = _homology_of_faces(_induced_faces(sigma, inside), char)
        j = bin(sigma).count("1")
        for k, h in enumerate(dims, start=-1):
            if h:
                key = (j - k - 1, j)
                entries[key] = entries.get(key, 0) + h
    return BettiTable(entries, I.num_vars)


def regularity_quotient(I: MonomialIdeal, char: int = 0) -> int:
    return betti_table(I, char).reg


def regularity(I: MonomialIdeal, char: int = 0) -> int:
    """reg of the ideal itself (nonzero, proper)."""
    if I.is_zero():
        raise ValueError("regularity of the zero ideal is undefined")
    return betti_table(I, char).to_ideal().reg


def projective_dimension(I: MonomialIdeal, char: int = 0) -> int:
    return betti_table(I, char).pd


def depth(I: MonomialIdeal, char: int = 0) -> int:
    return betti_table(I, char).depth


def is_symmetric(h) -> bool:
    return list(h) == list(h)[::-1]


def is_unimodal(h) -> bool:
    h = list(h)
    i = 0
    while i + 1 < len(h) and h[i] <= h[i + 1]:
        i += 1
    while i + 1 < len(h) and h[i] >= h[i + 1]:
        i += 1
    return i == len(h) - 1


@dataclass(frozen=True)
class InvariantsReport:
    reg: int
    pd: int
    depth: int
    dim: int
    deg_h: int
    h_coeffs: tuple[int, ...]
    is_CM: bool
    h_symmetric: bool
    h_unimodal: bool
    has_pure_resolution: bool

    def to_json(self) -> dict:
        d = dict(self.__dict__)
        d["h_coeffs"] = list(self.h_coeffs)
        return d


def invariants_report(I: MonomialIdeal, char: int = 0, engine=None) -> InvariantsReport:
    """Betti-side and Hilbert-side invariants of S/I side by side.

    ``engine`` may be any callable ``(I, char) -> BettiTable``; defaults to Hochster.
    """
    if I.is_unit():
        raise UnitIdealError("the unit ideal has no quotient invariants")
    table = (engine or betti_table)(I, char)
    hs = hilbert_series(I)
    h = hs.numerator
    return InvariantsReport(
        reg=table.reg,
        pd=table.pd,
        depth=table.depth,
        dim=hs.denom_power,
        deg_h=len(h) - 1,
        h_coeffs=tuple(h),
        is_CM=table.depth == hs.denom_power,
        h_symmetric=is_symmetric(h),
        h_unimodal=is_unimodal(h),
        has_pure_resolution=table.is_pure(),
    )
