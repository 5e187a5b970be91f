"""Slow, definition-level references for checking the fast engines.

* :func:`brute_force_hilbert` counts standard monomials degree by degree.
* :func:`taylor_betti` takes homology of the Taylor complex tensored with the
  field, one lcm multidegree at a time.  Linear algebra goes through sympy's
  exact ``DomainMatrix`` so nothing is shared with the Hochster engine.
"""

from __future__ import annotations

import random
from itertools import combinations_with_replacement

import numpy as np
from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix

from .betti import BettiTable
from .ideal import MonomialIdeal, RingContext, make_ideal

DEFAULT_DEGREE_BOUND = 10
DEFAULT_GENERATOR_BOUND = 12


class OracleBoundError(ValueError):
    pass


def brute_force_hilbert(
    I: MonomialIdeal, d_max: int, bound: int = DEFAULT_DEGREE_BOUND
) -> list[int]:
    """dim_K (S/I)_k for k = 0..d_max by enumerating every monomial of degree k."""
    I.require_proper()
    if d_max > bound:
        raise OracleBoundError(f"d_max={d_max} exceeds the enumeration bound {bound}")
    n = I.num_vars
    gens = np.array(I.gens, dtype=np.int64).reshape(len(I.gens), n)
    counts = []
    for k in range(d_max + 1):
        listed = list(combinations_with_replacement(range(n), k))
        combos = np.array(listed, dtype=np.int64).reshape(len(listed), k)
        total = 0
        for chunk in np.array_split(combos, max(1, len(combos) // 20000)):
            exps = np.zeros((len(chunk), n), dtype=np.int64)
            for col in range(k):
                np.add.at(exps, (np.arange(len(chunk)), chunk[:, col]), 1)
            if len(gens):
                inside = (exps[:, None, :] >= gens[None, :, :]).all(axis=2).any(axis=1)
                total += int((~inside).sum())
            else:
                total += len(chunk)
        counts.append(total)
    return counts


def _rank(entries: dict, shape: tuple[int, int], char: int) -> int:
    if not entries or 0 in shape:
        return 0
    domain = GF(char) if char else QQ
    rows = {i: {j: domain(v) for j, v in row.items()} for i, row in entries.items()}
    return DomainMatrix(rows, shape, domain).rank()


def taylor_betti(
    I: MonomialIdeal,
    char: int = 0,
    module: bool = False,
    max_gens: int = DEFAULT_GENERATOR_BOUND,
) -> BettiTable:
    """Betti table of S/I (or of I when ``module``) from the Taylor complex.

    Basis elements are generator subsets T in homological degree |T| (|T| - 1 for
    the module I).  After tensoring with K only faces T \\ t with the same lcm
    survive, with sign (-1)^(position of t in T).
    """
    I.require_proper()
    g = len(I.gens)
    if g > max_gens:
        raise OracleBoundError(f"{g} generators exceeds the Taylor bound {max_gens}")
    n = I.num_vars
    lcm = [(0,) * n]
    for T in range(1, 1 << g):
        low = (T & -T).bit_length() - 1
        prev = lcm[T ^ (1 << low)]
        lcm.append(tuple(max(a, b) for a, b in zip(prev, I.gens[low])))

    strands: dict[tuple, dict[int, list[int]]] = {}
    for T in range(1 << g):
        if module and T == 0:
            continue
        strands.setdefault(lcm[T], {}).setdefault(bin(T).count("1"), []).append(T)

    entries: dict[tuple[int, int], int] = {}
    shift = 1 if module else 0
    for m, by_size in strands.items():
        index = {size: {T: k for k, T in enumerate(Ts)} for size, Ts in by_size.items()}
        ranks = {}
        for size, Ts in by_size.items():
            lower = index.get(size - 1, {})
            mat: dict[int, dict[int, int]] = {}
            for row, T in enumerate(Ts):
                pos = 0
                for t in range(g):
                    if T >> t & 1:
                        face = T ^ (1 << t)
                        if face in lower:
                            mat.setdefault(row, {})[lower[face]] = -1 if pos % 2 else 1
                        pos += 1
            ranks[size] = _rank(mat, (len(Ts), len(lower)), char)
        for size, Ts in by_size.items():
            h = len(Ts) - ranks.get(size, 0) - ranks.get(size + 1, 0)
            if h:
                key = (size - shift, sum(m))
                entries[key] = entries.get(key, 0) + h
    return BettiTable(entries, n, quotient=not module)


def random_ideal(
    rng: random.Random,
    num_vars: int,
    max_gens: int,
    max_exp: int = 2,
    min_gens: int = 1,
    prefix: str = "x",
    max_deg: int = 4,
) -> MonomialIdeal:
    """A random proper, nonzero ideal aiming for a uniform number of minimal generators.

    Small rings may not hold that many incomparable monomials of the allowed
    shape; sampling then stops after a fixed number of draws.
    """
    ring = RingContext.standard(num_vars, prefix)
    target = rng.randint(min_gens, max_gens)
    gens: list[tuple[int, ...]] = []
    for _ in range(40 * target):
        d = rng.randint(1, max_deg)
        exps = [0] * num_vars
        for _ in range(d):
            free = [j for j in range(num_vars) if exps[j] < max_exp]
            if not free:
                break
            exps[rng.choice(free)] += 1
        trial = make_ideal(ring, gens + [tuple(exps)])
        if len(trial.gens) > len(gens):
            gens = list(trial.gens)
        if len(gens) >= target:
            break
    return make_ideal(ring, gens)
