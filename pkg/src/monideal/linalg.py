"""Exact rank of sparse integer matrices over Q or F_p.

Rows are dicts ``{column: value}``.  Over Q the elimination is fraction free:
a pivot of absolute value one is used directly, anything else cross-multiplies
and divides out the row content.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable


def _content_reduce(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


def sparse_rank(rows: Iterable[dict[int, int]], char: int = 0) -> int:
    """Rank of the matrix with the given sparse rows over Q (char 0) or F_char."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        if char:
            r = {c: v % char for c, v in row.items() if v % char}
        else:
            r = {c: v for c, v in row.items() if v}
        while r:
            lead = min(r)
            prow = pivots.get(lead)
            if prow is None:
                if char:
                    inv = pow(r[lead], -1, char)
                    r = {c: v * inv % char for c, v in r.items()}
                else:
                    r = _content_reduce(r)
                pivots[lead] = r
                break
            a, p = r[lead], prow[lead]
            if char:
                # prow is normalized to a leading one
                for c, v in prow.items():
                    nv = (r.get(c, 0) - a * v) % char
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
            elif p in (1, -1):
                f = a * p
                for c, v in prow.items():
                    nv = r.get(c, 0) - f * v
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
            else:
                g = gcd(a, p)
                sa, sp = a // g, p // g
                new = {c: sp * v for c, v in r.items()}
                for c, v in prow.items():
                    nv = new.get(c, 0) - sa * v
                    if nv:
                        new[c] = nv
                    else:
                        new.pop(c, None)
                r = _content_reduce(new) if new else new
    return len(pivots)
