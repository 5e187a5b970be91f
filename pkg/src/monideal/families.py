"""Ideal and graph families: squarefree lexsegments, the I/J/K/L ladder used to
realize any (regularity, h-degree) pair, and small Cameron-Walker graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .ideal import (
    MonomialIdeal,
    RingContext,
    embed_tensor,
    ideal_from_strings,
    ideal_sum,
    make_ideal,
)


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``1 .. num_vertices``; edges stored as (u, v), u < v."""

    num_vertices: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.num_vertices < 1:
            raise FamilyError("a graph needs at least one vertex")
        clean = set()
        for u, v in self.edges:
            if u == v:
                raise FamilyError(f"loop at vertex {u}")
            if not (1 <= u <= self.num_vertices and 1 <= v <= self.num_vertices):
                raise FamilyError(f"edge {(u, v)} leaves the vertex set")
            clean.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(clean))
        if self.labels is not None and len(self.labels) != self.num_vertices:
            raise FamilyError("one label per vertex is required")

    @classmethod
    def from_edges(cls, num_vertices: int, edges, labels=None) -> Graph:
        edges = list(edges)
        keyed = {(min(u, v), max(u, v)) for u, v in edges}
        if len(keyed) != len(edges):
            raise FamilyError("duplicate edge")
        return cls(num_vertices, frozenset(keyed), None if labels is None else tuple(labels))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


def edge_ideal(G: Graph) -> MonomialIdeal:
    ring = RingContext(G.labels or tuple(f"x{i}" for i in range(1, G.num_vertices + 1)))
    gens = []
    for u, v in G.edges:
        exps = [0] * G.num_vertices
        exps[u - 1] = exps[v - 1] = 1
        gens.append(tuple(exps))
    return make_ideal(ring, gens)


def _names(prefix: str, lo: int, hi: int) -> list[str]:
    return [f"{prefix}{i}" for i in range(lo, hi + 1)]


def _prod(*groups) -> str:
    flat = [v for g in groups for v in ([g] if isinstance(g, str) else g)]
    return "*".join(flat) if flat else "1"


def sqfree_lex_ideal(r: int, s: int) -> MonomialIdeal:
    """(u1...ur)(u_{r+1}, ..., u_{s+1}) in K[u1..u_{s+1}]."""
    if not 1 <= r <= s:
        raise FamilyError(f"need 1 <= r <= s, got r={r}, s={s}")
    ring = RingContext(tuple(_names("u", 1, s + 1)))
    head = _names("u", 1, r)
    return ideal_from_strings(ring, (_prod(head, f"u{k}") for k in range(r + 1, s + 2)))


def _family_I(n: int) -> MonomialIdeal:
    ring = RingContext(("x", *_names("y", 1, n), *_names("z", 1, n + 1)))
    gens = [_prod("x", _names("y", 1, n)), _prod("x", _names("z", 1, n + 1))]
    for i in range(1, n - 1):
        for y in _names("y", 1, i):
            gens.append(_prod(y, f"z{i}"))
        gens.append(_prod(_names("y", i + 1, n), f"z{i}"))
    for y in _names("y", 1, n):
        for z in _names("z", n - 1, n + 1):
            gens.append(_prod(y, z))
    return ideal_from_strings(ring, gens)


def _family_J(n: int) -> MonomialIdeal:
    ring = RingContext(("x", *_names("y", 1, n - 1), *_names("z", 1, n + 1)))
    gens = [_prod("x", _names("z", 1, n + 1))]
    for i in range(1, n):
        gens.extend(_prod(z, f"y{i}") for z in _names("z", i, n + 1))
    return ideal_from_strings(ring, gens)


def _family_K(n: int) -> MonomialIdeal:
    ring = RingContext(("x", *_names("y", 1, n - 1), *_names("z", 1, n - 2)))
    gens = [_prod("x", _names("y", 1, n - 1))]
    for i in range(1, n - 1):
        gens.extend(_prod(y, f"z{i}") for y in _names("y", 1, i))
        gens.append(_prod(_names("y", i + 1, n - 1), f"z{i}"))
    return ideal_from_strings(ring, gens)


def _family_L(n: int) -> MonomialIdeal:
    ring = RingContext((*_names("y", 1, n - 1), *_names("z", 1, n)))
    gens = []
    for i in range(1, n):
        gens.extend(_prod(z, f"y{i}") for z in _names("z", i, n))
    return ideal_from_strings(ring, gens)


_FAMILIES = {"I": _family_I, "J": _family_J, "K": _family_K, "L": _family_L}


def family_ideal(which: str, n: int) -> MonomialIdeal:
    """The ideals I_n, J_n, K_n, L_n, each in its own ambient ring."""
    if which not in _FAMILIES:
        raise FamilyError(f"unknown family {which!r}; expected one of I, J, K, L")
    if n < 2:
        raise FamilyError(f"family {which} needs n >= 2, got {n}")
    return _FAMILIES[which](n)


def staircase_ideal(n: int) -> MonomialIdeal:
    """sum_{i=1}^{n-2} (y1, ..., yi)(zi) in K[y1..y_{n-2}, z1..z_{n-2}]."""
    if n < 3:
        raise FamilyError(f"need n >= 3, got {n}")
    ring = RingContext((*_names("y", 1, n - 2), *_names("z", 1, n - 2)))
    gens = [_prod(y, f"z{i}") for i in range(1, n - 1) for y in _names("y", 1, i)]
    return ideal_from_strings(ring, gens)


def base_case_ideal() -> MonomialIdeal:
    """(x y1, x z1 z2, y1 z1, y1 z2) in K[x, y1, z1, z2]: reg 2 with h = 1 + 2t."""
    ring = RingContext(("x", "y1", "z1", "z2"))
    return ideal_from_strings(ring, ["x*y1", "x*z1*z2", "y1*z1", "y1*z2"])


def theorem_main_ideal(r: int, s: int) -> MonomialIdeal:
    """A monomial ideal with reg(S/I) = r and deg h_{S/I} = s."""
    if r < 1 or s < 1:
        raise FamilyError(f"need r, s >= 1, got r={r}, s={s}")
    if r <= s:
        return sqfree_lex_ideal(r, s)
    base = base_case_ideal() if r == s + 1 else family_ideal("I", r - s)
    u_ring = RingContext(tuple(_names("u", 1, s)))
    u_ideal = ideal_from_strings(u_ring, [_prod(_names("u", 1, s))])
    _, left, right = embed_tensor(base, u_ideal)
    return ideal_sum(left, right)


def herzog_example() -> MonomialIdeal:
    ring = RingContext(("x1", "x2", "x3", "x4"))
    return ideal_from_strings(
        ring,
        ["x2^3", "x2^2*x3", "x2*x3^2", "x3^3", "x1^2", "x1*x2", "x1*x3", "x1*x4"],
    )


def ferrers_graph(n: int) -> Graph:
    """Bipartite graph y_i -- z_j for 1 <= i <= j <= n; edge ideal is L_n."""
    if n < 2:
        raise FamilyError(f"need n >= 2, got {n}")
    labels = (*_names("y", 1, n - 1), *_names("z", 1, n))
    z = lambda j: n - 1 + j  # noqa: E731
    edges = [(i, z(j)) for i in range(1, n) for j in range(i, n + 1)]
    return Graph.from_edges(len(labels), edges, labels)


def star_triangle(m: int) -> Graph:
    """m triangles {2i-1, 2i, c} glued at the center c = 2m + 1."""
    if m < 1:
        raise FamilyError(f"need m >= 1, got {m}")
    c = 2 * m + 1
    edges = []
    for i in range(1, m + 1):
        edges += [(2 * i - 1, 2 * i), (2 * i - 1, c), (2 * i, c)]
    return Graph.from_edges(c, edges)


def g2_graph(m: int) -> Graph:
    """Star triangle on 1..2m+1 with the path 2m+1 -- 2m+2 -- 2m+3 attached."""
    if m < 1:
        raise FamilyError(f"need m >= 1, got {m}")
    c = 2 * m + 1
    edges = list(star_triangle(m).edges) + [(c, c + 1), (c + 1, c + 2)]
    return Graph.from_edges(c + 2, edges)


def parse_family_spec(spec: str) -> MonomialIdeal:
    """``Irs:r,s``, ``I:n``, ``J:n``, ``K:n``, ``L:n``, ``thm:r,s``, ``herzog``,
    ``star:m``, ``g2:m``, ``ferrers:n``."""
    name, _, args = spec.strip().partition(":")
    try:
        nums = [int(a) for a in args.split(",")] if args else []
    except ValueError:
        raise FamilyError(f"bad parameters in family spec {spec!r}") from None

    def arity(k):
        if len(nums) != k:
            raise FamilyError(f"family {name!r} takes {k} parameter(s), got {spec!r}")
        return nums

    if name == "herzog":
        arity(0)
        return herzog_example()
    if name == "Irs":
        return sqfree_lex_ideal(*arity(2))
    if name == "thm":
        return theorem_main_ideal(*arity(2))
    if name in _FAMILIES:
        return family_ideal(name, *arity(1))
    if name == "star":
        return edge_ideal(star_triangle(*arity(1)))
    if name == "g2":
        return edge_ideal(g2_graph(*arity(1)))
    if name == "ferrers":
        return edge_ideal(ferrers_graph(*arity(1)))
    raise FamilyError(f"unknown family spec {spec!r}")
