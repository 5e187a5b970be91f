"""Claim-by-claim verification of the ideal families against closed forms.

Each suite returns a list of :class:`Check` rows.  Expected values are built
from the closed-form formulas with numpy convolutions and binomials, never
with the Hilbert engine's own polynomial code.  Series are compared as
rational functions by cross-multiplying the denominators.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Callable

import numpy as np

from . import families as fam
from .betti import betti_table, invariants_report, regularity, regularity_quotient
from .hilbert import hilbert_function_prefix, hilbert_series
from .ideal import (
    MonomialIdeal,
    colon_by_monomial,
    embed_tensor,
    extend_ring,
    ideal_from_strings,
    ideal_product,
    ideal_sum,
    is_squarefree_lexsegment,
    is_strongly_stable,
    make_ideal,
    variables_ideal,
)
from .oracle import brute_force_hilbert, random_ideal, taylor_betti

SUITES = ("herzog", "propA", "lemJ", "lemK", "propI", "thm", "remark", "section2", "lemmas", "oracle")

# desk-scale limits accepted from the command line
LIMITS = {"r": 8, "s": 8, "n": 8, "m": 8, "count": 1000}


@dataclass(frozen=True)
class Check:
    claim: str
    params: str
    expected: object
    computed: object

    @property
    def passed(self) -> bool:
        return self.expected == self.computed


# ---------------------------------------------------------------- closed forms


def _arr(coeffs) -> np.ndarray:
    return np.array(list(coeffs), dtype=object)


def _one_minus_t(k: int) -> np.ndarray:
    return _arr((-1) ** i * comb(k, i) for i in range(k + 1))


def _geometric(k: int) -> np.ndarray:
    """1 + t + ... + t^(k-1)."""
    return _arr([1] * k)


def _shifted(p: np.ndarray, k: int) -> np.ndarray:
    return np.concatenate([_arr([0] * k), p])


def _plus(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = _arr([0] * max(len(a), len(b)))
    out[: len(a)] += a
    out[: len(b)] += b
    return out


def _strip(p) -> list[int]:
    p = [int(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def same_series(num_a, den_a: int, num_b, den_b: int) -> bool:
    """num_a / (1-t)^den_a == num_b / (1-t)^den_b as rational functions."""
    k = max(den_a, den_b)
    lhs = np.convolve(_arr(num_a), _one_minus_t(k - den_a))
    rhs = np.convolve(_arr(num_b), _one_minus_t(k - den_b))
    return _strip(lhs) == _strip(rhs)


def _series_check(claim: str, params: str, I: MonomialIdeal, num, den: int) -> Check:
    hs = hilbert_series(I)
    expected = f"{_strip(num)} / (1-t)^{den}"
    computed = f"{list(hs.numerator)} / (1-t)^{hs.denom_power}"
    if same_series(hs.numerator, hs.denom_power, num, den):
        computed = expected
    return Check(claim, params, expected, computed)


def prop_lex_numerator(r: int, s: int) -> np.ndarray:
    return _plus(_geometric(r), _shifted(_one_minus_t(s - r), r))


def lemma_j_numerator(n: int) -> np.ndarray:
    return _arr([1, n, -(n - 2)] + [1] * (n - 1))


def lemma_k_numerator(n: int) -> np.ndarray:
    return _arr([1] + [n - i for i in range(1, n)])


def prop_i_numerator(n: int) -> np.ndarray:
    return _arr([1, n + 1])


def theorem_numerator(r: int, s: int) -> np.ndarray:
    return np.convolve(_arr([1, r - s + 1]), _geometric(s))


def ferrers_numerator(n: int) -> np.ndarray:
    return _arr([1, n - 1, -(n - 1)])


def staircase_numerator(n: int) -> np.ndarray:
    return _arr([1, n - 2])


def g2_h_polynomial(m: int) -> list[int]:
    binom = _arr(comb(m + 1, i) for i in range(m + 2))
    return _strip(_plus(binom, _shifted(_one_minus_t(m - 1), 1)))


# ---------------------------------------------------------------- suites


def herzog_checks(char: int = 0) -> list[Check]:
    I = fam.herzog_example()
    rep = invariants_report(I, char)
    p = "K[x1..x4]"
    return [
        Check("herzog: reg(S/I)", p, 2, rep.reg),
        Check("herzog: dim S/I", p, 1, rep.dim),
        Check("herzog: depth S/I", p, 0, rep.depth),
        Check("herzog: h-vector", p, [1, 3, 2], list(rep.h_coeffs)),
        Check("herzog: strongly stable", p, True, is_strongly_stable(I)),
        Check("herzog: Cohen-Macaulay", p, False, rep.is_CM),
    ]


def prop_lex_checks(r_range, s_range, char: int = 0) -> list[Check]:
    out = []
    for s in s_range:
        for r in r_range:
            if r > s:
                continue
            I = fam.sqfree_lex_ideal(r, s)
            p = f"r={r},s={s}"
            out.append(Check("I_rs: squarefree lexsegment", p, True, is_squarefree_lexsegment(I)))
            out.append(Check("I_rs: reg(S/I) = r", p, r, regularity_quotient(I, char)))
            out.append(_series_check("I_rs: Hilbert series", p, I, prop_lex_numerator(r, s), s))
            out.append(Check("I_rs: deg h = s", p, s, hilbert_series(I).h_degree))
    return out


def lemma_j_checks(n_range, char: int = 0) -> list[Check]:
    out = []
    for n in n_range:
        J = fam.family_ideal("J", n)
        p = f"n={n}"
        out.append(Check("J_n: reg(J_n) = n+2", p, n + 2, regularity(J, char)))
        out.append(_series_check("J_n: Hilbert series", p, J, lemma_j_numerator(n), n + 1))
    return out


def lemma_k_checks(n_range, char: int = 0) -> list[Check]:
    out = []
    for n in n_range:
        K = fam.family_ideal("K", n)
        p = f"n={n}"
        out.append(Check("K_n: reg(K_n) = n", p, n, regularity(K, char)))
        out.append(_series_check("K_n: Hilbert series", p, K, lemma_k_numerator(n), n - 1))
    return out


def prop_i_checks(n_range, char: int = 0) -> list[Check]:
    out = []
    for n in n_range:
        I = fam.family_ideal("I", n)
        p = f"n={n}"
        out.append(Check("I_n: reg(S/I_n) = n+1", p, n + 1, regularity_quotient(I, char)))
        out.append(_series_check("I_n: Hilbert series", p, I, prop_i_numerator(n), n + 1))
        out.append(Check("I_n: deg h = 1", p, 1, hilbert_series(I).h_degree))
    return out


def theorem_checks(r_range, s_range, char: int = 0) -> list[Check]:
    out = []
    for r in r_range:
        for s in s_range:
            I = fam.theorem_main_ideal(r, s)
            p = f"r={r},s={s}"
            out.append(Check("construction: reg(S/I) = r", p, r, regularity_quotient(I, char)))
            out.append(Check("construction: deg h = s", p, s, hilbert_series(I).h_degree))
            if r > s:
                out.append(_series_check("construction: Hilbert series", p, I, theorem_numerator(r, s), r))
            else:
                out.append(_series_check("construction: Hilbert series", p, I, prop_lex_numerator(r, s), s))
    return out


def remark_identity_checks(n: int) -> list[Check]:
    """Colon and sum identities linking I_n, J_n, K_n, L_n, as canonical generator sets."""
    I, J, K, L = (fam.family_ideal(w, n) for w in "IJKL")
    ring = I.ring
    y, z = (lambda i: f"y{i}"), (lambda i: f"z{i}")
    p = f"n={n}"

    def lift(X):
        return extend_ring(X, ring)

    def var(name, R=ring):
        return variables_ideal(R, [name])

    out = [
        Check("I_n + (y_n) = (y_n) + J_n", p,
              str(ideal_sum(var(y(n)), lift(J))), str(ideal_sum(I, var(y(n))))),
        Check("I_n : (y_n) = (z_{n-1}, z_n, z_{n+1}) + K_n", p,
              str(ideal_sum(variables_ideal(ring, [z(n - 1), z(n), z(n + 1)]), lift(K))),
              str(colon_by_monomial(I, ring.variable(y(n))))),
    ]
    JR = J.ring
    out.append(Check("J_n + (z_{n+1}) = (z_{n+1}) + L_n", p,
                     str(ideal_sum(var(z(n + 1), JR), extend_ring(L, JR))),
                     str(ideal_sum(J, var(z(n + 1), JR)))))
    head = ideal_from_strings(JR, ["*".join(["x"] + [z(i) for i in range(1, n + 1)])])
    out.append(Check("J_n : (z_{n+1}) = (x z_1..z_n) + (y_1..y_{n-1})", p,
                     str(ideal_sum(head, variables_ideal(JR, [y(i) for i in range(1, n)]))),
                     str(colon_by_monomial(J, JR.variable(z(n + 1))))))
    if n >= 3:
        KR = K.ring
        stair = fam.staircase_ideal(n)
        out.append(Check("K_n + (y_{n-1}) = (y_{n-1}) + staircase", p,
                         str(ideal_sum(var(y(n - 1), KR), extend_ring(stair, KR))),
                         str(ideal_sum(K, var(y(n - 1), KR)))))
        out.append(Check("K_n : (y_{n-1}) = (z_{n-2}) + K_{n-1}", p,
                         str(ideal_sum(var(z(n - 2), KR), extend_ring(fam.family_ideal("K", n - 1), KR))),
                         str(colon_by_monomial(K, KR.variable(y(n - 1))))))
    return out


def remark_ferrers_checks(n: int, char: int = 0) -> list[Check]:
    L, stair = fam.family_ideal("L", n), fam.staircase_ideal(n)
    p = f"n={n}"
    return [
        Check("L_n is the Ferrers graph edge ideal", p,
              str(L), str(fam.edge_ideal(fam.ferrers_graph(n)))),
        Check("reg(L_n) = 2", p, 2, regularity(L, char)),
        Check("reg(staircase) = 2", p, 2, regularity(stair, char)),
        _series_check("Hilbert series of L_n", p, L, ferrers_numerator(n), n),
        _series_check("Hilbert series of staircase", p, stair, staircase_numerator(n), n - 2),
    ]


def remark_checks(n_range, char: int = 0, ferrers_range=None) -> list[Check]:
    out = []
    for n in n_range:
        if n >= 2:
            out += remark_identity_checks(n)
    for n in ferrers_range if ferrers_range is not None else n_range:
        if n >= 3:
            out += remark_ferrers_checks(n, char)
    return out


def star_checks(m_range, char: int = 0) -> list[Check]:
    out = []
    for m in m_range:
        rep = invariants_report(fam.edge_ideal(fam.star_triangle(m)), char)
        p = f"m={m}"
        out.append(Check("star triangle: CM iff m = 1", p, m == 1, rep.is_CM))
        if m % 2 == 0:
            out.append(Check("star triangle: reg = m", p, m, rep.reg))
            out.append(Check("star triangle: deg h = m-1", p, m - 1, rep.deg_h))
        else:
            out.append(Check("star triangle: reg = deg h = m", p, (m, m), (rep.reg, rep.deg_h)))
    return out


def g2_checks(m_range, char: int = 0) -> list[Check]:
    out = []
    for m in m_range:
        rep = invariants_report(fam.edge_ideal(fam.g2_graph(m)), char)
        p = f"m={m}"
        if m >= 2:
            out.append(Check("G2: not Cohen-Macaulay", p, False, rep.is_CM))
        out.append(Check("G2: reg = deg h = m+1", p, (m + 1, m + 1), (rep.reg, rep.deg_h)))
        out.append(Check("G2: h-polynomial", p, g2_h_polynomial(m), list(rep.h_coeffs)))
        if m % 2:
            out.append(Check("G2: h-vector symmetric", p, True, rep.h_symmetric))
        if m == 3:
            out.append(Check("G2: h-vector (1,5,4,5,1)", p, [1, 5, 4, 5, 1], list(rep.h_coeffs)))
            out.append(Check("G2: h-vector unimodal", p, False, rep.h_unimodal))
    return out


def section2_checks(m_range, char: int = 0, star_range=None) -> list[Check]:
    return star_checks(star_range if star_range is not None else m_range, char) + g2_checks(m_range, char)


# ---------------------------------------------------------------- corpus and properties


def random_corpus(count: int, seed: int = 0, max_vars: int = 6, max_gens: int = 10) -> list[MonomialIdeal]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        out.append(
            random_ideal(
                rng, rng.randint(3, max_vars), max_gens,
                max_exp=rng.choice((1, 2, 3)), min_gens=2, max_deg=5,
            )
        )
    return out


def family_corpus() -> list[tuple[str, MonomialIdeal]]:
    """Every family instance named by the acceptance criteria."""
    out = [("herzog", fam.herzog_example())]
    out += [(f"Irs:{r},{s}", fam.sqfree_lex_ideal(r, s)) for s in range(1, 7) for r in range(1, s + 1)]
    for w in "IJK":
        out += [(f"{w}:{n}", fam.family_ideal(w, n)) for n in range(2, 6)]
    out += [(f"L:{n}", fam.family_ideal("L", n)) for n in range(3, 8)]
    out += [(f"staircase:{n}", fam.staircase_ideal(n)) for n in range(3, 8)]
    out += [(f"thm:{r},{s}", fam.theorem_main_ideal(r, s)) for r in range(1, 7) for s in range(1, 7)]
    out += [(f"star:{m}", fam.edge_ideal(fam.star_triangle(m))) for m in range(1, 8)]
    out += [(f"g2:{m}", fam.edge_ideal(fam.g2_graph(m))) for m in range(1, 7)]
    return out


def _disjoint_pair(rng: random.Random):
    a = random_ideal(rng, rng.randint(1, 4), 5, max_exp=2, prefix="x")
    b = random_ideal(rng, rng.randint(1, 4), 5, max_exp=2, prefix="y")
    return embed_tensor(a, b), a, b


def lemma_checks(count: int = 100, seed: int = 0, char: int = 0) -> list[Check]:
    rng = random.Random(seed)
    out = []
    corpus = random_corpus(count, seed)

    shift_bad = reg_bad = 0
    for I in corpus:
        ideal_table = taylor_betti(I, char, module=True)
        if ideal_table.entries != betti_table(I, char).to_ideal().entries:
            shift_bad += 1
        if ideal_table.reg != regularity_quotient(I, char) + 1:
            reg_bad += 1
    out.append(Check("Betti table of I is the shifted table of S/I", f"{count} ideals", 0, shift_bad))
    out.append(Check("reg(S/I) = reg(I) - 1", f"{count} ideals", 0, reg_bad))

    pairs = max(50, count // 2)
    bad = [0, 0, 0]
    for _ in range(pairs):
        (ring, I1, I2), a, b = _disjoint_pair(rng)
        r1, r2 = regularity(a, char), regularity(b, char)
        if regularity(ideal_product(I1, I2), char) != r1 + r2:
            bad[0] += 1
        if regularity(ideal_sum(I1, I2), char) != r1 + r2 - 1:
            bad[1] += 1
        if regularity_quotient(ideal_sum(I1, I2), char) != (
            regularity_quotient(a, char) + regularity_quotient(b, char)
        ):
            bad[2] += 1
    p = f"{pairs} pairs"
    out.append(Check("disjoint: reg(I1 I2) = reg I1 + reg I2", p, 0, bad[0]))
    out.append(Check("disjoint: reg(I1 + I2) = reg I1 + reg I2 - 1", p, 0, bad[1]))
    out.append(Check("disjoint: reg S/(I1 + I2) = reg S1/I1 + reg S2/I2", p, 0, bad[2]))

    trials = max(100, count)
    colon_bad = 0
    for _ in range(trials):
        I = random_ideal(rng, rng.randint(1, 6), 8, max_exp=2)
        reg_I = regularity(I, char)
        for j in I.support():
            x = tuple(1 if k == j else 0 for k in range(I.num_vars))
            bound = regularity(ideal_sum(I, make_ideal(I.ring, [x])), char)
            colon = colon_by_monomial(I, x)
            if not colon.is_unit():
                bound = max(bound, regularity(colon, char) + 1)
            if reg_I > bound:
                colon_bad += 1
    out.append(Check("colon bound: reg I <= max(reg(I:x) + 1, reg(I + x))", f"{trials} ideals", 0, colon_bad))

    pure_seen = pure_bad = 0
    for I in corpus + [I for _, I in family_corpus() if I.num_vars <= 10]:
        rep = invariants_report(I, char)
        if rep.has_pure_resolution:
            pure_seen += 1
            if rep.deg_h - rep.reg != rep.dim - rep.depth:
                pure_bad += 1
    out.append(Check("pure resolution: deg h - reg = dim - depth", f"{pure_seen} pure ideals", 0, pure_bad))
    return out


def oracle_checks(count: int = 100, seed: int = 0, chars=(0, 2), d_max: int = 8,
                  include_families: bool = True) -> list[Check]:
    corpus = random_corpus(count, seed)
    out = []
    for c in chars:
        bad = sum(1 for I in corpus if taylor_betti(I, c) != betti_table(I, c))
        out.append(Check(f"Hochster = Taylor (char {c})", f"{count} ideals", 0, bad))
    bad = sum(1 for I in corpus if brute_force_hilbert(I, d_max) != hilbert_function_prefix(I, d_max))
    out.append(Check("Hilbert engine = standard monomial count", f"{count} ideals, k<={d_max}", 0, bad))
    if include_families:
        fams = family_corpus()
        bad_names = [n for n, I in fams if brute_force_hilbert(I, d_max) != hilbert_function_prefix(I, d_max)]
        out.append(Check("Hilbert engine = standard monomial count", f"{len(fams)} family ideals, k<={d_max}",
                         [], bad_names))
    return out


def characteristic_flags(ideals, chars=(0, 2)) -> list[str]:
    """Names whose Betti tables differ between the given characteristics."""
    flagged = []
    for name, I in ideals:
        tables = {c: betti_table(I, c) for c in chars}
        if len({tuple(t.entries.items()) for t in tables.values()}) > 1:
            flagged.append(name)
    return flagged


def run_suite(name: str, ranges: dict, char: int = 0) -> list[Check]:
    r = ranges.get("r", range(1, 5))
    s = ranges.get("s", range(1, 5))
    n = ranges.get("n", range(2, 6))
    m = ranges.get("m", range(1, 7))
    count = ranges.get("count", 100)
    seed = ranges.get("seed", 0)
    runners: dict[str, Callable[[], list[Check]]] = {
        "herzog": lambda: herzog_checks(char),
        "propA": lambda: prop_lex_checks(r, s, char),
        "lemJ": lambda: lemma_j_checks(n, char),
        "lemK": lambda: lemma_k_checks(n, char),
        "propI": lambda: prop_i_checks(n, char),
        "thm": lambda: theorem_checks(r, s, char),
        "remark": lambda: remark_checks(n, char),
        "section2": lambda: section2_checks(m, char),
        "lemmas": lambda: lemma_checks(count, seed, char),
        "oracle": lambda: oracle_checks(count, seed),
    }
    if name == "all":
        return [row for key in SUITES for row in runners[key]()]
    if name not in runners:
        raise ValueError(f"unknown suite {name!r}")
    return runners[name]()
