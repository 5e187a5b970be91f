"""End-to-end acceptance criteria, one PASS/FAIL line per criterion.

The lines are printed in pytest's terminal summary, or directly when this
file is run as a script.
"""

import pytest

from monideal.families import edge_ideal, g2_graph, star_triangle
from monideal.verify import (
    characteristic_flags,
    family_corpus,
    herzog_checks,
    lemma_checks,
    lemma_j_checks,
    lemma_k_checks,
    oracle_checks,
    prop_i_checks,
    prop_lex_checks,
    remark_checks,
    section2_checks,
    theorem_checks,
)

CRITERIA = {
    1: ("Herzog's strongly stable ideal: reg 2, dim 1, depth 0, h = (1,3,2)", lambda: herzog_checks()),
    2: ("squarefree lexsegment I_rs, 1 <= r <= s <= 6", lambda: prop_lex_checks(range(1, 7), range(1, 7))),
    3: ("colon/sum identities n = 2..6, Ferrers ideals n = 3..7",
        lambda: remark_checks(range(2, 7), ferrers_range=range(3, 8))),
    4: ("J_n regularity and Hilbert series, n = 2..5", lambda: lemma_j_checks(range(2, 6))),
    5: ("K_n regularity and Hilbert series, n = 2..5", lambda: lemma_k_checks(range(2, 6))),
    6: ("I_n regularity and Hilbert series, n = 2..5", lambda: prop_i_checks(range(2, 6))),
    7: ("(reg, deg h) = (r, s) construction, 1 <= r, s <= 6",
        lambda: theorem_checks(range(1, 7), range(1, 7))),
    8: ("star triangles, m = 1..7", lambda: section2_checks(range(1, 1), star_range=range(1, 8))),
    9: ("triangles with a tail, m = 1..6", lambda: section2_checks(range(1, 7), star_range=range(1, 1))),
    10: ("shift, disjoint-sum, colon-bound and pure-resolution properties",
         lambda: lemma_checks(count=100, seed=0)),
    11: ("Hochster vs Taylor (char 0, 2) and Hilbert vs brute force", lambda: oracle_checks(count=100, seed=0)),
}

# collected by the terminal summary hook in conftest.py
REPORT: list[str] = []


def evaluate(number):
    title, run = CRITERIA[number]
    checks = run()
    failed = [c for c in checks if not c.passed]
    status = "PASS" if checks and not failed else "FAIL"
    lines = [f"{status} criterion {number}: {title} ({len(checks) - len(failed)}/{len(checks)} checks)"]
    lines += [f"    FAIL {c.claim} [{c.params}] expected={c.expected!r} computed={c.computed!r}" for c in failed]
    return status == "PASS", lines


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, lines = evaluate(number)
    REPORT.extend(lines)
    print("\n" + "\n".join(lines))
    assert ok


def test_characteristic_two_differences_are_reported():
    # Regularity claims are checked in characteristic 0; differences in
    # characteristic 2 are only listed, never asserted away.
    named = family_corpus() + [
        (f"star:{m}", edge_ideal(star_triangle(m))) for m in range(1, 8)
    ] + [(f"g2:{m}", edge_ideal(g2_graph(m))) for m in range(1, 7)]
    flagged = characteristic_flags(named)
    line = f"INFO characteristic 0 vs 2 Betti table differences: {', '.join(flagged) or 'none'}"
    REPORT.append(line)
    print("\n" + line)
    assert isinstance(flagged, list)


if __name__ == "__main__":
    import sys

    results = [evaluate(n) for n in sorted(CRITERIA)]
    for _, lines in results:
        print("\n".join(lines))
    sys.exit(0 if all(ok for ok, _ in results) else 1)
