import hypothesis.strategies as st
from hypothesis import settings

from monideal.ideal import RingContext, make_ideal

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def ideals(draw, max_vars=5, max_gens=6, max_exp=3, proper=True):
    n = draw(st.integers(1, max_vars))
    ring = RingContext.standard(n)
    low = 1 if proper else 0
    mono = st.tuples(*[st.integers(0, max_exp) for _ in range(n)]).filter(lambda m: sum(m) >= low)
    gens = draw(st.lists(mono, max_size=max_gens))
    return make_ideal(ring, gens)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(module.REPORT, key=lambda l: (l.startswith("INFO"),)):
        terminalreporter.write_line(line)
