import sys
from functools import lru_cache

from pcontract.chevalley import ParabolicContraction
from pcontract.hwmod import chevalley_for
from pcontract.rootsys import Weight, build_root_system, parse_subset

TEST_MATRIX = [("A1", ""), ("A2", ""), ("A2", "1"), ("A3", "1,2"), ("B2", "1"), ("B2", "2")]


@lru_cache(maxsize=None)
def rsys(t):
    return build_root_system(t)


@lru_cache(maxsize=None)
def contraction(t, pp=""):
    rs = rsys(t)
    return ParabolicContraction(chevalley_for(rs), parse_subset(pp, rs.rank))


def W(*c):
    return Weight(c)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
