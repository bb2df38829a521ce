import sys

import pytest

from altdimap.core import AlternatingDimap, from_triple, PermutationTriple
from altdimap.formats import parse_adm

U_TEXT = '{"format":"adm-v1","vertices":[{"id":"v","rot":["+e","-e"]}],"edges":[{"id":"e","tail":"v","head":"v"}]}'


@pytest.fixture
def ultraloop():
    return parse_adm(U_TEXT)


@pytest.fixture
def digon():
    return AlternatingDimap.from_rotation({"u": ["+a", "-b"], "v": ["+b", "-a"]},
                                          {"a": ("u", "v"), "b": ("v", "u")})


@pytest.fixture
def torus():
    # one vertex, three loops interleaved so that every face has size three
    return from_triple(PermutationTriple.from_pair({"a": "b", "b": "c", "c": "a"},
                                                   {"a": "b", "b": "c", "c": "a"}))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.report_lines():
        terminalreporter.write_line(line)
