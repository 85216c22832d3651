import json
import subprocess
import sys

import pytest

from corpus import random_elements
from uqtw.cli import (
    EXIT_FUEL, EXIT_INPUT, EXIT_OK, EXIT_RESIDUAL, CliSyntaxError, IndexOutOfRange, parse, parse_element, run,
)
from uqtw.freealg import gen
from uqtw.pbwengine import band, normalize
from uqtw.poisson import PoissonPoly
from uqtw.qscalar import Q


def test_spec_examples():
    code, out = run(["verify", "--n", "2", "--suite", "ybe"])
    assert code == EXIT_OK
    code, out = run(["normalize", "--n", "2", "s[4,3]"])
    assert (code, out.strip()) == (EXIT_OK, "s[2,1]")
    code, out = run(["basis", "--n", "2", "--degree", "2"])
    assert code == EXIT_OK and len(out.strip().splitlines()) == 10


def test_parse_examples():
    assert parse("q*s[3,2]*s[2,1] - s[2,1]*s[3,2]", 2)
    with pytest.raises(IndexOutOfRange):
        parse("s[1,2]", 2)
    x = parse_element("B[1]^2*B[2]", 2)
    assert x.letters() == {(2, 1), (3, 2)}


def test_syntax_error_position():
    with pytest.raises(CliSyntaxError) as exc:
        parse("s[2,1] + * s[3,1]", 2)
    assert exc.value.pos == 9


def test_whitespace_insignificant():
    assert parse_element("q * s[3,2]*s[2, 1]", 2) == parse_element("q*s[3,2]*s[2,1]", 2)


def test_scalars_and_powers():
    assert parse_element("(q - q^-1)^2 * s[2,1]", 2) == gen(2, 2, 1).scale((Q - Q.inverse()) ** 2)
    assert isinstance(parse_element("2*a[2,1]^2", 2), PoissonPoly)
    with pytest.raises(ValueError):
        parse_element("a[2,1]*s[2,1]", 2)


@pytest.mark.parametrize("argv, code", [
    (["normalize", "--n", "2", "s[1,2]"], EXIT_INPUT),
    (["normalize", "--n", "2", "s[2,1]+"], EXIT_INPUT),
    (["normalize", "--n", "9", "s[2,1]"], EXIT_INPUT),
    (["normalize", "--n", "2", "--fuel", "0", "s[2,1]"], EXIT_INPUT),
    (["braid", "--n", "2", "--word", "3", "s[2,1]"], EXIT_INPUT),
    (["verify", "--n", "2", "--suite", "nonsense"], EXIT_INPUT),
    (["verify", "--n", "2", "--suite", "psi"], EXIT_RESIDUAL),
    (["verify", "--n", "2", "--suite", "serre"], EXIT_RESIDUAL),
    (["verify", "--n", "2", "--suite", "serre", "--corrected"], EXIT_OK),
    (["normalize", "--n", "3", "--fuel", "1", "s[6,5]*s[5,1]*s[3,2]*s[2,1]"], EXIT_FUEL),
])
def test_exit_codes(argv, code):
    assert run(argv)[0] == code


def test_fuel_partial_reported():
    code, out = run(["normalize", "--n", "3", "--fuel", "1", "--format", "json", "s[6,5]*s[5,1]*s[3,2]*s[2,1]"])
    assert code == EXIT_FUEL
    data = json.loads(out)
    assert data["status"] == "fuel_exhausted" and data["result"]


def test_json_schema():
    code, out = run(["normalize", "--n", "2", "--format", "json", "q*s[3,2]*s[2,1] - s[2,1]*s[3,2]"])
    data = json.loads(out)
    assert set(data) == {"status", "rank", "result", "residuals"}
    assert data["rank"] == 2 and data["status"] == "ok"
    for term in data["result"]:
        assert set(term) == {"coeff", "word"}
        assert isinstance(term["coeff"]["num"], str) and isinstance(term["coeff"]["den"], str)
        assert all(len(g) == 2 for g in term["word"])
    assert [t["word"] for t in data["result"]] == [[[3, 1]], [[2, 1], [3, 2]]]


def test_json_residuals():
    code, out = run(["verify", "--n", "2", "--suite", "psi", "--format", "json"])
    data = json.loads(out)
    assert code == EXIT_RESIDUAL and data["status"] == "residual" and len(data["residuals"]) == 2


def test_commutator_and_poisson():
    code, out = run(["commutator", "--n", "2", "s[3,1]", "s[2,1]"])
    x = gen(2, 3, 1) * gen(2, 2, 1) - gen(2, 2, 1) * gen(2, 3, 1)
    assert code == EXIT_OK and parse_element(out.strip(), 2) == normalize(x)
    code, out = run(["poisson", "--n", "2", "a[3,1]", "a[2,1]"])
    assert out.strip() == "2 * a[3,2] - 2 * a[4,1] - 2 * a[2,1]*a[3,1]"


def test_braid_inverse_word():
    code, out = run(["braid", "--n", "2", "--word", "1,-1", "s[3,2]"])
    assert code == EXIT_OK and parse_element(out.strip(), 2) == band(2, 2)


@pytest.mark.parametrize("suite", ["reflection", "relations", "central", "confluence", "iserre",
                                   "jacobi", "matrix-form", "classical-limit"])
def test_passing_suites_n2(suite):
    code, out = run(["verify", "--n", "2", "--suite", suite])
    assert code == EXIT_OK, out


def test_verify_all_corrected_n2():
    code, out = run(["verify", "--n", "2", "--suite", "all", "--corrected"])
    assert code == EXIT_OK, out


def test_round_trip():
    for n, x, text, poisson in random_elements(1000):
        assert parse_element(text, n, poisson=poisson) == x, text


def test_deterministic_subprocess():
    argv = [sys.executable, "-m", "uqtw", "commutator", "--n", "3", "--format", "json", "s[5,2]", "s[4,1]*s[3,2]"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a
