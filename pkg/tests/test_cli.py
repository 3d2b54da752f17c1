import io
import json
from fractions import Fraction

import pytest

from macaulay.cli import load_roots, load_system, run
from macaulay.errors import PolySyntaxError
from macaulay.polycore import parse_poly


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv, "--json")
    assert code == 0, err
    return json.loads(out)


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return path


def test_load_system(tmp_path):
    S = load_system(write(tmp_path, "a.sys", "vars: x y\nx^2 - y\ny^2\n"))
    assert S.vars == ("x", "y") and len(S.polys) == 2
    assert S.polys[0] == parse_poly("x^2 - y", ["x", "y"])


def test_load_system_missing_header(tmp_path):
    with pytest.raises(PolySyntaxError) as info:
        load_system(write(tmp_path, "a.sys", "x^2 - y\ny^2\n"))
    assert info.value.line == 1


def test_load_system_comments(tmp_path):
    S = load_system(write(tmp_path, "a.sys", "# header next\nvars: x y\n\n# F\nx  # first\ny\n"))
    assert len(S.polys) == 2


def test_load_system_error_location(tmp_path):
    with pytest.raises(PolySyntaxError) as info:
        load_system(write(tmp_path, "a.sys", "vars: x y\nx\n  y + * x\n"))
    assert (info.value.line, info.value.position) == (3, 6)
    assert "a.sys" in str(info.value) and "line 3" in str(info.value)
    with pytest.raises(PolySyntaxError) as info:
        load_system(write(tmp_path, "b.sys", "vars: x y\nx + z\n"))
    assert info.value.line == 2
    with pytest.raises(PolySyntaxError):
        load_system(write(tmp_path, "c.sys", "vars: x y\n"))
    with pytest.raises(PolySyntaxError):
        load_system(write(tmp_path, "d.sys", "vars: x x\nx\n"))


def test_load_roots(tmp_path):
    pts = load_roots(write(tmp_path, "r", "1, 0\n# c\n-1/2,3\n"), 2)
    assert pts == [(1, 0), (Fraction(-1, 2), 3)]
    with pytest.raises(PolySyntaxError):
        load_roots(write(tmp_path, "s", "1,0,0\n"), 2)


def test_mult(data_dir):
    code, out, _ = call("mult", "--system", str(data_dir / "f3.sys"), "--point", "0,0")
    assert code == 0 and "multiplicity: 4" in out
    rep = call_json("mult", "--system", str(data_dir / "f3.sys"), "--point", "0,0")
    assert rep["command"] == "mult" and rep["multiplicity"] == 4


def test_dual(data_dir):
    rep = call_json("dual", "--system", str(data_dir / "f3.sys"), "--point", "0,0")
    assert rep["basis"] == ["1", "l1", "1/2*l1^2 + l2", "1/6*l1^3 + l1*l2"]
    # reports reparse in the dual variables
    for b in rep["basis"]:
        parse_poly(b, ["l1", "l2"])


def test_bezout(data_dir):
    rep = call_json("bezout", "--system", str(data_dir / "f4.sys"))
    assert rep["verdict"] == "MATCH" and rep["total"] == 2
    assert "infinity_evidence" not in rep
    rep = call_json("bezout", "--system", str(data_dir / "f4.sys"), "--roots", str(data_dir / "f4.roots"))
    assert rep["total"] == 2
    rep = call_json("bezout", "--system", str(data_dir / "parallel.sys"))
    assert rep["verdict"] == "DEFICIT"
    assert rep["infinity_evidence"] == {"present": True, "common_factor": "x - y"}
    rep = call_json("bezout", "--system", str(data_dir / "f8.sys"))
    assert rep["verdict"] == "INFINITE" and rep["total"] == "infinite"
    rep = call_json("bezout", "--system", str(data_dir / "f7.sys"))
    assert rep["verdict"] == "DEFICIT" and "infinity_evidence" not in rep


def test_bezout_invalid_root(tmp_path, data_dir):
    roots = write(tmp_path, "r", "0,0\n")
    code, _, err = call("bezout", "--system", str(data_dir / "f4.sys"), "--roots", str(roots))
    assert code == 2 and "(0,0)" in err


def test_member(data_dir):
    rep = call_json("member", "--system", str(data_dir / "f2.sys"), "--poly", "x")
    assert rep["member"] is False and rep["oracle_agreement"] is True
    assert rep["witness"] == {"point": ["0", "0"], "functional": "l1", "value": "1"}
    rep = call_json("member", "--system", str(data_dir / "f3.sys"), "--poly", "y - x^2")
    assert rep["member"] is True and "witness" not in rep


def test_power(data_dir):
    rep = call_json("power", "--system", str(data_dir / "f2.sys"), "--poly", "x")
    assert rep["certificate"] == {"m": 2, "bound": 3}
    code, _, err = call("power", "--system", str(data_dir / "f2.sys"), "--poly", "x - 1")
    assert code == 1 and "NotVanishing" in err


def test_gb_and_solve(data_dir):
    rep = call_json("gb", "--system", str(data_dir / "f3.sys"), "--order", "lex")
    assert rep["basis"] == ["x^2 - y", "y^2"] and rep["quotient_dimension"] == 4
    rep = call_json("gb", "--system", str(data_dir / "f8.sys"), "--order", "grevlex")
    assert rep["basis"] == ["x"] and rep["standard_monomials"] == "infinite"
    rep = call_json("solve", "--system", str(data_dir / "f4.sys"))
    assert rep["points"] == [["-1", "0"], ["1", "0"]]


@pytest.mark.parametrize(
    "argv,code,needle",
    [
        (["solve", "--system", "irr.sys"], 1, "IrrationalRoots"),
        (["solve", "--system", "f8.sys"], 1, "NotZeroDimensional"),
        (["mult", "--system", "f8.sys", "--point", "0,1"], 1, "NonIsolatedPoint"),
        (["mult", "--system", "f3.sys", "--point", "0"], 2, "coordinates"),
        (["member", "--system", "f3.sys", "--poly", "x + w"], 2, "'w'"),
        (["gb", "--system", "nope.sys"], 2, "nope.sys"),
        (["frobnicate", "--system", "f3.sys"], 2, ""),
        (["mult", "--system", "f3.sys"], 2, ""),
    ],
)
def test_exit_codes(data_dir, argv, code, needle):
    argv = [str(data_dir / a) if a.endswith(".sys") else a for a in argv]
    got, _, err = call(*argv)
    assert got == code
    assert needle in err


def test_json_rationals_round_trip(tmp_path):
    path = write(tmp_path, "h.sys", "vars: x y\nx^2 - 1/9\ny - 3/2*x\n")
    rep = call_json("solve", "--system", str(path))
    pts = [tuple(Fraction(c) for c in p) for p in rep["points"]]
    assert pts == [(Fraction(-1, 3), Fraction(-1, 2)), (Fraction(1, 3), Fraction(1, 2))]
    rep = call_json("bezout", "--system", str(path))
    assert [Fraction(c) for c in rep["roots"][1]["point"]] == [Fraction(1, 3), Fraction(1, 2)]
