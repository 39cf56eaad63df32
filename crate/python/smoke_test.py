"""Smoke test for the `bicomm` extension module.

Builds the cdylib with cargo (unless BICOMM_LIB points at one), copies it
next to a temporary `bicomm.so` and imports it.
"""

import os
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load():
    lib = os.environ.get("BICOMM_LIB")
    if lib is None:
        subprocess.run(
            ["cargo", "build", "-p", "bicomm-py", "--features", "extension-module"],
            cwd=ROOT,
            check=True,
        )
        lib = ROOT / "target" / "debug" / "libbicomm.so"
    tmp = tempfile.mkdtemp()
    shutil.copy(lib, Path(tmp) / "bicomm.so")
    sys.path.insert(0, tmp)
    import bicomm

    return bicomm


def main():
    bicomm = load()

    q = bicomm.Quotient.from_file(str(ROOT / "presentations" / "example_sec2.pres"))
    r = q.gk()
    assert (r["c_s"], r["gk"]) == (3, 4), r
    assert q.gk_oracle() == 4
    assert q.kind == "commutative" and q.input_was_gsb is None

    q = bicomm.Quotient("algebra commutative\nvars x y\nrel x^2 - y\nrel x y - x\n")
    assert len(q.basis()) == 3
    assert q.equal("y^2", "y")

    free = bicomm.Quotient("algebra bicommutative\nvars x1 x2 x3\n")
    assert free.gk()["gk"] == 6 and free.gk()["n_s"] == 1
    assert free.equal("( x1 ( x2 x3 ) )", "( x2 ( x1 x3 ) )")
    assert free.equal("( ( x1 x2 ) x3 )", "( ( x1 x3 ) x2 )")

    diag = bicomm.Quotient("algebra bicommutative\nvars x1 x2\nrel x2 - x1\n")
    assert diag.input_was_gsb is False
    assert diag.gk()["gk"] == 2
    assert diag.equal("(x1 x1)", "(x1 x2)")
    assert diag.growth_degree(40) == 2
    again = bicomm.Quotient(diag.to_text())
    assert again.input_was_gsb and again.basis() == diag.basis()

    drop = bicomm.Quotient.from_file(str(ROOT / "presentations" / "drop_of_two.pres"))
    assert drop.growth(4) == [0, 2, 3, 5, 8]
    assert drop.irreducible(2) == ["x2", "x1", "[x2; x2]"]

    assert bicomm.gk_commutative(6, [[2, 3, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0]]) == (3, 4)
    s = [([1, 0], [1, 0]), ([1, 0], [0, 1]), ([0, 1], [1, 0])]
    assert bicomm.gk_bicommutative(2, s) == (1, 2)
    assert bicomm.gk_bicommutative(2, s + [([0, 1], [0, 1])]) == (1, 0)
    assert bicomm.gk_bicommutative_oracle(2, s) == 2
    assert bicomm.normalize_term("((x1 x2) (x3 x1))", ["x1", "x2", "x3"]) == "[x1 x3; x1 x2]"

    try:
        bicomm.Quotient("algebra bicommutative\nvars x1 x2 x3\nrel ( x1 x2 x3 )\n")
    except ValueError as e:
        assert "line 3" in str(e)
    else:
        raise AssertionError("expected a parse error")

    try:
        bicomm.Quotient("algebra bicommutative\nvars x1 x2\nrel x2 - x1\n", max_steps=1)
    except bicomm.BudgetError:
        pass
    else:
        raise AssertionError("expected the budget to run out")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
