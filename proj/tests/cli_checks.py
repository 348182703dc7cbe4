#!/usr/bin/env python3
"""End-to-end checks for the command-line front end: output values, JSON
shape, and exit codes."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = Path(sys.argv[1])

PATH5 = "1 2\n2 3\n3 4\n4 5\n"
PATH3 = "1 2\n2 3\n"
PATH11 = "".join(f"{i} {i+1}\n" for i in range(1, 11))
SPIDER9 = "1 2\n2 3\n3 6\n3 4\n4 5\n6 7\n6 8\n6 9\n"

checks = 0


def run(*args, expect_code=0):
    global checks
    proc = subprocess.run([str(BIN), *args], capture_output=True, text=True)
    ok = proc.returncode != 0 if expect_code == "nonzero" else proc.returncode == expect_code
    assert ok, f"{args}: exit {proc.returncode}, expected {expect_code}\n{proc.stderr}"
    checks += 1
    return proc.stdout


def main():
    tmp = Path(tempfile.mkdtemp())
    for name, text in [("path5", PATH5), ("path3", PATH3), ("path11", PATH11),
                       ("spider9", SPIDER9)]:
        (tmp / f"{name}.tree").write_text(text)

    out = run("diam", str(tmp / "path5.tree"))
    assert out.strip() == "10", out

    ft = json.loads(run("--json", "ft", str(tmp / "path5.tree")))
    assert ft["value"] == 10 and ft["permutations_scanned"] == 120, ft
    witness = [int(x) for x in ft["witness"].split(",")]
    assert sorted(witness) == [1, 2, 3, 4, 5], ft

    out = run("alga", str(tmp / "spider9.tree"), "--all")
    assert "B = {20, 22}; beta_max = 22" in out, out

    alga = json.loads(run("--json", "alga", str(tmp / "spider9.tree"), "--all"))
    assert alga["beta"] in (20, 22), alga
    assert alga["beta_set"]["values"] == [20, 22], alga
    assert alga["beta_set"]["beta_max"] == 22, alga
    # claimed witness runs must replay to their value
    for value, witness_run in alga["beta_set"]["witnesses"].items():
        total = sum(2 * d - 1 for d in witness_run["per_step_diameters"])
        total += len(witness_run["leftover"]) - 1
        assert total == int(value) == witness_run["beta"], witness_run

    srt = json.loads(run("--json", "sort", str(tmp / "path3.tree"), "--perm", "3,2,1",
                         "--method", "admissible"))
    assert srt["verified"] and srt["length"] == 3, srt

    trees = run("enum-trees", "--n", "5")
    assert trees.count("\n\n") == 2, trees  # 3 blocks
    et = json.loads(run("--json", "enum-trees", "--n", "5"))
    assert et["count"] == 3, et

    rows = json.loads(run("--json", "strictness", "--from", "5", "--to", "6"))
    assert [r["delta_n"] for r in rows] == [1, 2], rows
    assert [r["s_n"] for r in rows] == [3, 6], rows

    cache = tmp / "cache.txt"
    run("strictness", "--from", "5", "--to", "5", "--cache", str(cache))
    assert cache.exists() and len(cache.read_text().splitlines()) == 3

    run("examples")

    # input errors -> 1
    run("diam", str(tmp / "missing.tree"), expect_code=1)
    run("sort", str(tmp / "path3.tree"), "--perm", "3,2,2", "--method", "admissible",
        expect_code=1)
    run("nonsense", expect_code="nonzero")
    # resource refusals -> 2
    run("diam", str(tmp / "path11.tree"), expect_code=2)
    run("strictness", "--from", "5", "--to", "10", expect_code=2)

    print(f"cli checks passed ({checks} commands)")


if __name__ == "__main__":
    main()
