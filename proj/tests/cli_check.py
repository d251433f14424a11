"""End-to-end checks of the qmh command line tool (invoked by ctest)."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

QMH = sys.argv[1]


def run(*args, data=None, expect_rc=0):
    proc = subprocess.run([QMH, *args], capture_output=True, text=True, input=data)
    assert proc.returncode == expect_rc, (args, proc.returncode, proc.stderr)
    return proc


def main():
    out = json.loads(run("count", "--profile", "3", "--order", "7", "--format", "json").stdout)
    assert out["coefficients"] == ["3", "9", "27", "45", "90"]
    assert out["first_exponent"] == 3

    out = json.loads(run("sv", "--profile", "2,2", "--p", "-1", "--order", "5",
                         "--which", "connected", "--format", "json").stdout)
    assert out["coefficients"] == ["5/2", "20", "75", "200"]

    out = json.loads(run("volume", "--genus", "3", "--format", "json").stdout)
    assert out["vol_emz"] == {"pi^6": "1/4860"}

    out = json.loads(run("cumulant", "--indices", "2,2,2,2", "--format", "json").stdout)
    assert out["rational"] == "-28/27"

    # recognition through stdin round trip
    series = run("qbracket", "--monomial", "2", "--order", "12", "--format", "json").stdout
    coeffs = json.loads(series)["coefficients"]
    payload = json.dumps({"order": 12, "coefficients": coeffs})
    out = json.loads(run("recognize", "--input", "-", "--max-weight", "2",
                         "--format", "json", data=payload).stdout)
    assert out["form"] == {"(1,0,0)": "-1/24"}

    # a non-quasimodular series exits 1 with a structured diagnostic
    bad = json.dumps({"order": 12, "coefficients": [str(n * n * n % 7) for n in range(13)]})
    proc = run("recognize", "--input", "-", "--max-weight", "2", data=bad, expect_rc=1)
    assert json.loads(proc.stderr.strip())["error"] == "no_solution"

    # flag errors exit 2
    run("count", "--order", "5", expect_rc=2)
    run("nonsense", expect_rc=2)

    # tables are byte-stable across runs
    with tempfile.TemporaryDirectory() as tmp:
        d1, d2 = Path(tmp) / "a", Path(tmp) / "b"
        run("tables", "--outdir", str(d1))
        run("tables", "--outdir", str(d2))
        files1 = sorted(p.name for p in d1.iterdir())
        assert files1 == sorted(p.name for p in d2.iterdir()) and files1
        for name in files1:
            assert (d1 / name).read_bytes() == (d2 / name).read_bytes(), name
        vol = (d1 / "volumes.csv").read_text().splitlines()
        assert vol[1].startswith("2,1/1350 * pi^4,1/135 * pi^4")

    print("cli checks passed")


if __name__ == "__main__":
    main()
