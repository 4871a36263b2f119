import json
import subprocess
import sys
from fractions import Fraction as F
from importlib import resources

from calicert.cli import emit_region, main


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "calicert.cli", *args], capture_output=True, text=True
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_cert_minimal_search():
    rc, out, _ = run_cli("cert", "5*t^2-3*t+1", "0", "1")
    assert rc == 0
    assert "degree    3" in out
    assert "c[0] = 1" in out and "c[3] = 3" in out


def test_cert_fixed_degree_displayed_coefficients():
    rc, out, _ = run_cli("cert", "t^4-2*t^3-12*t^2-16*t+20", "-3", "1/2", "--degree", "4")
    assert rc == 0
    for frag in ("1520/2401", "144/2401", "3072/2401", "2188/2401", "141/2401"):
        assert frag in out


def test_cert_sign_change_fails():
    rc, out, _ = run_cli("cert", "t", "-1", "1")
    assert rc == 1
    assert "failure" in out
    assert "changes sign" in out


def test_cert_bad_interval_exit2():
    rc, _, err = run_cli("cert", "t", "1", "-1")
    assert rc == 2


def test_verify_eps_out_of_range_exit2():
    rc, _, err = run_cli("verify", "coass", "--eps", "1")
    assert rc == 2
    rc, _, err = run_cli("verify", "coass", "--eps", "0")
    assert rc == 2


def test_verify_bad_target_usage():
    rc, _, err = run_cli("verify", "nonsense")
    assert rc == 2


def test_verify_locus_json(tmp_path):
    out = tmp_path / "report.json"
    rc, _, _ = run_cli("verify", "locus", "--out", str(out))
    assert rc == 0
    data = json.loads(out.read_text())
    assert all(r["status"] == "verified" for r in data)


def test_tools_cross():
    rc, out, _ = run_cli("tools", "cross", "1,0,0,0,0,0,0", "0,1,0,0,0,0,0")
    assert rc == 0
    assert out.strip() == "0,0,0,0,-1,0,0"


def test_tools_triple():
    rc, out, _ = run_cli("tools", "triple", "0,1,0,0,0,0,0,0", "0,0,1,0,0,0,0,0", "0,0,0,1,0,0,0,0")
    assert rc == 0
    assert out.strip() == "1,0,0,0,0,0,0,0"


def test_tools_normalform_lo():
    rc, out, _ = run_cli("tools", "normalform", "--lo", "1,0,0,0")
    assert rc == 0
    assert "2.2360679775" in out and "1.11803398875" in out and "CG+" in out


def test_corpus_file_roundtrip(tmp_path):
    src = resources.files("calicert.data").joinpath("certificates.txt")
    out = tmp_path / "report.json"
    rc, _, _ = run_cli("cert", "--corpus", str(src), "--out", str(out))
    assert rc == 0
    rows = json.loads(out.read_text())
    assert len(rows) == 15
    assert all(r["degree_found"] == r["degree_claimed"] for r in rows)
    ids = {r["id"] for r in rows}
    assert "inner_top_quintic_right" in ids


def test_region_points_satisfy_equations():
    rows = emit_region(1, 80, F(1, 10))
    assert rows
    import math

    root8 = math.sqrt(8)
    for fig, cid, l1, l2 in rows:
        l3 = (l1 + l2) / (l1 * l2 - 1)
        if cid == "solid_sigma2_level":
            val = l1 * l2 + l2 * l3 + l3 * l1 + root8 - 0.1
        elif "p12" in cid:
            val = l1 * l2 - (1.0 if cid.endswith("plus") else -1.0)
        elif "p23" in cid:
            val = l2 * l3 - (1.0 if cid.endswith("plus") else -1.0)
        else:
            val = l3 * l1 - (1.0 if cid.endswith("plus") else -1.0)
        assert abs(val) <= 1e-8, (cid, l1, l2, val)


def test_region_symmetry_and_nonempty():
    for fig in (1, 2, 3):
        rows = emit_region(fig, 60, F(1, 10))
        solid = {(round(a, 9), round(b, 9)) for _, cid, a, b in rows if cid.startswith("solid")}
        dotted = {(round(a, 9), round(b, 9)) for _, cid, a, b in rows if cid.startswith("dotted")}
        assert solid and dotted
        assert all((b, a) in solid for a, b in solid)
        assert all((b, a) in dotted for a, b in dotted)


def test_region_solid_inside_dotted_fig2():
    from calicert.curvforms import quadform_values_at

    rows = emit_region(2, 60, F(1, 10))
    solid = [(a, b) for _, cid, a, b in rows if cid.startswith("solid")]
    assert solid
    for a, b in solid:
        l3 = (a + b) / (a * b - 1)
        assert all(d > 0 for d in quadform_values_at((a, b, l3)))


def test_region_fig3_positive_quadrant():
    rows = emit_region(3, 60, F(1, 10))
    assert rows
    assert all(l1 > 0 and l2 > 0 for _, _, l1, l2 in rows)


def test_region_resolution_cap():
    rc, _, err = run_cli("region", "1", "--resolution", "5000")
    assert rc == 2


def test_main_entry_direct():
    assert main(["tools", "cross", "1,0,0,0,0,0,0", "0,1,0,0,0,0,0"]) == 0
