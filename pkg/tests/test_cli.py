import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from diskstab.cli import main
from diskstab.fileio import FormatError, read_certificate, read_instance, write_instance
from diskstab.geometry import Disk, Halfplane


def run(*argv):
    return main([str(a) for a in argv])


def gen(tmp_path, n=50, seed=7, name="inst.json", **kw):
    path = tmp_path / name
    extra = [x for k, v in kw.items() for x in (f"--{k.replace('_', '-')}", v)]
    assert run("gen", "--n", n, "--seed", seed, "-o", path, *extra) == 0
    return path


def test_gen_stab_verify(tmp_path):
    inst = gen(tmp_path)
    cert = tmp_path / "cert.json"
    assert run("stab", "-i", inst, "-o", cert) == 0
    points, delta, seed = read_certificate(cert.read_text())
    assert 1 <= len(points) <= 5 and delta == 0 and seed == 0
    assert run("verify", "-i", inst, "-c", cert) == 0


def test_sorted_algorithm(tmp_path):
    inst = gen(tmp_path, radius_spread=1.0, slack=0.01)
    cert = tmp_path / "cert.json"
    assert run("stab", "-i", inst, "-o", cert, "--algorithm", "sorted") == 0
    assert run("verify", "-i", inst, "-c", cert) == 0


def test_round_trip_for_many_seeds(tmp_path):
    for seed in range(100):
        inst = gen(tmp_path, n=20, seed=seed, radius_spread=1.5, slack=0.01)
        cert = tmp_path / "cert.json"
        assert run("stab", "-i", inst, "-o", cert, "--seed", seed) == 0
        assert run("verify", "-i", inst, "-c", cert) == 0


def test_verify_fails_on_a_bad_certificate(tmp_path, capsys):
    inst = gen(tmp_path)
    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps({"points": [{"x": 100.0, "y": 100.0}], "trace": {}, "delta": 0.0,
                                "seed": 0, "translation": {"dy": 0.0}}))
    assert run("verify", "-i", inst, "-c", cert) == 1
    assert "contains no certificate point" in capsys.readouterr().out


def test_invalid_instance_exit_code(tmp_path):
    inst = tmp_path / "bad.json"
    inst.write_text(json.dumps({"disks": [{"cx": 0, "cy": 0, "r": 1}, {"cx": 5, "cy": 0, "r": 1}]}))
    assert run("stab", "-i", inst, "--validate") == 2


@pytest.mark.parametrize("doc", [
    "not json",
    {"disks": []},
    {"disks": [{"cx": 0, "cy": 0}]},
    {"disks": [{"cx": 0, "cy": 0, "r": 1, "color": "red"}]},
    {"disks": [{"cx": 0, "cy": 0, "r": -1}]},
    {"disks": [{"cx": 0, "cy": 0, "r": True}]},
    {"disks": [], "extra": 1},
    {"halfplanes": [{"nx": 0, "ny": 0, "offset": 1}]},
])
def test_strict_parsing(tmp_path, doc):
    inst = tmp_path / "bad.json"
    inst.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    with pytest.raises(FormatError):
        read_instance(inst.read_text())
    assert run("stab", "-i", inst) == 2


def test_instance_round_trip():
    fam = [Disk(0.1, 0.2, 0.3, 0), Disk(1.0 / 3.0, 2.0, 1e-7, 1), Halfplane(0.6, 0.8, -2.5, 2)]
    text = write_instance(fam)
    assert read_instance(text) == fam
    assert write_instance(read_instance(text)) == text


def test_halfplane_normals_are_normalized():
    fam = read_instance(json.dumps({"disks": [{"cx": 0, "cy": 0, "r": 1}],
                                    "halfplanes": [{"nx": 0, "ny": 2, "offset": 4}]}))
    assert fam[1] == Halfplane(0.0, 1.0, 2.0, 1)


def test_outputs_are_byte_deterministic(tmp_path):
    a = gen(tmp_path, name="a.json", radius_spread=1.0, slack=0.01, seed=3)
    b = gen(tmp_path, name="b.json", radius_spread=1.0, slack=0.01, seed=3)
    assert a.read_bytes() == b.read_bytes()
    ca, cb = tmp_path / "ca.json", tmp_path / "cb.json"
    run("stab", "-i", a, "-o", ca, "--seed", 4)
    run("stab", "-i", b, "-o", cb, "--seed", 4)
    assert ca.read_bytes() == cb.read_bytes()


def test_lowerbound_pierce_and_render(tmp_path):
    lb, rep = tmp_path / "lb.json", tmp_path / "report.json"
    assert run("lowerbound", "-o", lb, "--report", rep) == 0
    assert json.loads(rep.read_text())["ok"] is True
    fam = read_instance(lb.read_text())
    assert len(fam) == 13 and sum(g.kind == "halfplane" for g in fam) == 6
    out = tmp_path / "four.txt"
    assert run("pierce", "-i", lb, "--k", 4, "-o", out) == 0
    assert 1 <= len(out.read_text().splitlines()) <= 4

    cert, svg = tmp_path / "cert.json", tmp_path / "lb.svg"
    assert run("stab", "-i", lb, "--delta", "1e-6", "-o", cert) == 0
    assert read_certificate(cert.read_text())[1] == 1e-6
    assert run("verify", "-i", lb, "-c", cert) == 0
    assert run("render", "-i", lb, "-c", cert, "-o", svg) == 0
    root = ET.parse(svg).getroot()
    circles = [e for e in root.iter() if e.tag.endswith("circle")]
    polygons = [e for e in root.iter() if e.tag.endswith("polygon")]
    assert len(circles) == 7 and len(polygons) == 6


def test_lowerbound_rejects_failing_parameters(tmp_path, capsys):
    assert run("lowerbound", "--eps1", 0.01, "--eps2", 0.001, "-o", tmp_path / "x.json") == 2
    assert "regions_disjoint" in capsys.readouterr().err
    assert run("lowerbound", "--eps1", 0.01, "--eps2", 0.001, "--force", "-o", tmp_path / "x.json",
               "--report", tmp_path / "r.json") == 0
    assert json.loads((tmp_path / "r.json").read_text())["ok"] is False


def test_pierce_none_and_size_limit(tmp_path, capsys):
    tri = tmp_path / "tri.json"
    tri.write_text(json.dumps({"disks": [{"cx": 0, "cy": 1.3856, "r": 1.2}, {"cx": -1.2, "cy": -0.6928, "r": 1.21},
                                         {"cx": 1.2, "cy": -0.6928, "r": 1.22}]}))
    assert run("pierce", "-i", tri, "--k", 1) == 1
    assert capsys.readouterr().out == "NONE\n"
    big = gen(tmp_path, n=21)
    assert run("pierce", "-i", big, "--k", 3) == 4


def test_render_instance_only(tmp_path):
    inst, svg = gen(tmp_path, n=12), tmp_path / "x.svg"
    assert run("render", "-i", inst, "-o", svg) == 0
    root = ET.parse(svg).getroot()
    assert len([e for e in root.iter() if e.tag.endswith("circle")]) == 12


def test_stdin_stdout_and_env_tolerance(tmp_path):
    inst = gen(tmp_path, n=10)
    env = {"STAB_TOL": "1e-8", "PATH": ""}
    proc = subprocess.run([sys.executable, "-m", "diskstab.cli", "stab"], input=inst.read_text(),
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["points"]
    bad = subprocess.run([sys.executable, "-m", "diskstab.cli", "stab"], input=inst.read_text(),
                         capture_output=True, text=True, env={"STAB_TOL": "abc", "PATH": ""})
    assert bad.returncode == 2


def test_missing_certificate_flag(tmp_path):
    assert run("verify", "-i", gen(tmp_path)) == 2
