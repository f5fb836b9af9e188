import json
import math

import pytest

from isoperim import cli, geometry as geo, polyfile
from isoperim.errors import DegenerateInput


@pytest.fixture
def octa_file(tmp_path):
    path = tmp_path / "octa.json"
    json.dump({"vertices": [[1, 0, 0], [-1, 0, 0], [0, 1, 0],
                            [0, -1, 0], [0, 0, 1], [0, 0, -1]]}, open(path, "w"))
    return str(path)


@pytest.fixture
def cube_file(tmp_path):
    path = tmp_path / "cube.json"
    json.dump({"vertices": [[x, y, z] for x in (0, 1) for y in (0, 1)
                            for z in (0, 1)]}, open(path, "w"))
    return str(path)


class TestPolyfile:
    def test_json_roundtrip(self, tmp_path, octa_file):
        P = polyfile.load_polytope(octa_file)
        assert P.n_vertices == 6
        out = tmp_path / "copy.json"
        polyfile.save_polytope(out, P)
        Q = polyfile.load_polytope(out)
        assert {v.as_tuple() for v in Q.vertices} == {
            v.as_tuple() for v in P.vertices}

    def test_redundant_points_rehulled(self, tmp_path):
        path = tmp_path / "redundant.json"
        json.dump({"vertices": [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0],
                                [0, 0, 1], [0, 0, -1], [0, 0, 0],
                                [0.1, 0.1, 0.1]]}, open(path, "w"))
        assert polyfile.load_polytope(path).n_vertices == 6

    def test_off(self, tmp_path):
        path = tmp_path / "tet.off"
        path.write_text(
            "OFF\n4 4 6\n1 1 1\n1 -1 -1\n-1 1 -1\n-1 -1 1\n"
            "3 0 1 2\n3 0 1 3\n3 0 2 3\n3 1 2 3\n")
        P = polyfile.load_polytope(path)
        assert P.n_vertices == 4

    def test_bad_files(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text('{"points": []}')
        with pytest.raises(DegenerateInput):
            polyfile.load_polytope(p)
        q = tmp_path / "bad.off"
        q.write_text("NOT-OFF\n")
        with pytest.raises(DegenerateInput):
            polyfile.load_polytope(q)


class TestRatioCommand:
    def test_octahedron_at_bound(self, octa_file, capsys):
        assert cli.main(["ratio", octa_file]) == 0
        out = capsys.readouterr().out
        assert "[AT-BOUND]" in out
        # the CLI prints exactly the library values
        P = polyfile.load_polytope(octa_file)
        assert f"S^3/V^2 = {geo.isoperimetric_ratio(P)!r}" in out
        assert f"V = {geo.volume(P)!r}" in out

    def test_cube_info(self, cube_file, capsys):
        assert cli.main(["ratio", cube_file]) == 0
        out = capsys.readouterr().out
        assert "[INFO]" in out or "no reference bound" in out
        assert "S^3/V^2 = 216.0" in out

    def test_csv(self, octa_file, tmp_path, capsys):
        csv_path = tmp_path / "summary.csv"
        assert cli.main(["ratio", octa_file, "--csv", str(csv_path)]) == 0
        capsys.readouterr()
        lines = csv_path.read_text().strip().splitlines()
        assert len(lines) == 2 and lines[0].startswith("command,")

    def test_missing_file(self, capsys):
        assert cli.main(["ratio", "/nonexistent.json"]) == 2

    def test_degenerate_exit_code(self, tmp_path, capsys):
        p = tmp_path / "flat.json"
        json.dump({"vertices": [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]]},
                  open(p, "w"))
        assert cli.main(["ratio", str(p)]) == 2


class TestSymmetrizeCommand:
    def test_normal_mode(self, cube_file, tmp_path, capsys):
        out_path = tmp_path / "sym.json"
        rc = cli.main(["symmetrize", cube_file, "--normal", "0,0,1",
                       "--output", str(out_path)])
        assert rc == 0
        Q = polyfile.load_polytope(out_path)
        assert geo.volume(Q) == pytest.approx(1.0, rel=1e-12)
        out = capsys.readouterr().out
        assert "dV = 0.0" in out

    def test_apex_pair_mode(self, octa_file, capsys):
        rc = cli.main(["symmetrize", octa_file, "--apex-pair", "0,5"])
        assert rc == 0
        out = capsys.readouterr().out
        assert "combinatorial type preserved: True" in out

    def test_invalid_pair(self, octa_file, capsys):
        assert cli.main(["symmetrize", octa_file, "--apex-pair", "0,1"]) == 2


class TestStrangeCommand:
    def test_eval(self, capsys):
        from isoperim.strange import StrangeParams, strange_S
        assert cli.main(["strange", "eval", "0", "1", "1", "1", "1"]) == 0
        out = capsys.readouterr().out
        assert f"S = {strange_S(StrangeParams(0, 1, 1, 1, 1))!r}" in out
        assert abs(strange_S(StrangeParams(0, 1, 1, 1, 1))
                   - (2.0 + 4.0 * math.sqrt(2.0))) < 1e-14
        assert "feasible (six): True" in out

    def test_realize(self, tmp_path, capsys):
        out_path = tmp_path / "body.json"
        rc = cli.main(["strange", "realize", "0", "1", "1", "1", "1",
                       "--output", str(out_path)])
        assert rc == 0
        assert polyfile.load_polytope(out_path).n_vertices == 6

    def test_degenerate(self, capsys):
        assert cli.main(["strange", "realize", "0", "0", "1", "0", "0"]) == 2


class TestCertifyCommand:
    def test_thresholds_and_distances(self, capsys):
        assert cli.main(["certify", "--claim", "thresholds"]) == 0
        assert cli.main(["certify", "--claim", "distances"]) == 0
        out = capsys.readouterr().out
        assert "strict: True" in out

    def test_min5(self, capsys):
        assert cli.main(["certify", "--claim", "min5"]) == 0
        out = capsys.readouterr().out
        assert "contains 1/sqrt(2) = 0.7071067811865475: True" in out
        assert "contains 243 = 243.0: True" in out

    def test_sixvertex_budget_exceeded(self, tmp_path, capsys):
        cert_path = tmp_path / "partial.json"
        rc = cli.main(["certify", "--claim", "sixvertex", "--max-boxes", "4000",
                       "--output", str(cert_path)])
        assert rc == 3
        out = capsys.readouterr().out
        assert "BUDGET EXCEEDED" in out
        assert "min unresolved bound" in out
        assert cert_path.exists()

    def test_sixvertex_small_domain(self, tmp_path, capsys):
        cert_path = tmp_path / "cert.json"
        rc = cli.main(["certify", "--claim", "sixvertex", "--coord-max", "1.0",
                       "--threshold", "0.0", "--output", str(cert_path)])
        assert rc == 0
        out = capsys.readouterr().out
        assert "global_margin" in out
        doc = json.load(open(cert_path))
        assert doc["complete"] is True
        assert doc["global_margin"] > 0.0

    def test_config_file(self, tmp_path, capsys):
        cfg = tmp_path / "cfg.json"
        json.dump({"claim": "distances"}, open(cfg, "w"))
        assert cli.main(["--config", str(cfg), "certify"]) == 0
        out = capsys.readouterr().out
        assert "8*6.5^3/3.4^2 > 188" in out


class TestSelftest:
    def test_selftest_passes(self, capsys):
        assert cli.main(["selftest"]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out
        assert out.count("PASS") >= 6
