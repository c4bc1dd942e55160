import pytest

from slackmat import Matrix
from slackmat.cli import run
from slackmat.formats import document_for, parse, serialize

from golden import (
    COUNTEREXAMPLE,
    PRISM,
    PRISM_FACETS,
    PRISM_SCALED,
    PRISM_VERTICES,
    SQUARE_4GON,
    SQUARE_FACETS,
    SQUARE_VERTICES,
)


def write_doc(path, payload):
    path.write_text(serialize(document_for(payload)))
    return str(path)


@pytest.fixture
def prism_file(tmp_path):
    return write_doc(tmp_path / "prism.matrix", PRISM)


class TestCheckCommands:
    def test_check_polytope_prism(self, prism_file, capsys):
        assert run(["check-polytope", prism_file]) == 0
        assert capsys.readouterr().out.strip() == "POLYTOPE-SLACK yes rank=4 dim=3"

    def test_check_polytope_oracle_agrees(self, prism_file):
        assert run(["check-polytope", prism_file, "--oracle"]) == 0

    def test_check_cone_counterexample(self, tmp_path, capsys):
        f = write_doc(tmp_path / "c.matrix", COUNTEREXAMPLE)
        cert = tmp_path / "c.cert"
        assert run(["check-cone", f, "--certificate", str(cert)]) == 1
        out = capsys.readouterr().out
        assert out.startswith("CONE-SLACK no")
        assert run(["verify-cert", f, str(cert)]) == 0

    def test_check_cone_transpose_of_prism(self, tmp_path):
        f = write_doc(tmp_path / "mt.matrix", PRISM.transpose())
        assert run(["check-cone", f, "--quiet"]) == 0
        assert run(["check-polytope", f, "--quiet"]) == 1

    def test_bad_file_is_usage_error(self, tmp_path, capsys):
        missing = str(tmp_path / "nope.matrix")
        assert run(["check-cone", missing]) == 2
        assert "error:" in capsys.readouterr().err

    def test_malformed_document_is_usage_error(self, tmp_path, capsys):
        f = tmp_path / "bad.matrix"
        f.write_text("MATRIX 1 1\n1/0\n")
        assert run(["check-cone", str(f)]) == 2
        assert "error:" in capsys.readouterr().err

    def test_wrong_kind_is_usage_error(self, tmp_path):
        f = write_doc(tmp_path / "v.ext", PRISM_VERTICES)
        assert run(["check-cone", str(f)]) == 2


class TestReconstructAndSlack:
    def test_round_trip_through_files(self, prism_file, tmp_path, capsys):
        out_v = tmp_path / "prism.ext"
        out_h = tmp_path / "prism.ine"
        assert run([
            "reconstruct", prism_file,
            "--out-v", str(out_v), "--out-h", str(out_h),
        ]) == 0
        assert "RECONSTRUCTED vertices=6 facets=5 dim=3" in capsys.readouterr().out
        assert run(["slack", "--vrep", str(out_v), "--hrep", str(out_h)]) == 0
        m = parse(capsys.readouterr().out).payload
        assert m == PRISM

    def test_reconstruct_rejects_non_slack(self, tmp_path, capsys):
        f = write_doc(tmp_path / "c.matrix", COUNTEREXAMPLE)
        assert run([
            "reconstruct", f,
            "--out-v", str(tmp_path / "v"), "--out-h", str(tmp_path / "h"),
        ]) == 1
        assert "POLYTOPE-SLACK no" in capsys.readouterr().out

    def test_slack_of_given_pair(self, tmp_path, capsys):
        fv = write_doc(tmp_path / "p.ext", PRISM_VERTICES)
        fh = write_doc(tmp_path / "p.ine", PRISM_FACETS)
        assert run(["slack", "--vrep", fv, "--hrep", fh]) == 0
        assert parse(capsys.readouterr().out).payload == PRISM_SCALED


class TestVerify:
    def test_equal(self, tmp_path, capsys):
        fv = write_doc(tmp_path / "s.ext", SQUARE_VERTICES)
        fh = write_doc(tmp_path / "s.ine", SQUARE_FACETS)
        assert run(["verify", "--vrep", fv, "--hrep", fh]) == 0
        assert capsys.readouterr().out.strip() == "VERIFY equal"

    def test_missing_vertex(self, tmp_path, capsys):
        from slackmat import PolytopeRep

        q = PolytopeRep("V", 2, SQUARE_VERTICES.vectors[:3])
        fv = write_doc(tmp_path / "s3.ext", q)
        fh = write_doc(tmp_path / "s.ine", SQUARE_FACETS)
        assert run(["verify", "--vrep", fv, "--hrep", fh]) == 1
        assert "not-equal" in capsys.readouterr().out


class TestOtherCommands:
    def test_incidence(self, prism_file, capsys):
        assert run(["incidence", prism_file]) == 0
        m = parse(capsys.readouterr().out).payload
        assert m.data[0] == tuple(map(int, (0, 0, 1, 1, 1)))

    def test_polygon_check(self, tmp_path, capsys):
        f = write_doc(tmp_path / "sq.matrix", SQUARE_4GON)
        assert run(["polygon-check", f]) == 0
        assert capsys.readouterr().out.strip() == "POLYGON-SLACK yes"

    def test_polygon_check_not_applicable(self, prism_file, capsys):
        assert run(["polygon-check", prism_file]) == 1
        assert capsys.readouterr().out.strip() == "POLYGON-SLACK not-applicable"

    def test_polygon_check_negative(self, tmp_path, capsys):
        f = write_doc(tmp_path / "id.matrix", Matrix.identity(4))
        assert run(["polygon-check", f]) == 1
        assert capsys.readouterr().out.strip() == "POLYGON-SLACK no"

    def test_polar_realize(self, tmp_path, capsys):
        f = write_doc(tmp_path / "mp.matrix", PRISM_SCALED)
        out_v = tmp_path / "polar.ext"
        assert run(["polar-realize", f, "--out-v", str(out_v)]) == 0
        assert "POLAR-REALIZED" in capsys.readouterr().out
        assert parse(out_v.read_text()).payload.form == "V"

    def test_polar_realize_hypothesis_failure(self, prism_file, capsys):
        assert run(["polar-realize", prism_file]) == 2
        assert "error:" in capsys.readouterr().err

    def test_verify_cert_yes(self, prism_file, tmp_path):
        cert = tmp_path / "p.cert"
        assert run(["check-polytope", prism_file, "--quiet",
                    "--certificate", str(cert)]) == 0
        assert run(["verify-cert", prism_file, str(cert)]) == 0

    def test_unknown_subcommand(self):
        assert run(["frobnicate"]) == 2
