from pathlib import Path

import pytest

from artinpres.cli import main

GOLDEN = Path(__file__).parent / "golden"

ICOSAHEDRAL = "artin 2\nr1 = x1^-2 x2 x1 x2\nr2 = x2^-5 x1 x2 x1 x2\n"
TWIST = "artin 2\nr1 = x1 x2\nr2 = x1 x2\n"
NON_ARTIN = "artin 2\nr1 = x1\nr2 = x1\n"


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_true(self, capsys, write):
        code, out, _ = run(capsys, "verify", write("p.txt", TWIST))
        assert code == 0
        assert out == "artin=true defect=1\n"

    def test_false_with_defect(self, capsys, write):
        code, out, _ = run(capsys, "verify", write("p.txt", NON_ARTIN))
        assert code == 0
        assert out == "artin=false defect=x1^-1 x2^-1 x1 x2\n"

    def test_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(TWIST))
        code, out, _ = run(capsys, "verify", "-")
        assert code == 0 and out.startswith("artin=true")


class TestCompose:
    def test_twist_squares(self, capsys, write):
        path = write("p.txt", TWIST)
        code, out, _ = run(capsys, "compose", path, path)
        assert code == 0
        assert out == "artin 2\nr1 = x1 x2 x1 x2\nr2 = x1 x2 x1 x2\n"

    def test_non_artin_input_is_domain_error(self, capsys, write):
        code, _, err = run(
            capsys, "compose", write("a.txt", NON_ARTIN), write("b.txt", TWIST)
        )
        assert code == 1
        assert "Artin identity" in err


class TestMatrix:
    def test_icosahedral(self, capsys, write):
        code, out, _ = run(capsys, "matrix", write("p.txt", ICOSAHEDRAL))
        assert code == 0
        assert out == "-1 2\n2 -3\ndet=-1\nsymmetric=true\n"

    def test_non_artin_candidate_allowed(self, capsys, write):
        code, out, _ = run(capsys, "matrix", write("p.txt", NON_ARTIN))
        assert code == 0
        assert out == "1 1\n0 0\ndet=0\nsymmetric=false\n"


class TestBraidGoldenFiles:
    @pytest.mark.parametrize(
        "name", ["identity_braid", "right_twist", "left_twist"]
    )
    def test_braid2artin_matches_golden(self, capsys, name):
        code, out, _ = run(capsys, "braid2artin", str(GOLDEN / f"{name}.braid"))
        assert code == 0
        assert out == (GOLDEN / f"{name}.expected").read_text()

    def test_non_pure_braid_is_domain_error(self, capsys, write):
        code, _, err = run(
            capsys, "braid2artin", write("b.txt", "braid 2 : s1 ; framings = 0,0\n")
        )
        assert code == 1
        assert "not pure" in err

    def test_bad_braid_syntax_is_usage_error(self, capsys, write):
        code, _, _ = run(
            capsys, "braid2artin", write("b.txt", "braid 2 : t9 ; framings = 0,0\n")
        )
        assert code == 2


class TestInvert:
    def test_right_twist_inverse(self, capsys):
        code, out, _ = run(capsys, "invert", str(GOLDEN / "right_twist.braid"))
        assert code == 0
        assert out == "artin 2\nr1 = x2^-1 x1^-1\nr2 = x2^-1 x1^-1\n"


class TestTuple:
    def test_build(self, capsys):
        code, out, _ = run(capsys, "tuple", "build", "1,1,1")
        assert code == 0
        assert out == TWIST

    def test_recognize(self, capsys, write):
        code, out, _ = run(capsys, "tuple", "recognize", write("p.txt", ICOSAHEDRAL))
        assert code == 0
        assert out == "-1,-3,2\n"

    def test_add(self, capsys):
        code, out, _ = run(capsys, "tuple", "add", "1,1,1", "-1,-3,2")
        assert code == 0
        assert out == "0,-2,3\n"

    def test_neg(self, capsys):
        code, out, _ = run(capsys, "tuple", "neg", "-1,-3,2")
        assert code == 0
        assert out == "1,3,-2\n"

    def test_wrong_argument_count(self, capsys):
        code, _, err = run(capsys, "tuple", "add", "1,1,1")
        assert code == 2

    def test_bad_tuple_syntax(self, capsys):
        code, _, _ = run(capsys, "tuple", "build", "1,2")
        assert code == 2


class TestClassify:
    def test_full_line(self, capsys):
        code, out, _ = run(capsys, "classify", "5,2,3")
        assert code == 0
        assert out == (
            "family=T3 det=1 signature=2 parity=odd X4=CP2#CP2 "
            "path=(5,2,3)->slide1->(1,2,-1)->flipc->(1,2,1)->slide2->(1,1,0)\n"
        )

    def test_base_case_path(self, capsys):
        code, out, _ = run(capsys, "classify", "1,1,0")
        assert code == 0
        assert "path=(1,1,0)\n" in out

    def test_negative_tuple_argument(self, capsys):
        code, out, _ = run(capsys, "classify", "-1,-1,0")
        assert code == 0
        assert "X4=mCP2#mCP2" in out

    def test_outside_family_is_domain_error(self, capsys):
        code, _, err = run(capsys, "classify", "2,3,5")
        assert code == 1
        assert "trivial-group" in err


class TestEnumTrivial:
    def test_bound_one(self, capsys):
        code, out, _ = run(capsys, "enum-trivial", "--bound", "1")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 14
        assert lines[0] == "-1,-1,0 family=T1 X4=mCP2#mCP2"
        assert lines[-1] == "1,1,0 family=T1 X4=CP2#CP2"
        assert lines == sorted(lines, key=lambda line: tuple(
            int(part) for part in line.split()[0].split(",")
        ))


class TestCoset:
    def test_icosahedral_order(self, capsys, write):
        code, out, _ = run(capsys, "coset", write("p.txt", ICOSAHEDRAL))
        assert code == 0
        assert out == "order=120 cosets=386\n"

    def test_definition_first_strategy(self, capsys, write):
        code, out, _ = run(
            capsys,
            "coset",
            write("p.txt", ICOSAHEDRAL),
            "--strategy",
            "definition-first",
        )
        assert code == 0
        assert out.startswith("order=120 ")

    def test_exceeded(self, capsys, write):
        code, out, _ = run(
            capsys, "coset", write("p.txt", ICOSAHEDRAL), "--max-cosets", "10"
        )
        assert code == 0
        assert out == "exceeded=10\n"


class TestExportKirby:
    def test_torus_link(self, capsys):
        code, out, _ = run(capsys, "export-kirby", "-1,-3,2")
        assert code == 0
        assert out == "strands=2; braid=s1^4; framings=-1,-3\n"


class TestErrorHandling:
    def test_unknown_command(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == 2

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "verify", "/nonexistent/path.txt")
        assert code == 2

    def test_bad_word_in_file(self, capsys, write):
        code, _, _ = run(capsys, "verify", write("p.txt", "artin 1\nr1 = q5\n"))
        assert code == 2

    def test_no_command(self, capsys):
        code, _, _ = run(capsys)
        assert code == 2
