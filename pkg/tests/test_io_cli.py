import json

import jsonschema
import pytest
from hypothesis import given

from oracles import complexes
from relaxcol import Coloring, corpus_entry
from relaxcol.cli import main
from relaxcol.errors import EmptyComplexError, MalformedInputError
from relaxcol.io import CERTIFICATE_SCHEMA, REPORT_SCHEMA, parse_coloring, parse_facets, render_facets

P2 = corpus_entry("P2").complex


class TestFacetFiles:
    def test_path(self):
        K = parse_facets("a b\nb c\n")
        assert set(K.facet_label_sets()) == {frozenset("ab"), frozenset("bc")}

    def test_comments_and_blank_lines(self):
        K = parse_facets("# a path\n\na b   # first edge\n  b c\n")
        assert K.m == 3 and len(K.facets) == 2

    def test_canonical_render(self):
        text = render_facets(parse_facets("# vertices: a b c d\nc d\nb c\na b\n"))
        assert text.splitlines()[1:] == ["a b", "b c", "c d"]
        assert render_facets(parse_facets(text)) == text

    def test_p2_render(self):
        lines = [x for x in render_facets(P2).splitlines() if not x.startswith("#")]
        assert len(lines) == 10 and all(len(x.split()) == 3 for x in lines)

    @given(complexes())
    def test_round_trip(self, K):
        assert parse_facets(render_facets(K)) == K

    def test_errors(self):
        with pytest.raises(EmptyComplexError):
            parse_facets("# nothing\n\n")
        with pytest.raises(MalformedInputError) as info:
            parse_facets("a b\nc c\n")
        assert info.value.line == 2
        with pytest.raises(MalformedInputError):
            parse_facets("# vertices: a b\na c\n")

    def test_colorings(self, tmp_path):
        assert parse_coloring("1,1,1,2,2,3", P2) == Coloring((0, 0, 0, 1, 1, 2))
        path = tmp_path / "f.txt"
        path.write_text("1 2 1 2 3 3\n")
        assert parse_coloring(str(path), P2).one_based() == [1, 2, 1, 2, 3, 3]
        with pytest.raises(MalformedInputError):
            parse_coloring("1,2", P2)
        with pytest.raises(MalformedInputError):
            parse_coloring("0,1,1,1,1,1", P2)


@pytest.fixture
def p2_file(tmp_path):
    path = tmp_path / "p2.txt"
    assert main(["gen", "corpus", "P2", "-o", str(path)]) == 0
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCli:
    def test_chromatic(self, capsys, p2_file):
        code, out, _ = run(capsys, "chromatic", p2_file, "--s", "2")
        assert code == 0 and out.splitlines() == ["3", "witness: 1,1,1,2,2,3"]

    def test_chromatic_from_stdin(self, capsys, monkeypatch):
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(render_facets(P2)))
        code, out, _ = run(capsys, "chromatic", "-", "--s", "2")
        assert code == 0 and out.splitlines()[0] == "3"

    def test_json_reports_validate(self, capsys, p2_file):
        for argv in (["chromatic", p2_file, "--s", "1"], ["info", p2_file], ["count", p2_file, "--colors", "3", "--s", "2"],
                     ["check", p2_file, "--s", "2", "--coloring", "1,1,1,2,2,3", "--algebraic"]):
            code, out, _ = run(capsys, *argv, "--json")
            report = json.loads(out)
            jsonschema.validate(report, REPORT_SCHEMA)
            assert code == 0 and report["complex"]["f_vector"] == [1, 6, 15, 10]
        jsonschema.validate(report["result"]["certificate"], CERTIFICATE_SCHEMA)
        assert report["result"]["verdict"] is True

    def test_text_and_json_agree(self, capsys, p2_file):
        _, text, _ = run(capsys, "count", p2_file, "--colors", "3", "--s", "2")
        _, js, _ = run(capsys, "count", p2_file, "--colors", "3", "--s", "2", "--json")
        assert int(text) == json.loads(js)["result"]["count"] == 270

    def test_count_surjective(self, capsys, p2_file):
        assert run(capsys, "count", p2_file, "--colors", "3", "--s", "2", "--surjective")[1].strip() == "270"
        assert run(capsys, "count", p2_file, "--colors", "6", "--s", "1")[1].strip() == "720"

    def test_info(self, capsys, p2_file):
        code, out, _ = run(capsys, "info", p2_file)
        assert code == 0
        assert "(1, 6, 15, 10)" in out and "(6, 15, 10)" in out and "missing faces (10)" in out
        assert "s=1 no, s=2 yes" in out

    def test_check(self, capsys, p2_file):
        code, out, _ = run(capsys, "check", p2_file, "--s", "1", "--coloring", "1,1,1,2,2,3", "--algebraic")
        assert code == 0 and out.startswith("verdict: false") and "algebraic verdict: false" in out

    def test_budget_exit(self, capsys, p2_file):
        code, out, _ = run(capsys, "chromatic", p2_file, "--s", "1", "--budget", "3")
        assert code == 3 and "budget exhausted" in out
        code, out, _ = run(capsys, "chromatic", p2_file, "--s", "1", "--budget", "3", "--json")
        assert code == 3 and json.loads(out)["result"]["status"] == "budget"

    def test_malformed_exit(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("a a\n")
        assert run(capsys, "info", str(bad))[0] == 2
        assert run(capsys, "info", str(tmp_path / "missing.txt"))[0] == 2
        empty = tmp_path / "empty.txt"
        empty.write_text("")
        assert run(capsys, "info", str(empty))[0] == 2

    def test_usage_exit(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == 1
        assert run(capsys, "gen", "cyclic", "4")[0] == 1
        assert run(capsys, "gen", "cyclic", "4", "4")[0] == 1
        assert run(capsys, "gen", "corpus", "nope")[0] == 1

    def test_gen_and_transforms(self, capsys, tmp_path):
        cp = tmp_path / "cp.txt"
        assert main(["gen", "cyclic", "7", "4", "-o", str(cp)]) == 0
        assert run(capsys, "chromatic", str(cp), "--s", "2")[1].splitlines()[0] == "3"
        code, out, _ = run(capsys, "skeleton", str(cp), "--j", "1")
        assert code == 0 and len([x for x in out.splitlines() if not x.startswith("#")]) == 21
        code, out, _ = run(capsys, "flagify", str(cp), "--s", "2")
        assert parse_facets(out) == parse_facets(cp.read_text())
        tri = tmp_path / "tri.txt"
        main(["gen", "boundary", "3", "-o", str(tri)])
        pt = tmp_path / "pt.txt"
        main(["gen", "simplex", "1", "-o", str(pt)])
        code, out, _ = run(capsys, "join", str(pt), str(tri))
        assert parse_facets(out).f_vector() == (1, 4, 6, 3)
        code, out, _ = run(capsys, "gen", "random", "6", "--seed", "3")
        assert code == 0 and parse_facets(out).m == 6

    def test_selftest(self, capsys):
        code, out, _ = run(capsys, "selftest", "--samples", "3", "--max-vertices", "5", "--json")
        assert code == 0 and json.loads(out)["result"]["disagreements"] == 0
