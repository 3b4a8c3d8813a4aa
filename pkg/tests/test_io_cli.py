"""Ideal file parsing/formatting and the command-line front end."""

import json

import pytest

from mvdecomp import IdealSyntaxError, available_backends
from mvdecomp.cli import run_command
from mvdecomp.ideal_io import (
    IdealDocument,
    default_variable_names,
    format_ideal,
    format_monomial,
    parse_ideal,
)

THREE_CORNERS = "ring: x y z\nideal: x^3, x^2*y, x*z, y^3, z^3\n"
SEVEN_COMPONENTS = (
    "ring: x y z\n"
    "ideal: x^3*y^5*z, y^5*z^4, y^3*z^5, x*y*z^5, x^2*z^5, x^4*z^3\n"
    "ideal: x^4*y^2*z^2, x^4*y^4*z\n"
)
PRUNED_TREE = "ring: x y z t\nideal: x^2*y^3, y^3*z*t, y*t^2, z^3*t^2\n"
XY = "ring: x y\nideal: x*y\n"
EDGE = "ring: x y z\nideal: x*y, y*z\n"


def ideal_file(tmp_path, text, name="input.ideal"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def invoke(argv, capsys):
    code = run_command(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParse:
    def test_monomial_document(self):
        doc = parse_ideal(THREE_CORNERS)
        assert doc.variables == ("x", "y", "z")
        assert doc.generators == (
            (3, 0, 0),
            (2, 1, 0),
            (1, 0, 1),
            (0, 3, 0),
            (0, 0, 3),
        )
        assert doc.source_format == "monomial"
        assert doc.dropped == 0
        assert doc.to_ideal().n == 3

    def test_vector_document_minimalizes(self):
        doc = parse_ideal("ring: a b\nideal: [1 1], [2 1]\n")
        assert doc.variables == ("a", "b")
        assert doc.generators == ((1, 1),)
        assert doc.source_format == "vector"
        assert doc.dropped == 1

    def test_mixed_formats_count_as_monomial(self):
        doc = parse_ideal("ring: a b\nideal: [2 0], a*b\n")
        assert doc.generators == ((2, 0), (1, 1))
        assert doc.source_format == "monomial"

    def test_comments_blank_lines_and_accumulation(self):
        text = (
            "# header\n"
            "ring: x y   # two variables\n"
            "\n"
            "ideal: x^2  # first\n"
            "ideal: y^2\n"
        )
        doc = parse_ideal(text)
        assert doc.generators == ((2, 0), (0, 2))

    def test_monomial_shorthands(self):
        doc = parse_ideal("ring: x y\nideal: x^2y, x * y, x*x^2\n")
        assert doc.generators == ((3, 0), (1, 1))
        assert doc.dropped == 1

    def test_unit_generator(self):
        doc = parse_ideal("ring: x y\nideal: 1\n")
        assert doc.generators == ((0, 0),)
        assert doc.to_ideal().is_unit

    @pytest.mark.parametrize(
        "text, line, column, fragment",
        [
            ("", 1, 1, "missing ring line"),
            ("ring: x y\n", 1, 1, "missing ideal line"),
            ("ideal: x\n", 1, 1, "ring line must come before"),
            ("ring: x\nring: y\nideal: x\n", 2, 1, "duplicate ring line"),
            ("ring: x 2y\nideal: x\n", 1, 9, "invalid variable name '2y'"),
            ("ring: x x\nideal: x\n", 1, 1, "duplicate variable name"),
            ("ring:\nideal: x\n", 1, 1, "ring line names no variables"),
            ("ring: x\nwhat\n", 2, 1, "expected a 'ring:' or 'ideal:' line"),
            ("ring: x y z\nideal: x^2, w*y\n", 2, 13, "unknown variable 'w'"),
            ("ring: x y\nideal: x,,y\n", 2, 10, "empty generator"),
            ("ring: x y\nideal: [1 2\n", 2, 12, "unterminated exponent vector"),
            ("ring: x y\nideal: [1 2 3]\n", 2, 8, "vector has 3 entries"),
            ("ring: x y\nideal: [1 -2]\n", 2, 11, "negative exponent"),
            ("ring: x y\nideal: [1 a]\n", 2, 11, "expected integer, got 'a'"),
            ("ring: x y\nideal: x^\n", 2, 10, "expected exponent after '^'"),
            ("ring: x y\nideal: x^-2\n", 2, 10, "negative exponent"),
            ("ring: x y\nideal: x*\n", 2, 10, "expected variable name"),
            ("ring: x y\nideal: *x\n", 2, 8, "expected variable name"),
        ],
    )
    def test_error_positions(self, text, line, column, fragment):
        with pytest.raises(IdealSyntaxError) as info:
            parse_ideal(text)
        assert info.value.line == line
        assert info.value.column == column
        assert fragment in str(info.value)
        assert f"line {line}, column {column}:" in str(info.value)


class TestFormat:
    def test_monomial_rendering(self):
        names = ("x", "y", "z")
        assert format_monomial((0, 0, 0), names) == "1"
        assert format_monomial((1, 0, 2), names) == "x*z^2"
        assert format_monomial((2, 1, 3), names) == "x^2*y*z^3"

    def test_default_names(self):
        assert default_variable_names(3) == ("x1", "x2", "x3")

    def test_format_golden(self):
        doc = parse_ideal(THREE_CORNERS)
        assert format_ideal(doc) == THREE_CORNERS

    def test_roundtrip_both_formats(self):
        for text in (
            THREE_CORNERS,
            SEVEN_COMPONENTS,
            "ring: a b\nideal: [1 1], [2 1]\n",
            "ring: x y\nideal: 1\n",
        ):
            doc = parse_ideal(text)
            again = parse_ideal(format_ideal(doc))
            assert again == doc
            assert format_ideal(again) == format_ideal(doc)

    def test_dropped_not_part_of_equality(self):
        kept = IdealDocument(("a", "b"), ((1, 1),), "vector")
        assert parse_ideal("ring: a b\nideal: [1 1], [2 1]\n") == kept


def test_corners_text_golden(tmp_path, capsys):
    path = ideal_file(tmp_path, THREE_CORNERS)
    code, out, err = invoke(["corners", path], capsys)
    assert code == 0
    assert err == ""
    assert out.splitlines() == ["x*y^3*z^3", "x^2*y^3*z", "x^3*y*z"]


def test_corners_json(tmp_path, capsys):
    path = ideal_file(tmp_path, THREE_CORNERS)
    code, out, _ = invoke(["corners", "--json", path], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["variables"] == ["x", "y", "z"]
    assert payload["corners"] == [[1, 3, 3], [2, 3, 1], [3, 1, 1]]
    assert [3, 0, 0] in payload["generators"]


def test_corners_options_do_not_change_output(tmp_path, capsys):
    path = ideal_file(tmp_path, THREE_CORNERS)
    _, base, _ = invoke(["corners", path], capsys)
    variants = [
        ["corners", path, "--threads", "4"],
        ["corners", path, "--strategy", "last"],
        ["corners", path, "--eliminate"],
    ]
    variants += [["corners", path, "--backend", b] for b in available_backends()]
    for argv in variants:
        code, out, _ = invoke(argv, capsys)
        assert code == 0
        assert out == base


def test_decompose_text_golden(tmp_path, capsys):
    path = ideal_file(tmp_path, SEVEN_COMPONENTS)
    code, out, _ = invoke(["decompose", path], capsys)
    assert code == 0
    assert out.splitlines() == [
        "<z>",
        "<y^2, z^3>",
        "<y^4, z^2>",
        "<x, y^3>",
        "<x^2, y>",
        "<x^3, z^4>",
        "<x^4, y^5, z^5>",
    ]


def test_decompose_options_do_not_change_output(tmp_path, capsys):
    path = ideal_file(tmp_path, SEVEN_COMPONENTS)
    _, base, _ = invoke(["decompose", path], capsys)
    for argv in (
        ["decompose", path, "--strategy", "last", "--eliminate"],
        ["decompose", path, "--threads", "4"],
    ):
        code, out, _ = invoke(argv, capsys)
        assert code == 0
        assert out == base


def test_stanley_text_golden(tmp_path, capsys):
    path = ideal_file(tmp_path, XY)
    code, out, _ = invoke(["stanley", path], capsys)
    assert code == 0
    assert out.splitlines() == [
        "1 {}",
        "y {}",
        "y^2 {y}",
        "x {}",
        "x^2 {x}",
    ]


def test_stanley_json(tmp_path, capsys):
    path = ideal_file(tmp_path, XY)
    code, out, _ = invoke(["stanley", "--json", path], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["cones"] == [
        {"base": [0, 0], "free": []},
        {"base": [0, 1], "free": []},
        {"base": [0, 2], "free": [1]},
        {"base": [1, 0], "free": []},
        {"base": [2, 0], "free": [0]},
    ]


def test_betti_exact_golden(tmp_path, capsys):
    path = ideal_file(tmp_path, EDGE)
    code, out, _ = invoke(["betti", "--exact", path], capsys)
    assert code == 0
    assert out.splitlines() == [
        "0 y*z 1 1 1",
        "0 x*y 1 1 1",
        "1 x*y*z 1 1 1",
    ]


def test_betti_json(tmp_path, capsys):
    path = ideal_file(tmp_path, EDGE)
    code, out, _ = invoke(["betti", "--json", path], capsys)
    assert code == 0
    rows = json.loads(out)["betti"]
    assert {"i": 1, "mu": [1, 1, 1], "lower": 1, "upper": 1} in rows
    assert all("exact" not in row for row in rows)


def test_hilbert_text_golden(tmp_path, capsys):
    path = ideal_file(tmp_path, XY)
    code, out, _ = invoke(["hilbert", path, "--degree", "5"], capsys)
    assert code == 0
    assert out.splitlines() == [
        "series: 1 + 2*t + 2*t^2/(1-t)",
        "coefficients: 1 2 2 2 2 2",
    ]


def test_hilbert_json(tmp_path, capsys):
    path = ideal_file(tmp_path, XY)
    code, out, _ = invoke(["hilbert", "--json", path, "--degree", "3"], capsys)
    assert code == 0
    payload = json.loads(out)["hilbert"]
    assert payload["coefficients"] == [1, 2, 2, 2]
    assert sorted(map(tuple, payload["terms"])) == [
        (0, 0),
        (1, 0),
        (1, 0),
        (2, 1),
        (2, 1),
    ]


def test_hilbert_requires_degree(tmp_path, capsys):
    path = ideal_file(tmp_path, XY)
    code, _, err = invoke(["hilbert", path], capsys)
    assert code == 2
    assert "--degree" in err


def test_mvt_dump_golden(tmp_path, capsys):
    path = ideal_file(tmp_path, PRUNED_TREE)
    code, out, _ = invoke(["mvt", "--dump", path], capsys)
    assert code == 0
    assert out.splitlines() == [
        "1 0 R [x^2*y^3, y^3*z*t, y*t^2, z^3*t^2]",
        "2 1 R [x^2*y^3*z*t, x^2*y^3*t^2]",
        "3 0 - [y^3*z*t, y*t^2, z^3*t^2]",
    ]


def test_mvt_summary(tmp_path, capsys):
    path = ideal_file(tmp_path, THREE_CORNERS)
    code, out, _ = invoke(["mvt", path], capsys)
    assert code == 0
    assert out.splitlines() == ["nodes: 13", "relevant: 7"]


def test_mvt_json(tmp_path, capsys):
    path = ideal_file(tmp_path, THREE_CORNERS)
    code, out, _ = invoke(["mvt", "--json", path], capsys)
    assert code == 0
    nodes = json.loads(out)["tree"]
    assert len(nodes) == 13
    root = next(node for node in nodes if node["position"] == 1)
    assert root["dimension"] == 0
    assert root["relevant"] is True
    assert set(root) == {
        "position",
        "dimension",
        "relevant",
        "generators",
        "prune_reason",
    }


def test_mvt_no_prune_grows_tree(tmp_path, capsys):
    path = ideal_file(tmp_path, THREE_CORNERS)
    _, pruned, _ = invoke(["mvt", "--json", path], capsys)
    _, full, _ = invoke(["mvt", "--json", "--no-prune", path], capsys)
    assert len(json.loads(full)["tree"]) > len(json.loads(pruned)["tree"])


def test_random_deterministic(capsys):
    argv = ["random", "--vars", "3", "--gens", "4", "--max-exp", "3", "--seed", "5"]
    code1, out1, _ = invoke(argv, capsys)
    code2, out2, _ = invoke(argv, capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.startswith("ring: x1 x2 x3\nideal: ")


def test_random_output_file(tmp_path, capsys):
    target = str(tmp_path / "sampled.ideal")
    argv = [
        "random",
        "--vars", "3",
        "--gens", "4",
        "--max-exp", "3",
        "--seed", "5",
        "-o", target,
    ]
    code, out, _ = invoke(argv, capsys)
    assert code == 0
    assert out == ""
    with open(target, encoding="utf-8") as handle:
        doc = parse_ideal(handle.read())
    assert doc.generators == ((3, 3, 0), (2, 0, 3), (0, 3, 1), (0, 1, 2))
    code, out, _ = invoke(["decompose", target], capsys)
    assert code == 0
    assert out


def test_random_json(capsys):
    argv = [
        "random", "--json", "--vars", "2", "--gens", "2", "--max-exp", "2",
        "--seed", "1",
    ]
    code, out, _ = invoke(argv, capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["variables"] == ["x1", "x2"]
    assert len(payload["generators"]) == 2


def test_verify_ok(tmp_path, capsys):
    path = ideal_file(tmp_path, XY)
    code, out, _ = invoke(["verify", path], capsys)
    assert code == 0
    assert out.splitlines() == [
        "irreducible: ok (exhaustive)",
        "stanley: ok (exhaustive)",
    ]


def test_verify_json(tmp_path, capsys):
    path = ideal_file(tmp_path, THREE_CORNERS)
    code, out, _ = invoke(["verify", "--json", path], capsys)
    assert code == 0
    checks = json.loads(out)["verify"]
    assert checks["irreducible"]["ok"] is True
    assert checks["stanley"]["mode"] == "exhaustive"
    assert checks["stanley"]["witness"] is None


def test_bench_text(capsys):
    argv = [
        "bench", "--spec", "n=3,r=4,e=2,seed=1,reps=1", "--backend", "pure",
    ]
    code, out, _ = invoke(argv, capsys)
    assert code == 0
    assert "vars=3 gens=4" in out
    assert "backend=pure threads=1 components=2" in out
    assert "times:" in out


def test_bench_json(capsys):
    argv = [
        "bench", "--json", "--spec", "n=3,r=4,e=2,seed=1,reps=2",
        "--backend", "pure",
    ]
    code, out, _ = invoke(argv, capsys)
    assert code == 0
    bench = json.loads(out)["bench"]
    assert bench["spec"]["vars"] == 3
    assert bench["spec"]["repetitions"] == 2
    [result] = bench["results"]
    assert result["backend"] == "pure"
    assert result["components"] == 2
    assert len(result["times"]) == 2


def test_usage_errors_exit_two(capsys):
    assert invoke([], capsys)[0] == 2
    assert invoke(["frobnicate"], capsys)[0] == 2
    assert invoke(["corners"], capsys)[0] == 2
    code, _, err = invoke(["decompose", "f", "--strategy", "weird"], capsys)
    assert code == 2
    assert "invalid choice" in err


def test_missing_file_exit_one(capsys):
    code, _, err = invoke(["corners", "/nonexistent/path.ideal"], capsys)
    assert code == 1
    assert err.startswith("error:")


def test_syntax_error_reported(tmp_path, capsys):
    path = ideal_file(tmp_path, "ring: x y z\nideal: x^2, w*y\n")
    code, _, err = invoke(["decompose", path], capsys)
    assert code == 1
    assert "line 2, column 13: unknown variable 'w'" in err


def test_unit_ideal_exit_one(tmp_path, capsys):
    path = ideal_file(tmp_path, "ring: x y\nideal: 1\n")
    code, _, err = invoke(["corners", path], capsys)
    assert code == 1
    assert err.startswith("error:")


def test_exact_betti_guard_exit_one(tmp_path, capsys):
    path = ideal_file(tmp_path, "ring: a b c d e f\nideal: a*b, c*d, e*f\n")
    code, _, err = invoke(["betti", "--exact", path], capsys)
    assert code == 1
    assert "guarded" in err
