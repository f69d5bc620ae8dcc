import io
import json

import pytest

from tabkit.abtableau import ABTableau, enumerate_ab
from tabkit.alphabet import GradedAlphabet, interval
from tabkit.cli import (
    EXIT_FAILED,
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_USAGE,
    UsageError,
    build_parser,
    load_config,
    parse_alphabet,
    run,
)
from tabkit.suites import rho_ab_example


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    for key in ("TABKIT_THREADS", "TABKIT_WINDOW", "TABKIT_OUTPUT", "TABKIT_TRUNCATION"):
        monkeypatch.delenv(key, raising=False)


def output(capsys):
    return json.loads(capsys.readouterr().out)


def test_parse_alphabet_forms():
    a = parse_alphabet("a, b'", "X")
    assert a.name == "X"
    assert a.labels() == ["a", "b"]
    assert [x.parity for x in a.letters] == [0, 1]
    assert parse_alphabet("interval:3") == interval(3)
    assert parse_alphabet(json.dumps(interval(2).to_json())) == interval(2)
    with pytest.raises(UsageError):
        parse_alphabet("interval")
    with pytest.raises(UsageError):
        parse_alphabet("{not json")


def test_flags_override_environment(monkeypatch):
    monkeypatch.setenv("TABKIT_THREADS", "2")
    monkeypatch.setenv("TABKIT_WINDOW", "1,1")
    args = build_parser().parse_args(["verify", "sigma", "--threads", "5"])
    config = load_config(args)
    assert config.threads == 5
    assert config.window == (1, 1)
    args = build_parser().parse_args(["--window", "3,0", "--ascii", "verify", "sigma"])
    config = load_config(args)
    assert config.window == (3, 0)
    assert config.output == "ascii"


def test_lr_count(capsys):
    assert run(["lr-count", "[2,1]", "[1]", "[1,1]"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1"


def test_coefficients(capsys):
    assert run(["coeff", "chat", "[1,-1]", "[1]", "[-1]"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1"
    assert run(["coeff", "c", "[0,0]", "[1,0]", "[0,-1]", "--witness"]) == EXIT_OK
    data = output(capsys)
    assert data["value"] == 1
    assert len(data["classes"]) == 1
    assert data["classes"][0]["kind"] == "product"


def test_switch(capsys):
    s = '[["1","1","2"],["2","3"]]'
    t = '[[],["3"],["1","2","3"]]'
    assert run(["switch", s, t]) == EXIT_OK
    data = output(capsys)
    assert data["t"]["rows"] == [["1", "2", "3"], ["3"]]
    assert data["s"]["rows"] == [[], ["1", "2"], ["1", "2", "3"]]


def test_jdt(capsys):
    assert run(["jdt", '[["1"],["2"]]', "--inner", "[1]", "--alphabet", "interval:2"]) == EXIT_OK
    data = output(capsys)
    assert data["rectification"]["rows"] == [["1"], ["2"]]
    assert data["recording"]["rows"] == [["1"], []]


def test_insert_ascii(capsys):
    argv = ["insert", '[["1","2"]]', '[["1"]]', "--alphabet", "interval:2", "--ascii"]
    assert run(argv) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "1 1 2"


def test_output_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("TABKIT_OUTPUT", "ascii")
    assert run(["insert", '[["1","2"]]', '[["1"]]', "--alphabet", "interval:2"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[0] == "1 1 2"


def test_rsk(capsys):
    words = json.dumps(
        [
            [["a1", "a1", "a2", "a4", "a5"], ["b3", "b3", "b4", "b6"]],
            [["a1", "a3", "a6"], ["b2", "b3", "b6"]],
        ]
    )
    argv = ["rsk", words, "--a", "a1,a2,a3,a4,a5,a6", "--b", "b1,b2,b3,b4,b5,b6"]
    assert run(argv) == EXIT_OK
    data = output(capsys)
    assert data["p"]["d"] == 5
    assert data["p"]["shape"] == [2, -1]
    assert data["q"]["parts"] == [2, -1]


def test_rsk_on_empty_input(monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(""))
    assert run(["rsk"]) == EXIT_USAGE


def test_lr_ab(capsys):
    t1, t2, want = rho_ab_example()
    argv = ["lr-ab", json.dumps(t1.to_json()), json.dumps(t2.to_json())]
    assert run(argv) == EXIT_OK
    data = output(capsys)
    assert ABTableau.from_json(data["tableau"]) == want
    assert data["class"]["kind"] == "dual"
    assert data["class"]["lambda"] == [4, 0, -1, -2]


def test_skew_jdt_from_stdin(monkeypatch, capsys):
    a = GradedAlphabet.from_labels("A", ["a1"])
    b = GradedAlphabet.from_labels("B", ["b1"])
    (x,) = list(enumerate_ab((1,), a, b, 0, inner_shape=(0,)))
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(x.to_json())))
    assert run(["skew-jdt"]) == EXIT_OK
    data = output(capsys)
    assert data["tableau"]["shape"] == [1]
    assert data["tableau"]["inner_shape"] is None
    assert data["class"]["kind"] == "slash"


def test_char(capsys):
    assert run(["char", "[2,-1]", "--mode", "gl"]) == EXIT_OK
    data = output(capsys)
    assert data["highest_weight"] == {"central": -2, "diag": {"0": -1, "1": 2}}


def test_enumerate_is_deterministic(capsys):
    assert run(["enumerate", "[1,-1]", "--kind", "rational"]) == EXIT_OK
    first = capsys.readouterr().out
    assert run(["enumerate", "[1,-1]", "--kind", "rational"]) == EXIT_OK
    assert capsys.readouterr().out == first
    assert len(json.loads(first)) == 3


def test_enumerate_count(capsys):
    argv = ["enumerate", "[1]", "--a", "a1", "--b", "b1", "--window", "1,0", "--count"]
    assert run(argv) == EXIT_OK
    assert output(capsys)["count"] == 2


def test_verify(capsys):
    assert run(["verify", "example-4-2"]) == EXIT_OK
    assert output(capsys)["passed"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["verify", "nope"],
        ["--window", "x", "verify", "sigma"],
        ["lr-count", "[2,", "[1]", "[1]"],
        ["enumerate", "[2,1]", "--kind", "lr"],
    ],
)
def test_usage_errors(argv):
    assert run(argv) == EXIT_USAGE


def test_library_errors_map_to_internal():
    assert run(["coeff", "c", "[1,0]", "[1]", "[0,0]"]) == EXIT_INTERNAL


def test_exit_codes_are_distinct():
    assert len({EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INTERNAL}) == 4
