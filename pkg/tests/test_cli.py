import io
import json
import subprocess
import sys

import pytest

from dfaspectra import parse_dfa, serialize_dfa
from dfaspectra.cli import run

from conftest import make_b1


def call(*argv, stdin=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def b1_file(tmp_path):
    p = tmp_path / "b1.dfa"
    p.write_text(serialize_dfa(make_b1()))
    return str(p)


class TestExamples:
    def test_fibonacci_count(self):
        assert call("count", "--regex", "(a+ba)*", "-n", "10") == (0, "89\n", "")

    def test_equitable_b1(self, b1_file):
        assert call("equitable", b1_file, "--partition", "0,1|2") == (0, "true\n", "")

    def test_not_equitable(self, b1_file):
        assert call("equitable", b1_file, "--partition", "0|1,2")[1] == "false\n"

    def test_closed_form_rejects_rank_two(self):
        code, out, err = call("count", "--regex", "(a+ba)*", "--closed-form", "-n", "5")
        assert code == 1
        assert out == ""
        assert err == "error: NotRankOne: language rank is 2\n"

    def test_closed_form_on_rank_one(self):
        assert call("count", "--regex", "(a+b)*", "--closed-form", "-n", "7")[1] == "128\n"


class TestSubcommands:
    def test_rank(self, b1_file):
        assert call("rank", b1_file)[1] == "1\n"

    def test_minimize_then_analyze(self, b1_file, tmp_path):
        code, out, _ = call("minimize", b1_file)
        assert code == 0
        p = tmp_path / "min.dfa"
        p.write_text(out)
        data = json.loads(call("analyze", str(p), "--format", "json")[1])
        assert data["ok"] and data["result"]["minimal"] is True

    def test_expand_then_analyze(self, b1_file, tmp_path):
        code, out, _ = call("expand", b1_file)
        assert code == 0
        p = tmp_path / "exp.dfa"
        p.write_text(out)
        data = json.loads(call("analyze", str(p), "--format", "json")[1])
        assert data["result"]["expandedNormal"] is True

    def test_analyze_text(self, b1_file):
        out = call("analyze", b1_file)[1]
        assert "minimal: false" in out
        assert "languageRank: 1" in out
        assert "lambda=4" in out

    def test_quotient(self, b1_file):
        code, out, _ = call("quotient", b1_file, "--partition", "0,1|2")
        assert code == 0
        assert parse_dfa(out).state_count == 2

    def test_quotient_not_congruence(self, b1_file):
        code, _, err = call("quotient", b1_file, "--partition", "0,2|1")
        assert code == 1
        assert err.startswith("error: NotACongruence: ")

    def test_rank_and_unrank_word(self):
        assert call("rank-word", "ba", "--regex", "(a+ba)*")[1] == "3\n"
        assert call("unrank-word", "3", "--regex", "(a+ba)*")[1] == "ba\n"

    def test_word_not_in_language(self):
        code, _, err = call("rank-word", "bb", "--regex", "(a+ba)*")
        assert code == 1 and err.startswith("error: WordNotInLanguage")

    def test_index_out_of_language(self):
        code, _, err = call("unrank-word", "5", "--regex", "a+b")
        assert code == 1 and err.startswith("error: IndexOutOfLanguage")

    def test_compress_decompress_hex(self, monkeypatch):
        code, out, _ = call("compress", "abaaba", "--regex", "(a+ba)*")
        assert code == 0
        code, word, _ = call("decompress", "--regex", "(a+ba)*", stdin=out,
                             monkeypatch=monkeypatch)
        assert (code, word) == (0, "abaaba\n")

    def test_stdin_automaton(self, monkeypatch):
        text = serialize_dfa(make_b1())
        assert call("rank", "-", stdin=text, monkeypatch=monkeypatch)[1] == "1\n"


class TestJson:
    def test_success_wrapper(self):
        out = call("count", "--regex", "(a+ba)*", "-n", "10", "--format", "json")[1]
        assert json.loads(out) == {"ok": True, "result": 89}

    def test_error_wrapper(self):
        code, out, _ = call("count", "--regex", "(a+ba)*", "--closed-form", "-n", "5",
                            "--format", "json")
        assert code == 1
        assert json.loads(out) == {"ok": False, "error": {
            "code": "NotRankOne", "detail": "language rank is 2"}}

    def test_automaton_result_is_text_format(self, b1_file):
        out = json.loads(call("minimize", b1_file, "--format", "json")[1])
        assert parse_dfa(out["result"]).state_count == 2


class TestUsageErrors:
    def test_regex_syntax(self):
        code, _, err = call("rank", "--regex", "(a+b")
        assert code == 2 and err.startswith("error: RegexSyntaxError")

    def test_parse_error(self, tmp_path):
        p = tmp_path / "bad.dfa"
        p.write_text("alphabet: ab\nstates: 2\ninitial: 5\n")
        code, _, err = call("rank", str(p))
        assert code == 2 and err.startswith("error: ParseError")

    def test_two_inputs(self, b1_file):
        assert call("rank", b1_file, "--regex", "a")[0] == 2

    def test_no_input(self):
        assert call("rank")[0] == 2

    def test_missing_file(self, tmp_path):
        assert call("rank", str(tmp_path / "nope.dfa"))[0] == 2

    def test_bad_partition(self, b1_file):
        assert call("equitable", b1_file, "--partition", "0,1")[0] == 2

    def test_unknown_subcommand(self, capsys):
        assert run(["frobnicate"]) == 2


class TestProcess:
    def _run(self, *args, stdin=b""):
        return subprocess.run([sys.executable, "-m", "dfaspectra", *args],
                              input=stdin, capture_output=True, check=False)

    def test_output_is_deterministic(self, b1_file):
        runs = [self._run("analyze", b1_file, "--format", "json").stdout for _ in range(2)]
        assert runs[0] == runs[1] and runs[0]

    def test_raw_round_trip(self):
        raw = self._run("compress", "abaaba", "--regex", "(a+ba)*", "--raw").stdout
        assert raw and not raw.endswith(b"\n")
        back = self._run("decompress", "--regex", "(a+ba)*", "--raw", stdin=raw)
        assert back.returncode == 0
        assert back.stdout == b"abaaba\n"

    def test_exit_code_propagates(self):
        r = self._run("count", "--regex", "(a+ba)*", "--closed-form", "-n", "5")
        assert r.returncode == 1
        assert r.stderr == b"error: NotRankOne: language rank is 2\n"
