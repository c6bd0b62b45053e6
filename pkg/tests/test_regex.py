import pytest

from dfaspectra import Matrix, adjacency, compile_regex, is_trim, minimize
from dfaspectra.errors import RegexSyntaxError

from oracles import accepts, words_of_length


def reference_match(pattern, word):
    """Backtracking matcher over the same grammar, kept independent of Glushkov."""
    import re

    translated = re.sub(r"\*+", "*", pattern.replace("+", "|").replace(" ", ""))
    return re.fullmatch(translated, word) is not None


class TestCompile:
    def test_fibonacci(self):
        d = compile_regex("(a+ba)*")
        assert adjacency(minimize(d)) == Matrix.from_rows([[1, 1], [1, 0]])
        assert is_trim(d)

    def test_single_literal(self):
        d = compile_regex("a")
        assert d.state_count == 2
        assert d.accepts("a") and not d.accepts("") and not d.accepts("aa")

    @pytest.mark.parametrize("pattern", [
        "(a+ba)*", "a*b*", "(ab+b)*a", "a(b+c)*a", "((a+b)(a+b))*", "a**",
        "(a*b*)*c", "x y z", "(a+b)*abb",
    ])
    def test_against_python_re(self, pattern):
        d = compile_regex(pattern)
        alphabet = sorted(set(pattern) - set("+*() "))
        for n in range(6):
            for w in words_of_length(alphabet, n):
                assert accepts(d, w) == reference_match(pattern, w), (pattern, w)

    @pytest.mark.parametrize("pattern, position", [
        ("((a", 3), ("", 0), ("a+", 2), ("*a", 0), ("a)", 1), ("()", 1), ("a+#", 2),
    ])
    def test_syntax_errors(self, pattern, position):
        with pytest.raises(RegexSyntaxError) as e:
            compile_regex(pattern)
        assert e.value.position == position
