import pytest
from hypothesis import given, strategies as st

from numitn.wer import GuardConfig, edit_distance, guard, word_error_rate

words = st.lists(st.sampled_from(["a", "b", "c", "dog"]), max_size=8)


class TestEditDistance:
    @pytest.mark.parametrize("ref,hyp,d", [
        ([], [], 0),
        ([], ["a"], 1),
        (["a"], [], 1),
        (["a", "b"], ["a", "b"], 0),
        (["a", "b"], ["a", "c"], 1),
        (["a", "b", "c"], ["a", "c"], 1),
        (["a", "b"], ["b", "a"], 2),
        (["kitten"], ["sitting"], 1),
        (["a", "b", "c", "d"], ["x", "y"], 4),
    ])
    def test_table(self, ref, hyp, d):
        assert edit_distance(ref, hyp) == d

    @given(words, words)
    def test_symmetry(self, a, b):
        assert edit_distance(a, b) == edit_distance(b, a)

    @given(words)
    def test_identity(self, a):
        assert edit_distance(a, a) == 0

    @given(words, words, words)
    def test_triangle(self, a, b, c):
        assert edit_distance(a, c) <= edit_distance(a, b) + edit_distance(b, c)

    @given(words, words)
    def test_bounds(self, a, b):
        d = edit_distance(a, b)
        assert abs(len(a) - len(b)) <= d <= max(len(a), len(b))


class TestWordErrorRate:
    @pytest.mark.parametrize("ref,hyp,rate", [
        ("the cat sat", "the cat sat", 0.0),
        ("the cat sat", "the cat", 1 / 3),
        ("a b c d", "a x c d", 0.25),
        ("", "", 0.0),
        ("", "anything at all", 3.0),
        ("one two", "one two three four", 1.0),
    ])
    def test_table(self, ref, hyp, rate):
        assert word_error_rate(ref, hyp) == rate

    def test_whitespace_tokenization(self):
        assert word_error_rate("a  b\tc", "a b c") == 0.0

    def test_case_matters(self):
        assert word_error_rate("The cat", "the cat") == 0.5

    @given(st.text(max_size=40), st.text(max_size=40))
    def test_non_negative(self, a, b):
        assert word_error_rate(a, b) >= 0.0

    @given(st.text(max_size=40))
    def test_self_is_zero(self, a):
        assert word_error_rate(a, a) == 0.0


class TestGuard:
    def test_kept_below_threshold(self):
        decision = guard("the cat sat on the mat", "the cat sat on the hat")
        assert decision.kept
        assert decision.wer == pytest.approx(1 / 6)
        assert decision.text == "the cat sat on the hat"

    def test_reverted_above_threshold(self):
        decision = guard("one two", "totally different text here")
        assert not decision.kept
        assert decision.text == "one two"

    def test_boundary_is_kept(self):
        # 1 edit over 2 reference words lands exactly on the default 0.5.
        decision = guard("alpha beta", "alpha gamma")
        assert decision.wer == 0.5
        assert decision.kept

    def test_custom_threshold(self):
        config = GuardConfig(threshold=0.0)
        decision = guard("a b", "a c", config)
        assert not decision.kept

    def test_negative_threshold_rejected(self):
        with pytest.raises(ValueError):
            GuardConfig(threshold=-0.1)

    @given(st.text(max_size=30), st.text(max_size=30),
           st.floats(min_value=0, max_value=4, allow_nan=False))
    def test_decision_is_consistent(self, source, rewritten, threshold):
        decision = guard(source, rewritten, GuardConfig(threshold=threshold))
        assert decision.kept == (decision.wer <= threshold)
        assert decision.text == (rewritten if decision.kept else source)
