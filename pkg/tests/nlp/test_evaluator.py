"""Unit tests for scoring, baselines, significance and gold annotations."""

import io
import json
import unittest
from math import comb

from core.utilities.Errors import EvaluationError, ParseError
from nlp.analysis.CompoundAnalyzer import LEFT, RIGHT, Decision, Ratio
from nlp.corpus.CompoundExtractor import CompoundTriple
from nlp.evaluation.Annotations import GoldLabel, label_distribution, load_annotations, save_annotations
from nlp.evaluation.Evaluator import baseline_left, paired_significance, score


def triple(i):
    return CompoundTriple(f"a{i}", f"b{i}", f"c{i}")


def decision(t, branching, guessed=False, fallback=False):
    ratio = Ratio(1.0, 1.0) if guessed else Ratio(1.0, 0.0) if branching == LEFT else Ratio(0.0, 1.0)
    return Decision(t, branching, guessed, ratio, fallback, "tie" if guessed else "none")


def gold_from_counts(**counts):
    gold = {}
    i = 0
    for label, n in counts.items():
        for _ in range(n):
            gold[triple(i)] = GoldLabel(label)
            i += 1
    return gold


def tail(d, k):
    """P(X >= k) for X ~ Binomial(d, 1/2), by enumeration."""
    return sum(comb(d, j) for j in range(k, d + 1)) / 2 ** d


class TestScore(unittest.TestCase):
    """Test cases for score."""

    def test_accuracy(self):
        """Test accuracy over left/right items with three of four right."""
        gold = gold_from_counts(L=2, R=2)
        decisions = [decision(triple(0), LEFT), decision(triple(1), LEFT),
                     decision(triple(2), RIGHT), decision(triple(3), LEFT, guessed=True, fallback=True)]
        report = score(decisions, gold, metadata={"model": "dependency"})
        self.assertEqual((report.n_scored, report.n_correct), (4, 3))
        self.assertEqual(report.accuracy, 0.75)
        self.assertEqual(report.guess_rate, 0.25)
        self.assertEqual(report.fallback_rate, 0.25)
        self.assertEqual(report.left_proportion_gold, 0.5)
        self.assertEqual(report.left_proportion_predicted, 0.75)
        self.assertEqual(report.metadata, {"model": "dependency"})

    def test_excluded_labels(self):
        """Test E and I items are left out of accuracy."""
        gold = gold_from_counts(L=1, E=1, I=1)
        decisions = [decision(t, RIGHT) for t in gold]
        report = score(decisions, gold)
        self.assertEqual((report.n_scored, report.n_excluded, report.accuracy), (1, 2, 0.0))

    def test_only_excluded_labels(self):
        """Test no left/right items leaves accuracy undefined."""
        gold = gold_from_counts(E=2, I=1)
        with self.assertRaises(EvaluationError):
            score([decision(t, LEFT) for t in gold], gold)

    def test_missing_gold_label(self):
        """Test a decision without a gold label names the triple."""
        with self.assertRaises(EvaluationError) as context:
            score([decision(triple(9), LEFT)], gold_from_counts(L=1))
        self.assertIn("a9 b9 c9", context.exception.message)

    def test_missing_decisions_reported(self):
        """Test gold items without a decision are listed."""
        gold = gold_from_counts(L=3)
        report = score([decision(triple(0), LEFT)], gold)
        self.assertEqual(report.n_missing, 2)
        self.assertEqual(report.missing, ["a1 b1 c1", "a2 b2 c2"])

    def test_constant_left(self):
        """Test always-left accuracy on the published label counts."""
        gold = gold_from_counts(L=163, R=81, E=29, I=35)
        report = score([decision(t, LEFT) for t in gold], gold)
        self.assertEqual(report.n_scored, 244)
        self.assertAlmostEqual(report.accuracy, 163 / 244, delta=1e-12)
        self.assertAlmostEqual(baseline_left(gold), 163 / 244, delta=1e-12)

    def test_inverted_model(self):
        """Test a model and its inversion have accuracies summing to one."""
        gold = gold_from_counts(L=5, R=4)
        picks = [LEFT, RIGHT, RIGHT, LEFT, LEFT, RIGHT, LEFT, LEFT, RIGHT]
        flipped = [RIGHT if p == LEFT else LEFT for p in picks]
        a = score([decision(t, p) for t, p in zip(gold, picks)], gold)
        b = score([decision(t, p) for t, p in zip(gold, flipped)], gold)
        self.assertAlmostEqual(a.accuracy + b.accuracy, 1.0)

    def test_permutation_invariant(self):
        """Test item order does not change the report."""
        gold = gold_from_counts(L=3, R=3)
        decisions = [decision(t, LEFT if i % 2 else RIGHT) for i, t in enumerate(gold)]
        self.assertEqual(score(decisions, gold), score(list(reversed(decisions)), gold))

    def test_report_rendering(self):
        """Test JSON and text renderings."""
        gold = gold_from_counts(L=1, R=1)
        report = score([decision(t, LEFT) for t in gold], gold, metadata={"scheme": "pattern"})
        data = json.loads(report.to_json())
        self.assertEqual(data["accuracy"], 0.5)
        self.assertEqual(data["metadata"], {"scheme": "pattern"})
        text = report.to_text()
        self.assertIn("accuracy", text)
        self.assertIn("0.5000", text)
        self.assertIn("pattern", text)


class TestBaseline(unittest.TestCase):
    """Test cases for baseline_left."""

    def test_extremes(self):
        """Test all-right and all-left gold sets."""
        self.assertEqual(baseline_left(gold_from_counts(R=4)), 0.0)
        self.assertEqual(baseline_left(gold_from_counts(L=4, E=2)), 1.0)

    def test_no_scored_items(self):
        """Test a gold set without left/right items raises."""
        with self.assertRaises(EvaluationError):
            baseline_left(gold_from_counts(I=3))


class TestSignificance(unittest.TestCase):
    """Test cases for paired_significance."""

    def pair(self, a_only, b_only, both=0):
        """Decisions where model A alone, model B alone and both are right."""
        n = a_only + b_only + both
        gold = {triple(i): GoldLabel.LEFT for i in range(n)}
        a = [decision(triple(i), LEFT if i < a_only or i >= a_only + b_only else RIGHT) for i in range(n)]
        b = [decision(triple(i), LEFT if i >= a_only else RIGHT) for i in range(n)]
        return a, b, gold

    def test_against_enumeration(self):
        """Test p values equal the exact binomial tail for every split up to twenty."""
        for d in range(1, 21):
            for a_wins in range(d + 1):
                a, b, gold = self.pair(a_wins, d - a_wins, both=2)
                result = paired_significance(a, b, gold)
                wins = max(a_wins, d - a_wins)
                self.assertEqual((result.discordant, result.wins), (d, wins))
                self.assertAlmostEqual(result.p_value, tail(d, wins), delta=1e-12)

    def test_known_values(self):
        """Test nine wins of ten and one win of two."""
        a, b, gold = self.pair(9, 1)
        result = paired_significance(a, b, gold)
        self.assertAlmostEqual(result.p_value, 11 / 1024, delta=1e-12)
        self.assertEqual(result.better, "a")

        a, b, gold = self.pair(1, 1)
        result = paired_significance(a, b, gold)
        self.assertAlmostEqual(result.p_value, 0.75, delta=1e-12)
        self.assertIsNone(result.better)

    def test_swap_models(self):
        """Test swapping models keeps the p value and flips the winner."""
        a, b, gold = self.pair(7, 2)
        forward = paired_significance(a, b, gold)
        backward = paired_significance(b, a, gold)
        self.assertEqual(forward.p_value, backward.p_value)
        self.assertEqual((forward.better, backward.better), ("a", "b"))

    def test_monotone_in_wins(self):
        """Test p does not increase as the winner takes more discordant items."""
        values = [paired_significance(*self.pair(k, 12 - k)).p_value for k in range(6, 13)]
        self.assertEqual(values, sorted(values, reverse=True))

    def test_no_discordant(self):
        """Test identical decisions give p = 1 with the flag set."""
        a, _, gold = self.pair(0, 0, both=5)
        result = paired_significance(a, list(a), gold)
        self.assertEqual(result.p_value, 1.0)
        self.assertTrue(result.no_discordant)

    def test_different_items(self):
        """Test models scored on different items are rejected."""
        a, b, gold = self.pair(2, 2)
        with self.assertRaises(EvaluationError):
            paired_significance(a, b[:-1], gold)


class TestAnnotations(unittest.TestCase):
    """Test cases for the gold annotation file."""

    def test_load(self):
        """Test labels, order and normalisation."""
        gold = load_annotations(io.StringIO("# gold\nVillage market cheese\tL\nsoup pan oven\ti\n"))
        self.assertEqual(list(gold.items()), [
            (CompoundTriple("village", "market", "cheese"), GoldLabel.LEFT),
            (CompoundTriple("soup", "pan", "oven"), GoldLabel.INDETERMINATE),
        ])

    def test_load_normalisation(self):
        """Test gold words follow the configured case and accent handling."""
        text = "V\u00eellage market cheese\tL\n"
        self.assertEqual(list(load_annotations(io.StringIO(text), ascii_fold=True)),
                         [CompoundTriple("village", "market", "cheese")])
        self.assertEqual(list(load_annotations(io.StringIO(text), lowercase=False)),
                         [CompoundTriple("V\u00eellage", "market", "cheese")])

    def test_duplicates(self):
        """Test a repeated triple is accepted once and a conflicting one rejected."""
        gold = load_annotations(io.StringIO("a b c\tL\na b c\tL\n"))
        self.assertEqual(len(gold), 1)
        with self.assertRaises(ParseError):
            load_annotations(io.StringIO("a b c\tL\na b c\tR\n"))

    def test_malformed(self):
        """Test unknown labels and bad lines raise ParseError."""
        for text in ("a b c\tX\n", "a b c L\n", "a b\tL\n"):
            with self.assertRaises(ParseError):
                load_annotations(io.StringIO(text))

    def test_save(self):
        """Test the saved form reads back unchanged."""
        gold = gold_from_counts(L=1, R=1, E=1)
        sink = io.StringIO()
        save_annotations(gold, sink)
        self.assertEqual(load_annotations(io.StringIO(sink.getvalue())), gold)

    def test_label_distribution(self):
        """Test counts and proportions in E, I, L, R order."""
        table = label_distribution(gold_from_counts(L=163, R=81, E=29, I=35))
        self.assertEqual(list(table["Type"]), ["Error", "Indeterminate", "Left-branching", "Right-branching"])
        self.assertEqual(list(table["Number"]), [29, 35, 163, 81])
        self.assertAlmostEqual(table["Proportion"].sum(), 1.0)


if __name__ == '__main__':
    unittest.main()
