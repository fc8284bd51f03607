from fractions import Fraction

import pytest

from probsession.analysis import TrialRNG, declared_intervals, simulate
from probsession.config import AnalysisConfig
from probsession.dynamics import Comm
from probsession.errors import IncompleteProbability
from probsession.loaders import parse_process

NO = Comm("rA", "rB", "no")
YES = Comm("rA", "rB", "yes")


@pytest.fixture(scope="module")
def com_two_run(corpus):
    return simulate(corpus["com_two"], trials=10_000, seed=42, global_type=corpus["com_two"].annotation)


def test_first_step_frequencies(com_two_run):
    assert abs(com_two_run.label_freq[(0, NO)] - Fraction(2, 5)) <= Fraction(2, 100)
    assert abs(com_two_run.label_freq[(0, YES)] - Fraction(3, 5)) <= Fraction(2, 100)
    assert com_two_run.label_freq[(0, NO)] + com_two_run.label_freq[(0, YES)] == 1


def test_audit_of_the_start_state(com_two_run):
    assert com_two_run.truncated == 0
    assert [entry.label for entry in com_two_run.audit] == [NO, YES]
    assert all(entry.visits == 10_000 for entry in com_two_run.audit)
    assert all(entry.interval is not None for entry in com_two_run.audit)
    assert com_two_run.ok


def test_same_seed_same_result(corpus, com_two_run):
    again = simulate(corpus["com_two"], trials=10_000, seed=42, global_type=corpus["com_two"].annotation)
    assert again.label_freq == com_two_run.label_freq
    assert again.audit == com_two_run.audit


def test_long_runs_are_truncated(corpus):
    report = simulate(parse_process("def X() = X() in X()"), trials=5, seed=1,
                      config=AnalysisConfig(max_trace_steps=10))
    assert report.truncated == 5


def test_simulation_parameters_are_validated(corpus):
    with pytest.raises(ValueError):
        simulate(corpus["com_two"], trials=0, seed=1)
    incomplete = parse_process("new s . (s[rA][rB](+){ 1/2: a(1). 0 } | s[rB][rA]&{ a(x). 0 })")
    with pytest.raises(IncompleteProbability):
        simulate(incomplete, trials=1, seed=1)


def test_declared_intervals(global_types):
    intervals = declared_intervals(global_types["ga_bounded.gty"])
    assert len(intervals) == 6
    assert intervals[("rB", "rA", "talk")].lower == Fraction(9, 10)
    assert intervals[("rA", "rB", "quit")].upper == Fraction(1, 5)


def test_trial_rng_is_keyed_by_seed_and_trial():
    first = [TrialRNG(42, 7).below(1000) for _ in range(3)]
    again = [TrialRNG(42, 7).below(1000) for _ in range(3)]
    assert first == again
    rng = TrialRNG(42, 7)
    draws = [rng.below(10) for _ in range(200)]
    assert all(0 <= d < 10 for d in draws)


def test_trial_rng_wide_bounds():
    rng = TrialRNG(3, 0)
    bound = (1 << 70) + 11
    assert all(0 <= rng.below(bound) < bound for _ in range(50))
    with pytest.raises(ValueError):
        rng.below(0)


def test_trial_rng_choose():
    rng = TrialRNG(5, 1)
    assert {rng.choose([Fraction(0), Fraction(1)]) for _ in range(50)} == {1}
    assert rng.choose([Fraction(1)]) == 0
    picks = [rng.choose([Fraction(1, 3), Fraction(2, 3)]) for _ in range(300)]
    assert set(picks) == {0, 1}
