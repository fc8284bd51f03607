from collections import defaultdict
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from probsession.analysis import (
    NOT_COMPUTED, StepCache, enumerate_paths, reach, reach_distribution, reach_step,
    total_probability,
)
from probsession.calculus import NIL
from probsession.config import AnalysisConfig
from probsession.dynamics import Comm, state_key
from probsession.errors import ExplosionGuard, IncompleteProbability
from probsession.loaders import parse_process

COMPLETE = ["com_two", "call_demo", "system_simple", "system_full"]


def test_com_two_collapses_to_one_absorbing_state(corpus):
    (entry,) = reach(corpus["com_two"], 1)
    assert entry.state == NIL
    assert entry.mass == 1
    assert entry.absorbed


@pytest.mark.parametrize("name", COMPLETE)
@pytest.mark.parametrize("k", range(1, 7))
def test_reach_mass_is_exactly_one(corpus, name, k):
    assert total_probability(corpus[name], k) == Fraction(1)


def test_stuck_process_has_empty_reach_set(corpus):
    assert reach(corpus["deadlock_mismatch"], 1) == []
    assert total_probability(corpus["deadlock_mismatch"], 3) is NOT_COMPUTED


def test_first_steps_of_system_simple(corpus):
    entries = reach(corpus["system_simple"], 1)
    assert [e.mass for e in entries] == [Fraction(1, 2), Fraction(1, 2)]
    assert not any(e.absorbed for e in entries)


def test_absorbed_states_are_carried_forward(corpus):
    cache = StepCache()
    first = reach(corpus["com_two"], 1, cache=cache)
    later = reach(corpus["com_two"], 5, cache=cache)
    assert later == first
    assert cache.hits > 0


def test_k_must_be_positive(corpus):
    with pytest.raises(ValueError):
        reach(corpus["com_two"], 0)


def test_incomplete_process_is_rejected():
    process = parse_process(
        "new s . (s[rA][rB](+){ 1/2: a(1). 0 } | s[rB][rA]&{ a(x). 0 })"
    )
    with pytest.raises(IncompleteProbability):
        reach(process, 1)


def test_explosion_cap(corpus):
    with pytest.raises(ExplosionGuard):
        reach(corpus["system_simple"], 4, config=AnalysisConfig(explosion_cap=1))
    with pytest.raises(ExplosionGuard):
        enumerate_paths(corpus["system_simple"], 4, config=AnalysisConfig(explosion_cap=1))


def test_com_two_paths(corpus):
    paths = enumerate_paths(corpus["com_two"], 3)
    assert [p.labels for p in paths] == [(Comm("rA", "rB", "no"),), (Comm("rA", "rB", "yes"),)]
    assert [p.probability for p in paths] == [Fraction(2, 5), Fraction(3, 5)]
    assert all(p.final_key == state_key(NIL) for p in paths)


def test_stuck_process_has_only_the_empty_path(corpus):
    (path,) = enumerate_paths(corpus["deadlock_mismatch"], 4)
    assert len(path) == 0
    assert path.probability == 1
    assert path.final_key == state_key(corpus["deadlock_mismatch"])


@pytest.mark.parametrize("name", COMPLETE)
@pytest.mark.parametrize("depth", [1, 3, 5])
def test_path_probabilities_sum_to_one(corpus, name, depth):
    paths = enumerate_paths(corpus[name], depth)
    assert sum(p.probability for p in paths) == 1
    assert all(len(p) <= depth for p in paths)


@pytest.mark.parametrize("name", ["system_simple", "system_full"])
def test_paths_agree_with_reach_masses(corpus, name):
    k = 4
    by_key = defaultdict(Fraction)
    for path in enumerate_paths(corpus[name], k):
        by_key[path.final_key] += path.probability
    distribution = reach_distribution(corpus[name], k)
    assert dict(by_key) == {key: mass for key, (_, mass) in distribution.items()}


def masses(distribution):
    return {key: mass for key, (_, mass) in distribution.items()}


@settings(max_examples=30)
@given(name=st.sampled_from(COMPLETE), k=st.integers(2, 5))
def test_reach_is_one_step_after_previous_set(corpus, name, k):
    cache = StepCache()
    previous = reach_distribution(corpus[name], k - 1, cache=cache)
    assert masses(reach_step(previous, cache)) == masses(reach_distribution(corpus[name], k))


@settings(max_examples=30)
@given(name=st.sampled_from(COMPLETE), k=st.integers(2, 5))
def test_reach_conditions_on_first_step(corpus, name, k):
    expected = defaultdict(Fraction)
    for key, (state, mass) in reach_distribution(corpus[name], 1).items():
        later = reach_distribution(state, k - 1)
        if not later:
            expected[key] += mass
        for later_key, (_, later_mass) in later.items():
            expected[later_key] += mass * later_mass
    assert dict(expected) == masses(reach_distribution(corpus[name], k))
