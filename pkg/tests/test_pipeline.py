"""
End-to-end tests for the pipeline, its certificate and the harnesses.
FILE: tests/test_pipeline.py
"""

from fractions import Fraction
import warnings

import pytest

from core.certificate import MODE_EXACT, MODE_HAMILTONIAN, MODE_PIPELINE, RATIO, Certificate
from core.pipeline import SEED_ENV, PipelineOptions, bench, default_seed, gadget_trials, run_pipeline
from core.tour import Tour, oracle_opt
from utils.file_utils import generate_instance, write_instance
from utils.json_utils import dumps


# ==================== OPTIONS ====================

def test_options_round_trip():
    options = PipelineOptions(oracle=True, seed=9, debug_checks=True)
    assert PipelineOptions.from_dict(options.to_dict()) == options


def test_options_reject_bad_values():
    with pytest.raises(ValueError):
        PipelineOptions(oracle_cap=0)
    with pytest.raises(ValueError):
        PipelineOptions(min_component=7, exact_small_limit=4)
    with pytest.raises(ValueError):
        PipelineOptions.from_dict(["oracle"])


def test_default_seed_reads_the_environment(monkeypatch):
    monkeypatch.setenv(SEED_ENV, "42")
    assert default_seed() == 42
    assert PipelineOptions().seed == 42
    monkeypatch.setenv(SEED_ENV, "forty-two")
    assert default_seed() == 0
    monkeypatch.delenv(SEED_ENV)
    assert default_seed() == 0


# ==================== CERTIFICATE ====================

def test_certificate_checks_skip_what_does_not_apply():
    inst = generate_instance(4, 10, seed=1)
    tour = oracle_opt(inst)
    certificate = Certificate(n=4, mode=MODE_EXACT, tour=tour, opt=tour.weight)
    checks = certificate.checks()
    assert checks['ratio'] is True
    assert checks['h_weight'] is None
    assert checks['class_half'] is None
    assert certificate.passed
    assert certificate.to_dict()['passed'] is True


def test_certificate_reports_failures():
    certificate = Certificate(n=5, mode=MODE_EXACT, tour=Tour((0, 1, 2, 3, 4), Fraction(3)), opt=Fraction(4))
    certificate.tour_valid = False
    assert certificate.failures() == ['ratio', 'tour_valid']
    assert not certificate.passed


# ==================== RUNS ====================

def test_tiny_instances_are_solved_exactly():
    inst = generate_instance(4, 20, seed=2)
    tour, certificate = run_pipeline(inst, PipelineOptions(oracle=True))
    assert certificate.mode == MODE_EXACT
    assert tour.weight == oracle_opt(inst).weight
    assert certificate.passed


def test_hamiltonian_cover_is_returned(pentagon_instance):
    tour, certificate = run_pipeline(pentagon_instance, PipelineOptions(oracle=True))
    assert certificate.mode == MODE_HAMILTONIAN
    assert tour.weight == 15
    assert certificate.ratio == 1
    assert certificate.passed


def test_three_triangle_example(figure_instance):
    tour, certificate = run_pipeline(figure_instance, PipelineOptions(oracle=True))
    assert certificate.mode == MODE_PIPELINE
    assert certificate.w_C == 45
    assert certificate.bad_cycles == {'triangle': 3, 'square': 0}
    assert certificate.w_B >= certificate.opt
    assert certificate.ratio >= RATIO
    assert certificate.passed, certificate.failures()


def test_random_instances_reach_the_ratio():
    for seed in range(25):
        inst = generate_instance(5 + seed % 4, 100, seed)
        tour, certificate = run_pipeline(inst, PipelineOptions(oracle=True, seed=seed))
        assert certificate.checks()['tour_valid']
        assert certificate.checks()['cover_upper_bound'] is not False
        assert tour.weight >= RATIO * certificate.opt


def test_budget_holds_on_runs_without_events():
    events = 0
    for seed in range(40):
        inst = generate_instance(6 + seed % 5, 100, seed)
        _, certificate = run_pipeline(inst, PipelineOptions(seed=seed))
        if certificate.mode != MODE_PIPELINE:
            continue
        if certificate.safety_net_events:
            events += len(certificate.safety_net_events)
            continue
        assert certificate.checks()['budget'] is not False
        assert certificate.checks()['h_weight'] is True
    if events:
        warnings.warn(f"{events} safety-net events on the random batch")


def test_runs_are_deterministic():
    inst = generate_instance(9, 100, seed=17)
    first = run_pipeline(inst, PipelineOptions(seed=1))[1]
    second = run_pipeline(inst, PipelineOptions(seed=1))[1]
    assert dumps(first.to_dict()) == dumps(second.to_dict())


def test_oracle_is_skipped_above_the_cap():
    inst = generate_instance(9, 100, seed=3)
    _, certificate = run_pipeline(inst, PipelineOptions(oracle=True, oracle_cap=8))
    assert certificate.opt is None
    assert certificate.checks()['ratio'] is None


# ==================== HARNESSES ====================

def test_gadget_trials():
    result = gadget_trials(100, seed=7)
    assert result['trials'] == 100
    assert result['violations'] == 0
    assert Fraction(result['max_error']) >= 0


def test_bench(tmp_path):
    for seed in range(3):
        write_instance(generate_instance(6 + seed, 50, seed), tmp_path / f"inst{seed}.tsp")
    summary = bench(tmp_path)
    assert summary['instances'] == 3
    assert summary['ratio_violations'] == 0
    assert [row['file'] for row in summary['rows']] == ["inst0.tsp", "inst1.tsp", "inst2.tsp"]
