import pytest

from perfect_complexes.config import AppConfig
from perfect_complexes.decomposition import RefinementLevel
from perfect_complexes.errors import UnsupportedRingError
from perfect_complexes.orchestrator import (
    GeneratorKind,
    analyze_decompose,
    generate,
    run_dedekind_demo,
    run_local_demo,
    run_local_length,
    trial_seed,
)
from perfect_complexes.parsers import parse_plan, parse_ring


def test_trial_seeds_are_stable_and_distinct():
    assert trial_seed(1, 0) == trial_seed(1, 0)
    assert len({trial_seed(1, i) for i in range(50)}) == 50
    assert trial_seed(1, 3) != trial_seed(2, 3)


def test_generate_rebuilds_the_variable_count():
    c, planted = generate(GeneratorKind.KOSZUL, parse_ring("gf:3-local:2"), n=3)
    assert planted is None
    assert c.ring == parse_ring("gf:3-local:3")
    with pytest.raises(UnsupportedRingError):
        generate(GeneratorKind.ITERATED, parse_ring("int"), n=2)


def test_generate_scrambled_returns_the_plan():
    ring = parse_ring("int")
    c, planted = generate(GeneratorKind.SCRAMBLED, ring, plan=parse_plan("(0,c4)", ring), seed=3)
    assert planted is not None
    assert planted.complex == c


def test_dedekind_demo_is_independent_of_workers():
    settings = AppConfig(demo_trials=6, demo_max_rank=4)
    serial = run_dedekind_demo(settings, seed=9, workers=1)
    parallel = run_dedekind_demo(settings, seed=9, workers=2)
    assert serial.ok, str(serial)
    assert serial.to_dict() == parallel.to_dict()
    assert serial.summary["max_width"] in (0, 1)


@pytest.mark.slow
def test_dedekind_demo_full_run():
    settings = AppConfig()
    assert settings.demo_trials == 200
    report = run_dedekind_demo(settings, seed=1)
    assert report.ok, str(report)
    assert report.trials == 200
    assert report.summary["max_width"] in (0, 1)


def test_dedekind_demo_rejects_unknown_rings():
    with pytest.raises(ValueError):
        run_dedekind_demo(AppConfig(demo_rings=("reals",)), trials=1)


def test_local_witnesses_have_the_requested_length():
    names = [w.name for w in run_local_length(3)]
    assert names == ["f_3", "multi_iterated_koszul(m=1)"]
    assert all(w.certified for w in run_local_length(2))


def test_local_demo_summary():
    report = run_local_demo(AppConfig(), max_n=5)
    assert report.ok, str(report)
    assert report.summary["certified_lengths"] == [1, 2, 3, 4, 5]
    assert report.trials == 1 + 2 + 2 + 2 + 2
    with pytest.raises(ValueError):
        run_local_demo(AppConfig(), max_n=0)


def test_decompose_outcome_notes_refused_refinement():
    ring = parse_ring("q[x]")
    c, _ = generate(GeneratorKind.KOSZUL, ring)
    outcome = analyze_decompose(c, RefinementLevel.PRIMARY)
    assert not outcome.ok
    assert outcome.note
    assert outcome.payload["refinement"] == "invariant_factor"
