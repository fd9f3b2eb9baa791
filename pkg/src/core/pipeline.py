"""
End-to-end orchestration of the 7/9 pipeline.
FILE: src/core/pipeline.py

cycle cover -> G' b-matching -> H -> reducer -> colorer -> partitioner
-> lift -> tour, with every stage's numbers collected in a Certificate.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Set, Tuple, Union
import logging
import os
import time
from random import Random

from utils.file_utils import iter_instances
from utils.validation import validate_tour, validate_two_path_coloring

from .certificate import MODE_EXACT, MODE_HAMILTONIAN, MODE_PIPELINE, RATIO, Certificate
from .colorer import color_well
from .errors import MaxTSPError
from .gadgets import BAD_FRACTION, BadCycle, build_gadget, random_bad_square, solve_gprime, verify_gadget
from .graph_data import Color, Instance, format_weight
from .h_builder import build_H, check_theorem1, split_small_components
from .matching_engine import max_weight_cycle_cover
from .partitioner import choose_Eprime, partition, repair_two_path_coloring
from .reducer import lift_solution, reduce_to_fixpoint
from .tour import ORACLE_CAP, Tour, exact_small_component, extract_tour, oracle_opt

logger = logging.getLogger(__name__)

SEED_ENV = 'MAXTSP_SEED'
SMALL_INSTANCE = 5


def default_seed() -> int:
    value = os.environ.get(SEED_ENV, '').strip()
    if not value:
        return 0
    try:
        return int(value)
    except ValueError:
        logger.warning("Ignoring non-integer %s=%r", SEED_ENV, value)
        return 0


@dataclass
class PipelineOptions:
    """Run options for run_pipeline"""
    oracle: bool = False
    oracle_cap: int = ORACLE_CAP
    seed: Optional[int] = None
    debug_checks: bool = False     # assert invariants inside the colorer; budget overruns raise
    min_component: int = 5
    exact_small_limit: int = 4     # largest component handed to exhaustive search

    def __post_init__(self):
        if self.seed is None:
            self.seed = default_seed()
        if self.oracle_cap < 1:
            raise ValueError(f"Oracle cap must be >= 1: {self.oracle_cap}")
        if self.min_component < 1:
            raise ValueError(f"Minimum component size must be >= 1: {self.min_component}")
        if self.exact_small_limit < 2:
            raise ValueError(f"Exact small limit must be >= 2: {self.exact_small_limit}")
        if self.min_component > self.exact_small_limit + 1:
            raise ValueError(
                f"Components below {self.min_component} vertices cannot be solved exactly "
                f"with exact_small_limit = {self.exact_small_limit}"
            )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'oracle': self.oracle,
            'oracle_cap': self.oracle_cap,
            'seed': self.seed,
            'debug_checks': self.debug_checks,
            'min_component': self.min_component,
            'exact_small_limit': self.exact_small_limit,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'PipelineOptions':
        if not isinstance(data, dict):
            raise ValueError("Data must be a dictionary")
        seed = data.get('seed')
        return cls(
            oracle=bool(data.get('oracle', False)),
            oracle_cap=int(data.get('oracle_cap', ORACLE_CAP)),
            seed=None if seed is None else int(seed),
            debug_checks=bool(data.get('debug_checks', False)),
            min_component=int(data.get('min_component', 5)),
            exact_small_limit=int(data.get('exact_small_limit', 4)),
        )


def _weight_of(graph, edge_ids) -> Fraction:
    return sum((graph.edge(e).weight for e in edge_ids), Fraction(0))


def _finish(certificate: Certificate, instance: Instance) -> Certificate:
    report = validate_tour(instance, certificate.tour.order, certificate.tour.weight)
    certificate.tour_valid = report.passed
    if not report.passed:
        logger.error("Tour failed validation: %s", report.failures)
    if certificate.passed:
        logger.info("✅ Certificate chain holds (tour %s)", format_weight(certificate.tour.weight))
    else:
        logger.warning("⚠️ Certificate failures: %s", certificate.failures())
    return certificate


def run_pipeline(instance: Instance, options: Optional[PipelineOptions] = None) -> Tuple[Tour, Certificate]:
    options = options or PipelineOptions()
    opt: Optional[Fraction] = None
    if options.oracle:
        if instance.n <= options.oracle_cap:
            opt = oracle_opt(instance, options.oracle_cap).weight
        else:
            logger.info("Oracle skipped: n = %d above cap %d", instance.n, options.oracle_cap)

    if instance.n < SMALL_INSTANCE:
        tour = oracle_opt(instance, max(options.oracle_cap, SMALL_INSTANCE))
        certificate = Certificate(
            n=instance.n, mode=MODE_EXACT, tour=tour, options=options.to_dict(),
            opt=tour.weight if opt is None else opt,
        )
        return tour, _finish(certificate, instance)

    C = max_weight_cycle_cover(instance)
    certificate = Certificate(
        n=instance.n, mode=MODE_PIPELINE, tour=Tour((), Fraction(0)), options=options.to_dict(),
        w_C=C.weight, cycle_lengths=sorted(len(c) for c in C.cycles), opt=opt,
    )
    if C.is_hamiltonian():
        certificate.mode = MODE_HAMILTONIAN
        certificate.tour = Tour.from_order(instance, C.cycles[0])
        logger.info("🧭 Cycle cover is a single cycle; returning it")
        return certificate.tour, _finish(certificate, instance)

    solution = solve_gprime(instance, C)
    census = Counter('triangle' if c.length == 3 else 'square' for c in solution.bad_cycles)
    certificate.bad_cycles = {'triangle': census['triangle'], 'square': census['square']}
    certificate.w_B = solution.w_B
    certificate.w_prime_SB = solution.w_prime_SB
    certificate.gadget_error_total = solution.gadget_error_total
    certificate.gadget_errors = solution.gadget_errors()

    Hg = build_H(C, solution.sb.pairs(), instance)
    certificate.w_H = Hg.weight
    certificate.component_sizes = sorted(Hg.component_sizes())
    certificate.switches = list(Hg.switches)
    certificate.switch_gain = Hg.switch_gain
    events: List[str] = [f"H 2-switch at pair {s['pair']} with gain {s['gain']}" for s in Hg.switches]
    if opt is not None:
        theorem = check_theorem1(Hg, opt, options.min_component)
        logger.debug("H bound check: %s", theorem.to_dict())

    core, pieces = split_small_components(Hg, options.min_component)
    certificate.small_components = [sorted(c) for c in core.small_components]

    removed: Set[int] = set()
    colors: Dict[int, Color] = {}
    if core.graph.num_edges:
        reduction = reduce_to_fixpoint(core.graph, options.min_component)
        K = reduction.graph
        coloring, coloring_report = color_well(K, options.debug_checks)
        phases = partition(K, coloring, strict=options.debug_checks)
        choice = choose_Eprime(phases, K, coloring, strict=options.debug_checks)
        events.extend(coloring_report.events)
        events.extend(phases.events)

        removed, colors, lift_report = lift_solution(reduction.stack, choice.removed, choice.colors)
        events.extend(lift_report.events)
        check = validate_two_path_coloring(core.graph, colors, removed)
        if not check.passed:
            logger.warning("⚠️ Lifted coloring invalid: %s", check.failures[:3])
            events.extend(repair_two_path_coloring(core.graph, colors, removed))

        certificate.reducer = {
            'transforms': reduction.counts(),
            'exempt': list(reduction.exempt),
            'lift_searches': lift_report.searches,
            'lift_overspend': format_weight(lift_report.overspend),
        }
        certificate.coloring = coloring_report.to_dict()
        certificate.phase_weights = {p.value: w for p, w in choice.phase_weights.items()}
        certificate.chosen_phase = choice.phase.value
        certificate.w_Eprime = choice.weight
        certificate.w_core = choice.graph_weight

    for piece in pieces:
        if piece.num_vertices > options.exact_small_limit:
            raise MaxTSPError(f"Small component of {piece.num_vertices} vertices exceeds the exact limit")
        best = exact_small_component(piece)
        removed |= best.removed
        colors.update(best.colors)

    certificate.w_removed_total = _weight_of(Hg.graph, removed)
    extraction = extract_tour(instance, Hg.graph, removed, colors)
    certificate.tour = extraction.tour
    certificate.class_weights = dict(extraction.class_weights)
    certificate.chosen_class_weight = extraction.chosen_weight
    certificate.patch_pairs = [list(p) for p in extraction.patch_pairs]
    certificate.safety_net_events = events
    return extraction.tour, _finish(certificate, instance)


# ==================== HARNESSES ====================

def _random_bad_triangle(rng: Random) -> BadCycle:
    while True:
        sides = tuple(Fraction(rng.randint(1, 100)) for _ in range(3))
        if all(side > BAD_FRACTION * sum(sides) for side in sides):
            return BadCycle(vertices=(0, 1, 2), sides=sides)


def gadget_trials(trials: int, seed: int) -> Dict[str, Any]:
    """Build and audit `trials` random bad-square gadgets plus one triangle each"""
    rng = Random(seed)
    violations: List[Dict[str, Any]] = []
    max_error = Fraction(0)
    for trial in range(trials):
        square = random_bad_square(rng)
        triangle = _random_bad_triangle(rng)
        for cycle in (square, triangle):
            try:
                report = verify_gadget(build_gadget(cycle, cycle.length), strict=False)
            except MaxTSPError as e:
                violations.append({'trial': trial, 'cycle': cycle.to_dict(), 'failures': [str(e)]})
                continue
            max_error = max(max_error, report.max_error)
            if not report.passed:
                violations.append({'trial': trial, 'cycle': cycle.to_dict(), 'failures': report.failures})
    logger.info("Gadget trials: %d, violations: %d", trials, len(violations))
    return {
        'trials': trials,
        'seed': seed,
        'violations': len(violations),
        'max_error': format_weight(max_error),
        'failures': violations[:20],
    }


def bench(directory: Union[str, Path], options: Optional[PipelineOptions] = None) -> Dict[str, Any]:
    """Run every instance file of a directory; the oracle ratio is taken where n allows"""
    options = options or PipelineOptions(oracle=True)
    rows = []
    for path, instance in iter_instances(directory):
        started = time.perf_counter()
        tour, certificate = run_pipeline(instance, options)
        elapsed = time.perf_counter() - started
        rows.append({
            'file': path.name,
            'n': instance.n,
            'mode': certificate.mode,
            'tour': format_weight(tour.weight),
            'opt': None if certificate.opt is None else format_weight(certificate.opt),
            'ratio': None if certificate.ratio is None else format_weight(certificate.ratio),
            'passed': certificate.passed,
            'failures': certificate.failures(),
            'safety_net_events': len(certificate.safety_net_events),
            'seconds': round(elapsed, 4),
        })
    ratios = [Fraction(r['ratio']) for r in rows if r['ratio'] is not None]
    summary = {
        'instances': len(rows),
        'failed': sum(not r['passed'] for r in rows),
        'ratio_violations': sum(1 for x in ratios if x < RATIO),
        'min_ratio': format_weight(min(ratios)) if ratios else None,
        'safety_net_events': sum(r['safety_net_events'] for r in rows),
        'rows': rows,
    }
    logger.info("📊 Bench: %d instances, %d failed", summary['instances'], summary['failed'])
    return summary


__all__ = [
    'SEED_ENV',
    'PipelineOptions',
    'default_seed',
    'run_pipeline',
    'gadget_trials',
    'bench',
]
