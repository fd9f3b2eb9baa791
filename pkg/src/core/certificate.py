"""
Per-run certificate: stage weights plus the re-evaluated inequality chain.
FILE: src/core/certificate.py

Every check is recomputed from the recorded raw weights when the
certificate is emitted, never copied from a stage's own verdict.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional
import logging

from .graph_data import format_weight
from .h_builder import H_BOUND_FACTOR
from .partitioner import BUDGET_FRACTION
from .tour import Tour

logger = logging.getLogger(__name__)

RATIO = Fraction(7, 9)

MODE_EXACT = 'exact'
MODE_HAMILTONIAN = 'hamiltonian-cover'
MODE_PIPELINE = 'pipeline'


def _fmt(value: Optional[Fraction]) -> Optional[str]:
    return None if value is None else format_weight(value)


@dataclass
class Certificate:
    n: int
    mode: str
    tour: Tour
    options: Dict[str, Any] = field(default_factory=dict)

    # cycle cover
    w_C: Optional[Fraction] = None
    cycle_lengths: List[int] = field(default_factory=list)
    bad_cycles: Dict[str, int] = field(default_factory=dict)

    # upper bound
    w_B: Optional[Fraction] = None
    w_prime_SB: Optional[Fraction] = None
    gadget_error_total: Optional[Fraction] = None
    gadget_errors: List[Dict[str, Any]] = field(default_factory=list)

    # H
    w_H: Optional[Fraction] = None
    component_sizes: List[int] = field(default_factory=list)
    small_components: List[List[int]] = field(default_factory=list)
    switches: List[Dict[str, Any]] = field(default_factory=list)
    switch_gain: Fraction = Fraction(0)

    # reduction, coloring, partition
    reducer: Dict[str, Any] = field(default_factory=dict)
    coloring: Dict[str, Any] = field(default_factory=dict)
    phase_weights: Dict[str, Fraction] = field(default_factory=dict)
    chosen_phase: Optional[str] = None
    w_Eprime: Optional[Fraction] = None
    w_core: Optional[Fraction] = None

    # extraction
    w_removed_total: Optional[Fraction] = None
    class_weights: Dict[str, Fraction] = field(default_factory=dict)
    chosen_class_weight: Optional[Fraction] = None
    patch_pairs: List[List[int]] = field(default_factory=list)

    opt: Optional[Fraction] = None
    safety_net_events: List[str] = field(default_factory=list)
    tour_valid: bool = True

    @property
    def ratio(self) -> Optional[Fraction]:
        if self.opt is None or self.opt == 0:
            return None
        return self.tour.weight / self.opt

    def checks(self) -> Dict[str, Optional[bool]]:
        """The inequality chain; None marks a check that does not apply to this run"""
        checks: Dict[str, Optional[bool]] = {'tour_valid': self.tour_valid}

        if self.opt is not None and self.w_C is not None:
            checks['cover_upper_bound'] = self.w_C >= self.opt
        else:
            checks['cover_upper_bound'] = None

        if self.mode == MODE_PIPELINE:
            checks['h_weight'] = self.w_H == 2 * self.w_C + self.w_prime_SB + self.switch_gain
        else:
            checks['h_weight'] = None

        if self.mode == MODE_PIPELINE and self.w_Eprime is not None:
            within = self.w_Eprime <= BUDGET_FRACTION * self.w_core
            # a safety-net removal may legitimately overspend; the event log carries it
            checks['budget'] = within if within or not self.safety_net_events else None
        else:
            checks['budget'] = None

        if self.mode == MODE_PIPELINE:
            checks['class_half'] = 2 * self.chosen_class_weight >= self.w_H - self.w_removed_total
            checks['tour_class'] = self.tour.weight >= self.chosen_class_weight
        else:
            checks['class_half'] = None
            checks['tour_class'] = None

        if self.opt is None:
            checks['ratio'] = None
        elif self.mode == MODE_PIPELINE:
            checks['ratio'] = self.tour.weight >= RATIO * self.opt
        else:
            checks['ratio'] = self.tour.weight == self.opt
        return checks

    def claims(self) -> Dict[str, Optional[bool]]:
        """Bounds the construction promises but the chain does not depend on"""
        if self.mode != MODE_PIPELINE or self.opt is None:
            return {'h_lower_bound': None}
        return {'h_lower_bound': self.w_H >= H_BOUND_FACTOR * self.opt}

    @property
    def passed(self) -> bool:
        return all(result is not False for result in self.checks().values())

    def failures(self) -> List[str]:
        return sorted(name for name, result in self.checks().items() if result is False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n': self.n,
            'mode': self.mode,
            'options': dict(self.options),
            'tour': self.tour.to_dict(),
            'cover': {
                'weight': _fmt(self.w_C),
                'cycle_lengths': list(self.cycle_lengths),
                'bad_cycles': dict(self.bad_cycles),
            },
            'upper_bound': {
                'w_B': _fmt(self.w_B),
                'w_prime_SB': _fmt(self.w_prime_SB),
                'gadget_error_total': _fmt(self.gadget_error_total),
                'gadget_errors': list(self.gadget_errors),
            },
            'H': {
                'weight': _fmt(self.w_H),
                'component_sizes': list(self.component_sizes),
                'small_components': [list(c) for c in self.small_components],
                'switches': list(self.switches),
                'switch_gain': format_weight(self.switch_gain),
            },
            'reducer': dict(self.reducer),
            'coloring': dict(self.coloring),
            'partition': {
                'phase_weights': {k: format_weight(v) for k, v in sorted(self.phase_weights.items())},
                'chosen_phase': self.chosen_phase,
                'w_Eprime': _fmt(self.w_Eprime),
                'w_core': _fmt(self.w_core),
            },
            'extraction': {
                'w_removed_total': _fmt(self.w_removed_total),
                'class_weights': {k: format_weight(v) for k, v in sorted(self.class_weights.items())},
                'chosen_class_weight': _fmt(self.chosen_class_weight),
                'patch_pairs': [list(p) for p in self.patch_pairs],
            },
            'opt': _fmt(self.opt),
            'ratio': _fmt(self.ratio),
            'safety_net_events': list(self.safety_net_events),
            'checks': self.checks(),
            'claims': self.claims(),
            'passed': self.passed,
        }


__all__ = [
    'RATIO',
    'MODE_EXACT',
    'MODE_HAMILTONIAN',
    'MODE_PIPELINE',
    'Certificate',
]
