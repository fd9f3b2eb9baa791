"""
Exception hierarchy for the Max-TSP solver.
FILE: src/core/errors.py

Every stage raises a subclass of MaxTSPError. MaxTSPError derives from
ValueError so callers that only guard against bad values keep working.
"""

from typing import Any, Dict, Optional


class MaxTSPError(ValueError):
    """Base class for every solver error"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details or {}


class InstanceFormatError(MaxTSPError):
    """Instance text or matrix is malformed (parse errors, asymmetry, negative weights)"""


class StructureViolation(MaxTSPError):
    """A multigraph operation would create a loop or a third parallel edge"""


class DegreeViolation(MaxTSPError):
    """Applying an alternating multiset did not give the expected regular degree"""


class Infeasible(MaxTSPError):
    """No perfect matching / perfect b-matching exists"""


class InstanceTooSmall(MaxTSPError):
    """Instance is too small for the requested operation"""


class NotNormalized(MaxTSPError):
    """A bad square was handed over without the l1+l3 <= l2+l4 rotation"""


class DiagonalBoundViolated(MaxTSPError):
    """Diagonals of a bad square outweigh l1+l3; the cover was not maximum"""


class ContractViolated(MaxTSPError):
    """A gadget or a stage identity does not hold"""


class ExitCountViolation(MaxTSPError):
    """A gadget does not have exactly two externally matched copies"""


class NotFourRegular(MaxTSPError):
    """The assembled multigraph H is not 4-regular"""


class PreconditionViolation(MaxTSPError):
    """A reducer elimination was called on a subgraph that does not qualify"""


class InvalidInputColoring(MaxTSPError):
    """A coloring handed to a lifting step is not a valid 2-path-coloring"""


class MatchingDeficient(MaxTSPError):
    """Decycling matching could not saturate every monochromatic cycle"""


class BudgetExceeded(MaxTSPError):
    """The removal set weighs more than a fifth of the graph"""


class NotPathCollection(MaxTSPError):
    """A color class contains a vertex of degree > 2 or a cycle"""


class TooLarge(MaxTSPError):
    """Exact oracle was asked for an instance above its cap"""


__all__ = [
    'MaxTSPError',
    'InstanceFormatError',
    'StructureViolation',
    'DegreeViolation',
    'Infeasible',
    'InstanceTooSmall',
    'NotNormalized',
    'DiagonalBoundViolated',
    'ContractViolated',
    'ExitCountViolation',
    'NotFourRegular',
    'PreconditionViolation',
    'InvalidInputColoring',
    'MatchingDeficient',
    'BudgetExceeded',
    'NotPathCollection',
    'TooLarge',
]
