"""Exception hierarchy.

Every error raised on purpose by the library derives from ``ProofweaveError``.
Input problems (malformed graphs, structures, derivations) derive from
``InputError`` so the CLI can map them to exit code 2; violated hypotheses of a
theorem derive from ``PropertyFailure`` (exit code 1).
"""

from __future__ import annotations

from typing import Any


class ProofweaveError(Exception):
    """Base class; ``witness`` carries an optional certificate (cycle, pair, ...)."""

    def __init__(self, message: str = "", witness: Any = None) -> None:
        super().__init__(message or type(self).__name__)
        self.witness = witness


class InputError(ProofweaveError):
    pass


class PropertyFailure(ProofweaveError):
    pass


# graph-core
class DuplicateId(InputError):
    pass


class LoopEdge(InputError):
    pass


class MissingColor(InputError):
    pass


class UnknownVertex(InputError):
    pass


class TooManyEnds(InputError):
    pass


class NotAlternating(InputError):
    pass


class EndpointMismatch(InputError):
    pass


class OccurrenceOrder(InputError):
    pass


# yeo-engine
class PreconditionViolated(PropertyFailure):
    """A named hypothesis of a construction does not hold."""

    def __init__(self, clause: str, message: str = "", witness: Any = None) -> None:
        super().__init__(message or clause, witness)
        self.clause = clause


class CuspFreeCycleExists(PropertyFailure):
    pass


class DominationFails(PropertyFailure):
    pass


class NoPairs(PropertyFailure):
    pass


class ExitHypothesisFails(PropertyFailure):
    def __init__(self, which: str, message: str = "", witness: Any = None) -> None:
        super().__init__(message or which, witness)
        self.which = which


class POverlapsPout(PropertyFailure):
    pass


# corollaries
class PartialEdge(InputError):
    pass


class EmptyGraph(InputError):
    pass


class AlternatingCycleExists(PropertyFailure):
    pass


class NotPerfectMatching(InputError):
    pass


class MatchingNotUnique(PropertyFailure):
    pass


class ConformalCycleExists(PropertyFailure):
    pass


class SEmpty(InputError):
    pass


class CycleWithoutTurningInS(PropertyFailure):
    pass


class HCycleExists(PropertyFailure):
    pass


class NotCompleteMultipartite(PropertyFailure):
    pass


# proof structures and derivations
class ParseError(InputError):
    pass


class ArityViolation(InputError):
    pass


class TypeMismatch(InputError):
    pass


class DirectedCycle(InputError):
    pass


class LocationClash(InputError):
    pass


class NoSuchHypothesis(InputError):
    pass


class RuleMismatch(InputError):
    """A derivation rule does not match its schema."""


class NotCorrect(PropertyFailure):
    pass


class Empty(InputError):
    pass


class NotConnectedClosed(InputError):
    pass


class NoAdditiveResolution(InputError):
    pass


class InvalidLinking(InputError):
    pass


class SliceConstraintViolated(InputError):
    pass


class NotSplitting(PropertyFailure):
    pass


class LeafVertex(InputError):
    pass


# oracle
class TooLarge(InputError):
    pass


class InfeasibleBounds(InputError):
    pass
