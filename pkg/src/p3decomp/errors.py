"""Exception hierarchy shared by every module of the package."""


class P3Error(Exception):
    """Base class for all errors raised by p3decomp."""


class DigraphError(P3Error, ValueError):
    """Invalid digraph construction input."""

    def __init__(self, message: str, arc_index: int | None = None):
        super().__init__(message)
        self.arc_index = arc_index


class LoopArc(DigraphError):
    pass


class ParallelArc(DigraphError):
    pass


class VertexOutOfRange(DigraphError):
    pass


class InvalidPartition(P3Error, ValueError):
    pass


class InfeasibleParams(P3Error, ValueError):
    pass


class PreconditionViolated(P3Error, ValueError):
    pass


class IsolatedVertex(PreconditionViolated):
    pass


class NotBipartiteAsGiven(PreconditionViolated):
    pass


class NotTournament(PreconditionViolated):
    pass


class OddSize(PreconditionViolated):
    pass


class HasPerfectMatching(PreconditionViolated):
    pass


class NoViolatorExists(PreconditionViolated):
    pass


class NotEulerian(PreconditionViolated):
    pass


class TooSmall(PreconditionViolated):
    pass


class HamiltonVerificationError(P3Error):
    """The arc sequence of an Euler tour is not a Hamilton cycle of L(D).

    ``policy_mismatch`` is set when the sequence is valid once closed walks
    u->v->u are accepted, i.e. it only fails under the strict policy.
    """

    def __init__(self, message: str, policy_mismatch: bool = False):
        super().__init__(message)
        self.policy_mismatch = policy_mismatch


class SearchExhausted(P3Error):
    """Base for budget and search exhaustion (CLI exit code 3)."""


class BudgetExceeded(SearchExhausted):
    pass


class WitnessSearchExhausted(SearchExhausted):
    pass


class CertificateSearchExhausted(SearchExhausted):
    pass


class ParseError(P3Error, ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
