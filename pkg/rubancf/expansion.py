from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, TYPE_CHECKING

from rubancf.convergents import Convergents, eval_finite, eval_with_tail
from rubancf.padic import HenselRoot, SpElement


if TYPE_CHECKING:
    from rubancf.ruban import SurdState


class TailKind(Enum):
    """How a (prefix of a) continued fraction expansion continues."""
    TERMINATED = 1
    PERIODIC_P_MINUS = 2
    PERIODIC_CYCLE = 3
    OPEN = 4


class Tail:
    """Describes what follows the listed partial quotients of an expansion.

    TERMINATED means that there is nothing after them. PERIODIC_P_MINUS means that
    all further partial quotients are p - 1/p, which happens exactly when the next
    complete quotient is -1/p. PERIODIC_CYCLE means that the quotients from index
    `preperiod` on repeat with period `period`. OPEN means we stopped looking.

    Attributes:
        kind: The kind of tail.
        preperiod: For PERIODIC_CYCLE, the index at which the cycle starts.
        period: For PERIODIC_CYCLE, the length of the cycle.
    """
    def __init__(
            self, kind: TailKind, preperiod: Optional[int] = None,
            period: Optional[int] = None) -> None:
        """Create a Tail. Cycles need a preperiod and a period."""
        if (kind == TailKind.PERIODIC_CYCLE) != (period is not None):
            raise ValueError('A period is required for, and only for, cycles')
        if period is not None and (period < 1 or preperiod is None or preperiod < 0):
            raise ValueError('Invalid cycle {}, {}'.format(preperiod, period))
        self.kind = kind
        self.preperiod = preperiod
        self.period = period

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tail):
            return NotImplemented
        return ((self.kind, self.preperiod, self.period) ==
                (other.kind, other.preperiod, other.period))

    def __repr__(self) -> str:
        if self.kind == TailKind.PERIODIC_CYCLE:
            return 'Tail({}, {}, {})'.format(
                    self.kind.name, self.preperiod, self.period)
        return 'Tail({})'.format(self.kind.name)


def p_minus_quotient(p: int) -> SpElement:
    """Return p - 1/p, the partial quotient of the fixed point -1/p."""
    return SpElement(p, (p - 1, p - 1), -1)


class CFExpansion:
    """A (prefix of a) Ruban continued fraction expansion.

    Partial quotient 0 may be any element of S_p, the others are in S'_p.

    Attributes:
        p: The prime.
        quotients: The computed partial quotients.
        tail: What follows them.
        source: The expanded rational number, if it was one.
        complete_quotients: For rational sources, the complete quotients
                alpha_0, alpha_1, ... encountered.
        root: For surd sources, the square root that was expanded, at the highest
                precision that was used.
        states: For surd sources, the states (R_n, Q_n) for n = 0 to
                len(quotients), one more than there are quotients.
    """
    def __init__(
            self, p: int, quotients: Sequence[SpElement], tail: Tail,
            source: Optional[Fraction] = None,
            complete_quotients: Optional[Sequence[Fraction]] = None,
            root: Optional[HenselRoot] = None,
            states: Optional[Sequence['SurdState']] = None) -> None:
        """Create a CFExpansion."""
        self.p = p
        self.quotients = list(quotients)
        self.tail = tail
        self.source = source
        self.complete_quotients = list(complete_quotients or [])
        self.root = root
        self.states = list(states or [])
        self.__convergents = None   # type: Optional[Convergents]

    @property
    def convergents(self) -> Convergents:
        """The convergents of the computed partial quotients."""
        if self.__convergents is None:
            self.__convergents = Convergents(self.quotients)
        return self.__convergents

    def prefix(self, length: int) -> List[SpElement]:
        """Return the first `length` partial quotients.

        Periodic tails are unrolled as needed.

        Raises:
            ValueError: If the expansion does not have that many quotients.
        """
        result = self.quotients[:length]
        if len(result) == length:
            return result

        if self.tail.kind == TailKind.PERIODIC_P_MINUS:
            result.extend([p_minus_quotient(self.p)] * (length - len(result)))
        elif self.tail.kind == TailKind.PERIODIC_CYCLE:
            assert self.tail.preperiod is not None and self.tail.period is not None
            start, period = self.tail.preperiod, self.tail.period
            while len(result) < length:
                offset = (len(result) - start) % period
                result.append(self.quotients[start + offset])
        else:
            raise ValueError('Expansion has only {} quotients, {} requested'.format(
                len(self.quotients), length))
        return result

    def value(self) -> Fraction:
        """Reconstruct the value of a finite or p-minus periodic expansion.

        Raises:
            ValueError: For other kinds of tail.
        """
        if self.tail.kind == TailKind.TERMINATED:
            return eval_finite(self.quotients)
        if self.tail.kind == TailKind.PERIODIC_P_MINUS:
            return eval_with_tail(self.quotients, Fraction(-1, self.p))
        raise ValueError('Only rational expansions have an exact value')

    def __repr__(self) -> str:
        return 'CFExpansion(p={}, [{}], {})'.format(
                self.p, ', '.join(map(str, self.quotients)), self.tail)
