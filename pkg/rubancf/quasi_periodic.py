"""Quasi-periodic continued fractions.

A quasi-periodic continued fraction has blocks of k_i partial quotients that are
repeated lambda_i times, starting at positions n_i, with
n_{i+1} >= n_i + lambda_i k_i. The blocks are described by a generator, either in
closed form (:class:`GeometricBlocks`) or as explicit tables
(:class:`TabulatedBlocks`).
"""
from abc import ABC, abstractmethod
from fractions import Fraction
import logging
from typing import Dict, Generator, List, Optional, Sequence, Tuple

from rubancf.convergents import Quotient
from rubancf.errors import InvalidQuotient, SpecInconsistent
from rubancf.expansion import p_minus_quotient
from rubancf.padic import SpElement
from rubancf.prime import Prime


logger = logging.getLogger(__name__)


class ClosedForm:
    """The sequence c * g**i for i = 0, 1, ...

    Attributes:
        c: The rational factor, positive.
        g: The integer base, at least 2.
    """
    def __init__(self, c: Fraction, g: int) -> None:
        """Create a ClosedForm.

        Raises:
            ValueError: If c is not positive or g is less than 2.
        """
        c = Fraction(c)
        if c <= 0 or g < 2:
            raise ValueError('Unsupported closed form {} * {}**i'.format(c, g))
        self.c = c
        self.g = g

    def __call__(self, i: int) -> Fraction:
        return self.c * self.g**i

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClosedForm):
            return NotImplemented
        return (self.c, self.g) == (other.c, other.g)

    def __repr__(self) -> str:
        return '{} * {}**i'.format(self.c, self.g)


class Block:
    """A block of partial quotients repeated a number of times.

    Attributes:
        index: The index i of the block.
        start: Its first position n_i.
        repeats: The number of repetitions lambda_i.
        contents: The k_i partial quotients that are repeated.
    """
    def __init__(
            self, index: int, start: int, repeats: int,
            contents: Sequence[SpElement]) -> None:
        self.index = index
        self.start = start
        self.repeats = repeats
        self.contents = tuple(contents)

    @property
    def k(self) -> int:
        return len(self.contents)

    @property
    def end(self) -> int:
        """The position just after the last repetition."""
        return self.start + self.repeats * self.k

    def __repr__(self) -> str:
        return 'Block({}, n={}, lambda={}, [{}])'.format(
                self.index, self.start, self.repeats,
                ', '.join(map(str, self.contents)))


class BlockGenerator(ABC):
    """Produces the blocks of a quasi-periodic continued fraction."""

    @property
    @abstractmethod
    def is_symbolic(self) -> bool:
        """Whether the generator describes infinitely many blocks in closed form."""
        pass

    @abstractmethod
    def block(self, i: int) -> Block:
        """Return block i.

        Raises:
            IndexError: If there is no such block.
            SpecInconsistent: If the block does not make sense.
        """
        pass

    @abstractmethod
    def count(self) -> Optional[int]:
        """Return the number of blocks, or None if infinite."""
        pass

    @abstractmethod
    def contents_set(self) -> List[Tuple[SpElement, ...]]:
        """Return all the different block contents."""
        pass

    def blocks(self) -> Generator[Block, None, None]:
        """Yield the blocks in order."""
        i = 0
        count = self.count()
        while count is None or i < count:
            yield self.block(i)
            i += 1


def _as_int(value: Fraction, name: str) -> int:
    if value.denominator != 1 or value < 1:
        raise SpecInconsistent('{} = {} is not a positive integer'.format(
            name, value))
    return int(value)


class GeometricBlocks(BlockGenerator):
    """Blocks with n_i and lambda_i in closed form and constant k.

    Block i has contents contents[i % len(contents)].

    Attributes:
        n: The start positions n_i.
        lam: The repeat counts lambda_i.
        contents: The block contents to cycle through, each of length k.
    """
    def __init__(
            self, n: ClosedForm, lam: ClosedForm,
            contents: Sequence[Sequence[SpElement]]) -> None:
        """Create GeometricBlocks.

        Raises:
            InvalidQuotient: If the contents are not partial quotients.
            ValueError: If there are no contents or they differ in length.
        """
        if not contents or len({len(block) for block in contents}) != 1:
            raise ValueError('Need one or more blocks of the same nonzero length')
        if len(contents[0]) == 0:
            raise ValueError('Blocks must not be empty')
        for block in contents:
            for quotient in block:
                if not quotient.is_partial_quotient:
                    raise InvalidQuotient('{} is not a partial quotient'.format(
                        quotient))
        self.n = n
        self.lam = lam
        self.contents = [tuple(block) for block in contents]

    @property
    def is_symbolic(self) -> bool:
        return True

    @property
    def k(self) -> int:
        return len(self.contents[0])

    def block(self, i: int) -> Block:
        if i < 0:
            raise IndexError('No block {}'.format(i))
        return Block(i, _as_int(self.n(i), 'n_{}'.format(i)),
                     _as_int(self.lam(i), 'lambda_{}'.format(i)),
                     self.contents[i % len(self.contents)])

    def count(self) -> Optional[int]:
        return None

    def contents_set(self) -> List[Tuple[SpElement, ...]]:
        return list(self.contents)


class TabulatedBlocks(BlockGenerator):
    """A finite table of blocks.

    Attributes:
        starts: The start positions n_i.
        repeats: The repeat counts lambda_i.
        contents: The contents of each block, of length k_i.
    """
    def __init__(
            self, starts: Sequence[int], repeats: Sequence[int],
            contents: Sequence[Sequence[SpElement]]) -> None:
        """Create TabulatedBlocks.

        Raises:
            InvalidQuotient: If the contents are not partial quotients.
            ValueError: If the tables differ in length or contain empty blocks.
        """
        if not len(starts) == len(repeats) == len(contents):
            raise ValueError('Tables have different lengths')
        for block in contents:
            if len(block) == 0:
                raise ValueError('Blocks must not be empty')
            for quotient in block:
                if not quotient.is_partial_quotient:
                    raise InvalidQuotient('{} is not a partial quotient'.format(
                        quotient))
        self.starts = list(starts)
        self.repeats = list(repeats)
        self.contents = [tuple(block) for block in contents]

    @property
    def is_symbolic(self) -> bool:
        return False

    def block(self, i: int) -> Block:
        if not 0 <= i < len(self.starts):
            raise IndexError('No block {}'.format(i))
        return Block(i, _as_int(Fraction(self.starts[i]), 'n_{}'.format(i)),
                     _as_int(Fraction(self.repeats[i]), 'lambda_{}'.format(i)),
                     self.contents[i])

    def count(self) -> Optional[int]:
        return len(self.starts)

    def contents_set(self) -> List[Tuple[SpElement, ...]]:
        result = []     # type: List[Tuple[SpElement, ...]]
        for block in self.contents:
            if block not in result:
                result.append(block)
        return result

    @property
    def depth(self) -> int:
        """The number of partial quotients the table describes."""
        if not self.starts:
            return 0
        return self.block(len(self.starts) - 1).end


def inverse_power(p: int, order: int) -> SpElement:
    """Return p**-order as a partial quotient."""
    return SpElement(p, (1,) + (0,) * order, -order)


class QuasiPeriodicSpec:
    """A quasi-periodic continued fraction.

    Positions before n_0 come from the prefix, positions in a block from the block,
    and any other positions (prefix too short, or gaps between blocks) hold the
    filler quotient.

    Attributes:
        p: The prime.
        prefix: Explicitly given partial quotients a_0, a_1, ...
        generator: The block generator.
        filler: The quotient used where nothing else applies, 1/p by default.
    """
    def __init__(
            self, p: int, prefix: Sequence[Quotient], generator: BlockGenerator,
            filler: Optional[SpElement] = None) -> None:
        """Create a QuasiPeriodicSpec.

        Raises:
            NotPrimeError: If p is not a prime.
            InvalidQuotient: If the prefix or filler contain invalid quotients.
            ValueError: If the prefix is empty.
        """
        self.p = Prime(p)
        if not prefix:
            raise ValueError('Need at least a_0')
        self.prefix = []     # type: List[SpElement]
        for i, quotient in enumerate(prefix):
            if not isinstance(quotient, SpElement):
                quotient = SpElement.from_value(Fraction(quotient), self.p)
            if i > 0 and not quotient.is_partial_quotient:
                raise InvalidQuotient('a_{} = {} is not a partial quotient'.format(
                    i, quotient))
            self.prefix.append(quotient)

        if filler is None:
            filler = inverse_power(self.p, 1)
        if not filler.is_partial_quotient:
            raise InvalidQuotient('Filler {} is not a partial quotient'.format(filler))
        self.generator = generator
        self.filler = filler

    def blocks_until(self, length: int) -> List[Block]:
        """Return the blocks that start before position `length`."""
        result = []     # type: List[Block]
        for block in self.generator.blocks():
            if block.start >= length:
                break
            result.append(block)
        return result

    def quotient_values(self) -> List[SpElement]:
        """Return every distinct quotient that can occur from position 1 on."""
        values = list(self.prefix[1:])
        values.append(self.filler)
        for block in self.generator.contents_set():
            values.extend(block)
        return values

    def __repr__(self) -> str:
        return 'QuasiPeriodicSpec(p={}, prefix=[{}], {})'.format(
                self.p, ', '.join(map(str, self.prefix)),
                type(self.generator).__name__)


def materialize(spec: QuasiPeriodicSpec, N: int) -> List[SpElement]:
    """Compute the first N partial quotients of a quasi-periodic spec.

    Args:
        spec: The spec.
        N: The number of quotients, at least 1.

    Returns:
        The partial quotients a_0, ..., a_{N-1}.

    Raises:
        SpecInconsistent: If blocks overlap or are out of order, or a block
                contradicts an explicit prefix entry.
        ValueError: If a tabulated spec describes fewer than N quotients.
    """
    if N < 1:
        raise ValueError('Need at least one quotient')
    result = list(spec.prefix[:N])
    previous = None     # type: Optional[Block]
    for block in spec.generator.blocks():
        if block.start >= N:
            break
        if previous is not None and block.start < previous.end:
            raise SpecInconsistent(
                    'Block {} starts at {}, before block {} ends at {}'.format(
                        block.index, block.start, previous.index, previous.end))
        while len(result) < block.start:
            result.append(spec.filler)
        for m in range(block.start, min(block.end, N)):
            quotient = block.contents[(m - block.start) % block.k]
            if m < len(result):
                if result[m] != quotient:
                    raise SpecInconsistent(
                            'a_{} = {} contradicts block {} which has {}'.format(
                                m, result[m], block.index, quotient))
            else:
                result.append(quotient)
        previous = block

    if len(result) < N:
        described = spec.generator.count()
        if described is not None:
            raise ValueError('Spec describes only {} quotients, {} requested'.format(
                len(result), N))
        while len(result) < N:
            result.append(spec.filler)

    check_repetition(spec, result)
    logger.debug('Materialised %s quotients of %s', N, spec)
    return result


def check_repetition(spec: QuasiPeriodicSpec, quotients: Sequence[SpElement]) -> None:
    """Check a_{m+k_i} = a_m for n_i <= m <= n_i + (lambda_i - 1) k_i - 1.

    Only positions within the given quotients are checked.

    Raises:
        SpecInconsistent: If the law is violated.
    """
    for block in spec.blocks_until(len(quotients)):
        last = min(block.end - block.k, len(quotients) - block.k)
        for m in range(block.start, last):
            if quotients[m + block.k] != quotients[m]:
                raise SpecInconsistent(
                        'a_{} != a_{} in block {}'.format(
                            m + block.k, m, block.index))


def example1(p: int) -> QuasiPeriodicSpec:
    """Return [0, (p - 1/p) x 2, (1/p) x 6, (p - 1/p) x 18, (1/p) x 54, ...].

    Here n_i = 3**i, lambda_i = 2 * 3**i and k_i = 1.
    """
    p = Prime(p)
    generator = GeometricBlocks(
            ClosedForm(Fraction(1), 3), ClosedForm(Fraction(2), 3),
            [[p_minus_quotient(p)], [inverse_power(p, 1)]])
    return QuasiPeriodicSpec(p, [SpElement.zero(p)], generator)


def example2(p: int) -> QuasiPeriodicSpec:
    """Return [0, (1/p, 1/p**2) x 8, (p - 1/p, p - 1/p) x 136, ...].

    Here n_i = 17**i, lambda_i = 8 * 17**i and k_i = 2.
    """
    p = Prime(p)
    generator = GeometricBlocks(
            ClosedForm(Fraction(1), 17), ClosedForm(Fraction(8), 17),
            [[inverse_power(p, 1), inverse_power(p, 2)],
             [p_minus_quotient(p), p_minus_quotient(p)]])
    return QuasiPeriodicSpec(p, [SpElement.zero(p)], generator)


def scan_period(quotients: Sequence[SpElement]) -> Optional[Tuple[int, int]]:
    """Look for a period in a finite sequence.

    This finds the smallest l, and for it the smallest k, with a_{n+l} = a_n for
    all n >= k in the sequence, where l is at most a quarter and k at most half of
    the length, so that the period repeats at least twice.

    Args:
        quotients: The sequence.

    Returns:
        (l, k), or None if there is no such period.
    """
    codes = dict()     # type: Dict[SpElement, int]
    sequence = [codes.setdefault(quotient, len(codes)) for quotient in quotients]
    length = len(sequence)
    for period in range(1, length // 4 + 1):
        start = length - period
        while start > 0 and sequence[start - 1] == sequence[start - 1 + period]:
            start -= 1
        if start <= length // 2:
            return period, start
    return None
