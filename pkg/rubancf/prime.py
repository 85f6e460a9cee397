from typing import Optional

from sympy import isprime

from rubancf.errors import NotPrimeError


class Prime(int):
    """A prime number p.

    This is an int, so it can be used anywhere an int is expected, but creating
    one checks that the value is actually prime. Primality is decided by sympy's
    :func:`isprime`, which is deterministic below 2**64.

    .. code-block:: python

      p = Prime(5)
      p * p    # 25, an int
    """
    def __new__(cls, value: int, max_prime: Optional[int] = None) -> 'Prime':
        """Create a Prime.

        Args:
            value: The value, must be a prime.
            max_prime: Largest value to accept, defaults to 2**64.

        Raises:
            NotPrimeError: If the value is not a prime or is too large.
        """
        if isinstance(value, Prime) and max_prime is None:
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise NotPrimeError('Expected an integer prime, got {!r}'.format(value))
        if max_prime is None:
            max_prime = 2**64
        if value > max_prime:
            raise NotPrimeError(
                    'Prime {} is larger than the supported maximum {}'.format(
                        value, max_prime))
        if not isprime(value):
            raise NotPrimeError('{} is not a prime'.format(value))
        return super().__new__(cls, value)
