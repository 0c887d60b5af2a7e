"""
Lehmer (Park-Miller) generator as used by NETGEN-style instance
generators: state' = 16807 * state mod (2^31 - 1).
"""

import math
from dataclasses import dataclass

MODULUS = 2 ** 31 - 1
MULTIPLIER = 16807


@dataclass(frozen=True)
class RngState:
    state: int

    def __post_init__(self):
        if not 1 <= self.state <= MODULUS - 1:
            raise ValueError(f"Lehmer state must lie in [1, {MODULUS - 1}], got {self.state}")

    @classmethod
    def from_seed(cls, seed: int) -> 'RngState':
        """Seeds are reduced modulo 2^31 - 1; a zero residue becomes 1."""
        return cls(seed % MODULUS or 1)


def lehmer_next(state: RngState) -> tuple[RngState, int]:
    value = MULTIPLIER * state.state % MODULUS
    return RngState(value), value


class LehmerStream:
    """
    Sequential draws from one seeded Lehmer state.

    Every derived draw consumes raw values in a fixed way: ``cost`` and
    ``below`` one value, ``uniform`` one value, ``normal`` two (Box-Muller).
    """

    def __init__(self, seed: int):
        self.state = RngState.from_seed(seed)

    def raw(self) -> int:
        self.state, value = lehmer_next(self.state)
        return value

    def cost(self) -> int:
        return 1 + self.raw() % 100

    def below(self, bound: int) -> int:
        return self.raw() % bound

    def uniform(self) -> float:
        return self.raw() / MODULUS

    def normal(self) -> float:
        first, second = self.uniform(), self.uniform()
        return math.sqrt(-2.0 * math.log(first)) * math.cos(2.0 * math.pi * second)

    def shuffle(self, items: list) -> None:
        for position in range(len(items) - 1, 0, -1):
            other = self.below(position + 1)
            items[position], items[other] = items[other], items[position]
