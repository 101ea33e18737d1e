import random
from typing import Dict, List, Optional, Sequence, Tuple

from sabre_mapper.validate.exceptions import MappingError

VACANT = -1


class Mapping:
    """
    Injection of n logical qubits into N physical qubits (pi) with its
    inverse. Physical slots outside the image hold VACANT.

    Treated as a value: apply_swap returns a new Mapping.
    """

    __slots__ = ("_forward", "_inverse")

    def __init__(self, forward: Sequence[int], num_physical: int):
        n = len(forward)
        if n > num_physical:
            raise MappingError(f"Cannot place {n} logical qubits on {num_physical} physical qubits.")
        inverse = [VACANT] * num_physical
        for q, p in enumerate(forward):
            if not 0 <= p < num_physical:
                raise MappingError(f"Logical qubit {q} mapped to out-of-range physical qubit {p}.")
            if inverse[p] != VACANT:
                raise MappingError(f"Physical qubit {p} assigned to both {inverse[p]} and {q}.")
            inverse[p] = q
        self._forward: Tuple[int, ...] = tuple(forward)
        self._inverse: Tuple[int, ...] = tuple(inverse)

    # --- Constructors ---
    @classmethod
    def identity(cls, n: int, num_physical: Optional[int] = None) -> "Mapping":
        return cls(range(n), n if num_physical is None else num_physical)

    @classmethod
    def from_dict(cls, mapping: Dict[int, int], num_physical: int) -> "Mapping":
        n = len(mapping)
        if set(mapping) != set(range(n)):
            raise MappingError("Mapping keys must be the logical qubits 0..n-1.")
        return cls([mapping[q] for q in range(n)], num_physical)

    # --- Lookups ---
    @property
    def num_logical(self) -> int:
        return len(self._forward)

    @property
    def num_physical(self) -> int:
        return len(self._inverse)

    @property
    def forward(self) -> Tuple[int, ...]:
        return self._forward

    @property
    def inverse(self) -> Tuple[int, ...]:
        return self._inverse

    def physical_of(self, q: int) -> int:
        if not 0 <= q < self.num_logical:
            raise MappingError(f"Logical qubit {q} out of range.")
        return self._forward[q]

    def logical_of(self, p: int) -> Optional[int]:
        """Logical qubit on physical slot p, or None when vacant."""
        if not 0 <= p < self.num_physical:
            raise MappingError(f"Physical qubit {p} out of range.")
        q = self._inverse[p]
        return None if q == VACANT else q

    # --- Mutation by SWAP ---
    def apply_swap(self, edge: Tuple[int, int]) -> "Mapping":
        """Exchanges the contents of physical slots a and b (vacant slots move too)."""
        a, b = edge
        if a == b:
            raise MappingError(f"SWAP needs two distinct physical qubits, got ({a}, {b}).")
        if not (0 <= a < self.num_physical and 0 <= b < self.num_physical):
            raise MappingError(f"SWAP ({a}, {b}) out of range.")
        forward = list(self._forward)
        qa, qb = self._inverse[a], self._inverse[b]
        if qa != VACANT:
            forward[qa] = b
        if qb != VACANT:
            forward[qb] = a
        return Mapping(forward, self.num_physical)

    # --- Padding for routing ---
    def padded(self) -> "Mapping":
        """
        Full bijection over N wires: vacant slots receive placeholder logical
        ids n..N-1 in ascending physical order.
        """
        forward = list(self._forward)
        forward.extend(p for p in range(self.num_physical) if self._inverse[p] == VACANT)
        return Mapping(forward, self.num_physical)

    def restricted(self, n: int) -> "Mapping":
        """Drops logical ids >= n (placeholders), leaving their slots vacant."""
        return Mapping(self._forward[:n], self.num_physical)

    # --- Serialization ---
    def to_dict(self) -> Dict[int, int]:
        return {q: p for q, p in enumerate(self._forward)}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mapping)
            and self._forward == other._forward
            and self.num_physical == other.num_physical
        )

    def __hash__(self) -> int:
        return hash((self._forward, self.num_physical))

    def __repr__(self) -> str:
        pairs = ", ".join(f"q{q}->Q{p}" for q, p in enumerate(self._forward))
        return f"Mapping({{{pairs}}}, N={self.num_physical})"


def random_mapping(n: int, num_physical: int, seed) -> Mapping:
    """Uniformly random injection, reproducible from `seed` (int or random.Random)."""
    if n > num_physical:
        raise MappingError(f"Cannot place {n} logical qubits on {num_physical} physical qubits.")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    physical: List[int] = rng.sample(range(num_physical), n)
    return Mapping(physical, num_physical)


def apply_swap(mapping: Mapping, edge: Tuple[int, int]) -> Mapping:
    return mapping.apply_swap(edge)


def physical_of(mapping: Mapping, q: int) -> int:
    return mapping.physical_of(q)


def logical_of(mapping: Mapping, p: int) -> Optional[int]:
    return mapping.logical_of(p)
