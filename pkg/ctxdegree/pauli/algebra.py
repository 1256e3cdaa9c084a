import itertools
from typing import Iterator, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..exceptions import DimensionError, LabelParseError

# (x, z) bits of each single-qubit factor
PAULI_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
BITS_PAULI = {bits: char for char, bits in PAULI_BITS.items()}
PHASE_PREFIX = {0: "", 1: "i", 2: "-", 3: "-i"}

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_I = np.eye(2, dtype=complex)


class PauliOperator(BaseModel):
    """N-qubit Pauli word i^phase_exp · X^x · Z^z in binary symplectic form.

    Bit q of ``x_bits``/``z_bits`` is the factor acting on qubit q, which is
    character q of the label.
    """

    model_config = ConfigDict(frozen=True)

    n_qubits: int = Field(..., ge=1)
    x_bits: int = Field(0, ge=0)
    z_bits: int = Field(0, ge=0)
    phase_exp: int = 0

    @field_validator("phase_exp")
    @classmethod
    def _reduce_phase(cls, v: int) -> int:
        return v % 4

    @model_validator(mode="after")
    def _check_width(self) -> "PauliOperator":
        limit = 1 << self.n_qubits
        if self.x_bits >= limit or self.z_bits >= limit:
            raise ValueError(f"bit-vectors wider than {self.n_qubits} qubits")
        return self

    @classmethod
    def hermitian(cls, n_qubits: int, x_bits: int, z_bits: int) -> "PauliOperator":
        """The Hermitian operator with the given symplectic vector (squares to +1)"""
        return cls(
            n_qubits=n_qubits,
            x_bits=x_bits,
            z_bits=z_bits,
            phase_exp=(x_bits & z_bits).bit_count(),
        )

    @classmethod
    def identity(cls, n_qubits: int) -> "PauliOperator":
        return cls(n_qubits=n_qubits)

    @property
    def key(self) -> Tuple[int, int]:
        """Symplectic vector, ignoring phase"""
        return (self.x_bits, self.z_bits)

    @property
    def is_identity(self) -> bool:
        return self.x_bits == 0 and self.z_bits == 0

    @property
    def weight(self) -> int:
        return (self.x_bits | self.z_bits).bit_count()

    @property
    def sign(self) -> Optional[int]:
        """+1 or -1 relative to the Hermitian form; None for ±i multiples"""
        relative = (self.phase_exp - (self.x_bits & self.z_bits).bit_count()) % 4
        return {0: 1, 2: -1}.get(relative)

    @property
    def label(self) -> str:
        relative = (self.phase_exp - (self.x_bits & self.z_bits).bit_count()) % 4
        word = "".join(
            BITS_PAULI[((self.x_bits >> q) & 1, (self.z_bits >> q) & 1)]
            for q in range(self.n_qubits)
        )
        return PHASE_PREFIX[relative] + word

    def to_matrix(self) -> np.ndarray:
        """Dense 2^N x 2^N matrix; qubit 0 is the leftmost tensor factor"""
        matrix = np.array([[1.0 + 0j]])
        for q in range(self.n_qubits):
            factor = _I
            if (self.x_bits >> q) & 1:
                factor = factor @ _X
            if (self.z_bits >> q) & 1:
                factor = factor @ _Z
            matrix = np.kron(matrix, factor)
        return (1j**self.phase_exp) * matrix

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        return multiply(self, other)

    def __str__(self) -> str:
        return self.label


def parse_label(label: str) -> PauliOperator:
    """Parse a tensor-product label such as "XYI" into a Hermitian operator"""
    if not label:
        raise LabelParseError(label, 0)
    x_bits = z_bits = 0
    for position, char in enumerate(label):
        bits = PAULI_BITS.get(char)
        if bits is None:
            raise LabelParseError(label, position)
        x_bits |= bits[0] << position
        z_bits |= bits[1] << position
    return PauliOperator.hermitian(len(label), x_bits, z_bits)


def _check_same_width(*ops: PauliOperator) -> None:
    widths = {op.n_qubits for op in ops}
    if len(widths) != 1:
        raise DimensionError(f"Pauli operators act on different qubit counts: {sorted(widths)}")


def product_phase(x1: int, z1: int, x2: int, z2: int) -> int:
    """Extra power of i from moving Z^z1 past X^x2"""
    return 2 * (z1 & x2).bit_count()


def symplectic_product(x1: int, z1: int, x2: int, z2: int) -> int:
    return ((x1 & z2).bit_count() + (z1 & x2).bit_count()) & 1


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    _check_same_width(a, b)
    return PauliOperator(
        n_qubits=a.n_qubits,
        x_bits=a.x_bits ^ b.x_bits,
        z_bits=a.z_bits ^ b.z_bits,
        phase_exp=a.phase_exp + b.phase_exp + product_phase(a.x_bits, a.z_bits, b.x_bits, b.z_bits),
    )


def commutes(a: PauliOperator, b: PauliOperator) -> bool:
    _check_same_width(a, b)
    return symplectic_product(a.x_bits, a.z_bits, b.x_bits, b.z_bits) == 0


def context_sign(a: PauliOperator, b: PauliOperator, c: PauliOperator) -> Optional[int]:
    """+1 or -1 when (a, b, c) is a context, None otherwise"""
    _check_same_width(a, b, c)
    if a.is_identity or b.is_identity or c.is_identity:
        raise ValueError("context operators must be non-trivial")
    if not (commutes(a, b) and commutes(b, c) and commutes(a, c)):
        return None
    product = multiply(multiply(a, b), c)
    if not product.is_identity:
        return None
    return {0: 1, 2: -1}.get(product.phase_exp)


def all_operators(n_qubits: int) -> Iterator[PauliOperator]:
    """All 4^N - 1 non-trivial Hermitian operators in label order (I < X < Y < Z)"""
    for chars in itertools.product("IXYZ", repeat=n_qubits):
        if any(char != "I" for char in chars):
            yield parse_label("".join(chars))
