import itertools

import numpy as np
import pytest

from ctxdegree.exceptions import DimensionError, LabelParseError
from ctxdegree.pauli import all_operators, commutes, context_sign, multiply, parse_label

PAULI_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def dense(label: str) -> np.ndarray:
    """Tensor product of 2x2 Pauli matrices, first character leftmost"""
    matrix = np.array([[1.0 + 0j]])
    for char in label:
        matrix = np.kron(matrix, PAULI_MATRICES[char])
    return matrix


def test_parse_identity():
    op = parse_label("II")
    assert op.is_identity
    assert (op.x_bits, op.z_bits, op.phase_exp) == (0, 0, 0)


def test_parse_xx():
    op = parse_label("XX")
    assert op.x_bits == 0b11
    assert op.z_bits == 0
    assert op.phase_exp == 0


def test_y_squares_to_identity():
    y = parse_label("Y")
    product = multiply(y, y)
    assert product.is_identity
    assert product.phase_exp == 0


@pytest.mark.parametrize("label", ["X", "Y", "Z", "XY", "YZ", "ZZY", "IYX"])
def test_parsed_operator_matches_dense_matrix(label):
    """Parsed operators are the Hermitian tensor products"""
    assert np.allclose(parse_label(label).to_matrix(), dense(label))


def test_multiply_agrees_with_matrix_product():
    labels = ["".join(chars) for chars in itertools.product("IXYZ", repeat=2)]
    for a, b in itertools.product(labels, repeat=2):
        product = multiply(parse_label(a), parse_label(b))
        assert np.allclose(product.to_matrix(), dense(a) @ dense(b)), (a, b)


def test_multiply_is_associative():
    ops = [parse_label(label) for label in ("XYZ", "ZZX", "YIY")]
    left = multiply(multiply(ops[0], ops[1]), ops[2])
    right = multiply(ops[0], multiply(ops[1], ops[2]))
    assert left == right


def test_commutation():
    assert not commutes(parse_label("X"), parse_label("Z"))
    assert commutes(parse_label("XX"), parse_label("ZZ"))
    assert commutes(parse_label("XI"), parse_label("IZ"))


def test_context_signs():
    assert context_sign(parse_label("XX"), parse_label("YY"), parse_label("ZZ")) == -1
    assert context_sign(parse_label("XY"), parse_label("YX"), parse_label("ZZ")) == 1
    # Pairwise anticommuting single-qubit operators are not a context
    assert context_sign(parse_label("X"), parse_label("Y"), parse_label("Z")) is None
    # Commuting but the product is not ±1
    assert context_sign(parse_label("XII"), parse_label("IXI"), parse_label("IIX")) is None


def test_context_sign_rejects_identity():
    with pytest.raises(ValueError):
        context_sign(parse_label("II"), parse_label("XX"), parse_label("XX"))


def test_parse_error_names_position():
    with pytest.raises(LabelParseError) as excinfo:
        parse_label("XQZ")
    assert excinfo.value.position == 1
    assert isinstance(excinfo.value, ValueError)


def test_parse_empty_label():
    with pytest.raises(LabelParseError):
        parse_label("")


def test_width_mismatch():
    with pytest.raises(DimensionError):
        multiply(parse_label("X"), parse_label("XX"))


def test_label_round_trip():
    for label in ("XYZI", "ZIIY", "YYYY"):
        assert parse_label(label).label == label


def test_sign_of_negated_operator():
    # XX * YY = -ZZ
    product = multiply(parse_label("XX"), parse_label("YY"))
    assert product.key == parse_label("ZZ").key
    assert product.sign == -1
    assert product.label == "-ZZ"


def test_all_operators_count():
    assert len(list(all_operators(1))) == 3
    assert len(list(all_operators(2))) == 15


def labels(n_qubits):
    return ["".join(chars) for chars in itertools.product("IXYZ", repeat=n_qubits)]


def sampled_labels(n_qubits, count=40, seed=7):
    rng = np.random.default_rng(seed + n_qubits)
    return ["".join(rng.choice(list("IXYZ"), size=n_qubits)) for _ in range(count)]


@pytest.mark.parametrize(
    "label", labels(1) + labels(2) + sampled_labels(3) + sampled_labels(4)
)
def test_operators_are_hermitian(label):
    matrix = parse_label(label).to_matrix()
    assert np.allclose(matrix, matrix.conj().T)
    assert np.allclose(matrix, dense(label))


def test_commutes_agrees_with_matrix_commutator():
    for a, b in itertools.product(labels(2), repeat=2):
        commutator = dense(a) @ dense(b) - dense(b) @ dense(a)
        assert commutes(parse_label(a), parse_label(b)) == np.allclose(commutator, 0), (a, b)


def test_context_sign_ignores_operator_order():
    ops = list(all_operators(2))
    for triple in itertools.combinations(ops, 3):
        signs = {context_sign(*order) for order in itertools.permutations(triple)}
        assert len(signs) == 1, [op.label for op in triple]
        (sign,) = signs
        if sign is not None:
            product = triple[0].to_matrix() @ triple[1].to_matrix() @ triple[2].to_matrix()
            assert np.allclose(product, sign * np.eye(4))
