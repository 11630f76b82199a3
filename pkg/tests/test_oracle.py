import pytest

from jackpoly.alpha import AlphaRational
from jackpoly.partitions import Partition, partitions_of
from jackpoly.oracle import ascending_lex, conjugate_order, gram_schmidt_jack, verify_oracle_self
from jackpoly.symmetric import MExpansion

P = Partition


def test_oracle_examples():
    assert gram_schmidt_jack(1) == {P((1,)): MExpansion(1, {P((1,)): 1})}
    assert gram_schmidt_jack(2) == {
        P((2,)): MExpansion(2, {P((2,)): AlphaRational([1, 1]), P((1, 1)): 2}),
        P((1, 1)): MExpansion(2, {P((1, 1)): 2}),
    }
    assert gram_schmidt_jack(3)[P((1, 1, 1))] == MExpansion(3, {P((1, 1, 1)): 6})


def test_oracle_degree_three_against_hand_values():
    # J_(3) = (1 + a)(1 + 2a) m_3 + 3(1 + a) m_21 + 6 m_111 (hand Gram-Schmidt, N = 3)
    j3 = gram_schmidt_jack(3)[P((3,))]
    assert j3[P((3,))] == AlphaRational([1, 3, 2])
    assert j3[P((2, 1))] == AlphaRational([3, 3])
    assert j3[P((1, 1, 1))] == AlphaRational([6])


@pytest.mark.parametrize("N", [2, 3, 5])
def test_verify_oracle_self(N):
    assert verify_oracle_self(N)


@pytest.mark.parametrize("N", range(1, 7))
def test_linear_extension_independence(N):
    assert gram_schmidt_jack(N, order=conjugate_order(N)) == gram_schmidt_jack(N)


def test_orders_differ_at_six():
    assert ascending_lex(6) != conjugate_order(6)


def test_rejects_non_extension():
    with pytest.raises(ValueError):
        gram_schmidt_jack(3, order=partitions_of(3))


@pytest.mark.parametrize("N", range(1, 7))
def test_oracle_denominators_clear(N):
    for j in gram_schmidt_jack(N, require_integral=False).values():
        assert all(c.is_polynomial() for c in j.coeffs.values())
