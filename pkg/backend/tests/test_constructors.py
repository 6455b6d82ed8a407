import pytest

from app.errors import BadParamsError, SizeLimitError
from app.services.constructors import (
    adjoin_identity,
    chain_semilattice,
    cyclic_group,
    direct_product,
    group_from_table,
    symmetric_group,
    symmetric_inverse_monoid,
)
from app.services.semigroup_core import (
    has_zero,
    idempotents,
    is_chain,
    is_group,
    restricted_semigroup,
)


def test_chain_five_has_zero_at_four():
    S = chain_semilattice(5)
    assert S.n == 5
    assert S.zero == 4
    assert S.identity == 0
    assert is_chain(S)
    assert S.label == "chain5"


def test_cyclic_group():
    S = cyclic_group(6)
    assert is_group(S)
    assert S.star.tolist() == [0, 5, 4, 3, 2, 1]


@pytest.mark.parametrize("k, size", [(1, 2), (2, 7), (3, 34), (4, 209)])
def test_symmetric_inverse_monoid_sizes(k, size):
    S = symmetric_inverse_monoid(k)
    assert S.n == size
    assert len(idempotents(S)) == 2**k
    assert S.identity is not None
    assert S.zero is not None


def test_symmetric_inverse_monoid_limit():
    with pytest.raises(SizeLimitError):
        symmetric_inverse_monoid(5)


def test_symmetric_group():
    S = symmetric_group(3)
    assert S.n == 6
    assert is_group(S)
    assert S.label == "S3"
    with pytest.raises(SizeLimitError):
        symmetric_group(6)


def test_symmetric_group_is_not_abelian(s3):
    assert not (s3.table == s3.table.T).all()


def test_direct_product_is_componentwise(z3xchain2):
    S = z3xchain2
    assert S.n == 6
    assert S.label == "Z3xchain2"
    # (1, 0)(2, 1) = (0, 1): index 1*2+0 times 2*2+1 is 0*2+1
    assert S.mul(2, 5) == 1
    assert S.star[2] == 4
    assert not is_group(S)
    assert not has_zero(S)


def test_group_times_chain_is_zero_free():
    for G in (cyclic_group(2), symmetric_group(3)):
        for k in (2, 3, 4):
            assert not has_zero(direct_product(G, chain_semilattice(k)))


def test_group_from_table(chain2):
    G = group_from_table([[0, 1], [1, 0]], names=["e", "g"], name="C2")
    assert is_group(G)
    assert G.names == ("e", "g")
    with pytest.raises(BadParamsError):
        group_from_table(chain2.table.tolist())


@pytest.mark.parametrize("k", [0, -1])
def test_bad_degree(k):
    with pytest.raises(BadParamsError):
        chain_semilattice(k)


def test_adjoin_identity():
    assert adjoin_identity(cyclic_group(2)) == cyclic_group(2)
    T = restricted_semigroup(chain_semilattice(2))
    assert T.identity is None
    T1 = adjoin_identity(T)
    assert T1.n == 4
    assert T1.identity == 3
    assert T1.zero == T.zero
