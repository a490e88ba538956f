import pytest

from ellmoments.oracles import (
    QSeries,
    delta_series,
    eisenstein,
    level1_cusp_basis,
    series_mul,
    series_pow,
)


def poly(*c):
    return QSeries.from_list(list(c), len(c) - 1)


def test_products():
    assert series_mul(poly(1, 1, 0), poly(1, -1, 0)).coefficients == (1, 0, -1)
    assert series_pow(poly(1, -1), 2, 3).coefficients == (1, -2, 1, 0)
    with pytest.raises(ValueError):
        series_pow(poly(1, -1), -1)


def test_euler_product_prefix():
    f = QSeries.from_list([1], 3)
    for n in (1, 2, 3):
        c = [0] * 4
        c[0], c[n] = 1, -1
        f = series_mul(f, QSeries(tuple(c), 3))
    assert f.coefficients == (1, -1, -1, 0)


def test_delta():
    d = delta_series(12)
    assert d[0] == 0 and d[1] == 1 and d[2] == -24 and d[4] == -1472
    assert d[12] == -370944


def test_eisenstein():
    assert eisenstein(4, 3).coefficients == (1, 240, 2160, 6720)
    assert eisenstein(6, 2).coefficients == (1, -504, -16632)
    with pytest.raises(ValueError):
        eisenstein(8, 3)


def test_basis_sizes():
    assert level1_cusp_basis(10, 5) == []
    assert level1_cusp_basis(14, 5) == []
    assert level1_cusp_basis(12, 5)[0] == delta_series(5)
    assert level1_cusp_basis(16, 5)[0][2] == 216
    for bad in (24, 13, 28):
        with pytest.raises(ValueError):
            level1_cusp_basis(bad, 5)


@pytest.mark.parametrize("k", [12, 16, 18, 20, 22, 26])
def test_hecke_relations(k):
    (f,) = level1_cusp_basis(k, 30)
    assert f[1] == 1
    for p in (2, 3, 5):
        assert f[p * p] == f[p] ** 2 - p ** (k - 1)
    assert f[6] == f[2] * f[3]
    assert f[10] == f[2] * f[5]
