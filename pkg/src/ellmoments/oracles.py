"""Integer q-series for level-one cusp forms, used as ground truth for traces."""

from __future__ import annotations

from dataclasses import dataclass

from .numtheory import divisors


@dataclass(frozen=True)
class QSeries:
    coefficients: tuple[int, ...]
    precision: int

    def __post_init__(self):
        if self.precision < 0 or len(self.coefficients) != self.precision + 1:
            raise ValueError("need precision + 1 coefficients")

    @classmethod
    def from_list(cls, coeffs, precision: int) -> QSeries:
        c = list(coeffs[: precision + 1])
        c += [0] * (precision + 1 - len(c))
        return cls(tuple(int(x) for x in c), precision)

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.precision:
            raise IndexError(f"coefficient {n} outside precision {self.precision}")
        return self.coefficients[n]

    def __getitem__(self, n: int) -> int:
        return self.coefficient(n)


def series_mul(a: QSeries, b: QSeries, precision: int | None = None) -> QSeries:
    prec = min(a.precision, b.precision) if precision is None else precision
    if prec > min(a.precision, b.precision):
        raise ValueError("precision exceeds that of the factors")
    out = [0] * (prec + 1)
    for i, x in enumerate(a.coefficients[: prec + 1]):
        if x:
            for j, y in enumerate(b.coefficients[: prec + 1 - i]):
                out[i + j] += x * y
    return QSeries(tuple(out), prec)


def series_pow(a: QSeries, e: int, precision: int | None = None) -> QSeries:
    if e < 0:
        raise ValueError("only nonnegative powers of polynomials")
    prec = a.precision if precision is None else precision
    result = QSeries.from_list([1], prec)
    base = QSeries.from_list(a.coefficients, prec)
    while e:
        if e & 1:
            result = series_mul(result, base, prec)
        base = series_mul(base, base, prec)
        e >>= 1
    return result


def delta_series(precision: int) -> QSeries:
    """x * prod_{n >= 1} (1 - x^n)^24, so coefficient n is Ramanujan's tau(n)."""
    if precision < 1:
        raise ValueError("precision must be >= 1")
    eta = QSeries.from_list([1], precision)
    for n in range(1, precision + 1):
        f = [0] * (precision + 1)
        f[0], f[n] = 1, -1
        eta = series_mul(eta, QSeries(tuple(f), precision))
    shifted = [0] + list(series_pow(eta, 24).coefficients[:precision])
    return QSeries(tuple(shifted), precision)


def eisenstein(weight: int, precision: int) -> QSeries:
    if weight == 4:
        c, e = 240, 3
    elif weight == 6:
        c, e = -504, 5
    else:
        raise ValueError("only weights 4 and 6")
    coeffs = [1] + [c * sum(dd**e for dd in divisors(n)) for n in range(1, precision + 1)]
    return QSeries(tuple(coeffs), precision)


def level1_cusp_basis(k: int, precision: int) -> list[QSeries]:
    """Basis of S_k(SL2(Z)) for even k <= 26, k != 24, as Delta E4^a E6^b."""
    if k % 2 or not 2 <= k <= 26:
        raise ValueError(f"weight {k} is not an even integer in [2, 26]")
    if k == 24:
        raise ValueError("weight 24 has a two-dimensional space")
    rest = k - 12
    if rest < 0 or rest == 2:
        return []
    a, b = next((a, b) for b in range(rest // 6 + 1) for a in range(rest // 4 + 1) if 4 * a + 6 * b == rest)
    f = delta_series(precision)
    f = series_mul(f, series_pow(eisenstein(4, precision), a))
    f = series_mul(f, series_pow(eisenstein(6, precision), b))
    return [f]
