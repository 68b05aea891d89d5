"""
C8 x C2 Transform
The b/c/d/e folding of a 16-vector, the D4 closed forms and the alpha/beta/gamma split
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from ..core.cyclotomic import Cyclo, get_ring
from ..core.determinant import Assignment, character_product
from ..core.errors import VerificationError
from ..core.groups import make_group

C8XC2 = make_group([8, 2])
C4 = make_group([4])
C8 = make_group([8])

Vec16 = Tuple[int, ...]
Vec4 = Tuple[int, ...]

GAUSSIAN = get_ring(4)


def vec16(values: Sequence[int]) -> Vec16:
    """Validate a C8 x C2 assignment given in the j = r + 8s order"""
    values = tuple(int(v) for v in values)
    if len(values) != 16:
        raise ValueError(f"C8 x C2 assignments have 16 entries, got {len(values)}")
    return values


def element_of_index(j: int) -> Tuple[int, int]:
    """(r, s) for the variable index j = r + 8s"""
    return C8XC2.element_of_variable(j)


def assignment_of(a: Sequence[int]) -> Assignment:
    return Assignment.from_sequence(C8XC2, vec16(a))


def fold(a):
    """Raw b, c, d, e tuples; entries may be ints or numpy arrays"""
    b, c, d, e = [], [], [], []
    for i in range(4):
        plus_low, plus_high = a[i] + a[i + 8], a[i + 4] + a[i + 12]
        minus_low, minus_high = a[i] - a[i + 8], a[i + 4] - a[i + 12]
        b.append(plus_low + plus_high)
        c.append(plus_low - plus_high)
        d.append(minus_low + minus_high)
        e.append(minus_low - minus_high)
    return tuple(b), tuple(c), tuple(d), tuple(e)


@dataclass(frozen=True)
class BCDE:
    """Folded vectors; coordinate-wise they share a parity and sum to 0 mod 4"""
    b: Vec4
    c: Vec4
    d: Vec4
    e: Vec4

    def __post_init__(self):
        for i in range(4):
            column = (self.b[i], self.c[i], self.d[i], self.e[i])
            if len({x % 2 for x in column}) != 1:
                raise VerificationError(f"coordinate {i} of b, c, d, e mixes parities: {column}")
            if sum(column) % 4:
                raise VerificationError(f"coordinate {i} of b, c, d, e does not sum to 0 mod 4: {column}")

    def to_dict(self) -> dict:
        return {'b': list(self.b), 'c': list(self.c), 'd': list(self.d), 'e': list(self.e)}


def bcde(a: Sequence[int]) -> BCDE:
    b, c, d, e = fold(vec16(a))
    return BCDE(b, c, d, e)


def d4(x):
    """Circulant determinant of order 4"""
    x0, x1, x2, x3 = x
    return ((x0 + x2) ** 2 - (x1 + x3) ** 2) * ((x0 - x2) ** 2 + (x1 - x3) ** 2)


def d4_tilde(x):
    """D4(x0, zeta8 x1, zeta8^2 x2, zeta8^3 x3), a sum of two squares"""
    x0, x1, x2, x3 = x
    return (x0 ** 2 - x2 ** 2 + 2 * x1 * x3) ** 2 + (x1 ** 2 - x3 ** 2 - 2 * x0 * x2) ** 2


def d4_tilde_cyclotomic(x: Sequence[int]) -> int:
    """d4_tilde evaluated as a character product in Z[zeta_8]"""
    ring = get_ring(8)
    twisted = [ring.root_of_unity(k) * int(v) for k, v in enumerate(x)]
    value = character_product(C4, twisted, ring).as_integer()
    if value is None:
        raise VerificationError("twisted D4 is not a rational integer")
    return value


def d8(x):
    """Circulant determinant of order 8 via D4(x_i + x_{i+4}) * D4~(x_i - x_{i+4})"""
    return d4([x[i] + x[i + 4] for i in range(4)]) * d4_tilde([x[i] - x[i + 4] for i in range(4)])


def d8x2(a):
    """D_{8x2}(a) = D4(b) D4~(c) D4(d) D4~(e); accepts ints or numpy columns"""
    b, c, d, e = fold(a)
    return d4(b) * d4_tilde(c) * d4(d) * d4_tilde(e)


def d8x2_via_d8(a: Sequence[int]) -> int:
    """D8(a_i + a_{i+8}) * D8(a_i - a_{i+8})"""
    a = vec16(a)
    return d8([a[i] + a[i + 8] for i in range(8)]) * d8([a[i] - a[i + 8] for i in range(8)])


def d4_halves(x: Sequence[int]) -> Tuple[int, int]:
    """(z0, z2) with D4(x) = z0^2 - z2^2"""
    x0, x1, x2, x3 = x
    return x0 ** 2 + x2 ** 2 - 2 * x1 * x3, 2 * x0 * x2 - x1 ** 2 - x3 ** 2


def d4_via_d2(x: Sequence[int]) -> int:
    z0, z2 = d4_halves(x)
    return z0 ** 2 - z2 ** 2


def gaussian(real: int, imag: int) -> Cyclo:
    """real + imag * zeta4"""
    return Cyclo(GAUSSIAN, (real, imag))


def _twisted_factor(v: Vec4) -> Cyclo:
    v0, v1, v2, v3 = v
    return gaussian(v0 ** 2 - v2 ** 2 + 2 * v1 * v3, -(v1 ** 2 - v3 ** 2 - 2 * v0 * v2))


@dataclass(frozen=True)
class AlphaBetaGamma:
    """alpha0 alpha1 = D4(b), alpha2 alpha3 = D4(d), |beta|^2 = D4~(c), |gamma|^2 = D4~(e)"""
    alphas: Tuple[int, int, int, int]
    beta: Cyclo
    gamma: Cyclo

    @property
    def beta_norm(self) -> int:
        return self.beta.norm_squared().as_integer()

    @property
    def gamma_norm(self) -> int:
        return self.gamma.norm_squared().as_integer()

    def product(self) -> int:
        a0, a1, a2, a3 = self.alphas
        return a0 * a1 * a2 * a3 * self.beta_norm * self.gamma_norm

    def to_dict(self) -> dict:
        return {
            'alphas': list(self.alphas),
            'beta': list(self.beta.coeffs),
            'gamma': list(self.gamma.coeffs),
            'beta_norm': self.beta_norm,
            'gamma_norm': self.gamma_norm,
        }


def alpha_beta_gamma(a: Sequence[int]) -> AlphaBetaGamma:
    f = bcde(a)
    b, d = f.b, f.d
    alphas = (
        (b[0] + b[2]) ** 2 - (b[1] + b[3]) ** 2,
        (b[0] - b[2]) ** 2 + (b[1] - b[3]) ** 2,
        (d[0] + d[2]) ** 2 - (d[1] + d[3]) ** 2,
        (d[0] - d[2]) ** 2 + (d[1] - d[3]) ** 2,
    )
    return AlphaBetaGamma(alphas, _twisted_factor(f.c), _twisted_factor(f.e))


def two_adic_valuation(n: int) -> int:
    """Largest t with 2^t | n; zero has none"""
    if n == 0:
        raise ValueError("0 has no 2-adic valuation")
    n = abs(n)
    return (n & -n).bit_length() - 1
