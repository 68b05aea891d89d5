"""
Residue Checks
Exhaustive verification of the congruences behind the C8 x C2 filters, one
vectorized sweep over every residue tuple
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np

from .transform import alpha_beta_gamma, bcde, d4, d4_tilde, d8x2, fold, two_adic_valuation

logger = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 10


@dataclass
class ResidueReport:
    """Result of one exhaustive congruence check"""
    check_id: str
    description: str
    modulus: int
    checked: int
    counterexamples: List[dict] = field(default_factory=list)
    clauses: Dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            'check_id': self.check_id,
            'description': self.description,
            'modulus': self.modulus,
            'checked': self.checked,
            'clauses': dict(self.clauses),
            'counterexamples': list(self.counterexamples),
            'passed': self.passed,
        }

    def summary(self) -> str:
        status = "pass" if self.passed else f"FAIL ({len(self.counterexamples)} counterexamples)"
        return f"{self.check_id}: {status}, {self.checked} tuples mod {self.modulus}"


def binary_cube(dim: int) -> np.ndarray:
    """All 2^dim vectors with entries in {0, 1}, one per row"""
    codes = np.arange(2 ** dim, dtype=np.int64)
    return (codes[:, None] >> np.arange(dim, dtype=np.int64)) & 1


def residue_grid(modulus: int, dim: int) -> np.ndarray:
    """All modulus^dim tuples of residues, one per row, in lexicographic order"""
    return np.indices((modulus,) * dim, dtype=np.int64).reshape(dim, -1).T


def _failures(rows: np.ndarray, ok: np.ndarray, tag: str = "") -> List[dict]:
    bad = np.flatnonzero(~ok)[:MAX_COUNTEREXAMPLES]
    out = []
    for i in bad:
        entry = {'tuple': [int(x) for x in rows[i]]}
        if tag:
            entry['clause'] = tag
        out.append(entry)
    return out


def _columns(rows: np.ndarray) -> List[np.ndarray]:
    return [rows[:, j] for j in range(rows.shape[1])]


def check_parity_constraints() -> ResidueReport:
    rows = binary_cube(16)
    b, c, d, e = fold(_columns(rows))
    ok = np.ones(len(rows), dtype=bool)
    for i in range(4):
        ok &= (b[i] - c[i]) % 2 == 0
        ok &= (b[i] - d[i]) % 2 == 0
        ok &= (b[i] - e[i]) % 2 == 0
        ok &= (b[i] + c[i] + d[i] + e[i]) % 4 == 0
    return ResidueReport("parity-constraints",
                         "b, c, d, e share parities coordinate-wise and sum to 0 mod 4",
                         2, len(rows), _failures(rows, ok))


def check_parity_collapse() -> ResidueReport:
    rows = binary_cube(16)
    cols = _columns(rows)
    b, c, d, e = fold(cols)
    values = [d8x2(cols), d4(b), d4_tilde(c), d4(d), d4_tilde(e)]
    ok = np.ones(len(rows), dtype=bool)
    for v in values[1:]:
        ok &= (v - values[0]) % 2 == 0
    return ResidueReport("parity-collapse",
                         "D8x2(a), D4(b), D4~(c), D4(d), D4~(e) agree mod 2",
                         2, len(rows), _failures(rows, ok))


def check_odd_lead() -> ResidueReport:
    rows = residue_grid(16, 4)
    k, l, m, n = _columns(rows)
    x = (2 * k + 1, 2 * l, 2 * m, 2 * n)
    target = (8 * m + 1) % 16
    ok_plain = d4(x) % 16 == target
    ok_twisted = d4_tilde(x) % 16 == target
    failures = _failures(rows, ok_plain, "D4") + _failures(rows, ok_twisted, "D4~")
    return ResidueReport("odd-lead",
                         "D4 and D4~ at (2k+1, 2l, 2m, 2n) are 8m + 1 mod 16",
                         16, len(rows), failures[:MAX_COUNTEREXAMPLES])


def check_even_lead() -> ResidueReport:
    rows = residue_grid(16, 4)
    k, l, m, n = _columns(rows)
    x = (2 * k, 2 * l + 1, 2 * m + 1, 2 * n + 1)
    ok_plain = d4(x) % 16 == (8 * (k + l + n) - 3) % 16
    ok_twisted = d4_tilde(x) % 16 == (8 * (k + l + n) + 1) % 16
    failures = _failures(rows, ok_plain, "D4") + _failures(rows, ok_twisted, "D4~")
    return ResidueReport("even-lead",
                         "D4 = 8(k+l+n) - 3 and D4~ = 8(k+l+n) + 1 mod 16 at (2k, 2l+1, 2m+1, 2n+1)",
                         16, len(rows), failures[:MAX_COUNTEREXAMPLES])


def _odd_pair_sums(v: Sequence[np.ndarray]) -> np.ndarray:
    return ((v[0] + v[2]) % 2 == 1) & ((v[1] + v[3]) % 2 == 1)


def _alpha_congruence(rows: np.ndarray) -> np.ndarray:
    v = _columns(rows)
    plus = (v[0] + v[2]) ** 2 - (v[1] + v[3]) ** 2
    minus = (v[0] - v[2]) ** 2 + (v[1] - v[3]) ** 2
    return (plus - minus - 4 * (v[0] * v[2] + v[1] * v[3]) + 2) % 16 == 0


def _real_part_congruence(rows: np.ndarray) -> np.ndarray:
    v = _columns(rows)
    real = v[0] ** 2 - v[2] ** 2 + 2 * v[1] * v[3]
    sign = np.where(v[2] % 2 == 0, 1, -1)
    return (real - sign - 2 * (v[0] * v[2] + v[1] * v[3])) % 8 == 0


def admissible_columns(modulus: int = 4) -> np.ndarray:
    """(b_i, c_i, d_i, e_i) mod 4 with one common parity and sum 0 mod 4"""
    grid = residue_grid(modulus, 4)
    parity = grid % 2
    same = (parity == parity[:, :1]).all(axis=1)
    return grid[same & (grid.sum(axis=1) % 4 == 0)]


def check_cross_terms() -> ResidueReport:
    failures: List[dict] = []
    clauses: Dict[str, int] = {}

    grid = residue_grid(8, 4)
    rows = grid[_odd_pair_sums(_columns(grid))]
    # the d and e clauses have the same shape as the b and c ones
    for tag in ("alpha0-alpha1", "alpha2-alpha3"):
        failures += _failures(rows, _alpha_congruence(rows), tag)
        clauses[tag] = len(rows)
    for tag in ("re-beta", "re-gamma"):
        failures += _failures(rows, _real_part_congruence(rows), tag)
        clauses[tag] = len(rows)

    # one admissible column per coordinate i, then the b parity precondition
    columns = admissible_columns()
    picks = residue_grid(len(columns), 4)
    stacked = columns[picks]                      # (tuples, coordinate i, (b, c, d, e))
    b, c, d, e = (stacked[:, :, j] for j in range(4))
    keep = ((b[:, 0] + b[:, 2]) % 2 == 1) & ((b[:, 1] + b[:, 3]) % 2 == 1)
    b, c, d, e = b[keep], c[keep], d[keep], e[keep]
    total = sum(v[:, 0] * v[:, 2] + v[:, 1] * v[:, 3] for v in (b, c, d, e))
    ok = total % 4 == 0
    flat = np.concatenate([b, c, d, e], axis=1)
    failures += _failures(flat, ok, "cross-sum")
    clauses["cross-sum"] = int(keep.sum())

    checked = sum(clauses.values())
    return ResidueReport("cross-terms",
                         "alpha and Re(beta) cross-term congruences under b0+b2, b1+b3 odd",
                         8, checked, failures[:MAX_COUNTEREXAMPLES], clauses)


def _two_times_odd(v: np.ndarray) -> np.ndarray:
    return v % 4 == 2


def check_parity_chain() -> ResidueReport:
    rows = binary_cube(16)
    b, c, d, e = fold(_columns(rows))
    alpha1 = (b[0] - b[2]) ** 2 + (b[1] - b[3]) ** 2
    alpha3 = (d[0] - d[2]) ** 2 + (d[1] - d[3]) ** 2
    flags = [_two_times_odd(alpha1), _two_times_odd(alpha3), _two_times_odd(d4_tilde(c)),
             _two_times_odd(d4_tilde(e))]
    ok = np.ones(len(rows), dtype=bool)
    for flag in flags[1:]:
        ok &= flag == flags[0]
    return ResidueReport("parity-chain",
                         "alpha1, alpha3, |beta|^2, |gamma|^2 are all or none in 2 * odd",
                         2, len(rows), _failures(rows, ok))


RESIDUE_CHECKS: Dict[str, Callable[[], ResidueReport]] = {
    "parity-constraints": check_parity_constraints,
    "parity-collapse": check_parity_collapse,
    "odd-lead": check_odd_lead,
    "even-lead": check_even_lead,
    "cross-terms": check_cross_terms,
    "parity-chain": check_parity_chain,
}


def residue_check(check_id: str) -> ResidueReport:
    """Run one named residue check"""
    try:
        check = RESIDUE_CHECKS[check_id]
    except KeyError:
        raise ValueError(f"unknown residue check {check_id!r}; choose from {', '.join(RESIDUE_CHECKS)}") from None
    report = check()
    logger.info(report.summary())
    return report


def residue_suite() -> List[ResidueReport]:
    return [residue_check(check_id) for check_id in RESIDUE_CHECKS]


def _rotate(x: Tuple[int, ...], steps: int, negate: bool) -> Tuple[int, ...]:
    for _ in range(steps):
        x = (x[1], x[2], x[3], -x[0] if negate else x[0])
    return x


def rotation_products(a: Sequence[int]) -> Tuple[int, int, int, int]:
    """D4(b) D4~(c) D4(d) D4~(e) with all four inputs rotated 0..3 places"""
    f = bcde(a)
    products = []
    for steps in range(4):
        products.append(
            d4(_rotate(f.b, steps, False)) * d4_tilde(_rotate(f.c, steps, True))
            * d4(_rotate(f.d, steps, False)) * d4_tilde(_rotate(f.e, steps, True))
        )
    return tuple(products)


def rotation_symmetry_check(a: Sequence[int]) -> bool:
    return len(set(rotation_products(a))) == 1


def two_adic_pattern_check(a: Sequence[int]) -> bool:
    """At valuation 11: {v(alpha0), v(alpha2)} = {3, 4} and the other four factors are 2 * odd

    Vacuously true for values of any other valuation.
    """
    value = d8x2(a)
    if value == 0 or two_adic_valuation(value) != 11:
        return True
    abg = alpha_beta_gamma(a)
    a0, a1, a2, a3 = abg.alphas
    if sorted((two_adic_valuation(a0), two_adic_valuation(a2))) != [3, 4]:
        return False
    return all(two_adic_valuation(v) == 1 for v in (a1, a3, abg.beta_norm, abg.gamma_norm))
