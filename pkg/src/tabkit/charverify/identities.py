"""Character identities checked monomial by monomial inside a degree window.

A window (D, E) keeps the monomials whose x_B^-1-degree is at most D and whose
x_[n]-degree (sum of absolute exponents) is at most E. Both sides of every
check are computed so that each monomial inside the window is exact.
"""

import logging
from typing import Iterable, List, Sequence, Tuple

from tabkit.abtableau import character_ab
from tabkit.alphabet import GradedAlphabet
from tabkit.charverify.report import CheckReport, compare, merge
from tabkit.coeffs import c, c_hat
from tabkit.exception import AlphabetMismatch
from tabkit.laurent import LaurentPoly, det, det_sympy, same
from tabkit.rational import kostka, rational_schur
from tabkit.shape import GeneralizedPartition, as_generalized, generalized_partitions


def _names(prefix: str, n: int, start: int = 1) -> List[str]:
    return [f"{prefix}{i}" for i in range(start, start + n)]


def _check_disjoint(*groups: Iterable[str]) -> None:
    seen = set()
    for group in groups:
        group = set(group)
        if seen & group:
            raise AlphabetMismatch(f"variable names {sorted(seen & group)} are used twice")
        seen |= group


def _window_shapes(level: int, charge: int, bound: int) -> List[GeneralizedPartition]:
    """Shapes of the given charge whose characters can reach B-degree <= bound."""
    high = max(charge, 0) + bound
    return [
        lam
        for lam in generalized_partitions(level, -bound, high)
        if lam.charge == charge and lam.plus_minus()[1].size <= bound
    ]


def specialize(poly: LaurentPoly, keep: Iterable[str]) -> LaurentPoly:
    """Sets every variable outside `keep` to zero."""
    keep = set(keep)
    return LaurentPoly({m: k for m, k in poly.terms.items() if all(v in keep for v, _ in m)})


def _factor(x: str, i: str, sign: int, parity: int, cap: int) -> LaurentPoly:
    # 1/(1 - t) for parity 0, 1 + t for parity 1, with t = (x x_i)^sign
    top = 1 if parity else cap
    return sum(
        (LaurentPoly.monomial({x: sign * k, i: sign * k}) for k in range(1, top + 1)),
        LaurentPoly.one(),
    )


def cauchy_check(
    n: int, a: GradedAlphabet, b: GradedAlphabet, window: Tuple[int, int], prefix: str = "x"
) -> CheckReport:
    """prod_i prod (1 +- x_a x_i)^-+1 prod (1 +- x_b^-1 x_i^-1)^-+1 = sum_lam S_lam s_lam."""
    d_cap, e_cap = window
    a_names, b_names, x_names = a.labels(), b.labels(), _names(prefix, n)
    _check_disjoint(a_names, b_names, x_names)

    def cut(poly: LaurentPoly) -> LaurentPoly:
        return poly.truncate(b_names, d_cap).truncate(a_names, d_cap + e_cap)

    lhs = LaurentPoly.one()
    for i in x_names:
        for x in a.letters:
            lhs = cut(lhs * _factor(x.label, i, 1, x.parity, d_cap + e_cap))
        for x in b.letters:
            lhs = cut(lhs * _factor(x.label, i, -1, x.parity, d_cap))
    lhs = lhs.truncate(x_names, e_cap)

    rhs = LaurentPoly.zero()
    shapes = [
        lam
        for charge in range(-d_cap, d_cap + e_cap + 1)
        for lam in _window_shapes(n, charge, d_cap)
        if lam.plus_minus()[0].size <= d_cap + e_cap
    ]
    for lam in shapes:
        s_ab = cut(character_ab(lam, a, b, d_cap))
        if s_ab.is_zero():
            continue
        rhs = rhs + s_ab * rational_schur(lam, n, prefix)
    rhs = cut(rhs).truncate(x_names, e_cap)
    name = f"cauchy n={n} {a.name}/{b.name} window={window}"
    return compare(name, lhs, rhs, shapes=len(shapes))


def jacobi_trudi_check(lam, a: GradedAlphabet, b: GradedAlphabet, window: int) -> CheckReport:
    """S_lam = det(S_{lam_i - i + j}) on every monomial of B-degree <= window."""
    lam = as_generalized(lam)
    n = lam.level
    b_names = b.labels()
    level_one = {}
    matrix = []
    for i in range(n):
        row = []
        for j in range(n):
            k = lam.parts[i] - i + j
            if k not in level_one:
                level_one[k] = character_ab((k,), a, b, window)
            row.append(level_one[k])
        matrix.append(row)
    rhs = det(matrix).truncate(b_names, window)
    lhs = character_ab(lam, a, b, window).truncate(b_names, window)
    report = compare(f"jacobi-trudi {lam} {a.name}/{b.name} D={window}", lhs, rhs)
    if n <= 3:
        agrees = same(det(matrix), det_sympy(matrix))
        report.details["sympy_det"] = agrees
        if not agrees:
            logging.error(f"cofactor and sympy determinants differ for {lam}")
            report.passed = False
    return report


def jacobi_trudi_stability(
    lam, alphabets: Sequence[Tuple[GradedAlphabet, GradedAlphabet]], window: int
) -> CheckReport:
    """Runs the determinant check at growing truncations; smaller S_lam are specializations."""
    lam = as_generalized(lam)
    reports = [jacobi_trudi_check(lam, a, b, window) for a, b in alphabets]
    for (a0, b0), (a1, b1) in zip(alphabets, alphabets[1:]):
        small = character_ab(lam, a0, b0, window)
        large = specialize(character_ab(lam, a1, b1, window), a0.labels() + b0.labels())
        reports.append(compare(f"truncation {a0.name}->{a1.name} for {lam}", large, small))
    return merge(f"jacobi-trudi stability {lam}", reports)


def _reverse_lex_at_least(lam: GeneralizedPartition, mu: GeneralizedPartition) -> bool:
    return lam.parts >= mu.parts


def h_expansion_check(mu, a: GradedAlphabet, b: GradedAlphabet, window: int) -> CheckReport:
    """H_mu = prod S_{mu_i} = sum_lam K_{lam mu} S_lam, with K_{lam mu} = 0 unless lam >= mu."""
    mu = as_generalized(mu)
    b_names = b.labels()
    lhs = LaurentPoly.one()
    for part in mu.parts:
        lhs = (lhs * character_ab((part,), a, b, window)).truncate(b_names, window)
    rhs = LaurentPoly.zero()
    below = []
    for lam in _window_shapes(mu.level, mu.charge, window):
        k = kostka(lam, mu.parts)
        if not k:
            continue
        if not _reverse_lex_at_least(lam, mu):
            below.append(str(lam))
        rhs = rhs + k * character_ab(lam, a, b, window)
    report = compare(
        f"h-expansion {mu} {a.name}/{b.name} D={window}", lhs, rhs.truncate(b_names, window)
    )
    report.details["triangular"] = not below
    if below:
        logging.error(f"nonzero Kostka numbers below {mu}: {below}")
        report.passed = False
        report.mismatches.extend(f"K_({lam}),{mu} != 0" for lam in below)
    return report


def rational_lr_check(mu, nu, prefix: str = "x") -> CheckReport:
    """s_mu s_nu = sum_lam c^lam_{mu nu} s_lam in x_1..x_n."""
    mu, nu = as_generalized(mu), as_generalized(nu)
    n = mu.level
    lhs = rational_schur(mu, n, prefix) * rational_schur(nu, n, prefix)
    rhs = LaurentPoly.zero()
    low, high = mu.last() + nu.last(), mu.parts[0] + nu.parts[0]
    for lam in generalized_partitions(n, low, high):
        if lam.charge != mu.charge + nu.charge:
            continue
        k = c(lam, mu, nu)
        if k:
            rhs = rhs + k * rational_schur(lam, n, prefix)
    return compare(f"rational LR {mu} x {nu}", lhs, rhs)


def rational_branching_check(lam, m: int, n: int, prefix: str = "x") -> CheckReport:
    """s_lam(x_1..x_{m+n}) = sum c-hat^lam_{mu nu} s_mu(x_1..x_m) s_nu(x_{m+1}..x_{m+n})."""
    lam = as_generalized(lam)
    if lam.level != m + n:
        raise AlphabetMismatch(f"{lam} does not have level {m} + {n}")
    lhs = rational_schur(lam, m + n, prefix)
    renames = dict(zip(_names(prefix, n), _names(prefix, n, m + 1)))
    low, high = lam.last(), lam.parts[0] if lam.parts else 0
    rhs = LaurentPoly.zero()
    nus = list(generalized_partitions(n, low, high))
    for mu in generalized_partitions(m, low, high):
        for nu in nus:
            if mu.charge + nu.charge != lam.charge:
                continue
            k = c_hat(lam, mu, nu)
            if k:
                right = rational_schur(nu, n, prefix).substitute(renames)
                rhs = rhs + k * rational_schur(mu, m, prefix) * right
    return compare(f"rational branching {lam} -> ({m},{n})", lhs, rhs)


def ab_product_check(mu, nu, a: GradedAlphabet, b: GradedAlphabet, window: int) -> CheckReport:
    """S_mu S_nu = sum_lam c-hat^lam_{mu nu} S_lam on B-degree <= window."""
    mu, nu = as_generalized(mu), as_generalized(nu)
    b_names = b.labels()
    lhs = (character_ab(mu, a, b, window) * character_ab(nu, a, b, window)).truncate(
        b_names, window
    )
    rhs = LaurentPoly.zero()
    for lam in _window_shapes(mu.level + nu.level, mu.charge + nu.charge, window):
        k = c_hat(lam, mu, nu)
        if k:
            rhs = rhs + k * character_ab(lam, a, b, window)
    return compare(f"A/B product {mu} x {nu} D={window}", lhs, rhs.truncate(b_names, window))


def skew_character_check(
    lam, mu, a: GradedAlphabet, b: GradedAlphabet, window: int
) -> CheckReport:
    """S_{lam/mu} = sum_nu c^lam_{mu nu} S_nu on B-degree <= window."""
    lam, mu = as_generalized(lam), as_generalized(mu)
    b_names = b.labels()
    lhs = character_ab(lam, a, b, window, inner_shape=mu).truncate(b_names, window)
    rhs = LaurentPoly.zero()
    for nu in _window_shapes(lam.level, lam.charge - mu.charge, window):
        k = c(lam, mu, nu)
        if k:
            rhs = rhs + k * character_ab(nu, a, b, window)
    return compare(f"skew {lam}/{mu} D={window}", lhs, rhs.truncate(b_names, window))
