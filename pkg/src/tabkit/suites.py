"""Named verification suites run by `tabkit verify`.

Every suite takes the run configuration and returns one merged CheckReport.
Cases are pure, so suites fan them out over `config.threads` workers and merge
the reports back in case-key order.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from itertools import product
from typing import Callable, Dict, List, Tuple

from tabkit.abtableau import ABTableau, branch, branch_inv, canonicalize, enumerate_ab
from tabkit.alphabet import GradedAlphabet, half_nonpos_prime, half_pos_prime, interval, naturals
from tabkit.charverify import (
    CheckReport,
    cauchy_check,
    h_expansion_check,
    highest_weight_gl,
    highest_weight_super,
    highest_weight_tableau,
    highest_weight_tableau_gl,
    jacobi_trudi_stability,
    merge,
    weight_matches,
)
from tabkit.coeffs import c, c_hat
from tabkit.config import TabkitConfig
from tabkit.duality import (
    LevelOneWord,
    kappa,
    kappa_inv,
    rho_ab,
    rho_ab_inv,
    skew_jdt_ab,
    skew_jdt_ab_inv,
    word_tuples,
)
from tabkit.insertion import (
    multi_insert_col,
    multi_insert_col_inv,
    multi_insert_row,
    multi_insert_row_inv,
    rho_col,
    rho_col_inv,
    rho_row,
    rho_row_inv,
)
from tabkit.rational import (
    RationalTableau,
    check_stroomer,
    delta,
    from_tableau,
    kostka,
    sigma,
    sigma_pow,
)
from tabkit.shape import (
    GeneralizedPartition,
    Partition,
    generalized_partitions,
    partitions_in_box,
    partitions_of,
)
from tabkit.switching import h_tableau, jdt, jdt_inv, lr_count, switch_full
from tabkit.tableau import Tableau, enumerate_sst

Case = Callable[[], CheckReport]
Suite = Callable[[TabkitConfig], CheckReport]


def expect(name: str, ok: bool, **details) -> CheckReport:
    if ok:
        logging.debug(f"{name}: ok")
    else:
        logging.error(f"{name}: failed {details}")
    return CheckReport(
        name=name, passed=ok, mismatches=[] if ok else [name], details=details
    )


def run_cases(name: str, cases: Dict[str, Case], threads: int = 1) -> CheckReport:
    """Runs every case, on a thread pool when threads > 1, and merges by sorted key."""
    keys = sorted(cases)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = {k: pool.submit(cases[k]) for k in keys}
            reports = [futures[k].result() for k in keys]
    else:
        reports = [cases[k]() for k in keys]
    report = merge(name, reports)
    logging.info(f"Suite {name}: {len(reports)} cases, passed={report.passed}")
    return report


def _letters(prefix: str, k: int, parities=None) -> GradedAlphabet:
    return GradedAlphabet.from_labels(
        prefix.upper(), [f"{prefix}{i}" for i in range(1, k + 1)], parities
    )


def _all_tableaux(alphabet: GradedAlphabet, rows: int, cols: int) -> List[Tableau]:
    return [t for shape in partitions_in_box(rows, cols) for t in enumerate_sst(alphabet, shape)]


def _skew_tableaux(alphabet: GradedAlphabet, rows: int, cols: int) -> List[Tableau]:
    out = []
    for outer in partitions_in_box(rows, cols):
        for inner in partitions_in_box(rows, cols):
            if outer.contains(inner):
                out.extend(enumerate_sst(alphabet, outer, inner))
    return out


# worked examples


def switching_example(config: TabkitConfig) -> CheckReport:
    """Switching a filling over N past one over N'."""
    s = Tableau.from_rows(naturals(3), [["1", "1", "2"], ["2", "3"]])
    t = Tableau.from_rows(naturals(3).prime(), [[], ["3"], ["1", "2", "3"]], inner=(3, 2))
    t_new, s_new = switch_full(s, t)
    return expect(
        "example-2-5",
        t_new.to_rows() == [["1", "2", "3"], ["3"]]
        and s_new.to_rows() == [[], ["1", "2"], ["1", "2", "3"]],
        t=t_new.to_rows(),
        s=s_new.to_rows(),
    )


def sigma_example(config: TabkitConfig) -> CheckReport:
    t = RationalTableau.of((3, 2, 0, -1, -2), [(2, 3, 5), (4, 4), (), (-5,), (-4, -2)])
    got = sigma(t)
    want = RationalTableau.of((4, 3, 1, 0, -1), [(1, 2, 3, 5), (3, 4, 4), (4,), (), (-4,)])
    return expect("sigma", got == want and got.validate(), got=got.to_json())


def complement_example(config: TabkitConfig) -> CheckReport:
    """delta^4_5 of a tableau over [4], through sigma^-5."""
    t = Tableau.from_rows(interval(4), [["1", "2", "2", "3"], ["3", "4", "4"], ["4"]])
    low = sigma_pow(from_tableau(t, 4), -5)
    got = delta(t, 5, 4)
    want_low = ((-4,), (-4, -3), (-3, -3, -2, -2), (-2, -1, -1, -1, -1))
    ok = low.rows == want_low and got.to_rows() == [
        ["1", "1", "1", "1", "2"],
        ["2", "2", "3", "3"],
        ["3", "4"],
        ["4"],
    ]
    return expect("example-3-6", ok, delta=got.to_rows())


def rsk_example_words():
    a, b = _letters("a", 6), _letters("b", 6)
    return a, b, [
        LevelOneWord.of(a, ["a1", "a1", "a2", "a4", "a5"], b, ["b3", "b3", "b4", "b6"]),
        LevelOneWord.of(a, ["a1", "a3", "a6"], b, ["b2", "b3", "b6"]),
    ]


def rsk_example(config: TabkitConfig) -> CheckReport:
    a, b, words = rsk_example_words()
    p_w, q_w = kappa(words)
    want_p = ABTableau(
        shape=GeneralizedPartition.of((2, -1)),
        d=5,
        mu=Partition((3,)),
        tplus=Tableau.from_rows(a, [["a1", "a3", "a5", "a6"], ["a1", "a1", "a2", "a4"]], (3,)),
        tminus=Tableau.from_rows(b, [["b2", "b3"], ["b3", "b3", "b4", "b6", "b6"]], (3,)),
    )
    want_q = RationalTableau.of((2, -1), [(1, 2), (-2,)])
    back = kappa_inv(p_w, q_w)
    return expect(
        "example-4-2",
        p_w == want_p and q_w == want_q and back == words,
        p=p_w.to_json(),
        q=q_w.to_json(),
    )


def rho_ab_example():
    a, b = _letters("a", 4), _letters("b", 3)
    t1 = ABTableau(
        shape=GeneralizedPartition.of((2, -1)),
        d=1,
        mu=Partition(),
        tplus=Tableau.from_rows(a, [["a1", "a2", "a2"]]),
        tminus=Tableau.from_rows(b, [["b2"], ["b3"]]),
    )
    t2 = ABTableau(
        shape=GeneralizedPartition.of((1, -1)),
        d=2,
        mu=Partition((1,)),
        tplus=Tableau.from_rows(a, [["a3", "a4"], ["a1"]], (1,)),
        tminus=Tableau.from_rows(b, [["b1"], ["b1", "b2"]], (1,)),
    )
    want = ABTableau(
        shape=GeneralizedPartition.of((4, 0, -1, -2)),
        d=2,
        mu=Partition((2, 1)),
        tplus=Tableau.from_rows(a, [["a1", "a2", "a3", "a4"], ["a1"], ["a2"]], (2, 1)),
        tminus=Tableau.from_rows(b, [[], ["b1"], ["b1", "b2"], ["b2", "b3"]], (2, 1)),
    )
    return t1, t2, want


def rho_ab_suite(config: TabkitConfig) -> CheckReport:
    t1, t2, want = rho_ab_example()
    t, cls = rho_ab(t1, t2)
    rep = cls.rep
    ok = (
        t == want
        and cls.d == 2
        and rep.inner == Partition((2, 1, 1, 1))
        and rep.to_rows() == [["1"], ["1"], [], [], ["2"], ["3"]]
        and rho_ab_inv(t, cls) == (t1, t2)
    )
    return expect("rho-ab", ok, tableau=t.to_json(), cls=cls.to_json())


def hw_suite(config: TabkitConfig) -> CheckReport:
    lam = GeneralizedPartition.of((4, 3, 2, -2, -3))
    hw = highest_weight_super(lam)
    t = highest_weight_tableau(lam)
    cases = {
        "weight": lambda: expect(
            "hw weight (4,3,2,-2,-3)",
            hw.central == 5
            and hw.diag
            == {"2": 1, "3/2": 2, "1": 2, "1/2": 4, "0": -2, "-1/2": -2, "-1": -1},
            diag=hw.diag,
        ),
        "tableau": lambda: expect(
            "hw tableau (4,3,2,-2,-3)",
            t.tplus.to_rows() == [["1/2"] * 4, ["1", "3/2", "3/2"], ["1", "2"], []]
            and t.tminus.to_rows() == [[], [], [], ["-1", "0"], ["-1/2", "-1/2", "0"]]
            and weight_matches(t, hw),
        ),
        "gl": lambda: expect(
            "hw gl (2,-1)",
            highest_weight_gl((2, -1)).diag == {"1": 2, "0": -1}
            and highest_weight_gl((2, -1)).central == -2,
        ),
    }
    rng = random.Random(config.seed)
    for i in range(50):
        n = rng.randint(1, 4)
        parts = sorted((rng.randint(-4, 4) for _ in range(n)), reverse=True)
        cases[f"random-{i:02d}"] = _hw_case(GeneralizedPartition.of(parts))
    return run_cases("hw", cases, config.threads)


def _hw_case(lam: GeneralizedPartition) -> Case:
    def case() -> CheckReport:
        ok = weight_matches(highest_weight_tableau(lam), highest_weight_super(lam))
        ok = ok and weight_matches(highest_weight_tableau_gl(lam), highest_weight_gl(lam))
        return expect(f"hw {lam}", ok)

    return case


# character identities


def cauchy_suite(config: TabkitConfig) -> CheckReport:
    cases: Dict[str, Case] = {}
    for n, pa, pb in product((1, 2), (0, 1), (0, 1)):
        a = _letters("a", 2, [pa, pa])
        b = _letters("b", 2, [pb, pb])
        cases[f"n{n}-{pa}{pb}"] = (
            lambda n=n, a=a, b=b: cauchy_check(n, a, b, config.window)
        )
    return run_cases("cauchy", cases, config.threads)


def jt_suite(config: TabkitConfig) -> CheckReport:
    d_cap = config.window[0]
    k = config.truncation
    alphabets = [(half_pos_prime(j), half_nonpos_prime(j)) for j in (k, k + 1)]
    cases = {
        str(lam): (lambda lam=lam: jacobi_trudi_stability(lam, alphabets, d_cap))
        for lam in generalized_partitions(2, -2, 2)
    }
    return run_cases("jt", cases, config.threads)


def hexp_suite(config: TabkitConfig) -> CheckReport:
    d_cap = config.window[0]
    a, b = _letters("a", config.truncation), _letters("b", config.truncation)
    cases = {
        str(mu): (lambda mu=mu: h_expansion_check(mu, a, b, d_cap))
        for mu in generalized_partitions(2, -1, 1)
    }
    return run_cases("hexp", cases, config.threads)


# combinatorial identities


def stroomer_suite(config: TabkitConfig) -> CheckReport:
    tableaux = _all_tableaux(interval(2), 2, 2)
    cases: Dict[str, Case] = {}
    for i, t1 in enumerate(tableaux):
        for j, t2 in enumerate(tableaux):

            def case(t1=t1, t2=t2, key=f"{i:03d}-{j:03d}") -> CheckReport:
                ok = all(
                    check_stroomer(t1, t2, p, q)
                    for p in range(t1.outer.part(0), 4)
                    for q in range(t2.outer.part(0), 4)
                )
                return expect(f"stroomer {key}", ok)

            cases[f"{i:03d}-{j:03d}"] = case
    return run_cases("stroomer", cases, config.threads)


def _n_symmetry(lam: Partition) -> CheckReport:
    bad = []
    for mu in partitions_in_box(3, 3):
        if not lam.contains(mu):
            continue
        for nu in partitions_of(lam.size - mu.size, 3):
            k = lr_count(lam, mu, nu)
            if k != lr_count(lam, nu, mu) or k != lr_count(
                lam.conjugate(), mu.conjugate(), nu.conjugate()
            ):
                bad.append(f"{mu},{nu}")
    return expect(f"N symmetry {lam}", not bad, failures=bad)


def symmetry_suite(config: TabkitConfig) -> CheckReport:
    cases: Dict[str, Case] = {
        f"n-{lam}": (lambda lam=lam: _n_symmetry(lam)) for lam in partitions_in_box(3, 3)
    }
    level2 = list(generalized_partitions(2, -1, 1))
    zero = GeneralizedPartition.zero(2)

    def c_symmetric() -> CheckReport:
        bad = [
            f"{lam};{mu};{nu}"
            for lam in level2
            for mu in level2
            for nu in level2
            if c(lam, mu, nu) != c(lam, nu, mu)
        ]
        return expect("c symmetry", not bad, failures=bad)

    def c_unit() -> CheckReport:
        shapes = list(generalized_partitions(2, -2, 2))
        bad = [
            f"{lam};{mu}"
            for lam in shapes
            for mu in shapes
            if c(zero, lam, mu) != (1 if mu == lam.star() else 0)
        ]
        return expect("c unit", not bad, failures=bad)

    def c_hat_star() -> CheckReport:
        ones = list(generalized_partitions(1, -2, 2))
        bad = [
            f"{lam};{mu};{nu}"
            for lam in generalized_partitions(2, -2, 2)
            for mu in ones
            for nu in ones
            if c_hat(lam, mu, nu) != c_hat(lam.star(), mu.star(), nu.star())
        ]
        return expect("c-hat star", not bad, failures=bad)

    def kostka_shift() -> CheckReport:
        bad = []
        for lam in generalized_partitions(2, -1, 2):
            for c1 in range(-3, 4):
                content = (c1, lam.charge - c1)
                shifted = (c1 + 1, lam.charge - c1 + 1)
                if kostka(lam.add_rect(1), shifted) != kostka(lam, content):
                    bad.append(f"{lam};{content}")
        return expect("kostka shift", not bad, failures=bad)

    cases.update(
        {
            "c-symmetry": c_symmetric,
            "c-unit": c_unit,
            "c-hat-star": c_hat_star,
            "kostka": kostka_shift,
        }
    )
    return run_cases("symmetry", cases, config.threads)


# bijections


def _round_trip_insertion(alphabet: GradedAlphabet) -> CheckReport:
    tableaux = _all_tableaux(alphabet, 2, 2)
    bad = 0
    for t, t2 in product(tableaux, tableaux):
        if rho_col_inv(*rho_col(t, t2)) != (t, t2):
            bad += 1
        if rho_row_inv(*rho_row(t, t2)) != (t, t2):
            bad += 1
    return expect("rho_col/rho_row", not bad, pairs=len(tableaux) ** 2, failures=bad)


def _round_trip_multi(alphabet: GradedAlphabet) -> CheckReport:
    rows = [t for k in range(3) for t in enumerate_sst(alphabet, (k,) if k else ())]
    bad = 0
    for r1, r2 in product(rows, rows):
        words = [r1, r2]
        s, rec = multi_insert_row(words)
        if multi_insert_row_inv(s, rec, 2) != words:
            bad += 1
        s, rec = multi_insert_col(words)
        if multi_insert_col_inv(s, rec, 2) != words:
            bad += 1
    return expect("multi_insert", not bad, failures=bad)


def _round_trip_jdt(alphabet: GradedAlphabet) -> CheckReport:
    skew = _skew_tableaux(alphabet, 2, 3)
    bad = sum(1 for t in skew if jdt_inv(*jdt(t)) != t)
    return expect("jdt", not bad, tableaux=len(skew), failures=bad)


def _round_trip_kappa(a: GradedAlphabet, b: GradedAlphabet, window: int) -> CheckReport:
    bad, total = 0, 0
    for charges in ((1, 0), (0, -1), (1, -1), (0, 0)):
        for words in word_tuples(charges, a, b, window):
            total += 1
            if kappa_inv(*kappa(words)) != list(words):
                bad += 1
    return expect("kappa", not bad, tuples=total, failures=bad)


def _round_trip_rho_ab(a: GradedAlphabet, b: GradedAlphabet, window: int) -> CheckReport:
    firsts = [x for lam in ((1,), (0,), (-1,)) for x in enumerate_ab(lam, a, b, window)]
    seconds = firsts + [x for lam in ((1, -1), (0, 0)) for x in enumerate_ab(lam, a, b, window)]
    bad = 0
    for t1, t2 in product(firsts, seconds):
        t, cls = rho_ab(t1, t2)
        if rho_ab_inv(t, cls) != (t1, t2):
            bad += 1
        # any working d above the least gives the same pair
        if rho_ab(t1, t2, d=t1.d + t2.d + 1) != (t, cls):
            bad += 1
    return expect("rho_ab", not bad, pairs=len(firsts) * len(seconds), failures=bad)


def _round_trip_skew(a: GradedAlphabet, b: GradedAlphabet, window: int) -> CheckReport:
    shapes = [
        ((1,), (0,)),
        ((0,), (-1,)),
        ((1, 0), (0, -1)),
        ((1, 1), (1, 0)),
        ((0, -1), (0, -1)),
    ]
    bad, total = 0, 0
    for lam, mu in shapes:
        for x in enumerate_ab(lam, a, b, window, inner_shape=mu):
            total += 1
            if skew_jdt_ab_inv(*skew_jdt_ab(x)) != x:
                bad += 1
    return expect("skew_jdt_ab", not bad, tableaux=total, failures=bad)


def _round_trip_branch(a: GradedAlphabet, b: GradedAlphabet, window: int) -> CheckReport:
    bad, total = 0, 0
    for lam in generalized_partitions(2, -1, 1):
        for x in enumerate_ab(lam, a, b, window):
            total += 1
            if canonicalize(branch_inv(*branch(x))) != x:
                bad += 1
    return expect("branch", not bad, tableaux=total, failures=bad)


# letter parities of the round trip alphabets; the last one only for single tableaux
PARITY_PATTERNS = ((0, 0), (0, 1), (1, 0), (1, 0, 1))


def _roundtrip_cases(parities: Tuple[int, ...], window: int) -> Dict[str, Case]:
    tag = "".join(map(str, parities))
    k = len(parities)
    letters = _letters("a", k, list(parities))
    cases = {
        f"1-insertion-{tag}": lambda: _round_trip_insertion(letters),
        f"2-multi-{tag}": lambda: _round_trip_multi(letters),
        f"3-jdt-{tag}": lambda: _round_trip_jdt(letters),
    }
    if k > 2:
        return cases
    a, b = letters, _letters("b", k, list(parities))
    cases.update(
        {
            f"4-kappa-{tag}": lambda: _round_trip_kappa(a, b, window),
            f"5-rho-ab-{tag}": lambda: _round_trip_rho_ab(a, b, min(window, 1)),
            f"6-skew-{tag}": lambda: _round_trip_skew(a, b, min(window, 1)),
            f"7-branch-{tag}": lambda: _round_trip_branch(a, b, window),
        }
    )
    return cases


def roundtrip_suite(config: TabkitConfig) -> CheckReport:
    window = min(config.window[0], 2)
    cases: Dict[str, Case] = {}
    for parities in PARITY_PATTERNS:
        cases.update(_roundtrip_cases(parities, window))
    return run_cases("roundtrip", cases, config.threads)


def determinism_suite(config: TabkitConfig) -> CheckReport:
    skew = _skew_tableaux(interval(2), 2, 3)
    companions = interval(3)

    def scan_orders() -> CheckReport:
        bad = 0
        for t in skew:
            h = h_tableau(t.inner)
            if switch_full(h, t, "last") != switch_full(h, t, "first"):
                bad += 1
        return expect("scan order", not bad, failures=bad)

    def companion_choice() -> CheckReport:
        bad = 0
        for t in skew:
            j = jdt(t)[0]
            for s in enumerate_sst(companions, t.inner):
                if switch_full(s, t)[0] != j:
                    bad += 1
        return expect("companion choice", not bad, failures=bad)

    return run_cases(
        "determinism", {"orders": scan_orders, "companions": companion_choice}, config.threads
    )


SUITES: Dict[str, Suite] = {
    "example-2-5": switching_example,
    "sigma": sigma_example,
    "example-3-6": complement_example,
    "example-4-2": rsk_example,
    "rho-ab": rho_ab_suite,
    "hw": hw_suite,
    "cauchy": cauchy_suite,
    "jt": jt_suite,
    "hexp": hexp_suite,
    "stroomer": stroomer_suite,
    "symmetry": symmetry_suite,
    "roundtrip": roundtrip_suite,
    "determinism": determinism_suite,
}


def run_suite(name: str, config: TabkitConfig) -> CheckReport:
    if name == "all":
        return merge("all", [SUITES[k](config) for k in SUITES])
    return SUITES[name](config)
