"""Verification suites: brute-force checks of every identity the package
implements, each run per n up to a default or user-supplied bound.

Theorem suites must pass; a failure means a bug and exits with code 1.
Conjecture suites report consistency only; a genuine counterexample would be
a discovery, reported with exit code 3.  Exhaustive enumeration is used for
n <= 7 and seeded random sampling beyond that, so reports are byte-identical
across runs and across worker counts.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Mapping

from . import action, mahonian, patterns, posets, stacksort, trees, words
from .limits import enumeration_bound
from .polynomials import (
    GammaExpansion,
    IntPolynomial,
    NotSymmetricError,
    gamma_expand,
    gessel_expand,
    latex_gamma_form,
    latex_poly,
    q_factorial,
)
from .words import Boundary, Word, des, maj, peak


class UnknownSuiteError(ValueError):
    pass


class UnknownFormatError(ValueError):
    pass


_EXHAUSTIVE_LIMIT = 7
_SAMPLE_WORDS = 1500


@dataclass(frozen=True)
class Instance:
    """Result of one suite at one size."""

    suite: str
    n: int
    ok: bool
    hard_failure: bool
    detail: str
    counterexample: dict | None = None
    data: dict | None = None
    seconds: float = 0.0

    def to_json_dict(self, include_timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "n": self.n,
            "ok": self.ok,
            "hard_failure": self.hard_failure,
            "detail": self.detail,
            "counterexample": _jsonable(self.counterexample),
            "data": _jsonable(self.data),
        }
        if include_timing:
            out["seconds"] = self.seconds
        return out


@dataclass(frozen=True)
class Report:
    suite: str
    kind: str
    statement: str
    max_n: int
    instances: tuple[Instance, ...]

    @property
    def passed(self) -> bool:
        return all(inst.ok for inst in self.instances)

    def exit_code(self) -> int:
        if self.passed:
            return 0
        if self.kind == "theorem" or any(
            not inst.ok and inst.hard_failure for inst in self.instances
        ):
            return 1
        return 3

    def summary_line(self) -> str:
        if self.kind == "theorem":
            if self.passed:
                return f"{self.suite}: PASS for n <= {self.max_n}"
            bad = next(inst for inst in self.instances if not inst.ok)
            return f"{self.suite}: FAIL at n = {bad.n}: {bad.detail}"
        if self.passed:
            return f"{self.suite}: consistent up to n = {self.max_n} (conjecture, not a proof)"
        bad = next(inst for inst in self.instances if not inst.ok)
        if bad.hard_failure:
            return f"{self.suite}: FAIL at n = {bad.n} (proven part violated): {bad.detail}"
        return f"{self.suite}: COUNTEREXAMPLE at n = {bad.n}: {bad.detail}"

    def to_json_dict(self, include_timing: bool = False) -> dict:
        return {
            "suite": self.suite,
            "kind": self.kind,
            "statement": self.statement,
            "max_n": self.max_n,
            "passed": self.passed,
            "summary": self.summary_line(),
            "instances": [i.to_json_dict(include_timing) for i in self.instances],
        }


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, Mapping):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, IntPolynomial):
        return x.to_json_dict()
    return str(x)


def _sample_words(n: int, count: int, tag: str) -> list[Word]:
    rng = random.Random(f"permact:{tag}:{n}")
    base = list(range(1, n + 1))
    out = []
    for _ in range(count):
        rng.shuffle(base)
        out.append(tuple(base))
    return out


def _fail(suite: str, n: int, detail: str, witness: dict | None = None, hard: bool = True) -> Instance:
    return Instance(suite, n, False, hard, detail, witness)


def _pass(suite: str, n: int, detail: str, data: dict | None = None) -> Instance:
    return Instance(suite, n, True, False, detail, None, data)


@lru_cache(maxsize=None)
def eulerian_poly(n: int) -> IntPolynomial:
    """Descent generating polynomial of all permutations of [n]."""
    counts: dict[tuple[int, ...], int] = {}
    for w in words.all_permutations(n):
        e = (des(w),)
        counts[e] = counts.get(e, 0) + 1
    return IntPolynomial.from_counts(("t",), counts)


@lru_cache(maxsize=None)
def involution_descent_poly(n: int) -> IntPolynomial:
    counts: dict[tuple[int, ...], int] = {}
    for w in words.involutions(n):
        e = (des(w),)
        counts[e] = counts.get(e, 0) + 1
    return IntPolynomial.from_counts(("t",), counts)


# -- suite runners (module level so worker processes can pickle them) ---------


def _run_orb(n: int) -> Instance:
    seen: set[Word] = set()
    norbits = 0
    for w in words.all_permutations(n):
        if w in seen:
            continue
        rep = action.orbit(w)
        members = set(rep.members)
        if members & seen:
            return _fail("orb", n, "orbits are not disjoint", {"word": w})
        for m in rep.members:
            if peak(m) != rep.peak:
                return _fail(
                    "orb", n, "peak is not constant on an orbit",
                    {"word": m, "expected_peak": rep.peak},
                )
        seen |= members
        norbits += 1
    if len(seen) != factorial(n):
        return _fail("orb", n, f"orbits cover {len(seen)} of {factorial(n)} words")
    return _pass(
        "orb", n,
        f"{norbits} orbits partition all {len(seen)} permutations; "
        "each descent polynomial equals t^k (1+t)^(n-1-2k)",
    )


def _run_corre(n: int) -> Instance:
    if n <= _EXHAUSTIVE_LIMIT:
        ws: list[Word] = list(words.all_permutations(n))
        regime = "exhaustive"
    else:
        ws = _sample_words(n, _SAMPLE_WORDS, "corre")
        regime = f"{len(ws)} sampled words"
    letters = range(1, n + 1)
    checks = 0
    for w in ws:
        full = action.phi_prime_full(w)
        if des(full) + des(w) != n - 1:
            return _fail("corre", n, "product of all hops does not complement des", {"word": w})
        checks += 1
        for x in letters:
            if action.phi_prime_x(action.phi_prime_x(w, x), x) != w:
                return _fail("corre", n, "hop operator is not an involution", {"word": w, "x": x})
            checks += 1
        for x in letters:
            for y in range(x + 1, n + 1):
                xy = action.phi_prime_x(action.phi_prime_x(w, y), x)
                yx = action.phi_prime_x(action.phi_prime_x(w, x), y)
                if xy != yx:
                    return _fail("corre", n, "hop operators do not commute", {"word": w, "x": x, "y": y})
                checks += 1
    cp = action.class_polys(words.all_permutations(n))
    gam = gamma_expand(eulerian_poly(n), n - 1).gamma
    if cp.b != gam:
        return _fail("corre", n, f"class coefficients {cp.b} != Eulerian gamma {gam}")
    return _pass(
        "corre", n,
        f"involution and commutation verified ({regime}, {checks} checks); "
        f"b_i of the full symmetric group match the Eulerian gamma vector {gam}",
        {"b": list(cp.b)},
    )


def _run_stack_invariance(n: int) -> Instance:
    count = 0
    for w in words.all_permutations(n):
        s = stacksort.stack_sort(w)
        classes = words.classify(w)
        for x in range(1, n + 1):
            if stacksort.stack_sort(action.phi_prime_x(w, x)) != s:
                return _fail("stack-invariance", n, "stack sort changed under a hop", {"word": w, "x": x})
            count += 1
            # the unmodified block swap also fixes S whenever one block is
            # empty, which is every letter class except peaks
            if classes[w.index(x)] is not words.LetterClass.PEAK:
                if stacksort.stack_sort(action.phi_x(w, x)) != s:
                    return _fail("stack-invariance", n, "stack sort changed under a non-peak block swap", {"word": w, "x": x})
                count += 1
    return _pass(
        "stack-invariance", n,
        f"S is constant under every hop and every non-peak block swap ({count} pairs)",
    )


def _run_slides(n: int) -> Instance:
    for w in words.all_permutations(n):
        if stacksort.stack_sort_via_slides(w) != stacksort.stack_sort(w):
            return _fail("slides-equal-recursive", n, "slide composition differs from recursive sort", {"word": w})
    return _pass(
        "slides-equal-recursive", n,
        f"slide composition equals the recursive operator on all {factorial(n)} words",
    )


def _run_genbona(n: int) -> Instance:
    depths = stacksort.r_sortable_classes(n)
    for w, dep in depths.items():
        for x in range(1, n + 1):
            dv = depths[action.phi_prime_x(w, x)]
            # sort depth is preserved except that the identity (depth 0) may
            # trade places with depth-1 words, which moves no set S_n^r, r >= 1
            if dv != dep and max(dv, 1) != max(dep, 1):
                return _fail(
                    "genbona", n, "sort depth changed by more than the 0/1 identity swap",
                    {"word": w, "x": x, "depth": dep, "image_depth": dv},
                )
    bs = {}
    for r in range(1, n):
        T = [w for w, dep in depths.items() if dep <= r]
        cp = action.class_polys(T)
        if any(b < 0 for b in cp.b):
            return _fail("genbona", n, f"negative b_i for r = {r}")
        bs[r] = list(cp.b)
        if r == 1:
            _, gam = patterns.narayana(n)
            if cp.b != gam.gamma:
                return _fail("genbona", n, f"b_i of 1-sortable words {cp.b} != Narayana gamma {gam.gamma}")
        if r == n - 1:
            gam_e = gamma_expand(eulerian_poly(n), n - 1).gamma
            if cp.b != gam_e:
                return _fail("genbona", n, f"b_i of all words {cp.b} != Eulerian gamma {gam_e}")
    return _pass(
        "genbona", n,
        f"r-stack-sortable sets closed under the action for r >= 1; "
        f"nonnegative integer b_i for every r in 1..{max(1, n - 1)}",
        {"b_by_r": bs},
    )


def _run_narayana(n: int) -> Instance:
    poly, gam = patterns.narayana(n)
    avs = list(patterns.avoiding_permutations(n))
    catalan = comb(2 * n, n) // (n + 1)
    if len(avs) != catalan:
        return _fail("narayana", n, f"{len(avs)} avoiders != Catalan number {catalan}")
    counts: dict[tuple[int, ...], int] = {}
    peaks: dict[int, int] = {}
    for w in avs:
        e = (des(w),)
        counts[e] = counts.get(e, 0) + 1
        pk = peak(w)
        peaks[pk] = peaks.get(pk, 0) + 1
    W = IntPolynomial.from_counts(("t",), counts)
    if W != poly:
        return _fail("narayana", n, "descent polynomial of avoiders differs from the closed form")
    for k in range(0, (n - 1) // 2 + 1):
        g = gam.gamma[k] if k < len(gam.gamma) else 0
        if peaks.get(k, 0) != g << (n - 1 - 2 * k):
            return _fail(
                "narayana", n,
                f"peak count at k = {k} is {peaks.get(k, 0)}, formula gives {g << (n - 1 - 2 * k)}",
            )
    return _pass(
        "narayana", n,
        f"both closed forms match over {len(avs)} avoiders; gamma = {gam.gamma}",
        {"gamma": list(gam.gamma)},
    )


def _run_constant_patterns(n: int) -> Instance:
    stats: dict[Word, tuple[int, int]] = {}
    for w in words.all_permutations(n):
        pair = (patterns.count_13_2(w), patterns.count_2_31(w))
        if pair != (patterns.count_13_2_via_runs(w), patterns.count_2_31_via_runs(w)):
            return _fail("constant-patterns", n, "direct and run-based pattern counts disagree", {"word": w})
        stats[w] = pair
    for w, pair in stats.items():
        for x in range(1, n + 1):
            if stats[action.phi_prime_x(w, x)] != pair:
                return _fail("constant-patterns", n, "pattern counts changed under a hop", {"word": w, "x": x})
    return _pass(
        "constant-patterns", n,
        f"(13-2) and (2-31) constant on all orbits ({len(stats) * n} hops checked), "
        "and both counting routes agree",
    )


def _run_pq_symmetry(n: int) -> Instance:
    if not patterns.check_pq_symmetry(n):
        return _fail("pq-symmetry", n, "A_n(p,q,t) != A_n(q,p,t)")
    bs = []
    for i in range(0, (n - 1) // 2 + 1):
        b = patterns.bni_polynomial(n, i)
        if any(c < 0 for c in b.terms.values()):
            return _fail("pq-symmetry", n, f"b_(n,{i}) has a negative coefficient")
        bs.append(b)
    return _pass(
        "pq-symmetry", n,
        "A_n(p,q,t) is symmetric in p and q; all b_(n,i)(p,q) are integral with "
        "nonnegative coefficients",
        {"b": [b.to_json_dict() for b in bs]},
    )


def _run_mahonian_s1s2(n: int) -> Instance:
    if not patterns.check_mahonian(n):
        return _fail("mahonian-s1s2", n, "a specialization differs from the q-factorial")
    return _pass("mahonian-s1s2", n, "A_n(q,q^2,q) = A_n(q^2,q,q) = [n]_q!")


def _run_wp(n: int) -> Instance:
    if n <= 5:
        corpus = [P for P in posets.all_canonical_posets(n) if len(P) == n]
        regime = "exhaustive"
    else:
        corpus = posets.sampled_canonical_posets(n, 20, seed=n * 7919)
        regime = f"{len(corpus)} sampled"
    for P in corpus:
        exts = posets.linear_extensions(P)
        wpp = posets.wp_polynomial(P)
        labels = sorted(P.labels.values())
        if len(P) <= 6:
            for pi in exts:
                for x in labels:
                    if posets.psi_x_poset(P, posets.psi_x_poset(P, pi, x), x) != pi:
                        return _fail("wp", n, "poset hop is not an involution", {"poset": P.to_json_dict(), "pi": pi, "x": x})
                for ai in range(len(labels)):
                    for bi in range(ai + 1, len(labels)):
                        x, y = labels[ai], labels[bi]
                        xy = posets.psi_x_poset(P, posets.psi_x_poset(P, pi, y), x)
                        yx = posets.psi_x_poset(P, posets.psi_x_poset(P, pi, x), y)
                        if xy != yx:
                            return _fail("wp", n, "poset hops do not commute", {"poset": P.to_json_dict(), "pi": pi, "x": x, "y": y})
        seen: set[Word] = set()
        total = IntPolynomial.zero(("t",))
        for pi in exts:
            if pi in seen:
                continue
            rep = posets.poset_orbit(P, pi)
            if posets.sign_grading(P).r == 0:
                for v in rep.members:
                    if peak(v, Boundary.ZERO) != des(rep.rep):
                        return _fail("wp", n, "rank-0 peak not constant on an orbit", {"poset": P.to_json_dict(), "pi": v})
            seen |= set(rep.members)
            total = total + rep.descent_poly
        if seen != set(exts):
            return _fail("wp", n, "orbits do not partition the linear extensions", {"poset": P.to_json_dict()})
        if total != wpp.W:
            return _fail("wp", n, "orbit polynomials do not sum to W(P;t)", {"poset": P.to_json_dict()})
    return _pass(
        "wp", n,
        f"{len(corpus)} canonically labeled posets of size {n} ({regime}): orbit "
        "decomposition, dual-route a_i, and hop involution/commutation all verified",
    )


def _run_psiphi(n: int) -> Instance:
    for w in words.all_permutations(n):
        v = trees.psi(w)
        if trees.phi_cap(v) != w or trees.psi(trees.phi_cap(w)) != w:
            return _fail("psiphi", n, "the two products of hops are not mutually inverse", {"word": w})
        if trees.odd_set(w) != trees.redge_set(v):
            return _fail("psiphi", n, "odd right-depth letters do not map to right children", {"word": w})
        if trees.redge_set(w) != trees.odd_set(trees.phi_cap(w)):
            return _fail("psiphi", n, "right children do not map back to odd right-depth letters", {"word": w})
    return _pass("psiphi", n, f"inverse pair and the odd/right-edge exchange hold on all {factorial(n)} words")


def _run_psi_prime(n: int) -> Instance:
    depths = stacksort.r_sortable_classes(n)
    images: dict[Word, Word] = {}
    for w in words.all_permutations(n):
        v = trees.psi_prime(w)
        if v != trees.psi_prime_recursive(w):
            return _fail("psi-prime", n, "direct and recursive constructions disagree", {"word": w})
        if des(v) != trees.veh(w):
            return _fail("psi-prime", n, "des of the image differs from veh", {"word": w})
        images[w] = v
    if len(set(images.values())) != factorial(n):
        return _fail("psi-prime", n, "the map is not a bijection")
    for r in range(1, n):
        sub = {w for w, dep in depths.items() if dep <= r}
        if {images[w] for w in sub} != sub:
            return _fail("psi-prime", n, f"the {r}-stack-sortable words are not preserved")
    return _pass(
        "psi-prime", n,
        "bijection with des(image) = veh(word), preserving every r-stack-sortable set",
    )


def _run_kreweras(n: int) -> Instance:
    image = []
    for w in patterns.avoiding_permutations(n):
        p = trees.dyck_path(w)
        even_up, double_up = trees.kreweras_stats(p)
        if even_up != trees.veh(w) or double_up != des(w):
            return _fail("kreweras", n, "(veh, des) does not translate to the path statistics", {"word": w, "path": p})
        image.append(p)
    all_paths = list(trees.all_dyck_paths(n))
    if sorted(image) != sorted(all_paths):
        return _fail("kreweras", n, "pre-order reading is not a bijection onto Dyck paths")
    dist_even: dict[int, int] = {}
    dist_double: dict[int, int] = {}
    for p in all_paths:
        even_up, double_up = trees.kreweras_stats(p)
        dist_even[even_up] = dist_even.get(even_up, 0) + 1
        dist_double[double_up] = dist_double.get(double_up, 0) + 1
    if dist_even != dist_double:
        return _fail("kreweras", n, "even-height up-steps and double up-steps are not equidistributed")
    return _pass(
        "kreweras", n,
        f"bijection onto all {len(all_paths)} Dyck paths; statistics translate and are equidistributed",
    )


def _run_veh_altsum(n: int) -> Instance:
    k_max = max(1, n - 1)
    for w in patterns.avoiding_permutations(n):
        ds = words.dec_subseq_counts(w, k_max)
        total = sum((-2) ** (i - 1) * ds[i - 1] for i in range(1, k_max + 1))
        if total != trees.veh(w):
            return _fail("veh-altsum", n, "alternating sum differs from veh", {"word": w, "d": ds})
    return _pass("veh-altsum", n, "veh = d_1 - 2 d_2 + 4 d_3 - ... on all 231-avoiders")


def _run_evt(n: int) -> Instance:
    images: set[Word] = set()
    for w in words.all_permutations(n):
        v = mahonian.theta(w)
        if set(mahonian.ev_set(v)) != words.descent_set(w):
            return _fail("evt", n, "even-height positions of the image differ from the descent set", {"word": w, "image": v})
        images.add(v)
    if len(images) != factorial(n):
        return _fail("evt", n, "the transformation is not a bijection")
    return _pass("evt", n, f"EV(theta(w)) = Des(w) for all {factorial(n)} words; theta is a bijection")


def _run_euler_mahonian(n: int) -> Instance:
    lhs: dict[tuple[int, int], int] = {}
    rhs: dict[tuple[int, int], int] = {}
    for w in words.all_permutations(n):
        a = (mahonian.veh_prime(w), mahonian.siveh(w))
        b = (des(w), maj(w))
        lhs[a] = lhs.get(a, 0) + 1
        rhs[b] = rhs.get(b, 0) + 1
    if lhs != rhs:
        return _fail("euler-mahonian", n, "joint distributions differ")
    return _pass(
        "euler-mahonian", n,
        "(veh', siveh) is jointly equidistributed with (des, maj) "
        f"over all {factorial(n)} words",
    )


def _run_guo_zeng(n: int) -> Instance:
    poly = involution_descent_poly(n)
    try:
        ge = gamma_expand(poly, n - 1)
    except NotSymmetricError:
        return _fail("guo-zeng", n, "involution descent polynomial is not symmetric")
    if any(g < 0 for g in ge.gamma):
        return _fail(
            "guo-zeng", n, f"negative gamma entry in {ge.gamma}",
            {"gamma": list(ge.gamma)}, hard=False,
        )
    return _pass("guo-zeng", n, f"gamma vector {ge.gamma} is nonnegative", {"gamma": list(ge.gamma)})


def _run_gessel(n: int) -> Instance:
    perms = list(words.all_permutations(n))
    inverses = {w: words.perm_inverse(w) for w in perms}
    by_des: dict[int, IntPolynomial] = {}
    for tau in perms:
        counts: dict[tuple[int, ...], int] = {}
        for pi in perms:
            e = (des(pi), des(words.perm_compose(inverses[pi], tau)))
            counts[e] = counts.get(e, 0) + 1
        F = IntPolynomial.from_counts(("s", "t"), counts)
        d = des(tau)
        if d in by_des:
            if by_des[d] != F:
                return _fail(
                    "gessel", n,
                    "joint distribution depends on more than the descent number",
                    {"tau": tau},
                )
        else:
            by_des[d] = F
    table = {}
    for d in sorted(by_des):
        ge = gessel_expand(by_des[d], n)
        negs = ge.negative_entries()
        if negs:
            return _fail(
                "gessel", n, f"negative coefficients for descent class {d}",
                {"des": d, "negative": negs}, hard=False,
            )
        table[str(d)] = [[k, j, c] for (k, j), c in sorted(ge.coeffs.items())]
    return _pass(
        "gessel", n,
        f"all c(k,j) are nonnegative integers for the {len(by_des)} descent classes, "
        "with exact reconstruction",
        {"c_by_descent_class": table},
    )


def _run_divisibility(n: int) -> Instance:
    results = patterns.check_divisibility(n)
    failed = sorted(i for i, ok in results.items() if not ok)
    if failed:
        return _fail(
            "divisibility", n, f"(p+q)^i does not divide b_(n,i) for i in {failed}",
            {"failed_i": failed}, hard=False,
        )
    return _pass(
        "divisibility", n,
        f"(p+q)^i divides b_(n,i) exactly for every i in 0..{max(results)}",
    )


def _run_brenti(n: int) -> Instance:
    coeffs = involution_descent_poly(n).coeffs_list()
    coeffs += [0] * (n - len(coeffs))
    if coeffs != coeffs[::-1]:
        return _fail("brenti-logconcave", n, f"coefficients {coeffs} are not symmetric")
    rises = all(coeffs[i] <= coeffs[i + 1] for i in range((n - 1) // 2))
    falls = all(coeffs[i] >= coeffs[i + 1] for i in range((n - 1) // 2, n - 1))
    if not (rises and falls):
        return _fail("brenti-logconcave", n, f"coefficients {coeffs} are not unimodal")
    nz = [i for i, c in enumerate(coeffs) if c]
    if nz and any(coeffs[i] == 0 for i in range(nz[0], nz[-1] + 1)):
        return _fail(
            "brenti-logconcave", n, f"internal zero in {coeffs}",
            {"coeffs": coeffs}, hard=False,
        )
    for i in range(1, n - 1):
        if coeffs[i] ** 2 < coeffs[i - 1] * coeffs[i + 1]:
            return _fail(
                "brenti-logconcave", n,
                f"log-concavity fails at position {i} of {coeffs}",
                {"coeffs": coeffs, "i": i}, hard=False,
            )
    return _pass(
        "brenti-logconcave", n,
        "involution descent counts are symmetric, unimodal, and log-concave "
        "with no internal zeros",
        {"coeffs": coeffs},
    )


@dataclass(frozen=True)
class Suite:
    name: str
    kind: str
    statement: str
    default_max_n: int
    runner: Callable[[int], Instance]
    min_n: int = 1


SUITES: dict[str, Suite] = {
    s.name: s
    for s in [
        Suite("orb", "theorem",
              "every orbit descent polynomial is t^k (1+t)^(n-1-2k), k the common peak count",
              8, _run_orb),
        Suite("corre", "theorem",
              "the hops are commuting involutions; invariant sets decompose with b_i = 2^(-n+1+2i) peak counts",
              9, _run_corre),
        Suite("stack-invariance", "theorem",
              "stack sorting is constant on orbits",
              7, _run_stack_invariance),
        Suite("slides-equal-recursive", "theorem",
              "composing slides at the original descents, rightmost first, equals the recursive stack sort",
              7, _run_slides),
        Suite("genbona", "theorem",
              "r-stack-sortable sets are action-closed (r >= 1) with nonnegative integer b_i",
              8, _run_genbona),
        Suite("narayana", "theorem",
              "231-avoiders have the Narayana descent polynomial with gamma_k = C(2k,k) C(n-1,2k) / (k+1)",
              9, _run_narayana),
        Suite("constant-patterns", "theorem",
              "(13-2) and (2-31) are constant on orbits",
              8, _run_constant_patterns),
        Suite("pq-symmetry", "theorem",
              "A_n(p,q,t) = A_n(q,p,t) and each b_(n,i)(p,q) has nonnegative integer coefficients",
              7, _run_pq_symmetry),
        Suite("mahonian-s1s2", "theorem",
              "A_n(q,q^2,q) = A_n(q^2,q,q) = [n]_q!",
              7, _run_mahonian_s1s2),
        Suite("wp", "theorem",
              "linear-extension orbits give W(P;t) = sum a_i t^i (1+t)^(d-2i) with peak-count a_i",
              5, _run_wp),
        Suite("psiphi", "theorem",
              "the products of hops over odd-depth letters and over right children are mutually inverse",
              7, _run_psiphi),
        Suite("psi-prime", "theorem",
              "des composed with the odd-letter hop product equals veh, bijectively on every sortable class",
              7, _run_psi_prime),
        Suite("kreweras", "theorem",
              "the pre-order path sends (veh, des) to (even-height up-steps, double up-steps), equidistributed",
              9, _run_kreweras),
        Suite("veh-altsum", "theorem",
              "on 231-avoiders, veh = sum of (-2)^(i-1) d_i over decreasing subsequence counts",
              8, _run_veh_altsum),
        Suite("evt", "theorem",
              "even-height positions of theta(w) equal the descent set of w",
              8, _run_evt),
        Suite("euler-mahonian", "theorem",
              "(veh', siveh) is jointly equidistributed with (des, maj)",
              8, _run_euler_mahonian),
        Suite("guo-zeng", "conjecture",
              "the involution descent polynomial is gamma-nonnegative",
              10, _run_guo_zeng),
        Suite("gessel", "conjecture",
              "the descents/inverse-descents joint polynomial has nonnegative c(k,j) in the (s+t)^k (st)^j (1+st)^(n-k-1-2j) basis",
              6, _run_gessel),
        Suite("divisibility", "conjecture",
              "(p+q)^i divides b_(n,i)(p,q)",
              7, _run_divisibility),
        Suite("brenti-logconcave", "conjecture",
              "involution descent counts are log-concave with no internal zeros",
              10, _run_brenti),
    ]
}


def _run_instance(name: str, n: int) -> Instance:
    suite = SUITES[name]
    start = time.perf_counter()
    try:
        inst = suite.runner(n)
    except Exception as exc:
        inst = Instance(name, n, False, True, f"error: {exc!r}")
    return replace(inst, seconds=time.perf_counter() - start)


def _run_instance_job(args: tuple[str, int]) -> Instance:
    return _run_instance(*args)


def run_suite(name: str, max_n: int | None = None, jobs: int = 1) -> Report:
    """Run one suite for every n from its minimum up to max_n (clamped by
    the PERMACT_MAX_N safety rail)."""
    if name not in SUITES:
        raise UnknownSuiteError(
            f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}"
        )
    suite = SUITES[name]
    top = suite.default_max_n if max_n is None else max_n
    top = min(top, enumeration_bound())
    ns = list(range(suite.min_n, top + 1))
    if jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            instances = tuple(pool.map(_run_instance_job, [(name, n) for n in ns]))
    else:
        instances = tuple(_run_instance(name, n) for n in ns)
    return Report(name, suite.kind, suite.statement, top, instances)


# -- report serialization ------------------------------------------------------


def _latex_escape(text: str) -> str:
    for a, b in [("&", r"\&"), ("%", r"\%"), ("#", r"\#"), ("_", r"\_")]:
        text = text.replace(a, b)
    return text


def report_emit(report: Report, fmt: str, include_timing: bool = False) -> bytes:
    """Serialize a report deterministically as json, csv, or latex."""
    if fmt == "json":
        text = json.dumps(report.to_json_dict(include_timing), indent=2, sort_keys=True)
        return (text + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        fields = ["suite", "kind", "n", "ok", "hard_failure", "detail", "counterexample", "data"]
        if include_timing:
            fields.append("seconds")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields)
        for inst in report.instances:
            row = [
                report.suite,
                report.kind,
                inst.n,
                inst.ok,
                inst.hard_failure,
                inst.detail,
                json.dumps(_jsonable(inst.counterexample), sort_keys=True),
                json.dumps(_jsonable(inst.data), sort_keys=True),
            ]
            if include_timing:
                row.append(f"{inst.seconds:.3f}")
            writer.writerow(row)
        return buf.getvalue().encode()
    if fmt == "latex":
        lines = [
            r"\begin{tabular}{rll}",
            rf"\multicolumn{{3}}{{l}}{{{_latex_escape(report.suite)}: {_latex_escape(report.statement)}}}\\",
            r"$n$ & status & detail \\ \hline",
        ]
        for inst in report.instances:
            if inst.ok:
                status = "pass" if report.kind == "theorem" else "consistent"
            else:
                status = "FAIL" if inst.hard_failure or report.kind == "theorem" else "counterexample"
            lines.append(f"{inst.n} & {status} & {_latex_escape(inst.detail)} \\\\")
        lines.append(r"\end{tabular}")
        return ("\n".join(lines) + "\n").encode()
    raise UnknownFormatError(f"unknown report format {fmt!r}")


# -- polynomial tables ----------------------------------------------------------


def build_table(kind: str, n: int) -> tuple[list[str], list[list[str]]]:
    """Rows (as strings) for the named polynomial family, sizes 1..n."""
    if kind == "eulerian":
        header = ["n", "polynomial", "gamma"]
        rows = []
        for m in range(1, n + 1):
            poly = eulerian_poly(m)
            gam = gamma_expand(poly, m - 1)
            rows.append([str(m), str(poly), " ".join(map(str, gam.gamma))])
        return header, rows
    if kind == "apq":
        header = ["n", "gamma_form", "b"]
        rows = []
        for m in range(1, n + 1):
            bs = [patterns.bni_polynomial(m, i) for i in range((m - 1) // 2 + 1)]
            rows.append([
                str(m),
                latex_gamma_form(bs, m - 1),
                "; ".join(str(b) for b in bs),
            ])
        return header, rows
    if kind == "narayana":
        header = ["n", "polynomial", "gamma"]
        rows = []
        for m in range(1, n + 1):
            poly, gam = patterns.narayana(m)
            rows.append([str(m), str(poly), " ".join(map(str, gam.gamma))])
        return header, rows
    if kind == "involution":
        header = ["n", "polynomial", "gamma"]
        rows = []
        for m in range(1, n + 1):
            poly = involution_descent_poly(m)
            gam = gamma_expand(poly, m - 1)
            rows.append([str(m), str(poly), " ".join(map(str, gam.gamma))])
        return header, rows
    raise UnknownFormatError(f"unknown table kind {kind!r}")


def emit_table(header: list[str], rows: list[list[str]], fmt: str) -> bytes:
    if fmt == "json":
        data = [dict(zip(header, row)) for row in rows]
        return (json.dumps(data, indent=2, sort_keys=True) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue().encode()
    if fmt == "latex":
        cols = "l" * len(header)
        lines = [rf"\begin{{tabular}}{{{cols}}}"]
        lines.append(" & ".join(_latex_escape(h) for h in header) + r" \\ \hline")
        for row in rows:
            lines.append(" & ".join(_latex_escape(c) for c in row) + r" \\")
        lines.append(r"\end{tabular}")
        return ("\n".join(lines) + "\n").encode()
    raise UnknownFormatError(f"unknown table format {fmt!r}")
