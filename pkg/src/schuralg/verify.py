"""Named verification suites with deterministic, witness-carrying reports.

Each suite cross-checks one structural claim at desk scale against an
independent oracle: orbit counting by union-find for dimensions, Kostka
sums for codeterminant counts, exact ranks for spanning, elementwise
comparisons for identities.  Reports list one check per parameter slice
with a witness for the first failure; report payloads contain no
timestamps, so their JSON is byte-identical across runs (wall time rides
on the object, off the payload).
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import codet as codet_mod
from . import enveloping as env
from . import schur as schur_mod
from . import udot as udot_mod
from .exact_linalg import CoordinateSolver, exact_rank, unimodular_change
from .weights import (
    col_sums,
    compositions,
    dominance_leq,
    is_dominant,
    kostka,
    margin_matrices,
    perm_compose,
    row_sums,
    words_of_weight,
)

__all__ = [
    "Check",
    "VerificationReport",
    "SUITES",
    "run_suite",
    "suite_gbasis",
    "suite_codet",
    "suite_zbas",
    "suite_idem_lemma",
    "suite_cellular",
    "suite_relations",
    "suite_psi",
    "suite_gl2",
    "suite_sym_quotient",
    "suite_properties",
]


@dataclass
class Check:
    id: str
    passed: bool
    witness: str | None = None


@dataclass
class VerificationReport:
    suite: str
    params: dict
    checks: list[Check] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check_id: str, passed: bool, witness: str | None = None) -> None:
        self.checks.append(Check(check_id, passed, witness if not passed else None))

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "checks": [
                {"id": c.id, "passed": c.passed, "witness": c.witness}
                for c in self.checks
            ],
            "passed": self.passed,
        }

    def to_csv(self) -> str:
        lines = ["check,passed"]
        for c in self.checks:
            lines.append(f"{c.id},{str(c.passed).lower()}")
        return "\n".join(lines) + "\n"


def _timed(fn: Callable[[VerificationReport], None], report: VerificationReport) -> VerificationReport:
    start = time.perf_counter()
    fn(report)
    report.wall_time = time.perf_counter() - start
    return report


def _orbit_count(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of diagonal place-permutation orbits on pairs of words of
    the two weights, by union-find over adjacent transpositions.  An
    independent oracle for block dimensions."""
    r = sum(lam)
    lefts = words_of_weight(lam)
    rights = words_of_weight(mu)
    pairs = [(l, k) for l in lefts for k in rights]
    index = {p: i for i, p in enumerate(pairs)}
    parent = list(range(len(pairs)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for (l, k), i in index.items():
        for t in range(r - 1):
            l2 = l[:t] + (l[t + 1], l[t]) + l[t + 2:]
            k2 = k[:t] + (k[t + 1], k[t]) + k[t + 2:]
            union(i, index[(l2, k2)])
    return len({find(i) for i in range(len(pairs))})


def suite_gbasis(n_max: int = 3, r_max: int = 3) -> VerificationReport:
    """Orbit-basis blocks: count, independence, and spanning, with the
    dimension confirmed by union-find orbit counting."""
    report = VerificationReport("gbasis", {"n_max": n_max, "r_max": r_max})

    def run(rep: VerificationReport) -> None:
        for n in range(1, n_max + 1):
            for r in range(0, r_max + 1):
                ok = True
                witness = None
                for lam in compositions(n, r):
                    for mu in compositions(n, r):
                        margins = margin_matrices(lam, mu)
                        basis = schur_mod.hom_basis(lam, mu)
                        rank = exact_rank(
                            [schur_mod.endo_of(x).entries for x in basis]
                        )
                        orbits = _orbit_count(lam, mu)
                        if not (len(margins) == len(basis) == rank == orbits):
                            ok = False
                            witness = (
                                f"lam={lam} mu={mu}: margins={len(margins)} "
                                f"basis={len(basis)} rank={rank} orbits={orbits}"
                            )
                            break
                    if not ok:
                        break
                rep.add(f"block-dims-n{n}-r{r}", ok, witness)

    return _timed(run, report)


def suite_codet(n_max: int = 3, r_max: int = 3) -> VerificationReport:
    """Codeterminant bases: Kostka-sum count and exact spanning rank."""
    report = VerificationReport("codet", {"n_max": n_max, "r_max": r_max})

    def run(rep: VerificationReport) -> None:
        for n in range(1, n_max + 1):
            for r in range(0, r_max + 1):
                ok = True
                witness = None
                for lam in compositions(n, r):
                    for mu in compositions(n, r):
                        cells = codet_mod.codet_basis(lam, mu)
                        dim = len(margin_matrices(lam, mu))
                        ksum = codet_mod.codet_count(lam, mu)
                        rank = exact_rank([c.value.terms for c in cells])
                        if not (len(cells) == dim == ksum == rank):
                            ok = False
                            witness = (
                                f"lam={lam} mu={mu}: cells={len(cells)} dim={dim} "
                                f"kostka-sum={ksum} rank={rank}"
                            )
                            break
                    if not ok:
                        break
                rep.add(f"codet-basis-n{n}-r{r}", ok, witness)

    return _timed(run, report)


def suite_zbas(n_max: int = 3, r_max: int = 3) -> VerificationReport:
    """Divided-monomial images: both arrangements give bases related to
    the orbit basis by unimodular integer matrices, and the middle-
    idempotent arrangements agree with the outer-truncated ones."""
    report = VerificationReport("zbas", {"n_max": n_max, "r_max": r_max})

    def run(rep: VerificationReport) -> None:
        for n in range(1, n_max + 1):
            for r in range(0, r_max + 1):
                ok = True
                witness = None
                for lam in compositions(n, r):
                    for mu in compositions(n, r):
                        margins = margin_matrices(lam, mu)
                        xi = [x.terms for x in schur_mod.hom_basis(lam, mu)]
                        fe = [env.pbw_image(a, "fe") for a in margins]
                        ef = [env.pbw_image(a, "ef") for a in margins]
                        for a, x in zip(margins, fe):
                            if env.pbw_image(a, "fe-middle") != x:
                                ok = False
                                witness = f"fe-middle mismatch at {a}"
                                break
                        if ok:
                            for a, x in zip(margins, ef):
                                if env.pbw_image(a, "ef-middle") != x:
                                    ok = False
                                    witness = f"ef-middle mismatch at {a}"
                                    break
                        if ok and not all(x.integral() for x in fe + ef):
                            ok = False
                            witness = f"non-integer coefficients at lam={lam} mu={mu}"
                        if ok and not unimodular_change([x.terms for x in fe], xi):
                            ok = False
                            witness = f"fe family not unimodular at lam={lam} mu={mu}"
                        if ok and not unimodular_change([x.terms for x in ef], xi):
                            ok = False
                            witness = f"ef family not unimodular at lam={lam} mu={mu}"
                        if not ok:
                            break
                    if not ok:
                        break
                rep.add(f"pbw-images-n{n}-r{r}", ok, witness)

    return _timed(run, report)


def suite_idem_lemma(n_max: int = 3, r_max: int = 3) -> VerificationReport:
    """Binomial diagonal products act as weight idempotents."""
    report = VerificationReport("idem-lemma", {"n_max": n_max, "r_max": r_max})

    def run(rep: VerificationReport) -> None:
        for n in range(1, n_max + 1):
            for r in range(0, r_max + 1):
                ok = True
                witness = None
                for lam in compositions(n, r):
                    if not env.verify_weight_idempotent(lam, r):
                        ok = False
                        witness = f"lam={lam}"
                        break
                rep.add(f"binomial-idempotent-n{n}-r{r}", ok, witness)

    return _timed(run, report)


def suite_cellular(
    n: int = 3, r: int = 3, lam: Sequence[int] | None = None
) -> VerificationReport:
    """Cellular axioms for diagonal weight blocks, plus the dominance
    filtration being a two-sided ideal chain."""
    params = {"n": n, "r": r, "lambda": list(lam) if lam is not None else None}
    report = VerificationReport("cellular", params)

    def run(rep: VerificationReport) -> None:
        weights_list = [tuple(lam)] if lam is not None else compositions(n, r)
        for w in weights_list:
            cell_report = codet_mod.cell_datum_check(w)
            witness = None
            if not cell_report.passed:
                witness = str(cell_report.witnesses[:1])
            rep.add(f"cell-axioms-{'-'.join(map(str, w))}", cell_report.passed, witness)
            rep.add(
                f"cell-filtration-{'-'.join(map(str, w))}",
                _filtration_is_ideal(w),
                None,
            )

    return _timed(run, report)


def _filtration_is_ideal(lam: Sequence[int]) -> bool:
    cells = codet_mod.codet_basis(lam, lam)
    if not cells:
        return True
    solver = CoordinateSolver([c.value.terms for c in cells])
    shapes = sorted({c.shape for c in cells})
    basis = schur_mod.hom_basis(lam, lam)
    for nu in shapes:
        inside = [
            k for k, c in enumerate(cells) if dominance_leq(nu, c.shape)
        ]
        inside_set = set(inside)
        for k in inside:
            for a in basis:
                for prod in (
                    schur_mod.schur_multiply(a, cells[k].value),
                    schur_mod.schur_multiply(cells[k].value, a),
                ):
                    coords = solver.coords(prod.terms)
                    if coords is None:
                        return False
                    if any(
                        x != 0 and idx not in inside_set
                        for idx, x in enumerate(coords)
                    ):
                        return False
    return True


def suite_relations(n_max: int = 3, window: int = 3) -> VerificationReport:
    """Chevalley commutator against the Cartan pairing on all integer
    weights with entries in [-window, window]."""
    report = VerificationReport("relations", {"n_max": n_max, "window": window})

    def run(rep: VerificationReport) -> None:
        for n in range(2, n_max + 1):
            ok = True
            witness = None
            span = range(-window, window + 1)
            for lam in itertools.product(span, repeat=n):
                for i in range(1, n):
                    for j in range(1, n):
                        if not _commutator_holds(lam, i, j):
                            ok = False
                            witness = f"lam={lam} i={i} j={j}"
                            break
                    if not ok:
                        break
                if not ok:
                    break
            rep.add(f"commutator-n{n}", ok, witness)

    return _timed(run, report)


def _commutator_holds(lam: Sequence[int], i: int, j: int) -> bool:
    n = len(lam)
    lam = tuple(lam)
    fj = udot_mod.divided_generators(j, 1, lam, "f")
    ei_after = udot_mod.divided_generators(i, 1, fj.left, "e")
    t1 = udot_mod.udot_multiply(ei_after, fj)
    ei = udot_mod.divided_generators(i, 1, lam, "e")
    fj_after = udot_mod.divided_generators(j, 1, ei.left, "f")
    t2 = udot_mod.udot_multiply(fj_after, ei)
    diff = t1 - t2
    if i != j:
        return diff.is_zero
    scalar = lam[i - 1] - lam[i]
    expected = udot_mod.UdotElement(
        n, lam, lam, {(0,) * len(udot_mod.offdiag_cells(n)): Fraction(scalar)}
    )
    return diff == expected


def suite_psi(n_max: int = 3, r_max: int = 3, seed: int = 2024) -> VerificationReport:
    """Degree truncation: unit compatibility, surjectivity with the exact
    rank reached by degree r, zero off the composition cone, and
    multiplicativity on random block pairs."""
    report = VerificationReport("psi", {"n_max": n_max, "r_max": r_max, "seed": seed})

    def run(rep: VerificationReport) -> None:
        rng = random.Random(seed)
        for n in range(1, n_max + 1):
            for r in range(0, r_max + 1):
                ok = True
                witness = None
                lams = compositions(n, r)
                for lam in lams:
                    u = udot_mod.udot_element(lam, lam, (0,) * n * (n - 1))
                    if udot_mod.to_schur(u, r) != schur_mod.idempotent(lam):
                        ok = False
                        witness = f"unit image at lam={lam}"
                        break
                    for mu in lams:
                        basis = udot_mod.udot_basis_upto(lam, mu, r)
                        images = [udot_mod.to_schur(x, r).terms for x in basis]
                        dim = len(margin_matrices(lam, mu))
                        if exact_rank(images) != dim:
                            ok = False
                            witness = f"rank short at lam={lam} mu={mu}"
                            break
                    if not ok:
                        break
                rep.add(f"psi-surjective-n{n}-r{r}", ok, witness)
        # negative entries truncate to zero
        bad = udot_mod.udot_element((2, -1), (1, 0), (1, 0))
        rep.add("psi-off-cone-zero", udot_mod.to_schur(bad, 1).is_zero)
        # multiplicativity on random composable pairs
        ok = True
        witness = None
        for _ in range(60):
            n = rng.randint(1, n_max)
            r = rng.randint(0, r_max)
            lams = compositions(n, r)
            lam, mu, nu = (rng.choice(lams) for _ in range(3))
            left = udot_mod.udot_basis_upto(lam, mu, r)
            right = udot_mod.udot_basis_upto(mu, nu, r)
            if not left or not right:
                continue
            u = rng.choice(left).scale(rng.randint(-2, 3))
            v = rng.choice(right).scale(rng.randint(-2, 3))
            lhs = udot_mod.to_schur(udot_mod.udot_multiply(u, v), r)
            rhs = schur_mod.schur_multiply(udot_mod.to_schur(u, r), udot_mod.to_schur(v, r))
            if lhs != rhs:
                ok = False
                witness = f"lam={lam} mu={mu} nu={nu}"
                break
        rep.add("psi-multiplicative", ok, witness)

    return _timed(run, report)


def suite_gl2(r_max: int = 8) -> VerificationReport:
    """Diagonal gl_2 blocks: dimension equals 1 + min(lam) by margin
    count, Kostka sum, and exact rank; one generic table spot check."""
    report = VerificationReport("gl2", {"r_max": r_max})

    def run(rep: VerificationReport) -> None:
        for r in range(0, r_max + 1):
            ok = True
            witness = None
            for lam in compositions(2, r):
                expected = 1 + min(lam)
                margins = len(margin_matrices(lam, lam))
                ksum = sum(
                    kostka(nu, lam) ** 2
                    for nu in compositions(2, r)
                    if is_dominant(nu)
                )
                rank = exact_rank(
                    [
                        schur_mod.endo_of(x).entries
                        for x in schur_mod.hom_basis(lam, lam)
                    ]
                )
                if not (expected == margins == ksum == rank):
                    ok = False
                    witness = (
                        f"lam={lam}: expected={expected} margins={margins} "
                        f"kostka={ksum} rank={rank}"
                    )
                    break
            rep.add(f"gl2-dim-r{r}", ok, witness)
        table = udot_mod.gl2_generic_table((1, -2), 4)
        rep.add("gl2-generic-table", table.passed)

    return _timed(run, report)


def suite_sym_quotient(r_max: int = 3) -> VerificationReport:
    """Permutation blocks: the group multiplication table is reproduced by
    Schur products, and the weight-zero modified algebra maps onto the
    integral group algebra with full rank."""
    report = VerificationReport("sym-quotient", {"r_max": r_max})

    def run(rep: VerificationReport) -> None:
        for r in range(1, r_max + 1):
            table = schur_mod.symmetric_group_iso(r)
            ok = True
            witness = None
            for p in table.permutations:
                for q in table.permutations:
                    lhs = schur_mod.schur_multiply(table.to_element(p), table.to_element(q))
                    if lhs != table.to_element(perm_compose(p, q)):
                        ok = False
                        witness = f"p={p} q={q}"
                        break
                if not ok:
                    break
            rep.add(f"cayley-table-r{r}", ok, witness)
            quotient = udot_mod.symmetric_group_quotient(r)
            rep.add(
                f"weight-zero-quotient-r{r}",
                quotient.passed,
                None if quotient.passed else str(quotient.to_json()),
            )

    return _timed(run, report)


def suite_properties(seed: int = 2024) -> VerificationReport:
    """Seeded randomized structure checks: associativity in all three
    algebras, the anti-automorphism law, weight grading, the tensor
    representation being a homomorphism, integrality closures, and shift
    invariance of modified-algebra structure constants."""
    report = VerificationReport("properties", {"seed": seed})

    def run(rep: VerificationReport) -> None:
        rng = random.Random(seed)

        def random_schur(n: int, r: int) -> schur_mod.SchurElement:
            matrices = []
            for lam in compositions(n, r):
                for mu in compositions(n, r):
                    matrices.extend(margin_matrices(lam, mu))
            terms = {}
            for a in rng.sample(matrices, k=min(3, len(matrices))):
                terms[a] = Fraction(rng.randint(-3, 3))
            return schur_mod.SchurElement(n, r, terms)

        ok = True
        witness = None
        for _ in range(60):
            n = rng.randint(1, 3)
            r = rng.randint(0, 3)
            x, y, z = (random_schur(n, r) for _ in range(3))
            if (x * y) * z != x * (y * z):
                ok = False
                witness = f"n={n} r={r}"
                break
        rep.add("schur-associativity", ok, witness)

        ok = True
        for _ in range(40):
            n = rng.randint(1, 3)
            r = rng.randint(0, 3)
            x, y = (random_schur(n, r) for _ in range(2))
            if schur_mod.involution(x * y) != schur_mod.involution(y) * schur_mod.involution(x):
                ok = False
                break
        rep.add("involution-anti-automorphism", ok)

        ok = True
        for _ in range(40):
            n = rng.randint(1, 3)
            r = rng.randint(0, 3)
            x = random_schur(n, r)
            lam = rng.choice(compositions(n, r))
            mu = rng.choice(compositions(n, r))
            block = schur_mod.idempotent(lam) * x * schur_mod.idempotent(mu)
            for a in block.terms:
                if row_sums(a) != tuple(lam) or col_sums(a) != tuple(mu):
                    ok = False
                    break
        rep.add("weight-grading", ok)

        def random_u(n: int, max_deg: int) -> env.UElement:
            pairs = env.root_pairs(n)
            terms = {}
            for _ in range(2):
                deg = rng.randint(0, max_deg)
                f = [0] * len(pairs)
                h = [0] * n
                e = [0] * len(pairs)
                for _ in range(deg):
                    bucket = rng.randint(0, 2)
                    if bucket == 0 and pairs:
                        f[rng.randrange(len(pairs))] += 1
                    elif bucket == 1:
                        h[rng.randrange(n)] += 1
                    elif pairs:
                        e[rng.randrange(len(pairs))] += 1
                terms[(tuple(f), tuple(h), tuple(e))] = Fraction(rng.randint(-2, 3))
            return env.UElement(n, terms)

        ok = True
        witness = None
        for _ in range(50):
            x = random_u(3, 4)
            y = random_u(3, 4)
            lhs = env.tensor_rep(env.u_multiply(x, y), 3)
            rhs = env.tensor_rep(x, 3).compose(env.tensor_rep(y, 3))
            if lhs != rhs:
                ok = False
                witness = "tensor representation failed to be multiplicative"
                break
        rep.add("tensor-rep-homomorphism", ok, witness)

        ok = True
        for _ in range(30):
            x, y, z = (random_u(2, 3) for _ in range(3))
            if env.u_multiply(env.u_multiply(x, y), z) != env.u_multiply(x, env.u_multiply(y, z)):
                ok = False
                break
        rep.add("enveloping-associativity", ok)

        ok = True
        for _ in range(20):
            n = 2
            zero = tuple(tuple(0 for _ in range(n)) for _ in range(n))
            factors = []
            for _ in range(rng.randint(2, 3)):
                i, j = (1, 2) if rng.random() < 0.5 else (2, 1)
                a = rng.randint(1, 3)
                pat = [[0] * n for _ in range(n)]
                pat[i - 1][j - 1] = a
                factors.append(
                    env.divided_monomial(n, tuple(map(tuple, pat)), (), "fe")
                )
            prod = factors[0]
            for fct in factors[1:]:
                prod = env.u_multiply(prod, fct)
            _, integral = env.integrality_coords(prod)
            if not integral:
                ok = False
                break
        rep.add("divided-power-integrality", ok)

        ok = True
        witness = None
        for _ in range(100):
            n = rng.randint(2, 3)
            cells = udot_mod.offdiag_cells(n)
            mu = tuple(rng.randint(-3, 3) for _ in range(n))
            p1 = tuple(rng.randint(0, 2) for _ in cells)
            p2 = tuple(rng.randint(0, 2) for _ in cells)
            d1 = udot_mod.pattern_delta(p1, n)
            d2 = udot_mod.pattern_delta(p2, n)
            u = udot_mod.udot_element(
                tuple(m + d for m, d in zip(mu, d1)), mu, p1
            )
            v = udot_mod.udot_element(
                mu, tuple(m - d for m, d in zip(mu, d2)), p2
            )
            k = rng.randint(-4, 4)
            lhs = udot_mod.shift(udot_mod.udot_multiply(u, v), k)
            rhs = udot_mod.udot_multiply(udot_mod.shift(u, k), udot_mod.shift(v, k))
            if lhs != rhs:
                ok = False
                witness = f"mu={mu} p1={p1} p2={p2} k={k}"
                break
        rep.add("shift-invariance", ok, witness)

        ok = True
        for _ in range(30):
            n = rng.randint(2, 3)
            lam = tuple(rng.randint(-2, 2) for _ in range(n))
            us = udot_mod.udot_basis_upto(lam, lam, 2)
            if not us:
                continue
            x, y, z = (rng.choice(us) for _ in range(3))
            lhs = udot_mod.udot_multiply(udot_mod.udot_multiply(x, y), z)
            rhs = udot_mod.udot_multiply(x, udot_mod.udot_multiply(y, z))
            if lhs != rhs:
                ok = False
                break
        rep.add("udot-associativity", ok)

        ok = True
        for _ in range(30):
            n = 3
            w = tuple(rng.sample([1, 2, 3], 3))
            lam = tuple(rng.randint(-2, 2) for _ in range(n))
            us = udot_mod.udot_basis_upto(lam, lam, 2)
            if not us:
                continue
            u = rng.choice(us)
            v = rng.choice(us)
            lhs = udot_mod.udot_relabel(udot_mod.udot_multiply(u, v), w)
            rhs = udot_mod.udot_multiply(
                udot_mod.udot_relabel(u, w), udot_mod.udot_relabel(v, w)
            )
            if lhs != rhs:
                ok = False
                break
        rep.add("relabel-isomorphism", ok)

    return _timed(run, report)


SUITES: dict[str, Callable[..., VerificationReport]] = {
    "gbasis": suite_gbasis,
    "codet": suite_codet,
    "zbas": suite_zbas,
    "idem-lemma": suite_idem_lemma,
    "cellular": suite_cellular,
    "relations": suite_relations,
    "psi": suite_psi,
    "gl2": suite_gl2,
    "sym-quotient": suite_sym_quotient,
    "properties": suite_properties,
}


def run_suite(name: str, **kwargs) -> VerificationReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](**kwargs)
