"""Exhaustive verification suites over enumerated crystals.

Every suite walks a family of rectangle sequences bounded by the alphabet
size and the total cell count, checks its statements instance by instance,
and returns a report whose failure list is empty exactly when the suite
passes.  Heavily repeated per-factor data (string lengths, operator images,
promotion) is tabulated once per rectangle.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache, partial
from itertools import product
from typing import Callable, Iterator, Sequence

from .affine import (
    apply_op,
    chi,
    cocyclage_witness,
    e0,
    eps0,
    pair_promote,
    promote,
    promote_tableau,
    tableau_eps0,
    tableau_phi0,
)
from .crystal import (
    CrystalElement,
    RectSequence,
    enumerate_crystal,
    pairing,
    signature,
    tableau_e,
    tableau_f,
    tableau_phi_eps,
    tableau_reflection,
)
from .energy import (
    classical_charge,
    energy_level,
    local_H,
    restricted_d,
    tableau_energy,
    total_energy,
)
from .errors import MismatchedExpansionError
from .kpoly import graded_character, monotonicity_check
from .rmatrix import sigma_swap, tau_swap
from .rsk import LRTableau, lrt_tableaux, peel_recording, rsk_pair
from .tableaux import Tableau, column_insert, enumerate_cst, partitions_of, reverse_row_insert


@dataclass
class VerifyReport:
    suite: str
    instances: int = 0
    failures: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "instances": self.instances,
            "failures": self.failures,
            "elapsed_ms": self.elapsed_ms,
        }


def _fail(instance, expected, actual) -> dict:
    return {"instance": instance, "expected": expected, "actual": actual}


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def rect_sequences(
    n_max: int,
    max_cells: int,
    num_rects: int | None = None,
    rows_only: bool = False,
) -> Iterator[RectSequence]:
    """All rectangle sequences with alphabet size 2..n_max and at most
    ``max_cells`` cells, in a fixed deterministic order."""
    for n in range(2, n_max + 1):
        for comp in compositions(n):
            if num_rects is not None and len(comp) != num_rects:
                continue
            if rows_only and any(eta != 1 for eta in comp):
                continue

            def widths(j: int, budget: int) -> Iterator[tuple[int, ...]]:
                if j == len(comp):
                    yield ()
                    return
                for mu in range(1, budget // comp[j] + 1):
                    for rest in widths(j + 1, budget - comp[j] * mu):
                        yield (mu,) + rest

            for ws in widths(0, max_cells):
                yield RectSequence(tuple(zip(comp, ws)))


def _run_instances(
    suite: str,
    seqs: Sequence[RectSequence],
    check: Callable[[RectSequence], list],
    jobs: int = 1,
) -> VerifyReport:
    start = time.monotonic()
    report = VerifyReport(suite=suite)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check, seqs))
    else:
        results = [check(seq) for seq in seqs]
    for seq, failures in zip(seqs, results):
        report.instances += 1
        report.failures.extend(failures)
    report.failures.sort(key=lambda d: json.dumps(d, sort_keys=True, default=str))
    report.elapsed_ms = int((time.monotonic() - start) * 1000)
    return report


# ---------------------------------------------------------------------------
# Tabulated per-rectangle data for the fast element walks.

class FactorTable:
    """Operator tables for one rectangle shape over a fixed alphabet."""

    def __init__(self, eta: int, mu: int, n: int):
        self.n = n
        self.tableaux = list(enumerate_cst((mu,) * eta, n))
        self.index = {t.rows: k for k, t in enumerate(self.tableaux)}
        self.content = [t.content(n) for t in self.tableaux]
        self.stats = [None] + [
            [tableau_phi_eps(t, i) for t in self.tableaux] for i in range(1, n)
        ]
        self.e_map = [None] + [
            [self._img(tableau_e(t, i)) for t in self.tableaux] for i in range(1, n)
        ]
        self.f_map = [None] + [
            [self._img(tableau_f(t, i)) for t in self.tableaux] for i in range(1, n)
        ]
        self.promote = [
            self.index[promote_tableau(t, n).rows] for t in self.tableaux
        ]
        self.promote_inv = [0] * len(self.tableaux)
        for k, img in enumerate(self.promote):
            self.promote_inv[img] = k
        self.eps0 = [self.stats[1][img][1] for img in self.promote]
        self.phi0 = [self.stats[1][img][0] for img in self.promote]

    def _img(self, t: Tableau | None) -> int | None:
        return None if t is None else self.index[t.rows]


@lru_cache(maxsize=None)
def factor_table(eta: int, mu: int, n: int) -> FactorTable:
    return FactorTable(eta, mu, n)


class FastCrystal:
    """Elements of B^R as tuples of per-factor indices."""

    def __init__(self, seq: RectSequence):
        self.seq = seq
        self.n = seq.n
        self.tables = [factor_table(e_, m_, seq.n) for e_, m_ in seq.rects]

    def elements(self) -> Iterator[tuple[int, ...]]:
        return product(*(range(len(t.tableaux)) for t in self.tables))

    def content(self, el: tuple[int, ...]) -> tuple[int, ...]:
        acc = [0] * self.n
        for tab, k in zip(self.tables, el):
            for idx, c in enumerate(tab.content[k]):
                acc[idx] += c
        return tuple(acc)

    def signature(self, el: tuple[int, ...], i: int):
        minus = 0
        f_pos = None
        stack: list[tuple[int, int]] = []
        for j in range(len(el), 0, -1):
            p, q = self.tables[j - 1].stats[i][el[j - 1]]
            while p and stack:
                pos, cnt = stack[-1]
                take = min(p, cnt)
                p -= take
                if cnt == take:
                    stack.pop()
                else:
                    stack[-1] = (pos, cnt - take)
            if p:
                minus += p
                f_pos = j
            if q:
                stack.append((j, q))
        eps_total = sum(c for _, c in stack)
        e_pos = stack[0][0] if stack else None
        return minus, eps_total, f_pos, e_pos

    def apply(self, el: tuple[int, ...], i: int, op: str) -> tuple[int, ...] | None:
        phi_, eps_, f_pos, e_pos = self.signature(el, i)
        pos = f_pos if op == "f" else e_pos
        if pos is None:
            return None
        table = self.tables[pos - 1]
        img = (table.f_map if op == "f" else table.e_map)[i][el[pos - 1]]
        out = list(el)
        out[pos - 1] = img
        return tuple(out)

    def promote_el(self, el: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(t.promote[k] for t, k in zip(self.tables, el))

    def promote_inv_el(self, el: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(t.promote_inv[k] for t, k in zip(self.tables, el))

    def apply0(self, el: tuple[int, ...], op: str) -> tuple[int, ...] | None:
        mid = self.apply(self.promote_el(el), 1, op)
        return None if mid is None else self.promote_inv_el(mid)

    def to_element(self, el: tuple[int, ...]) -> CrystalElement:
        return CrystalElement(
            self.seq,
            [t.tableaux[k] for t, k in zip(self.tables, el)],
            check=False,
        )

    def instance_json(self, el: tuple[int, ...] | None = None):
        data = {"rects": self.seq.to_json()}
        if el is not None:
            data["element"] = self.to_element(el).to_json()["factors"]
        return data


# ---------------------------------------------------------------------------
# Suite: crystal axioms (C1)-(C3), operator inverses, promotion conjugation.

def _check_crystal_axioms(seq: RectSequence) -> list:
    fc = FastCrystal(seq)
    n = fc.n
    failures = []
    for el in fc.elements():
        content = fc.content(el)
        pr_el = fc.promote_el(el)
        pr2_el = fc.promote_el(pr_el)
        for i in range(n):
            if i == 0:
                phi_, eps_, _, _ = fc.signature(pr_el, 1)
            else:
                phi_, eps_, _, _ = fc.signature(el, i)
            expect = pairing(i, content)
            if phi_ - eps_ != expect:
                failures.append(
                    _fail(fc.instance_json(el), f"<h_{i}, wt> = {expect}", phi_ - eps_)
                )
            fb = fc.apply0(el, "f") if i == 0 else fc.apply(el, i, "f")
            if fb is not None:
                wt = fc.content(fb)
                delta = tuple(a - b for a, b in zip(content, wt))
                want = [0] * n
                want[i - 1 if i else n - 1] += 1
                want[i if i else 0] -= 1
                if delta != tuple(want):
                    failures.append(
                        _fail(fc.instance_json(el), f"wt drop alpha_{i}", list(delta))
                    )
                back = fc.apply0(fb, "e") if i == 0 else fc.apply(fb, i, "e")
                if back != el:
                    failures.append(
                        _fail(fc.instance_json(el), f"e_{i} f_{i} = id", "mismatch")
                    )
            eb = fc.apply0(el, "e") if i == 0 else fc.apply(el, i, "e")
            if eb is not None:
                back = fc.apply0(eb, "f") if i == 0 else fc.apply(eb, i, "f")
                if back != el:
                    failures.append(
                        _fail(fc.instance_json(el), f"f_{i} e_{i} = id", "mismatch")
                    )
            # promotion conjugation pr f_i = f_{i+1} pr, colors mod n
            nxt = (i + 1) % n
            lhs = fc.promote_el(fb) if fb is not None else None
            if nxt == 0:
                rhs_mid = fc.apply(fc.promote_el(pr_el), 1, "f")
                rhs = fc.promote_inv_el(rhs_mid) if rhs_mid is not None else None
            else:
                rhs = fc.apply(pr_el, nxt, "f")
            if lhs != rhs:
                failures.append(
                    _fail(
                        fc.instance_json(el),
                        f"pr f_{i} = f_{nxt} pr",
                        "mismatch",
                    )
                )
        if len(failures) > 20:
            break
    return failures


def verify_crystal_axioms(n_max: int, max_cells: int, jobs: int = 1) -> VerifyReport:
    seqs = list(rect_sequences(n_max, max_cells))
    return _run_instances("crystal-axioms", seqs, _check_crystal_axioms, jobs)


# ---------------------------------------------------------------------------
# Suite: RSK bijectivity and equivariance.

def _check_rsk(seq: RectSequence) -> list:
    failures = []
    n = seq.n
    fc = FastCrystal(seq)
    elements = list(fc.elements())
    pairs = {el: rsk_pair(fc.to_element(el)) for el in elements}
    # bijection: round trip and cardinality of the image
    for el, pair in pairs.items():
        factors = peel_recording(pair.p, pair.q, seq)
        if tuple(fc.tables[j].index[t.rows] for j, t in enumerate(factors)) != el:
            failures.append(
                _fail(fc.instance_json(el), "rsk_inverse . rsk_pair = id", "mismatch")
            )
            break
    count = 0
    for lam in partitions_of(seq.ncells, n):
        cst = sum(1 for _ in enumerate_cst(lam, n))
        count += cst * len(lrt_tableaux(lam, seq))
    if count != len(elements):
        failures.append(
            _fail({"rects": seq.to_json()}, f"image size {len(elements)}", count)
        )
    for el in elements:
        pb = pairs[el]
        # equivariance under e_i, f_i, r_i for classical colors
        for i in range(1, n):
            fel = fc.apply(el, i, "f")
            if fel is not None:
                pf = pairs[fel]
                if pf.q != pb.q or pf.p != tableau_f(pb.p, i):
                    failures.append(
                        _fail(fc.instance_json(el), f"equivariance f_{i}", "mismatch")
                    )
            phi_, eps_, _, _ = fc.signature(el, i)
            rel = el
            for _ in range(phi_ - eps_):
                rel = fc.apply(rel, i, "f")
            for _ in range(eps_ - phi_):
                rel = fc.apply(rel, i, "e")
            prb = pairs[rel]
            if prb.q != pb.q or prb.p != tableau_reflection(pb.p, i):
                failures.append(
                    _fail(fc.instance_json(el), f"equivariance r_{i}", "mismatch")
                )
        # promotion computed on the pair alone agrees with the element route
        if pair_promote(pb, seq)[0] != pairs[fc.promote_el(el)]:
            failures.append(
                _fail(fc.instance_json(el), "pair promotion", "mismatch")
            )
        if len(failures) > 20:
            break
    return failures


def verify_rsk(n_max: int, max_cells: int, jobs: int = 1) -> VerifyReport:
    seqs = list(rect_sequences(n_max, max_cells))
    return _run_instances("rsk", seqs, _check_rsk, jobs)


# ---------------------------------------------------------------------------
# Suite: rectangle switches commute with every operator; Yang-Baxter.

def _check_rmatrix_pairs(seq: RectSequence) -> list:
    failures = []
    n = seq.n
    for b in enumerate_crystal(seq):
        sb = sigma_swap(b, 1)
        pb, psb = rsk_pair(b), rsk_pair(sb)
        if psb.p != pb.p:
            failures.append(_fail(b.to_json(), "sigma keeps p", "mismatch"))
        if psb.q != tau_swap(LRTableau(pb.q, seq), 1).tableau:
            failures.append(_fail(b.to_json(), "sigma acts as tau on q", "mismatch"))
        if sigma_swap(sb, 1) != b:
            failures.append(_fail(b.to_json(), "sigma involution", "mismatch"))
        if local_H(sb) != local_H(b):
            failures.append(_fail(b.to_json(), "H' . sigma = H", "mismatch"))
        for i in range(n):
            for op in ("e", "f"):
                img = _apply(b, i, op)
                lhs = sigma_swap(img, 1) if img is not None else None
                rhs = _apply(sb, i, op)
                if lhs != rhs:
                    failures.append(
                        _fail(b.to_json(), f"sigma {op}_{i} = {op}_{i} sigma", "mismatch")
                    )
        if len(failures) > 20:
            break
    return failures


def _apply(b: CrystalElement, i: int, op: str) -> CrystalElement | None:
    return apply_op(b, i, op)


def _check_yang_baxter(seq: RectSequence) -> list:
    failures = []
    for b in enumerate_crystal(seq):
        lhs = sigma_swap(sigma_swap(sigma_swap(b, 1), 2), 1)
        rhs = sigma_swap(sigma_swap(sigma_swap(b, 2), 1), 2)
        if lhs != rhs:
            failures.append(_fail(b.to_json(), "Yang-Baxter", "mismatch"))
            break
    return failures


def verify_rmatrix(n_max: int, max_cells: int, jobs: int = 1) -> VerifyReport:
    pairs = list(rect_sequences(n_max, max_cells, num_rects=2))
    triples = list(rect_sequences(n_max, max_cells, num_rects=3))
    rep = _run_instances("rmatrix", pairs, _check_rmatrix_pairs, jobs)
    rep2 = _run_instances("rmatrix-yang-baxter", triples, _check_yang_baxter, jobs)
    rep.instances += rep2.instances
    rep.failures.extend(rep2.failures)
    rep.elapsed_ms += rep2.elapsed_ms
    return rep


# ---------------------------------------------------------------------------
# Suite: energy axioms, the shape formula, charge agreement.

def _check_energy_two_factor(seq: RectSequence) -> list:
    """Propagate H from the axioms over the crystal graph and compare with
    the east-count formula; check (H1), (H2), the normalizations, and
    connectedness on the way."""
    failures = []
    n = seq.n
    elements = list(enumerate_crystal(seq))
    H = {b: local_H(b) for b in elements}
    # normalization at the stacked key element and the pair of keys
    y = CrystalElement(seq, [seq.key_tableau(1), seq.key_tableau(2)])
    if H[y] != 0:
        failures.append(_fail(y.to_json(), "H(v_R) = 0", H[y]))
    keys = CrystalElement(
        seq,
        [
            Tableau([[i + 1] * seq.mu(1) for i in range(seq.eta(1))], n=n),
            Tableau([[i + 1] * seq.mu(2) for i in range(seq.eta(2))], n=n),
        ],
    )
    expected = min(seq.eta(1), seq.eta(2)) * min(seq.mu(1), seq.mu(2))
    if H[keys] != expected:
        failures.append(_fail(keys.to_json(), f"H(keys) = {expected}", H[keys]))
    # axioms as a consistent propagation: classical edges keep H, zero edges
    # follow the three-way branch
    assigned = {y: 0}
    frontier = [y]
    while frontier:
        nxt = []
        for b in frontier:
            for i in range(n):
                for op in ("e", "f"):
                    img = _apply(b, i, op)
                    if img is None:
                        continue
                    if i == 0:
                        # (H2) pins the jump across the raising direction
                        if op == "e":
                            val = assigned[b] + _h2_jump(b, seq)
                        else:
                            val = assigned[b] - _h2_jump(img, seq)
                    else:
                        val = assigned[b]
                    if img in assigned:
                        if assigned[img] != val:
                            failures.append(
                                _fail(b.to_json(), "axiom propagation consistent", i)
                            )
                    else:
                        assigned[img] = val
                        nxt.append(img)
        frontier = nxt
    if len(assigned) != len(elements):
        failures.append(
            _fail({"rects": seq.to_json()}, "connected", f"{len(assigned)}/{len(elements)}")
        )
    for b in elements:
        if assigned.get(b) != H[b]:
            failures.append(_fail(b.to_json(), f"H = d(q) = {H[b]}", assigned.get(b)))
            break
    return failures


def _h2_jump(b: CrystalElement, seq: RectSequence) -> int:
    """H(e_0(b)) - H(b) prescribed by the branch rule (defined when e_0 is)."""
    b1, b2 = b.factors
    n = seq.n
    sb = sigma_swap(b, 1)
    c2, c1 = sb.factors[0], sb.factors[1]  # c2 in CST(R_2), c1 in CST(R_1)
    first = tableau_eps0(b2, n) <= tableau_phi0(b1, n)
    second = tableau_eps0(c1, n) <= tableau_phi0(c2, n)
    if first and second:
        return 1
    if not first and not second:
        return -1
    return 0


def _check_energy_general(seq: RectSequence) -> list:
    """(H1) on every classical edge, plus agreement of the crystal-side and
    tableau-side statistics.  The tableau statistic is compared on highest
    weight elements; constancy along edges extends the agreement to all of
    B^R since recording tableaux are constant on components."""
    failures = []
    n = seq.n
    fc = FastCrystal(seq)
    energies = {el: total_energy(fc.to_element(el)) for el in fc.elements()}
    for el, en in energies.items():
        hw = True
        for i in range(1, n):
            _, eps_, f_pos, _ = fc.signature(el, i)
            hw = hw and eps_ == 0
            if f_pos is not None and energies[fc.apply(el, i, "f")] != en:
                failures.append(
                    _fail(fc.instance_json(el), f"(H1) under f_{i}", "changed")
                )
        if hw:
            q = rsk_pair(fc.to_element(el)).q
            if tableau_energy(LRTableau(q, seq)) != en:
                failures.append(
                    _fail(fc.instance_json(el), f"tableau energy {en}", "mismatch")
                )
        if len(failures) > 20:
            break
    return failures


def _check_energy_drop(seq: RectSequence) -> list:
    """The level sums drop by one at the acting position when every factor
    width is exceeded by eps_0."""
    failures = []
    widths = [seq.mu(j) for j in range(1, seq.m + 1)]
    for b in enumerate_crystal(seq):
        eb = e0(b)
        if eb is None or eps0(b) <= max(widths):
            continue
        k = signature(promote(b), 1).e_pos
        if k == 1:
            failures.append(_fail(b.to_json(), "acting position > 1", k))
            continue
        for j in range(2, seq.m + 1):
            want = energy_level(b, j) - (1 if j == k else 0)
            got = energy_level(eb, j)
            if got != want:
                failures.append(_fail(b.to_json(), f"level sum {j}: {want}", got))
    return failures


def _check_three_rectangles(seq: RectSequence) -> list:
    failures = []
    M = max(seq.mu(j) for j in (1, 2, 3))
    for lam in partitions_of(seq.ncells, seq.n):
        if not lam or lam[0] != M:
            continue
        for t in lrt_tableaux(lam, seq):
            q = LRTableau(t, seq)
            t2 = tau_swap(q, 2)
            t12 = tau_swap(t2, 1)
            t1 = tau_swap(q, 1)
            t21 = tau_swap(t1, 2)
            total = (
                restricted_d(t12, 2)
                - restricted_d(q, 2)
                + restricted_d(t21, 1)
                - restricted_d(q, 1)
            )
            if total != 0:
                failures.append(
                    _fail(t.to_json(), "three-rectangle identity", total)
                )
    return failures


def verify_energy(n_max: int, max_cells: int, jobs: int = 1) -> VerifyReport:
    two = list(rect_sequences(n_max, max_cells, num_rects=2))
    rep = _run_instances("energy-two-factor", two, _check_energy_two_factor, jobs)
    alls = list(rect_sequences(n_max, max_cells))
    rep_g = _run_instances("energy-general", alls, _check_energy_general, jobs)
    drops = list(rect_sequences(min(n_max, 3), max_cells))
    rep_d = _run_instances("energy-drop", drops, _check_energy_drop, jobs)
    triples = list(rect_sequences(n_max, max_cells, num_rects=3))
    rep_t = _run_instances("energy-three-rectangles", triples, _check_three_rectangles, jobs)
    out = VerifyReport(suite="energy")
    for r in (rep, rep_g, rep_d, rep_t):
        out.instances += r.instances
        out.failures.extend(r.failures)
        out.elapsed_ms += r.elapsed_ms
    return out


def _check_charge(seq: RectSequence) -> list:
    failures = []
    gamma = seq.gamma()
    if any(gamma[i] < gamma[i + 1] for i in range(len(gamma) - 1)):
        return failures  # charge needs partition content
    for lam in partitions_of(seq.ncells, seq.n):
        for t in lrt_tableaux(lam, seq):
            en = tableau_energy(LRTableau(t, seq))
            ch = classical_charge(t)
            if en != ch:
                failures.append(_fail(t.to_json(), f"charge {ch}", en))
    return failures


def verify_charge_energy(n_max: int, max_cells: int, jobs: int = 1) -> VerifyReport:
    seqs = list(rect_sequences(n_max, max_cells, rows_only=True))
    return _run_instances("charge-energy", seqs, _check_charge, jobs)


# ---------------------------------------------------------------------------
# Suite: cocyclage realized by e_0.

def _check_cocyclage(seq: RectSequence) -> list:
    failures = []
    n = seq.n
    M = max(seq.mu(j) for j in range(1, seq.m + 1))
    for lam in partitions_of(seq.ncells, n):
        for t in lrt_tableaux(lam, seq):
            corners = [
                (r, lam[r - 1])
                for r in range(1, len(lam) + 1)
                if r == len(lam) or lam[r] < lam[r - 1]
            ]
            for cell in corners:
                if cell[0] >= n:
                    continue
                u_tab, x = reverse_row_insert(t, cell)
                word = u_tab.word() + (x,)
                b = cocyclage_witness(t, seq, cell)
                if rsk_pair(b).q != t:
                    failures.append(_fail(t.to_json(), "witness records q", "mismatch"))
                    continue
                eb = e0(b)
                if eb is None:
                    failures.append(_fail(t.to_json(), "e_0 defined on witness", None))
                    continue
                got = rsk_pair(eb).q
                want = column_insert(chi(word, seq), n=n)
                if got != want:
                    failures.append(
                        _fail(
                            {"tableau": t.to_json(), "corner": list(cell)},
                            want.to_json(),
                            got.to_json(),
                        )
                    )
                if cell[1] == lam[0] and lam[0] > M:
                    # last-column case: the energy must drop by one
                    drop = tableau_energy(LRTableau(t, seq)) - tableau_energy(
                        LRTableau(got, seq)
                    )
                    if drop != 1:
                        failures.append(
                            _fail(
                                {"tableau": t.to_json(), "corner": list(cell)},
                                "energy drop 1",
                                drop,
                            )
                        )
    return failures


def verify_cocyclage(n_max: int, max_cells: int, jobs: int = 1) -> VerifyReport:
    seqs = list(rect_sequences(n_max, max_cells))
    rep = _run_instances("cocyclage", seqs, _check_cocyclage, jobs)
    rep.failures.extend(_check_stuck_component())
    return rep


def _check_stuck_component() -> list:
    """The three-rectangle example where e_0 never lowers the energy: all five
    elements of the component admitting e_0 land in the wider component at the
    same energy."""
    failures = []
    seq = RectSequence([(1, 2), (1, 1), (1, 1)])
    src = Tableau([[1, 1], [2, 3]], n=3)
    dst = Tableau([[1, 1, 3], [2]], n=3)
    hits = 0
    for b in enumerate_crystal(seq):
        if rsk_pair(b).q != src:
            continue
        eb = e0(b)
        if eb is None:
            continue
        hits += 1
        if rsk_pair(eb).q != dst:
            failures.append(_fail(b.to_json(), "lands in the wider component", "no"))
        e_src = tableau_energy(LRTableau(src, seq))
        e_dst = tableau_energy(LRTableau(dst, seq))
        if e_src != e_dst:
            failures.append(_fail(b.to_json(), "equal energy", (e_src, e_dst)))
    if hits != 5:
        failures.append(_fail({"rects": seq.to_json()}, "five elements admit e_0", hits))
    return failures


# ---------------------------------------------------------------------------
# Suite: the two expansion routes of the graded character.

def _check_characters(seq: RectSequence) -> list:
    try:
        graded_character(seq)
    except MismatchedExpansionError as exc:
        return [_fail({"rects": seq.to_json()}, "routes agree", str(exc))]
    return []


def verify_characters(n_max: int, max_cells: int, jobs: int = 1) -> VerifyReport:
    seqs = list(rect_sequences(n_max, max_cells))
    return _run_instances("characters", seqs, _check_characters, jobs)


# ---------------------------------------------------------------------------
# Suite: monotonicity under adding a rectangle.

def _check_monotonicity_seq(seq: RectSequence, kmax: int = 2, mmax: int = 2) -> list:
    failures = []
    for lam in partitions_of(seq.ncells, seq.n):
        if not lrt_tableaux(lam, seq):
            continue
        for k in range(1, kmax + 1):
            for m in range(1, mmax + 1):
                rep = monotonicity_check(lam, seq, k, m)
                if not rep.holds:
                    failures.append(
                        _fail(
                            {"rects": seq.to_json(), "lambda": list(lam), "k": k, "m": m},
                            "monotone",
                            rep.failure,
                        )
                    )
    return failures


def verify_monotonicity(
    n_max: int, max_cells: int, kmax: int = 2, mmax: int = 2, jobs: int = 1
) -> VerifyReport:
    seqs = list(rect_sequences(n_max, max_cells))
    check = partial(_check_monotonicity_seq, kmax=kmax, mmax=mmax)
    return _run_instances("monotonicity", seqs, check, jobs)


# ---------------------------------------------------------------------------
# Suite: the main character identity.

def verify_main_theorem(
    n: int, level: int, mu: Sequence[int] | None = None, jobs: int = 1
) -> VerifyReport:
    from .demazure import crystal_side_character, demazure_character

    start = time.monotonic()
    report = VerifyReport(suite="main-theorem")
    mus = [tuple(mu)] if mu is not None else list(partitions_of(n, n))
    for m in mus:
        report.instances += 1
        dc = demazure_character(level, m, n)
        cc = crystal_side_character(level, m)
        if dc != cc:
            report.failures.append(
                _fail(
                    {"n": n, "level": level, "mu": list(m)},
                    cc.to_json(),
                    dc.to_json(),
                )
            )
    report.elapsed_ms = int((time.monotonic() - start) * 1000)
    return report


# ---------------------------------------------------------------------------
# Everything.

SUITES = {
    "crystal-axioms": verify_crystal_axioms,
    "rsk": verify_rsk,
    "rmatrix": verify_rmatrix,
    "energy": verify_energy,
    "charge-energy": verify_charge_energy,
    "cocyclage": verify_cocyclage,
    "characters": verify_characters,
    "monotonicity": verify_monotonicity,
}


def verify_all(n_max: int, max_cells: int, jobs: int = 1) -> list[VerifyReport]:
    reports = [fn(n_max, max_cells, jobs=jobs) for fn in SUITES.values()]
    for level in (1, 2):
        for n in range(2, min(n_max, 3) + 1):
            reports.append(verify_main_theorem(n, level))
    return reports
