"""Independent checks of (k, q)-graphs and construction certificates."""

from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field

from .counting import SizeLimitError, bracket, brute_force_census, independence_polynomial, oracle_cap, value_at_minus_one
from .decycling import (
    BudgetExceeded,
    PhiCertificate,
    exhaustive_decycling,
    min_decycling,
    phi_certificate_problems,
)
from .edgelist import format_edge_list
from .graph import Graph, disjoint_union, is_connected, make_cycle, random_graph
from .synth import (
    Certificate,
    CertificateError,
    claim_problems,
    predicted_bracket,
    predicted_phi,
    realize_with_blocks,
    structure_problems,
    synth,
    to_json,
)

REPORT_VERSION = "report-v1"
LEVELS = ("poly", "oracle", "full")


@dataclass
class Clause:
    name: str
    status: str  # pass | fail | skip
    detail: str = ""
    seconds: float = 0.0


@dataclass
class Report:
    subject: str
    digest: str
    clauses: list[Clause] = field(default_factory=list)
    version: str = REPORT_VERSION

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.clauses)

    def failed(self) -> list[str]:
        return [c.name for c in self.clauses if c.status == "fail"]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def to_text(self) -> str:
        lines = [f"{self.subject}  [{self.version} sha256:{self.digest[:16]}]"]
        for c in self.clauses:
            lines.append(f"  {c.status.upper():4}  {c.name:<10} {c.detail}  ({c.seconds * 1e3:.1f} ms)")
        lines.append("PASS" if self.passed else "FAIL: " + ", ".join(self.failed()))
        return "\n".join(lines)

    @contextmanager
    def clause(self, name: str):
        c = Clause(name, "pass")
        t0 = time.perf_counter()
        try:
            yield c
        finally:
            c.seconds = time.perf_counter() - t0
            self.clauses.append(c)


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def _fail(c: Clause, detail: str) -> None:
    c.status, c.detail = "fail", detail


def verify_kq(
    G: Graph,
    k: int,
    q: int,
    level: str = "poly",
    phi_cert: PhiCertificate | None = None,
    budget_cap: int | None = None,
) -> Report:
    """Check that G is a connected graph with phi(G) = k and I(G;-1) = q.

    ``oracle`` adds the brute-force census when G is small enough; ``full``
    adds that and always computes phi exactly.  Below ``full`` a supplied
    PhiCertificate settles phi, otherwise the exact search runs anyway.
    """
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    rep = Report(f"({k},{q})-graph on {G.n} vertices, level {level}", _digest(format_edge_list(G)))

    with rep.clause("bound") as c:
        c.detail = f"|q|={abs(q)} <= 2^k={2**k}" if k >= 0 else "k < 0"
        if k < 0 or abs(q) > 2**k:
            _fail(c, f"|q|={abs(q)} > 2^k={2 ** max(k, 0)}")

    with rep.clause("connected") as c:
        if not is_connected(G):
            _fail(c, "graph is disconnected")

    with rep.clause("value") as c:
        val = value_at_minus_one(G)
        c.detail = f"I(G;-1)={val}"
        if val != q:
            _fail(c, f"I(G;-1)={val}, expected {q}")

    if level in ("oracle", "full"):
        with rep.clause("oracle") as c:
            try:
                census = brute_force_census(G)
            except SizeLimitError:
                c.status, c.detail = "skip", f"{G.n} vertices > oracle cap {oracle_cap()}"
            else:
                poly = independence_polynomial(G)
                c.detail = f"census {census}"
                if census != poly or census(-1) != q:
                    _fail(c, f"census {census} vs recursion {poly}, target {q}")

    with rep.clause("phi") as c:
        if level != "full" and phi_cert is not None:
            problems = phi_certificate_problems(G, phi_cert)
            if phi_cert.k != k:
                problems.append(f"certificate proves phi={phi_cert.k}, expected {k}")
            c.detail = f"certificate for phi={phi_cert.k}"
            if problems:
                _fail(c, "; ".join(problems))
        else:
            cap = budget_cap if budget_cap is not None else (None if level == "full" else k)
            try:
                phi, witness = min_decycling(G, cap)
            except BudgetExceeded as exc:
                _fail(c, str(exc))
            else:
                c.detail = f"exact phi={phi}"
                if phi != k:
                    _fail(c, f"exact phi={phi}, expected {k}")
    return rep


def phi_certificate_from_blocks(blocks) -> PhiCertificate:
    return PhiCertificate(tuple(tuple(b) for b in blocks), frozenset(b[0] for b in blocks))


_STAGES = ("structure", "claims", "bracket", "connected", "phi", "bound")


def verify_certificate(cert: Certificate) -> Report:
    """Six-stage check of a construction certificate, stopping at the first failure."""
    rep = Report(f"certificate for (k={cert.k}, q={cert.q})", _digest(to_json(cert, indent=None)))
    real = None

    def structure(c):
        nonlocal real
        problems = structure_problems(cert.tree)
        if not isinstance(cert.k, int) or not isinstance(cert.q, int):
            problems.append("target (k, q) must be integers")
        if problems:
            return _fail(c, "; ".join(problems))
        real = realize_with_blocks(cert)
        c.detail = f"{real.rooted.n} vertices, {len(real.cycle_blocks)} C6 blocks"

    def claims(c):
        problems = claim_problems(cert.tree)
        if problems:
            _fail(c, "; ".join(problems[:3]))

    def bracket_stage(c):
        got, want = bracket(real.rooted), predicted_bracket(cert.tree)
        c.detail = f"realized {got}"
        if got != want:
            _fail(c, f"realized {got} != predicted {want}")
        elif got.value != cert.q:
            _fail(c, f"I(G;-1)={got.value}, target q={cert.q}")

    def connected(c):
        if not is_connected(real.rooted.graph):
            _fail(c, "realized graph is disconnected")

    def phi(c):
        pc = phi_certificate_from_blocks(real.cycle_blocks)
        problems = phi_certificate_problems(real.rooted.graph, pc)
        pp = predicted_phi(cert.tree)
        if pc.k != cert.k:
            problems.append(f"C6 blocks prove phi={pc.k}, target k={cert.k}")
        if pp != cert.k:
            problems.append(f"predicted phi={pp}, target k={cert.k}")
        c.detail = f"phi={pc.k} via {pc.k} disjoint C6 blocks"
        if problems:
            _fail(c, "; ".join(problems))

    def bound(c):
        c.detail = f"|q|={abs(cert.q)} <= 2^k={2**cert.k}"
        if abs(cert.q) > 2**cert.k:
            _fail(c, f"|q|={abs(cert.q)} > 2^k={2**cert.k}")

    failed = False
    for name, fn in zip(_STAGES, (structure, claims, bracket_stage, connected, phi, bound)):
        if failed:
            rep.clauses.append(Clause(name, "skip", "not run"))
            continue
        with rep.clause(name) as c:
            try:
                fn(c)
            except CertificateError as exc:
                _fail(c, str(exc))
        failed = c.status == "fail"
    return rep


# Engström bound sweep ------------------------------------------------------------

@dataclass
class EngstromConfig:
    n_max: int = 10
    trials: int = 1000
    seed: int = 0
    probabilities: tuple[float, ...] = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)
    fixtures: bool = True  # add C6 and C6 u C6 as known tight cases


@dataclass
class EngstromReport:
    config: EngstromConfig
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    tight: int = 0
    tight_by_phi: dict[int, int] = field(default_factory=dict)
    tight_examples: list[dict] = field(default_factory=list)
    version: str = REPORT_VERSION

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d

    def to_text(self) -> str:
        cfg = self.config
        by_phi = ", ".join(f"phi={p}: {c}" for p, c in sorted(self.tight_by_phi.items()))
        return (
            f"Engstrom sweep seed={cfg.seed} trials={cfg.trials} n<={cfg.n_max}: "
            f"{self.checked} graphs, {len(self.violations)} violations, "
            f"{self.tight} tight ({by_phi})"
        )


def engstrom_sweep(n_max: int = 10, trials: int = 1000, seed: int = 0, fixtures: bool = True) -> EngstromReport:
    """Check |I(G;-1)| <= 2^phi(G) on seeded random graphs, phi by exhaustive search."""
    if n_max > 12:
        raise ValueError("n_max must be <= 12 for the exhaustive phi oracle")
    cfg = EngstromConfig(n_max=n_max, trials=trials, seed=seed, fixtures=fixtures)
    rep = EngstromReport(cfg)
    cases = []
    for i in range(trials):
        rng = random.Random(seed * 1_000_003 + i)
        n = rng.randint(1, n_max)
        p = cfg.probabilities[i % len(cfg.probabilities)]
        cases.append((f"trial {i} (n={n}, p={p})", random_graph(n, p, rng)))
    if fixtures:
        c6 = make_cycle(6)
        cases += [("C6", c6), ("C6 u C6", disjoint_union(c6, c6))]
    for label, G in cases:
        val = value_at_minus_one(G)
        phi = exhaustive_decycling(G)
        rep.checked += 1
        if abs(val) > 2**phi:
            rep.violations.append({"case": label, "edges": G.sorted_edges(), "value": val, "phi": phi})
        elif abs(val) == 2**phi:
            rep.tight += 1
            rep.tight_by_phi[phi] = rep.tight_by_phi.get(phi, 0) + 1
            if phi >= 1 and len(rep.tight_examples) < 5:
                rep.tight_examples.append({"case": label, "value": val, "phi": phi})
    return rep


# sweep over every q for one k ---------------------------------------------

def default_level(k: int) -> str:
    return "full" if k <= 4 else "poly"


def check_synth(k: int, q: int, level: str | None = None) -> tuple[int, bool, list[str]]:
    """Synthesize (k, q), then run both the certificate and the graph checks."""
    level = level or default_level(k)
    cert = synth(k, q)
    crep = verify_certificate(cert)
    real = realize_with_blocks(cert)
    grep = verify_kq(real.rooted.graph, k, q, level, phi_certificate_from_blocks(real.cycle_blocks))
    failed = [f"cert:{n}" for n in crep.failed()] + [f"graph:{n}" for n in grep.failed()]
    return q, not failed, failed


def sweep_targets(k: int, level: str | None = None, jobs: int = 1) -> list[tuple[int, bool, list[str]]]:
    """check_synth for every q in [-2^k, 2^k], ordered by q."""
    qs = list(range(-(2**k), 2**k + 1))
    if jobs <= 1:
        return [check_synth(k, q, level) for q in qs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(check_synth, [k] * len(qs), qs, [level] * len(qs)))
