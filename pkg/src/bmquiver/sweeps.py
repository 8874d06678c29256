"""Verification sweeps over bounded instance ranges.

Every suite enumerates its instances in a fixed order (or samples them with
a seeded generator), runs one check per instance, and aggregates a report:
failures stop nothing, they are collected with witnesses so a broken case
is localized.  Audit mismatches on crossing targets are warnings; the
pair-count identity is binding only where the target has no crossing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .bm import (
    BmChain,
    BmEdge,
    BmObject,
    enumerate_all_edges,
    enumerate_edges,
    enumerate_objects,
)
from .compare import (
    verify_constancy,
    verify_decomposition,
    verify_edge_identification,
    verify_naturality,
    xi_restriction_commutes,
)
from .errors import ValidationError
from .quiverf import f_object, j_cardinality_audit
from .wfib import chain_signature, g_chain, gluing_agreement


@dataclass(frozen=True)
class SweepConfig:
    """Bounds and mode for a verification run."""

    max_k: int = 3
    max_k_prime: int = 3
    max_chain_len: int = 2
    mode: str = "exhaustive"  # or "sampled"
    samples: int = 0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "sampled"):
            raise ValidationError(f"unknown mode {self.mode!r}")
        if self.mode == "sampled" and self.samples < 1:
            raise ValidationError("sampled mode needs samples >= 1")
        if min(self.max_k, self.max_k_prime) < 0 or self.max_chain_len < 0:
            raise ValidationError("bounds must be >= 0")

    def bounds_dict(self) -> dict:
        out: dict = {
            "maxK": self.max_k,
            "maxKPrime": self.max_k_prime,
            "maxChainLen": self.max_chain_len,
            "mode": self.mode,
        }
        if self.mode == "sampled":
            out["samples"] = self.samples
            out["seed"] = self.seed
        return out


@dataclass
class SuiteReport:
    """Aggregated outcome of one suite."""

    suite: str
    bounds: dict
    instances: list[dict] = field(default_factory=list)
    total: int = 0
    failed: int = 0
    warned: int = 0

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def add_pass(self) -> None:
        self.total += 1

    def add_fail(self, key: str, witnesses: list[str]) -> None:
        self.total += 1
        self.failed += 1
        self.instances.append({"key": key, "status": "fail", "witnesses": witnesses})

    def add_warn(self, key: str, witnesses: list[str]) -> None:
        self.total += 1
        self.warned += 1
        self.instances.append({"key": key, "status": "warn", "witnesses": witnesses})

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "bounds": self.bounds,
            "instances": self.instances,
            "summary": {
                "total": self.total,
                "failed": self.failed,
                "warned": self.warned,
            },
        }


def _objects(config: SweepConfig) -> list[BmObject]:
    objs = enumerate_objects(config.max_k)
    if config.mode == "sampled":
        rng = random.Random(config.seed)
        objs = [rng.choice(objs) for _ in range(config.samples)]
    return objs


def _edges(config: SweepConfig) -> list[BmEdge]:
    if config.mode == "exhaustive":
        return enumerate_all_edges(config.max_k, config.max_k_prime)
    rng = random.Random(config.seed)
    sources = enumerate_objects(config.max_k)
    targets = enumerate_objects(config.max_k_prime)
    out: list[BmEdge] = []
    while len(out) < config.samples:
        phi = rng.choice(sources)
        phi_prime = rng.choice(targets)
        candidates = enumerate_edges(phi, phi_prime)
        if candidates:
            out.append(rng.choice(candidates))
    return out


def cardinality_suite(config: SweepConfig) -> SuiteReport:
    """|F(phi)| = max(0, 2*ell + beta) and |G(phi)| = ell + 1 over all objects."""
    report = SuiteReport("cardinality", config.bounds_dict())
    for phi in _objects(config):
        expected_f = max(0, 2 * phi.ell + phi.beta)
        expected_g = phi.ell + 1
        got_f = len(f_object(phi))
        got_g = len(g_chain(BmChain.vertex(phi)))
        witnesses = []
        if got_f != expected_f:
            witnesses.append(f"|F| = {got_f}, expected {expected_f}")
        if got_g != expected_g:
            witnesses.append(f"|G| = {got_g}, expected {expected_g}")
        if witnesses:
            report.add_fail(phi.encode(), witnesses)
        else:
            report.add_pass()
    return report


def _check_edge(suite: str, edge: BmEdge) -> tuple[str, str, list[str]]:
    """One edge check; returns (key, status, witnesses)."""
    if suite == "constancy":
        result = verify_constancy(edge, include_trails=False)
    elif suite == "naturality":
        result = verify_naturality(BmChain.from_edges([edge]))
    elif suite == "identification":
        result = verify_edge_identification(edge)
    elif suite == "audit":
        audit = j_cardinality_audit(edge)
        if audit.degenerate or audit.raw_matches:
            return edge.encode(), "pass", []
        message = (
            f"raw count {audit.raw_count} != formula {audit.formula_count} "
            f"(effective {audit.effective_count}, "
            f"midImageTight={audit.mid_image_tight})"
        )
        # The closed formula is only binding without a crossing on the target.
        status = "fail" if edge.phi_prime.beta == 0 else "warn"
        return edge.encode(), status, [message]
    else:
        raise ValidationError(f"unknown edge suite {suite!r}")
    return result.key, result.status, list(result.failures)


def _edge_chunk_worker(args: tuple[str, list[BmEdge]]) -> list[tuple[str, str, list[str]]]:
    suite, edges = args
    out = []
    for edge in edges:
        record = _check_edge(suite, edge)
        if record[1] != "pass":
            out.append(record)
    return out


def run_edge_suite(config: SweepConfig, suite: str, jobs: int = 1) -> SuiteReport:
    """Run an edge-based suite, optionally fanned out over worker processes.

    Chunks preserve enumeration order and results merge in chunk order, so
    output is identical for every jobs value.
    """
    edges = _edges(config)
    report = SuiteReport(suite, config.bounds_dict())
    report.total = len(edges)
    if jobs <= 1 or len(edges) < 2 * jobs:
        records = _edge_chunk_worker((suite, edges))
    else:
        import multiprocessing

        size = (len(edges) + jobs - 1) // jobs
        chunks = [
            (suite, edges[i : i + size]) for i in range(0, len(edges), size)
        ]
        with multiprocessing.Pool(jobs) as pool:
            records = [r for part in pool.map(_edge_chunk_worker, chunks) for r in part]
    for key, status, witnesses in records:
        report.instances.append(
            {"key": key, "status": status, "witnesses": witnesses}
        )
        if status == "fail":
            report.failed += 1
        else:
            report.warned += 1
    return report


def constancy_suite(config: SweepConfig, jobs: int = 1) -> SuiteReport:
    """Well-definedness of the comparison on every edge in range."""
    return run_edge_suite(config, "constancy", jobs)


def naturality_suite(config: SweepConfig, jobs: int = 1) -> SuiteReport:
    """Vertex- and segment-inclusion squares on every edge in range."""
    return run_edge_suite(config, "naturality", jobs)


def identification_suite(config: SweepConfig, jobs: int = 1) -> SuiteReport:
    """Fiber elements and their images share a component class on every edge."""
    return run_edge_suite(config, "identification", jobs)


def audit_suite(config: SweepConfig, jobs: int = 1) -> SuiteReport:
    """Pair-count audit: exact without a target crossing, warnings otherwise."""
    return run_edge_suite(config, "audit", jobs)


def decomposition_suite(config: SweepConfig) -> SuiteReport:
    """Segment-decomposition compatibility for every object with k >= 1."""
    report = SuiteReport("decomposition", config.bounds_dict())
    for phi in _objects(config):
        if phi.top == 0:
            continue
        result = verify_decomposition(phi)
        if result.passed:
            report.add_pass()
        else:
            report.add_fail(result.key, list(result.failures))
    return report


def _edge_pool(k_max: int) -> dict[BmObject, list[BmEdge]]:
    objs = enumerate_objects(k_max)
    pool: dict[BmObject, list[BmEdge]] = {phi: [] for phi in objs}
    for phi in objs:
        for phi_prime in objs:
            pool[phi].extend(enumerate_edges(phi, phi_prime))
    return pool


def _gluing_failure(chain: BmChain) -> list[str]:
    sizes, _ = chain_signature(chain)
    return [
        f"gluing disagrees with direct components (fiber sizes {sizes})"
    ]


def gluing_suite(config: SweepConfig) -> SuiteReport:
    """Edgewise gluing agrees with direct components on every chain in range.

    Chains of length 0 only assert the base-fiber bijection.  The check is
    a function of the chain's fiber signature alone (the pullback graph is
    built from nothing else), so verdicts are memoized by signature.
    """
    report = SuiteReport("gluing", config.bounds_dict())
    k_max = config.max_k
    pool = _edge_pool(k_max)
    verdicts: dict = {}

    def check(chain_edges: tuple[BmEdge, ...], base: BmObject) -> None:
        if not chain_edges:
            size = len(g_chain(BmChain.vertex(base)))
            if size == base.ell + 1:
                report.add_pass()
            else:
                report.add_fail(
                    base.encode(), [f"|G| = {size}, expected {base.ell + 1}"]
                )
            return
        sizes = (base.ell + 1,) + tuple(e.phi_prime.ell + 1 for e in chain_edges)
        maps = tuple(e.fiber_map() for e in chain_edges)
        signature = (sizes, maps)
        verdict = verdicts.get(signature)
        if verdict is None:
            verdict = gluing_agreement(signature)
            verdicts[signature] = verdict
        if verdict:
            report.add_pass()
        else:
            chain = BmChain.from_edges(list(chain_edges))
            report.add_fail(chain.encode(), _gluing_failure(chain))

    if config.mode == "sampled":
        rng = random.Random(config.seed)
        objs = enumerate_objects(k_max)
        for _ in range(config.samples):
            length = rng.randint(0, config.max_chain_len)
            base = rng.choice(objs)
            edges = []
            current = base
            for _ in range(length):
                choices = pool[current]
                edge = rng.choice(choices)  # identity edge always present
                edges.append(edge)
                current = edge.phi_prime
            check(tuple(edges), base)
        return report

    def extend(prefix: tuple[BmEdge, ...], tail: BmObject, remaining: int) -> None:
        check(prefix, prefix[0].phi if prefix else tail)
        if remaining == 0:
            return
        for edge in pool[tail]:
            extend(prefix + (edge,), edge.phi_prime, remaining - 1)

    for base in enumerate_objects(k_max):
        extend((), base, config.max_chain_len)
    return report


def xi_suite(config: SweepConfig, max_target_size: int = 3) -> SuiteReport:
    """Hom-set precomposition commutes with vertex restriction, all sizes up to the bound."""
    report = SuiteReport("xi", config.bounds_dict())
    chains = [BmChain.vertex(phi) for phi in _objects(config)]
    if config.max_chain_len >= 1:
        chains.extend(BmChain.from_edges([e]) for e in _edges(config))
    for chain in chains:
        for m in range(max_target_size + 1):
            result = xi_restriction_commutes(chain, m)
            if result.passed:
                report.add_pass()
            else:
                report.add_fail(result.key, list(result.failures))
    return report


SUITE_NAMES = (
    "cardinality",
    "constancy",
    "naturality",
    "decomposition",
    "gluing",
    "identification",
    "audit",
)


def run_suites(
    config: SweepConfig, suites: list[str] | None = None, jobs: int = 1
) -> list[SuiteReport]:
    """Run the named suites (default: the full battery) in a fixed order."""
    names = suites if suites is not None else list(SUITE_NAMES)
    unknown = [n for n in names if n not in SUITE_NAMES]
    if unknown:
        raise ValidationError(f"unknown suites {unknown}")
    reports = []
    for name in names:
        if name == "cardinality":
            reports.append(cardinality_suite(config))
        elif name == "decomposition":
            reports.append(decomposition_suite(config))
        elif name == "gluing":
            reports.append(gluing_suite(config))
        else:
            reports.append(run_edge_suite(config, name, jobs))
    return reports
