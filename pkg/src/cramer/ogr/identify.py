"""Identification of the omega-less Cr(2,4,2) with the spinor variety OGr(5,10)."""

from __future__ import annotations

import json
import logging
import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from cramer.errors import ConfigurationError, VerificationError
from cramer.exact.matrix import DEFAULT_BOUND
from cramer.group.action import orbit_sample
from cramer.ogr.span import quadric_span
from cramer.ogr.spinor import (
    choose_convention,
    ogr_quadrics,
    parametrize,
    random_skew,
    spinor_table,
)
from cramer.poly.multipoly import MultiPoly
from cramer.poly.table import VariableTable
from cramer.types import CheckResult, OmegaMode, SearchOutcome
from cramer.variety.ideal import generate_ideal
from cramer.weights.characters import coordinate_weight, omega_weight

logger = logging.getLogger(__name__)

COORDMAP_RESOURCE = "coordmap.json"
SEARCH_LOG_RESOURCE = "coordmap.log.json"


@lru_cache(maxsize=1)
def cramer_table() -> VariableTable:
    return VariableTable.cramer(2, 2, omega=False)


def cramer_242_quadrics() -> list[MultiPoly]:
    """The ten omega-less generators of Cr(2,4,2) over m11..m24, n11..n42."""
    return generate_ideal(2, 2, OmegaMode.OMEGA_LESS).polys


@dataclass(frozen=True)
class CoordMap:
    """Signed bijection: spinor coordinate u -> sign * cramer coordinate."""

    entries: tuple[tuple[str, str, int], ...]

    def __post_init__(self):
        spinor_names = set(spinor_table().names)
        cramer_names = set(cramer_table().names)
        sources = [e[0] for e in self.entries]
        targets = [e[1] for e in self.entries]
        if set(sources) != spinor_names or len(sources) != len(spinor_names):
            raise ConfigurationError("coordinate map must cover each spinor coordinate once")
        if set(targets) != cramer_names or len(targets) != len(cramer_names):
            raise ConfigurationError("coordinate map must hit each Cramer coordinate once")
        if any(sign not in (1, -1) for _, _, sign in self.entries):
            raise ConfigurationError("signs must be +1 or -1")

    @classmethod
    def from_dict(cls, data: dict[str, dict[str, Any]]) -> CoordMap:
        try:
            entries = tuple((u, v["target"], int(v["sign"])) for u, v in data.items())
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigurationError(f"malformed coordinate map: {e}") from e
        return cls(entries)

    def to_dict(self) -> dict[str, dict[str, Any]]:
        order = {name: k for k, name in enumerate(spinor_table().names)}
        ordered = sorted(self.entries, key=lambda e: order[e[0]])
        return {u: {"target": c, "sign": sign} for u, c, sign in ordered}

    def images(self) -> dict:
        """Spinor variable -> sign * Cramer variable, as polynomials over the Cramer table."""
        spinor, cramer = spinor_table(), cramer_table()
        return {
            spinor.named(u): MultiPoly.variable(cramer, cramer.named(c)).scale(sign)
            for u, c, sign in self.entries
        }

    def pull_back(self, cramer_values) -> tuple[Fraction, ...]:
        """Spinor coordinates of a Cramer point."""
        lookup = dict(zip(cramer_table().names, cramer_values))
        table = {u: sign * lookup[c] for u, c, sign in self.entries}
        return tuple(table[name] for name in spinor_table().names)

    def push_forward(self, spinor_values) -> tuple[Fraction, ...]:
        """Cramer coordinates of a spinor point."""
        lookup = dict(zip(spinor_table().names, spinor_values))
        table = {c: sign * lookup[u] for u, c, sign in self.entries}
        return tuple(table[name] for name in cramer_table().names)

    def substitute(self, quadrics: list[MultiPoly]) -> list[MultiPoly]:
        images = self.images()
        return [q.substitute(images, cramer_table()) for q in quadrics]


def _read_data(path: Path | None, resource: str, what: str) -> str:
    try:
        if path is None:
            return resources.files("cramer.ogr.data").joinpath(resource).read_text()
        return Path(path).read_text()
    except FileNotFoundError as e:
        raise ConfigurationError(f"{what} not found: {e.filename or path or resource}") from e


def load_coordmap(path: Path | None = None) -> CoordMap:
    """Load a coordinate map; without a path, the one shipped with the package."""
    text = _read_data(path, COORDMAP_RESOURCE, "coordinate map")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"invalid coordinate map JSON: {e}") from e
    return CoordMap.from_dict(data)


def verify_identification(coordmap: CoordMap) -> bool:
    """Spans of the mapped spinor quadrics and of the Cramer quadrics agree."""
    mapped = coordmap.substitute(ogr_quadrics())
    return quadric_span(mapped) == quadric_span(cramer_242_quadrics())


def cross_membership(
    coordmap: CoordMap, samples: int = 50, seed: int = 0, bound: int = DEFAULT_BOUND
) -> CheckResult:
    """Sampled points of each variety satisfy the other's equations under the map."""
    spinor_qs = ogr_quadrics()
    cramer_qs = cramer_242_quadrics()
    table = cramer_table()

    for k, p in enumerate(orbit_sample(2, 2, seed, samples, bound, OmegaMode.OMEGA_LESS)):
        values = coordmap.pull_back(p.values_for(table))
        if any(q.eval(values) != 0 for q in spinor_qs):
            return CheckResult(
                name="cross_membership",
                status="fail",
                detail=f"Cramer sample {k} misses a spinor quadric",
                witness=p.to_dict(),
            )

    rng = random.Random(seed)
    convention = choose_convention()
    for k in range(samples):
        scale = rng.choice([s for s in range(-bound, bound + 1) if s])
        values = coordmap.push_forward(parametrize(random_skew(rng, bound), convention, scale))
        if any(q.eval(values) != 0 for q in cramer_qs):
            return CheckResult(
                name="cross_membership",
                status="fail",
                detail=f"spinor sample {k} misses a Cramer quadric",
                witness={"spinor": [str(v) for v in values]},
            )
    return CheckResult(
        name="cross_membership",
        status="pass",
        detail=f"{samples} points of each variety satisfy the other's equations",
    )


# Search

VAR_BITS = 16
RHS_BIT = 1 << 26
VAR_MASK = RHS_BIT - 1


def _insert(basis: dict[int, int], row: int) -> bool:
    """Add a GF(2) equation to an xor basis; False if it contradicts the basis."""
    while row & VAR_MASK:
        top = (row & VAR_MASK).bit_length() - 1
        if top not in basis:
            basis[top] = row
            return True
        row ^= basis[top]
    return not row & RHS_BIT


def _solve(basis: dict[int, int]) -> dict[int, int]:
    values: dict[int, int] = {}
    for top in sorted(basis):
        row = basis[top]
        bit = 1 if row & RHS_BIT else 0
        rest = row & VAR_MASK & ~(1 << top)
        while rest:
            low = rest & -rest
            bit ^= values.get(low.bit_length() - 1, 0)
            rest ^= low
        values[top] = bit
    return values


def _weight_key(exponents: tuple[int, ...], omega: tuple[int, ...]) -> tuple[int, ...]:
    """Class of a weight modulo the omega direction; omega has -1 in the first slot."""
    return tuple(e + exponents[0] * w for e, w in zip(exponents, omega))


class IdentificationSearch:
    """Backtracking over signed bijections, pruned by weights and monomial support.

    Spinor coordinates are assigned in breadth-first order of co-occurrence in
    the quadrics. Matching a spinor monomial u*w into a Cramer quadric R fixes R
    for that spinor quadric, and the partner of u must then have the weight of R
    minus the weight of the image of u. Signs are carried as a GF(2) system in
    the 16 coordinate signs and one scalar sign per quadric.
    """

    def __init__(self, seed: int = 0, budget: int = 100_000, max_maps: int = 1):
        self.seed = seed
        self.budget = budget
        self.max_maps = max_maps
        self.rng = random.Random(seed)
        self.nodes = 0
        self.exhausted = False
        self.log: list[str] = []
        self.found: list[CoordMap] = []

        spinor, cramer = spinor_table(), cramer_table()
        self.spinor_names = spinor.names
        self.cramer_names = cramer.names
        self.q_monos = [_monomials(q) for q in ogr_quadrics()]
        r_monos = [_monomials(q) for q in cramer_242_quadrics()]
        self.owner: dict[tuple[int, int], tuple[int, Fraction]] = {}
        for k, monos in enumerate(r_monos):
            for u, w, coeff in monos:
                self.owner[(u, w)] = (k, coeff)

        omega = omega_weight(2, 2).exponents
        self.var_key = [_weight_key(coordinate_weight(v, cramer).exponents, omega) for v in cramer]
        self.r_key = []
        for monos in r_monos:
            u, w, _ = monos[0]
            self.r_key.append(tuple(a + b for a, b in zip(self.var_key[u], self.var_key[w])))

        self.incident: list[list[tuple[int, int, Fraction]]] = [[] for _ in spinor]
        for q, monos in enumerate(self.q_monos):
            for u, w, coeff in monos:
                self.incident[u].append((q, w, coeff))
                if w != u:
                    self.incident[w].append((q, u, coeff))
        self.order = self._bfs_order()

    def _bfs_order(self) -> list[int]:
        seen, order = {0}, []
        queue = deque([0])
        while queue:
            u = queue.popleft()
            order.append(u)
            for _, w, _ in sorted(self.incident[u]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        order += [u for u in range(VAR_BITS) if u not in seen]
        return order

    def run(self) -> SearchOutcome:
        self.log.append(f"search seed={self.seed} budget={self.budget} order={self._order_names()}")
        if self.budget > 0:
            phi: list[int | None] = [None] * VAR_BITS
            self._extend(0, phi, {}, {})
        if self.exhausted:
            self.log.append(f"budget exhausted after {self.nodes} nodes")
        else:
            self.log.append(f"search finished after {self.nodes} nodes")
        self.log.append(f"maps found: {len(self.found)}")
        return SearchOutcome(
            found=bool(self.found),
            nodes=self.nodes,
            budget=self.budget,
            seed=self.seed,
            maps=[m.to_dict() for m in self.found],
            log=list(self.log),
        )

    def _order_names(self) -> str:
        return ",".join(self.spinor_names[u] for u in self.order)

    def _done(self) -> bool:
        return self.exhausted or len(self.found) >= self.max_maps

    def _candidates(self, u: int, phi: list[int | None], mu: dict[int, int]) -> list[int]:
        used = {c for c in phi if c is not None}
        required = None
        for q, w, _ in self.incident[u]:
            if phi[w] is not None and q in mu:
                key = tuple(a - b for a, b in zip(self.r_key[mu[q]], self.var_key[phi[w]]))
                if required is not None and key != required:
                    return []
                required = key
        pool = [
            c
            for c in range(VAR_BITS)
            if c not in used and (required is None or self.var_key[c] == required)
        ]
        self.rng.shuffle(pool)
        return pool

    def _extend(
        self, depth: int, phi: list[int | None], mu: dict[int, int], basis: dict[int, int]
    ) -> None:
        if self._done():
            return
        if depth == VAR_BITS:
            self._record(phi, basis)
            return
        u = self.order[depth]
        for c in self._candidates(u, phi, mu):
            if self.nodes >= self.budget:
                self.exhausted = True
                return
            self.nodes += 1
            phi[u] = c
            trial = self._constrain(u, phi, mu, basis)
            if trial is not None:
                self._extend(depth + 1, phi, *trial)
            phi[u] = None
            if self._done():
                return

    def _constrain(self, u: int, phi, mu: dict[int, int], basis: dict[int, int]):
        mu, basis = dict(mu), dict(basis)
        taken = set(mu.values())
        for q, w, coeff in self.incident[u]:
            if phi[w] is None:
                continue
            pair = tuple(sorted((phi[u], phi[w])))
            if pair not in self.owner:
                return None
            target, target_coeff = self.owner[pair]
            if q in mu:
                if mu[q] != target:
                    return None
            elif target in taken:
                return None
            else:
                mu[q] = target
                taken.add(target)
            if abs(coeff) != abs(target_coeff):
                return None
            row = (1 << u) ^ (1 << w) ^ (1 << (VAR_BITS + q))
            if coeff * target_coeff < 0:
                row |= RHS_BIT
            if not _insert(basis, row):
                return None
        return mu, basis

    def _record(self, phi: list[int | None], basis: dict[int, int]) -> None:
        values = _solve(basis)
        entries = tuple(
            (self.spinor_names[u], self.cramer_names[phi[u]], -1 if values.get(u, 0) else 1)
            for u in range(VAR_BITS)
        )
        candidate = CoordMap(entries)
        if verify_identification(candidate):
            self.found.append(candidate)
            self.log.append(f"map {len(self.found)} found at node {self.nodes}")
            logger.info(f"identification map found after {self.nodes} nodes")
        else:
            self.log.append(f"candidate at node {self.nodes} failed span verification")


def _monomials(q: MultiPoly) -> list[tuple[int, int, Fraction]]:
    """Quadratic monomials as (i, j, coeff) with variable positions i <= j."""
    out = []
    for exps, coeff in q.sorted_terms():
        positions = [k for k, e in enumerate(exps) for _ in range(e)]
        out.append((positions[0], positions[1], coeff))
    return out


def search_identification(
    seed: int = 0, budget: int = 100_000, max_maps: int = 1
) -> tuple[CoordMap | None, SearchOutcome]:
    """First signed bijection passing verify_identification within ``budget`` nodes."""
    search = IdentificationSearch(seed, budget, max_maps)
    outcome = search.run()
    return (search.found[0] if search.found else None), outcome


def load_search_log(path: Path | None = None) -> SearchOutcome:
    """Load the search log recorded beside a coordinate map; default is the shipped one."""
    text = _read_data(path, SEARCH_LOG_RESOURCE, "search log")
    try:
        return SearchOutcome.model_validate_json(text)
    except ValidationError as e:
        raise ConfigurationError(f"invalid search log: {e}") from e


def write_coordmap(outcome: SearchOutcome, directory: Path) -> tuple[Path, Path]:
    """Write the first map of a search and its log as coordmap.json / coordmap.log.json."""
    if not outcome.found:
        raise VerificationError(f"search with seed {outcome.seed} found no map to save")
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    map_path = directory / COORDMAP_RESOURCE
    log_path = directory / SEARCH_LOG_RESOURCE
    map_path.write_text(json.dumps(outcome.maps[0], indent=2) + "\n")
    log_path.write_text(outcome.model_dump_json(indent=2) + "\n")
    return map_path, log_path


def replay_search(outcome: SearchOutcome) -> SearchOutcome:
    """Rerun a recorded search with its seed and budget."""
    _, rerun = search_identification(outcome.seed, outcome.budget, max(1, len(outcome.maps)))
    if rerun != outcome:
        logger.warning(f"search with seed {outcome.seed} no longer matches its log")
    return rerun
