"""
Value Enumeration
Bounded box scans and seeded samples of integer group determinant values,
chunked for worker processes and persisted as JSONL tables
"""
from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..c8c2.transform import d4, d4_tilde, fold
from ..core.determinant import Assignment, eval_bareiss, eval_dedekind
from ..core.errors import GroupError, SearchCapError, VerificationError
from ..core.groups import CayleyGroup, GroupLike, parse_group_spec
from ..utils.export import ReportExporter

logger = logging.getLogger(__name__)

DEFAULT_BOX_CAP = 2 ** 26
DEFAULT_CHUNK_COUNT = 64

EVALUATORS = ("auto", "closed-form", "dedekind", "bareiss")

Witness = Tuple[int, ...]
Box = Tuple[Tuple[int, int], ...]


@lru_cache(maxsize=None)
def _group(spec: str) -> GroupLike:
    return parse_group_spec(spec)


def _is_c8c2(group: GroupLike) -> bool:
    return not isinstance(group, CayleyGroup) and group.orders == (8, 2)


@dataclass(frozen=True)
class SearchSpec:
    """What to scan: a group, a box of integer assignments, and filters

    Box coordinates follow the variable numbering (x_0, x_1, ...).
    """
    group: str
    box: Box
    value_bound: Optional[int] = None
    evaluator: str = "auto"
    sample: Optional[int] = None
    seed: int = 0
    box_cap: int = DEFAULT_BOX_CAP
    chunk_count: int = DEFAULT_CHUNK_COUNT

    def __post_init__(self):
        box = tuple((int(lo), int(hi)) for lo, hi in self.box)
        object.__setattr__(self, 'box', box)
        group = _group(self.group)
        if len(box) != group.size:
            raise GroupError(f"{group.name} needs a box with {group.size} coordinates, got {len(box)}")
        if any(lo > hi for lo, hi in box):
            raise GroupError("every box coordinate needs lo <= hi")
        if self.evaluator not in EVALUATORS:
            raise GroupError(f"unknown evaluator {self.evaluator!r}; choose from {', '.join(EVALUATORS)}")
        if self.evaluator == "closed-form" and not _is_c8c2(group):
            raise GroupError("the closed-form evaluator only covers C8xC2")
        if self.evaluator == "dedekind" and isinstance(group, CayleyGroup):
            raise GroupError("the character product needs an abelian group")
        if self.chunk_count < 1:
            raise GroupError("chunk_count must be positive")
        if self.sample is None and self.volume > self.box_cap:
            raise SearchCapError(f"box volume {self.volume} exceeds the cap {self.box_cap}")
        if self.sample is not None and not 0 < self.sample <= self.box_cap:
            raise SearchCapError(f"sample size {self.sample} must lie in 1..{self.box_cap}")

    @classmethod
    def uniform(cls, group: str, lo: int, hi: int, **kwargs) -> 'SearchSpec':
        """The same [lo, hi] range on every coordinate"""
        size = _group(group).size
        return cls(group, ((lo, hi),) * size, **kwargs)

    @property
    def volume(self) -> int:
        volume = 1
        for lo, hi in self.box:
            volume *= hi - lo + 1
        return volume

    @property
    def resolved_evaluator(self) -> str:
        if self.evaluator != "auto":
            return self.evaluator
        group = _group(self.group)
        if _is_c8c2(group):
            return "closed-form"
        return "bareiss" if isinstance(group, CayleyGroup) else "dedekind"

    def to_dict(self) -> dict:
        return {
            'group': self.group,
            'box': [list(pair) for pair in self.box],
            'value_bound': self.value_bound,
            'evaluator': self.evaluator,
            'sample': self.sample,
            'seed': self.seed,
            'box_cap': self.box_cap,
            'chunk_count': self.chunk_count,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'SearchSpec':
        return cls(
            group=data['group'],
            box=tuple(tuple(pair) for pair in data['box']),
            value_bound=data.get('value_bound'),
            evaluator=data.get('evaluator', 'auto'),
            sample=data.get('sample'),
            seed=data.get('seed', 0),
            box_cap=data.get('box_cap', DEFAULT_BOX_CAP),
            chunk_count=data.get('chunk_count', DEFAULT_CHUNK_COUNT),
        )


@dataclass
class ValueTable:
    """Values found by a scan, each with its lexicographically smallest witness"""
    spec: SearchSpec
    witnesses: Dict[int, Witness] = field(default_factory=dict)
    scanned: int = 0
    duration: float = 0.0

    @property
    def evaluator(self) -> str:
        return self.spec.resolved_evaluator

    def __len__(self) -> int:
        return len(self.witnesses)

    def __contains__(self, value: int) -> bool:
        return value in self.witnesses

    def values(self) -> List[int]:
        return sorted(self.witnesses)

    def record(self, value: int, witness: Sequence[int]):
        witness = tuple(int(x) for x in witness)
        current = self.witnesses.get(value)
        if current is None or witness < current:
            self.witnesses[value] = witness

    def merge(self, other: 'ValueTable'):
        """Fold another table in; ties keep the smaller witness"""
        for value, witness in other.witnesses.items():
            self.record(value, witness)
        self.scanned += other.scanned
        self.duration += other.duration

    def meta(self) -> dict:
        return {
            'spec': self.spec.to_dict(),
            'scanned': self.scanned,
            'duration': round(self.duration, 6),
            'evaluator': self.evaluator,
            'count': len(self.witnesses),
        }

    def records(self) -> List[dict]:
        group = _group(self.spec.group).name
        return [
            {'value': value, 'witness': list(self.witnesses[value]), 'evaluator': self.evaluator, 'group': group}
            for value in self.values()
        ]

    def to_jsonl(self, path: str) -> bool:
        """Write a metadata line followed by one record per value; False if the file could not be written"""
        written = ReportExporter.save_jsonl(path, [{'meta': self.meta()}] + self.records())
        if written:
            logger.info("wrote %d values to %s", len(self.witnesses), path)
        return written

    @classmethod
    def from_jsonl(cls, path: str) -> 'ValueTable':
        with open(path, 'r') as f:
            lines = [line for line in f if line.strip()]
        if not lines:
            raise ValueError(f"{path} is empty")
        meta = json.loads(lines[0]).get('meta')
        if meta is None:
            raise ValueError(f"{path} does not start with a metadata record")
        table = cls(SearchSpec.from_dict(meta['spec']), scanned=meta.get('scanned', 0),
                    duration=meta.get('duration', 0.0))
        for line in lines[1:]:
            record = json.loads(line)
            table.record(int(record['value']), record['witness'])
        return table

    def verify(self, limit: Optional[int] = None) -> List[Tuple[int, Witness, int]]:
        """Re-evaluate witnesses by Bareiss; returns (value, witness, recomputed) mismatches"""
        group = _group(self.spec.group)
        mismatches = []
        for i, value in enumerate(self.values()):
            if limit is not None and i >= limit:
                break
            witness = self.witnesses[value]
            recomputed = eval_bareiss(group, Assignment.from_sequence(group, witness))
            if recomputed != value:
                mismatches.append((value, witness, recomputed))
        return mismatches


def closed_form_batch(points: np.ndarray) -> np.ndarray:
    """C8xC2 determinants of many 16-vectors at once, exact

    int64 is used only when every entry is in {-1, 0, 1}; larger entries
    switch to Python integers.
    """
    bound = int(np.abs(points).max()) if points.size else 0
    if bound > 1:
        points = points.astype(object)
    b, c, d, e = fold([points[:, j] for j in range(16)])
    factors = [d4(b), d4_tilde(c), d4(d), d4_tilde(e)]
    return factors[0] * factors[1] * factors[2] * factors[3]


def _evaluate_points(spec: SearchSpec, points: np.ndarray) -> np.ndarray:
    evaluator = spec.resolved_evaluator
    if evaluator == "closed-form":
        return closed_form_batch(points)
    group = _group(spec.group)
    evaluate = eval_bareiss if evaluator == "bareiss" else eval_dedekind
    out = np.empty(len(points), dtype=object)
    for i, row in enumerate(points):
        out[i] = evaluate(group, Assignment.from_sequence(group, [int(x) for x in row]))
    return out


def _first_witnesses(spec: SearchSpec, points: np.ndarray) -> Dict[int, Witness]:
    """Value -> lexicographically smallest row producing it"""
    if not len(points):
        return {}
    order = np.lexsort(points.T[::-1])
    points = points[order]
    values = _evaluate_points(spec, points)
    found: Dict[int, Witness] = {}
    for value, row in zip(values, points):
        value = int(value)
        if spec.value_bound is not None and abs(value) > spec.value_bound:
            continue
        if value not in found:
            found[value] = tuple(int(x) for x in row)
    return found


def _prefix_length(spec: SearchSpec) -> int:
    """Number of leading coordinates fixed per chunk"""
    count, length = 1, 0
    for lo, hi in spec.box:
        if count >= spec.chunk_count:
            break
        count *= hi - lo + 1
        length += 1
    return length


def _scan_chunk(task: Tuple[dict, Tuple[int, ...]]) -> Tuple[Dict[int, Witness], int]:
    spec_data, prefix = task
    spec = SearchSpec.from_dict(spec_data)
    rest = spec.box[len(prefix):]
    shape = tuple(hi - lo + 1 for lo, hi in rest)
    if rest:
        grid = np.indices(shape, dtype=np.int64).reshape(len(rest), -1).T
        grid += np.array([lo for lo, _ in rest], dtype=np.int64)
    else:
        grid = np.zeros((1, 0), dtype=np.int64)
    head = np.tile(np.array(prefix, dtype=np.int64), (len(grid), 1))
    points = np.hstack([head, grid])
    return _first_witnesses(spec, points), len(points)


def _sample_chunk(task: Tuple[dict, int, np.random.SeedSequence]) -> Tuple[Dict[int, Witness], int]:
    spec_data, count, seed_seq = task
    spec = SearchSpec.from_dict(spec_data)
    rng = np.random.default_rng(seed_seq)
    lo = np.array([lo for lo, _ in spec.box], dtype=np.int64)
    hi = np.array([hi for _, hi in spec.box], dtype=np.int64)
    points = rng.integers(lo, hi + 1, size=(count, len(spec.box)), dtype=np.int64)
    return _first_witnesses(spec, points), count


def _run(worker, tasks: Iterable, workers: int) -> List[Tuple[Dict[int, Witness], int]]:
    tasks = list(tasks)
    if workers <= 1 or len(tasks) <= 1:
        return [worker(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(worker, tasks))


def _collect(spec: SearchSpec, results, started: float) -> ValueTable:
    table = ValueTable(spec)
    for found, count in results:
        for value, witness in found.items():
            table.record(value, witness)
        table.scanned += count
    table.duration = time.perf_counter() - started
    return table


def enumerate_values(spec: SearchSpec, workers: int = 1) -> ValueTable:
    """Scan every assignment in the box; deterministic for any worker count"""
    if spec.sample is not None:
        return sample_values(spec, workers)
    started = time.perf_counter()
    prefix_box = spec.box[:_prefix_length(spec)]
    spec_data = spec.to_dict()
    if prefix_box:
        prefixes = np.indices(tuple(hi - lo + 1 for lo, hi in prefix_box)).reshape(len(prefix_box), -1).T
        offsets = [lo for lo, _ in prefix_box]
        tasks = [(spec_data, tuple(int(x) + o for x, o in zip(p, offsets))) for p in prefixes]
    else:
        tasks = [(spec_data, ())]
    logger.info("scanning %d points of %s in %d chunks", spec.volume, spec.group, len(tasks))
    table = _collect(spec, _run(_scan_chunk, tasks, workers), started)
    logger.info("found %d values in %.2fs", len(table), table.duration)
    return table


def sample_values(spec: SearchSpec, workers: int = 1) -> ValueTable:
    """Seeded uniform sample of the box; chunk seeds are spawned from spec.seed"""
    if spec.sample is None:
        raise GroupError("sample_values needs spec.sample")
    started = time.perf_counter()
    chunks = min(spec.chunk_count, spec.sample)
    sizes = [spec.sample // chunks + (1 if i < spec.sample % chunks else 0) for i in range(chunks)]
    seeds = np.random.SeedSequence(spec.seed).spawn(chunks)
    spec_data = spec.to_dict()
    tasks = [(spec_data, size, seq) for size, seq in zip(sizes, seeds)]
    logger.info("sampling %d points of %s in %d chunks", spec.sample, spec.group, chunks)
    table = _collect(spec, _run(_sample_chunk, tasks, workers), started)
    logger.info("found %d values in %.2fs", len(table), table.duration)
    return table


def check_table(table: ValueTable, limit: Optional[int] = None):
    """Raise VerificationError if any stored witness disagrees with Bareiss"""
    mismatches = table.verify(limit)
    if mismatches:
        value, witness, recomputed = mismatches[0]
        raise VerificationError(f"witness {list(witness)} for {value} evaluates to {recomputed}")
