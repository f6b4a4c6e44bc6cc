"""Deterministic, checkpointable search over the rational parameter plane.

The search enumerates every reduced fraction of bounded height for each of
the two parameters, grades every in-range point with the verification
pipeline, and appends any point reaching level 1 or higher to a JSONL file.
Points the classifier marks singular are counted but not logged: along the
two singular curves they are endless and carry no search information.

Determinism is the backbone of everything here:

  * values are ordered by (height, numeric value), so the point stream is
    reproducible and low-height points come first;
  * the flat cursor index over the b x c grid defines block boundaries;
    workers grade disjoint blocks and results are flushed strictly in block
    order, so the output is identical for any worker count;
  * the checkpoint stores the cursor and per-level counts and is only
    advanced after a block's records are flushed.  On resume, any records
    at or past the stored cursor (flushed but not yet checkpointed when the
    process died) are dropped before continuing, so an interrupted run
    converges to exactly the uninterrupted output.

Rationals are serialized as exact "p/q" strings, never floats.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Iterator

from .coefficients import E21_PRINTED, E21_FORMS, Params
from .rationals import format_rational, parse_rational
from .verifier import LEVEL_PERFECT, grade

CHECKPOINT_VERSION = 1
DEFAULT_BLOCK_SIZE = 512
LEVELS = tuple(range(LEVEL_PERFECT + 1))


class CheckpointMismatch(RuntimeError):
    """An existing checkpoint was produced under a different configuration."""


@dataclass(frozen=True)
class SearchSpace:
    """What to search: height bound, optional closed ranges, e21 form."""

    height: int
    b_min: Fraction | None = None
    b_max: Fraction | None = None
    c_min: Fraction | None = None
    c_max: Fraction | None = None
    e21_form: str = E21_PRINTED

    def __post_init__(self):
        if self.height < 1:
            raise ValueError("height must be at least 1")
        if self.e21_form not in E21_FORMS:
            raise ValueError(f"e21_form must be one of {E21_FORMS}")


@lru_cache(maxsize=16)
def fraction_values(height: int) -> tuple[Fraction, ...]:
    """All reduced fractions p/q with |p| <= height and 1 <= q <= height.

    Ordered by (height, numeric value): the height-1 class is (-1, 0, 1),
    then each later class contributes the fractions whose height is exactly
    that value, sorted ascending.
    """
    ordered: list[Fraction] = []
    for h in range(1, height + 1):
        if h == 1:
            block = [Fraction(-1), Fraction(0), Fraction(1)]
        else:
            cls = set()
            for q in range(1, h + 1):
                if gcd(h, q) == 1:
                    cls.add(Fraction(h, q))
                    cls.add(Fraction(-h, q))
            for p in range(1, h):
                if gcd(p, h) == 1:
                    cls.add(Fraction(p, h))
                    cls.add(Fraction(-p, h))
            block = sorted(cls)
        ordered.extend(block)
    return tuple(ordered)


@lru_cache(maxsize=16)
def _value_index(height: int) -> dict[Fraction, int]:
    return {v: i for i, v in enumerate(fraction_values(height))}


def grid_size(space: SearchSpace) -> int:
    """Number of cursor positions (in-range or not) in the full b x c grid."""
    n = len(fraction_values(space.height))
    return n * n


def point_at(space: SearchSpace, index: int) -> Params:
    """The parameter point at a flat cursor index (row-major: b outer, c inner)."""
    values = fraction_values(space.height)
    n = len(values)
    return Params(values[index // n], values[index % n])


def point_index(space: SearchSpace, b: Fraction, c: Fraction) -> int:
    idx = _value_index(space.height)
    n = len(fraction_values(space.height))
    return idx[b] * n + idx[c]


def _in_range(space: SearchSpace, b: Fraction, c: Fraction) -> bool:
    if space.b_min is not None and b < space.b_min:
        return False
    if space.b_max is not None and b > space.b_max:
        return False
    if space.c_min is not None and c < space.c_min:
        return False
    if space.c_max is not None and c > space.c_max:
        return False
    return True


def enumerate_points(space: SearchSpace) -> Iterator[Params]:
    """Deterministic stream of all in-range points, in cursor order."""
    values = fraction_values(space.height)
    for b in values:
        if (space.b_min is not None and b < space.b_min) or (
            space.b_max is not None and b > space.b_max
        ):
            continue
        for c in values:
            if _in_range(space, b, c):
                yield Params(b, c)


# --- configuration digest and checkpoint file ------------------------------


def space_config(space: SearchSpace) -> dict:
    def fmt(v):
        return None if v is None else format_rational(v)

    return {
        "version": CHECKPOINT_VERSION,
        "height": space.height,
        "b_min": fmt(space.b_min),
        "b_max": fmt(space.b_max),
        "c_min": fmt(space.c_min),
        "c_max": fmt(space.c_max),
        "e21_form": space.e21_form,
    }


def config_digest(space: SearchSpace) -> str:
    canonical = json.dumps(space_config(space), sort_keys=True)
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _atomic_write(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as handle:
        handle.write(text)
    os.replace(tmp, path)


def _save_checkpoint(path: str, space: SearchSpace, cursor: int, counts: dict, singular: int) -> None:
    payload = {
        "version": CHECKPOINT_VERSION,
        "config": space_config(space),
        "config_digest": config_digest(space),
        "cursor": cursor,
        "counts": {str(level): counts[level] for level in LEVELS},
        "singular": singular,
        "updated": _now(),
    }
    _atomic_write(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _load_checkpoint(path: str) -> dict:
    with open(path, encoding="utf-8") as handle:
        payload = json.load(handle)
    if payload.get("version") != CHECKPOINT_VERSION:
        raise CheckpointMismatch(
            f"checkpoint version {payload.get('version')} != {CHECKPOINT_VERSION}"
        )
    return payload


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


# --- records ----------------------------------------------------------------


def make_record(b: Fraction, c: Fraction, verdict, e21_form: str) -> dict:
    return {
        "b": format_rational(b),
        "c": format_rational(c),
        "level": verdict.level,
        "reason": verdict.reason,
        "residuals": [format_rational(r) for r in verdict.residuals],
        "e21_form": e21_form,
        "ts": _now(),
    }


def load_records(path: str) -> list[dict]:
    records = []
    if not os.path.exists(path):
        return records
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line:
                records.append(json.loads(line))
    return records


def canonical_records(path: str) -> list[dict]:
    """Records with timestamps stripped, sorted by point: the comparable form.

    Two runs over the same space must agree on this exactly, whatever the
    worker count or interruption history.
    """
    stripped = []
    for record in load_records(path):
        record = dict(record)
        record.pop("ts", None)
        stripped.append(record)
    stripped.sort(key=lambda r: (parse_rational(r["b"]), parse_rational(r["c"])))
    return stripped


def hits_path_for(output_path: str) -> str:
    return output_path + ".hits"


def _truncate_records_beyond(path: str, space: SearchSpace, cursor: int) -> int:
    """Drop records at or past the cursor (and torn trailing lines); return kept count.

    Used on resume: such records were flushed after the last checkpoint
    write and will be regenerated.
    """
    if not os.path.exists(path):
        return 0
    kept = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                index = point_index(
                    space, parse_rational(record["b"]), parse_rational(record["c"])
                )
            except (ValueError, KeyError):
                continue  # torn write from a hard kill
            if index < cursor:
                kept.append(json.dumps(record, sort_keys=True))
    _atomic_write(path, "".join(line + "\n" for line in kept))
    return len(kept)


# --- block grading ----------------------------------------------------------


def _process_block(space: SearchSpace, start: int, end: int) -> dict:
    """Grade the points of one cursor block. Pure; runs in worker processes."""
    values = fraction_values(space.height)
    n = len(values)
    counts = {level: 0 for level in LEVELS}
    singular = 0
    visited = 0
    records = []
    for index in range(start, end):
        b = values[index // n]
        c = values[index % n]
        if not _in_range(space, b, c):
            continue
        visited += 1
        verdict = grade(b, c, space.e21_form)
        counts[verdict.level] += 1
        if verdict.reason == "singular":
            singular += 1
        if verdict.level >= 1:
            records.append(make_record(b, c, verdict, space.e21_form))
    return {
        "start": start,
        "end": end,
        "counts": counts,
        "singular": singular,
        "visited": visited,
        "records": records,
    }


def run(
    space: SearchSpace,
    jobs: int = 1,
    checkpoint_path: str | None = None,
    output_path: str | None = None,
    *,
    stop_on_hit: bool = False,
    block_size: int = DEFAULT_BLOCK_SIZE,
    max_blocks: int | None = None,
    log: Callable[[str], None] | None = None,
) -> dict:
    """Run (or resume) the search; returns a summary of cumulative counts.

    ``max_blocks`` bounds how many blocks this call processes before
    returning with completed=False; it exists so interruption and resume
    can be exercised deterministically.
    """
    if jobs < 1:
        raise ValueError("jobs must be at least 1")
    total = grid_size(space)
    cursor = 0
    counts = {level: 0 for level in LEVELS}
    singular = 0
    visited = 0

    if checkpoint_path and os.path.exists(checkpoint_path):
        payload = _load_checkpoint(checkpoint_path)
        if payload["config_digest"] != config_digest(space):
            raise CheckpointMismatch(
                "checkpoint was written for a different search configuration"
            )
        cursor = payload["cursor"]
        counts = {level: payload["counts"][str(level)] for level in LEVELS}
        singular = payload["singular"]
        if output_path:
            _truncate_records_beyond(output_path, space, cursor)
            _truncate_records_beyond(hits_path_for(output_path), space, cursor)

    blocks = [(s, min(s + block_size, total)) for s in range(cursor, total, block_size)]
    truncated_run = max_blocks is not None and max_blocks < len(blocks)
    if max_blocks is not None:
        blocks = blocks[:max_blocks]

    out = open(output_path, "a", encoding="utf-8") if output_path else None
    hits_out = None
    stopped_on_hit = False
    results = _block_results(space, blocks, jobs)
    try:
        for done, result in enumerate(results, start=1):
            block_hit = False
            for record in result["records"]:
                line = json.dumps(record, sort_keys=True)
                if out:
                    out.write(line + "\n")
                if record["level"] == LEVEL_PERFECT:
                    block_hit = True
                    if output_path:
                        if hits_out is None:
                            hits_out = open(
                                hits_path_for(output_path), "a", encoding="utf-8"
                            )
                        hits_out.write(line + "\n")
            if out:
                out.flush()
            if hits_out:
                hits_out.flush()
            for level in LEVELS:
                counts[level] += result["counts"][level]
            singular += result["singular"]
            visited += result["visited"]
            cursor = result["end"]
            if checkpoint_path:
                _save_checkpoint(checkpoint_path, space, cursor, counts, singular)
            if log and (done % 32 == 0 or cursor >= total):
                log(f"cursor {cursor}/{total} level-counts "
                    + " ".join(f"{lvl}:{counts[lvl]}" for lvl in LEVELS))
            if block_hit and stop_on_hit:
                stopped_on_hit = True
                break
    finally:
        results.close()
        if out:
            out.close()
        if hits_out:
            hits_out.close()

    return {
        "counts": counts,
        "singular": singular,
        "visited": visited,
        "cursor": cursor,
        "total": total,
        "completed": cursor >= total,
        "interrupted": truncated_run and cursor < total and not stopped_on_hit,
        "hits": counts[LEVEL_PERFECT],
        "stopped_on_hit": stopped_on_hit,
        "e21_form": space.e21_form,
    }


def _block_results(space: SearchSpace, blocks: list, jobs: int):
    """Yield block results strictly in block order, regardless of worker count."""
    if jobs <= 1 or len(blocks) <= 1:
        for start, end in blocks:
            yield _process_block(space, start, end)
        return
    window = jobs * 4
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = {}
        submitted = 0
        emitted = 0
        while emitted < len(blocks):
            while submitted < len(blocks) and submitted - emitted < window:
                start, end = blocks[submitted]
                futures[submitted] = pool.submit(_process_block, space, start, end)
                submitted += 1
            result = futures.pop(emitted).result()
            emitted += 1
            yield result


# --- form audit --------------------------------------------------------------


def e21_form_discrepancies(records_left: list[dict], records_right: list[dict]) -> list[dict]:
    """Points where two runs (normally printed vs common form) disagree.

    Returns one entry per point whose (level, reason) differs, flagging
    whether either side reached level 5 or above.  Points absent from a
    side never got past level 0 there.
    """
    def index(records):
        return {(r["b"], r["c"]): r for r in records}

    left = index(records_left)
    right = index(records_right)
    differences = []
    for key in sorted(
        set(left) | set(right),
        key=lambda bc: (parse_rational(bc[0]), parse_rational(bc[1])),
    ):
        rec_left = left.get(key)
        rec_right = right.get(key)
        left_state = {
            "level": rec_left["level"] if rec_left else 0,
            "reason": rec_left["reason"] if rec_left else None,
        }
        right_state = {
            "level": rec_right["level"] if rec_right else 0,
            "reason": rec_right["reason"] if rec_right else None,
        }
        if left_state != right_state:
            differences.append(
                {
                    "b": key[0],
                    "c": key[1],
                    "left": left_state,
                    "right": right_state,
                    "level5_plus": max(left_state["level"], right_state["level"]) >= 5,
                }
            )
    return differences
