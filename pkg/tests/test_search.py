import json
import os
from fractions import Fraction

import pytest

from cuboidsearch.coefficients import Params
from cuboidsearch.rationals import height, parse_rational
from cuboidsearch.search import (
    CheckpointMismatch,
    SearchSpace,
    canonical_records,
    config_digest,
    e21_form_discrepancies,
    enumerate_points,
    fraction_values,
    grid_size,
    hits_path_for,
    load_records,
    point_at,
    point_index,
    run,
)
from cuboidsearch.verifier import Verdict, grade

F = Fraction


def records_in_order(path):
    out = []
    for record in load_records(path):
        record.pop("ts")
        out.append(record)
    return out


# --- enumeration -------------------------------------------------------------


def test_fraction_values_height_one():
    assert fraction_values(1) == (F(-1), F(0), F(1))


def test_fraction_values_height_two():
    assert fraction_values(2) == (F(-1), F(0), F(1), F(-2), F(-1, 2), F(1, 2), F(2))


def test_fraction_values_ordered_by_height_no_duplicates():
    values = fraction_values(8)
    assert len(values) == len(set(values)) == 87
    heights = [height(v) for v in values]
    assert heights == sorted(heights)
    assert all(h <= 8 for h in heights)


def test_never_emits_unreduced_fraction():
    # 2/4 reduces to 1/2, which appears exactly once
    values = fraction_values(4)
    assert values.count(F(1, 2)) == 1


def test_enumerate_height_one():
    points = list(enumerate_points(SearchSpace(height=1)))
    assert len(points) == 9
    assert set(points) == {(b, c) for b in fraction_values(1) for c in fraction_values(1)}


def test_enumerate_height_two_counts():
    # 6 nonzero reduced fractions of height <= 2 plus zero: 7 values, 49 points
    points = list(enumerate_points(SearchSpace(height=2)))
    assert len(points) == 49


def test_enumerate_respects_ranges():
    space = SearchSpace(height=2, b_min=F(0), c_min=F(1, 2), c_max=F(1))
    points = list(enumerate_points(space))
    assert all(b >= 0 and F(1, 2) <= c <= 1 for b, c in points)
    assert Params(F(0), F(1, 2)) in points
    assert all(isinstance(p, Params) for p in points)


def test_point_index_round_trip():
    space = SearchSpace(height=3)
    for index in range(grid_size(space)):
        b, c = point_at(space, index)
        assert point_index(space, b, c) == index


def test_invalid_space_rejected():
    with pytest.raises(ValueError):
        SearchSpace(height=0)
    with pytest.raises(ValueError):
        SearchSpace(height=3, e21_form="nope")


# --- run/persist/resume -------------------------------------------------------


def test_run_small_grid(tmp_path):
    out = str(tmp_path / "records.jsonl")
    ck = str(tmp_path / "checkpoint.json")
    summary = run(SearchSpace(height=3), jobs=1, checkpoint_path=ck, output_path=out)
    assert summary["completed"]
    assert summary["visited"] == grid_size(SearchSpace(height=3))
    assert sum(summary["counts"].values()) == summary["visited"]
    assert summary["hits"] == 0

    records = load_records(out)
    assert all(record["level"] >= 1 for record in records)
    assert len(records) == sum(v for k, v in summary["counts"].items() if k >= 1)
    for record in records:
        assert set(record) == {"b", "c", "level", "reason", "residuals", "e21_form", "ts"}
        assert record["e21_form"] == "printed"


def test_singular_points_counted_not_logged(tmp_path):
    out = str(tmp_path / "records.jsonl")
    summary = run(
        SearchSpace(height=3), jobs=1, checkpoint_path=None, output_path=out
    )
    assert summary["singular"] > 0
    logged = {(r["b"], r["c"]) for r in load_records(out)}
    assert ("1/2", "3") not in logged  # first-curve point inside the grid
    # and the level-0 count includes every singular point
    assert summary["counts"][0] >= summary["singular"]


def test_jobs_do_not_change_output(tmp_path):
    space = SearchSpace(height=4)
    paths = {}
    for jobs in (1, 2):
        out = str(tmp_path / f"records{jobs}.jsonl")
        run(space, jobs=jobs, checkpoint_path=None, output_path=out, block_size=128)
        paths[jobs] = out
    assert records_in_order(paths[1]) == records_in_order(paths[2])
    assert canonical_records(paths[1]) == canonical_records(paths[2])


def test_interrupt_and_resume_match_uninterrupted(tmp_path):
    space = SearchSpace(height=4)
    straight = str(tmp_path / "straight.jsonl")
    run(space, jobs=1, checkpoint_path=None, output_path=straight, block_size=64)

    out = str(tmp_path / "resumed.jsonl")
    ck = str(tmp_path / "ck.json")
    first = run(space, jobs=1, checkpoint_path=ck, output_path=out, block_size=64, max_blocks=3)
    assert first["interrupted"] and not first["completed"]
    second = run(space, jobs=2, checkpoint_path=ck, output_path=out, block_size=64)
    assert second["completed"]
    assert records_in_order(out) == records_in_order(straight)

    reference = run(space, jobs=1, checkpoint_path=None, output_path=None)
    assert second["counts"] == reference["counts"]
    assert second["singular"] == reference["singular"]


def test_resume_drops_uncheckpointed_tail(tmp_path):
    # simulate dying after records were flushed but before the checkpoint
    # advanced: records at or past the cursor plus a torn final line
    space = SearchSpace(height=4)
    straight = str(tmp_path / "straight.jsonl")
    run(space, jobs=1, checkpoint_path=None, output_path=straight, block_size=64)

    out = str(tmp_path / "crashed.jsonl")
    ck = str(tmp_path / "ck.json")
    partial = run(space, jobs=1, checkpoint_path=ck, output_path=out, block_size=64, max_blocks=2)
    cursor = partial["cursor"]
    tail = [
        record
        for record in load_records(straight)
        if point_index(space, parse_rational(record["b"]), parse_rational(record["c"])) >= cursor
    ]
    assert tail, "need records past the cursor for a meaningful simulation"
    with open(out, "a", encoding="utf-8") as handle:
        for record in tail[:3]:
            handle.write(json.dumps(record, sort_keys=True) + "\n")
        handle.write('{"torn":')

    final = run(space, jobs=1, checkpoint_path=ck, output_path=out, block_size=64)
    assert final["completed"]
    assert records_in_order(out) == records_in_order(straight)


def test_resume_after_completion_is_idempotent(tmp_path):
    space = SearchSpace(height=2)
    out = str(tmp_path / "records.jsonl")
    ck = str(tmp_path / "ck.json")
    first = run(space, jobs=1, checkpoint_path=ck, output_path=out)
    records_after_first = records_in_order(out)
    again = run(space, jobs=1, checkpoint_path=ck, output_path=out)
    assert again["counts"] == first["counts"]
    assert again["visited"] == 0  # nothing left to do
    assert records_in_order(out) == records_after_first


def test_checkpoint_mismatch_detected(tmp_path):
    out = str(tmp_path / "records.jsonl")
    ck = str(tmp_path / "ck.json")
    run(SearchSpace(height=2), jobs=1, checkpoint_path=ck, output_path=out)
    with pytest.raises(CheckpointMismatch):
        run(SearchSpace(height=3), jobs=1, checkpoint_path=ck, output_path=out)
    with pytest.raises(CheckpointMismatch):
        run(
            SearchSpace(height=2, e21_form="common"),
            jobs=1,
            checkpoint_path=ck,
            output_path=out,
        )


def test_config_digest_distinguishes_spaces():
    assert config_digest(SearchSpace(height=2)) != config_digest(SearchSpace(height=3))
    assert config_digest(SearchSpace(height=2)) != config_digest(
        SearchSpace(height=2, b_min=F(0))
    )
    assert config_digest(SearchSpace(height=2)) == config_digest(SearchSpace(height=2))


def test_records_replay_through_grade(tmp_path):
    out = str(tmp_path / "records.jsonl")
    run(SearchSpace(height=4), jobs=1, checkpoint_path=None, output_path=out)
    records = load_records(out)
    assert records
    for record in records:
        verdict = grade(parse_rational(record["b"]), parse_rational(record["c"]))
        assert verdict.level == record["level"]
        assert verdict.reason == record["reason"]
        assert [str(r) for r in verdict.residuals] == record["residuals"]


def test_stop_on_hit(monkeypatch, tmp_path):
    # no real hit is known; inject one to exercise the halt and the hit file
    import cuboidsearch.search as search_module

    target = (F(1), F(1))
    real_grade = grade

    def fake_grade(b, c, form="printed"):
        if (b, c) == target:
            return Verdict(6, "perfect-cuboid", edges=(F(1), F(1), F(1)))
        return real_grade(b, c, form)

    monkeypatch.setattr(search_module, "grade", fake_grade)
    out = str(tmp_path / "records.jsonl")
    summary = run(
        SearchSpace(height=2),
        jobs=1,
        checkpoint_path=None,
        output_path=out,
        stop_on_hit=True,
        block_size=8,
    )
    assert summary["stopped_on_hit"]
    assert summary["hits"] == 1
    assert not summary["completed"]
    hits = load_records(hits_path_for(out))
    assert len(hits) == 1 and hits[0]["level"] == 6
    # the hit also appears in the main record stream
    assert any(r["level"] == 6 for r in load_records(out))


def test_e21_form_recorded_and_no_low_height_discrepancies(tmp_path):
    printed_out = str(tmp_path / "printed.jsonl")
    common_out = str(tmp_path / "common.jsonl")
    run(SearchSpace(height=4, e21_form="printed"), jobs=1, checkpoint_path=None, output_path=printed_out)
    run(SearchSpace(height=4, e21_form="common"), jobs=1, checkpoint_path=None, output_path=common_out)
    printed_records = load_records(printed_out)
    common_records = load_records(common_out)
    assert all(r["e21_form"] == "printed" for r in printed_records)
    assert all(r["e21_form"] == "common" for r in common_records)
    # nothing reaches the auxiliary stage at this height, so the forms agree
    assert e21_form_discrepancies(printed_records, common_records) == []


def test_e21_form_discrepancies_detects_differences():
    left = [
        {"b": "1", "c": "2", "level": 5, "reason": "pythagoras-failed"},
        {"b": "1", "c": "3", "level": 2, "reason": "edge-root-nonpositive"},
    ]
    right = [
        {"b": "1", "c": "2", "level": 4, "reason": "e21-printed-pole"},
        {"b": "1", "c": "3", "level": 2, "reason": "edge-root-nonpositive"},
    ]
    diffs = e21_form_discrepancies(left, right)
    assert len(diffs) == 1
    assert diffs[0]["b"] == "1" and diffs[0]["c"] == "2"
    assert diffs[0]["level5_plus"]


@pytest.mark.xfail(strict=False, reason="advisory throughput guard, not acceptance-blocking")
def test_prefilter_rejects_most_nonsingular_points(tmp_path):
    summary = run(SearchSpace(height=6), jobs=1, checkpoint_path=None, output_path=None)
    nonsingular = summary["visited"] - summary["singular"]
    rejected_at_prefilter = summary["counts"][0] - summary["singular"]
    assert rejected_at_prefilter >= 0.95 * nonsingular
