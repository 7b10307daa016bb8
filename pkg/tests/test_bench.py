import pytest

from recurrence_bounds import RecurrenceSystem, run_bench
from recurrence_bounds._bench import BENCH_COLUMNS


def test_bench_table(ex_sharp: RecurrenceSystem) -> None:
    table = run_bench(ex_sharp, 2)
    assert list(table.columns) == BENCH_COLUMNS
    assert len(table) == 4
    assert list(table["J"]) == [1, 1, 2, 2]
    assert list(table["mode"]) == ["global", "componentwise"] * 2
    assert (table["ms"] >= 0).all()

    rows = table.set_index(["J", "mode"])
    assert rows.loc[(1, "global"), "den_degree"] == 2
    assert rows.loc[(1, "global"), "iters"] == 3
    assert rows.loc[(2, "global"), "den_degree"] <= 2


def test_bench_reports_cut_off_runs(diag_x_1: RecurrenceSystem) -> None:
    table = run_bench(diag_x_1, 1, cutoff=4)
    componentwise = table[table["mode"] == "componentwise"].iloc[0]
    assert componentwise["iters"] == 5
    assert componentwise["den_degree"] == 0


def test_bench_needs_a_positive_jmax(ex_sharp: RecurrenceSystem) -> None:
    with pytest.raises(ValueError):
        run_bench(ex_sharp, 0)
