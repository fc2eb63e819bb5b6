"""
Acceptance suite: generated and mutated files round-trip or fail with the documented
error types and exit codes.

Usage:
    uv run pytest tests/integration/test_format_fuzz.py -m acceptance -v
"""

import io
from contextlib import redirect_stderr, redirect_stdout

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.app.cli import main
from src.components.file_io import (
    parse_edge_list,
    parse_instance,
    parse_solution,
    write_edge_list,
    write_instance,
    write_solution,
)
from src.entity.cfp_entity import CfpInstance
from src.models.bgep_bridge import cfp_to_bgep
from src.utils.exception import InstanceParseError, SizeContractError
from tests.strategies import instances, instances_with_solutions

FUZZ = settings(max_examples=1000, deadline=None)
ALPHABET = "01 \n#@x-9\u00ff"
TOKENS = ("99999999999999999999", "4294967296", "@row_weights", "@col_weights", "@max_cells")


@st.composite
def mutated_instance_text(draw: st.DrawFn) -> str:
    """Canonical text of a small unweighted instance with a few random character edits."""
    instance = draw(instances(max_m=4, max_p=4))
    if draw(st.booleans()):
        instance = CfpInstance(instance.matrix, max_cells=draw(st.integers(1, 4)))
    text = write_instance(instance)
    for _ in range(draw(st.integers(0, 3))):
        position = draw(st.integers(0, len(text)))
        action = draw(st.sampled_from(["insert", "delete", "replace"]))
        char = draw(st.sampled_from(ALPHABET) | st.sampled_from(TOKENS))
        if action == "insert":
            text = text[:position] + char + text[position:]
        elif action == "delete":
            text = text[:position] + text[position + 1 :]
        else:
            text = text[:position] + char + text[position + 1 :]
    return text


@pytest.mark.acceptance
@FUZZ
@given(instances(max_m=5, max_p=5, weighted=True))
def test_instance_text_round_trips(instance: CfpInstance) -> None:
    text = write_instance(instance)
    assert parse_instance(text) == instance
    assert write_instance(parse_instance(text)) == text


@pytest.mark.acceptance
@FUZZ
@given(instances_with_solutions(max_m=5, max_p=5))
def test_solution_and_edge_list_round_trip(case) -> None:
    instance, solution = case
    assert parse_solution(write_solution(solution)) == solution
    graph = cfp_to_bgep(instance)
    assert parse_edge_list(write_edge_list(graph)) == graph


@pytest.mark.acceptance
@FUZZ
@given(mutated_instance_text())
def test_mutated_text_parses_or_raises_documented_errors(text: str) -> None:
    try:
        instance = parse_instance(text)
    except (InstanceParseError, SizeContractError):
        return
    assert parse_instance(write_instance(instance)) == instance


@pytest.mark.acceptance
@FUZZ
@given(text=mutated_instance_text(), data=st.data())
def test_cli_exit_codes_on_mutated_files(tmp_path_factory, text: str, data: st.DataObject) -> None:
    raw = text.encode("utf-8")
    if data.draw(st.booleans()):
        position = data.draw(st.integers(0, len(raw)))
        raw = raw[:position] + b"\xff" + raw[position:]
    path = tmp_path_factory.mktemp("fuzz") / "instance.cfp"
    path.write_bytes(raw)
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(["convert", "--to", "bgep", str(path)])
    assert code in (0, 2, 65, 70)
    if code in (0, 2):
        instance = parse_instance(raw.decode("utf-8"))
        assert (code == 2) == (not instance.is_unweighted)
    if code == 0:
        assert parse_edge_list(out.getvalue()) == cfp_to_bgep(instance)
    else:
        assert err.getvalue().strip().splitlines()[-1].startswith("error:")
