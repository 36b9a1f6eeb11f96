import copy
import json

import pytest

from bimon.braided import check_braided_laws
from bimon.core import CapabilityError, CompositionError, check_bimonoidal_laws
from bimon.instances import UnknownInstance, make_instance
from bimon.involution import check_anti_involution
from bimon.matrices import MatrixObj, gl_member
from bimon.table import (
    TableError, check_table_components, load_table, table_document, thin_graded_boolean,
)

from conftest import dual_mod_two, failing_laws


@pytest.fixture
def thin():
    return thin_graded_boolean()


def test_thin_example_passes_all_suites(thin, spec):
    T = load_table(thin)
    assert T.key == "table:thin-graded-boolean"
    assert check_bimonoidal_laws(T, spec).passed
    assert check_anti_involution(T, spec).passed
    assert check_braided_laws(T, spec).passed
    assert check_table_components(T).passed


def test_thin_components(thin):
    T = load_table(thin)
    assert T.component("1") == T.component("u") != T.component("0")


@pytest.mark.parametrize("key", ["discrete:Z/4", "discrete:M2F2", "discrete:Z/3"])
def test_export_round_trip(key, small_spec):
    C = make_instance(key)
    objs = C.enumerate_objects(3)
    T = load_table(table_document(C, objs))
    assert len(T.objects) == len(objs)
    assert check_bimonoidal_laws(T, small_spec).passed
    assert check_table_components(T).passed
    again = table_document(T, T.enumerate_objects(0))
    assert [json.loads(A) for A in load_table(json.dumps(again)).objects] == T.objects


def test_export_refuses_open_object_sets(E):
    with pytest.raises(ValueError):
        table_document(E, E.enumerate_objects(2))


def test_schema_error_has_json_path(thin):
    doc = copy.deepcopy(thin)
    del doc["zero"]
    with pytest.raises(TableError) as info:
        load_table(doc)
    assert info.value.path == "$"
    doc = copy.deepcopy(thin)
    doc["compose"][3] = ["idu", "idu"]
    with pytest.raises(TableError) as info:
        load_table(doc)
    assert info.value.path.startswith("$.compose[3]")


def test_positional_typing_error(thin):
    doc = copy.deepcopy(thin)
    doc["compose"][3][2] = "t"
    with pytest.raises(TableError) as info:
        load_table(doc)
    assert str(info.value).startswith("$.compose[3][2]: ")


def test_unknown_object_and_missing_row(thin):
    doc = copy.deepcopy(thin)
    doc["morphisms"][3]["cod"] = "v"
    with pytest.raises(TableError) as info:
        load_table(doc)
    assert info.value.path == "$.morphisms[3].cod"
    doc = copy.deepcopy(thin)
    doc["compose"].pop()
    with pytest.raises(TableError):
        load_table(doc)


def test_invalid_json_text():
    with pytest.raises(TableError) as info:
        load_table("{not json")
    assert info.value.path == "$"
    with pytest.raises(TableError):
        load_table("/nonexistent/table.json")


def test_components_mismatch_reported(thin):
    doc = copy.deepcopy(thin)
    doc["components"]["u"] = "zero"
    report = check_table_components(load_table(doc))
    assert failing_laws(report) == ["table.components.union_find"]
    assert report.failing()[0].witness["lhs"] != report.failing()[0].witness["rhs"]


def test_components_undeclared_is_skipped(thin):
    doc = copy.deepcopy(thin)
    del doc["components"]
    report = check_table_components(load_table(doc))
    assert report.passed and report.skipped


def test_hand_built_table_lawful_and_mutated(small_spec):
    assert check_bimonoidal_laws(load_table(dual_mod_two()), small_spec).passed
    report = check_bimonoidal_laws(load_table(dual_mod_two(c_oplus_11=1)), small_spec)
    assert "d_r.left_sum" in failing_laws(report)
    report = check_bimonoidal_laws(load_table(dual_mod_two(x1_squared=1)), small_spec)
    assert "category.inverse" in failing_laws(report)


def test_compose_mismatch_raises(thin):
    T = load_table(thin)
    t = next(f for f in T.morphisms_from("1") if f.cod == "u")
    with pytest.raises(CompositionError):
        T.compose(t, t)


def test_table_key_and_file(tmp_path, thin):
    assert make_instance("table:thin-graded-boolean").objects == ["0", "1", "u"]
    path = tmp_path / "thin.json"
    path.write_text(json.dumps(thin))
    assert make_instance(f"table:{path}").key == f"table:{path}"
    with pytest.raises(TableError):
        make_instance("table:/nonexistent.json")
    with pytest.raises(UnknownInstance):
        make_instance("tables:x")


def test_no_group_completion_for_gl(thin):
    T = load_table(thin)
    with pytest.raises(CapabilityError):
        gl_member(T, MatrixObj.of([["1"]]))
