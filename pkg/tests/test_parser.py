from fractions import Fraction

import pytest
from hypothesis import given, settings

from probsession.calculus import (
    Def, Int, NIL, Par, Restrict, Select, SessionName, SessionRole, Str, Var,
    components, struct_equal,
)
from probsession.errors import (
    BadInterval, DuplicateLabel, EmptyChoice, SourceLoadError, SourceSyntaxError,
    UnboundTypeVar, UnguardedRecursion,
)
from probsession.loaders import (
    MpsReader, parse_global_type, parse_local_type, parse_process, pretty_print,
)
from probsession.typesys import Interaction, Rec, SelectT, Sort, project

from strategies import processes


def test_select_with_mixed_probability_syntax():
    process = parse_process("s[rA][rB](+){ 0.6: yes(1). 0 , 2/5: no(true). 0 }")
    assert isinstance(process, Select)
    assert process.chan == SessionRole("s", "rA")
    assert process.partner == "rB"
    assert [b.prob for b in process.branches] == [Fraction(3, 5), Fraction(2, 5)]
    assert process.branches[0].payload == Int(1)


def test_var_channel_head():
    process = parse_process("def X(y) = y[rB]&{ l(x). 0 } in X(s[rA])")
    assert isinstance(process, Def)
    assert process.body.chan == Var("y")
    assert process.scope.args == (SessionRole("s", "rA"),)


def test_bare_identifiers_resolve_by_scope():
    process = parse_process(
        "new s . s[rA][rB]&{ l(x). s[rA][rB](+){ 1/2: m(x). 0 , 1/4: n(s). 0 , 1/4: k(w). 0 } }"
    )
    select = process.body.branches[0].cont
    payloads = [b.payload for b in select.branches]
    assert payloads == [Var("x"), SessionName("s"), Str("w")]


def test_quoted_string_is_never_a_variable():
    process = parse_process('s[rB][rA]&{ l(x). s[rB][rA](+){ 1: m("x"). 0 } }')
    assert process.branches[0].cont.branches[0].payload == Str("x")


def test_parallel_composition_nests_right():
    process = parse_process("0 | X() | (Y() | 0)")
    assert isinstance(process, Par)
    assert isinstance(process.right, Par)
    assert len(components(process)) == 4


def test_syntax_error_reports_position():
    text = "new s . (\n  s[rA][rB](+){ 0.5 yes(v). 0 }\n)"
    with pytest.raises(SourceSyntaxError) as info:
        parse_process(text, source="broken.mps")
    error = info.value
    assert error.line == 2
    assert error.col > 1
    assert error.source == "broken.mps"
    assert "':'" in error.expected


def test_duplicate_label_in_select():
    with pytest.raises(DuplicateLabel):
        parse_process("s[rA][rB](+){ 0.5: a(1). 0 , 0.5: a(2). 0 }")


def test_empty_branching_is_rejected():
    with pytest.raises(EmptyChoice):
        parse_process("s[rA][rB]&{ }")


def test_global_type_with_point_interval():
    gtype = parse_global_type("rA -> rB { 1/4: l(nat). end , [1/2, 3/4]: r(bool). end }")
    assert isinstance(gtype, Interaction)
    first, second = gtype.branches
    assert first.delta.is_point() and first.delta.lower == Fraction(1, 4)
    assert second.sort is Sort.BOOL


@pytest.mark.parametrize("text, error", [
    ("rA -> rB { [0,1]: l(nat). t }", UnboundTypeVar),
    ("rec t . t", UnguardedRecursion),
    ("rA -> rB { [3/4,1/4]: l(nat). end }", BadInterval),
    ("rA -> rB { [0,2]: l(nat). end }", BadInterval),
    ("rA -> rB { 3/2: l(nat). end }", BadInterval),
])
def test_ill_formed_global_types(text, error):
    with pytest.raises(error):
        parse_global_type(text)


def test_annotation_file_is_relative_to_process_file(fixture_dir):
    reader = MpsReader()
    process = reader.read(fixture_dir / "system_simple.mps")
    assert isinstance(process, Restrict)
    assert isinstance(process.annotation, Rec)
    assert reader.get_process() is process


def test_missing_annotation_file(tmp_path):
    target = tmp_path / "orphan.mps"
    target.write_text('new s : "absent.gty" . 0', encoding="utf-8")
    with pytest.raises(SourceLoadError):
        MpsReader().read(target)


def test_inline_annotation():
    process = parse_process("new s : < rA -> rB { 1: l(string). end } > . 0")
    assert isinstance(process.annotation, Interaction)


def test_projection_prints_as_local_type(global_types):
    gtype = global_types["ga_bounded.gty"]
    for role in ("rA", "rB"):
        local = project(gtype, role)
        assert parse_local_type(pretty_print(local)) == local


def test_erased_selection_parses_without_interval():
    local = parse_local_type("rB (+){ !yes(string). end , [0,1]: !no(string). end }")
    assert isinstance(local, SelectT)
    assert local.branches[0].delta is None
    assert local.branches[1].delta is not None


def test_local_interval_out_of_range():
    with pytest.raises(BadInterval) as info:
        parse_local_type("rB (+){ [0,2]: !yes(string). end }")
    assert (info.value.lower, info.value.upper) == ("0", "2")


def test_fixtures_print_and_reparse(corpus):
    for name, process in corpus.items():
        assert struct_equal(parse_process(pretty_print(process)), process), name


@settings(max_examples=1000)
@given(processes())
def test_printed_process_reads_back(process):
    assert struct_equal(parse_process(pretty_print(process)), process)


def test_nil_prints_as_zero():
    assert pretty_print(NIL) == "0"
    assert parse_process("0") == NIL
    assert parse_process("(0)") == NIL
