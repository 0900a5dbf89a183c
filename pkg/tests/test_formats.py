import pytest
from hypothesis import given, settings, strategies as st

from fullerene5.errors import BadHeader, ParseError, RotationInconsistent, TruncatedRecord
from fullerene5.formats import (
    PLANAR_CODE_HEADER,
    read_planar_code,
    read_text_rotation,
    write_planar_code,
    write_report,
    write_text_rotation,
)
from fullerene5.generator import dodecahedron
from fullerene5.graph import validate_fullerene

from conftest import DATA, c60, tube


def test_dodecahedron_fixture_reads():
    g = read_text_rotation((DATA / "dodecahedron.txt").read_bytes())
    assert g == dodecahedron()
    assert validate_fullerene(g).is_fullerene


@pytest.mark.parametrize("r", range(6))
def test_text_round_trip_is_byte_stable(r):
    data = write_text_rotation(tube(r))
    g = read_text_rotation(data)
    assert g == tube(r)
    assert write_text_rotation(g) == data


@pytest.mark.parametrize("r", range(6))
def test_planar_code_round_trip_is_byte_stable(r):
    data = write_planar_code([tube(r)])
    (g,) = read_planar_code(data)
    assert g == tube(r)
    assert write_planar_code([g]) == data


def test_planar_code_stream_of_several_graphs():
    graphs = [tube(0), tube(1), c60()]
    assert read_planar_code(write_planar_code(graphs)) == graphs


def test_planar_code_is_clockwise_and_one_based():
    data = write_planar_code([dodecahedron()])
    first = data[len(PLANAR_CODE_HEADER) + 1:len(PLANAR_CODE_HEADER) + 5]
    ccw = dodecahedron().rotation[0]
    assert list(first) == [w + 1 for w in reversed(ccw)] + [0]


def test_c60_fixture_round_trips():
    raw = (DATA / "c60.pc").read_bytes()
    assert write_planar_code(read_planar_code(raw)) == raw


def test_bad_header():
    with pytest.raises(BadHeader):
        read_planar_code(b">>graph6<<")


def test_truncated_record():
    data = write_planar_code([dodecahedron()])
    with pytest.raises(TruncatedRecord):
        read_planar_code(data[:-5])


def test_text_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        read_text_rotation(b"4\n0: 1 2 3\n1: x y z\n")
    assert err.value.line == 3
    with pytest.raises(ParseError):
        read_text_rotation(b"")


def test_text_rejects_non_cubic():
    with pytest.raises(RotationInconsistent):
        read_text_rotation(b"2\n0: 1\n1: 0\n")


def test_comments_and_blank_lines_ignored():
    body = write_text_rotation(tube(0)).decode()
    noisy = "# header\n\n" + body.replace("\n", "  # trailing\n", 3)
    assert read_text_rotation(noisy.encode()) == tube(0)


def test_report_is_deterministic():
    a = write_report({"b": [1, 2], "a": {"y": 1, "x": 2}})
    b = write_report({"a": {"x": 2, "y": 1}, "b": [1, 2]})
    assert a == b
    assert a.endswith("\n") and a.index('"a"') < a.index('"b"')


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 5), st.randoms(use_true_random=False), st.booleans())
def test_round_trips_under_relabel(r, rnd, flip):
    g = tube(r)
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabeled(perm)
    if flip:
        h = h.reflected()
    assert read_text_rotation(write_text_rotation(h)) == h
    assert read_planar_code(write_planar_code([h])) == [h]
