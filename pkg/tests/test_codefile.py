import numpy as np
import pytest

from codedist.code import AmbientSpace, LinearCode
from codedist.codefile import code_digest, format_code, parse_code, parse_generator, read_code, write_code
from codedist.constructions import builtin, builtin_names
from codedist.errors import ParseError
from codedist.field import GF


@pytest.mark.parametrize("name", builtin_names())
def test_builtins_round_trip(name):
    C = builtin(name)
    D = parse_code(format_code(C))
    assert D == C
    assert format_code(D) == format_code(C)
    assert code_digest(D) == code_digest(C)


def test_file_round_trip(tmp_path):
    C = builtin("duality-C1")
    path = tmp_path / "c1.code"
    write_code(C, path)
    assert read_code(path) == C


def test_comments_and_blank_lines():
    text = "# a code\n\nmetric hamming 3   # three coordinates\nfield 2 1\ngenerator\n1 1 0\n\n0 1 1 # second\n"
    C = parse_code(text)
    assert C.k == 2 and C.N == 3


def test_raw_rows_are_kept():
    text = "metric hamming 3\nfield 2 1\ngenerator\n1 1 0\n0 1 1\n1 1 1\n"
    _, _, ext, rows = parse_generator(text)
    assert ext is None
    assert rows.tolist() == [[1, 1, 0], [0, 1, 1], [1, 1, 1]]


def test_linear_extension():
    text = "metric rank 2 2\nfield 2 1\nlinear extension 2\ngenerator\n1 2\n"
    C = parse_code(text)
    assert C.k == 2 and C.extension is not None
    assert parse_code(format_code(C)) == C


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("field 2 1\n", 1),
    ("metric hamming x\n", 1),
    ("metric hamming 3\nfield 4 1\ngenerator\n", 2),
    ("metric hamming 3\nfield 2 1\n1 1 0\n", 3),
    ("metric hamming 3\nfield 2 1\ngenerator\n1 1 0\n1 1\n", 5),
    ("metric hamming 3\nfield 2 1\ngenerator\n1 2 0\n", 4),
    ("# c\nmetric hamming 3\nfield 2 1\ngenerator\n1 a 0\n", 5),
    ("metric hamming 4\nfield 2 1\nlinear extension 2\ngenerator\n", 3),
    ("metric rank 2 2\nfield 2 1\nlinear extension 2\ngenerator\n1 4\n", 5),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_code(text)
    assert exc.value.line == line


def test_digest_depends_on_generator():
    a = LinearCode(GF(2), AmbientSpace.hamming(3), [[1, 1, 0]])
    b = LinearCode(GF(2), AmbientSpace.hamming(3), [[1, 0, 1]])
    assert code_digest(a) != code_digest(b)
    assert np.array_equal(parse_code(format_code(a)).gen, a.gen)
