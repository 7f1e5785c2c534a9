"""Tests for `src.cli.descriptor_file`: parsing, serialization and building."""

from __future__ import annotations

from fractions import Fraction

import pytest

from src.algebra.chains import ChainSyntaxError, RationalIntervalChain
from src.algebra.gmodule import XElement
from src.classify.space_class import INFINITE, contains_c0
from src.cli.descriptor_file import (
    ClassSection,
    build,
    load_descriptor,
    parse_descriptor,
    resolve_vector,
    serialize_descriptor,
)
from src.config import settings
from src.errors import DescriptorError, PreconditionError
from src.space.vectors import Vector

SAMPLE = """\
# two orbit classes
[field]
p = 5
[chain]
qinterval01
[space]
e1: (b@1/2, g^0)   # first
e2: (b@1, g^-1)
[class]
complete = true
default = 0
b@1/2 = infinite
[vectors]
u = e1 + 5*e2
"""


def test_parse_sample():
    df = parse_descriptor(SAMPLE)
    assert df.p == 5
    assert df.chain == RationalIntervalChain()
    assert df.space == {"e1": XElement(Fraction(1, 2), 0), "e2": XElement(Fraction(1), -1)}
    assert df.space_class == ClassSection(complete=True, default=0, entries={Fraction(1, 2): INFINITE})
    assert df.vectors == {"u": Vector({"e1": 1, "e2": 5})}


def test_prime_defaults_from_settings():
    assert parse_descriptor("[chain]\nfinite:1\n").p == settings.ULTRANORM_DEFAULT_PRIME


@pytest.mark.parametrize(
    "text, line",
    [
        ("[chain]\nfinite:1\n[space]\ne1 (b@0, g^0)\n", 4),
        ("[chian]\nfinite:1\n", 1),
        ("finite:1\n[chain]\n", 1),
        ("[chain]\nfinite:1\n[chain]\n", 3),
        ("[space]\ne1: (b@0, g^0)\n[chain]\nfinite:1\n", 2),
        ("[field]\np = 4\n[chain]\nfinite:1\n", 2),
        ("[field]\np = five\n[chain]\nfinite:1\n", 2),
        ("[chain]\nfinite:1\n[space]\ne1: (b@0, g^0)\ne1: (b@0, g^1)\n", 5),
        ("[chain]\nfinite:1\n[class]\ncomplete = maybe\n", 4),
        ("[chain]\nfinite:1\n[class]\nb@0 = lots\n", 4),
        ("[chain]\nfinite:1\n[class]\ncolour = red\n", 4),
        ("[chain]\nfinite:1\n[space]\ne1: (b@0, g^0)\n[vectors]\nu = e1 + e2\n", 6),
        ("[chain]\nfinite:1\nfinite:2\n", 3),
    ],
)
def test_errors_carry_the_line(text, line):
    with pytest.raises(DescriptorError) as excinfo:
        parse_descriptor(text)
    assert excinfo.value.line == line
    assert str(excinfo.value).startswith(f"line {line}: ")


def test_chain_errors_keep_their_type():
    with pytest.raises(ChainSyntaxError) as excinfo:
        parse_descriptor("# header\n[chain]\nreals\n")
    assert excinfo.value.line == 3


def test_missing_chain():
    with pytest.raises(DescriptorError) as excinfo:
        parse_descriptor("[field]\np = 5\n")
    assert excinfo.value.line is None


@pytest.mark.parametrize("name", ["x1.space", "x2.space", "c0.space", "descending.space"])
def test_bundled_descriptors_survive_serialization(spaces_dir, name):
    df = load_descriptor(spaces_dir / name)
    assert parse_descriptor(serialize_descriptor(df)) == df


def test_load_missing_file(tmp_path):
    with pytest.raises(DescriptorError):
        load_descriptor(tmp_path / "nope.space")


def test_load_non_utf8_file(tmp_path):
    path = tmp_path / "latin1.space"
    path.write_bytes("# caf\xe9\n[chain]\nfinite:1\n".encode("latin-1"))
    with pytest.raises(DescriptorError, match="not valid UTF-8"):
        load_descriptor(path)


def test_build(spaces_dir):
    sp, sc = build(load_descriptor(spaces_dir / "c0.space"))
    assert sp.dim == 9
    assert sp.field_cfg.p == 5
    assert contains_c0(sc)

    sp, sc = build(load_descriptor(spaces_dir / "x1.space"))
    # without [class] the census of [space] is used
    assert sc.multiplicity == {Fraction(1, 2): 1, Fraction(1, 3): 1, Fraction(1): 1, Fraction(3, 4): 1, Fraction(1, 8): 1}
    assert not contains_c0(sc)


def test_incomplete_class_is_carried_over():
    df = parse_descriptor("[chain]\nfinite:1\n[space]\ne1: (b@0, g^0)\n[class]\ncomplete = false\n")
    _, sc = build(df)
    assert not sc.completeness_assumed


class TestResolveVector:
    @pytest.fixture
    def loaded(self, spaces_dir):
        df = load_descriptor(spaces_dir / "c0.space")
        sp, _ = build(df)
        return df, sp

    def test_named(self, loaded):
        df, sp = loaded
        assert resolve_vector(df, sp, "w") == Vector({"e1": 1, "e2": 5})

    def test_literal(self, loaded):
        df, sp = loaded
        assert resolve_vector(df, sp, "e3") == Vector.unit("e3")
        assert resolve_vector(df, sp, "2*e1 - e9") == Vector({"e1": 2, "e9": -1})

    def test_unknown_name(self, loaded):
        df, sp = loaded
        with pytest.raises(PreconditionError):
            resolve_vector(df, sp, "q")

    def test_literal_with_unknown_index(self, loaded):
        df, sp = loaded
        with pytest.raises(DescriptorError):
            resolve_vector(df, sp, "e1 + e10")
