"""
Tests for instance files: text and JSON parsing, validation and emission.
"""

import json
from dataclasses import replace

import pytest

from conftest import INSTANCES, instance_path
from instance import build_semigroup, emit_config, load_config, parse_config, to_json_dict
from shared.errors import (
    BadShape, ConfigSyntaxError, EmptyColumn, EmptyRow, UnknownGroupElement, ValidationError,
)


C2_TEXT = """\
name = tiny
group = cyclic 2
sandwich:
e o
a e
end
"""


@pytest.mark.parametrize('path', sorted(p.name for p in INSTANCES.iterdir()))
def test_bundled_instances_parse_and_roundtrip(path):
    config = load_config(str(INSTANCES / path))
    assert parse_config(emit_config(config)) == config
    assert parse_config(json.dumps(to_json_dict(config))) == config


def test_defaults_come_from_the_sandwich():
    config = parse_config(C2_TEXT)
    assert (config.i_size, config.lambda_size) == (2, 2)
    assert config.sandwich == (('e', 'o'), ('a', 'e'))
    assert config.force is False
    s = build_semigroup(config)
    assert s.nonzero_size == 8


def test_comments_and_blank_lines_are_ignored():
    text = "# header\n\n" + C2_TEXT.replace('group = cyclic 2', 'group = cyclic 2   # C2')
    assert parse_config(text) == parse_config(C2_TEXT)


def test_groupoid_block_derives_the_sandwich():
    config = load_config(instance_path('groupoid-derived'))
    assert config.sandwich == (('e', 'o'), ('o', 'a'))
    assert config.groupoid.vertices == 2


def test_conflicting_sandwich_and_groupoid():
    config = load_config(instance_path('groupoid-derived'))
    bad = replace(config, sandwich=(('e', 'o'), ('o', 'e')))
    with pytest.raises(ValidationError):
        parse_config(emit_config(bad))


def test_table_group(klein_table):
    config = load_config(instance_path('klein-table'))
    assert config.group_kind == 'table'
    assert config.group_elements == ('e', 'x', 'y', 'z')
    assert klein_table.group.order == 4


# === Validation ===

@pytest.mark.parametrize('sandwich, error', [
    ('e e\no o', EmptyRow),
    ('e o\ne o', EmptyColumn),
    ('e\ne', BadShape),
    ('e b\ne e', UnknownGroupElement),
])
def test_sandwich_validation(sandwich, error):
    text = f"group = cyclic 2\ni_size = 2\nlambda_size = 2\nsandwich:\n{sandwich}\nend\n"
    with pytest.raises(error):
        parse_config(text)


def test_unknown_element_names_its_position():
    with pytest.raises(UnknownGroupElement) as info:
        parse_config(C2_TEXT.replace('a e', 'e b'))
    assert 'row 2, column 2' in str(info.value)


@pytest.mark.parametrize('text, line', [
    (C2_TEXT + 'colour = red\n', 7),
    (C2_TEXT + 'name = again\n', 7),
    (C2_TEXT.replace('end\n', ''), 5),
    (C2_TEXT + 'max_degree = three\n', 7),
    (C2_TEXT.replace('group = cyclic 2', 'group = dihedral 4'), 2),
    (C2_TEXT + 'sandwich:\ne\nend\n', 7),
    (C2_TEXT + 'just words\n', 7),
])
def test_syntax_errors_carry_line_numbers(text, line):
    with pytest.raises(ConfigSyntaxError) as info:
        parse_config(text)
    assert info.value.line == line


def test_missing_group_and_sandwich():
    with pytest.raises(ConfigSyntaxError):
        parse_config('name = x\nsandwich:\ne\nend\n')
    with pytest.raises(ConfigSyntaxError):
        parse_config('group = cyclic 1\n')


def test_bad_json():
    with pytest.raises(ConfigSyntaxError):
        parse_config('{"name": "x",')
    with pytest.raises(ConfigSyntaxError):
        parse_config('{"name": "x", "group": {"kind": "dihedral"}}')


@pytest.mark.parametrize('body, fragment', [
    ('{"group": {"kind": "cyclic", "order": "two"}, "sandwich": [["e"]]}', 'two'),
    ('{"group": "cyclic", "sandwich": [["e"]]}', "'group' must be an object"),
    ('{"group": {"kind": "cyclic", "order": 2}, "groupoid": [1, 2]}', "'groupoid' must be an object"),
    ('{"group": {"kind": "cyclic", "order": 2}, '
     '"groupoid": {"vertices": 1, "beta": [1], "s": ["e"], "t": ["e"]}}', "'alpha'"),
    ('{"group": {"kind": "cyclic", "order": 2}, "sandwich": [["e"]], "max_degree": "x"}', "'x'"),
    ('{"group": {"kind": "cyclic", "order": 2}, "sandwich": 5}', 'malformed'),
])
def test_malformed_json_fields(body, fragment):
    with pytest.raises(ConfigSyntaxError) as info:
        parse_config(body)
    assert info.value.line == 1
    assert fragment in str(info.value)
