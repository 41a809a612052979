"""
Config Parser - Instances

Reads an instance file (key = value lines with sandwich/table/groupoid
blocks, or the JSON equivalent), validates it against its group, and
builds the Rees semigroup. The grammar lives in doc/config-format.md.
"""

import json
import logging
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Tuple

from algebra import GroupTable, cyclic_group, group_from_table, klein_four_group, symmetric_group_3
from config import CHAIN_DIM_CAP, MAX_DEGREE
from rees import ReesSemigroup, groupoid_sandwich, rees_new
from shared.errors import (
    BadShape, ConfigSyntaxError, EmptyColumn, EmptyRow, UnknownGroupElement, ValidationError,
)

logger = logging.getLogger(__name__)

ZERO_TOKEN = 'o'
GROUP_KINDS = ('cyclic', 'symmetric3', 'klein4', 'table')
BLOCKS = ('sandwich', 'table', 'groupoid')
SCALAR_KEYS = ('name', 'group', 'elements', 'i_size', 'lambda_size', 'max_degree', 'chain_dim_cap', 'force')
GROUPOID_KEYS = ('vertices', 'alpha', 'beta', 's', 't')


@dataclass(frozen=True)
class GroupoidSpec:
    """Connected-groupoid data; alpha and beta are 1-based vertices, s and t element names."""

    vertices: int
    alpha: Tuple[int, ...]
    beta: Tuple[int, ...]
    s: Tuple[str, ...]
    t: Tuple[str, ...]


@dataclass(frozen=True)
class InstanceConfig:
    """
    One instance (I, Lambda, G, P) with run settings.

    Attributes:
        name: Instance name
        group_kind: cyclic | symmetric3 | klein4 | table
        group_order: n for cyclic groups
        group_elements: Element names for table groups
        group_table: Rows of element names for table groups
        i_size: |I|
        lambda_size: |Lambda|
        sandwich: Lambda rows of I entries, "o" or an element name
        groupoid: Groupoid data the sandwich was derived from, if any
        max_degree: Top degree of every complex
        chain_dim_cap: Chain-space guard
        force: Override the size guards
    """

    name: str
    group_kind: str
    i_size: int
    lambda_size: int
    sandwich: Tuple[Tuple[str, ...], ...]
    group_order: int = 0
    group_elements: Tuple[str, ...] = ()
    group_table: Tuple[Tuple[str, ...], ...] = ()
    groupoid: Optional[GroupoidSpec] = None
    max_degree: int = MAX_DEGREE
    chain_dim_cap: int = CHAIN_DIM_CAP
    force: bool = False


# === Groups ===

def build_group(config: InstanceConfig) -> GroupTable:
    kind = config.group_kind
    if kind == 'cyclic':
        return cyclic_group(config.group_order)
    if kind == 'symmetric3':
        return symmetric_group_3()
    if kind == 'klein4':
        return klein_four_group()
    names = config.group_elements
    lookup = {n: k for k, n in enumerate(names)}
    rows = []
    for r, row in enumerate(config.group_table):
        resolved = []
        for c, entry in enumerate(row):
            if entry not in lookup:
                raise UnknownGroupElement(entry, f"group table row {r + 1}, column {c + 1}")
            resolved.append(lookup[entry])
        rows.append(resolved)
    return group_from_table(rows, names=names)


def _element(group: GroupTable, token: str, where: str) -> int:
    try:
        return group.index_of(token)
    except KeyError:
        raise UnknownGroupElement(token, where) from None


def resolve_sandwich(config: InstanceConfig, group: GroupTable) -> Tuple[Tuple[Optional[int], ...], ...]:
    """
    Sandwich entries as group indices (None for o).

    Raises:
        BadShape: Wrong number of rows or columns
        UnknownGroupElement: A name not in the group, with its row and column
        EmptyRow: A lambda with only o entries
        EmptyColumn: An i with only o entries
    """
    if len(config.sandwich) != config.lambda_size:
        raise BadShape(f"sandwich has {len(config.sandwich)} rows, lambda_size is {config.lambda_size}")
    rows = []
    for lam, row in enumerate(config.sandwich):
        if len(row) != config.i_size:
            raise BadShape(f"sandwich row {lam + 1} has {len(row)} entries, i_size is {config.i_size}")
        rows.append(tuple(None if tok == ZERO_TOKEN else _element(group, tok, f"sandwich row {lam + 1}, column {i + 1}")
                          for i, tok in enumerate(row)))
    for lam, row in enumerate(rows):
        if all(p is None for p in row):
            raise EmptyRow(lam)
    for i in range(config.i_size):
        if all(row[i] is None for row in rows):
            raise EmptyColumn(i)
    return tuple(rows)


def build_semigroup(config: InstanceConfig, seed: Optional[int] = None) -> ReesSemigroup:
    """Validated Rees semigroup of a parsed config."""
    group = build_group(config)
    sandwich = resolve_sandwich(config, group)
    return rees_new(group, config.i_size, config.lambda_size, sandwich, config.name, config.force, seed)


# === Text format ===

def _int(value: str, line: int, key: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigSyntaxError(line, f"{key} must be an integer, got {value!r}") from None


def _bool(value: str, line: int, key: str) -> bool:
    lowered = value.lower()
    if lowered in ('true', 'yes', '1'):
        return True
    if lowered in ('false', 'no', '0'):
        return False
    raise ConfigSyntaxError(line, f"{key} must be true or false, got {value!r}")


def _split_key(line: str, number: int) -> Tuple[str, str]:
    if '=' not in line:
        raise ConfigSyntaxError(number, f"expected 'key = value', got {line!r}")
    key, value = line.split('=', 1)
    return key.strip(), value.strip()


def _groupoid_sandwich(spec: GroupoidSpec, group: GroupTable) -> Tuple[Tuple[str, ...], ...]:
    s = [_element(group, tok, f"groupoid s, vertex {k + 1}") for k, tok in enumerate(spec.s)]
    t = [_element(group, tok, f"groupoid t, vertex {k + 1}") for k, tok in enumerate(spec.t)]
    rows = groupoid_sandwich(spec.vertices, [v - 1 for v in spec.alpha], [v - 1 for v in spec.beta], group, s, t)
    return tuple(tuple(ZERO_TOKEN if p is None else group.name(p) for p in row) for row in rows)


def _parse_groupoid(lines: List[Tuple[int, str]]) -> GroupoidSpec:
    values: Dict[str, str] = {}
    for number, line in lines:
        key, value = _split_key(line, number)
        if key not in GROUPOID_KEYS:
            raise ConfigSyntaxError(number, f"unknown groupoid key {key!r}")
        values[key] = value
    missing = [k for k in GROUPOID_KEYS if k not in values]
    if missing:
        raise ConfigSyntaxError(lines[-1][0] if lines else 0, f"groupoid block lacks {', '.join(missing)}")
    first = lines[0][0]
    try:
        return GroupoidSpec(int(values['vertices']),
                            tuple(int(v) for v in values['alpha'].split()),
                            tuple(int(v) for v in values['beta'].split()),
                            tuple(values['s'].split()), tuple(values['t'].split()))
    except ValueError as exc:
        raise ConfigSyntaxError(first, f"groupoid vertices must be integers: {exc}") from None


def parse_config(text: str) -> InstanceConfig:
    """
    Parse and validate an instance file.

    JSON is accepted when the text starts with '{'.

    Raises:
        ConfigSyntaxError: With the offending line number
        UnknownGroupElement: A sandwich or table entry outside the group
        EmptyRow / EmptyColumn / BadShape: Sandwich-condition violations
    """
    if text.lstrip().startswith('{'):
        config = from_json(text)
    else:
        config = _parse_text(text)
    group = build_group(config)
    if config.groupoid is not None:
        derived = _groupoid_sandwich(config.groupoid, group)
        if config.sandwich and config.sandwich != derived:
            raise ValidationError(f"{config.name}: sandwich block disagrees with the groupoid block")
        config = replace(config, sandwich=derived, i_size=len(config.groupoid.alpha),
                          lambda_size=len(config.groupoid.beta))
    resolve_sandwich(config, group)
    logger.debug(f"Parsed instance {config.name}: |I|={config.i_size}, |Lambda|={config.lambda_size}, "
                 f"group {config.group_kind}")
    return config


def _parse_text(text: str) -> InstanceConfig:
    scalars: Dict[str, Tuple[int, str]] = {}
    blocks: Dict[str, List[Tuple[int, str]]] = {}
    current: Optional[str] = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if current is not None:
            if line == 'end':
                current = None
            else:
                blocks[current].append((number, line))
            continue
        if line.endswith(':'):
            block = line[:-1].strip()
            if block not in BLOCKS:
                raise ConfigSyntaxError(number, f"unknown block {block!r}")
            if block in blocks:
                raise ConfigSyntaxError(number, f"duplicate block {block!r}")
            blocks[block] = []
            current = block
            continue
        key, value = _split_key(line, number)
        if key not in SCALAR_KEYS:
            raise ConfigSyntaxError(number, f"unknown key {key!r}")
        if key in scalars:
            raise ConfigSyntaxError(number, f"duplicate key {key!r}")
        scalars[key] = (number, value)
    if current is not None:
        raise ConfigSyntaxError(len(text.splitlines()), f"block {current!r} is not closed with 'end'")

    if 'group' not in scalars:
        raise ConfigSyntaxError(0, "missing key 'group'")
    number, group_value = scalars['group']
    parts = group_value.split()
    kind = parts[0] if parts else ''
    if kind not in GROUP_KINDS:
        raise ConfigSyntaxError(number, f"group must be one of {', '.join(GROUP_KINDS)}, got {group_value!r}")
    order = 0
    if kind == 'cyclic':
        if len(parts) != 2:
            raise ConfigSyntaxError(number, "cyclic groups need an order, e.g. 'group = cyclic 3'")
        order = _int(parts[1], number, 'group order')

    elements: Tuple[str, ...] = ()
    table: Tuple[Tuple[str, ...], ...] = ()
    if kind == 'table':
        if 'elements' not in scalars or 'table' not in blocks:
            raise ConfigSyntaxError(number, "table groups need 'elements = ...' and a table block")
        elements = tuple(scalars['elements'][1].split())
        table = tuple(tuple(line.split()) for _, line in blocks['table'])

    groupoid = _parse_groupoid(blocks['groupoid']) if 'groupoid' in blocks else None
    sandwich = tuple(tuple(line.split()) for _, line in blocks.get('sandwich', []))
    if not sandwich and groupoid is None:
        raise ConfigSyntaxError(0, "a sandwich or groupoid block is required")

    def scalar(key: str, default, cast):
        if key not in scalars:
            return default
        line, value = scalars[key]
        return cast(value, line, key)

    return InstanceConfig(
        name=scalars.get('name', (0, 'S'))[1],
        group_kind=kind,
        i_size=scalar('i_size', len(sandwich[0]) if sandwich else 0, _int),
        lambda_size=scalar('lambda_size', len(sandwich), _int),
        sandwich=sandwich,
        group_order=order,
        group_elements=elements,
        group_table=table,
        groupoid=groupoid,
        max_degree=scalar('max_degree', MAX_DEGREE, _int),
        chain_dim_cap=scalar('chain_dim_cap', CHAIN_DIM_CAP, _int),
        force=scalar('force', False, _bool),
    )


def emit_config(config: InstanceConfig) -> str:
    """Text form that parses back to an equal config."""
    group = f"cyclic {config.group_order}" if config.group_kind == 'cyclic' else config.group_kind
    lines = [
        f"name = {config.name}",
        f"group = {group}",
    ]
    if config.group_kind == 'table':
        lines.append(f"elements = {' '.join(config.group_elements)}")
        lines.append('table:')
        lines.extend(' '.join(row) for row in config.group_table)
        lines.append('end')
    lines += [
        f"i_size = {config.i_size}",
        f"lambda_size = {config.lambda_size}",
        f"max_degree = {config.max_degree}",
        f"chain_dim_cap = {config.chain_dim_cap}",
        f"force = {'true' if config.force else 'false'}",
        'sandwich:',
    ]
    lines.extend(' '.join(row) for row in config.sandwich)
    lines.append('end')
    if config.groupoid is not None:
        g = config.groupoid
        lines += [
            'groupoid:',
            f"vertices = {g.vertices}",
            f"alpha = {' '.join(str(v) for v in g.alpha)}",
            f"beta = {' '.join(str(v) for v in g.beta)}",
            f"s = {' '.join(g.s)}",
            f"t = {' '.join(g.t)}",
            'end',
        ]
    return '\n'.join(lines) + '\n'


# === JSON ===

def to_json_dict(config: InstanceConfig) -> Dict[str, object]:
    group: Dict[str, object] = {'kind': config.group_kind}
    if config.group_kind == 'cyclic':
        group['order'] = config.group_order
    if config.group_kind == 'table':
        group['elements'] = list(config.group_elements)
        group['table'] = [list(row) for row in config.group_table]
    data: Dict[str, object] = {
        'name': config.name,
        'group': group,
        'i_size': config.i_size,
        'lambda_size': config.lambda_size,
        'sandwich': [list(row) for row in config.sandwich],
        'max_degree': config.max_degree,
        'chain_dim_cap': config.chain_dim_cap,
        'force': config.force,
    }
    if config.groupoid is not None:
        g = config.groupoid
        data['groupoid'] = {'vertices': g.vertices, 'alpha': list(g.alpha), 'beta': list(g.beta),
                            's': list(g.s), 't': list(g.t)}
    return data


def from_json(text: str) -> InstanceConfig:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigSyntaxError(exc.lineno, exc.msg) from None
    if not isinstance(data, dict) or 'group' not in data:
        raise ConfigSyntaxError(1, "JSON instance must be an object with a 'group' entry")
    group = data['group']
    if not isinstance(group, dict):
        raise ConfigSyntaxError(1, f"'group' must be an object, got {type(group).__name__}")
    kind = group.get('kind')
    if kind not in GROUP_KINDS:
        raise ConfigSyntaxError(1, f"group kind must be one of {', '.join(GROUP_KINDS)}, got {kind!r}")
    if 'groupoid' in data and not isinstance(data['groupoid'], dict):
        raise ConfigSyntaxError(1, f"'groupoid' must be an object, got {type(data['groupoid']).__name__}")
    try:
        groupoid = None
        if 'groupoid' in data:
            g = data['groupoid']
            groupoid = GroupoidSpec(int(g['vertices']), tuple(int(v) for v in g['alpha']),
                                    tuple(int(v) for v in g['beta']), tuple(g['s']), tuple(g['t']))
        sandwich = tuple(tuple(str(e) for e in row) for row in data.get('sandwich', []))
        return InstanceConfig(
            name=str(data.get('name', 'S')),
            group_kind=kind,
            i_size=int(data.get('i_size', len(sandwich[0]) if sandwich else 0)),
            lambda_size=int(data.get('lambda_size', len(sandwich))),
            sandwich=sandwich,
            group_order=int(group.get('order', 0)),
            group_elements=tuple(group.get('elements', ())),
            group_table=tuple(tuple(row) for row in group.get('table', ())),
            groupoid=groupoid,
            max_degree=int(data.get('max_degree', MAX_DEGREE)),
            chain_dim_cap=int(data.get('chain_dim_cap', CHAIN_DIM_CAP)),
            force=bool(data.get('force', False)),
        )
    except KeyError as exc:
        raise ConfigSyntaxError(1, f"missing JSON entry {exc.args[0]!r}") from None
    except (TypeError, ValueError) as exc:
        raise ConfigSyntaxError(1, f"malformed JSON instance: {exc}") from None


def load_config(path: str) -> InstanceConfig:
    with open(path, encoding='utf-8') as fh:
        return parse_config(fh.read())
