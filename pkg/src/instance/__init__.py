"""
Instance Package

Contains:
- InstanceConfig, GroupoidSpec: parsed instance files
- parse_config, emit_config, load_config: text and JSON formats
- build_group, build_semigroup: validated group and Rees semigroup
"""

from .config_parser import (
    GroupoidSpec, InstanceConfig, build_group, build_semigroup, emit_config, from_json,
    load_config, parse_config, resolve_sandwich, to_json_dict,
)

__all__ = [
    'GroupoidSpec', 'InstanceConfig', 'build_group', 'build_semigroup', 'emit_config', 'from_json',
    'load_config', 'parse_config', 'resolve_sandwich', 'to_json_dict',
]
