"""
Check Report - Structure Checks

Value type shared by every structural certificate.
"""

from dataclasses import dataclass, field
from typing import Dict


CONSTRUCTIVE = 'constructive witness'
COMPUTED = 'exact computation'


@dataclass
class CheckReport:
    """
    Outcome of one check; truthy when it passed.

    Attributes:
        check_name: Which check
        instance_name: Instance or algebra it ran on
        passed: True iff every sub-assertion held exactly
        details: Named exact quantities (dims, ranks, first failure)
        label: What kind of certificate this is
    """

    check_name: str
    instance_name: str
    passed: bool
    details: Dict[str, object] = field(default_factory=dict)
    label: str = COMPUTED

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> Dict[str, object]:
        return {
            'check': self.check_name,
            'instance': self.instance_name,
            'passed': self.passed,
            'label': self.label,
            'details': dict(self.details),
        }
