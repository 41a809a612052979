"""
Pooler Package - Parallel Homology

Contains:
- HomologyPooler: runs independent homology columns in a process pool
"""

from .homology_pooler import HomologyPooler

__all__ = ['HomologyPooler']
