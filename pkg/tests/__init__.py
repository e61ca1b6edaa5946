"""Test suite for torarr"""

__all__ = []
