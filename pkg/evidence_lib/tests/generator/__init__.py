"""
Tests for generator modules.
"""
