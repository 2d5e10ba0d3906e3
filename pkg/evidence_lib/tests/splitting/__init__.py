"""
Tests for splitting modules.
"""
