"""
Tests for parser modules.
"""
