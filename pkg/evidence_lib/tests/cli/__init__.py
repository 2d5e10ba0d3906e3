"""
Tests for cli modules.
"""
