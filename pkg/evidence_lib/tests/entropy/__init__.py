"""
Tests for entropy modules.
"""
