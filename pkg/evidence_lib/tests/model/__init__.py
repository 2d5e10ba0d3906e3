"""
Tests for model modules.
"""
