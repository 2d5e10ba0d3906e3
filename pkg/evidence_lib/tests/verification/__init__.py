"""
Tests for verification modules.
"""
