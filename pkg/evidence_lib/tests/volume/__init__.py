"""
Tests for volume modules.
"""
